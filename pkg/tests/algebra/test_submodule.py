from unittest import TestCase

from primal.algebra.ideal import ideal_generated
from primal.algebra.module import regular_module, quotient_module, Submodule
from primal.algebra.ring import make_cyclic_ring
from primal.algebra.submodule import enumerate_submodules, hasse_covers, generator_certificate, colon, \
    submodule_generated, ideal_submodule_product, hom_preimage, hom_image, maximal_submodules, cyclic_submodule, \
    submodule_sum
from primal.algebra.subset import SubSet
from primal.common.config import EngineConfig
from primal.common.errors import EmptySetError, SizeLimitError
from primal.hunter.corpus import generate_corpus
from tests import oracles
from tests.fixtures import z4_regular, v2, col, zero_module, small_corpus_spec


class EnumerateSubmodulesTest(TestCase):

    def test__must_list_the_submodules_of_z4_by_size(self):
        self.assertEqual([[0], [0, 2], [0, 1, 2, 3]], [n.members.to_list() for n in enumerate_submodules(z4_regular())])

    def test__must_find_the_three_lines_of_the_plane(self):
        subs = enumerate_submodules(v2())
        self.assertEqual(5, len(subs))
        self.assertEqual([1, 2, 2, 2, 4], [len(n) for n in subs])

    def test__must_find_that_the_columns_are_simple(self):
        self.assertEqual([[0], [0, 1, 2, 3]], [n.members.to_list() for n in enumerate_submodules(col())])

    def test__must_equal_the_brute_force_filter_on_small_modules(self):
        for inst in generate_corpus(small_corpus_spec()):
            m = inst.module

            if m.order <= 8:
                expected = oracles.submodules(m)
                found = {frozenset(n.members.to_list()) for n in enumerate_submodules(m)}
                self.assertEqual(expected, found, m.label)

    def test__must_respect_the_configured_lattice_bound(self):
        config = EngineConfig(module_lattice_max=3)
        config.setup_valid_properties()
        EngineConfig.use(config)

        try:
            with self.assertRaises(SizeLimitError):
                enumerate_submodules(regular_module(make_cyclic_ring(4)))
        finally:
            EngineConfig.use(None)


class HasseCoversTest(TestCase):

    def test__must_link_the_plane_through_its_lines(self):
        subs = enumerate_submodules(v2())
        covers = hasse_covers(subs)
        self.assertEqual(6, len(covers))
        self.assertEqual({(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)}, set(covers))

    def test__must_have_no_edge_for_the_zero_module(self):
        subs = enumerate_submodules(zero_module())
        self.assertEqual(1, len(subs))
        self.assertEqual([], hasse_covers(subs))

    def test__must_follow_the_chain_of_z8(self):
        subs = enumerate_submodules(regular_module(make_cyclic_ring(8)))
        self.assertEqual([(0, 1), (1, 2), (2, 3)], hasse_covers(subs))


class GeneratorCertificateTest(TestCase):

    def test__must_generate_the_submodule(self):
        for m in (z4_regular(), v2(), col()):
            for n in enumerate_submodules(m):
                gens = generator_certificate(n)
                self.assertEqual(n.members, submodule_generated(m, gens).members)

    def test__must_be_greedy_on_the_smallest_missing_element(self):
        self.assertEqual([1, 2], generator_certificate(v2().full_submodule()))
        self.assertEqual([1], generator_certificate(z4_regular().full_submodule()))
        self.assertEqual([], generator_certificate(z4_regular().zero_submodule()))


class SubmoduleGeneratedTest(TestCase):

    def test__must_match_the_brute_force_closure(self):
        m = v2()
        for x in m.elements:
            self.assertEqual(oracles.generated(m, {x}), frozenset(submodule_generated(m, [x]).members.to_list()))

    def test_cyclic_submodule__must_equal_the_generated_one(self):
        m = z4_regular()
        for x in m.elements:
            self.assertEqual(submodule_generated(m, [x]), cyclic_submodule(m, x))

    def test_submodule_sum__must_join_two_lines(self):
        m = v2()
        self.assertTrue(submodule_sum(submodule_generated(m, [1]), submodule_generated(m, [2])).members.is_full())


class ColonTest(TestCase):

    def test__must_return_the_ring_elements_carrying_the_set_inside(self):
        m = z4_regular()
        p = Submodule(m, SubSet.from_indices(4, [0, 2]))
        self.assertEqual([0, 2], colon(p, [1]).to_list())
        self.assertEqual([0, 1, 2, 3], colon(p, [2]).to_list())
        self.assertEqual([0, 2], colon(p, m.full()).to_list())

    def test__must_raise_an_error_for_an_empty_set(self):
        with self.assertRaises(EmptySetError):
            colon(z4_regular().zero_submodule(), [])


class IdealSubmoduleProductTest(TestCase):

    def test__must_multiply_the_module_by_the_ideal(self):
        m = z4_regular()
        product = ideal_submodule_product(ideal_generated(m.ring, [2]), m.full_submodule())
        self.assertEqual([0, 2], product.members.to_list())


class HomTest(TestCase):

    def test_hom_preimage__must_pull_back_the_zero_submodule_to_the_kernel(self):
        m = z4_regular()
        n = Submodule(m, SubSet.from_indices(4, [0, 2]))
        quotient, projection = quotient_module(m, n)
        self.assertEqual(n, hom_preimage(projection, quotient.zero_submodule()))
        self.assertTrue(hom_image(projection, m.full_submodule()).members.is_full())


class MaximalSubmodulesTest(TestCase):

    def test__must_return_the_lines_of_the_plane(self):
        m = v2()
        self.assertEqual(3, len(maximal_submodules(m, enumerate_submodules(m))))
