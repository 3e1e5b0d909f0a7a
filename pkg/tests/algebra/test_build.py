from unittest import TestCase

from primal.algebra.build import Builder
from primal.algebra.module import TAG_IDEMPOTENT, free_module
from primal.algebra.ring import make_cyclic_ring, make_product_ring
from primal.common.errors import ConfigError
from tests.fixtures import z, u2


class BuilderRingTest(TestCase):

    def test__must_build_a_cyclic_ring(self):
        r = Builder().ring({'kind': 'cyclic', 'n': 4})
        self.assertEqual(make_cyclic_ring(4).digest, r.digest)

    def test__must_build_nested_products(self):
        r = Builder().ring({'kind': 'product', 'left': {'kind': 'cyclic', 'n': 2}, 'right': {'kind': 'cyclic', 'n': 3}})
        self.assertEqual(make_product_ring(z(2), z(3)).digest, r.digest)

    def test__must_build_a_quotient_by_the_generated_ideal(self):
        r = Builder().ring({'kind': 'quotient', 'ring': {'kind': 'cyclic', 'n': 12}, 'generators': [4]})
        self.assertEqual(4, r.order)

    def test__must_build_from_tables(self):
        r = Builder().ring({'kind': 'tables', 'add': [[0, 1], [1, 0]], 'mul': [[0, 0], [0, 1]], 'label': 'F2'})
        self.assertEqual(z(2).digest, r.digest)
        self.assertEqual('F2', r.label)

    def test__must_share_equal_trees(self):
        builder = Builder()
        self.assertIs(builder.ring({'kind': 'cyclic', 'n': 5}), builder.ring({'n': 5, 'kind': 'cyclic'}))

    def test__must_reject_unknown_kinds(self):
        with self.assertRaises(ConfigError) as ctx:
            Builder().ring({'kind': 'field', 'n': 4})

        self.assertEqual('$.ring.kind', ctx.exception.location)

    def test__must_reject_booleans_as_integers(self):
        with self.assertRaises(ConfigError) as ctx:
            Builder().ring({'kind': 'cyclic', 'n': True})

        self.assertEqual('$.ring.n', ctx.exception.location)

    def test__must_locate_errors_inside_nested_trees(self):
        with self.assertRaises(ConfigError) as ctx:
            Builder().ring({'kind': 'product', 'left': {'kind': 'cyclic', 'n': 2}, 'right': {'kind': 'matrix', 'p': 4, 'k': 2}})

        self.assertEqual('$.ring.right', ctx.exception.location)
        self.assertIn('not a prime', ctx.exception.message)

    def test__must_report_violated_axioms_of_tables(self):
        with self.assertRaises(ConfigError) as ctx:
            Builder().ring({'kind': 'tables', 'add': [[0, 1], [1, 0]], 'mul': [[1, 1], [1, 1]]})

        self.assertEqual('$.ring', ctx.exception.location)
        self.assertIn('no-unit', ctx.exception.message)


class BuilderModuleTest(TestCase):

    def test__must_build_a_free_module(self):
        m = Builder().module({'kind': 'free', 'ring': {'kind': 'cyclic', 'n': 2}, 'rank': 2})
        self.assertEqual(free_module(z(2), 2).digest, m.digest)

    def test__must_build_a_presentation(self):
        m = Builder().module({'kind': 'presentation', 'ring': {'kind': 'cyclic', 'n': 4}, 'rank': 1, 'relations': [2]})
        self.assertEqual(2, m.order)

    def test__must_build_an_idempotent_image_from_a_matrix(self):
        m = Builder().module({'kind': 'idempotent', 'module': {'kind': 'free', 'ring': {'kind': 'cyclic', 'n': 2},
                                                                'rank': 2},
                              'matrix': [[1, 0], [0, 0]]})
        self.assertEqual(2, m.order)
        self.assertIn(TAG_IDEMPOTENT, m.tags)

    def test__must_rebuild_every_recipe(self):
        base = free_module(u2(), 1)
        quotient = Builder().module({'kind': 'quotient', 'module': base.recipe, 'generators': [2]})
        rebuilt = Builder().module(quotient.recipe)
        self.assertEqual(quotient.digest, rebuilt.digest)

    def test__must_reject_a_missing_ring(self):
        with self.assertRaises(ConfigError) as ctx:
            Builder().module({'kind': 'regular'})

        self.assertEqual('$.module.ring', ctx.exception.location)

    def test_submodule__must_reject_out_of_range_generators(self):
        builder = Builder()
        m = builder.module({'kind': 'regular', 'ring': {'kind': 'cyclic', 'n': 4}})

        with self.assertRaises(ConfigError) as ctx:
            builder.submodule(m, [1, 7], '$.submodule')

        self.assertEqual('$.submodule[1]', ctx.exception.location)

    def test_instance_parts__must_generate_the_submodule(self):
        descriptor = {'module': {'kind': 'regular', 'ring': {'kind': 'cyclic', 'n': 4}}, 'submodule': [2]}
        module, submodule = Builder().instance_parts(descriptor)
        self.assertEqual([0, 2], submodule.members.to_list())
        self.assertIsNone(Builder().instance_parts({**descriptor, 'submodule': None})[1])
