from typing import Iterator
from unittest import TestCase

from primal.suite.claims import CLAIMS, REGISTRY, SETS, FACTS, OBSERVATIONS, select_claims, targets, reverify, fact, \
    Relation, Subset, Equal, Holds, When, ForEach
from primal.suite.model import Instance, Witness, Scope
from tests.fixtures import z4_regular, v2, z


def _names(relation: Relation) -> Iterator[str]:
    if isinstance(relation, (Subset, Equal)):
        yield relation.lhs
        yield relation.rhs
    elif isinstance(relation, Holds):
        yield relation.name
    elif isinstance(relation, When):
        yield from relation.premises
        yield from _names(relation.relation)
    elif isinstance(relation, ForEach):
        yield from relation.where
        for r in relation.relations:
            yield from _names(r)


class RegistryTest(TestCase):

    def test__must_number_the_claims_consecutively(self):
        self.assertEqual([f'C{i}' for i in range(1, len(REGISTRY) + 1)], [c.id for c in REGISTRY])

    def test__every_name_must_resolve(self):
        known = {*SETS, *FACTS}

        for claim in REGISTRY:
            relations = (*claim.relations, *OBSERVATIONS.get(claim.id, ()))
            names = {n.lstrip('!') for r in relations for n in _names(r)}
            names.update(f.lstrip('!') for conj in claim.hypothesis for f in conj)
            self.assertFalse(names.difference(known), claim.id)

    def test__only_the_transfer_claim_must_be_flagged_as_quotient(self):
        self.assertEqual(['C15'], [c.id for c in REGISTRY if c.quotient])


class SelectClaimsTest(TestCase):

    def test__must_return_every_claim_when_no_ids_are_given(self):
        self.assertEqual(list(REGISTRY), select_claims(None))
        self.assertEqual(list(REGISTRY), select_claims([]))

    def test__must_sort_numerically(self):
        self.assertEqual(['C2', 'C10', 'C21'], [c.id for c in select_claims(['C21', 'C10', 'C2'])])


class TargetsTest(TestCase):

    def test__module_and_ring_scopes_must_have_a_single_target(self):
        inst = Instance(z4_regular())
        self.assertEqual([{}], targets(CLAIMS['C20'], inst))
        self.assertEqual([{}], targets(CLAIMS['C27'], inst))

    def test__ideal_scope_must_enumerate_the_ideals(self):
        inst = Instance(z4_regular())
        self.assertEqual(Scope.IDEAL, CLAIMS['C1'].scope)
        self.assertEqual([{'I': 0b0001}, {'I': 0b0101}, {'I': 0b1111}], targets(CLAIMS['C1'], inst))

    def test__submodule_scope_must_enumerate_the_submodules(self):
        inst = Instance(z4_regular())
        self.assertEqual([{'N': 0b0001}, {'N': 0b0101}, {'N': 0b1111}], targets(CLAIMS['C2'], inst))

    def test__submodule_scope_must_use_the_given_submodule(self):
        m = v2()
        inst = Instance(m, m.zero_submodule())
        self.assertEqual([{'N': 1}], targets(CLAIMS['C2'], inst))


class FactTest(TestCase):

    def test__must_negate_with_an_exclamation_mark(self):
        inst = Instance(z4_regular())
        self.assertTrue(fact('commutative', inst, {}))
        self.assertFalse(fact('!commutative', inst, {}))

    def test__improper_submodules_must_not_be_prime(self):
        inst = Instance(z4_regular())
        self.assertFalse(fact('prime(N)', inst, {'N': 0b1111}))
        self.assertTrue(fact('prime(N)', inst, {'N': 0b0101}))

    def test__absolutely_radical_must_prefer_the_corpus_flag(self):
        inst = Instance.of_ring(z(2))
        self.assertTrue(fact('absolutely_radical(R)', inst, {}))

        inst.corpus_flags['absolutely_radical'] = False
        self.assertFalse(fact('absolutely_radical(R)', inst, {}))


class ReverifyTest(TestCase):

    def test__must_confirm_a_real_subset_violation(self):
        inst = Instance(z4_regular())
        witness = Witness('subset', 'beta(N)', 'N', {'N': 1}, element=2)
        self.assertTrue(reverify(witness, inst))

    def test__must_reject_an_element_that_is_not_a_counterexample(self):
        inst = Instance(z4_regular())
        witness = Witness('subset', 'beta(N)', 'N', {'N': 1}, element=0)
        self.assertFalse(reverify(witness, inst))

    def test__must_reject_a_witness_whose_premises_are_false(self):
        inst = Instance(z4_regular())
        witness = Witness('fact', 'prime(N)', None, {'N': 1}, premises=('!commutative',))
        self.assertFalse(reverify(witness, inst))

    def test__must_confirm_a_false_fact(self):
        inst = Instance(z4_regular())
        witness = Witness('fact', 'prime(N)', None, {'N': 1}, premises=('commutative',))
        self.assertTrue(reverify(witness, inst))

    def test__must_confirm_an_equality_violation_on_either_side(self):
        inst = Instance(z4_regular())
        self.assertTrue(reverify(Witness('equal', 'N', 'beta(N)', {'N': 1}, element=2), inst))
        self.assertFalse(reverify(Witness('equal', 'N', 'beta(N)', {'N': 1}, element=0), inst))


class RelationsTest(TestCase):

    def test_subset__must_report_the_first_missing_element(self):
        inst = Instance(z4_regular())
        witnesses = list(Subset('beta(N)', 'N').check(inst, {'N': 1}))
        self.assertEqual(1, len(witnesses))
        self.assertEqual(2, witnesses[0].element)
        self.assertEqual({'N': 1}, witnesses[0].params)

    def test_when__must_carry_its_premises(self):
        inst = Instance(z4_regular())
        relation = When(('commutative',), Holds('prime(N)'))
        witness = next(relation.check(inst, {'N': 1}))
        self.assertEqual(('commutative',), witness.premises)
        self.assertEqual('prime(N) is false when commutative [N=1]', witness.describe())

    def test_for_each__must_bind_the_quantified_submodule(self):
        inst = Instance(z4_regular())
        relation = ForEach('L', ('N<=L',), (Holds('!L<=N'),))
        witnesses = list(relation.check(inst, {'N': 0b0101}))
        self.assertEqual([0b0101], [w.params['L'] for w in witnesses])
