from unittest import TestCase, IsolatedAsyncioTestCase
from unittest.mock import patch, Mock

from primal.algebra.module import regular_module
from primal.common.config import EngineConfig
from primal.suite.claims import CLAIMS, Subset
from primal.suite.model import Instance, Verdict
from primal.suite.report import result_records
from primal.suite.runner import check_claim, check_instance, absolutely_radical_rings, run_suite
from tests.fixtures import z4_regular, v2, col, m2f2, z


class CheckClaimTest(TestCase):

    def test__must_hold_on_every_submodule(self):
        result = check_claim(CLAIMS['C2'], Instance(z4_regular()), 64)
        self.assertEqual(Verdict.HOLDS, result.verdict)
        self.assertEqual(3, result.evaluations)
        self.assertIsNone(result.witness)

    def test__existence_claim_must_be_vacuous_without_a_witness(self):
        result = check_claim(CLAIMS['C22'], Instance(z4_regular()), 64)
        self.assertEqual(Verdict.VACUOUS, result.verdict)
        self.assertEqual(1, result.evaluations)

    def test__must_hold_on_the_columns(self):
        self.assertEqual(Verdict.HOLDS, check_claim(CLAIMS['C20'], Instance(col()), 64).verdict)

    def test__must_be_vacuous_when_no_target_satisfies_the_hypothesis(self):
        inst = Instance(col())

        for cid in ('C9', 'C11'):
            result = check_claim(CLAIMS[cid], inst, 64)
            self.assertEqual(Verdict.VACUOUS, result.verdict, cid)
            self.assertEqual(0, result.evaluations, cid)

        self.assertEqual(Verdict.VACUOUS, check_claim(CLAIMS['C1'], Instance.of_ring(m2f2()), 64).verdict)

    def test__commutative_claims_must_hold_on_z4(self):
        inst = Instance(z4_regular())

        for cid in ('C1', 'C25', 'C24', 'C27', 'C28', 'C29'):
            self.assertEqual(Verdict.HOLDS, check_claim(CLAIMS[cid], inst, 64).verdict, cid)

    def test__quotient_claims_must_be_skipped_above_the_bound(self):
        result = check_claim(CLAIMS['C15'], Instance(z4_regular()), 2)
        self.assertEqual(Verdict.SKIPPED, result.verdict)
        self.assertIn('quotient claim bound (2)', result.reason)

    def test__quotient_relations_must_be_filtered_above_the_bound(self):
        result = check_claim(CLAIMS['C8'], Instance(z4_regular()), 2)
        self.assertEqual(Verdict.HOLDS, result.verdict)
        self.assertEqual(['quotient relations skipped'], result.notes)

        self.assertEqual([], check_claim(CLAIMS['C8'], Instance(z4_regular()), 64).notes)

    def test__must_read_the_default_quotient_bound_from_the_engine_config(self):
        with patch.object(EngineConfig, 'instance', return_value=EngineConfig(quotient_claim_max=2)):
            result = check_claim(CLAIMS['C15'], Instance(z4_regular()))

        self.assertEqual(Verdict.SKIPPED, result.verdict)

    def test__must_fail_with_a_reverified_witness(self):
        with patch.object(CLAIMS['C2'], 'relations', (Subset('beta(N)', 'N'),)):
            result = check_claim(CLAIMS['C2'], Instance(z4_regular()), 64)

        self.assertEqual(Verdict.FAILED, result.verdict)
        self.assertEqual(2, result.witness.element)
        self.assertEqual({'N': 1}, result.witness.params)
        self.assertTrue(result.is_failure())

    def test__must_report_an_error_when_the_witness_does_not_reverify(self):
        with patch.object(CLAIMS['C2'], 'relations', (Subset('beta(N)', 'N'),)):
            with patch('primal.suite.runner.reverify', return_value=False):
                result = check_claim(CLAIMS['C2'], Instance(z4_regular()), 64)

        self.assertEqual(Verdict.ERROR, result.verdict)
        self.assertEqual('witness does not re-verify', result.reason)
        self.assertIsNotNone(result.witness)

    def test__must_skip_when_the_lattice_is_too_large(self):
        config = EngineConfig(module_lattice_max=2)
        config.setup_valid_properties()

        with patch.object(EngineConfig, 'instance', return_value=config):
            result = check_claim(CLAIMS['C2'], Instance(z4_regular()), 64)

        self.assertEqual(Verdict.SKIPPED, result.verdict)
        self.assertIn('Submodule lattice', result.reason)

    def test__must_record_an_observation_on_the_colon_claim(self):
        result = check_claim(CLAIMS['C29'], Instance(z4_regular()), 64)
        self.assertEqual(Verdict.HOLDS, result.verdict)
        self.assertTrue(all(n.startswith('observation') for n in result.notes))


class CheckInstanceTest(TestCase):

    def test__must_return_one_result_per_claim(self):
        claims = [CLAIMS['C2'], CLAIMS['C22'], CLAIMS['C25']]
        results = check_instance(Instance(z4_regular()), claims, 64)
        self.assertEqual(['C2', 'C22', 'C25'], [r.claim_id for r in results])
        self.assertEqual([Verdict.HOLDS, Verdict.VACUOUS, Verdict.HOLDS], [r.verdict for r in results])


class AbsolutelyRadicalRingsTest(TestCase):

    def test__must_flag_every_ring_of_the_corpus(self):
        corpus = [Instance(v2(), origin='corpus'), Instance(z4_regular(), origin='corpus')]
        flags = absolutely_radical_rings(corpus)
        self.assertEqual({z(2).digest: True, z(4).digest: False}, flags)

    def test__any_module_must_disqualify_its_ring(self):
        corpus = [Instance(regular_module(z(4)), origin='corpus'), Instance(regular_module(z(4)), origin='corpus')]
        self.assertEqual({z(4).digest: False}, absolutely_radical_rings(corpus))


class RunSuiteTest(IsolatedAsyncioTestCase):

    def _corpus(self):
        return [Instance(z4_regular(), origin='corpus'), Instance(v2(), origin='corpus'), Instance(col(), origin='corpus')]

    async def test__must_sort_instances_and_tally_verdicts(self):
        report = await run_suite(self._corpus(), ['C2', 'C22'], Mock(), corpus_info={'source': 'test'})

        self.assertEqual(sorted(i.id for i in self._corpus()), [i.id for i in report.instances])
        self.assertEqual({'source': 'test', 'instances': 3}, report.corpus)
        self.assertEqual(3, report.tallies['C2'][Verdict.HOLDS.value])
        self.assertTrue(report.is_clean())
        self.assertEqual(['C22'], report.vacuous_everywhere())

    async def test__workers_must_not_change_the_results(self):
        inline = await run_suite(self._corpus(), ['C2', 'C18', 'C20'], Mock(), workers=1)
        pooled = await run_suite(self._corpus(), ['C2', 'C18', 'C20'], Mock(), workers=2)
        self.assertEqual(result_records(inline), result_records(pooled))

    async def test__must_flag_absolutely_radical_rings_for_the_radical_claim(self):
        report = await run_suite(self._corpus(), ['C18'], Mock())
        flags = {i.ring.digest: i.corpus_flags['absolutely_radical'] for i in report.instances}
        self.assertEqual(3, len(flags))
        self.assertTrue(flags[z(2).digest])

    async def test__must_collect_failures(self):
        with patch.object(CLAIMS['C2'], 'relations', (Subset('beta(N)', 'N'),)):
            report = await run_suite([Instance(z4_regular())], ['C2'], Mock())

        self.assertFalse(report.is_clean())
        self.assertEqual(['C2'], [f.claim_id for f in report.failures])
        self.assertEqual(1, report.totals[Verdict.FAILED.value])
