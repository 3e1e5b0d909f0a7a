from unittest import TestCase, IsolatedAsyncioTestCase
from unittest.mock import Mock

from primal.cli.ingest import parse_run_config, read_run_config, RunConfig
from primal.common.errors import ConfigError
from primal.common.model_util import FileModelFiller
from tests import RESOURCES_DIR, CONFIGS_DIR


class ParseRunConfigTest(TestCase):

    def setUp(self):
        self.filler = FileModelFiller(Mock())

    def _error(self, data) -> ConfigError:
        with self.assertRaises(ConfigError) as ctx:
            parse_run_config(data, self.filler)

        return ctx.exception

    def test__must_parse_every_section(self):
        config = parse_run_config({'ring': {'kind': 'cyclic', 'n': 4}, 'claims': ['C2'],
                                   'corpus': {'cyclic_max': 5, 'include_matrix': False},
                                   'hunt': {'targets': ['Q1'], 'budget': 10},
                                   'output': {'records': 'out.jsonl', 'report': 'out.txt'},
                                   'timings': True, 'workers': 3}, self.filler, 'test.json')

        self.assertEqual('test.json', config.path)
        self.assertEqual({'kind': 'cyclic', 'n': 4}, config.ring)
        self.assertEqual(['C2'], config.claims)
        self.assertEqual(5, config.corpus.cyclic_max)
        self.assertFalse(config.corpus.include_matrix)
        self.assertIsNone(config.corpus.ring_order_max)
        self.assertEqual(['Q1'], config.targets)
        self.assertEqual(10, config.budget)
        self.assertEqual('out.jsonl', config.records)
        self.assertEqual('out.txt', config.report)
        self.assertTrue(config.timings)
        self.assertEqual(3, config.workers)

    def test__must_reject_anything_but_an_object(self):
        self.assertEqual('$', self._error([]).location)

    def test__must_reject_unknown_properties(self):
        error = self._error({'colour': 'red'})
        self.assertEqual('$.colour', error.location)
        self.assertEqual('unknown property', error.message)

    def test__must_locate_unknown_claims(self):
        self.assertEqual('$.claims[1]', self._error({'claims': ['C1', 'C99']}).location)

    def test__corpus_must_not_take_booleans_for_integers(self):
        error = self._error({'corpus': {'cyclic_max': True}})
        self.assertEqual('$.corpus.cyclic_max', error.location)
        self.assertEqual('expected int (got True)', error.message)

    def test__corpus_must_not_take_integers_for_booleans(self):
        self.assertEqual('$.corpus.include_matrix', self._error({'corpus': {'include_matrix': 1}}).location)

    def test__corpus_must_reject_negative_bounds(self):
        self.assertEqual('$.corpus.cyclic_max', self._error({'corpus': {'cyclic_max': -1}}).location)

    def test__corpus_must_reject_unknown_properties(self):
        self.assertEqual('$.corpus.colour', self._error({'corpus': {'colour': 1}}).location)

    def test__must_locate_unknown_targets(self):
        self.assertEqual('$.hunt.targets[0]', self._error({'hunt': {'targets': ['Q9']}}).location)

    def test__budget_and_workers_must_be_positive(self):
        self.assertEqual('$.hunt.budget', self._error({'hunt': {'budget': 0}}).location)
        self.assertEqual('$.workers', self._error({'workers': False}).location)

    def test__output_paths_must_not_be_empty(self):
        self.assertEqual('$.output.report', self._error({'output': {'report': ''}}).location)

    def test__timings_must_be_a_boolean(self):
        self.assertEqual('$.timings', self._error({'timings': 'yes'}).location)

    def test__submodule_must_be_a_list(self):
        self.assertEqual('$.submodule', self._error({'submodule': 2}).location)


class RunConfigTest(TestCase):

    def test_build_instance__must_require_a_module(self):
        with self.assertRaises(ConfigError) as ctx:
            RunConfig().build_instance()

        self.assertEqual('$', ctx.exception.location)

    def test_build_instance__must_read_a_ring_as_its_regular_module(self):
        config = RunConfig()
        config.ring = {'kind': 'cyclic', 'n': 4}
        config.submodule = [2]
        inst = config.build_instance()

        self.assertIn('regular', inst.module.tags)
        self.assertEqual([0, 2], inst.submodule.members.to_list())

    def test_build_instances__must_locate_invalid_entries(self):
        config = RunConfig()
        config.instances = [{'module': {'kind': 'cyclic'}}]

        with self.assertRaises(ConfigError) as ctx:
            config.build_instances()

        self.assertEqual('$.instances[0].module.kind', ctx.exception.location)


class ReadRunConfigTest(IsolatedAsyncioTestCase):

    def setUp(self):
        self.filler = FileModelFiller(Mock())

    async def test__must_read_the_instances_and_the_module(self):
        config = await read_run_config(f'{RESOURCES_DIR}/instances.json', self.filler, Mock())
        instances = config.build_instances()

        self.assertEqual(['C2', 'C12'], config.claims)
        self.assertEqual(3, len(instances))
        self.assertEqual([0, 2], instances[0].submodule.members.to_list())
        self.assertIsNone(instances[1].submodule)
        self.assertEqual(4, instances[2].module.order)

    async def test__must_report_the_position_of_syntax_errors(self):
        path = f'{RESOURCES_DIR}/invalid.json'

        with self.assertRaises(ConfigError) as ctx:
            await read_run_config(path, self.filler, Mock())

        self.assertTrue(ctx.exception.location.startswith(f'{path}:'))

    async def test__must_report_missing_files(self):
        path = f'{RESOURCES_DIR}/missing.json'

        with self.assertRaises(ConfigError) as ctx:
            await read_run_config(path, self.filler, Mock())

        self.assertEqual(path, ctx.exception.location)
        self.assertEqual('file not found', ctx.exception.message)

    async def test__must_read_the_shipped_configurations(self):
        for name in ('z4_regular', 'v2', 'col', 'hunt'):
            config = await read_run_config(f'{CONFIGS_DIR}/{name}.json', self.filler, Mock())
            self.assertIsInstance(config, RunConfig, name)

        hunt = await read_run_config(f'{CONFIGS_DIR}/hunt.json', self.filler, Mock())
        self.assertEqual(['Q1', 'Q2', 'RF_NOT_2PRIMAL'], hunt.targets)
        self.assertEqual(2, hunt.workers)
