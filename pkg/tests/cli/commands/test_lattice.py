import json
import os
from tempfile import TemporaryDirectory
from unittest import TestCase
from unittest.mock import patch

from primal.cli.command import EXIT_OK, EXIT_INPUT
from primal.cli.commands.lattice import lattice_text
from primal.suite.report import strip_header
from tests import CONFIGS_DIR, RESOURCES_DIR
from tests.cli.commands import run_main


class LatticeTest(TestCase):

    def test__must_list_the_chain_of_z4(self):
        code, out = run_main(['lattice', f'{CONFIGS_DIR}/z4_regular.json'])

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('module Z_4 (regular) (order 4)\n'
                         'nodes: 3\n'
                         '  [0] {0} generated by []\n'
                         '  [1] {0,2} generated by [2]\n'
                         '  [2] {0,1,2,3} generated by [1]\n'
                         'covers: 2\n'
                         '  [0] < [1]\n'
                         '  [1] < [2]\n', strip_header(out))

    def test__must_list_the_covers_of_the_plane(self):
        code, out = run_main(['lattice', f'{CONFIGS_DIR}/v2.json'])

        self.assertEqual(EXIT_OK, code)
        self.assertIn('nodes: 5\n', out)
        self.assertIn('covers: 6\n', out)

    def test__must_handle_the_zero_module(self):
        code, out = run_main(['lattice', f'{RESOURCES_DIR}/zero_module.json'])

        self.assertEqual(EXIT_OK, code)
        self.assertIn('nodes: 1\n', out)
        self.assertIn('covers: 0\n', out)

    def test__must_write_nodes_and_covers(self):
        with TemporaryDirectory() as tmp:
            path = f'{tmp}/lattice.jsonl'
            run_main(['lattice', f'{CONFIGS_DIR}/z4_regular.json', '--out', path])

            with open(path) as f:
                records = [json.loads(line) for line in f.read().splitlines()]

        self.assertEqual({'generators': [2], 'members': [0, 2], 'node': 1}, records[1])
        self.assertEqual([{'cover': [0, 1]}, {'cover': [1, 2]}], records[3:])

    @patch.dict(os.environ, {'PRIMAL_MODULE_LATTICE_MAX': '2'})
    def test__must_reject_lattices_above_the_bound(self):
        code, out = run_main(['lattice', f'{CONFIGS_DIR}/z4_regular.json'])
        self.assertEqual(EXIT_INPUT, code)
        self.assertEqual('', out)

    def test__must_require_a_configuration(self):
        with self.assertRaises(SystemExit):
            run_main(['lattice'])

    def test_lattice_text__must_count_empty_cover_lists(self):
        self.assertEqual('nodes: 0\ncovers: 0\n', lattice_text([], []))
