import json
from tempfile import TemporaryDirectory
from unittest import TestCase

from primal.cli.command import EXIT_OK
from primal.suite.report import strip_header
from tests import RESOURCES_DIR
from tests.cli.commands import run_main


class HuntTest(TestCase):

    def test__must_hunt_the_configured_targets(self):
        code, out = run_main(['hunt', f'{RESOURCES_DIR}/tiny_hunt.json'])

        self.assertEqual(EXIT_OK, code)
        lines = strip_header(out).splitlines()
        summaries = [line for line in lines if not line.startswith(' ')]
        self.assertEqual(2, len(summaries))
        self.assertTrue(summaries[0].startswith('Q1 ('))
        self.assertTrue(summaries[1].startswith('INCLUSION3_FAIL ('))
        self.assertTrue(all('instances examined' in s for s in summaries))

    def test__arguments_must_take_precedence_over_the_configuration(self):
        code, out = run_main(['hunt', f'{RESOURCES_DIR}/tiny_hunt.json', '--target', 'Q2', '--budget', '2'])

        self.assertEqual(EXIT_OK, code)
        summaries = [line for line in strip_header(out).splitlines() if not line.startswith(' ')]
        self.assertEqual(1, len(summaries))
        self.assertIn('among 2 instances examined', summaries[0])

    def test__must_write_the_findings(self):
        with TemporaryDirectory() as tmp:
            path = f'{tmp}/findings.jsonl'
            code, _ = run_main(['hunt', f'{RESOURCES_DIR}/tiny_hunt.json', '--target', 'Q1', '--out', path])

            with open(path) as f:
                records = [json.loads(line) for line in f.read().splitlines()]

        self.assertEqual(EXIT_OK, code)
        self.assertEqual('Q1', records[0]['target'])
        self.assertEqual(5, records[0]['budget'])
        self.assertEqual(len(records) - 1, records[0]['hits'])

    def test__must_be_reproducible_across_workers(self):
        argv = ['hunt', f'{RESOURCES_DIR}/tiny_hunt.json']
        self.assertEqual(strip_header(run_main([*argv, '--workers', '1'])[1]),
                         strip_header(run_main([*argv, '--workers', '2'])[1]))

    def test__must_hunt_the_configured_module(self):
        code, out = run_main(['hunt', f'{RESOURCES_DIR}/zero_module.json', '--target', 'Q1'])
        self.assertEqual(EXIT_OK, code)
        self.assertIn('0 hits among 1 instances examined (corpus: 1, skipped: 0, errors: 0)', out)

    def test__must_reject_unknown_targets(self):
        with self.assertRaises(SystemExit):
            run_main(['hunt', '--target', 'Q9'])
