import sys
from argparse import Namespace
from logging import Logger
from typing import Optional, List

from primal.cli.command import CLICommand, EXIT_OK, EXIT_FAILURE
from primal.cli.ingest import RunConfig
from primal.common.errors import ConfigError
from primal.hunter.corpus import generate_corpus
from primal.suite.claims import CLAIMS
from primal.suite.report import header_line, suite_text, result_records, write_lines, write_text
from primal.suite.runner import run_suite


def parse_filter(value: Optional[str]) -> Optional[List[str]]:
    if value:
        ids = sorted({c.strip().upper() for c in value.split(',') if c.strip()})

        for cid in ids:
            if cid not in CLAIMS:
                raise ConfigError('--filter', f"unknown claim '{cid}'")

        return ids


class Verify(CLICommand):

    CMD = 'verify'

    def __init__(self, logger: Logger):
        super(Verify, self).__init__(logger)

    def add(self, commands: object):
        cmd = commands.add_parser(self.CMD, help='Checks the claim registry on the configured instances or on a '
                                                 'generated corpus')
        self.add_common_arguments(cmd, config_required=False)
        cmd.add_argument('--filter', type=str, help='Comma-separated claim IDs (e.g. C1,C2)')
        cmd.add_argument('--out', type=str, help='Writes one JSON line per claim result to this file')
        cmd.add_argument('--max-ring-size', dest='max_ring_size', type=int, help='Ring order bound of the corpus')

    def get_command(self) -> str:
        return self.CMD

    async def execute(self, args: Namespace, config: RunConfig) -> int:
        claim_ids = parse_filter(args.filter) or config.claims

        if config.instances or config.has_module():
            corpus = config.build_instances()
            corpus_info = {'source': config.path}
        else:
            spec = config.corpus

            if args.max_ring_size:
                spec.ring_order_max = args.max_ring_size

            spec.setup_valid_properties()
            corpus = generate_corpus(spec, self._log)
            corpus_info = {'spec': spec.to_dict()}

        report = await run_suite(corpus, claim_ids, self._log, self.workers(args, config), corpus_info)
        text = header_line(self.CMD) + suite_text(report, args.verbose)
        sys.stdout.write(text)

        if config.report:
            await write_text(config.report, text)

        out = args.out if args.out else config.records
        if out:
            await write_lines(out, result_records(report, config.timings))
            self._log.info(f"Claim records written to '{out}'")

        for cid in report.vacuous_everywhere():
            self._log.warning(f'{cid} was never exercised by this corpus')

        if not report.is_clean():
            self._log.error(f'{len(report.failures)} claim results failed')
            return EXIT_FAILURE

        return EXIT_OK
