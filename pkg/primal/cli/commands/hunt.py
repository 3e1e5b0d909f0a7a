import sys
from argparse import Namespace
from io import StringIO
from logging import Logger

from primal.cli.command import CLICommand, EXIT_OK
from primal.cli.ingest import RunConfig
from primal.hunter.corpus import generate_corpus
from primal.hunter.hunt import hunt
from primal.hunter.targets import TARGETS
from primal.suite.report import header_line, to_record, write_lines, write_text


class Hunt(CLICommand):

    CMD = 'hunt'

    def __init__(self, logger: Logger):
        super(Hunt, self).__init__(logger)

    def add(self, commands: object):
        cmd = commands.add_parser(self.CMD, help='Searches the corpus for instances of the open questions and '
                                                 'related phenomena. Hits are candidates for review, not answers')
        self.add_common_arguments(cmd, config_required=False)
        cmd.add_argument('--target', type=str, choices=sorted(TARGETS), help='Target (default: every target)')
        cmd.add_argument('--budget', type=int, help='Number of instances to examine')
        cmd.add_argument('--out', type=str, help='Writes the findings as JSON lines to this file')
        cmd.add_argument('--max-ring-size', dest='max_ring_size', type=int, help='Ring order bound of the corpus')

    def get_command(self) -> str:
        return self.CMD

    async def execute(self, args: Namespace, config: RunConfig) -> int:
        target_ids = [args.target] if args.target else (config.targets if config.targets else sorted(TARGETS))
        budget = args.budget if args.budget is not None and args.budget > 0 else config.budget
        spec = None

        if config.instances or config.has_module():
            corpus = config.build_instances()
        else:
            spec = config.corpus

            if args.max_ring_size:
                spec.ring_order_max = args.max_ring_size

            spec.setup_valid_properties()
            corpus = generate_corpus(spec, self._log)

        workers = self.workers(args, config)
        out, records = StringIO(), []

        for tid in target_ids:
            findings = await hunt(TARGETS[tid], spec, budget, self._log, workers, corpus)
            records.extend(findings.records())
            out.write(f"{tid} ({findings.target.description}): {len(findings.hits)} hits among {findings.examined} "
                      f"instances examined (corpus: {findings.corpus_size}, skipped: {findings.skipped}, "
                      f"errors: {findings.errors})\n")

            for hit in findings.hits:
                out.write(f"  {hit['instance']} {hit['label']}: {to_record(hit['witness'])}\n")

        out.seek(0)
        text = header_line(self.CMD) + out.read()
        sys.stdout.write(text)

        if config.report:
            await write_text(config.report, text)

        path = args.out if args.out else config.records
        if path:
            await write_lines(path, (to_record(r) for r in records))
            self._log.info(f"Findings written to '{path}'")

        return EXIT_OK
