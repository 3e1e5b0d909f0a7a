import sys
from argparse import Namespace
from io import StringIO
from logging import Logger
from typing import List, Tuple

from primal.algebra.module import Submodule
from primal.algebra.submodule import enumerate_submodules, hasse_covers, generator_certificate
from primal.cli.command import CLICommand, EXIT_OK, EXIT_INPUT
from primal.cli.ingest import RunConfig
from primal.common.errors import SizeLimitError
from primal.suite.report import header_line, to_record, write_lines, write_text


def lattice_text(subs: List[Submodule], covers: List[Tuple[int, int]]) -> str:
    out = StringIO()
    out.write(f'nodes: {len(subs)}\n')

    for idx, n in enumerate(subs):
        out.write(f'  [{idx}] {n.members} generated by {generator_certificate(n)}\n')

    out.write(f'covers: {len(covers)}\n')

    for low, high in covers:
        out.write(f'  [{low}] < [{high}]\n')

    out.seek(0)
    return out.read()


class Lattice(CLICommand):

    CMD = 'lattice'

    def __init__(self, logger: Logger):
        super(Lattice, self).__init__(logger)

    def add(self, commands: object):
        cmd = commands.add_parser(self.CMD, help='Lists every submodule with a generating set and the Hasse diagram '
                                                 'of the submodule lattice')
        self.add_common_arguments(cmd, config_required=True)
        cmd.add_argument('--out', type=str, help='Writes the lattice as JSON lines to this file')

    def get_command(self) -> str:
        return self.CMD

    async def execute(self, args: Namespace, config: RunConfig) -> int:
        m = config.build_instance().module

        try:
            subs = enumerate_submodules(m)
        except SizeLimitError as e:
            self._log.error(f'The lattice of {m.label} is too large: {e.message}')
            return EXIT_INPUT

        covers = hasse_covers(subs)
        text = header_line(self.CMD) + f'module {m.label} (order {m.order})\n' + lattice_text(subs, covers)
        sys.stdout.write(text)

        if config.report:
            await write_text(config.report, text)

        out = args.out if args.out else config.records
        if out:
            records = [*({'node': idx, 'members': n.members, 'generators': generator_certificate(n)}
                         for idx, n in enumerate(subs)),
                       *({'cover': [low, high]} for low, high in covers)]
            await write_lines(out, (to_record(r) for r in records))

        return EXIT_OK
