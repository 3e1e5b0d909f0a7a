from argparse import ArgumentParser, Namespace
from typing import Iterable, Optional, List

from primal import __app_name__, __version__
from primal.cli.command import CLICommand


def read(commands: Iterable[CLICommand], argv: Optional[List[str]] = None) -> Namespace:
    parser = ArgumentParser(prog=__app_name__, description='Submodule theory of finite rings and modules: checks, '
                                                           'claim verification and counterexample hunts')
    parser.add_argument('-v', '--version', action='version', version=f'%(prog)s {__version__}')

    sub_parsers = parser.add_subparsers(dest='command', help='Available commands')

    for c in commands:
        c.add(sub_parsers)

    return parser.parse_args(argv)
