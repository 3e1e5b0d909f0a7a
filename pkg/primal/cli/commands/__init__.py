from logging import Logger
from typing import Dict

from primal.cli.command import CLICommand
from primal.cli.commands.check import *
from primal.cli.commands.hunt import *
from primal.cli.commands.lattice import *
from primal.cli.commands.verify import *


def map_commands(logger: Logger) -> Dict[str, CLICommand]:
    res = {}

    for c in CLICommand.__subclasses__():
        instance = c(logger)
        res[instance.get_command()] = instance

    return res
