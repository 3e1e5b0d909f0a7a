import sys
from typing import Optional, List

from primal import __app_name__
from primal.cli import args
from primal.cli.commands import map_commands
from primal.common.log import new_logger, get_log_level, is_log_enabled, set_debug


def main(argv: Optional[List[str]] = None) -> int:
    logger = new_logger(__app_name__, enabled=is_log_enabled(), level=get_log_level())
    cmds = map_commands(logger)
    current_args = args.read(cmds.values(), argv)

    if getattr(current_args, 'verbose', False):
        set_debug(logger)

    selected_cmd = cmds.get(current_args.command)
    if selected_cmd:
        return selected_cmd.run(current_args)

    logger.error("No command to execute")
    return 1


def run():
    code = main(sys.argv[1:])

    if code:
        exit(code)


if __name__ == '__main__':
    run()
