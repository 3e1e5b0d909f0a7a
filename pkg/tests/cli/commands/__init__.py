import os
from io import StringIO
from typing import List, Tuple
from unittest.mock import patch

from primal.cli.main import main
from primal.common.config import EngineConfig


def run_main(argv: List[str]) -> Tuple[int, str]:
    """
    Runs the command line without logging nor engine configuration files.
    :return: the exit code and everything written to stdout
    """
    try:
        with patch.dict(os.environ, {'PRIMAL_LOG': '0'}):
            with patch('primal.common.config.get_engine_config_path', return_value=None):
                with patch('sys.stdout', new_callable=StringIO) as stdout:
                    code = main(argv)
                    return code, stdout.getvalue()
    finally:
        EngineConfig.use(None)
