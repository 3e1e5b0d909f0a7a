import asyncio
from abc import ABC, abstractmethod
from argparse import Namespace
from logging import Logger
from typing import Optional

from primal.cli.ingest import RunConfig, read_run_config
from primal.common.config import EngineConfig, read_engine_config
from primal.common.errors import ConfigError, AlgebraError
from primal.common.model_util import FileModelFiller

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


class CLICommand(ABC):

    @abstractmethod
    def __init__(self, logger: Logger):
        self._log = logger

    @abstractmethod
    def add(self, commands: object):
        pass

    @abstractmethod
    def get_command(self) -> str:
        pass

    @abstractmethod
    async def execute(self, args: Namespace, config: RunConfig) -> int:
        pass

    def add_common_arguments(self, cmd: object, config_required: bool):
        cmd.add_argument('config', nargs=None if config_required else '?', type=str,
                         help='Run configuration file (JSON)')
        cmd.add_argument('--workers', type=int, default=None, help='Worker processes (default: engine configuration)')
        cmd.add_argument('--verbose', action='store_true', help='Debug logging and detailed reports')

    async def _read_config(self, args: Namespace) -> RunConfig:
        filler = FileModelFiller(self._log)
        EngineConfig.use(await read_engine_config(filler, self._log))
        path: Optional[str] = getattr(args, 'config', None)
        return await read_run_config(path, filler, self._log) if path else RunConfig()

    def workers(self, args: Namespace, config: RunConfig) -> int:
        for value in (getattr(args, 'workers', None), config.workers):
            if value is not None and value > 0:
                return value

        return EngineConfig.instance().workers

    async def run_async(self, args: Namespace) -> int:
        try:
            config = await self._read_config(args)
        except ConfigError as e:
            self._log.error(f'Invalid configuration: {e}')
            return EXIT_INPUT

        try:
            return await self.execute(args, config)
        except ConfigError as e:
            self._log.error(f'Invalid configuration: {e}')
            return EXIT_INPUT
        except AlgebraError as e:
            self._log.error(f'{e.__class__.__name__}: {e.message}'
                            f"{f' (witness: {e.witness})' if e.witness is not None else ''}")
            return EXIT_FAILURE

    def run(self, args: Namespace) -> int:
        return asyncio.run(self.run_async(args))
