import os
from logging import Logger
from pathlib import Path
from typing import Optional, Tuple, Dict

import aiofiles

from primal import __app_name__
from primal.common.model import FileModel
from primal.common.model_util import FileModelFiller

ENV_PREFIX = 'PRIMAL_'


def get_root_engine_config_path() -> str:
    return f'/etc/{__app_name__}/engine.conf'


def get_user_engine_config_path() -> str:
    return f'{Path.home()}/.config/{__app_name__}/engine.conf'


def get_engine_config_path(logger: Logger) -> Optional[str]:
    for file_path in (get_user_engine_config_path(), get_root_engine_config_path()):
        if os.path.isfile(file_path):
            logger.debug(f"Engine configuration file '{file_path}' found")
            return file_path

    logger.debug("No engine configuration file found")


def read_env_int(var_name: str) -> Optional[int]:
    try:
        value = os.getenv(var_name)
        return int(value) if value is not None else None
    except ValueError:
        return None


def read_env_bool(var_name: str) -> Optional[bool]:
    value = os.getenv(var_name)

    if value is not None:
        value = value.strip().lower()

        if value in ('1', 'true'):
            return True
        elif value in ('0', 'false'):
            return False


class EngineConfig(FileModel):
    """
    Size bounds of the engine. Arithmetic bounds limit table construction; lattice bounds limit the
    exhaustive enumeration of ideals and submodules.
    """

    FILE_MAPPING = {'ring.order.max': ('ring_order_max', int, None),
                    'ring.lattice.max': ('ring_lattice_max', int, None),
                    'module.order.max': ('module_order_max', int, None),
                    'module.lattice.max': ('module_lattice_max', int, None),
                    'claims.quotient.max': ('quotient_claim_max', int, None),
                    'workers': ('workers', int, None)}

    DEFAULTS = {'ring_order_max': 256,
                'ring_lattice_max': 64,
                'module_order_max': 4096,
                'module_lattice_max': 256,
                'quotient_claim_max': 64,
                'workers': 1}

    ENV_VARS = {'ring_order_max': 'RING_ORDER_MAX',
                'ring_lattice_max': 'RING_LATTICE_MAX',
                'module_order_max': 'MODULE_ORDER_MAX',
                'module_lattice_max': 'MODULE_LATTICE_MAX',
                'quotient_claim_max': 'CLAIMS_QUOTIENT_MAX',
                'workers': 'WORKERS'}

    __instance: Optional["EngineConfig"] = None

    def __init__(self, ring_order_max: Optional[int] = None, ring_lattice_max: Optional[int] = None,
                 module_order_max: Optional[int] = None, module_lattice_max: Optional[int] = None,
                 quotient_claim_max: Optional[int] = None, workers: Optional[int] = None):
        self.ring_order_max = ring_order_max
        self.ring_lattice_max = ring_lattice_max
        self.module_order_max = module_order_max
        self.module_lattice_max = module_lattice_max
        self.quotient_claim_max = quotient_claim_max
        self.workers = workers

    def get_file_mapping(self) -> Dict[str, Tuple[str, type, Optional[object]]]:
        return self.FILE_MAPPING

    def get_file_root_node_name(self) -> Optional[str]:
        pass

    def is_valid(self) -> bool:
        return all(self.is_property_valid(p) for p in self.DEFAULTS)

    def is_property_valid(self, prop: str) -> bool:
        value = getattr(self, prop)
        return isinstance(value, int) and value > 0

    def setup_valid_properties(self):
        for prop, default in self.DEFAULTS.items():
            if not self.is_property_valid(prop):
                env_value = read_env_int(f'{ENV_PREFIX}{self.ENV_VARS[prop]}')
                setattr(self, prop, env_value if env_value is not None and env_value > 0 else default)

    def apply_env_overrides(self):
        for prop, var in self.ENV_VARS.items():
            env_value = read_env_int(f'{ENV_PREFIX}{var}')

            if env_value is not None and env_value > 0:
                setattr(self, prop, env_value)

    @classmethod
    def empty(cls) -> "EngineConfig":
        return cls()

    @classmethod
    def default(cls) -> "EngineConfig":
        instance = cls.empty()
        instance.setup_valid_properties()
        return instance

    @classmethod
    def instance(cls) -> "EngineConfig":
        """
        Process-wide bounds consulted by the algebra layer.
        """
        if cls.__instance is None:
            cls.__instance = cls.default()

        return cls.__instance

    @classmethod
    def use(cls, config: Optional["EngineConfig"]):
        cls.__instance = config


class EngineConfigReader:

    def __init__(self, filler: FileModelFiller, logger: Logger):
        self._filler = filler
        self._log = logger

    async def read_valid(self, file_path: Optional[str]) -> EngineConfig:
        instance = EngineConfig.empty()

        if file_path:
            try:
                async with aiofiles.open(file_path) as f:
                    config_str = (await f.read()).strip()

                self._filler.fill(instance, config_str)
            except FileNotFoundError:
                self._log.warning(f"Engine configuration file '{file_path}' does not exist. Using default settings.")

        instance.apply_env_overrides()

        if not instance.is_valid():
            instance.setup_valid_properties()

        return instance


async def read_engine_config(filler: FileModelFiller, logger: Logger) -> EngineConfig:
    return await EngineConfigReader(filler, logger).read_valid(get_engine_config_path(logger))
