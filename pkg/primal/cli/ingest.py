import json
import os
from logging import Logger
from typing import Optional, List, Dict, Any

import aiofiles

from primal.algebra.build import Builder
from primal.common.errors import ConfigError
from primal.common.model_util import FileModelFiller
from primal.hunter.corpus import CorpusSpec
from primal.hunter.targets import TARGETS
from primal.suite.claims import CLAIMS
from primal.suite.model import Instance

KNOWN_KEYS = {'ring', 'module', 'submodule', 'instances', 'claims', 'corpus', 'hunt', 'output', 'timings',
              'workers'}


class RunConfig:
    """
    A parsed run configuration. Construction trees are kept as given and only built on demand.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self.ring: Optional[Dict[str, Any]] = None
        self.module: Optional[Dict[str, Any]] = None
        self.submodule: Optional[List[int]] = None
        self.instances: Optional[List[Dict[str, Any]]] = None
        self.claims: Optional[List[str]] = None
        self.corpus = CorpusSpec()
        self.targets: Optional[List[str]] = None
        self.budget: Optional[int] = None
        self.records: Optional[str] = None
        self.report: Optional[str] = None
        self.timings = False
        self.workers: Optional[int] = None

    def has_module(self) -> bool:
        return self.module is not None or self.ring is not None

    def module_tree(self) -> Dict[str, Any]:
        return self.module if self.module is not None else {'kind': 'regular', 'ring': self.ring}

    def build_instance(self, builder: Optional[Builder] = None) -> Instance:
        if not self.has_module():
            raise ConfigError('$', "expected a 'module' or a 'ring' node")

        builder = builder if builder else Builder()
        location = '$.module' if self.module is not None else '$.ring'
        module = builder.module(self.module_tree(), location)
        submodule = builder.submodule(module, self.submodule, '$.submodule') if self.submodule is not None else None
        return Instance(module, submodule)

    def build_instances(self) -> List[Instance]:
        builder = Builder()
        instances = []

        for idx, tree in enumerate(self.instances or ()):
            location = f'$.instances[{idx}]'

            if not isinstance(tree, dict):
                raise ConfigError(location, 'expected an object')

            module = builder.module(tree.get('module'), f'{location}.module')
            generators = tree.get('submodule')
            submodule = builder.submodule(module, generators, f'{location}.submodule') if generators is not None else None
            instances.append(Instance(module, submodule))

        if self.has_module():
            instances.append(self.build_instance(builder))

        return instances


def _str_list(value: Any, location: str, allowed: Optional[set] = None) -> List[str]:
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise ConfigError(location, 'expected a list of strings')

    if allowed is not None:
        for idx, v in enumerate(value):
            if v not in allowed:
                raise ConfigError(f'{location}[{idx}]', f"unknown value '{v}'")

    return value


def _positive(value: Any, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(location, f'expected a positive integer (got {value!r})')

    return value


def parse_run_config(data: Any, filler: FileModelFiller, path: Optional[str] = None) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError('$', 'expected an object')

    unknown = set(data).difference(KNOWN_KEYS)
    if unknown:
        raise ConfigError(f'$.{sorted(unknown)[0]}', 'unknown property')

    config = RunConfig(path)

    for key in ('ring', 'module'):
        if key in data:
            if not isinstance(data[key], dict):
                raise ConfigError(f'$.{key}', 'expected an object')

            setattr(config, key, data[key])

    if 'submodule' in data:
        if not isinstance(data['submodule'], list):
            raise ConfigError('$.submodule', 'expected a list of element indices')

        config.submodule = data['submodule']

    if 'instances' in data:
        if not isinstance(data['instances'], list):
            raise ConfigError('$.instances', 'expected a list of objects')

        config.instances = data['instances']

    if 'claims' in data:
        config.claims = _str_list(data['claims'], '$.claims', set(CLAIMS))

    if 'corpus' in data:
        if not isinstance(data['corpus'], dict):
            raise ConfigError('$.corpus', 'expected an object')

        for key, value in sorted(data['corpus'].items()):
            expected = type(CorpusSpec.DEFAULTS.get(key))
            if key in CorpusSpec.DEFAULTS and value is not None and type(value) is not expected:
                raise ConfigError(f'$.corpus.{key}', f'expected {expected.__name__} (got {value!r})')

        unknown = filler.fill_dict(config.corpus, data['corpus'])
        if unknown:
            raise ConfigError(f'$.corpus.{sorted(unknown)[0]}', 'unknown property')

        for prop in CorpusSpec.DEFAULTS:
            if getattr(config.corpus, prop) is not None and not config.corpus.is_property_valid(prop):
                raise ConfigError(f'$.corpus.{prop}', f'invalid value {getattr(config.corpus, prop)!r}')

    hunt = data.get('hunt', {})
    if not isinstance(hunt, dict):
        raise ConfigError('$.hunt', 'expected an object')

    if 'targets' in hunt:
        config.targets = _str_list(hunt['targets'], '$.hunt.targets', set(TARGETS))

    if 'budget' in hunt:
        config.budget = _positive(hunt['budget'], '$.hunt.budget')

    output = data.get('output', {})
    if not isinstance(output, dict):
        raise ConfigError('$.output', 'expected an object')

    for key in ('records', 'report'):
        if key in output:
            if not isinstance(output[key], str) or not output[key]:
                raise ConfigError(f'$.output.{key}', 'expected a file path')

            setattr(config, key, output[key])

    if 'timings' in data:
        if not isinstance(data['timings'], bool):
            raise ConfigError('$.timings', 'expected a boolean')

        config.timings = data['timings']

    if 'workers' in data:
        config.workers = _positive(data['workers'], '$.workers')

    return config


async def read_run_config(file_path: str, filler: FileModelFiller, logger: Logger) -> RunConfig:
    if not os.path.isfile(file_path):
        raise ConfigError(file_path, 'file not found')

    async with aiofiles.open(file_path) as f:
        content = await f.read()

    try:
        data = json.loads(content)
    except json.JSONDecodeError as e:
        raise ConfigError(f'{file_path}:{e.lineno}:{e.colno}', e.msg)

    logger.debug(f"Run configuration read from '{file_path}'")
    return parse_run_config(data, filler, file_path)
