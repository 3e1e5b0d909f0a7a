import json
from typing import Any, Dict, List, Optional, Tuple

from primal.algebra.ideal import ideal_generated
from primal.algebra.module import Module, Submodule, regular_module, free_module, column_module, quotient_module, \
    validate_module, idempotent_image, free_endomorphism, validate_hom
from primal.algebra.ring import Ring, make_cyclic_ring, make_matrix_ring, make_product_ring, make_quotient_ring, \
    validate_ring
from primal.algebra.submodule import submodule_generated
from primal.common.errors import ConfigError, AlgebraError

RING_KINDS = ('cyclic', 'matrix', 'triangular', 'product', 'quotient', 'tables')
MODULE_KINDS = ('regular', 'free', 'column', 'quotient', 'tables', 'presentation', 'idempotent')


def _node(tree: Any, location: str) -> Dict[str, Any]:
    if not isinstance(tree, dict):
        raise ConfigError(location, 'expected an object')

    return tree


def _kind(tree: Dict[str, Any], location: str, kinds: tuple) -> str:
    kind = tree.get('kind')

    if kind not in kinds:
        raise ConfigError(f'{location}.kind', f"expected one of {', '.join(kinds)} (got {kind!r})")

    return kind


def _int(tree: Dict[str, Any], key: str, location: str, minimum: int = 0) -> int:
    value = tree.get(key)

    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f'{location}.{key}', f'expected an integer (got {value!r})')

    if value < minimum:
        raise ConfigError(f'{location}.{key}', f'expected an integer >= {minimum} (got {value})')

    return value


def _int_list(tree: Dict[str, Any], key: str, location: str) -> List[int]:
    value = tree.get(key, [])

    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in value):
        raise ConfigError(f'{location}.{key}', 'expected a list of element indices')

    return value


def _matrix(tree: Dict[str, Any], key: str, location: str) -> List[List[int]]:
    value = tree.get(key)

    if not isinstance(value, list) or not value or \
            any(not isinstance(row, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in row) for row in value):
        raise ConfigError(f'{location}.{key}', 'expected a matrix given as a list of integer rows')

    return value


def _check_indices(values: List[int], order: int, location: str):
    for idx, v in enumerate(values):
        if v < 0 or v >= order:
            raise ConfigError(f'{location}[{idx}]', f'element {v} out of range [0, {order})')


class Builder:
    """
    Rebuilds rings, modules and instances from construction trees (the recipes every constructor records).
    Equal trees share the built object.
    """

    def __init__(self):
        self._rings: Dict[str, Ring] = {}
        self._modules: Dict[str, Module] = {}

    def ring(self, tree: Any, location: str = '$.ring') -> Ring:
        node = _node(tree, location)
        key = json.dumps(node, sort_keys=True)

        if key not in self._rings:
            try:
                self._rings[key] = self._build_ring(node, location)
            except AlgebraError as e:
                raise ConfigError(location, e.message) from e

        return self._rings[key]

    def _build_ring(self, node: Dict[str, Any], location: str) -> Ring:
        kind = _kind(node, location, RING_KINDS)

        if kind == 'cyclic':
            return make_cyclic_ring(_int(node, 'n', location, 1))
        elif kind in ('matrix', 'triangular'):
            return make_matrix_ring(_int(node, 'p', location, 2), _int(node, 'k', location, 1), kind == 'triangular')
        elif kind == 'product':
            return make_product_ring(self.ring(node.get('left'), f'{location}.left'),
                                     self.ring(node.get('right'), f'{location}.right'))
        elif kind == 'quotient':
            base = self.ring(node.get('ring'), f'{location}.ring')
            generators = _int_list(node, 'generators', location)
            _check_indices(generators, base.order, f'{location}.generators')
            return make_quotient_ring(base, ideal_generated(base, generators))[0]

        return validate_ring(_matrix(node, 'add', location), _matrix(node, 'mul', location),
                             label=str(node.get('label', 'tables')))

    def module(self, tree: Any, location: str = '$.module') -> Module:
        node = _node(tree, location)
        key = json.dumps(node, sort_keys=True)

        if key not in self._modules:
            try:
                self._modules[key] = self._build_module(node, location)
            except AlgebraError as e:
                raise ConfigError(location, e.message) from e

        return self._modules[key]

    def _build_module(self, node: Dict[str, Any], location: str) -> Module:
        kind = _kind(node, location, MODULE_KINDS)

        if kind == 'regular':
            return regular_module(self.ring(node.get('ring'), f'{location}.ring'))
        elif kind == 'free':
            return free_module(self.ring(node.get('ring'), f'{location}.ring'), _int(node, 'rank', location, 1))
        elif kind == 'column':
            return column_module(_int(node, 'p', location, 2), _int(node, 'k', location, 1))
        elif kind == 'quotient':
            base = self.module(node.get('module'), f'{location}.module')
            return quotient_module(base, self.submodule(base, node.get('generators', []), f'{location}.generators'))[0]
        elif kind == 'presentation':
            base = free_module(self.ring(node.get('ring'), f'{location}.ring'), _int(node, 'rank', location, 1))
            return quotient_module(base, self.submodule(base, node.get('relations', []), f'{location}.relations'))[0]
        elif kind == 'idempotent':
            base = self.module(node.get('module'), f'{location}.module')

            if 'matrix' in node:
                endomorphism = free_endomorphism(base, _matrix(node, 'matrix', location))
            else:
                endomorphism = validate_hom(base, base, _int_list(node, 'map', location))

            return idempotent_image(base, endomorphism)

        ring = self.ring(node.get('ring'), f'{location}.ring')
        return validate_module(ring, _matrix(node, 'add', location), _matrix(node, 'act', location),
                               label=str(node.get('label', 'tables')))

    def submodule(self, m: Module, generators: Any, location: str) -> Submodule:
        if not isinstance(generators, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in generators):
            raise ConfigError(location, 'expected a list of element indices')

        _check_indices(generators, m.order, location)
        return submodule_generated(m, generators)

    def instance_parts(self, descriptor: Dict[str, Any]) -> Tuple[Module, Optional[Submodule]]:
        module = self.module(descriptor.get('module'), '$.module')
        generators = descriptor.get('submodule')
        submodule = self.submodule(module, generators, '$.submodule') if generators is not None else None
        return module, submodule
