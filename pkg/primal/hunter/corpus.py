from itertools import product
from logging import Logger
from typing import Optional, Dict, Tuple, List, Iterator

from primal.algebra.ideal import enumerate_ideals
from primal.algebra.module import Module, regular_module, free_module, column_module, quotient_module, \
    free_endomorphism, idempotent_image
from primal.algebra.ring import Ring, make_cyclic_ring, make_matrix_ring, make_product_ring, make_quotient_ring
from primal.algebra.submodule import enumerate_submodules
from primal.common.config import read_env_int, read_env_bool
from primal.common.errors import SizeLimitError
from primal.common.model import FileModel
from primal.suite.model import Instance

ENV_PREFIX = 'PRIMAL_CORPUS_'
FIELDS = (2, 3)


class CorpusSpec(FileModel):
    """
    Bounds of a generated corpus. Unset properties fall back to PRIMAL_CORPUS_* environment variables, then to
    the defaults.
    """

    FILE_MAPPING = {'cyclic_max': ('cyclic_max', int, None),
                    'ring_order_max': ('ring_order_max', int, None),
                    'module_order_max': ('module_order_max', int, None),
                    'free_rank_max': ('free_rank_max', int, None),
                    'include_matrix': ('include_matrix', bool, True),
                    'include_quotients': ('include_quotients', bool, True),
                    'product_order_max': ('product_order_max', int, None),
                    'include_idempotent': ('include_idempotent', bool, True)}

    DEFAULTS = {'cyclic_max': 12,
                'ring_order_max': 16,
                'module_order_max': 256,
                'free_rank_max': 2,
                'include_matrix': True,
                'include_quotients': True,
                'product_order_max': 8,
                'include_idempotent': True}

    def __init__(self, cyclic_max: Optional[int] = None, ring_order_max: Optional[int] = None,
                 module_order_max: Optional[int] = None, free_rank_max: Optional[int] = None,
                 include_matrix: Optional[bool] = None, include_quotients: Optional[bool] = None,
                 product_order_max: Optional[int] = None, include_idempotent: Optional[bool] = None):
        self.cyclic_max = cyclic_max
        self.ring_order_max = ring_order_max
        self.module_order_max = module_order_max
        self.free_rank_max = free_rank_max
        self.include_matrix = include_matrix
        self.include_quotients = include_quotients
        self.product_order_max = product_order_max
        self.include_idempotent = include_idempotent

    def get_file_mapping(self) -> Dict[str, Tuple[str, type, Optional[object]]]:
        return self.FILE_MAPPING

    def get_file_root_node_name(self) -> Optional[str]:
        pass

    def is_property_valid(self, prop: str) -> bool:
        value = getattr(self, prop)

        if isinstance(self.DEFAULTS[prop], bool):
            return isinstance(value, bool)

        return isinstance(value, int) and not isinstance(value, bool) and value >= 0

    def is_valid(self) -> bool:
        return all(self.is_property_valid(p) for p in self.DEFAULTS)

    def setup_valid_properties(self):
        for prop, default in self.DEFAULTS.items():
            if not self.is_property_valid(prop):
                var = f'{ENV_PREFIX}{prop.upper()}'
                env_value = read_env_bool(var) if isinstance(default, bool) else read_env_int(var)
                setattr(self, prop, env_value if env_value is not None else default)

    def to_dict(self) -> dict:
        return {p: getattr(self, p) for p in self.DEFAULTS}

    @classmethod
    def default(cls) -> "CorpusSpec":
        instance = cls()
        instance.setup_valid_properties()
        return instance


def _distinct(seen: Dict[str, object], obj, digest: str) -> bool:
    if digest in seen:
        return False

    seen[digest] = obj
    return True


def generate_rings(spec: CorpusSpec, logger: Optional[Logger] = None) -> List[Ring]:
    """
    Ring catalog in a fixed order: cyclic rings, matrix and triangular rings over small prime fields, pairwise
    products and the quotients of all of them by their ideals. Table-identical rings are kept once.
    """
    seen: Dict[str, Ring] = {}
    rings: List[Ring] = []

    def _add(r: Ring):
        if r.order <= spec.ring_order_max and _distinct(seen, r, r.digest):
            rings.append(r)

    for n in range(1, min(spec.cyclic_max, spec.ring_order_max) + 1):
        _add(make_cyclic_ring(n))

    if spec.include_matrix:
        for p, triangular in product(FIELDS, (True, False)):
            entries = 3 if triangular else 4

            if p ** entries <= spec.ring_order_max:
                _add(make_matrix_ring(p, 2, triangular))

    factors = [r for r in rings if r.order > 1]
    for idx, a in enumerate(factors):
        for b in factors[idx:]:
            if a.order * b.order <= min(spec.product_order_max, spec.ring_order_max):
                _add(make_product_ring(a, b))

    if spec.include_quotients:
        for r in list(rings):
            try:
                for i in enumerate_ideals(r):
                    if i.is_proper() and len(i) > 1:
                        _add(make_quotient_ring(r, i)[0])
            except SizeLimitError as e:
                if logger:
                    logger.debug(f'No quotients of {r.label}: {e.message}')

    return rings


def _idempotents(r: Ring) -> List[int]:
    return [a for a in r.elements if r.mul(a, a) == a]


def _modules_over(r: Ring, spec: CorpusSpec, logger: Optional[Logger]) -> Iterator[Module]:
    bases = [regular_module(r)]

    for k in range(2, spec.free_rank_max + 1):
        if r.order ** k <= spec.module_order_max:
            bases.append(free_module(r, k))

    yield from bases

    if spec.include_idempotent and spec.free_rank_max >= 2 and r.order ** 2 <= spec.module_order_max:
        free = free_module(r, 2)
        units = _idempotents(r)

        for e, f in product(units, units):
            if (e, f) != (r.one, r.one) and (e, f) != (r.zero, r.zero):
                yield idempotent_image(free, free_endomorphism(free, [[e, r.zero], [r.zero, f]]))

    if spec.include_matrix and r.recipe.get('kind') == 'matrix':
        p, k = r.recipe['p'], r.recipe['k']

        if p ** k <= spec.module_order_max:
            yield column_module(p, k)

    if spec.include_quotients:
        for base in bases:
            try:
                for n in enumerate_submodules(base):
                    if n.is_proper() and not n.is_zero():
                        yield quotient_module(base, n)[0]
            except SizeLimitError as e:
                if logger:
                    logger.debug(f'No quotients of {base.label}: {e.message}')


def generate_corpus(spec: CorpusSpec, logger: Optional[Logger] = None) -> List[Instance]:
    """
    Every module of the catalog as an instance (submodules are enumerated by the claims), ordered by instance ID.
    """
    seen: Dict[str, Module] = {}
    corpus = []

    for r in generate_rings(spec, logger):
        for m in _modules_over(r, spec, logger):
            if m.order <= spec.module_order_max and _distinct(seen, m, m.digest):
                corpus.append(Instance(m, origin='corpus'))

    corpus.sort(key=lambda i: i.id)

    if logger:
        logger.debug(f'Corpus: {len(corpus)} instances ({len({i.ring.digest for i in corpus})} rings)')

    return corpus
