from typing import Optional, Any, Dict, Callable, FrozenSet, Iterable, Tuple, List

import numpy as np

from primal.algebra.ring import Ring, Recipe, make_matrix_ring, check_abelian_group, first_mismatch, as_table, \
    decode_digits, encode_digits, coset_representatives, reindex_classes
from primal.algebra.subset import SubSet
from primal.common.config import EngineConfig
from primal.common.digest import table_digest
from primal.common.errors import InvalidParameterError, SizeLimitError, AxiomError, InvalidSubmoduleError, \
    RingMismatchError, NotIdempotentError, DomainMismatchError

TAG_REGULAR = 'regular'
TAG_FREE = 'free'
TAG_IDEMPOTENT = 'idempotent'


def _frozen(table: np.ndarray) -> np.ndarray:
    table = np.array(table, dtype=np.intp)
    table.setflags(write=False)
    return table


class Module:
    """
    Finite left unital module over a Ring: an abelian group table plus the action table act[r, m] = r·m.
    """

    def __init__(self, ring: Ring, add_table: np.ndarray, act_table: np.ndarray, zero: int, neg_table: np.ndarray,
                 label: str, recipe: Optional[Recipe] = None, tags: Iterable[str] = ()):
        self.ring = ring
        self.add_table = _frozen(add_table)
        self.act_table = _frozen(act_table)
        self.neg_table = _frozen(neg_table)
        self.zero = int(zero)
        self.label = label
        self.recipe = recipe if recipe is not None else {'kind': 'tables', 'ring': ring.recipe,
                                                         'add': self.add_table.tolist(),
                                                         'act': self.act_table.tolist()}
        self.tags: FrozenSet[str] = frozenset(tags)
        self.inclusion: Optional["ModuleHom"] = None
        self._cache: Dict[str, Any] = {}
        self._digest: Optional[str] = None

    @property
    def order(self) -> int:
        return int(self.add_table.shape[0])

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def act(self, r: int, m: int) -> int:
        return int(self.act_table[r, m])

    def neg(self, m: int) -> int:
        return int(self.neg_table[m])

    @property
    def digest(self) -> str:
        if self._digest is None:
            self._digest = table_digest(('module', self.ring.digest, self.add_table, self.act_table, self.zero))

        return self._digest

    def is_projective(self) -> bool:
        return bool(self.tags & {TAG_FREE, TAG_REGULAR, TAG_IDEMPOTENT})

    def cached(self, key: str, factory: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = factory()

        return self._cache[key]

    def full(self) -> SubSet:
        return SubSet.full(self.order)

    def zero_set(self) -> SubSet:
        return SubSet.from_indices(self.order, (self.zero,))

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, self.zero_set())

    def full_submodule(self) -> "Submodule":
        return Submodule(self, self.full())

    def __getstate__(self):
        state = dict(self.__dict__)
        state['_cache'] = {}
        return state

    def __repr__(self):
        return f'Module({self.label}, order={self.order})'


class Submodule:

    __slots__ = ('module', 'members')

    def __init__(self, module: Module, members: SubSet):
        self.module = module
        self.members = members

    def is_proper(self) -> bool:
        return not self.members.is_full()

    def is_zero(self) -> bool:
        return self.members == self.module.zero_set()

    def __contains__(self, item: int) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, Submodule) and self.module is other.module and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f'Submodule{self.members}'


class ModuleHom:
    """
    R-linear map given by the image of every source element.
    """

    def __init__(self, source: Module, target: Module, mapping: np.ndarray):
        self.source = source
        self.target = target
        self.map = _frozen(mapping)

    @property
    def surjective(self) -> bool:
        return np.unique(self.map).shape[0] == self.target.order

    def kernel(self) -> SubSet:
        return SubSet.from_mask(self.map == self.target.zero)

    def __repr__(self):
        return f'ModuleHom({self.source.label} -> {self.target.label})'


def same_ring(a: Ring, b: Ring) -> bool:
    return a is b or a.digest == b.digest


def check_same_ring(a: Ring, b: Ring):
    if not same_ring(a, b):
        raise RingMismatchError(f'{a.label} and {b.label} are different rings')


def check_module_order(order: int, what: str = 'Module'):
    limit = EngineConfig.instance().module_order_max

    if order > limit:
        raise SizeLimitError(what, order, limit)


def validate_module(ring: Ring, add_table: Any, act_table: Any, zero: Optional[int] = None, label: str = 'tables',
                    recipe: Optional[Recipe] = None, tags: Iterable[str] = ()) -> Module:
    """
    Checks the abelian group axioms and the four action axioms (both distributive laws, compatibility with the
    ring product and unitality). The first violated axiom is reported with a witness.
    """
    add, act = as_table(add_table), as_table(act_table)

    if add.ndim != 2 or add.shape[0] == 0 or add.shape[0] != add.shape[1]:
        raise InvalidParameterError(f'The addition table must be a square matrix (got {add.shape})')

    n, nr = add.shape[0], ring.order
    check_module_order(n)

    if act.shape != (nr, n):
        raise InvalidParameterError(f'The action table must be a {nr}x{n} matrix (got {act.shape})')

    if add.min() < 0 or add.max() >= n or act.min() < 0 or act.max() >= n:
        raise InvalidParameterError(f'Table entries must be element indices in [0, {n})')

    zero, neg = check_abelian_group(add, zero)

    for r in range(nr):
        row = act[r]
        witness = first_mismatch(row[add], add[row[:, None], row[None, :]])
        if witness:
            raise AxiomError('action-distributivity', (r, *witness))

        witness = first_mismatch(act[ring.add_table[r]], add[row[None, :], act])
        if witness:
            raise AxiomError('ring-distributivity', (r, *witness))

        witness = first_mismatch(act[ring.mul_table[r]], row[act])
        if witness:
            raise AxiomError('action-associativity', (r, *witness))

    witness = first_mismatch(act[ring.one], np.arange(n))
    if witness:
        raise AxiomError('action-unital', witness)

    return Module(ring, add, act, zero, neg, label, recipe, tags)


def validate_hom(source: Module, target: Module, mapping: Any) -> ModuleHom:
    check_same_ring(source.ring, target.ring)
    values = np.asarray(mapping, dtype=np.intp)

    if values.shape != (source.order,) or values.min() < 0 or values.max() >= target.order:
        raise InvalidParameterError(f'A hom {source.label} -> {target.label} maps each of the {source.order} '
                                    f'source elements to a target element')

    witness = first_mismatch(values[source.add_table], target.add_table[values[:, None], values[None, :]])
    if witness:
        raise AxiomError('hom-additivity', witness)

    witness = first_mismatch(values[source.act_table], target.act_table[:, values])
    if witness:
        raise AxiomError('hom-linearity', witness)

    return ModuleHom(source, target, values)


def is_submodule_set(m: Module, members: SubSet) -> bool:
    if members.size != m.order or m.zero not in members:
        return False

    idx = members.indices()
    mask = members.mask()
    return bool(mask[m.add_table[np.ix_(idx, idx)]].all() and mask[m.act_table[:, idx]].all())


def regular_module(r: Ring) -> Module:
    """
    R over itself, the action being the ring product.
    """
    return r.cached('regular_module', lambda: validate_module(r, r.add_table, r.mul_table, label=f'{r.label} (regular)',
                                                              recipe={'kind': 'regular', 'ring': r.recipe},
                                                              tags=(TAG_REGULAR, TAG_FREE)))


def tuple_elements(base: int, k: int) -> np.ndarray:
    """
    :return: array (base^k, k) with the coordinates of every tuple index (first coordinate most significant)
    """
    return decode_digits(np.arange(base ** k), base, k).astype(np.intp)


def free_module(r: Ring, k: int) -> Module:
    if k < 1:
        raise InvalidParameterError(f'Invalid rank: {k}')

    n = r.order ** k
    check_module_order(n, f'{r.label}^{k}')
    coords = tuple_elements(r.order, k)
    add = encode_digits(r.add_table[coords[:, None, :], coords[None, :, :]], r.order)
    act = encode_digits(r.mul_table[np.arange(r.order)[:, None, None], coords[None, :, :]], r.order)
    return validate_module(r, add, act, label=f'{r.label}^{k}', recipe={'kind': 'free', 'ring': r.recipe, 'rank': int(k)},
                           tags=(TAG_FREE,))


def column_module(p: int, k: int) -> Module:
    """
    Columns of length k over F_p under the left action of the full matrix ring M_k(F_p).
    """
    ring = make_matrix_ring(p, k)
    check_module_order(p ** k, f'F_{p}^{k} columns')
    matrices = decode_digits(np.arange(ring.order), p, k * k).reshape(ring.order, k, k)
    vectors = tuple_elements(p, k)
    add = encode_digits((vectors[:, None, :] + vectors[None, :, :]) % p, p)
    act = encode_digits(np.einsum('aij,mj->ami', matrices, vectors) % p, p)
    return validate_module(ring, add, act, label=f'F_{p}^{k} over {ring.label}',
                           recipe={'kind': 'column', 'p': int(p), 'k': int(k)})


def _restrict(m: Module, members: SubSet) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    :return: addition and action tables of the submodule 'members' re-indexed in ascending order, and the members
    """
    img = members.indices()
    index_of = np.full(m.order, -1, dtype=np.intp)
    index_of[img] = np.arange(img.shape[0])
    return index_of[m.add_table[np.ix_(img, img)]], index_of[m.act_table[:, img]], img


def quotient_module(m: Module, n: Submodule) -> Tuple[Module, ModuleHom]:
    """
    :return: the coset module over minimal coset representatives and the canonical projection
    """
    if n.module is not m or not is_submodule_set(m, n.members):
        raise InvalidSubmoduleError(f'{n.members} is not a submodule of {m.label}')

    def _compute() -> Tuple[Module, ModuleHom]:
        classes, coset_map = reindex_classes(coset_representatives(m.add_table, n.members))
        add = coset_map[m.add_table[np.ix_(classes, classes)]]
        act = coset_map[m.act_table[:, classes]]
        quotient = validate_module(m.ring, add, act, label=f'{m.label}/{n.members}',
                                   recipe={'kind': 'quotient', 'module': m.recipe, 'generators': n.members.to_list()})
        return quotient, ModuleHom(m, quotient, coset_map)

    return m.cached(f'quotient:{n.members.bits}', _compute)


def free_endomorphism(m: Module, matrix: List[List[int]]) -> ModuleHom:
    """
    The endomorphism x -> xA of R^k for a k x k matrix A over R (right multiplication keeps it left-linear).
    """
    if m.recipe.get('kind') != 'free':
        raise InvalidParameterError(f'{m.label} is not a free module')

    r, k = m.ring, int(m.recipe['rank'])
    a = np.asarray(matrix, dtype=np.intp)

    if a.shape != (k, k) or a.min() < 0 or a.max() >= r.order:
        raise InvalidParameterError(f'Expected a {k}x{k} matrix of elements of {r.label}')

    coords = tuple_elements(r.order, k)
    images = np.empty_like(coords)

    for j in range(k):
        col = np.full(coords.shape[0], r.zero, dtype=np.intp)
        for i in range(k):
            col = r.add_table[col, r.mul_table[coords[:, i], a[i, j]]]

        images[:, j] = col

    return validate_hom(m, m, encode_digits(images, r.order))


def idempotent_image(m: Module, e: ModuleHom) -> Module:
    """
    Image of an idempotent endomorphism of a free module, a direct summand and hence projective. The inclusion
    into 'm' is kept as 'inclusion'.
    """
    if e.source is not m or e.target is not m:
        raise DomainMismatchError(f'{e} is not an endomorphism of {m.label}')

    witness = first_mismatch(e.map[e.map], e.map)
    if witness:
        raise NotIdempotentError(f'{e} is not idempotent', witness)

    members = SubSet.from_array(m.order, e.map)
    add, act, img = _restrict(m, members)
    tags = (TAG_IDEMPOTENT,) if TAG_FREE in m.tags else ()
    image = validate_module(m.ring, add, act, label=f'im({m.label})', tags=tags,
                            recipe={'kind': 'idempotent', 'module': m.recipe, 'map': e.map.tolist()})
    image.inclusion = ModuleHom(image, m, img)
    return image


def check_domain(n: Submodule, m: Module):
    if n.module is not m:
        raise DomainMismatchError(f'{n} does not belong to {m.label}')
