from typing import Optional, Callable, Any, Dict, Tuple

import numpy as np
from sympy import isprime

from primal.algebra.subset import SubSet
from primal.common.config import EngineConfig
from primal.common.digest import table_digest
from primal.common.errors import InvalidParameterError, SizeLimitError, AxiomError, NoUnitError, InvalidIdealError

Recipe = Dict[str, Any]


def _frozen(table: np.ndarray) -> np.ndarray:
    table = np.array(table, dtype=np.intp)
    table.setflags(write=False)
    return table


class Ring:
    """
    Finite unital associative ring over the element indices 0..order-1. Instances are immutable once validated;
    derived data (powers, lattices, radicals) is memoized in a private cache.
    """

    def __init__(self, add_table: np.ndarray, mul_table: np.ndarray, zero: int, one: int, neg_table: np.ndarray,
                 label: str, recipe: Optional[Recipe] = None):
        self.add_table = _frozen(add_table)
        self.mul_table = _frozen(mul_table)
        self.neg_table = _frozen(neg_table)
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self.recipe = recipe if recipe is not None else {'kind': 'tables', 'add': self.add_table.tolist(), 'mul': self.mul_table.tolist()}
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

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def power(self, a: int, k: int) -> int:
        if k < 1:
            raise InvalidParameterError(f'Invalid exponent: {k}')

        return int(self.powers[a, min(k, self.order) - 1]) if k <= self.order else self._power_slow(a, k)

    def _power_slow(self, a: int, k: int) -> int:
        res = a
        for _ in range(k - 1):
            res = int(self.mul_table[res, a])

        return res

    @property
    def powers(self) -> np.ndarray:
        """
        (order x order) table with powers[a, k - 1] = a^k for k in [1, order]. The power sequence of any element
        enters a cycle within 'order' steps (pigeonhole), so these columns hold every distinct power of 'a'.
        """
        def _compute() -> np.ndarray:
            n = self.order
            table = np.empty((n, n), dtype=np.intp)
            elems = np.arange(n, dtype=np.intp)
            table[:, 0] = elems
            for k in range(1, n):
                table[:, k] = self.mul_table[table[:, k - 1], elems]

            table.setflags(write=False)
            return table

        return self.cached('powers', _compute)

    @property
    def is_commutative(self) -> bool:
        return self.cached('commutative', lambda: bool((self.mul_table == self.mul_table.T).all()))

    @property
    def digest(self) -> str:
        if self._digest is None:
            self._digest = table_digest(('ring', self.add_table, self.mul_table, self.zero, self.one))

        return self._digest

    def cached(self, key: str, factory: Callable[[], Any]) -> Any:
        if key not in self._cache:
            self._cache[key] = factory()

        return self._cache[key]

    def full(self) -> SubSet:
        return SubSet.full(self.order)

    def zero_set(self) -> SubSet:
        return SubSet.from_indices(self.order, (self.zero,))

    def __getstate__(self):
        state = dict(self.__dict__)
        state['_cache'] = {}
        return state

    def __repr__(self):
        return f'Ring({self.label}, order={self.order})'


class Ideal:
    """
    Two-sided ideal of a ring.
    """

    __slots__ = ('ring', 'members')

    def __init__(self, ring: Ring, members: SubSet):
        self.ring = ring
        self.members = members

    def is_proper(self) -> bool:
        return not self.members.is_full()

    def __contains__(self, item: int) -> bool:
        return item in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring is other.ring and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f'Ideal{self.members}'


def check_ring_order(order: int, what: str = 'Ring'):
    limit = EngineConfig.instance().ring_order_max

    if order > limit:
        raise SizeLimitError(what, order, limit)


def first_mismatch(left: np.ndarray, right: np.ndarray) -> Optional[Tuple[int, ...]]:
    diff = np.argwhere(left != right)
    if diff.size:
        return tuple(int(i) for i in diff[0])


def find_identity(table: np.ndarray) -> Optional[int]:
    elems = np.arange(table.shape[0])
    rows = np.flatnonzero((table == elems[None, :]).all(axis=1) & (table.T == elems[None, :]).all(axis=1))

    if rows.size:
        return int(rows[0])


def check_associativity(table: np.ndarray, axiom: str):
    for a in range(table.shape[0]):
        witness = first_mismatch(table[table[a]], table[a][table])
        if witness:
            raise AxiomError(axiom, (a, *witness))


def check_abelian_group(add: np.ndarray, zero: Optional[int] = None) -> Tuple[int, np.ndarray]:
    """
    :return: the additive identity and the negation vector of a validated abelian group table
    """
    found_zero = find_identity(add)
    if found_zero is None or (zero is not None and zero != found_zero):
        raise AxiomError('additive-identity', (zero,) if zero is not None else None)

    witness = first_mismatch(add, add.T)
    if witness:
        raise AxiomError('additive-commutativity', witness)

    n = add.shape[0]
    neg = np.argmax(add == found_zero, axis=1)
    missing = np.flatnonzero(add[np.arange(n), neg] != found_zero)
    if missing.size:
        raise AxiomError('additive-inverse', (int(missing[0]),))

    check_associativity(add, 'additive-associativity')
    return found_zero, neg


def as_table(table: Any, what: str = 'Tables') -> np.ndarray:
    try:
        return np.array(table, dtype=np.intp)
    except (ValueError, TypeError):
        raise InvalidParameterError(f'{what} must be integer matrices')


def validate_ring(add_table: Any, mul_table: Any, zero: Optional[int] = None, one: Optional[int] = None,
                  label: str = 'tables', recipe: Optional[Recipe] = None) -> Ring:
    """
    Checks every ring axiom and returns the validated ring. The first violated axiom is reported through an
    AxiomError carrying a witness tuple.
    """
    add, mul = as_table(add_table), as_table(mul_table)

    if add.ndim != 2 or add.shape[0] == 0 or add.shape[0] != add.shape[1] or mul.shape != add.shape:
        raise InvalidParameterError(f'Tables must be square matrices of the same order (got {add.shape} and {mul.shape})')

    n = add.shape[0]
    check_ring_order(n)

    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise InvalidParameterError(f'Table entries must be element indices in [0, {n})')

    zero, neg = check_abelian_group(add, zero)
    check_associativity(mul, 'associativity')

    found_one = find_identity(mul)
    if found_one is None or (one is not None and one != found_one):
        raise NoUnitError()

    one = found_one
    if one == zero and n > 1:
        raise AxiomError('one-equals-zero', (one,))

    for a in range(n):
        row, col = mul[a], mul[:, a]
        witness = first_mismatch(row[add], add[row[:, None], row[None, :]])
        if witness:
            raise AxiomError('left-distributivity', (a, *witness))

        witness = first_mismatch(col[add], add[col[:, None], col[None, :]])
        if witness:
            raise AxiomError('right-distributivity', (a, *witness))

    return Ring(add, mul, zero, one, neg, label, recipe)


def make_cyclic_ring(n: int) -> Ring:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidParameterError(f'Invalid cyclic ring order: {n}')

    check_ring_order(n)
    elems = np.arange(n)
    return validate_ring((elems[:, None] + elems[None, :]) % n, (elems[:, None] * elems[None, :]) % n,
                         label=f'Z_{n}', recipe={'kind': 'cyclic', 'n': int(n)})


def matrix_positions(k: int, triangular: bool) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, j) for i in range(k) for j in range(k) if not triangular or i <= j)


def encode_digits(digits: np.ndarray, p: int) -> np.ndarray:
    """
    Encodes the last axis of 'digits' as base-p integers, first digit most significant.
    """
    width = digits.shape[-1]
    weights = p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (digits.astype(np.int64) @ weights).astype(np.intp)


def decode_digits(values: np.ndarray, p: int, width: int) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    weights = p ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (values[..., None] // weights) % p


def matrix_elements(p: int, k: int, triangular: bool) -> np.ndarray:
    """
    :return: array (count, k, k) with the matrix of every element index
    """
    positions = matrix_positions(k, triangular)
    count = p ** len(positions)
    digits = decode_digits(np.arange(count), p, len(positions))
    matrices = np.zeros((count, k, k), dtype=np.int64)

    for idx, (i, j) in enumerate(positions):
        matrices[:, i, j] = digits[:, idx]

    return matrices


def encode_matrices(matrices: np.ndarray, p: int, k: int, triangular: bool) -> np.ndarray:
    positions = matrix_positions(k, triangular)
    digits = np.stack([matrices[..., i, j] for i, j in positions], axis=-1)
    return encode_digits(digits % p, p)


def make_matrix_ring(p: int, k: int, triangular: bool = False) -> Ring:
    if not isprime(p):
        raise InvalidParameterError(f'{p} is not a prime')

    if k < 1:
        raise InvalidParameterError(f'Invalid matrix dimension: {k}')

    entries = k * (k + 1) // 2 if triangular else k * k
    check_ring_order(p ** entries)

    matrices = matrix_elements(p, k, triangular)
    add = encode_matrices(matrices[:, None] + matrices[None, :], p, k, triangular)
    mul = encode_matrices(np.einsum('aij,bjl->abil', matrices, matrices), p, k, triangular)
    kind = 'triangular' if triangular else 'matrix'
    label = f"{'U' if triangular else 'M'}_{k}(F_{p})"
    return validate_ring(add, mul, label=label, recipe={'kind': kind, 'p': int(p), 'k': int(k)})


def make_product_ring(a: Ring, b: Ring) -> Ring:
    check_ring_order(a.order * b.order)
    nb = b.order

    def _table(ta: np.ndarray, tb: np.ndarray) -> np.ndarray:
        left = ta[:, None, :, None] * nb + tb[None, :, None, :]
        return left.reshape(a.order * nb, a.order * nb)

    return validate_ring(_table(a.add_table, b.add_table), _table(a.mul_table, b.mul_table),
                         label=f'{a.label} x {b.label}', recipe={'kind': 'product', 'left': a.recipe, 'right': b.recipe})


def coset_representatives(add_table: np.ndarray, members: SubSet) -> np.ndarray:
    """
    :return: for every element x, the minimal index of the coset x + members
    """
    return add_table[:, members.indices()].min(axis=1)


def reindex_classes(reps: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    classes = np.unique(reps)
    index_of = np.full(reps.shape[0], -1, dtype=np.intp)
    index_of[classes] = np.arange(classes.shape[0])
    return classes, index_of[reps]


def is_ideal_set(r: Ring, members: SubSet) -> bool:
    if r.zero not in members:
        return False

    idx = members.indices()
    mask = members.mask()
    return bool(mask[r.add_table[np.ix_(idx, idx)]].all() and mask[r.neg_table[idx]].all() and
                mask[r.mul_table[:, idx]].all() and mask[r.mul_table[idx, :]].all())


def make_quotient_ring(r: Ring, i: Ideal) -> Tuple[Ring, np.ndarray]:
    """
    :return: the quotient ring over minimal coset representatives and the coset map from r onto it
    """
    if i.ring is not r or not is_ideal_set(r, i.members):
        raise InvalidIdealError(f'{i.members} is not an ideal of {r.label}')

    reps = coset_representatives(r.add_table, i.members)
    classes, coset_map = reindex_classes(reps)
    add = coset_map[r.add_table[np.ix_(classes, classes)]]
    mul = coset_map[r.mul_table[np.ix_(classes, classes)]]
    quotient = validate_ring(add, mul, label=f'{r.label}/{i.members}',
                             recipe={'kind': 'quotient', 'ring': r.recipe, 'generators': i.members.to_list()})
    coset_map.setflags(write=False)
    return quotient, coset_map

