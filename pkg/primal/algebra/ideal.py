from typing import List, Optional, Tuple, Iterable

import numpy as np

from primal.algebra.module import regular_module
from primal.algebra.ring import Ring, Ideal, is_ideal_set, make_quotient_ring
from primal.algebra.submodule import enumerate_submodules, maximal_submodules
from primal.algebra.subset import SubSet
from primal.common.config import EngineConfig
from primal.common.errors import InvalidParameterError, SizeLimitError, \
    InternalInconsistencyError


def _additive_closure(r: Ring, mask: np.ndarray) -> np.ndarray:
    mask = mask.copy()
    mask[r.zero] = True

    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[r.add_table[np.ix_(idx, idx)].ravel()] = True

        if (grown == mask).all():
            return mask

        mask = grown


def _two_sided_closure(r: Ring, mask: np.ndarray) -> np.ndarray:
    mask = mask.copy()
    mask[r.zero] = True

    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[r.mul_table[:, idx].ravel()] = True
        grown[r.mul_table[idx, :].ravel()] = True
        grown[r.add_table[np.ix_(idx, idx)].ravel()] = True

        if (grown == mask).all():
            return mask

        mask = grown


def ideal_generated(r: Ring, s: Iterable[int]) -> Ideal:
    """
    Least two-sided ideal containing 's': closure under sums and left/right multiplication up to a fixpoint.
    Negatives need no separate step since -x is a multiple of x in a finite group.
    """
    mask = np.zeros(r.order, dtype=bool)
    mask[np.fromiter((int(e) for e in s), dtype=np.intp)] = True
    return Ideal(r, SubSet.from_mask(_two_sided_closure(r, mask)))


def zero_ideal(r: Ring) -> Ideal:
    return Ideal(r, r.zero_set())


def unit_ideal(r: Ring) -> Ideal:
    return Ideal(r, r.full())


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    r = a.ring
    sums = r.add_table[np.ix_(a.members.indices(), b.members.indices())]
    return Ideal(r, SubSet.from_array(r.order, sums))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    """
    AB: additive closure of the pairwise products (an ideal again).
    """
    r = a.ring
    key = ('ideal_product', a.members.bits, b.members.bits)

    def _compute() -> Ideal:
        mask = np.zeros(r.order, dtype=bool)
        mask[r.mul_table[np.ix_(a.members.indices(), b.members.indices())].ravel()] = True
        return Ideal(r, SubSet.from_mask(_additive_closure(r, mask)))

    return r.cached(str(key), _compute)


def check_ring_lattice(r: Ring):
    limit = EngineConfig.instance().ring_lattice_max

    if r.order > limit:
        raise SizeLimitError(f'Ideal lattice of {r.label}', r.order, limit)


def enumerate_ideals(r: Ring) -> List[Ideal]:
    """
    Every two-sided ideal is a sum of principal ideals, so closing the principal ideals under pairwise sums
    yields the whole lattice. Sorted by (size, bits).
    """
    check_ring_lattice(r)

    def _compute() -> List[Ideal]:
        principal = {ideal_generated(r, (a,)).members for a in r.elements}
        generators = sorted(principal, key=SubSet.sort_key)
        found, frontier = set(principal), list(generators)

        while frontier:
            discovered = []
            for s in frontier:
                for g in generators:
                    if not g.issubset(s):
                        joined = ideal_sum(Ideal(r, s), Ideal(r, g)).members
                        if joined not in found:
                            found.add(joined)
                            discovered.append(joined)

            frontier = discovered

        return [Ideal(r, m) for m in sorted(found, key=SubSet.sort_key)]

    return r.cached('ideals', _compute)


def _check_proper(i: Ideal):
    if not i.is_proper():
        raise InvalidParameterError(f'{i} is not a proper ideal of {i.ring.label}')


def prime_ideal_witness(r: Ring, i: Ideal) -> Optional[Tuple[Ideal, Ideal]]:
    """
    :return: ideals A, B with AB inside 'i' but neither A nor B inside 'i'; None when 'i' is prime
    """
    _check_proper(i)
    outside = [a for a in enumerate_ideals(r) if not a.members.issubset(i.members)]

    for a in outside:
        for b in outside:
            if ideal_product(a, b).members.issubset(i.members):
                return a, b


def is_prime_ideal(r: Ring, i: Ideal) -> bool:
    return prime_ideal_witness(r, i) is None


def completely_prime_ideal_witness(r: Ring, i: Ideal) -> Optional[Tuple[int, int]]:
    """
    :return: elements a, b with ab in 'i' and a, b outside; None when 'i' is completely prime
    """
    _check_proper(i)
    mask = i.members.mask()
    bad = np.argwhere(mask[r.mul_table] & ~mask[:, None] & ~mask[None, :])

    if bad.size:
        return int(bad[0][0]), int(bad[0][1])


def is_completely_prime_ideal(r: Ring, i: Ideal) -> bool:
    return completely_prime_ideal_witness(r, i) is None


def prime_ideals(r: Ring) -> List[Ideal]:
    return r.cached('prime_ideals', lambda: [i for i in enumerate_ideals(r) if i.is_proper() and is_prime_ideal(r, i)])


def completely_prime_ideals(r: Ring) -> List[Ideal]:
    return r.cached('completely_prime_ideals', lambda: [i for i in enumerate_ideals(r)
                                                        if i.is_proper() and is_completely_prime_ideal(r, i)])


def _intersection(r: Ring, family: Iterable[Ideal], contains: SubSet) -> SubSet:
    """
    Intersection of the members of 'family' containing 'contains'; the whole ring when there is none.
    """
    bits = r.full().bits
    for i in family:
        if contains.issubset(i.members):
            bits &= i.members.bits

    return SubSet(r.order, bits)


def ideal_prime_radical(r: Ring, i: Ideal) -> SubSet:
    return _intersection(r, prime_ideals(r), i.members)


def ideal_completely_prime_radical(r: Ring, i: Ideal) -> SubSet:
    return _intersection(r, completely_prime_ideals(r), i.members)


def ring_prime_radical(r: Ring) -> SubSet:
    return ideal_prime_radical(r, zero_ideal(r))


def ring_completely_prime_radical(r: Ring) -> SubSet:
    return ideal_completely_prime_radical(r, zero_ideal(r))


def sqrt_ideal(r: Ring, i: Ideal) -> SubSet:
    """
    {a : a^n in i for some n >= 1}; exponents up to the ring order see every distinct power. Not an ideal in general.
    """
    return SubSet.from_mask(i.members.mask()[r.powers].any(axis=1))


def nilpotent_elements(r: Ring) -> SubSet:
    return sqrt_ideal(r, zero_ideal(r))


def is_2primal_ring(r: Ring) -> bool:
    return nilpotent_elements(r) == ring_prime_radical(r)


def is_2primal_ideal(r: Ring, i: Ideal) -> bool:
    _check_proper(i)
    quotient, _ = make_quotient_ring(r, i)
    return ring_completely_prime_radical(quotient) == ring_prime_radical(quotient)


def jacobson_radical(r: Ring) -> Ideal:
    """
    Intersection of the maximal left ideals, i.e. of the maximal submodules of R over itself.
    """
    def _compute() -> Ideal:
        module = regular_module(r)
        bits = r.full().bits

        for n in maximal_submodules(module, enumerate_submodules(module)):
            bits &= n.members.bits

        return Ideal(r, SubSet(r.order, bits))

    return r.cached('jacobson', _compute)


def is_semisimple(r: Ring) -> bool:
    return jacobson_radical(r).members == r.zero_set()


def ring_radical_ideal(r: Ring, members: SubSet) -> Ideal:
    """
    Radicals are intersections of ideals, hence ideals; anything else is an internal inconsistency.
    """
    if not is_ideal_set(r, members):
        raise InternalInconsistencyError(f'Radical {members} of {r.label} is not an ideal')

    return Ideal(r, members)
