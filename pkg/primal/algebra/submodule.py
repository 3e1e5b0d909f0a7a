from typing import List, Iterable, Tuple, Union

import numpy as np

from primal.algebra.module import Module, Submodule, ModuleHom, check_same_ring, check_domain
from primal.algebra.ring import Ideal
from primal.algebra.subset import SubSet
from primal.common.config import EngineConfig
from primal.common.errors import SizeLimitError, EmptySetError, DomainMismatchError, InternalInconsistencyError


def _closure(m: Module, mask: np.ndarray) -> np.ndarray:
    mask = mask.copy()
    mask[m.zero] = True

    while True:
        idx = np.flatnonzero(mask)
        grown = mask.copy()
        grown[m.act_table[:, idx].ravel()] = True
        grown[m.add_table[np.ix_(idx, idx)].ravel()] = True

        if (grown == mask).all():
            return mask

        mask = grown


def _as_indices(s: Union[SubSet, Iterable[int]]) -> np.ndarray:
    if isinstance(s, SubSet):
        return s.indices()

    return np.fromiter((int(e) for e in s), dtype=np.intp)


def submodule_generated(m: Module, s: Union[SubSet, Iterable[int]]) -> Submodule:
    """
    Least submodule containing 's'. Negatives come for free: -x = (-1)x.
    """
    mask = np.zeros(m.order, dtype=bool)
    mask[_as_indices(s)] = True
    return Submodule(m, SubSet.from_mask(_closure(m, mask)))


def cyclic_submodule(m: Module, x: int) -> Submodule:
    """
    Rx is already closed under sums since rx + r'x = (r + r')x.
    """
    return Submodule(m, SubSet.from_array(m.order, m.act_table[:, x]))


def submodule_sum(a: Submodule, b: Submodule) -> Submodule:
    m = a.module
    check_domain(b, m)
    return Submodule(m, SubSet.from_array(m.order, m.add_table[np.ix_(a.members.indices(), b.members.indices())]))


def check_module_lattice(m: Module):
    limit = EngineConfig.instance().module_lattice_max

    if m.order > limit:
        raise SizeLimitError(f'Submodule lattice of {m.label}', m.order, limit)


def enumerate_submodules(m: Module) -> List[Submodule]:
    """
    All submodules as the join closure of the cyclic ones, sorted by (size, bits).
    """
    check_module_lattice(m)

    def _compute() -> List[Submodule]:
        cyclic = {cyclic_submodule(m, x).members for x in m.elements}
        generators = sorted(cyclic, key=SubSet.sort_key)
        found, frontier = set(cyclic), list(generators)

        while frontier:
            discovered = []
            for s in frontier:
                s_idx = s.indices()
                for g in generators:
                    if not g.issubset(s):
                        joined = SubSet.from_array(m.order, m.add_table[np.ix_(s_idx, g.indices())])
                        if joined not in found:
                            found.add(joined)
                            discovered.append(joined)

            frontier = discovered

        return [Submodule(m, s) for s in sorted(found, key=SubSet.sort_key)]

    return m.cached('submodules', _compute)


def maximal_submodules(m: Module, subs: List[Submodule]) -> List[Submodule]:
    proper = [n for n in subs if n.is_proper()]
    return [n for n in proper if not any(n.members != o.members and n.members.issubset(o.members) for o in proper)]


def hasse_covers(subs: List[Submodule]) -> List[Tuple[int, int]]:
    """
    :return: index pairs (i, j) with subs[i] covered by subs[j] (strict inclusion, nothing in between)
    """
    bits = [n.members.bits for n in subs]
    below = {j: [i for i, b in enumerate(bits) if b != bits[j] and b & ~bits[j] == 0] for j in range(len(bits))}
    covers = []

    for j, lower in below.items():
        for i in lower:
            if not any(k != i and bits[i] & ~bits[k] == 0 for k in lower if bits[k] != bits[i]):
                covers.append((i, j))

    return sorted(covers)


def generator_certificate(n: Submodule) -> List[int]:
    """
    Greedy generating list: repeatedly adds the smallest member not yet generated. Certifies that 'n' is the
    submodule generated by the returned elements.
    """
    m = n.module
    gens, current = [], m.zero_set()

    while current != n.members:
        x = n.members.difference(current).first()
        gens.append(x)
        current = submodule_generated(m, [*gens]).members

    return gens


def colon(p: Submodule, s: Union[SubSet, Iterable[int]]) -> SubSet:
    """
    (P:S) = {r : rS inside P}. Not a two-sided ideal in general.
    """
    idx = _as_indices(s)

    if idx.size == 0:
        raise EmptySetError('The colon set needs a nonempty set of module elements')

    m = p.module
    return SubSet.from_mask(p.members.mask()[m.act_table[:, idx]].all(axis=1))


def ideal_submodule_product(a: Ideal, n: Submodule) -> Submodule:
    """
    AN: closure of the products a·x with a in A and x in N.
    """
    m = n.module
    check_same_ring(a.ring, m.ring)

    def _compute() -> Submodule:
        products = m.act_table[np.ix_(a.members.indices(), n.members.indices())]
        return submodule_generated(m, np.unique(products))

    return m.cached(f'product:{a.members.bits}:{n.members.bits}', _compute)


def hom_image(h: ModuleHom, n: Submodule) -> Submodule:
    if n.module is not h.source:
        raise DomainMismatchError(f'{n} does not belong to {h.source.label}')

    image = SubSet.from_array(h.target.order, h.map[n.members.indices()])
    generated = submodule_generated(h.target, image)

    if generated.members != image:
        raise InternalInconsistencyError(f'Image of {n} under {h} is not a submodule')

    return generated


def hom_preimage(h: ModuleHom, n: Submodule) -> Submodule:
    if n.module is not h.target:
        raise DomainMismatchError(f'{n} does not belong to {h.target.label}')

    return Submodule(h.source, SubSet.from_mask(n.members.mask()[h.map]))
