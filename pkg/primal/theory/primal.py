from typing import Optional, Tuple, List, Dict

import numpy as np

from primal.algebra.ideal import enumerate_ideals
from primal.algebra.module import Module, Submodule, quotient_module
from primal.algebra.submodule import enumerate_submodules, submodule_generated, hom_preimage, ideal_submodule_product
from primal.algebra.subset import SubSet
from primal.common.errors import ImproperSubmoduleError, InternalInconsistencyError

Witness = Tuple[int, ...]


def _check_proper(p: Submodule):
    """
    Unital modules have RM = M, so 'RM not inside P' is just properness.
    """
    if not p.is_proper():
        raise ImproperSubmoduleError(f'{p} is not a proper submodule of {p.module.label}')


def _carries_module(m: Module, mask: np.ndarray) -> np.ndarray:
    """
    :return: for every ring element a, whether aM lies inside the set 'mask'
    """
    return mask[m.act_table].all(axis=1)


def completely_prime_witness(p: Submodule) -> Optional[Witness]:
    """
    :return: (a, m) with am in P, m outside P and aM not inside P; None when P is completely prime
    """
    _check_proper(p)
    m = p.module
    mask = p.members.mask()
    bad = mask[m.act_table] & ~mask[None, :] & ~_carries_module(m, mask)[:, None]
    hits = np.argwhere(bad)

    if hits.size:
        return int(hits[0][0]), int(hits[0][1])


def is_completely_prime_submodule(p: Submodule) -> bool:
    return completely_prime_witness(p) is None


def prime_witness_elementwise(p: Submodule) -> Optional[Witness]:
    """
    Elementwise form: aRm inside P forces m in P or aM inside P; (a, m) violating it, else None.
    """
    _check_proper(p)
    m = p.module
    mask = p.members.mask()
    # inside[a, x] <=> a r x in P for every r
    inside = mask[m.act_table[m.ring.mul_table]].all(axis=1)
    hits = np.argwhere(inside & ~mask[None, :] & ~_carries_module(m, mask)[:, None])

    if hits.size:
        return int(hits[0][0]), int(hits[0][1])


def prime_witness_definitional(p: Submodule) -> Optional[Tuple[SubSet, SubSet]]:
    """
    Definitional form over every ideal A and submodule N: AN inside P forces N inside P or AM inside P.
    :return: (A, N) violating it, else None
    """
    _check_proper(p)
    m = p.module
    full = m.full_submodule()

    for a in enumerate_ideals(m.ring):
        if ideal_submodule_product(a, full).members.issubset(p.members):
            continue

        for n in enumerate_submodules(m):
            if not n.members.issubset(p.members) and ideal_submodule_product(a, n).members.issubset(p.members):
                return a.members, n.members


def is_prime_submodule(p: Submodule) -> bool:
    """
    Runs both the definitional and the elementwise test; they must agree.
    """
    definitional = prime_witness_definitional(p) is None
    elementwise = prime_witness_elementwise(p) is None

    if definitional != elementwise:
        raise InternalInconsistencyError(f'Prime tests disagree on {p} in {p.module.label}: '
                                         f'definitional={definitional}, elementwise={elementwise}')

    return definitional


def semiprime_witness(p: Submodule) -> Optional[Witness]:
    """
    :return: (a, m) with aRam inside P but am outside P; None when P is semiprime
    """
    _check_proper(p)
    m = p.module
    r = m.ring
    mask = p.members.mask()
    # ara[a, s] = a s a
    ara = r.mul_table[np.arange(r.order)[:, None], r.mul_table.T]
    inside = mask[m.act_table[ara]].all(axis=1)
    hits = np.argwhere(inside & ~mask[m.act_table])

    if hits.size:
        return int(hits[0][0]), int(hits[0][1])


def is_semiprime_submodule(p: Submodule) -> bool:
    return semiprime_witness(p) is None


def completely_semiprime_witness(p: Submodule) -> Optional[Witness]:
    """
    :return: (a, m) with a^2 m in P but am outside P; None when P is completely semiprime
    """
    _check_proper(p)
    m = p.module
    r = m.ring
    mask = p.members.mask()
    squares = r.mul_table[np.arange(r.order), np.arange(r.order)]
    hits = np.argwhere(mask[m.act_table[squares]] & ~mask[m.act_table])

    if hits.size:
        return int(hits[0][0]), int(hits[0][1])


def is_completely_semiprime_submodule(p: Submodule) -> bool:
    return completely_semiprime_witness(p) is None


def is_prime_module(m: Module) -> bool:
    return m.order > 1 and is_prime_submodule(m.zero_submodule())


def is_completely_prime_module(m: Module) -> bool:
    return m.order > 1 and is_completely_prime_submodule(m.zero_submodule())


def is_semiprime_module(m: Module) -> bool:
    return m.order > 1 and is_semiprime_submodule(m.zero_submodule())


def is_completely_semiprime_module(m: Module) -> bool:
    return m.order > 1 and is_completely_semiprime_submodule(m.zero_submodule())


def is_fully_completely_semiprime(m: Module) -> bool:
    """
    Every proper submodule is completely semiprime.
    """
    return all(is_completely_semiprime_submodule(n) for n in enumerate_submodules(m) if n.is_proper())


def prime_submodules(m: Module) -> List[Submodule]:
    return m.cached('prime_submodules', lambda: [n for n in enumerate_submodules(m)
                                                 if n.is_proper() and is_prime_submodule(n)])


def completely_prime_submodules(m: Module) -> List[Submodule]:
    return m.cached('completely_prime_submodules', lambda: [n for n in enumerate_submodules(m)
                                                            if n.is_proper() and is_completely_prime_submodule(n)])


def _radical(family: List[Submodule], n: Submodule) -> Submodule:
    m = n.module
    bits = m.full().bits

    for p in family:
        if n.members.issubset(p.members):
            bits &= p.members.bits

    return Submodule(m, SubSet(m.order, bits))


def prime_radical(n: Submodule) -> Submodule:
    """
    β(N): intersection of the prime submodules containing N, or the whole module when there is none.
    """
    return _radical(prime_submodules(n.module), n)


def completely_prime_radical(n: Submodule) -> Submodule:
    """
    β_co(N): intersection of the completely prime submodules containing N, or the whole module when there is none.
    """
    return _radical(completely_prime_submodules(n.module), n)


class EnvelopeResult:

    def __init__(self, raw: SubSet, generated: Submodule, witnesses: Dict[int, Witness]):
        self.raw = raw
        self.generated = generated
        self.witnesses = witnesses

    def is_submodule(self) -> bool:
        return self.raw == self.generated.members

    def to_dict(self) -> dict:
        return {'raw': self.raw, 'generated': self.generated.members,
                'witnesses': {str(e): list(w) for e, w in sorted(self.witnesses.items())}}


def envelope(n: Submodule) -> EnvelopeResult:
    """
    E_M(N) = {rm : r^k m in N for some k >= 1}. Exponents up to the ring order cover every distinct power of r.
    Each raw member keeps one (r, m, k) witness.
    """
    m = n.module

    def _compute() -> EnvelopeResult:
        r = m.ring
        mask = n.members.mask()
        # lands[r, k, x] <=> r^(k+1) x in N
        lands = mask[m.act_table[r.powers]]
        hits = lands.any(axis=1)
        raw_mask = np.zeros(m.order, dtype=bool)
        witnesses = {}

        for a, x in np.argwhere(hits):
            value = int(m.act_table[a, x])
            raw_mask[value] = True
            if value not in witnesses:
                witnesses[value] = (int(a), int(x), int(np.argmax(lands[a, :, x])) + 1)

        raw = SubSet.from_mask(raw_mask)
        return EnvelopeResult(raw, submodule_generated(m, raw), witnesses)

    return m.cached(f'envelope:{n.members.bits}', _compute)


def radical_formula_witness(n: Submodule) -> Optional[int]:
    """
    :return: an element of the symmetric difference between ⟨E_M(N)⟩ and β(N); None when they agree
    """
    generated = envelope(n).generated.members
    radical = prime_radical(n).members

    if generated != radical:
        return SubSet(generated.size, generated.bits ^ radical.bits).first()


def satisfies_radical_formula(n: Submodule) -> bool:
    return radical_formula_witness(n) is None


def module_radical_formula_witness(m: Module) -> Optional[Tuple[SubSet, int]]:
    for n in enumerate_submodules(m):
        witness = radical_formula_witness(n)
        if witness is not None:
            return n.members, witness


def module_satisfies_rf(m: Module) -> bool:
    """
    The radical formula at every submodule.
    """
    return module_radical_formula_witness(m) is None


def quotient_radicals(n: Submodule) -> Tuple[Submodule, Submodule]:
    """
    β_co and β of the zero submodule of M/N, lifted back to M through the projection.
    """
    quotient, projection = quotient_module(n.module, n)
    zero = quotient.zero_submodule()
    return (hom_preimage(projection, completely_prime_radical(zero)),
            hom_preimage(projection, prime_radical(zero)))


def is_2primal_submodule(n: Submodule) -> bool:
    """
    N is 2-primal when the quotient module M/N is 2-primal: β_co(0) = β(0) in quotient_module(M, N), which is
    what quotient_radicals computes. (Completely) prime submodules of M/N are exactly P/N for the (completely)
    prime P containing N, so the same comparison is made in M without building the quotient: β_co(N) = β(N).
    """
    return completely_prime_radical(n).members == prime_radical(n).members


def is_2primal_module(m: Module) -> bool:
    return is_2primal_submodule(m.zero_submodule())


def is_self_radical_module(m: Module) -> bool:
    """
    Every submodule is its own prime radical.
    """
    return all(prime_radical(n).members == n.members for n in enumerate_submodules(m))
