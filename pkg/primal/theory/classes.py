from typing import Optional, Tuple, Dict, List

import numpy as np

from primal.algebra.ideal import ideal_generated, ideal_product
from primal.algebra.module import Module, Submodule
from primal.algebra.ring import Ring, coset_representatives
from primal.algebra.subset import SubSet
from primal.common.errors import InternalInconsistencyError
from primal.theory.primal import completely_semiprime_witness, is_2primal_submodule, Witness

# Chart order: each class implies the next one
CHAIN = ('lz_cs', 'symmetric', 'ifp', 'semi_symmetric', 'two_primal')


def _first(hits: np.ndarray) -> Optional[Witness]:
    found = np.argwhere(hits)
    if found.size:
        return tuple(int(i) for i in found[0])


def lz_witness(n: Submodule) -> Optional[Witness]:
    """
    Reduced in the Lee-Zhou sense with N in the place of 0: am in N implies Rm ∩ aM lies inside N.
    :return: (a, m, y) with am in N and y = rm = ax outside N, else None
    """
    m = n.module
    outside = ~n.members.mask()
    rm_sets = np.zeros((m.order, m.order), dtype=np.int64)  # [x, y] <=> y = r x for some r
    rm_sets[np.arange(m.order)[None, :], m.act_table] = 1
    am_sets = np.zeros((m.ring.order, m.order), dtype=np.int64)  # [a, y] <=> y = a x for some x
    am_sets[np.arange(m.ring.order)[:, None], m.act_table] = 1
    am_sets[:, ~outside] = 0

    shared = (am_sets @ rm_sets.T) > 0  # [a, x]
    hits = np.argwhere(n.members.mask()[m.act_table] & shared)

    if hits.size:
        a, x = int(hits[0][0]), int(hits[0][1])
        common = np.flatnonzero(am_sets[a] & rm_sets[x])
        return a, x, int(common[0])


def lz_quotient_witness(n: Submodule) -> Optional[Witness]:
    """
    The same condition read in M/N: am in N implies (Rm + N) ∩ (aM + N) lies inside N. Every literal witness is
    also one here; at N = {0} both readings coincide.
    :return: (a, m, x) with x outside N in both Rm + N and aM + N, else None
    """
    m = n.module
    cosets = coset_representatives(m.add_table, n.members)
    zero_coset = cosets[m.zero]
    rm_cosets = np.zeros((m.order, m.order), dtype=np.int64)  # [x, c] <=> c = r x + N for some r
    rm_cosets[np.arange(m.order)[:, None], cosets[m.act_table.T]] = 1
    am_cosets = np.zeros((m.ring.order, m.order), dtype=np.int64)  # [a, c] <=> c = a y + N for some y
    am_cosets[np.arange(m.ring.order)[:, None], cosets[m.act_table]] = 1
    rm_cosets[:, zero_coset] = 0

    shared = (am_cosets @ rm_cosets.T) > 0  # [a, x]
    hits = np.argwhere(n.members.mask()[m.act_table] & shared)

    if hits.size:
        a, x = int(hits[0][0]), int(hits[0][1])
        common = np.flatnonzero(am_cosets[a] & rm_cosets[x])
        return a, x, int(common[0])


def is_lz_completely_semiprime(n: Submodule) -> bool:
    return lz_witness(n) is None


def symmetric_witness(n: Submodule) -> Optional[Witness]:
    """
    :return: (a, b, m) with abm in N but bam outside N, else None
    """
    m = n.module
    mask = n.members.mask()
    ab = m.act_table[m.ring.mul_table]  # [a, b, x] = (ab)x
    return _first(mask[ab] & ~mask[ab.transpose(1, 0, 2)])


def is_symmetric_submodule(n: Submodule) -> bool:
    return symmetric_witness(n) is None


def ifp_witness(n: Submodule) -> Optional[Witness]:
    """
    :return: (a, m, r) with am in N but arm outside N, else None
    """
    m = n.module
    mask = n.members.mask()
    arm = mask[m.act_table[m.ring.mul_table]]  # [a, r, x] <=> (ar)x in N
    hits = mask[m.act_table][:, None, :] & ~arm
    found = _first(hits)

    if found:
        return found[0], found[2], found[1]


def is_ifp_submodule(n: Submodule) -> bool:
    return ifp_witness(n) is None


def principal_squares(r: Ring) -> List[SubSet]:
    """
    (a)^2 for every ring element a, (a) being the two-sided ideal generated by a.
    """
    def _compute() -> List[SubSet]:
        squares: Dict[SubSet, SubSet] = {}
        result = []
        for a in r.elements:
            principal = ideal_generated(r, (a,))
            if principal.members not in squares:
                squares[principal.members] = ideal_product(principal, principal).members

            result.append(squares[principal.members])

        return result

    return r.cached('principal_squares', _compute)


def semi_symmetric_witness(n: Submodule) -> Optional[Witness]:
    """
    :return: (a, m, b) with a^2 m in N, b in (a)^2 and bm outside N, else None
    """
    m = n.module
    r = m.ring
    mask = n.members.mask()
    squares = r.mul_table[np.arange(r.order), np.arange(r.order)]
    premise = mask[m.act_table[squares]]  # [a, x]

    for a, square in enumerate(principal_squares(r)):
        if not premise[a].any():
            continue

        idx = square.indices()
        outside = ~mask[m.act_table[idx]]  # [b, x]
        bad = premise[a][None, :] & outside
        found = _first(bad)

        if found:
            return a, found[1], int(idx[found[0]])


def is_semi_symmetric_submodule(n: Submodule) -> bool:
    return semi_symmetric_witness(n) is None


def reduced_characterizations(m: Module) -> Tuple[bool, bool, bool]:
    """
    Three independent readings of 'M is reduced' at the zero submodule:
    (1) am = 0 implies Rm ∩ aM = 0;
    (2) a^2 m = 0 implies aRm = 0;
    (3) am = 0 implies aRm = 0, and a^2 m = 0 implies am = 0.
    """
    r = m.ring
    zero = m.act_table == m.zero  # [a, x] <=> ax = 0
    arm_zero = (m.act_table[r.mul_table] == m.zero).all(axis=1)  # [a, x] <=> aRx = 0
    squares = r.mul_table[np.arange(r.order), np.arange(r.order)]
    square_zero = zero[squares]

    rm = np.zeros((m.order, m.order), dtype=np.int64)
    rm[np.arange(m.order)[:, None], m.act_table.T] = 1
    am = np.zeros((r.order, m.order), dtype=np.int64)
    am[np.arange(r.order)[:, None], m.act_table] = 1
    rm[:, m.zero] = 0
    first = not (zero & ((am @ rm.T) > 0)).any()

    second = not (square_zero & ~arm_zero).any()
    third = not (zero & ~arm_zero).any() and not (square_zero & ~zero).any()
    return first, second, third


class ClassVector:
    """
    Chart flags of a submodule, with a witness for every false flag.
    """

    FLAGS = ('lz_cs', 'symmetric', 'ifp', 'semi_symmetric', 'two_primal', 'cs_def12')

    def __init__(self, lz_cs: bool, symmetric: bool, ifp: bool, semi_symmetric: bool, two_primal: bool,
                 cs_def12: Optional[bool], witnesses: Dict[str, Witness]):
        self.lz_cs = lz_cs
        self.symmetric = symmetric
        self.ifp = ifp
        self.semi_symmetric = semi_symmetric
        self.two_primal = two_primal
        self.cs_def12 = cs_def12
        self.witnesses = witnesses

    def flags(self) -> Dict[str, Optional[bool]]:
        return {f: getattr(self, f) for f in self.FLAGS}

    def to_dict(self) -> dict:
        return {**self.flags(), 'witnesses': {k: list(v) for k, v in sorted(self.witnesses.items())}}

    def __repr__(self):
        return f"ClassVector({', '.join(f'{k}={v}' for k, v in self.flags().items())})"


def chain_violation(vector: ClassVector, commutative: bool) -> Optional[Tuple[str, str]]:
    """
    :return: the first implication of the chart failing on 'vector' as (premise, conclusion), else None
    """
    for premise, conclusion in zip(CHAIN, CHAIN[1:]):
        if getattr(vector, premise) and not getattr(vector, conclusion):
            return premise, conclusion

    if commutative and not vector.symmetric:
        return 'commutative', 'symmetric'

    if vector.lz_cs and vector.cs_def12 is False:
        return 'lz_cs', 'cs_def12'


def class_vector(n: Submodule) -> ClassVector:
    witnesses = {}
    checks = (('lz_cs', lz_witness), ('symmetric', symmetric_witness), ('ifp', ifp_witness),
              ('semi_symmetric', semi_symmetric_witness))

    for name, check in checks:
        witness = check(n)
        if witness is not None:
            witnesses[name] = witness

    cs_def12 = None
    if n.is_proper():
        witness = completely_semiprime_witness(n)
        cs_def12 = witness is None

        if witness is not None:
            witnesses['cs_def12'] = witness

    two_primal = is_2primal_submodule(n)
    return ClassVector(lz_cs='lz_cs' not in witnesses, symmetric='symmetric' not in witnesses,
                       ifp='ifp' not in witnesses, semi_symmetric='semi_symmetric' not in witnesses,
                       two_primal=two_primal, cs_def12=cs_def12, witnesses=witnesses)


def classify(n: Submodule) -> ClassVector:
    """
    Evaluates every chart class of 'n' and checks the chart implications before returning.
    """
    vector = class_vector(n)
    violation = chain_violation(vector, n.module.ring.is_commutative)

    if violation:
        raise InternalInconsistencyError(f'{violation[0]} does not imply {violation[1]} at {n} in {n.module.label}',
                                         {'flags': vector.flags(), 'witnesses': vector.witnesses})

    return vector
