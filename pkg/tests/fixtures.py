from primal.algebra.module import Module, regular_module, free_module, column_module
from primal.algebra.ring import Ring, make_cyclic_ring, make_matrix_ring
from primal.hunter.corpus import CorpusSpec

# element indices of M_2(F_2): first entry most significant
M2_E11, M2_E12, M2_E21, M2_E22 = 8, 4, 2, 1
M2_ONES = 15  # [[1,1],[1,1]], nilpotent

# element indices of U_2(F_2) (entries 11, 12, 22)
U2_E11, U2_E12, U2_E22 = 4, 2, 1

# columns of F_2^2: e1 = (1, 0), e2 = (0, 1)
COL_E1, COL_E2 = 2, 1


def z(n: int) -> Ring:
    return make_cyclic_ring(n)


def z4_regular() -> Module:
    return regular_module(make_cyclic_ring(4))


def v2() -> Module:
    return free_module(make_cyclic_ring(2), 2)


def col() -> Module:
    return column_module(2, 2)


def m2f2() -> Ring:
    return make_matrix_ring(2, 2)


def u2() -> Ring:
    return make_matrix_ring(2, 2, triangular=True)


def zero_module() -> Module:
    return regular_module(make_cyclic_ring(1))


def tiny_corpus_spec() -> CorpusSpec:
    spec = CorpusSpec(cyclic_max=4, ring_order_max=4, module_order_max=16, free_rank_max=2, include_matrix=False,
                      include_quotients=True, product_order_max=4, include_idempotent=True)
    spec.setup_valid_properties()
    return spec


def small_corpus_spec() -> CorpusSpec:
    spec = CorpusSpec(cyclic_max=6, ring_order_max=8, module_order_max=16, free_rank_max=2, include_matrix=True,
                      include_quotients=True, product_order_max=8, include_idempotent=True)
    spec.setup_valid_properties()
    return spec
