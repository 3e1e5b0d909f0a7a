from typing import Optional, Callable, Dict, Any

from primal.algebra.module import Module, is_submodule_set
from primal.algebra.submodule import enumerate_submodules
from primal.theory.primal import is_prime_submodule, completely_prime_witness, completely_semiprime_witness, \
    envelope, prime_radical, completely_prime_radical, satisfies_radical_formula, is_2primal_module, \
    module_radical_formula_witness

Bundle = Dict[str, Any]


class HuntTarget:
    """
    A searched phenomenon. The predicate returns a witness bundle (plain JSON data) for a hit, None otherwise.
    """

    def __init__(self, id: str, description: str, predicate: Callable[[Module], Optional[Bundle]]):
        self.id = id
        self.description = description
        self.predicate = predicate

    def evaluate(self, m: Module) -> Optional[Bundle]:
        return self.predicate(m)

    def to_dict(self) -> dict:
        return {'id': self.id, 'description': self.description}

    def __repr__(self):
        return f'HuntTarget({self.id})'


def _prime_not_completely_prime(m: Module) -> Optional[Bundle]:
    zero = m.zero_submodule()
    witness = completely_prime_witness(zero)

    if witness is not None and is_prime_submodule(zero):
        return {'not_completely_prime': list(witness)}


def _q1(m: Module) -> Optional[Bundle]:
    if m.order > 1 and envelope(m.zero_submodule()).raw == m.zero_set():
        return _prime_not_completely_prime(m)


def _q2(m: Module) -> Optional[Bundle]:
    if m.order < 2:
        return

    zero = m.zero_submodule()

    if completely_semiprime_witness(zero) is None and prime_radical(zero).members == m.zero_set():
        witness = completely_prime_witness(zero)

        if witness is not None:
            return {'not_completely_prime': list(witness)}


def _rf_not_2primal(m: Module) -> Optional[Bundle]:
    zero = m.zero_submodule()

    if satisfies_radical_formula(zero) and not is_2primal_module(m):
        return {'beta': prime_radical(zero).members.to_list(),
                'beta_co': completely_prime_radical(zero).members.to_list()}


def _inclusion_fails(m: Module) -> Optional[Bundle]:
    zero = m.zero_submodule()
    radical = completely_prime_radical(zero).members
    generated = envelope(zero).generated.members

    if not radical.issubset(generated):
        return {'element': radical.difference(generated).first(), 'beta_co': radical.to_list(),
                'generated_envelope': generated.to_list()}


def _envelope_not_submodule(m: Module) -> Optional[Bundle]:
    for n in enumerate_submodules(m):
        raw = envelope(n).raw

        if not is_submodule_set(m, raw):
            return {'submodule': n.members.to_list(), 'envelope': raw.to_list()}


def _noncommutative_rf(m: Module) -> Optional[Bundle]:
    if not m.ring.is_commutative and module_radical_formula_witness(m) is None:
        return {'submodules': len(enumerate_submodules(m))}


TARGETS: Dict[str, HuntTarget] = {t.id: t for t in (
    HuntTarget('Q1', 'prime module, not completely prime, with E(0) = 0', _q1),
    HuntTarget('Q2', 'completely semiprime module, not completely prime, with β(M) = 0', _q2),
    HuntTarget('RF_NOT_2PRIMAL', 'zero submodule satisfies the radical formula but the module is not 2-primal',
               _rf_not_2primal),
    HuntTarget('INCLUSION3_FAIL', 'β_co(M) is not contained in ⟨E(0)⟩', _inclusion_fails),
    HuntTarget('ENVELOPE_NOT_SUBMODULE', 'some envelope E(N) is not a submodule', _envelope_not_submodule),
    HuntTarget('NONCOMMUTATIVE_RF', 'module over a noncommutative ring satisfying the radical formula everywhere',
               _noncommutative_rf)
)}
