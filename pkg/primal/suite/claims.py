"""
Registry of the checked statements. Every claim is data: a scope, a hypothesis in disjunctive normal form over
named facts, and a list of relations over named sets and facts. Facts and sets are resolved through
FACTS / SETS, so a recorded witness can be recomputed later from its names alone.
"""
from typing import Callable, Dict, Tuple, Optional, List, Iterator

from primal.algebra.ideal import sqrt_ideal, ideal_prime_radical, ideal_completely_prime_radical, \
    ring_prime_radical, ring_completely_prime_radical, is_prime_ideal, is_completely_prime_ideal, \
    is_2primal_ideal, is_2primal_ring, enumerate_ideals, jacobson_radical, nilpotent_elements, ring_radical_ideal
from primal.algebra.module import Submodule, TAG_FREE, TAG_REGULAR, quotient_module, is_submodule_set
from primal.algebra.ring import Ideal, is_ideal_set, make_quotient_ring, first_mismatch
from primal.algebra.submodule import enumerate_submodules, colon, ideal_submodule_product, hom_image
from primal.algebra.subset import SubSet
from primal.common.errors import InternalInconsistencyError
from primal.suite.model import Instance, Scope, ClaimMode, Witness
from primal.theory.classes import is_lz_completely_semiprime, is_symmetric_submodule, is_ifp_submodule, \
    is_semi_symmetric_submodule, class_vector, chain_violation, reduced_characterizations
from primal.theory.primal import envelope, prime_radical, completely_prime_radical, is_prime_submodule, \
    is_completely_prime_submodule, is_semiprime_submodule, is_completely_semiprime_submodule, is_2primal_submodule, \
    is_2primal_module, satisfies_radical_formula, module_satisfies_rf, is_fully_completely_semiprime, \
    prime_witness_elementwise, prime_witness_definitional, quotient_radicals, is_self_radical_module

Params = Dict[str, int]


def _sub(inst: Instance, params: Params, key: str = 'N') -> Submodule:
    return Submodule(inst.module, SubSet(inst.module.order, params[key]))


def _zero(inst: Instance) -> Submodule:
    return inst.module.zero_submodule()


def _ideal(inst: Instance, params: Params, key: str = 'I') -> Ideal:
    return Ideal(inst.ring, SubSet(inst.ring.order, params[key]))


def _radical_ideal(inst: Instance, completely: bool) -> Ideal:
    radical = ring_completely_prime_radical(inst.ring) if completely else ring_prime_radical(inst.ring)
    return ring_radical_ideal(inst.ring, radical)


def _radical_times_module(inst: Instance, completely: bool) -> SubSet:
    """
    β(R)M (resp. β_co(R)M). Radicals of finite rings are ideals; anything else is an internal error.
    """
    return ideal_submodule_product(_radical_ideal(inst, completely), inst.module.full_submodule()).members


def _quotient_image(inst: Instance, params: Params, kernel: str, key: str) -> Submodule:
    quotient, projection = quotient_module(inst.module, _sub(inst, params, kernel))
    return hom_image(projection, _sub(inst, params, key))


def _rf_quotient(inst: Instance, params: Params, kernel: str, key: str) -> bool:
    return satisfies_radical_formula(_quotient_image(inst, params, kernel, key))


def _as_module_set(inst: Instance, ring_set: SubSet) -> SubSet:
    """
    Ring elements read as elements of the regular module (same indices).
    """
    return SubSet(inst.module.order, ring_set.bits)


SETS: Dict[str, Callable[[Instance, Params], SubSet]] = {
    # ring level
    'I': lambda i, p: _ideal(i, p).members,
    'sqrt(I)': lambda i, p: sqrt_ideal(i.ring, _ideal(i, p)),
    'beta(I)': lambda i, p: ideal_prime_radical(i.ring, _ideal(i, p)),
    'beta_co(I)': lambda i, p: ideal_completely_prime_radical(i.ring, _ideal(i, p)),
    'sqrt(0)': lambda i, p: nilpotent_elements(i.ring),
    'beta(R)': lambda i, p: ring_prime_radical(i.ring),
    'beta_co(R)': lambda i, p: ring_completely_prime_radical(i.ring),
    # module level
    'M': lambda i, p: i.module.full(),
    '0': lambda i, p: i.module.zero_set(),
    'E(0)': lambda i, p: envelope(_zero(i)).raw,
    '<E(0)>': lambda i, p: envelope(_zero(i)).generated.members,
    'beta(0)': lambda i, p: prime_radical(_zero(i)).members,
    'beta_co(0)': lambda i, p: completely_prime_radical(_zero(i)).members,
    'E(beta(0))': lambda i, p: envelope(prime_radical(_zero(i))).raw,
    'beta(R)M': lambda i, p: _radical_times_module(i, False),
    'beta_co(R)M': lambda i, p: _radical_times_module(i, True),
    'sqrt(0) in M': lambda i, p: _as_module_set(i, nilpotent_elements(i.ring)),
    # submodule level
    'N': lambda i, p: _sub(i, p).members,
    'E(N)': lambda i, p: envelope(_sub(i, p)).raw,
    '<E(N)>': lambda i, p: envelope(_sub(i, p)).generated.members,
    'beta(N)': lambda i, p: prime_radical(_sub(i, p)).members,
    'beta_co(N)': lambda i, p: completely_prime_radical(_sub(i, p)).members,
    'E(beta(N))': lambda i, p: envelope(prime_radical(_sub(i, p))).raw,
    '<E(beta(N))>': lambda i, p: envelope(prime_radical(_sub(i, p))).generated.members,
    'colon(N,L)': lambda i, p: colon(_sub(i, p), SubSet(i.module.order, p['L'])),
    'colon(N,{x})': lambda i, p: colon(_sub(i, p), (p['x'],)),
    'colon(N,M)': lambda i, p: colon(_sub(i, p), i.module.full()),
}


def _prime_ideal_colon(inst: Instance, params: Params, completely: bool) -> bool:
    members = colon(_sub(inst, params), inst.module.full())

    if not is_ideal_set(inst.ring, members) or members.is_full():
        return False

    ideal = Ideal(inst.ring, members)
    return is_completely_prime_ideal(inst.ring, ideal) if completely else is_prime_ideal(inst.ring, ideal)


def _prime_ideals_agree(inst: Instance) -> bool:
    r = inst.ring
    return all(is_prime_ideal(r, i) == is_completely_prime_ideal(r, i) for i in enumerate_ideals(r) if i.is_proper())


def _completely_prime_ideals_are_prime(inst: Instance) -> bool:
    r = inst.ring
    return all(is_prime_ideal(r, i) for i in enumerate_ideals(r) if i.is_proper() and is_completely_prime_ideal(r, i))


def _quotient_maps_are_homs(inst: Instance) -> bool:
    r = inst.ring

    for i in enumerate_ideals(r):
        quotient, coset_map = make_quotient_ring(r, i)
        for table, image in ((r.add_table, quotient.add_table), (r.mul_table, quotient.mul_table)):
            if first_mismatch(coset_map[table], image[coset_map[:, None], coset_map[None, :]]):
                return False

    return True


def _chart_chain(inst: Instance, params: Params) -> bool:
    return chain_violation(class_vector(_sub(inst, params)), inst.ring.is_commutative) is None


def _reduced_agree(inst: Instance) -> bool:
    return len(set(reduced_characterizations(inst.module))) == 1


def _prime_tests_agree(inst: Instance, params: Params) -> bool:
    n = _sub(inst, params)
    return (prime_witness_definitional(n) is None) == (prime_witness_elementwise(n) is None)


def _two_primal_by_quotient(inst: Instance, params: Params) -> bool:
    completely, prime = quotient_radicals(_sub(inst, params))
    return completely.members == prime.members


def _proper(inst: Instance, params: Params, key: str = 'N') -> bool:
    return not SubSet(inst.module.order, params[key]).is_full()


def _inclusion(n: Submodule) -> bool:
    return completely_prime_radical(n).members.issubset(envelope(n).generated.members)


FACTS: Dict[str, Callable[[Instance, Params], bool]] = {
    # ring level
    'commutative': lambda i, p: i.ring.is_commutative,
    'semisimple(R)': lambda i, p: jacobson_radical(i.ring).members == i.ring.zero_set(),
    'absolutely_radical(R)': lambda i, p: (i.corpus_flags['absolutely_radical'] if 'absolutely_radical' in i.corpus_flags
                                           else is_self_radical_module(i.module)),
    '2primal(R)': lambda i, p: is_2primal_ring(i.ring),
    'beta_co(R)=beta(R)': lambda i, p: ring_completely_prime_radical(i.ring) == ring_prime_radical(i.ring),
    'completely prime ideals are prime': lambda i, p: _completely_prime_ideals_are_prime(i),
    'prime ideals are completely prime': lambda i, p: _prime_ideals_agree(i),
    'coset maps are homomorphisms': lambda i, p: _quotient_maps_are_homs(i),
    'proper(I)': lambda i, p: not SubSet(i.ring.order, p['I']).is_full(),
    'prime(I)': lambda i, p: is_prime_ideal(i.ring, _ideal(i, p)),
    'cp(I)': lambda i, p: is_completely_prime_ideal(i.ring, _ideal(i, p)),
    '2primal(I)': lambda i, p: is_2primal_ideal(i.ring, _ideal(i, p)),
    'sqrt(I) is an ideal': lambda i, p: is_ideal_set(i.ring, sqrt_ideal(i.ring, _ideal(i, p))),
    # module level
    'free(M)': lambda i, p: TAG_FREE in i.module.tags,
    'regular(M)': lambda i, p: TAG_REGULAR in i.module.tags,
    'projective(M)': lambda i, p: i.module.is_projective(),
    '2primal(M)': lambda i, p: is_2primal_module(i.module),
    'rf(M)': lambda i, p: module_satisfies_rf(i.module),
    'rf(0)': lambda i, p: satisfies_radical_formula(_zero(i)),
    'all_cs(M)': lambda i, p: is_fully_completely_semiprime(i.module),
    'inclusion(0)': lambda i, p: _inclusion(_zero(i)),
    'lz(0)': lambda i, p: is_lz_completely_semiprime(_zero(i)),
    'symmetric(0)': lambda i, p: is_symmetric_submodule(_zero(i)),
    'ifp(0)': lambda i, p: is_ifp_submodule(_zero(i)),
    'semi_symmetric(0)': lambda i, p: is_semi_symmetric_submodule(_zero(i)),
    'beta(M)=beta(R)M': lambda i, p: SETS['beta(0)'](i, p) == SETS['beta(R)M'](i, p),
    'beta_co(M)=beta_co(R)M': lambda i, p: SETS['beta_co(0)'](i, p) == SETS['beta_co(R)M'](i, p),
    'reduced readings agree': lambda i, p: _reduced_agree(i),
    # submodule level
    'proper(N)': _proper,
    'prime(N)': lambda i, p: _proper(i, p) and is_prime_submodule(_sub(i, p)),
    'cp(N)': lambda i, p: _proper(i, p) and is_completely_prime_submodule(_sub(i, p)),
    'semiprime(N)': lambda i, p: _proper(i, p) and is_semiprime_submodule(_sub(i, p)),
    'cs(N)': lambda i, p: _proper(i, p) and is_completely_semiprime_submodule(_sub(i, p)),
    '2primal(N)': lambda i, p: is_2primal_submodule(_sub(i, p)),
    '2primal(N) by quotient': _two_primal_by_quotient,
    'rf(N)': lambda i, p: satisfies_radical_formula(_sub(i, p)),
    'rf(L)': lambda i, p: satisfies_radical_formula(_sub(i, p, 'L')),
    'rf(L/N)': lambda i, p: _rf_quotient(i, p, 'N', 'L'),
    'rf(0 in M/N)': lambda i, p: _rf_quotient(i, p, 'N', 'N'),
    'beta(N)=N': lambda i, p: prime_radical(_sub(i, p)).members == _sub(i, p).members,
    'beta_co(N)=N': lambda i, p: completely_prime_radical(_sub(i, p)).members == _sub(i, p).members,
    'beta_co(M/N)=0': lambda i, p: quotient_radicals(_sub(i, p))[0].members == _sub(i, p).members,
    '<E(N)>=M': lambda i, p: envelope(_sub(i, p)).generated.members.is_full(),
    'inclusion(N)': lambda i, p: _inclusion(_sub(i, p)),
    'E(N) is a submodule': lambda i, p: is_submodule_set(i.module, envelope(_sub(i, p)).raw),
    'E(L) is a submodule': lambda i, p: is_submodule_set(i.module, envelope(_sub(i, p, 'L')).raw),
    'lz(N)': lambda i, p: is_lz_completely_semiprime(_sub(i, p)),
    'symmetric(N)': lambda i, p: is_symmetric_submodule(_sub(i, p)),
    'ifp(N)': lambda i, p: is_ifp_submodule(_sub(i, p)),
    'semi_symmetric(N)': lambda i, p: is_semi_symmetric_submodule(_sub(i, p)),
    'chart chain(N)': _chart_chain,
    'prime tests agree(N)': _prime_tests_agree,
    'L<=N': lambda i, p: SubSet(i.module.order, p['L']).issubset(_sub(i, p).members),
    'N<=L': lambda i, p: _sub(i, p).members.issubset(SubSet(i.module.order, p['L'])),
    'x in N': lambda i, p: p['x'] in _sub(i, p).members,
    '(N:M) prime ideal': lambda i, p: _prime_ideal_colon(i, p, False),
    '(N:M) completely prime ideal': lambda i, p: _prime_ideal_colon(i, p, True),
}


def fact(name: str, inst: Instance, params: Params) -> bool:
    """
    Evaluates a fact; a leading '!' negates it.
    """
    if name.startswith('!'):
        return not FACTS[name[1:]](inst, params)

    return FACTS[name](inst, params)


def holds_all(names: Tuple[str, ...], inst: Instance, params: Params) -> bool:
    return all(fact(n, inst, params) for n in names)


class Relation:
    """
    Something a claim concludes. 'quotient' relations build quotient modules and are skipped on large modules.
    """

    quotient = False

    def check(self, inst: Instance, params: Params, premises: Tuple[str, ...] = ()) -> Iterator[Witness]:
        raise NotImplementedError()


class Subset(Relation):

    def __init__(self, lhs: str, rhs: str, quotient: bool = False):
        self.lhs, self.rhs, self.quotient = lhs, rhs, quotient

    def check(self, inst: Instance, params: Params, premises: Tuple[str, ...] = ()) -> Iterator[Witness]:
        left, right = SETS[self.lhs](inst, params), SETS[self.rhs](inst, params)

        if not left.issubset(right):
            yield Witness('subset', self.lhs, self.rhs, dict(params), left.difference(right).first(), premises)


class Equal(Relation):

    def __init__(self, lhs: str, rhs: str, quotient: bool = False):
        self.lhs, self.rhs, self.quotient = lhs, rhs, quotient

    def check(self, inst: Instance, params: Params, premises: Tuple[str, ...] = ()) -> Iterator[Witness]:
        left, right = SETS[self.lhs](inst, params), SETS[self.rhs](inst, params)

        if left != right:
            yield Witness('equal', self.lhs, self.rhs, dict(params), SubSet(left.size, left.bits ^ right.bits).first(),
                          premises)


class Holds(Relation):

    def __init__(self, name: str, quotient: bool = False):
        self.name, self.quotient = name, quotient

    def check(self, inst: Instance, params: Params, premises: Tuple[str, ...] = ()) -> Iterator[Witness]:
        if not fact(self.name, inst, params):
            yield Witness('fact', self.name, None, dict(params), premises=premises)


class When(Relation):

    def __init__(self, premises: Tuple[str, ...], relation: Relation):
        self.premises = premises
        self.relation = relation
        self.quotient = relation.quotient

    def check(self, inst: Instance, params: Params, premises: Tuple[str, ...] = ()) -> Iterator[Witness]:
        if holds_all(self.premises, inst, params):
            yield from self.relation.check(inst, params, (*premises, *self.premises))


def iff(a: str, b: str, quotient: bool = False) -> Tuple[Relation, Relation]:
    return When((a,), Holds(b, quotient)), When((b,), Holds(a, quotient))


class ForEach(Relation):
    """
    Quantifies 'relations' over every submodule ('L'), element ('x') or ideal ('J') satisfying 'where'.
    """

    def __init__(self, var: str, where: Tuple[str, ...], relations: Tuple[Relation, ...]):
        self.var = var
        self.where = where
        self.relations = relations
        self.quotient = any(r.quotient for r in relations)

    def _domain(self, inst: Instance) -> List[int]:
        if self.var == 'L':
            return [n.members.bits for n in enumerate_submodules(inst.module)]
        elif self.var == 'x':
            return list(inst.module.elements)
        elif self.var == 'J':
            return [i.members.bits for i in enumerate_ideals(inst.ring)]

        raise InternalInconsistencyError(f'Unknown quantified variable: {self.var}')

    def check(self, inst: Instance, params: Params, premises: Tuple[str, ...] = ()) -> Iterator[Witness]:
        for value in self._domain(inst):
            inner = {**params, self.var: value}

            if holds_all(self.where, inst, inner):
                for relation in self.relations:
                    yield from relation.check(inst, inner, (*premises, *self.where))


class Claim:

    def __init__(self, id: str, title: str, statement: str, scope: Scope, hypothesis: Tuple[Tuple[str, ...], ...],
                 relations: Tuple[Relation, ...], mode: ClaimMode = ClaimMode.IMPLICATION,
                 corpus_relative: bool = False, quotient: bool = False):
        self.id = id
        self.title = title
        self.statement = statement
        self.scope = scope
        self.hypothesis = hypothesis
        self.relations = relations
        self.mode = mode
        self.corpus_relative = corpus_relative
        self.quotient = quotient

    def hypothesis_holds(self, inst: Instance, params: Params) -> bool:
        return any(holds_all(conj, inst, params) for conj in self.hypothesis)

    def sort_key(self) -> Tuple[int, str]:
        return int(self.id[1:]), self.id

    def to_dict(self) -> dict:
        return {'id': self.id, 'title': self.title, 'statement': self.statement, 'scope': self.scope,
                'mode': self.mode, 'corpus_relative': self.corpus_relative}

    def __repr__(self):
        return f'Claim({self.id}: {self.statement})'


ALWAYS = ((),)

# free / projective cases that make the zero submodule satisfy the radical formula
ZERO_RF_CASES = (('2primal(M)', 'free(M)'),
                 ('semi_symmetric(0)', 'free(M)'), ('semi_symmetric(0)', 'projective(M)'),
                 ('ifp(0)', 'projective(M)'), ('ifp(0)', 'free(M)'),
                 ('symmetric(0)', 'projective(M)'), ('symmetric(0)', 'free(M)'),
                 ('lz(0)', 'projective(M)'), ('lz(0)', 'free(M)'),
                 ('commutative', 'projective(M)'), ('commutative', 'free(M)'))

CLASS_CASES = ('lz(N)', 'ifp(N)', 'symmetric(N)', 'semi_symmetric(N)')

REGISTRY: Tuple[Claim, ...] = (
    Claim('C1', 'nil radical of commutative rings', '√I = β(I)', Scope.IDEAL, (('commutative',),),
          (Equal('sqrt(I)', 'beta(I)'), Holds('prime ideals are completely prime')), ClaimMode.EQUALITY),
    Claim('C2', 'envelope inside the completely prime radical', '⟨E_M(N)⟩ ⊆ β_co(N)', Scope.SUBMODULE, ALWAYS,
          (Subset('<E(N)>', 'beta_co(N)'),)),
    Claim('C3', 'envelope of a completely semiprime submodule', 'E_M(N) = N', Scope.SUBMODULE, (('cs(N)',),),
          (Equal('E(N)', 'N'),), ClaimMode.EQUALITY),
    Claim('C4', 'envelope is a submodule', 'E_M(N) is a submodule of M', Scope.SUBMODULE, (('cs(N)',),),
          (Holds('E(N) is a submodule'),)),
    Claim('C5', 'envelopes of fully completely semiprime modules', 'every E_M(N) is a submodule', Scope.MODULE,
          (('all_cs(M)',),), (ForEach('L', (), (Holds('E(L) is a submodule'),)),)),
    Claim('C6', 'envelope of the prime radical', 'E_M(β(M)) = β(M)', Scope.MODULE, (('2primal(M)',),),
          (Equal('E(beta(0))', 'beta(0)'),), ClaimMode.EQUALITY),
    Claim('C7', 'envelopes modulo a 2-primal submodule', '⟨E_M(β(N))⟩/N = β(N)/N', Scope.SUBMODULE,
          (('2primal(N)',),), (Equal('<E(beta(N))>', 'beta(N)'), Subset('<E(N)>', 'beta(N)')), ClaimMode.EQUALITY),
    Claim('C8', 'radical formula at 2-primal submodules', 'β(N) = N ⇒ ⟨E_M(N)⟩ = β(N)', Scope.SUBMODULE,
          (('2primal(N)',),),
          (When(('beta(N)=N',), Holds('rf(N)')), *iff('beta(N)=N', 'beta_co(N)=N'),
           *iff('beta_co(N)=N', 'beta_co(M/N)=0', quotient=True))),
    Claim('C9', 'radical formula at (completely) prime submodules', 'P satisfies the radical formula',
          Scope.SUBMODULE, (('commutative', 'prime(N)'), ('cp(N)',)), (Holds('rf(N)'),)),
    Claim('C10', 'radical formula from radical equations', 'β(M) = β(R)M or β_co(M) = β_co(R)M', Scope.MODULE,
          (('2primal(M)', 'beta(M)=beta(R)M'), ('2primal(M)', 'beta_co(M)=beta_co(R)M')), (Holds('rf(0)'),)),
    Claim('C11', 'radical equations of projective modules', 'β(M) = β(R)M and β_co(M) = β_co(R)M', Scope.MODULE,
          (('projective(M)',),), (Equal('beta(0)', 'beta(R)M'), Equal('beta_co(0)', 'beta_co(R)M')),
          ClaimMode.EQUALITY),
    Claim('C12', 'chart of implications', 'reduced ⇒ symmetric ⇒ IFP ⇒ semi-symmetric ⇒ 2-primal', Scope.SUBMODULE,
          ALWAYS, (Holds('chart chain(N)'),)),
    Claim('C13', 'zero submodule of free and projective modules', 'the zero submodule satisfies the radical formula',
          Scope.MODULE, ZERO_RF_CASES, (Holds('rf(0)'),)),
    Claim('C14', 'radical formula at self-radical submodules', 'β(N) = N ⇒ N satisfies the radical formula',
          Scope.SUBMODULE, tuple((c, 'beta(N)=N') for c in CLASS_CASES), (Holds('rf(N)'),)),
    Claim('C15', 'transfer along the canonical epimorphism', 'RF at N ⇔ RF at φ(N) for N ⊇ Ker φ', Scope.SUBMODULE,
          ALWAYS, (ForEach('L', ('N<=L',), iff('rf(L)', 'rf(L/N)', quotient=True)),), quotient=True),
    Claim('C16', 'modules satisfying the radical formula', 'M satisfies the radical formula', Scope.MODULE,
          (*ZERO_RF_CASES, ('2primal(M)', 'projective(M)')), (Holds('rf(M)'),), corpus_relative=True),
    Claim('C17', 'modules over semisimple rings', 'M satisfies the radical formula', Scope.MODULE,
          (('semisimple(R)', '2primal(M)'), ('semisimple(R)', 'commutative')), (Holds('rf(M)'),),
          corpus_relative=True),
    Claim('C18', 'absolutely radical rings', 'N satisfies the radical formula', Scope.SUBMODULE,
          tuple(('absolutely_radical(R)', c) for c in CLASS_CASES), (Holds('rf(N)'),), corpus_relative=True),
    Claim('C19', 'the reverse inclusion', 'β_co(N) ⊆ ⟨E_M(N)⟩', Scope.SUBMODULE,
          (('inclusion(N)', 'rf(N)'), ('inclusion(N)', '2primal(N)')),
          (When(('rf(N)',), Holds('2primal(N)')), When(('2primal(N)',), Holds('rf(0 in M/N)', quotient=True)))),
    Claim('C20', 'radical formula iff 2-primal', 'RF at 0 ⇔ M is 2-primal', Scope.MODULE, (('inclusion(0)',),),
          iff('rf(0)', '2primal(M)')),
    Claim('C21', 'sufficient conditions for the reverse inclusion', 'β_co(N) = N or ⟨E_M(N)⟩ = M',
          Scope.SUBMODULE, (('beta_co(N)=N',), ('<E(N)>=M',)), (Subset('beta_co(N)', '<E(N)>'),)),
    Claim('C22', 'failure of the reverse inclusion', 'β_co(M) ⊄ ⟨E_M(0)⟩', Scope.MODULE, ALWAYS,
          (Subset('beta_co(0)', '<E(0)>'),), ClaimMode.EXISTENCE),
    Claim('C23', 'reduced modules', 'am = 0 ⇒ Rm ∩ aM = 0', Scope.MODULE, ALWAYS,
          (Holds('reduced readings agree'),), ClaimMode.EQUALITY),
    Claim('C24', 'commutative rings', '⟨E_M(N)⟩ ⊆ β(N) and E_M(β(N)) = β(N)', Scope.SUBMODULE, (('commutative',),),
          (Subset('<E(N)>', 'beta(N)'), Equal('E(beta(N))', 'beta(N)'), When(('beta(N)=N',), Holds('rf(N)')))),
    Claim('C25', 'nilpotents as an envelope', '√0 = E_M(0) for M = R', Scope.MODULE,
          (('commutative', 'regular(M)'),), (Equal('sqrt(0) in M', 'E(0)'),), ClaimMode.EQUALITY),
    Claim('C26', 'radical of a 2-primal ideal', '√I is an ideal', Scope.IDEAL, (('proper(I)', '2primal(I)'),),
          (Holds('sqrt(I) is an ideal'), Equal('sqrt(I)', 'beta(I)'))),
    Claim('C27', 'ring invariants', 'β(R) ⊆ β_co(R), β(R) ⊆ √0', Scope.RING, ALWAYS,
          (Subset('beta(R)', 'beta_co(R)'), Subset('beta(R)', 'sqrt(0)'), *iff('2primal(R)', 'beta_co(R)=beta(R)'),
           Holds('completely prime ideals are prime'), When(('commutative',), Holds('prime ideals are completely prime')),
           Holds('coset maps are homomorphisms'))),
    Claim('C28', 'primality lattice', 'completely prime ⇒ prime ⇒ semiprime', Scope.SUBMODULE, (('proper(N)',),),
          (When(('cp(N)',), Holds('prime(N)')), When(('prime(N)',), Holds('semiprime(N)')),
           When(('cp(N)',), Holds('cs(N)')), When(('cs(N)',), Holds('semiprime(N)')),
           When(('commutative', 'prime(N)'), Holds('cp(N)')), When(('commutative', 'semiprime(N)'), Holds('cs(N)')),
           Holds('prime tests agree(N)'), Subset('beta(N)', 'beta_co(N)'),
           *iff('2primal(N)', '2primal(N) by quotient', quotient=True))),
    Claim('C29', 'colon sets of prime submodules', '(P:N) = (P:M) is a prime ideal', Scope.SUBMODULE,
          (('prime(N)',), ('cp(N)',)),
          (When(('prime(N)',), ForEach('L', ('!L<=N',), (Equal('colon(N,L)', 'colon(N,M)'),))),
           When(('prime(N)',), Holds('(N:M) prime ideal')),
           When(('cp(N)',), ForEach('x', ('!x in N',), (Equal('colon(N,{x})', 'colon(N,M)'),))),
           When(('cp(N)',), Holds('(N:M) completely prime ideal')))),
)

CLAIMS: Dict[str, Claim] = {c.id: c for c in REGISTRY}

# observed, never asserted: the colon over submodules already inside P
OBSERVATIONS: Dict[str, Tuple[Relation, ...]] = {
    'C29': (When(('prime(N)',), ForEach('L', ('L<=N',), (Equal('colon(N,L)', 'colon(N,M)'),))),)
}


def select_claims(ids: Optional[List[str]]) -> List[Claim]:
    if not ids:
        return sorted(REGISTRY, key=Claim.sort_key)

    return sorted((CLAIMS[i] for i in ids), key=Claim.sort_key)


def targets(claim: Claim, inst: Instance) -> List[Params]:
    if claim.scope in (Scope.RING, Scope.MODULE):
        return [{}]
    elif claim.scope == Scope.IDEAL:
        return [{'I': i.members.bits} for i in enumerate_ideals(inst.ring)]
    elif inst.submodule is not None:
        return [{'N': inst.submodule.members.bits}]

    return [{'N': n.members.bits} for n in enumerate_submodules(inst.module)]


def reverify(witness: Witness, inst: Instance) -> bool:
    """
    Recomputes a witness with the primitive operations.
    :return: True when the recorded relation is still violated under its premises
    """
    params = witness.params

    if not holds_all(witness.premises, inst, params):
        return False

    if witness.relation == 'fact':
        return not fact(witness.lhs, inst, params)

    left, right = SETS[witness.lhs](inst, params), SETS[witness.rhs](inst, params)

    if witness.relation == 'subset':
        return witness.element in left and witness.element not in right

    return (witness.element in left) != (witness.element in right)
