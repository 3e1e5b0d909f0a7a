from typing import Optional, Dict, List, Any, Tuple

from primal.algebra.module import Module, Submodule, regular_module
from primal.algebra.ring import Ring
from primal.common.digest import table_digest
from primal.common.model import CustomEnum

QUOTIENT_SKIPPED = 'quotient relations skipped'


class Verdict(CustomEnum):
    HOLDS = 'holds'
    VACUOUS = 'vacuous'
    FAILED = 'FAILED'
    SKIPPED = 'skipped'
    ERROR = 'error'


class ClaimMode(CustomEnum):
    IMPLICATION = 'implication'
    EQUALITY = 'equality'
    EXISTENCE = 'existence'


class Scope(CustomEnum):
    RING = 'ring'
    IDEAL = 'ideal'
    MODULE = 'module'
    SUBMODULE = 'submodule'


class Instance:
    """
    A ring, a module over it and optionally one submodule of interest. The descriptor is a self-contained
    recipe rebuilding the same tables.
    """

    def __init__(self, module: Module, submodule: Optional[Submodule] = None, origin: str = 'config'):
        self.module = module
        self.submodule = submodule
        self.origin = origin
        self.corpus_flags: Dict[str, bool] = {}
        self._id: Optional[str] = None

    @classmethod
    def of_ring(cls, ring: Ring, origin: str = 'config') -> "Instance":
        return cls(regular_module(ring), origin=origin)

    @property
    def ring(self) -> Ring:
        return self.module.ring

    @property
    def id(self) -> str:
        if self._id is None:
            parts = [self.module.digest]
            if self.submodule is not None:
                parts.append(self.submodule.members.bits)

            self._id = table_digest(parts)[:16]

        return self._id

    @property
    def label(self) -> str:
        return self.module.label if self.submodule is None else f'{self.submodule.members} in {self.module.label}'

    def descriptor(self) -> Dict[str, Any]:
        return {'module': self.module.recipe,
                'submodule': self.submodule.members.to_list() if self.submodule is not None else None}

    def to_dict(self) -> dict:
        return {'id': self.id, 'label': self.label, 'order': self.module.order, 'ring_order': self.ring.order,
                'tags': sorted(self.module.tags), 'origin': self.origin}

    def __repr__(self):
        return f'Instance({self.id}, {self.label})'


class Witness:
    """
    A violated relation, recorded by name so it can be recomputed: 'subset' and 'equal' name two sets,
    'fact' names a boolean that should hold. 'params' binds the names of the target and of any inner
    quantified object (bit vectors or element indices); 'premises' are the facts that made the relation apply.
    """

    def __init__(self, relation: str, lhs: str, rhs: Optional[str], params: Dict[str, int],
                 element: Optional[int] = None, premises: Tuple[str, ...] = (), detail: Optional[Any] = None):
        self.relation = relation
        self.lhs = lhs
        self.rhs = rhs
        self.params = params
        self.element = element
        self.premises = premises
        self.detail = detail

    def describe(self) -> str:
        bound = ', '.join(f'{k}={v}' for k, v in sorted(self.params.items()))
        when = f" when {' and '.join(self.premises)}" if self.premises else ''

        if self.relation == 'fact':
            what = f'{self.lhs} is false'
        else:
            symbol = '⊆' if self.relation == 'subset' else '='
            what = f'{self.lhs} {symbol} {self.rhs} fails at element {self.element}'

        return f"{what}{when}{f' [{bound}]' if bound else ''}{f' ({self.detail})' if self.detail else ''}"

    def to_dict(self) -> dict:
        return {'relation': self.relation, 'lhs': self.lhs, 'rhs': self.rhs, 'params': self.params,
                'element': self.element, 'premises': list(self.premises), 'detail': self.detail}

    def __eq__(self, other):
        return isinstance(other, Witness) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return f'Witness({self.describe()})'


class ClaimResult:

    def __init__(self, claim_id: str, instance_id: str, verdict: Verdict, witness: Optional[Witness] = None,
                 micros: int = 0, reason: Optional[str] = None, evaluations: int = 0, notes: Optional[List[str]] = None):
        self.claim_id = claim_id
        self.instance_id = instance_id
        self.verdict = verdict
        self.witness = witness
        self.micros = micros
        self.reason = reason
        self.evaluations = evaluations
        self.notes = notes if notes else []

    def is_failure(self) -> bool:
        return self.verdict in (Verdict.FAILED, Verdict.ERROR)

    def to_dict(self, timing: bool = True) -> dict:
        record = {'claim': self.claim_id, 'instance': self.instance_id, 'verdict': self.verdict,
                  'witness': self.witness, 'reason': self.reason, 'evaluations': self.evaluations,
                  'notes': self.notes}

        if timing:
            record['micros'] = self.micros

        return record

    def __repr__(self):
        return f'ClaimResult({self.claim_id}, {self.instance_id}, {self.verdict.value})'


class SuiteReport:

    def __init__(self, corpus: Dict[str, Any], instances: List[Instance], results: List[ClaimResult],
                 claim_ids: List[str], wall_time: float = 0.0):
        self.corpus = corpus
        self.instances = instances
        self.results = results
        self.claim_ids = claim_ids
        self.wall_time = wall_time

    @property
    def tallies(self) -> Dict[str, Dict[str, int]]:
        tallies = {c: {v.value: 0 for v in Verdict} for c in self.claim_ids}

        for r in self.results:
            tallies[r.claim_id][r.verdict.value] += 1

        return tallies

    @property
    def failures(self) -> List[ClaimResult]:
        return [r for r in self.results if r.is_failure()]

    @property
    def totals(self) -> Dict[str, int]:
        totals = {v.value: 0 for v in Verdict}

        for r in self.results:
            totals[r.verdict.value] += 1

        return totals

    def vacuous_everywhere(self) -> List[str]:
        """
        Claims that were never exercised: no instance satisfied the hypothesis.
        """
        tallies = self.tallies
        return [c for c in self.claim_ids if self.instances and tallies[c][Verdict.HOLDS.value] == 0
                and tallies[c][Verdict.FAILED.value] == 0 and tallies[c][Verdict.ERROR.value] == 0]

    def is_clean(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {'corpus': self.corpus, 'instances': len(self.instances), 'tallies': self.tallies,
                'totals': self.totals, 'failures': [f.to_dict(timing=False) for f in self.failures],
                'vacuous_everywhere': self.vacuous_everywhere()}
