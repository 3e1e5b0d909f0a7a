import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from logging import Logger
from typing import List, Optional, Dict, Any, Tuple

from primal.algebra.build import Builder
from primal.common.config import EngineConfig
from primal.common.errors import AlgebraError, SizeLimitError
from primal.suite.claims import Claim, Relation, OBSERVATIONS, targets, reverify, select_claims
from primal.suite.model import Instance, ClaimResult, Verdict, ClaimMode, SuiteReport, Witness, QUOTIENT_SKIPPED
from primal.theory.primal import is_self_radical_module

ABSOLUTELY_RADICAL_CLAIMS = ('C18',)


def _first_witness(relations: Tuple[Relation, ...], inst: Instance, params: Dict[str, int]) -> Optional[Witness]:
    for relation in relations:
        for witness in relation.check(inst, params):
            return witness


def _observe(claim: Claim, inst: Instance) -> List[str]:
    notes = []

    for params in targets(claim, inst):
        if claim.hypothesis_holds(inst, params):
            witness = _first_witness(OBSERVATIONS[claim.id], inst, params)

            if witness:
                notes.append(f'observation: {witness.describe()}')
                break

    return notes


def check_claim(claim: Claim, inst: Instance, quotient_max: Optional[int] = None) -> ClaimResult:
    """
    Evaluates 'claim' on every target of 'inst' ('vacuous' when no target satisfies the hypothesis).
    Existence claims hold on the instances where their relation fails.
    """
    if quotient_max is None:
        quotient_max = EngineConfig.instance().quotient_claim_max

    started = time.perf_counter()
    large = inst.module.order > quotient_max

    def _done(verdict: Verdict, **kwargs) -> ClaimResult:
        micros = int((time.perf_counter() - started) * 1_000_000)
        return ClaimResult(claim.id, inst.id, verdict, micros=micros, **kwargs)

    if claim.quotient and large:
        return _done(Verdict.SKIPPED, reason=f'module order {inst.module.order} exceeds the quotient claim bound '
                                             f'({quotient_max})')

    relations = tuple(r for r in claim.relations if not (large and r.quotient))
    notes = [QUOTIENT_SKIPPED] if len(relations) < len(claim.relations) else []
    evaluations, witness = 0, None

    try:
        for params in targets(claim, inst):
            if not claim.hypothesis_holds(inst, params):
                continue

            evaluations += 1
            witness = _first_witness(relations, inst, params)

            if witness:
                break

        if evaluations and claim.id in OBSERVATIONS:
            notes.extend(_observe(claim, inst))

        if claim.mode == ClaimMode.EXISTENCE:
            verdict = Verdict.HOLDS if witness else Verdict.VACUOUS
            return _done(verdict, witness=witness, evaluations=evaluations, notes=notes)

        if witness:
            if claim.hypothesis_holds(inst, witness.params) and reverify(witness, inst):
                return _done(Verdict.FAILED, witness=witness, evaluations=evaluations, notes=notes)

            return _done(Verdict.ERROR, witness=witness, evaluations=evaluations, notes=notes,
                         reason='witness does not re-verify')

        return _done(Verdict.HOLDS if evaluations else Verdict.VACUOUS, evaluations=evaluations, notes=notes)
    except SizeLimitError as e:
        return _done(Verdict.SKIPPED, reason=e.message, evaluations=evaluations)
    except AlgebraError as e:
        return _done(Verdict.ERROR, reason=f'{e.__class__.__name__}: {e.message}', evaluations=evaluations)


def check_instance(inst: Instance, claims: List[Claim], quotient_max: Optional[int] = None) -> List[ClaimResult]:
    return [check_claim(c, inst, quotient_max) for c in claims]


def _check_descriptor(descriptor: Dict[str, Any], origin: str, flags: Dict[str, bool], claim_ids: List[str],
                      config: EngineConfig) -> List[ClaimResult]:
    """
    Worker entry point: rebuilds the instance from its descriptor in the worker process.
    """
    EngineConfig.use(config)
    module, submodule = Builder().instance_parts(descriptor)
    inst = Instance(module, submodule, origin)
    inst.corpus_flags.update(flags)
    return check_instance(inst, select_claims(claim_ids), config.quotient_claim_max)


def absolutely_radical_rings(corpus: List[Instance], logger: Optional[Logger] = None) -> Dict[str, bool]:
    """
    For every ring of the corpus, whether each submodule of each corpus module over it is its own prime radical.
    Modules too large to enumerate make the ring unverifiable (False).
    """
    flags = {}

    for inst in corpus:
        digest = inst.ring.digest

        if flags.get(digest, True):
            try:
                flags[digest] = is_self_radical_module(inst.module)
            except SizeLimitError:
                flags[digest] = False

    if logger:
        logger.debug(f'Absolutely radical rings in the corpus: {sum(flags.values())}/{len(flags)}')

    return flags


async def run_suite(corpus: List[Instance], claim_ids: Optional[List[str]], logger: Logger,
                    workers: int = 1, corpus_info: Optional[Dict[str, Any]] = None) -> SuiteReport:
    started = time.perf_counter()
    claims = select_claims(claim_ids)
    ids = [c.id for c in claims]
    instances = sorted(corpus, key=lambda i: i.id)
    config = EngineConfig.instance()

    if any(c in ids for c in ABSOLUTELY_RADICAL_CLAIMS):
        flags = absolutely_radical_rings(instances, logger)

        for inst in instances:
            inst.corpus_flags['absolutely_radical'] = flags[inst.ring.digest]

    logger.info(f'Checking {len(claims)} claims on {len(instances)} instances (workers: {workers})')
    results: List[ClaimResult] = []

    if workers <= 1 or len(instances) <= 1:
        for idx, inst in enumerate(instances):
            logger.debug(f'[{idx + 1}/{len(instances)}] {inst.label}')
            results.extend(check_instance(inst, claims, config.quotient_claim_max))
    else:
        loop = asyncio.get_running_loop()

        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = await asyncio.gather(*(loop.run_in_executor(executor, _check_descriptor, inst.descriptor(),
                                                                  inst.origin, dict(inst.corpus_flags), ids, config)
                                             for inst in instances))

        for inst, batch in zip(instances, batches):
            for result in batch:
                result.instance_id = inst.id

            results.extend(batch)

    report = SuiteReport(corpus={**(corpus_info or {}), 'instances': len(instances)}, instances=instances,
                         results=results, claim_ids=ids, wall_time=time.perf_counter() - started)

    logger.info(f"Suite finished in {report.wall_time:.2f}s: "
                f"{', '.join(f'{k}={v}' for k, v in report.totals.items())}")
    return report
