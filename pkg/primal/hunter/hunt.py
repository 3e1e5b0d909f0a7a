import asyncio
import time
from concurrent.futures import ProcessPoolExecutor
from logging import Logger
from typing import Optional, List, Dict, Any, Tuple

from primal.algebra.build import Builder
from primal.common.config import EngineConfig
from primal.common.errors import AlgebraError, SizeLimitError
from primal.hunter.corpus import CorpusSpec, generate_corpus
from primal.hunter.targets import HuntTarget, TARGETS, Bundle
from primal.suite.model import Instance

Outcome = Tuple[str, Optional[Bundle]]  # status ('examined', 'skipped' or 'error'), witness bundle


class Findings:

    def __init__(self, target: HuntTarget, spec: Optional[CorpusSpec], corpus_size: int, budget: Optional[int]):
        self.target = target
        self.spec = spec
        self.corpus_size = corpus_size
        self.budget = budget
        self.hits: List[Dict[str, Any]] = []
        self.examined = 0
        self.skipped = 0
        self.errors = 0

    def to_dict(self) -> dict:
        return {'target': self.target.id, 'description': self.target.description,
                'spec': self.spec.to_dict() if self.spec else None, 'corpus_size': self.corpus_size,
                'budget': self.budget, 'examined': self.examined, 'skipped': self.skipped, 'errors': self.errors,
                'hits': len(self.hits)}

    def records(self) -> List[dict]:
        """
        Summary first, then one record per hit.
        """
        return [self.to_dict(), *({'target': self.target.id, **h} for h in self.hits)]


def evaluate(target: HuntTarget, inst: Instance) -> Outcome:
    try:
        return 'examined', target.evaluate(inst.module)
    except SizeLimitError:
        return 'skipped', None
    except AlgebraError as e:
        return 'error', {'error': f'{e.__class__.__name__}: {e.message}'}


def _evaluate_descriptor(target_id: str, descriptor: Dict[str, Any], config: EngineConfig) -> Outcome:
    EngineConfig.use(config)
    module, submodule = Builder().instance_parts(descriptor)
    return evaluate(TARGETS[target_id], Instance(module, submodule))


async def hunt(target: HuntTarget, spec: Optional[CorpusSpec], budget: Optional[int], logger: Logger,
               workers: int = 1, corpus: Optional[List[Instance]] = None) -> Findings:
    """
    Evaluates the target on the first 'budget' instances of the corpus (all of them when no budget is given),
    in instance ID order. Hits never depend on the number of workers.
    """
    if corpus is None:
        corpus = generate_corpus(spec if spec else CorpusSpec.default(), logger)

    instances = sorted(corpus, key=lambda i: i.id)
    selected = instances[:budget] if budget is not None else instances
    findings = Findings(target, spec, len(instances), budget)
    started = time.perf_counter()

    logger.info(f"Hunting {target.id} on {len(selected)} of {len(instances)} instances (workers: {workers})")

    if workers <= 1 or len(selected) <= 1:
        outcomes = [evaluate(target, inst) for inst in selected]
    else:
        loop = asyncio.get_running_loop()
        config = EngineConfig.instance()

        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = await asyncio.gather(*(loop.run_in_executor(executor, _evaluate_descriptor, target.id,
                                                                   inst.descriptor(), config)
                                              for inst in selected))

    for inst, (status, bundle) in zip(selected, outcomes):
        if status == 'skipped':
            findings.skipped += 1
            continue

        if status == 'error':
            findings.errors += 1
            logger.warning(f"{target.id} could not be evaluated on {inst.label}: {bundle['error']}")
            continue

        findings.examined += 1

        if bundle is not None:
            logger.debug(f'{target.id} hit: {inst.label}')
            findings.hits.append({'instance': inst.id, 'label': inst.label, 'descriptor': inst.descriptor(),
                                  'witness': bundle})

    logger.info(f'{target.id}: {len(findings.hits)} hits among {findings.examined} instances examined '
                f'({time.perf_counter() - started:.2f}s)')
    return findings


def replay(hit: Dict[str, Any], target_id: Optional[str] = None) -> bool:
    """
    Rebuilds a hit from its descriptor alone and re-evaluates its target single-threaded.
    :return: whether the same witness bundle comes out
    """
    module, submodule = Builder().instance_parts(hit['descriptor'])
    status, bundle = evaluate(TARGETS[target_id if target_id else hit['target']], Instance(module, submodule))
    return status == 'examined' and bundle == hit['witness']
