import json
from datetime import datetime
from collections import Counter
from io import StringIO
from typing import List, Iterable, Dict

import aiofiles

from primal import __app_name__, __version__
from primal.common.encoder import CustomJSONEncoder
from primal.suite.claims import CLAIMS
from primal.suite.model import SuiteReport, Verdict, Instance, QUOTIENT_SKIPPED

COLUMNS = (Verdict.HOLDS, Verdict.VACUOUS, Verdict.FAILED, Verdict.SKIPPED, Verdict.ERROR)


def header_line(command: str) -> str:
    """
    The only line of a text report that changes between identical runs.
    """
    return f'# {__app_name__} {__version__} {command} {datetime.now().isoformat(timespec="seconds")}\n'


def strip_header(text: str) -> str:
    return text.split('\n', 1)[1] if text.startswith('#') else text


def to_record(obj: object) -> str:
    return json.dumps(obj, cls=CustomJSONEncoder, sort_keys=True, ensure_ascii=False)


def suite_text(report: SuiteReport, verbose: bool = False) -> str:
    labels: Dict[str, Instance] = {i.id: i for i in report.instances}
    tallies = report.tallies
    out = StringIO()

    out.write(f"corpus: {to_record(report.corpus)}\n\n")
    out.write(f"{'claim':<6} {' '.join(f'{v.value:>8}' for v in COLUMNS)}  statement\n")

    for cid in report.claim_ids:
        claim = CLAIMS[cid]
        counts = ' '.join(f'{tallies[cid][v.value]:>8}' for v in COLUMNS)
        relative = ' (corpus-relative)' if claim.corpus_relative else ''
        out.write(f'{cid:<6} {counts}  {claim.title}: {claim.statement}{relative}\n')

    out.write(f"\ntotals: {', '.join(f'{k}={v}' for k, v in report.totals.items())}\n")

    vacuous = report.vacuous_everywhere()
    out.write(f"vacuous everywhere: {', '.join(vacuous) if vacuous else 'none'}\n")

    hits = [r for r in report.results if r.witness and r.verdict == Verdict.HOLDS]
    if hits:
        out.write('\nexistence hits:\n')
        for r in hits:
            out.write(f'  {r.claim_id} on {r.instance_id} ({labels[r.instance_id].label}): {r.witness.describe()}\n')

    failures = report.failures
    if failures:
        out.write('\nfailures:\n')
        for r in failures:
            inst = labels[r.instance_id]
            out.write(f'  {r.claim_id} {r.verdict.value} on {r.instance_id} ({inst.label})\n')

            if r.witness:
                out.write(f'    witness: {r.witness.describe()}\n')

            if r.reason:
                out.write(f'    reason: {r.reason}\n')

            out.write(f'    recipe: {to_record(inst.descriptor())}\n')

    skipped = [r for r in report.results if r.verdict == Verdict.SKIPPED]
    partial = sum(1 for r in report.results if QUOTIENT_SKIPPED in r.notes)
    if skipped or partial:
        out.write('\nskipped:\n')
        for r in skipped:
            out.write(f'  {r.claim_id} on {r.instance_id} ({labels[r.instance_id].label}): {r.reason}\n')

        if partial:
            out.write(f'  {QUOTIENT_SKIPPED} in {partial} results\n')

    notes = [(r, n) for r in report.results for n in r.notes if n.startswith('observation')]
    if notes and verbose:
        out.write('\nobservations:\n')
        for r, note in notes:
            out.write(f'  {r.claim_id} on {r.instance_id}: {note}\n')
    elif notes:
        seen = Counter(r.claim_id for r, _ in notes)
        per_claim = ', '.join(f'{c}={seen[c]}' for c in report.claim_ids if c in seen)
        out.write(f'\nobservations: {per_claim} (listed with --verbose)\n')

    out.seek(0)
    return out.read()


def result_records(report: SuiteReport, timing: bool = False) -> List[str]:
    """
    One JSON line per claim result. Timings are left out by default so equal runs write equal files.
    """
    return [to_record(r.to_dict(timing)) for r in report.results]


async def write_lines(file_path: str, lines: Iterable[str]):
    async with aiofiles.open(file_path, 'w+') as f:
        await f.write(''.join(f'{line}\n' for line in lines))


async def write_text(file_path: str, text: str):
    async with aiofiles.open(file_path, 'w+') as f:
        await f.write(text)
