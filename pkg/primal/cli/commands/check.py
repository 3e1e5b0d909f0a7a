import sys
from argparse import Namespace
from io import StringIO
from logging import Logger
from typing import Dict, Any, List, Optional

from primal.algebra.ideal import enumerate_ideals, is_2primal_ring, ring_prime_radical, \
    ring_completely_prime_radical, nilpotent_elements, jacobson_radical
from primal.algebra.module import Module, Submodule
from primal.algebra.submodule import enumerate_submodules, generator_certificate
from primal.cli.command import CLICommand, EXIT_OK, EXIT_INPUT
from primal.cli.ingest import RunConfig
from primal.common.errors import SizeLimitError
from primal.suite.report import header_line, to_record, write_lines, write_text
from primal.theory.classes import classify, reduced_characterizations
from primal.theory.primal import is_prime_submodule, is_completely_prime_submodule, is_semiprime_submodule, \
    is_completely_semiprime_submodule, prime_radical, completely_prime_radical, envelope, \
    satisfies_radical_formula, is_2primal_submodule, is_2primal_module, module_satisfies_rf, is_prime_module, \
    is_completely_prime_module, is_semiprime_module, is_completely_semiprime_module


def ring_summary(m: Module) -> Dict[str, Any]:
    r = m.ring
    return {'label': r.label, 'order': r.order, 'commutative': r.is_commutative, 'ideals': len(enumerate_ideals(r)),
            'beta': ring_prime_radical(r), 'beta_co': ring_completely_prime_radical(r),
            'nilpotents': nilpotent_elements(r), 'jacobson': jacobson_radical(r).members,
            'two_primal': is_2primal_ring(r)}


def module_summary(m: Module) -> Dict[str, Any]:
    zero = m.zero_submodule()
    return {'label': m.label, 'order': m.order, 'tags': sorted(m.tags), 'submodules': len(enumerate_submodules(m)),
            'beta': prime_radical(zero).members, 'beta_co': completely_prime_radical(zero).members,
            'envelope': envelope(zero).raw, 'generated_envelope': envelope(zero).generated.members,
            'radical_formula_zero': satisfies_radical_formula(zero), 'radical_formula': module_satisfies_rf(m),
            'two_primal': is_2primal_module(m), 'prime': is_prime_module(m),
            'completely_prime': is_completely_prime_module(m), 'semiprime': is_semiprime_module(m),
            'completely_semiprime': is_completely_semiprime_module(m),
            'reduced_readings': list(reduced_characterizations(m))}


def submodule_summary(n: Submodule) -> Dict[str, Any]:
    env = envelope(n)
    summary = {'members': n.members, 'generators': generator_certificate(n), 'proper': n.is_proper(),
               'beta': prime_radical(n).members, 'beta_co': completely_prime_radical(n).members,
               'envelope': env.raw, 'generated_envelope': env.generated.members,
               'envelope_is_submodule': env.is_submodule(), 'radical_formula': satisfies_radical_formula(n),
               'two_primal': is_2primal_submodule(n), 'classes': classify(n).flags()}

    if n.is_proper():
        summary.update({'prime': is_prime_submodule(n), 'completely_prime': is_completely_prime_submodule(n),
                        'semiprime': is_semiprime_submodule(n),
                        'completely_semiprime': is_completely_semiprime_submodule(n)})

    return summary


def _flag(value: Optional[bool]) -> str:
    return '-' if value is None else ('yes' if value else 'no')


def analysis_text(ring: Dict[str, Any], module: Dict[str, Any], submodules: List[Dict[str, Any]]) -> str:
    out = StringIO()
    out.write(f"ring {ring['label']} (order {ring['order']}): commutative={_flag(ring['commutative'])} "
              f"ideals={ring['ideals']} 2-primal={_flag(ring['two_primal'])}\n")
    out.write(f"  β(R)={ring['beta']} β_co(R)={ring['beta_co']} √0={ring['nilpotents']} J(R)={ring['jacobson']}\n")
    out.write(f"module {module['label']} (order {module['order']}, tags: {','.join(module['tags']) or '-'}): "
              f"submodules={module['submodules']}\n")
    out.write(f"  prime={_flag(module['prime'])} completely prime={_flag(module['completely_prime'])} "
              f"semiprime={_flag(module['semiprime'])} completely semiprime={_flag(module['completely_semiprime'])}\n")
    out.write(f"  β(0)={module['beta']} β_co(0)={module['beta_co']} E(0)={module['envelope']} "
              f"⟨E(0)⟩={module['generated_envelope']}\n")
    out.write(f"  RF(0)={_flag(module['radical_formula_zero'])} RF(M)={_flag(module['radical_formula'])} "
              f"2-primal={_flag(module['two_primal'])} reduced readings={module['reduced_readings']}\n")

    for s in submodules:
        out.write(f"\nN={s['members']} generated by {s['generators']}\n")

        if s['proper']:
            out.write(f"  prime={_flag(s['prime'])} completely prime={_flag(s['completely_prime'])} "
                      f"semiprime={_flag(s['semiprime'])} completely semiprime={_flag(s['completely_semiprime'])}\n")

        out.write(f"  β(N)={s['beta']} β_co(N)={s['beta_co']} E(N)={s['envelope']} ⟨E(N)⟩={s['generated_envelope']}\n")
        out.write(f"  RF={_flag(s['radical_formula'])} 2-primal={_flag(s['two_primal'])} "
                  f"E(N) submodule={_flag(s['envelope_is_submodule'])}\n")
        out.write(f"  classes: {' '.join(f'{k}={_flag(v)}' for k, v in s['classes'].items())}\n")

    out.seek(0)
    return out.read()


class Check(CLICommand):

    CMD = 'check'

    def __init__(self, logger: Logger):
        super(Check, self).__init__(logger)

    def add(self, commands: object):
        cmd = commands.add_parser(self.CMD, help='Full analysis of one module: lattice, radicals, envelopes, radical '
                                                 'formula, 2-primality and regularity classes')
        self.add_common_arguments(cmd, config_required=True)
        cmd.add_argument('--out', type=str, help='Writes the analysis as JSON lines to this file')

    def get_command(self) -> str:
        return self.CMD

    async def execute(self, args: Namespace, config: RunConfig) -> int:
        inst = config.build_instance()
        m = inst.module
        self._log.debug(f'Analysing {inst.label}')

        try:
            subs = [inst.submodule] if inst.submodule is not None else enumerate_submodules(m)
            ring, module = ring_summary(m), module_summary(m)
        except SizeLimitError as e:
            self._log.error(f'{m.label} is too large to analyse: {e.message}')
            return EXIT_INPUT

        submodules = [submodule_summary(n) for n in subs]
        text = header_line(self.CMD) + analysis_text(ring, module, submodules)
        sys.stdout.write(text)

        if config.report:
            await write_text(config.report, text)

        out = args.out if args.out else config.records
        if out:
            records = [{'ring': ring}, {'module': module}, *({'submodule': s} for s in submodules)]
            await write_lines(out, (to_record(r) for r in records))
            self._log.info(f"Analysis records written to '{out}'")

        return EXIT_OK
