#!/usr/bin/env python

from fractions import Fraction
from math import isqrt

import mpmath

from spectral_sumrules.exactnum import as_rational, rational_str, PiPower
from spectral_sumrules.errors import GrowthConditionViolated
from spectral_sumrules.spectrum import CrossSpace, cross_parameters, cross_eigenvalue, cross_counting
from spectral_sumrules.torus import DualVector, norm_sq
from spectral_sumrules.sumrule import (gap_indices, batch_check, spectrum_gap_condition, recurrence_counts,
                                       shifted_sumrule_check, orthogonal_pair_check, CheckReport)
from spectral_sumrules.frames import first_shell, frame_check, addition_formula_check, verify_sum_rule_identity, sign_bound_check
from spectral_sumrules.riesz import r2_monotonicity_check, weyl_bound_check, weyl_ratio, default_z_grid, riesz_mean
from spectral_sumrules.cli import source
from spectral_sumrules.cli.emit import stamp, render, write, json_lines

import logging
logger = logging.getLogger(__name__)

registry = {}
r'''Every kind of verification, by name.'''

class Verification:
    r'''
    A kind of ``verify``.

    A subclass registers itself by naming itself, ``class Kind(Verification, name='kind')``.
    It declares its options in :meth:`add_arguments` and returns a list of JSON-ready records, each with a ``holds`` key, from :meth:`run`.
    '''

    help = ''

    def __init_subclass__(cls, name=None, **kwargs):
        super().__init_subclass__(**kwargs)
        if name is not None:
            cls.name = name
            registry[name] = cls

    @staticmethod
    def add_arguments(parser):
        pass

    def __init__(self, args):
        self.args = args

    def run(self):
        raise NotImplementedError()

    def points(self, records):
        r'''The ``(x, y)`` plot data; by default the gap index against 1 or 0 for the verdict.'''
        return [(record.get('N', i), int(record['holds'])) for i, record in enumerate(records)]

def _gaps(args):
    parser_N = getattr(args, 'N', None)
    if parser_N:
        return [int(N) for N in parser_N.split(',')]
    return None

class _Quadratic(Verification):

    kind = None

    @staticmethod
    def add_arguments(parser):
        source.add_arguments(parser)
        parser.add_argument('--nmax', type=int, default=20, help='Check every gap index up to this.')
        parser.add_argument('--N', type=str, default=None, help='Comma-separated gap indices instead of --nmax.')

    def run(self):
        args = self.args
        Ns = _gaps(args)
        N_max = max(Ns) if Ns else args.nmax
        s = source.spectrum(args, N=N_max)
        d = source.dimension(args)
        if not Ns:
            Ns = gap_indices(s, N_max)
        return [report.to_json() for report in batch_check(s, d, Ns, self.kind, getattr(args, 'lambda1', None))]

class Identity(_Quadratic, name='identity'):
    help = 'P_N = Q_N at every gap index.'
    kind = 'identity'

class Inequality(_Quadratic, name='inequality'):
    help = 'P_N <= Q_N between consecutive eigenvalues at every gap index.'
    kind = 'inequality'

class Condition(Verification, name='condition'):
    help = 'N(lambda_N+1 + lambda_N) = (a+1) sum lambda_j at every gap index.'

    @staticmethod
    def add_arguments(parser):
        source.add_arguments(parser)
        parser.add_argument('--nmax', type=int, default=20)
        parser.add_argument('--a', type=as_rational, default=None, help='By default 1+4/d.')
        parser.add_argument('--h', type=as_rational, default=None, help='By default Lambda_1.')

    def run(self):
        args = self.args
        s = source.spectrum(args, N=args.nmax)
        d = source.dimension(args)
        a = args.a if args.a is not None else Fraction(d + 4, d)
        h = args.h
        if h is None:
            h = args.lambda1 if args.lambda1 is not None else s.first_positive_level()
        records = []
        for N in gap_indices(s, args.nmax):
            holds = spectrum_gap_condition(s, a, N, h)
            records.append(CheckReport('condition', holds, notes=f'a={rational_str(a)}, h={rational_str(h)}', N=N).to_json())
        return records

class Recurrence(Verification, name='recurrence'):
    help = 'Solve the counting recurrence and compare with the closed forms.'

    @staticmethod
    def add_arguments(parser):
        which = parser.add_mutually_exclusive_group(required=True)
        which.add_argument('--cross', type=str, metavar='FAMILY')
        which.add_argument('--levels', type=source.rational_list, help='Comma-separated Lambda_0 < Lambda_1 < ...')
        parser.add_argument('--dim', type=int)
        parser.add_argument('--lmax', type=int, default=20)
        parser.add_argument('--a', type=as_rational)
        parser.add_argument('--h', type=as_rational)
        parser.add_argument('--n0', type=int, default=1)

    def run(self):
        args = self.args
        expected = None
        if args.cross is not None:
            space = CrossSpace(args.cross, source.dimension(args))
            h, a = cross_parameters(space)
            levels = [cross_eigenvalue(space, l) for l in range(args.lmax + 2)]
            expected = [cross_counting(space, l) for l in range(args.lmax + 1)]
        else:
            if args.a is None or args.h is None:
                raise ValueError('--levels needs --a and --h.')
            levels, a, h = args.levels, args.a, args.h

        record = {'kind': 'recurrence', 'a': rational_str(a), 'h': rational_str(h)}
        try:
            counts = recurrence_counts(levels, a, h, args.n0)
        except GrowthConditionViolated as violation:
            return [{**record, 'holds': False, 'counts': [], 'notes': str(violation), 'step': violation.step}]

        values = [N for N, _ in counts]
        holds = all(integer for _, integer in counts)
        notes = 'every count is an integer' if holds else 'some counts are not integers'
        if expected is not None:
            agrees = (values == expected)
            holds = holds and agrees
            notes += '; agrees with the closed form' if agrees else '; DISAGREES with the closed form'
        return [{**record, 'holds': holds, 'counts': [rational_str(N) for N in values], 'notes': notes}]

    def points(self, records):
        return [(n, N) for n, N in enumerate(records[0]['counts'])]

class _TorusLevel(Verification):

    @staticmethod
    def add_arguments(parser):
        source.add_arguments(parser, torus_only=True)
        parser.add_argument('--nu', type=as_rational, default=None, help='The level, in units of 4pi^2; by default the first nonzero one.')

    def level(self):
        if self.args.nu is not None:
            return self.args.nu
        mod = self.args.torus
        return norm_sq(mod, first_shell(mod)[0])

class Frame(_TorusLevel, name='frame'):
    help = 'Whether an eigenspace of the torus gives a tight frame.'

    def run(self):
        report = frame_check(self.args.torus, self.level())
        return [{**report.to_json(), 'holds': report.tight}]

class Addition(_TorusLevel, name='addition'):
    help = 'The addition formulas for an eigenspace of the torus.'

    def run(self):
        mod, nu = self.args.torus, self.level()
        return [{'kind': 'addition', 'a': rational_str(mod.a), 'b_sq': rational_str(mod.b_sq), 'nu': rational_str(nu),
                 'holds': addition_formula_check(mod, nu)}]

class _SumRule(Verification):

    @staticmethod
    def add_arguments(parser):
        source.add_arguments(parser, torus_only=True)
        parser.add_argument('--q', type=DualVector.parse, required=True, metavar='N,M')
        parser.add_argument('--levels', type=int, default=1, help='How many levels form J.')
        parser.add_argument('--z', type=source.rational_list, default=None, help='Comma-separated samples, in units of 4pi^2.')

class SumRuleExact(_SumRule, name='sumrule-exact'):
    help = 'Both sides of the exact sum rule on the torus.'

    def run(self):
        args = self.args
        return [verify_sum_rule_identity(args.torus, args.q, args.levels, args.numax).to_json()]

class SignBound(_SumRule, name='sign-bound'):
    help = 'The sign of the sum rule between the top of J and the next level.'

    def run(self):
        args = self.args
        return [sign_bound_check(args.torus, args.q, args.levels, args.z, args.numax).to_json()]

class Shifted(Verification, name='shifted'):
    help = 'The inequality averaged over translations by dual vectors.'

    @staticmethod
    def add_arguments(parser):
        source.add_arguments(parser, torus_only=True)
        parser.add_argument('--p', type=DualVector.parse, action='append', metavar='N,M', help='Repeat for each vector; by default an orthogonal pair.')
        parser.add_argument('--N', type=int, required=True)
        parser.add_argument('--z', type=source.rational_list, default=None)

    def run(self):
        args = self.args
        if args.p:
            return [shifted_sumrule_check(args.torus, args.p, args.N, args.z).to_json()]
        return [orthogonal_pair_check(args.torus, args.N, args.z).to_json()]

class _Riesz(Verification):

    @staticmethod
    def add_arguments(parser):
        source.add_arguments(parser)
        parser.add_argument('--zmax', type=as_rational, default=None, help='Sample level points and midpoints up to here, in the units of the spectrum.')
        parser.add_argument('--z', type=source.rational_list, default=None, help='Explicit comma-separated samples instead.')

    def prepare(self):
        args = self.args
        z_max = args.zmax if args.zmax is not None else (max(args.z) if args.z else None)
        s = source.spectrum(args, z=z_max)
        Lambda1 = args.lambda1 if getattr(args, 'lambda1', None) is not None else s.first_positive_level()
        samples = args.z if args.z else default_z_grid(s, z_max)
        return s, source.dimension(args), Lambda1, samples

class RieszMonotonicity(_Riesz, name='riesz-mono'):
    help = 'The differential inequality for the second Riesz mean.'

    def run(self):
        s, d, Lambda1, samples = self.prepare()
        self.ratio = lambda z: float(riesz_mean(s, 2, z)) / float(z + Fraction(d) * Lambda1 / 4)**(2 + d / 2)
        return [r2_monotonicity_check(s, d, Lambda1, samples).to_json()]

    def points(self, records):
        return [(z, self.ratio(as_rational(z))) for z, _ in records[0]['samples']]

class Weyl(_Riesz, name='weyl'):
    help = 'The shifted Weyl bound on the second Riesz mean.'

    @staticmethod
    def add_arguments(parser):
        _Riesz.add_arguments(parser)
        parser.add_argument('--volume', type=PiPower.parse, default=None,
                            help="Like '4pi', read as an exact rational multiple of a power of pi, so a decimal stands for itself and not for the irrational it approximates. "
                                 "A torus defaults to its area b, compared in mpmath at --precision when irrational.")

    def volume(self):
        if self.args.volume is not None:
            return self.args.volume
        mod = getattr(self.args, 'torus', None)
        if mod is not None:
            b_sq = mod.b_sq
            root = Fraction(isqrt(b_sq.numerator), isqrt(b_sq.denominator))
            if root**2 == b_sq:
                return PiPower(root)
            logger.info(f'The area of {mod} is irrational; the Weyl bound is compared to precision {mpmath.mp.dps}.')
            return mpmath.sqrt(mpmath.mpf(b_sq.numerator) / b_sq.denominator)
        raise ValueError('--volume is required unless --torus is given.')

    def run(self):
        s, d, Lambda1, samples = self.prepare()
        volume = self.volume()
        self.ratio = lambda z: weyl_ratio(s, d, Lambda1, volume, z)
        return [weyl_bound_check(s, d, Lambda1, volume, samples).to_json()]

    def points(self, records):
        return [(z, self.ratio(as_rational(z))) for z, _ in records[0]['samples']]

def add_parser(subparsers, output):
    r'''The ``verify`` command, with one sub-command per registered :class:`Verification`.'''
    parser = subparsers.add_parser('verify', help='Run an exact check; exit 1 if it fails.')
    kinds = parser.add_subparsers(dest='kind', required=True)
    for name, kind in registry.items():
        sub = kinds.add_parser(name, parents=[output], help=kind.help)
        kind.add_arguments(sub)
        sub.set_defaults(run=run, verification=kind)
    return parser

def run(config, args):
    verification = args.verification(args)
    records = verification.run()
    text = render(config,
                  json_lines(stamp(record, config) for record in records),
                  records, ['kind', 'N', 'holds', 'notes'],
                  verification.points(records))
    write(config, text)

    failures = [record for record in records if not record['holds']]
    for failure in failures:
        logger.warning(f'{failure["kind"]} fails' + (f' at N={failure["N"]}' if 'N' in failure else '') + '.')
    return 1 if failures else 0
