#!/usr/bin/env python

from fractions import Fraction
from math import factorial

import mpmath

from spectral_sumrules.exactnum import as_rational, rational_str, PiPower
from spectral_sumrules.errors import InsufficientLevels, SampleOutOfRange
from spectral_sumrules.spectrum import FOUR_PI_SQUARED

import logging
logger = logging.getLogger(__name__)

class RieszReport:
    r'''
    Samples of $R_\sigma$ and the verdict of an inequality at each.

    Attributes
    ----------
        kind: str
        sigma: int
        samples: list of (z, value)
            ``value`` is $R_\sigma(z)$, exact, or a :class:`~.PiPower` in absolute units.
        verdicts: list of bool
        margins: list
            The larger side minus the smaller claimed side at each sample; zero margins are equality.
        constant_used: str or None
    '''

    def __init__(self, kind, sigma, samples, verdicts, margins, constant_used=None):
        self.kind = kind
        self.sigma = sigma
        self.samples = samples
        self.verdicts = verdicts
        self.margins = margins
        self.constant_used = constant_used

    @property
    def holds(self):
        return all(self.verdicts)

    @property
    def equalities(self):
        r'''The samples at which the inequality is saturated.'''
        return [z for (z, _), margin in zip(self.samples, self.margins) if margin == 0]

    def __str__(self):
        return f'RieszReport({self.kind}, sigma={self.sigma}, {len(self.samples)} samples: {"holds" if self.holds else "VIOLATED"})'

    def __repr__(self):
        return str(self)

    def to_json(self):
        return {
            'kind': self.kind,
            'holds': self.holds,
            'sigma': self.sigma,
            'samples': [[rational_str(z), str(value)] for z, value in self.samples],
            'verdicts': self.verdicts,
            'margins': [str(m) for m in self.margins],
            'equalities': [rational_str(z) for z in self.equalities],
            'constant_used': self.constant_used,
        }

def riesz_mean(s, sigma, z):
    r'''
    .. math::
        R_\sigma(z) = \sum_l M_l (z - \Lambda_l)_+^\sigma

    exactly, in the units of ``s``.  For $\sigma = 0$ this counts eigenvalues strictly below $z$.

    Raises
    ------
        InsufficientLevels
            when $z$ lies beyond the cutoff of ``s``, where levels may be missing.
    '''
    z = as_rational(z)
    if sigma < 0 or int(sigma) != sigma:
        raise ValueError(f'sigma must be a nonnegative integer, got {sigma}.')
    if z > s.cutoff:
        raise InsufficientLevels(f'R_{sigma}({z}) needs every level below {z} but {s} is only complete to {s.cutoff}.')
    return sum((m * (z - value)**sigma for value, m in s.levels if value < z), Fraction(0))

def _check_samples(z_samples):
    z_samples = [as_rational(z) for z in z_samples]
    for z in z_samples:
        if z < 0:
            raise SampleOutOfRange(f'z={z} is negative.')
    return z_samples

def r2_monotonicity_check(s, d, Lambda1, z_samples):
    r'''
    Check

    .. math::
        2R_1(z)\left(z + \frac{d\Lambda_1}{4}\right) \geq \left(2 + \frac{d}{2}\right) R_2(z),

    which is $R_2'(z)/R_2(z) \geq (2+d/2)/(z + d\Lambda_1/4)$, so that $R_2(z)/(z + d\Lambda_1/4)^{2+d/2}$ is nondecreasing.
    Everything is exact, in the units of ``s``.
    '''
    Lambda1 = as_rational(Lambda1)
    shift = Fraction(d) * Lambda1 / 4
    samples, verdicts, margins = [], [], []
    for z in _check_samples(z_samples):
        R1, R2 = riesz_mean(s, 1, z), riesz_mean(s, 2, z)
        margin = 2 * R1 * (z + shift) - (2 + Fraction(d, 2)) * R2
        samples.append((z, R2))
        margins.append(margin)
        verdicts.append(margin >= 0)
    report = RieszReport('riesz-mono', 2, samples, verdicts, margins)
    if report.equalities:
        logger.info(f'Equality in the R_2 monotonicity at z in {[rational_str(z) for z in report.equalities]}.')
    return report

def semiclassical_constant(d):
    r'''
    .. math::
        L_{2,d} = \frac{\Gamma(3)}{(4\pi)^{d/2}\Gamma(3 + d/2)}

    as a :class:`~.PiPower` for even $d$ and an ``mpmath.mpf`` at the current precision for odd $d$.
    '''
    if d % 2 == 0:
        k = d // 2
        return PiPower(Fraction(2, 4**k * factorial(2 + k)), -k)
    return mpmath.gamma(3) / ((4 * mpmath.pi)**(mpmath.mpf(d) / 2) * mpmath.gamma(3 + mpmath.mpf(d) / 2))

def _units(s):
    return PiPower(4, 2) if s.unit == FOUR_PI_SQUARED else PiPower(1)

def _weyl_sides(s, d, Lambda1, volume, z):
    r'''
    $R_2(z)$ and $L_{2,d}|\Omega|(z + d\Lambda_1/4)^{2+d/2}$ in absolute units.
    Both are :class:`~.PiPower` when $d$ is even and ``volume`` is not an ``mpmath.mpf``, and ``mpmath.mpf`` otherwise.
    '''
    unit = _units(s)
    R2 = unit**2 * PiPower(riesz_mean(s, 2, z))
    base = unit * PiPower(z + Fraction(d) * as_rational(Lambda1) / 4)
    constant = semiclassical_constant(d)

    if d % 2 == 0 and not isinstance(volume, mpmath.mpf):
        return R2, constant * PiPower.parse(volume) * base**(2 + d // 2)

    volume = volume if isinstance(volume, mpmath.mpf) else PiPower.parse(volume).mpf()
    constant = constant.mpf() if isinstance(constant, PiPower) else constant
    return R2.mpf(), constant * volume * base.mpf()**(2 + mpmath.mpf(d) / 2)

def weyl_bound_check(s, d, Lambda1, volume, z_samples, tolerance=1e-12):
    r'''
    Check the upper bound

    .. math::
        R_2(z) \leq L_{2,d}\,|\Omega|\left(z + \frac{d\Lambda_1}{4}\right)^{2 + d/2}.

    Parameters
    ----------
        s: Spectrum
        d: int
        Lambda1: rational-like
            In the units of ``s``.
        volume: PiPower, str, or mpmath.mpf
            $|\Omega|$, like ``'4pi'`` for the unit sphere or ``1`` for a unit-area torus.
            An irrational area, like $\sqrt{3}/2$ for the equilateral torus, is an ``mpmath.mpf`` and is compared with the odd-$d$ tolerance.
        z_samples: list of rational-like
            In the units of ``s``.
        tolerance: float
            Relative slack whenever the bound is evaluated with mpmath.

    For even $d$ and a ``PiPower`` volume both sides are rational multiples of powers of $\pi$ and the comparison is certified by :meth:`~.PiPower.compare`.
    '''
    constant = semiclassical_constant(d)
    samples, verdicts, margins = [], [], []
    for z in _check_samples(z_samples):
        R2, bound = _weyl_sides(s, d, Lambda1, volume, z)
        if isinstance(R2, PiPower):
            holds = R2.compare(bound) <= 0
            margin = bound + (-R2) if (R2.power == bound.power or R2.coefficient == 0) else bound.mpf() - R2.mpf()
        else:
            holds = R2 <= bound * (1 + mpmath.mpf(tolerance))
            margin = bound - R2
        samples.append((z, R2))
        verdicts.append(holds)
        margins.append(margin)

    constant_used = str(constant) if d % 2 == 0 else f'2/((4pi)^({d}/2) Gamma(3+{d}/2)) = {mpmath.nstr(constant, 20)}'
    return RieszReport('weyl', 2, samples, verdicts, margins, constant_used)

def weyl_ratio(s, d, Lambda1, volume, z):
    r'''$R_2(z)$ divided by the bound of :func:`weyl_bound_check`, as a float; it tends to 1 as $z\to\infty$.'''
    R2, bound = _weyl_sides(s, d, Lambda1, volume, as_rational(z))
    if isinstance(R2, PiPower):
        R2, bound = R2.mpf(), bound.mpf()
    return float(R2 / bound)

def default_z_grid(s, z_max=None):
    r'''
    Every level value up to ``z_max`` (by default the cutoff of ``s``) and the midpoint of each pair of consecutive levels.
    '''
    z_max = s.cutoff if z_max is None else min(as_rational(z_max), s.cutoff)
    values = [v for v in s.values if v <= z_max]
    midpoints = [(lower + upper) / 2 for lower, upper in zip(values, values[1:])]
    return sorted(values + midpoints)
