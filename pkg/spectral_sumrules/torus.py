#!/usr/bin/env python

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product
from math import isqrt, ceil, floor
from collections import Counter

import numpy as np

from spectral_sumrules.exactnum import as_rational, rational_str
from spectral_sumrules.errors import EmptyInput
from spectral_sumrules.spectrum import Spectrum, FOUR_PI_SQUARED
from spectral_sumrules.performance import Timer

import logging
logger = logging.getLogger(__name__)

def _no_op(x, **kwargs):
    return x

class TorusModuli:
    r'''
    The flat torus $\mathbb{R}^2/\Gamma$ with $\Gamma$ generated by $w_1 = (1, 0)$ and $w_2 = (a, b)$.

    Only $b^2$ is stored, so that the equilateral torus $b=\sqrt{3}/2$ is ``TorusModuli(1/2, 3/4)`` and every eigenvalue stays rational.

    Parameters
    ----------
        a: rational-like
            $0 \leq a \leq 1/2$.
        b_sq: rational-like
            $b^2 > 0$; the area of the torus is $b$.

    The fundamental domain of the moduli space additionally has $a^2 + b^2 \geq 1$; points outside it are computed anyway, with a warning.
    '''

    def __init__(self, a, b_sq):
        self.a = as_rational(a)
        self.b_sq = as_rational(b_sq)

        if not 0 <= self.a <= Fraction(1, 2):
            raise ValueError(f'The moduli need 0 <= a <= 1/2, got a={self.a}.')
        if self.b_sq <= 0:
            raise ValueError(f'The moduli need b^2 > 0, got b^2={self.b_sq}.')

    @property
    def in_tau(self):
        r'''Whether $(a, b)$ lies in the fundamental domain, $a^2 + b^2 \geq 1$.'''
        return self.a**2 + self.b_sq >= 1

    def warn_outside(self):
        if not self.in_tau:
            logger.warning(f'{self} lies outside the fundamental domain a^2 + b^2 >= 1; computing anyway.')

    @classmethod
    def parse(cls, text):
        r'''Read ``'a,b_sq'``, for example ``'0,9'`` or ``'1/2,3/4'``.'''
        try:
            a, b_sq = text.split(',')
        except ValueError as error:
            raise ValueError(f'Expected moduli as a,b_sq; got {text!r}.') from error
        return cls(a, b_sq)

    def __str__(self):
        return f'TorusModuli(a={rational_str(self.a)}, b^2={rational_str(self.b_sq)})'

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        return isinstance(other, TorusModuli) and (self.a, self.b_sq) == (other.a, other.b_sq)

    def __hash__(self):
        return hash((self.a, self.b_sq))

SQUARE = TorusModuli(0, 1)
EQUILATERAL = TorusModuli(Fraction(1, 2), Fraction(3, 4))

@dataclass(frozen=True, order=True)
class DualVector:
    r'''
    The dual-lattice vector $p = n w_1^* + m w_2^*$ with $w_1^* = (1, -a/b)$ and $w_2^* = (0, 1/b)$,
    so that in Cartesian components $p = (n, (m - na)/b)$.
    '''
    n: int
    m: int

    def __neg__(self):
        return DualVector(-self.n, -self.m)

    def __add__(self, other):
        return DualVector(self.n + other.n, self.m + other.m)

    def __sub__(self, other):
        return DualVector(self.n - other.n, self.m - other.m)

    def is_zero(self):
        return self.n == 0 and self.m == 0

    @classmethod
    def parse(cls, text):
        r'''Read ``'n,m'``.'''
        try:
            n, m = (int(x) for x in text.split(','))
        except ValueError as error:
            raise ValueError(f'Expected a dual vector as n,m; got {text!r}.') from error
        return cls(n, m)

    def __str__(self):
        return f'({self.n},{self.m})'

def norm_sq(mod, v):
    r'''
    .. math::
        \nu = n^2 + \frac{(m-na)^2}{b^2}

    the eigenvalue $4\pi^2|p|^2$ of $e^{2\pi i\langle p, x\rangle}$ in units of $4\pi^2$.
    '''
    return v.n**2 + (v.m - v.n * mod.a)**2 / mod.b_sq

def inner(mod, v, w):
    r'''The Euclidean pairing $\langle p, p'\rangle = nn' + (m-na)(m'-n'a)/b^2$.'''
    return v.n * w.n + (v.m - v.n * mod.a) * (w.m - w.n * mod.a) / mod.b_sq

def _integer_norms(mod):
    r'''
    With $a = p/q$ and $b^2 = r/s$ the integer $K = n^2q^2r + (qm - pn)^2 s$ satisfies $\nu = K / (q^2 r)$.
    Returns the function computing $K$ on arrays and the scale $q^2r$.
    '''
    p, q = mod.a.numerator, mod.a.denominator
    r, s = mod.b_sq.numerator, mod.b_sq.denominator
    scale = q * q * r

    def K(n, m):
        return n * n * scale + (q * m - p * n)**2 * s

    return K, scale

def _box(mod, nu_max):
    r'''
    Every $(n, m)$ with $\nu \leq$ ``nu_max``, as integer arrays ``n``, ``m``, ``K`` with $\nu = K/$``scale``.
    '''
    nu_max = as_rational(nu_max)
    if nu_max < 0:
        raise ValueError(f'nu_max must be nonnegative, got {nu_max}.')

    K, scale = _integer_norms(mod)

    # |n| <= sqrt(nu_max) and |m - na| <= sqrt(nu_max b^2).
    n_max = isqrt(floor(nu_max))
    radius = isqrt(ceil(nu_max * mod.b_sq)) + 1

    # Fall back to python integers when K could overflow int64.
    biggest = n_max**2 * scale + (mod.a.denominator * (radius + 2))**2 * mod.b_sq.denominator
    dtype = object if biggest * nu_max.denominator > 2**62 else np.int64

    n = np.arange(-n_max, n_max + 1, dtype=dtype)
    offsets = np.arange(-radius - 1, radius + 2, dtype=dtype)
    centers = np.array([floor(k * mod.a) for k in range(-n_max, n_max + 1)], dtype=dtype)

    N = np.repeat(n, len(offsets))
    M = (centers[:, None] + offsets[None, :]).ravel()
    norms = K(N, M)

    keep = norms * nu_max.denominator <= nu_max.numerator * scale
    return N[keep], M[keep], norms[keep], scale

def torus_spectrum(mod, nu_max):
    r'''
    Enumerate every dual-lattice vector with $\nu \leq$ ``nu_max`` and group them by exact $\nu$.

    Parameters
    ----------
        mod: TorusModuli
        nu_max: rational-like
            The cutoff in units of $4\pi^2$; the enumeration is complete up to and including it.

    Returns
    -------
        spectrum: Spectrum
            In four-pi-squared units, with ``cutoff = nu_max``.
        shells: list of lists of DualVector
            ``shells[l]`` holds the wave vectors of level ``l``, sorted.
    '''
    mod.warn_outside()
    nu_max = as_rational(nu_max)

    with Timer(logger.debug, f'Enumerating {mod} to nu_max={nu_max}'):
        n, m, norms, scale = _box(mod, nu_max)
        values, inverse = np.unique(norms, return_inverse=True)
        inverse = inverse.ravel()

        shells = [[] for _ in values]
        for i, (nn, mm) in enumerate(zip(n.tolist(), m.tolist())):
            shells[inverse[i]].append(DualVector(int(nn), int(mm)))
        for shell in shells:
            shell.sort()

    levels = [(Fraction(int(K), scale), len(shell)) for K, shell in zip(values.tolist(), shells)]
    spectrum = Spectrum(levels, unit=FOUR_PI_SQUARED, meta=f'{mod}, nu_max={rational_str(nu_max)}', cutoff=nu_max)
    return spectrum, shells

def eigenspace_vectors(mod, nu):
    r'''
    Every dual vector with $\nu(p) = $ ``nu``, closed under $p\to -p$; empty when ``nu`` is not a level.
    '''
    nu = as_rational(nu)
    if nu < 0:
        raise ValueError(f'nu must be nonnegative, got {nu}.')
    n, m, norms, scale = _box(mod, nu)
    exact = norms * nu.denominator == nu.numerator * scale
    return sorted(DualVector(int(nn), int(mm)) for nn, mm in zip(n[exact].tolist(), m[exact].tolist()))

def torus_spectrum_covering(mod, N):
    r'''
    :func:`torus_spectrum` with ``nu_max`` doubled until more than ``N`` eigenvalues are known, so that $\lambda_{N+1}$ is certain.
    '''
    nu_max = min(Fraction(1), 1 / mod.b_sq)
    while True:
        spectrum, shells = torus_spectrum(mod, nu_max)
        if spectrum.total > N:
            return spectrum, shells
        nu_max *= 2

def orthogonal_dual_pair(mod):
    r'''
    For $a = r/s$ the dual vectors $(0, 1)$ and $(s, r)$ in lattice coordinates, which are $(0, 1/b)$ and $(s, 0)$ in Cartesian components and so orthogonal.
    '''
    return [DualVector(0, 1), DualVector(mod.a.denominator, mod.a.numerator)]

def brute_force_spectrum(mod, nu_max):
    r'''
    A slow, independent enumeration over the box $|n|, |m| \leq \lceil\sqrt{\nu_{\text{max}}}(1+\sqrt{b^2}) + 1\rceil$,
    evaluating :func:`norm_sq` one vector at a time.
    Useful only as a check of :func:`torus_spectrum`.
    '''
    nu_max = as_rational(nu_max)
    bound = (isqrt(ceil(nu_max)) + 1) * (isqrt(ceil(mod.b_sq)) + 2) + 1
    counts = Counter()
    for n, m in product(range(-bound, bound + 1), repeat=2):
        nu = norm_sq(mod, DualVector(n, m))
        if nu <= nu_max:
            counts[nu] += 1
    return Spectrum(sorted(counts.items()), unit=FOUR_PI_SQUARED, meta=f'{mod} by brute force', cutoff=nu_max)

def moduli_grid(a_values, bsq_values=None, boundary=False):
    r'''
    The product grid of ``a_values`` and ``bsq_values``, or with ``boundary=True`` the arc $b^2 = 1 - a^2$ of the fundamental domain.

    Raises
    ------
        EmptyInput
            if the grid has no points.
    '''
    a_values = [as_rational(a) for a in a_values]
    if boundary:
        grid = [TorusModuli(a, 1 - a**2) for a in a_values]
    else:
        grid = [TorusModuli(a, b_sq) for a, b_sq in product(a_values, [as_rational(b) for b in (bsq_values or [])])]
    if not grid:
        raise EmptyInput('The moduli grid is empty.')
    return grid

def _scan_point(mod, nu_max, N_max, d=2):
    from spectral_sumrules.sumrule import check_inequality

    spectrum, _ = torus_spectrum(mod, nu_max)
    reachable = min(N_max, spectrum.total - 1)
    gaps = [N for N in spectrum.counts if N <= reachable]

    details = []
    for N in gaps:
        report = check_inequality(spectrum, d, N)
        details.append({
            'N': N,
            'holds': report.holds,
            'residual_lower': rational_str(report.witnesses[0][1]),
            'residual_upper': rational_str(report.witnesses[1][1]),
        })

    return {
        'a': rational_str(mod.a),
        'b_sq': rational_str(mod.b_sq),
        'in_tau': mod.in_tau,
        'gaps_checked': gaps,
        'violations': [detail['N'] for detail in details if not detail['holds']],
        'insufficient': reachable < N_max,
        'details': details,
    }

def scan_moduli(grid, nu_max, N_max, d=2, workers=1, progress=_no_op):
    r'''
    Check the quadratic inequality at every gap index $N\leq$ ``N_max`` at every point of the moduli ``grid``.

    Parameters
    ----------
        grid: list of TorusModuli
        nu_max: rational-like
            Enumeration cutoff.  Gap indices above the number of enumerated eigenvalues are skipped and the record is flagged ``insufficient``.
        N_max: int
        d: int
        workers: int
            With more than one worker the points are evaluated in a process pool; results are always in ``grid`` order.
        progress: callable
            Wraps the iterator of results, for example ``tqdm.tqdm``.

    Returns
    -------
        list of dict
            One record per grid point with keys ``a``, ``b_sq``, ``in_tau``, ``gaps_checked``, ``violations``, ``insufficient``, and ``details``.
    '''
    if not grid:
        raise EmptyInput('The moduli grid is empty.')
    if N_max < 1:
        raise ValueError(f'N_max must be positive, got {N_max}.')

    nu_max = as_rational(nu_max)
    task = partial(_scan_point, nu_max=nu_max, N_max=N_max, d=d)

    with Timer(logger.info, f'Scanning {len(grid)} moduli', per=len(grid)):
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                records = list(progress(pool.map(task, grid), total=len(grid)))
        else:
            records = list(progress(map(task, grid), total=len(grid)))

    for record in records:
        if record['violations']:
            logger.info(f'a={record["a"]}, b^2={record["b_sq"]} violates the inequality at N in {record["violations"]}.')
    return records
