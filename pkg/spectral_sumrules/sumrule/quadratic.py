#!/usr/bin/env python

from fractions import Fraction

from spectral_sumrules.exactnum import as_rational, rational_str
from spectral_sumrules.errors import EmptyInput, InsufficientLevels, NotAGap
from spectral_sumrules.sumrule.polynomial import QuadPoly
from spectral_sumrules.sumrule.report import CheckReport

import logging
logger = logging.getLogger(__name__)

def generalized_p_poly(lambdas, a, h):
    r'''
    .. math::
        P_N(z) = \sum_{j=1}^{N} (z - \lambda_j)(z - h - a\lambda_j)

    expanded into coefficients.

    Raises
    ------
        EmptyInput
    '''
    lambdas = [as_rational(l) for l in lambdas]
    if not lambdas:
        raise EmptyInput('P_N needs at least one eigenvalue.')
    return _from_moments(len(lambdas), sum(lambdas), sum(l * l for l in lambdas), a, h)

def _from_moments(N, first, second, a, h):
    # Only N and the first two power sums of the eigenvalues enter.
    a, h = as_rational(a), as_rational(h)
    return QuadPoly(N, -(N * h + (a + 1) * first), h * first + a * second)

def p_poly(lambdas, d, Lambda1):
    r'''
    .. math::
        P_N(z) = \sum_{j=1}^{N} (z-\lambda_j)\left(z - \Lambda_1 - \frac{d+4}{d}\lambda_j\right)

    which is :func:`generalized_p_poly` with $a = (d+4)/d$ and $h = \Lambda_1$.
    '''
    return generalized_p_poly(lambdas, Fraction(d + 4, d), Lambda1)

def q_poly(lambda_N, lambda_N1, N):
    r'''$Q_N(z) = N(z-\lambda_N)(z-\lambda_{N+1})$.'''
    return QuadPoly.product(lambda_N, lambda_N1, leading=N)

def gap_indices(s, N_max):
    r'''
    Every $N \leq$ ``N_max`` with $\lambda_N < \lambda_{N+1}$.

    Raises
    ------
        InsufficientLevels
            unless ``s`` holds at least ``N_max + 1`` eigenvalues.
    '''
    if N_max < 1:
        raise ValueError(f'N_max must be positive, got {N_max}.')
    if s.total < N_max + 1:
        raise InsufficientLevels(f'Gap indices up to {N_max} need {N_max + 1} eigenvalues but {s} has {s.total}.')
    return [N for N in s.counts if N <= N_max]

def partial_moments(s, N):
    r'''
    $\sum_{j\leq N}\lambda_j$, $\sum_{j\leq N}\lambda_j^2$, $\lambda_N$, and $\lambda_{N+1}$, level by level,
    so that a CROSS spectrum with astronomically many eigenvalues below $\lambda_N$ never has to be flattened.

    Raises
    ------
        InsufficientLevels
            unless ``s`` holds at least ``N + 1`` eigenvalues.
    '''
    if N < 1:
        raise ValueError(f'N must be positive, got {N}.')
    if s.total < N + 1:
        raise InsufficientLevels(f'N={N} needs {N + 1} eigenvalues but {s} has {s.total}.')

    taken, first, second = 0, Fraction(0), Fraction(0)
    lower = upper = None
    for value, mult in s.levels:
        if taken == N:
            upper = value
            break
        take = min(mult, N - taken)
        taken += take
        first += take * value
        second += take * value * value
        lower = value
        if take < mult:
            upper = value
            break
    return first, second, lower, upper

def _residual(s, d, N, Lambda1):
    first, second, lower, upper = partial_moments(s, N)
    if lower == upper:
        raise NotAGap(f'lambda_{N} = lambda_{N+1} = {lower}; N={N} is not a gap index.')
    if Lambda1 is None:
        Lambda1 = s.first_positive_level()
    Lambda1 = as_rational(Lambda1)
    residual = _from_moments(N, first, second, Fraction(d + 4, d), Lambda1) - q_poly(lower, upper, N)
    notes = f'd={d}, Lambda1={rational_str(Lambda1)}, unit={s.unit}'
    return residual, lower, upper, notes

def check_identity(s, d, N, Lambda1=None):
    r'''
    Whether $P_N = Q_N$ exactly.

    Parameters
    ----------
        s: Spectrum
        d: int
            The dimension.
        N: int
            A gap index.
        Lambda1: rational-like
            By default the second level of ``s``; a domain spectrum needs its ambient manifold's value given explicitly.

    Returns
    -------
        CheckReport
            with the residual $P_N - Q_N$ and its values at $\lambda_N$ and $\lambda_{N+1}$.

    Raises
    ------
        NotAGap
        InsufficientLevels
    '''
    residual, lower, upper, notes = _residual(s, d, N, Lambda1)
    return CheckReport('identity', residual.is_zero(), residual,
                       [(lower, residual(lower)), (upper, residual(upper))], notes, N=N)

def check_inequality(s, d, N, Lambda1=None):
    r'''
    Whether $P_N(z) \leq Q_N(z)$ for every $z\in[\lambda_N, \lambda_{N+1}]$.

    The leading coefficients cancel, so the residual is affine and the two endpoint values decide the whole interval.
    Arguments as in :func:`check_identity`.
    '''
    residual, lower, upper, notes = _residual(s, d, N, Lambda1)
    if residual.c2 != 0:
        raise ArithmeticError(f'The residual {residual} is not affine.')
    witnesses = [(lower, residual(lower)), (upper, residual(upper))]
    return CheckReport('inequality', all(value <= 0 for _, value in witnesses), residual, witnesses, notes, N=N)

_checks = {
    'identity': check_identity,
    'inequality': check_inequality,
}

def batch_check(s, d, Ns, kind='identity', Lambda1=None):
    r'''
    Run :func:`check_identity` or :func:`check_inequality` at every ``N`` in ``Ns``.

    Returns
    -------
        list of CheckReport
    '''
    try:
        check = _checks[kind]
    except KeyError as error:
        raise ValueError(f'Unknown check {kind!r}; must be one of {tuple(_checks)}.') from error
    reports = [check(s, d, N, Lambda1) for N in Ns]
    failures = [r.N for r in reports if not r.holds]
    if failures:
        logger.info(f'{kind} fails at N in {failures}.')
    return reports
