#!/usr/bin/env python

from spectral_sumrules.exactnum import as_rational
from spectral_sumrules.errors import GrowthConditionViolated, InsufficientLevels
from spectral_sumrules.sumrule.quadratic import partial_moments

import logging
logger = logging.getLogger(__name__)

def check_gap_condition(lambdas, a, N, h=0):
    r'''
    Test

    .. math::
        N(\lambda_{N+1} + \lambda_N) = (a+1)\sum_{j=1}^{N} \lambda_j

    exactly, where ``lambdas[0]`` is $\lambda_1$.

    With ``h`` nonzero the condition is tested on $\lambda_j + h/(a-1)$, which is how a spectrum with $P_N(z) = \sum(z-\lambda_j)(z-h-a\lambda_j)$
    reduces to the $h=0$ case; CROSS spectra satisfy it only in that shifted form.
    '''
    lambdas = [as_rational(l) for l in lambdas]
    if N < 1:
        raise ValueError(f'N must be positive, got {N}.')
    if len(lambdas) < N + 1:
        raise InsufficientLevels(f'The condition at N={N} needs {N+1} eigenvalues, got {len(lambdas)}.')

    a, h = as_rational(a), as_rational(h)
    if h != 0:
        if a == 1:
            raise ValueError('A shift h needs a != 1.')
        lambdas = [l + h / (a - 1) for l in lambdas]

    return N * (lambdas[N] + lambdas[N - 1]) == (a + 1) * sum(lambdas[:N])

def spectrum_gap_condition(s, a, N, h=0):
    r''':func:`check_gap_condition` read off the levels of a :class:`~.Spectrum` without flattening it.'''
    first, _, lower, upper = partial_moments(s, N)
    a, h = as_rational(a), as_rational(h)
    shift = 0
    if h != 0:
        if a == 1:
            raise ValueError('A shift h needs a != 1.')
        shift = h / (a - 1)
    return N * (upper + lower + 2 * shift) == (a + 1) * (first + N * shift)

def recurrence_counts(levels, a, h, N0=1):
    r'''
    Solve the first-order recurrence

    .. math::
        N_{n+1} = \frac{a\tilde\Lambda_{n+1} - \tilde\Lambda_n}{a\tilde\Lambda_{n+1} - \tilde\Lambda_{n+2}} N_n,
        \qquad \tilde\Lambda_n = \Lambda_n + \frac{h}{a-1}

    forced on the counting function by $P_N(\Lambda_n) = P_N(\Lambda_{n+1}) = 0$ at every gap.

    Parameters
    ----------
        levels: list of rational-like
            $\Lambda_0 < \Lambda_1 < \cdots < \Lambda_{n_\text{max}+1}$.
        a: rational-like
            Larger than 1.
        h: rational-like
        N0: int
            The number of eigenvalues at $\Lambda_0$.

    Returns
    -------
        list of (Fraction, bool)
            $N_0, \ldots, N_{n_\text{max}}$ and whether each is an integer.

    Raises
    ------
        GrowthConditionViolated
            at the first step where $a\tilde\Lambda_{n+1} \leq \tilde\Lambda_{n+2}$.
    '''
    levels = [as_rational(l) for l in levels]
    a, h = as_rational(a), as_rational(h)
    if a <= 1:
        raise ValueError(f'The recurrence needs a > 1, got {a}.')
    if len(levels) < 2:
        raise InsufficientLevels('The recurrence needs at least two levels.')
    for lower, upper in zip(levels, levels[1:]):
        if not lower < upper:
            raise ValueError(f'Levels must strictly increase; found {lower} then {upper}.')

    shifted = [l + h / (a - 1) for l in levels]

    counts = [as_rational(N0)]
    for n in range(len(levels) - 2):
        denominator = a * shifted[n + 1] - shifted[n + 2]
        if denominator <= 0:
            raise GrowthConditionViolated(n, f'a·Λ̃_{n+1} - Λ̃_{n+2} = {denominator} <= 0 at step n={n}.')
        following = (a * shifted[n + 1] - shifted[n]) / denominator * counts[-1]
        if not following > counts[-1]:
            raise ArithmeticError(f'N_{n+1} = {following} does not exceed N_{n} = {counts[-1]}.')
        counts.append(following)

    non_integer = [n for n, N in enumerate(counts) if N.denominator != 1]
    if non_integer:
        logger.info(f'The recurrence gives non-integer counts at n in {non_integer}.')
    return [(N, N.denominator == 1) for N in counts]
