#!/usr/bin/env python

from spectral_sumrules.exactnum import as_rational, rational_str
from spectral_sumrules.errors import ZeroVector, NotAGap, SampleOutOfRange
from spectral_sumrules.torus import torus_spectrum_covering, norm_sq, inner, orthogonal_dual_pair
from spectral_sumrules.sumrule.polynomial import QuadPoly
from spectral_sumrules.sumrule.report import CheckReport
from spectral_sumrules.sumrule.quadratic import q_poly

import logging
logger = logging.getLogger(__name__)

def gap_samples(lower, upper, z_samples=None):
    r'''The samples as exact rationals, checked to lie in [lower, upper]; by default both endpoints and the midpoint.'''
    if z_samples is None:
        return [lower, (lower + upper) / 2, upper]
    z_samples = [as_rational(z) for z in z_samples]
    for z in z_samples:
        if not lower <= z <= upper:
            raise SampleOutOfRange(f'z={z} lies outside [{lower}, {upper}].')
    return z_samples

def shifted_sumrule_check(mod, p_set, N, z_samples=None):
    r'''
    On the whole torus, check the inequality obtained by averaging the sum rule over the translations generated by the dual vectors $p_i$,

    .. math::
        \sum_{j\leq N}(z-\lambda_j)\left(z - \frac{1}{k}\sum_i \nu(p_i) - \frac{4}{k}\sum_i \frac{\langle p_i, p_j\rangle^2}{\nu(p_i)} - \lambda_j\right)
        \leq N(z-\lambda_N)(z-\lambda_{N+1}),

    in units of $4\pi^2$, with $p_j$ the wave vector of the $j$\ th eigenfunction.

    Parameters
    ----------
        mod: TorusModuli
        p_set: list of DualVector
            Nonzero.
        N: int
            A gap index of the torus.
        z_samples: list of rational-like
            Points of $[\lambda_N, \lambda_{N+1}]$; by default the endpoints and the midpoint.

    Raises
    ------
        ZeroVector
        NotAGap
        SampleOutOfRange
    '''
    p_set = list(p_set)
    if not p_set:
        raise ValueError('The set of dual vectors is empty.')
    for p in p_set:
        if p.is_zero():
            raise ZeroVector('Every dual vector in the average must be nonzero.')

    spectrum, shells = torus_spectrum_covering(mod, N)
    if N not in spectrum.counts:
        raise NotAGap(f'N={N} is not a gap index of {mod}.')

    vectors = [v for shell in shells for v in shell][:N]
    lambdas = spectrum.flatten(N + 1)
    lower, upper = lambdas[N - 1], lambdas[N]

    k = len(p_set)
    norms = [norm_sq(mod, p) for p in p_set]
    shift = sum(norms) / k

    left = QuadPoly()
    for p_j in vectors:
        nu_j = norm_sq(mod, p_j)
        directional = 4 * sum(inner(mod, p_i, p_j)**2 / nu_i for p_i, nu_i in zip(p_set, norms)) / k
        left += QuadPoly.product(nu_j, shift + directional + nu_j)

    residual = left - q_poly(lower, upper, N)
    witnesses = [(z, residual(z)) for z in gap_samples(lower, upper, z_samples)]
    notes = f'{mod}, p_set={[str(p) for p in p_set]}, shift={rational_str(shift)}'
    return CheckReport('shifted', all(value <= 0 for _, value in witnesses), residual, witnesses, notes, N=N)

def orthogonal_pair_check(mod, N, z_samples=None):
    r''':func:`shifted_sumrule_check` averaged over the orthogonal pair from :func:`~.torus.orthogonal_dual_pair`.'''
    return shifted_sumrule_check(mod, orthogonal_dual_pair(mod), N, z_samples)
