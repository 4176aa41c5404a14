#!/usr/bin/env python

from spectral_sumrules.exactnum import as_rational, binomial
from spectral_sumrules.errors import UnsupportedParameter
from spectral_sumrules.spectrum.spectrum import Spectrum, ABSOLUTE

def oscillator_spectrum(a, l_max):
    r'''
    The harmonic-oscillator-like sequence $\Lambda_l = l + \frac{1}{a-1}$ whose counts

    .. math::
        N_l = \binom{l + \frac{2}{a-1}}{l}

    solve the counting recurrence with $h=0$.
    With $a=2$ and $a=3$ these are the 3- and 2-dimensional isotropic oscillators, shifted down by one half.

    Parameters
    ----------
        a: rational-like
            Must make $c = 2/(a-1)$ a positive integer.
        l_max: int

    Raises
    ------
        UnsupportedParameter
            when $2/(a-1)$ is not a positive integer.
    '''
    a = as_rational(a)
    if a <= 1:
        raise UnsupportedParameter(f'The oscillator sequence needs a > 1, got {a}.')
    c = 2 / (a - 1)
    if c.denominator != 1:
        raise UnsupportedParameter(f'2/(a-1) = {c} is not a positive integer.')
    c = c.numerator

    counts = [binomial(l + c, l) for l in range(l_max + 1)]
    multiplicities = [counts[0]] + [upper - lower for lower, upper in zip(counts, counts[1:])]
    values = [l + as_rational(c) / 2 for l in range(l_max + 1)]

    return Spectrum(zip(values, multiplicities), unit=ABSOLUTE, meta=f'oscillator a={a}, l_max={l_max}')
