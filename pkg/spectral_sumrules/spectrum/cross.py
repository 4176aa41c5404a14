#!/usr/bin/env python

from fractions import Fraction

from spectral_sumrules.exactnum import binomial, rising_product, exact_integer, as_rational
from spectral_sumrules.spectrum.spectrum import Spectrum, ABSOLUTE

import logging
logger = logging.getLogger(__name__)

FAMILIES = ('sphere', 'real_projective', 'complex_projective', 'quaternionic_projective', 'cayley')

class CrossSpace:
    r'''
    A compact rank-one symmetric space of real dimension $d$.

    ======================= ===================================
    family                  allowed $d$
    ======================= ===================================
    sphere                  $d\geq 2$
    real_projective         $d\geq 2$
    complex_projective      even $d \geq 2$
    quaternionic_projective $d \equiv 0 \pmod 4$, $d\geq 4$
    cayley                  $d = 16$
    ======================= ===================================

    Parameters
    ----------
        family: str
            One of the names above; hyphens are accepted in place of underscores.
        dimension: int
    '''

    def __init__(self, family, dimension):
        family = family.replace('-', '_')
        if family not in FAMILIES:
            raise ValueError(f'Unknown CROSS family {family!r}; must be one of {FAMILIES}.')

        d = int(dimension)
        if d != dimension:
            raise ValueError(f'The dimension must be an integer, got {dimension}.')

        if family in ('sphere', 'real_projective') and d < 2:
            raise ValueError(f'A {family} needs d >= 2, got {d}.')
        if family == 'complex_projective' and (d < 2 or d % 2):
            raise ValueError(f'A complex projective space needs even d >= 2, got {d}.')
        if family == 'quaternionic_projective' and (d < 4 or d % 4):
            raise ValueError(f'A quaternionic projective space needs d a positive multiple of 4, got {d}.')
        if family == 'cayley' and d != 16:
            raise ValueError(f'The Cayley plane has d = 16, got {d}.')

        self.family = family
        self.dimension = d

    def __str__(self):
        return f'CrossSpace({self.family}, d={self.dimension})'

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        return isinstance(other, CrossSpace) and (self.family, self.dimension) == (other.family, other.dimension)

    def __hash__(self):
        return hash((self.family, self.dimension))

def cross_parameters(space):
    r'''
    The pair $(h, a)$ for which $\Lambda_l = l(l+h-1)$ and the multiplicities solve the counting recurrence.
    Every family has $a = 1 + 4/d$; the shift $h$ is $\Lambda_1$.

    Returns
    -------
        (Fraction, Fraction)
    '''
    d = Fraction(space.dimension)
    h = {
        'sphere':                  d,
        'real_projective':         (d + 1) / 2,
        'complex_projective':      1 + d / 2,
        'quaternionic_projective': d / 2 + 2,
        'cayley':                  d / 2 + 4,
    }[space.family]
    return h, 1 + 4 / d

def cross_eigenvalue(space, l):
    r'''
    $\Lambda_l = l(l+h-1)$ in the normalization where the level values are rational.
    '''
    h, _ = cross_parameters(space)
    return l * (l + h - 1)

def cross_multiplicity(space, l):
    r'''
    The multiplicity $m_l$ of the level $\Lambda_l$ for $l \geq 1$ from the family's closed form.

    Raises
    ------
        InternalNonInteger
            if the closed form does not produce an integer.
    '''
    if l < 1:
        raise ValueError(f'cross_multiplicity needs l >= 1, got {l}; m_0 = 1.')

    d = space.dimension
    if space.family == 'sphere':
        m = Fraction(2*l + d - 1, l) * binomial(l - 2 + d, l - 1)
    elif space.family == 'real_projective':
        m = Fraction(4*l + d - 1, 2*l) * binomial(d + 2*l - 2, d - 1)
    elif space.family == 'complex_projective':
        m = Fraction(d + 4*l, d) * binomial(l - 1 + d//2, l)**2
    elif space.family == 'quaternionic_projective':
        m = Fraction(d + 4*l + 2, 2*l*(l+1)) * binomial(l - 1 + d//2, l) * binomial(l + d//2, l - 1)
    else:
        m = Fraction(3*(d + 4*l + 6), l*(l+1)*(l+2)*(l+3)) * binomial(l - 1 + d//2, l) * binomial(l + d//2 + 2, l - 1)

    return exact_integer(m, f'm_{l} of {space}')

def cross_counting(space, l):
    r'''
    $N_l = \sum_{j=0}^{l} m_j$ from the family's closed form, with $N_0 = 1$.
    '''
    if l < 0:
        raise ValueError(f'cross_counting needs l >= 0, got {l}.')
    if l == 0:
        return 1

    d = space.dimension
    if space.family == 'sphere':
        N = Fraction(d + 2*l, d) * binomial(l + d - 1, l)
    elif space.family == 'real_projective':
        N = binomial(d + 2*l, d)
    elif space.family == 'complex_projective':
        N = binomial(l + d//2, l)**2
    elif space.family == 'quaternionic_projective':
        N = Fraction((d + 2*l + 2) * (d + 2*l), 2*d*l*(l+1)) * binomial(l - 1 + d//2, l) * binomial(l + d//2, l - 1)
    else:
        N = Fraction(3*(d + 2*l + 6)*(d + 2*l), d*l*(l+1)*(l+2)*(l+3)) * binomial(l - 1 + d//2, l) * binomial(l + d//2 + 2, l - 1)

    return exact_integer(N, f'N_{l} of {space}')

def counting_gamma_ratio(a, h, l, N0=1):
    r'''
    The general solution of the counting recurrence for $\Lambda_l = l(l+h-1)$, valid when $(a-1)h > 2$,

    .. math::
        N_l = \frac{\binom{l+h-1}{l}\binom{l+c}{l}}{\binom{l+h-1-c}{l}} N_0
            = \frac{(h)_l\,(c+1)_l}{(h-c)_l\; l!} N_0,
        \qquad c = \frac{2}{a-1},

    evaluated with rising products so that no Gamma function is ever computed.
    '''
    a, h = as_rational(a), as_rational(h)
    c = 2 / (a - 1)
    if (a - 1) * h <= 2:
        raise ValueError(f'The closed form needs (a-1)h > 2; got a={a}, h={h}.')
    return rising_product(h, l) * rising_product(c + 1, l) / (rising_product(h - c, l) * rising_product(1, l)) * N0

def cross_spectrum(space, l_max):
    r'''
    The levels $(\Lambda_l, m_l)$ for $l = 0, \ldots, l_{\text{max}}$ in absolute units, with $m_0 = 1$.
    '''
    levels = [(Fraction(0), 1)] + [(cross_eigenvalue(space, l), cross_multiplicity(space, l)) for l in range(1, l_max + 1)]
    return Spectrum(levels, unit=ABSOLUTE, meta=f'{space}, l_max={l_max}')

def cross_spectrum_covering(space, N):
    r'''
    The shortest :func:`cross_spectrum` holding more than ``N`` eigenvalues, so that $\lambda_{N+1}$ is known.
    '''
    l_max = 0
    while cross_counting(space, l_max) <= N:
        l_max += 1
    logger.debug(f'{space} needs l_max={l_max} to cover N={N}.')
    return cross_spectrum(space, l_max)
