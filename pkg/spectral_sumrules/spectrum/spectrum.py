#!/usr/bin/env python

from itertools import accumulate

from spectral_sumrules.exactnum import as_rational, rational_str, PiPower
from spectral_sumrules.errors import InsufficientLevels
from spectral_sumrules.h5 import ReadWriteable

import logging
logger = logging.getLogger(__name__)

ABSOLUTE = 'absolute'
FOUR_PI_SQUARED = 'four-pi-squared'

UNITS = {
    ABSOLUTE:        'absolute',
    FOUR_PI_SQUARED: '4pi^2',
}
r'''Internal unit tags and their spelling in serialized files.'''

class Spectrum(ReadWriteable):
    r'''
    Eigenvalue levels $\Lambda_0 < \Lambda_1 < \cdots$ with multiplicities $M_l$.

    Parameters
    ----------
        levels: iterable of (value, multiplicity) pairs
            Values are converted to exact rationals; they must be strictly increasing and nonnegative, and every multiplicity must be at least one.
        unit: ``'absolute'`` or ``'four-pi-squared'``
            Whether a stored value $\nu$ stands for $\nu$ or for $4\pi^2\nu$.
        meta: str or None
            Where the spectrum came from.
        cutoff: rational-like or None
            The spectrum is known to be complete for values up to and including ``cutoff``.
            Defaults to the top level.
        approximate: bool
            Whether the values were exactified from floating-point input.
    '''

    def __init__(self, levels, unit=ABSOLUTE, meta=None, cutoff=None, approximate=False):

        if unit not in UNITS:
            raise ValueError(f'Unknown unit {unit!r}; must be one of {tuple(UNITS)}.')

        self.unit = unit
        self.levels = [(as_rational(value), int(mult)) for value, mult in levels]
        self.meta = meta
        self.approximate = bool(approximate)

        if not self.levels:
            raise ValueError('A spectrum needs at least one level.')
        if self.levels[0][0] < 0:
            raise ValueError(f'The first level {self.levels[0][0]} is negative.')
        for (lower, _), (upper, _) in zip(self.levels, self.levels[1:]):
            if not lower < upper:
                raise ValueError(f'Level values must strictly increase; found {lower} followed by {upper}.')
        for value, mult in self.levels:
            if mult < 1:
                raise ValueError(f'Level {value} has multiplicity {mult}.')

        self.cutoff = self.levels[-1][0] if cutoff is None else as_rational(cutoff)
        if self.cutoff < self.levels[-1][0]:
            raise ValueError(f'The cutoff {self.cutoff} lies below the top level {self.levels[-1][0]}.')

    def __str__(self):
        shown = ', '.join(f'({rational_str(v)}, {m})' for v, m in self.levels[:6])
        more = ', ...' if len(self.levels) > 6 else ''
        return f'Spectrum([{shown}{more}], unit={self.unit})'

    def __repr__(self):
        return str(self)

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return (self.unit, self.levels, self.cutoff) == (other.unit, other.levels, other.cutoff)

    @property
    def values(self):
        r'''The level values $\Lambda_l$.'''
        return [v for v, _ in self.levels]

    @property
    def multiplicities(self):
        r'''The multiplicities $M_l$.'''
        return [m for _, m in self.levels]

    @property
    def counts(self):
        r'''
        The partial sums $N_n = \sum_{j\leq n} M_j$, which are exactly the indices $N$ with $\lambda_N < \lambda_{N+1}$.
        '''
        return list(accumulate(self.multiplicities))

    @property
    def total(self):
        r'''The number of eigenvalues counted with multiplicity.'''
        return sum(self.multiplicities)

    def first_positive_level(self):
        r'''
        $\Lambda_1$, the second distinct level, which for a closed manifold is the first positive eigenvalue.
        '''
        if len(self.levels) < 2:
            raise InsufficientLevels('The spectrum has only one level, so it has no Λ_1.')
        return self.levels[1][0]

    def flatten(self, N):
        r'''See :func:`~.spectrum.flatten`.'''
        return flatten(self, N)

    def scaled(self, c):
        r'''
        Every value multiplied by the positive rational ``c``; the unit tag is kept, so use this for normalization experiments only.
        '''
        c = as_rational(c)
        if c <= 0:
            raise ValueError('The scale must be positive.')
        return Spectrum([(c * v, m) for v, m in self.levels], unit=self.unit, meta=self.meta, cutoff=c * self.cutoff, approximate=self.approximate)

    def in_absolute_units(self):
        r'''
        A list of $(\lambda, M)$ where $\lambda$ is a :class:`~.PiPower`, so four-pi-squared spectra pick up their factor of $4\pi^2$.
        '''
        factor = PiPower(4, 2) if self.unit == FOUR_PI_SQUARED else PiPower(1)
        return [(factor * PiPower(v), m) for v, m in self.levels]

def flatten(s, N):
    r'''
    The first $N$ eigenvalues $\lambda_1 \leq \cdots \leq \lambda_N$, each level $\Lambda_l$ repeated $M_l$ times.

    Parameters
    ----------
        s: Spectrum
        N: int
            A positive count.

    Returns
    -------
        list of Fraction

    Raises
    ------
        InsufficientLevels
            when the spectrum holds fewer than ``N`` eigenvalues.
    '''
    if N < 1:
        raise ValueError(f'N must be positive, got {N}.')
    if s.total < N:
        raise InsufficientLevels(f'Asked for {N} eigenvalues but the spectrum only has {s.total}; extend the cutoff.')

    flat = []
    for value, mult in s.levels:
        flat.extend([value] * min(mult, N - len(flat)))
        if len(flat) == N:
            break
    return flat
