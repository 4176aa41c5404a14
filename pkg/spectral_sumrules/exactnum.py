#!/usr/bin/env python

from fractions import Fraction
from functools import reduce, total_ordering
import operator
import re

import mpmath
from scipy.special import comb

import logging
logger = logging.getLogger(__name__)

Rational = Fraction
r'''
Exact rationals are the standard library's ``Fraction``, which always stores lowest terms with a positive denominator.
'''

def as_rational(value):
    r'''
    Convert ``value`` into a :data:`Rational` without losing anything.

    Parameters
    ----------
        value: str, int, Fraction, or float
            Strings may be ``'p/q'``, integers, or decimals such as ``'1.25'`` or ``'1e-3'``.
            Floats are exactified through their shortest ``repr``, so ``0.1`` becomes ``1/10`` rather than the binary expansion.

    Returns
    -------
        Fraction
    '''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f'Refusing to interpret {value} as a rational.')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(str(value).strip().replace('−', '-'))

def rational_str(x):
    r'''
    The report serialization: ``'4/3'``, or ``'4'`` when the denominator is 1.

    >>> rational_str(Fraction(8, 6))
    '4/3'
    '''
    return str(Fraction(x))

def binomial(n, k):
    r'''
    $\binom{n}{k}$ for nonnegative integers, exactly; 0 when $k > n$.

    >>> binomial(5, 2)
    10
    '''
    if n < 0 or k < 0:
        raise ValueError(f'binomial needs nonnegative arguments, got ({n}, {k}).')
    return int(comb(n, k, exact=True))

def rising_product(x, k):
    r'''
    .. math::
        (x)_k = \prod_{i=0}^{k-1} (x+i) = \frac{\Gamma(x+k)}{\Gamma(x)}

    with the empty product equal to 1.
    '''
    if k < 0:
        raise ValueError(f'rising_product needs k >= 0, got {k}.')
    x = as_rational(x)
    return reduce(operator.mul, (x + i for i in range(k)), Fraction(1))

def generalized_binomial(x, k):
    r'''
    $\binom{x}{k} = \frac{(x-k+1)_k}{k!}$ for rational $x$ and integer $k \geq 0$.
    For integer $x\geq 0$ it agrees with :func:`binomial`.
    '''
    x = as_rational(x)
    return rising_product(x - k + 1, k) / rising_product(1, k)

def exact_integer(value, context=''):
    r'''
    Return ``value`` as an ``int``, or raise :class:`~.InternalNonInteger` if it is not one.
    '''
    from spectral_sumrules.errors import InternalNonInteger

    value = as_rational(value)
    if value.denominator != 1:
        raise InternalNonInteger(f'{context} evaluated to {value}, which is not an integer.')
    return value.numerator

####
#### Powers of π
####

_pi_pattern = re.compile(r'''^\s*
    (?P<coefficient>[-+]?[0-9./]*)?\s*\*?\s*
    (?P<pi>pi|π)?
    (?:\s*(?:\^|\*\*)\s*(?P<power>[-+]?[0-9]+))?
    \s*$''', re.VERBOSE)

@total_ordering
class PiPower:
    r'''
    An exact number of the form $c\,\pi^k$ with rational $c$ and integer $k$.

    Products and integer powers stay exact.
    Comparisons between equal powers of π are exact; otherwise the comparison is made with mpmath at the current ``mpmath.mp.dps``,
    raising the working precision until the sign is unambiguous.

    Parameters
    ----------
        coefficient: rational-like
        power: int
    '''

    def __init__(self, coefficient, power=0):
        self.coefficient = as_rational(coefficient)
        self.power = int(power) if self.coefficient != 0 else 0

    @classmethod
    def parse(cls, text):
        r'''
        Read strings like ``'4pi'``, ``'1/12 pi^-1'``, ``'pi^2'``, or ``'3'``.
        '''
        if isinstance(text, PiPower):
            return text
        if not isinstance(text, str):
            return cls(text)
        match = _pi_pattern.match(text.replace('·', '*'))
        if not match or (not match['coefficient'] and not match['pi']):
            raise ValueError(f'Cannot read {text!r} as a rational multiple of a power of pi.')
        coefficient = match['coefficient'] or '1'
        if coefficient in ('+', '-'):
            coefficient += '1'
        power = 0
        if match['pi']:
            power = int(match['power']) if match['power'] else 1
        elif match['power']:
            raise ValueError(f'{text!r} has an exponent but no pi.')
        return cls(coefficient, power)

    def __str__(self):
        if self.power == 0:
            return rational_str(self.coefficient)
        return f'{rational_str(self.coefficient)}·pi^{self.power}'

    def __repr__(self):
        return f'PiPower({self})'

    def __float__(self):
        return float(self.mpf())

    def mpf(self):
        r'''The value as an ``mpmath.mpf`` at the current precision.'''
        c = self.coefficient
        return mpmath.mpf(c.numerator) / c.denominator * mpmath.pi**self.power

    def __mul__(self, other):
        other = PiPower.parse(other)
        return PiPower(self.coefficient * other.coefficient, self.power + other.power)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = PiPower.parse(other)
        return PiPower(self.coefficient / other.coefficient, self.power - other.power)

    def __pow__(self, k):
        if int(k) != k:
            raise ValueError('Only integer powers stay exact.')
        k = int(k)
        return PiPower(self.coefficient**k, self.power * k)

    def __neg__(self):
        return PiPower(-self.coefficient, self.power)

    def __add__(self, other):
        other = PiPower.parse(other)
        if other.coefficient == 0:
            return self
        if self.coefficient == 0:
            return other
        if other.power != self.power:
            raise ValueError(f'Cannot add {self} and {other} exactly.')
        return PiPower(self.coefficient + other.coefficient, self.power)

    def sign(self):
        return (self.coefficient > 0) - (self.coefficient < 0)

    def compare(self, other):
        r'''
        Returns -1, 0, or +1 as ``self`` is less than, equal to, or greater than ``other``.
        '''
        other = PiPower.parse(other)

        if self.power == other.power or self.coefficient == 0 or other.coefficient == 0:
            if self.power == other.power:
                difference = self.coefficient - other.coefficient
                return (difference > 0) - (difference < 0)
            return (self.sign() > other.sign()) - (self.sign() < other.sign())

        if self.sign() != other.sign():
            return (self.sign() > other.sign()) - (self.sign() < other.sign())

        # π is transcendental, so c1 π^k1 ≠ c2 π^k2 when k1 ≠ k2; only precision can hide the sign.
        digits = mpmath.mp.dps
        while True:
            with mpmath.workdps(digits):
                left, right = self.mpf(), other.mpf()
                difference = left - right
                scale = max(abs(left), abs(right))
                if abs(difference) > scale * mpmath.mpf(10)**(5 - digits):
                    return 1 if difference > 0 else -1
            logger.debug(f'Comparison of {self} and {other} ambiguous at {digits} digits.')
            digits *= 2
            if digits > 10000:
                raise ArithmeticError(f'Could not separate {self} from {other}.')

    def __eq__(self, other):
        try:
            return self.compare(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __hash__(self):
        return hash((self.coefficient, self.power))
