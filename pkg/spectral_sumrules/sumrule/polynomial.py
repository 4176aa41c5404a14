#!/usr/bin/env python

from spectral_sumrules.exactnum import as_rational, rational_str

class QuadPoly:
    r'''
    The polynomial $c_2 z^2 + c_1 z + c_0$ with exact rational coefficients.

    >>> QuadPoly(5, -15, 10)(1)
    Fraction(0, 1)
    '''

    def __init__(self, c2=0, c1=0, c0=0):
        self.c2 = as_rational(c2)
        self.c1 = as_rational(c1)
        self.c0 = as_rational(c0)

    @property
    def coefficients(self):
        return (self.c2, self.c1, self.c0)

    def __call__(self, z):
        z = as_rational(z)
        return (self.c2 * z + self.c1) * z + self.c0

    def __add__(self, other):
        return QuadPoly(*(x + y for x, y in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        return QuadPoly(*(x - y for x, y in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return QuadPoly(-self.c2, -self.c1, -self.c0)

    def __mul__(self, scalar):
        scalar = as_rational(scalar)
        return QuadPoly(*(scalar * x for x in self.coefficients))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / as_rational(scalar))

    def __eq__(self, other):
        if not isinstance(other, QuadPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def is_zero(self):
        return self.coefficients == (0, 0, 0)

    def degree(self):
        r'''The degree, with $-1$ for the zero polynomial.'''
        for degree, c in zip((2, 1, 0), self.coefficients):
            if c != 0:
                return degree
        return -1

    def scaled(self, c):
        r'''The polynomial $c^2 p(z/c)$, which is how a residual transforms when every eigenvalue is multiplied by $c$.'''
        c = as_rational(c)
        return QuadPoly(self.c2, c * self.c1, c**2 * self.c0)

    @classmethod
    def product(cls, r1, r2, leading=1):
        r'''$\ell (z - r_1)(z - r_2)$.'''
        r1, r2 = as_rational(r1), as_rational(r2)
        return cls(1, -(r1 + r2), r1 * r2) * leading

    def __str__(self):
        terms = []
        for c, power in zip(self.coefficients, ('z^2', 'z', '')):
            if c == 0:
                continue
            magnitude = abs(c)
            shown = rational_str(magnitude) if (magnitude != 1 or not power) else ''
            sign = '-' if c < 0 else '+'
            terms.append((sign, f'{shown}{power}'))
        if not terms:
            return '0'
        first_sign, first = terms[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, term in terms[1:]:
            text += f' {sign} {term}'
        return text

    def __repr__(self):
        return f'QuadPoly({self})'

    def to_json(self):
        return {'c2': rational_str(self.c2), 'c1': rational_str(self.c1), 'c0': rational_str(self.c0)}

    @classmethod
    def from_json(cls, data):
        return cls(data['c2'], data['c1'], data['c0'])
