import pytest
from functools import wraps
from fractions import Fraction

import spectral_sumrules
from spectral_sumrules.spectrum import CrossSpace
from spectral_sumrules.torus import TorusModuli, SQUARE, EQUILATERAL

def skip_on(exception, explanation):

    def the_decorator(f):

        @wraps(f)
        def decorated_f(*args, **kwargs):
            try:
                return f(*args, **kwargs)
            except exception:
                pytest.skip(explanation)

        return decorated_f

    return the_decorator

cross_spaces = (
    [CrossSpace('sphere', d) for d in range(2, 11)] +
    [CrossSpace('real_projective', d) for d in range(2, 11)] +
    [CrossSpace('complex_projective', d) for d in range(2, 11, 2)] +
    [CrossSpace('quaternionic_projective', d) for d in (4, 8, 12, 16)] +
    [CrossSpace('cayley', 16)]
)

named_tori = {
    'square': SQUARE,
    'equilateral': EQUILATERAL,
    'rectangular-2': TorusModuli(0, 2),
    'rectangular-4': TorusModuli(0, 4),
    'rectangular-9': TorusModuli(0, 9),
    'skew': TorusModuli(Fraction(1, 4), Fraction(15, 16)),
    'skew-tall': TorusModuli(Fraction(1, 3), 2),
}

def for_each_cross_space(f):

    @pytest.mark.parametrize('space', cross_spaces, ids=str)
    @wraps(f)
    def decorated_f(*args, **kwargs):
        return f(*args, **kwargs)

    return decorated_f

def for_each_named_torus(f):

    @pytest.mark.parametrize('mod', named_tori.values(), ids=list(named_tori.keys()))
    @wraps(f)
    def decorated_f(*args, **kwargs):
        return f(*args, **kwargs)

    return decorated_f

def for_each_irreducible_torus(f):

    @pytest.mark.parametrize('mod', (SQUARE, EQUILATERAL), ids=('square', 'equilateral'))
    @wraps(f)
    def decorated_f(*args, **kwargs):
        return f(*args, **kwargs)

    return decorated_f
