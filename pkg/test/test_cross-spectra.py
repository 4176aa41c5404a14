#!/usr/bin/env python

from fractions import Fraction

import pytest

from spectral_sumrules.spectrum import (CrossSpace, cross_parameters, cross_eigenvalue, cross_multiplicity, cross_counting,
                                        counting_gamma_ratio, cross_spectrum, cross_spectrum_covering, oscillator_spectrum)
from spectral_sumrules.sumrule import gap_indices, check_identity, recurrence_counts, check_gap_condition, spectrum_gap_condition
from spectral_sumrules.spectrum import Spectrum
from spectral_sumrules.errors import UnsupportedParameter

import harness

@pytest.mark.parametrize('l', range(1, 31))
def test_low_dimensional_multiplicities(l):
    assert cross_multiplicity(CrossSpace('sphere', 2), l) == 2 * l + 1
    assert cross_multiplicity(CrossSpace('sphere', 3), l) == (l + 1)**2
    assert cross_multiplicity(CrossSpace('complex_projective', 2), l) == 2 * l + 1
    assert cross_multiplicity(CrossSpace('real_projective', 2), l) == 4 * l + 1

def test_first_multiplicities():
    assert cross_multiplicity(CrossSpace('quaternionic_projective', 4), 1) == 5
    assert cross_multiplicity(CrossSpace('cayley', 16), 1) == 26

@pytest.mark.parametrize('family, d', (
    ('sphere', 1),
    ('complex_projective', 3),
    ('quaternionic_projective', 6),
    ('cayley', 8),
    ('torus', 2),
))
def test_unsupported_spaces(family, d):
    with pytest.raises(ValueError):
        CrossSpace(family, d)

@harness.for_each_cross_space
def test_counting_is_partial_sum_of_multiplicities(space):
    running = 1
    for l in range(1, 21):
        running += cross_multiplicity(space, l)
        assert cross_counting(space, l) == running

@harness.for_each_cross_space
def test_a_is_one_plus_four_over_d(space):
    h, a = cross_parameters(space)
    assert a == 1 + Fraction(4, space.dimension)
    assert h == cross_eigenvalue(space, 1)

@harness.for_each_cross_space
def test_identity_at_every_gap(space):
    s = cross_spectrum(space, 21)
    for N in gap_indices(s, s.counts[-2]):
        report = check_identity(s, space.dimension, N)
        assert report.holds, str(report)
        assert report.residual.is_zero()

@harness.for_each_cross_space
def test_recurrence_reproduces_closed_forms(space):
    h, a = cross_parameters(space)
    levels = [cross_eigenvalue(space, l) for l in range(52)]
    counts = recurrence_counts(levels, a, h)

    assert len(counts) == 51
    assert all(integer for _, integer in counts)
    values = [N for N, _ in counts]
    assert values == [cross_counting(space, l) for l in range(51)]
    assert all(lower < upper for lower, upper in zip(values, values[1:]))

@pytest.mark.parametrize('space', (CrossSpace('sphere', 2), CrossSpace('sphere', 5), CrossSpace('real_projective', 4)), ids=str)
def test_gamma_ratio_agrees_with_closed_forms(space):
    h, a = cross_parameters(space)
    for l in range(12):
        assert counting_gamma_ratio(a, h, l) == cross_counting(space, l)

@harness.for_each_cross_space
def test_shifted_gap_condition(space):
    h, a = cross_parameters(space)
    s = cross_spectrum(space, 8)
    for N in s.counts[:-1]:
        assert spectrum_gap_condition(s, a, N, h)

def test_covering_spectrum():
    space = CrossSpace('sphere', 2)
    s = cross_spectrum_covering(space, 9)
    # N_2 = 9, so lambda_10 needs the level l=3.
    assert len(s) == 4
    assert s.total > 9

####
#### Sequences with a in {3, 5}
####

def test_oscillator_gap_condition():
    s = oscillator_spectrum(3, 25)
    lambdas = s.flatten(21)
    for N in s.counts:
        if N > 20:
            break
        assert check_gap_condition(lambdas, 3, N)

def test_circle_gap_condition():
    # The circle, d=1, has a=5 and h=Lambda_1=1.
    s = Spectrum([(0, 1)] + [(l * l, 2) for l in range(1, 15)])
    lambdas = s.flatten(22)
    for N in s.counts:
        if N > 20:
            break
        assert check_gap_condition(lambdas, 5, N, h=1)
        assert spectrum_gap_condition(s, 5, N, h=1)

@pytest.mark.parametrize('N', range(1, 21))
def test_odd_sequence_gap_condition(N):
    lambdas = [2 * j - 1 for j in range(1, 22)]
    assert check_gap_condition(lambdas, 3, N)

@pytest.mark.parametrize('N', range(1, 21))
def test_centered_square_gap_condition(N):
    lambdas = [2 * j * j - 2 * j + 1 for j in range(1, 22)]
    assert check_gap_condition(lambdas, 5, N)

def test_gap_condition_counterexample():
    # 1·(2 + 1) != 4·1
    assert not check_gap_condition([1, 2], 3, 1)

@pytest.mark.parametrize('a', (2, 3, Fraction(3, 2)))
def test_oscillator_counts_solve_the_recurrence(a):
    s = oscillator_spectrum(a, 10)
    counts = recurrence_counts(s.values, a, 0, N0=s.multiplicities[0])
    assert [N for N, _ in counts] == s.counts[:-1]

def test_oscillator_rejects_non_integer_c():
    with pytest.raises(UnsupportedParameter):
        oscillator_spectrum(5, 3)
