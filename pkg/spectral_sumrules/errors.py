#!/usr/bin/env python

r'''
Every failure mode a verification can hit has its own exception.
Each one subclasses the closest builtin so that ``except ValueError`` keeps working for callers that don't care which.
'''

class InternalNonInteger(ArithmeticError):
    r'''A closed-form count evaluated to a non-integer; the formula was transcribed wrong.'''

class UnsupportedParameter(ValueError):
    r'''The parameters are outside the family a generator knows how to build.'''

class ParseError(ValueError):
    r'''Ingested content could not be understood.'''

class NegativeEigenvalue(ValueError):
    r'''An ingested spectrum contained a negative value.'''

class InsufficientLevels(ValueError):
    r'''The spectrum is not known far enough; extend the cutoff and try again.'''

class EmptyInput(ValueError):
    r'''A sum over eigenvalues was asked for with no eigenvalues.'''

class GrowthConditionViolated(ArithmeticError):
    r'''
    The counting recurrence hit a nonpositive denominator.

    Parameters
    ----------
    step: int
        The index $n$ at which $a\tilde{\Lambda}_{n+1} - \tilde{\Lambda}_{n+2} \leq 0$.
    '''
    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f'Growth condition violated at step n={step}.')

class ZeroVector(ValueError):
    r'''A dual vector that must be nonzero was $(0,0)$.'''

class InsufficientCutoff(ValueError):
    r'''A shifted wave vector left the enumerated range.'''

class EmptyEigenspace(ValueError):
    r'''No dual vectors have the requested norm.'''

class NotAGap(ValueError):
    r'''$\lambda_N = \lambda_{N+1}$, so there is nothing to check.'''

class SampleOutOfRange(ValueError):
    r'''A sample point lies outside the interval on which the inequality is claimed.'''
