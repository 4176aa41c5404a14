#!/usr/bin/env python

from fractions import Fraction
from pathlib import Path

from spectral_sumrules.exactnum import as_rational
from spectral_sumrules.spectrum import CrossSpace, cross_spectrum, cross_eigenvalue, cross_counting, load_spectrum, ABSOLUTE, FOUR_PI_SQUARED
from spectral_sumrules.torus import TorusModuli, torus_spectrum

import logging
logger = logging.getLogger(__name__)

_units = {'absolute': ABSOLUTE, '4pi^2': FOUR_PI_SQUARED}

def add_arguments(parser, torus_only=False):
    r'''
    The options naming a spectrum: ``--cross FAMILY --dim D``, ``--torus A,BSQ``, or ``--input PATH``, with their cutoffs.
    '''
    which = parser.add_mutually_exclusive_group(required=True)
    if not torus_only:
        which.add_argument('--cross', type=str, metavar='FAMILY', help='A CROSS family; needs --dim.')
        which.add_argument('--input', type=Path, help='An ingested spectrum: JSON, plain text, or .h5.')
    which.add_argument('--torus', type=TorusModuli.parse, metavar='A,BSQ', help='The flat torus with moduli a and b^2.')

    parser.add_argument('--numax', type=as_rational, help='Torus enumeration cutoff, in units of 4pi^2.')
    if torus_only:
        return

    parser.add_argument('--dim', type=int, help='The dimension; required with --cross and --input.')
    parser.add_argument('--lmax', type=int, help='Highest CROSS level.')
    parser.add_argument('--mode', choices=('exact', 'float'), default='exact', help='How to read --input.')
    parser.add_argument('--tolerance', type=float, default=1e-9, help='Relative merge tolerance for --mode float.')
    parser.add_argument('--unit', choices=tuple(_units), default='absolute', help='The unit of plain-text --input.')
    parser.add_argument('--lambda1', type=as_rational, help='The ambient first positive level; by default the second level of the spectrum.')

def dimension(args):
    if getattr(args, 'torus', None) is not None:
        return 2
    if args.dim is None:
        raise ValueError('--dim is required with --cross and --input.')
    return args.dim

def spectrum(args, N=None, z=None):
    r'''
    The spectrum the options name, long enough to hold more than ``N`` eigenvalues and complete past ``z`` when those are given.
    '''
    z = as_rational(z) if z is not None else None

    if getattr(args, 'torus', None) is not None:
        nu_max = args.numax or Fraction(10)
        if z is not None:
            nu_max = max(nu_max, z)
        s, _ = torus_spectrum(args.torus, nu_max)
        while N is not None and s.total <= N:
            nu_max *= 2
            s, _ = torus_spectrum(args.torus, nu_max)
        return s

    if getattr(args, 'cross', None) is not None:
        space = CrossSpace(args.cross, dimension(args))
        l_max = args.lmax or (1 if (N is not None or z is not None) else 10)
        while N is not None and cross_counting(space, l_max) <= N:
            l_max += 1
        while z is not None and cross_eigenvalue(space, l_max) < z:
            l_max += 1
        return cross_spectrum(space, l_max)

    s = load_spectrum(args.input, mode=args.mode, dedupe_tolerance=args.tolerance, unit=_units[args.unit])
    if N is not None and s.total <= N:
        raise ValueError(f'{args.input} holds {s.total} eigenvalues; N={N} needs more.')
    return s

def rational_list(text):
    r'''``'1,3/2,2'`` as a list of exact rationals.'''
    return [as_rational(x) for x in text.split(',') if x.strip()]

def rational_range(text):
    r'''
    Either ``START:STOP:STEP``, inclusive of ``STOP`` when the steps land on it, or a comma-separated list.

    >>> rational_range('0:1/2:1/10')
    [Fraction(0, 1), Fraction(1, 10), Fraction(1, 5), Fraction(3, 10), Fraction(2, 5), Fraction(1, 2)]
    '''
    if ':' not in text:
        return rational_list(text)
    try:
        start, stop, step = (as_rational(x) for x in text.split(':'))
    except ValueError as error:
        raise ValueError(f'Expected START:STOP:STEP, got {text!r}.') from error
    if step <= 0:
        raise ValueError(f'The step must be positive, got {step}.')
    values = []
    value = start
    while value <= stop:
        values.append(value)
        value += step
    return values
