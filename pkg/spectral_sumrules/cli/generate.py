#!/usr/bin/env python

import json

from spectral_sumrules.exactnum import as_rational, rational_str
from spectral_sumrules.spectrum import CrossSpace, cross_spectrum, oscillator_spectrum, spectrum_to_json, write_h5
from spectral_sumrules.torus import TorusModuli, torus_spectrum
from spectral_sumrules.cli.emit import stamp, render, write

import logging
logger = logging.getLogger(__name__)

def add_parser(subparsers, output):
    r'''The ``spectrum`` command, with one sub-command per generator.'''
    parser = subparsers.add_parser('spectrum', help='Write a spectrum.')
    kinds = parser.add_subparsers(dest='kind', required=True)

    cross = kinds.add_parser('cross', parents=[output], help='A compact rank-one symmetric space.')
    cross.add_argument('family', type=str)
    cross.add_argument('--dim', type=int, required=True)
    cross.add_argument('--lmax', type=int, default=5)

    torus = kinds.add_parser('torus', parents=[output], help='A flat torus.')
    torus.add_argument('--a', type=as_rational, required=True)
    torus.add_argument('--bsq', type=as_rational, required=True)
    torus.add_argument('--numax', type=as_rational, default=10)

    oscillator = kinds.add_parser('oscillator', parents=[output], help='A harmonic-oscillator-like sequence.')
    oscillator.add_argument('--a', type=as_rational, required=True)
    oscillator.add_argument('--lmax', type=int, default=5)

    for generator in (cross, torus, oscillator):
        generator.add_argument('--h5', type=str, default=None, help='Also archive the spectrum in this HDF5 file.')
        generator.set_defaults(run=run)

    return parser

def build(args):
    if args.kind == 'cross':
        return cross_spectrum(CrossSpace(args.family, args.dim), args.lmax)
    if args.kind == 'torus':
        s, _ = torus_spectrum(TorusModuli(args.a, args.bsq), args.numax)
        return s
    return oscillator_spectrum(args.a, args.lmax)

def run(config, args):
    s = build(args)
    logger.info(f'Built {s}.')

    if args.h5:
        write_h5(s, args.h5)

    rows = [{'value': rational_str(v), 'mult': m, 'count': N} for (v, m), N in zip(s.levels, s.counts)]
    text = render(config,
                  json.dumps(stamp(spectrum_to_json(s), config), indent=2),
                  rows, ['value', 'mult', 'count'],
                  [(rational_str(v), m) for v, m in s.levels])
    write(config, text)
    return 0
