#!/usr/bin/env python

import json
from functools import partial

from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from spectral_sumrules.exactnum import as_rational
from spectral_sumrules.torus import moduli_grid, scan_moduli
from spectral_sumrules.cli import source
from spectral_sumrules.cli.emit import stamp, render, write

import logging
logger = logging.getLogger(__name__)

def add_parser(subparsers, output):
    r'''The ``scan`` command; violations are data, so it exits 0 whenever the scan completes.'''
    parser = subparsers.add_parser('scan', parents=[output], help='Check the quadratic inequality across a grid of flat tori.')
    parser.add_argument('--a', type=source.rational_range, required=True, help='START:STOP:STEP or a comma-separated list.')
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument('--bsq', type=source.rational_range, help='START:STOP:STEP or a comma-separated list.')
    which.add_argument('--boundary', action='store_true', help='Use b^2 = 1 - a^2, the edge of the fundamental domain.')
    parser.add_argument('--numax', type=as_rational, default=30)
    parser.add_argument('--nmax', type=int, default=10)
    parser.add_argument('--workers', type=int, default=1)
    parser.set_defaults(run=run, grid=None)
    return parser

def grid(args):
    return moduli_grid(args.a, args.bsq, boundary=args.boundary)

def run(config, args):
    with logging_redirect_tqdm():
        records = scan_moduli(config.grid, config.nu_max, config.N_max, workers=config.workers,
                              progress=partial(tqdm, desc='Moduli', disable=None))

    rows = [{'a': r['a'], 'b_sq': r['b_sq'], 'in_tau': r['in_tau'], **detail} for r in records for detail in r['details']]
    violating = [(r['a'], r['b_sq']) for r in records if r['violations']]
    text = render(config,
                  json.dumps([stamp(record, config) for record in records], indent=2),
                  rows, ['a', 'b_sq', 'in_tau', 'N', 'holds', 'residual_lower', 'residual_upper'],
                  violating)
    write(config, text)
    logger.info(f'{len(violating)} of {len(records)} moduli violate the inequality somewhere.')
    return 0
