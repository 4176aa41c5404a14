#!/usr/bin/env python

from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

import spectral_sumrules
from spectral_sumrules.spectrum import CrossSpace, FAMILIES, cross_spectrum
from spectral_sumrules.sumrule import gap_indices, check_identity

parser = spectral_sumrules.cli.ArgumentParser(description='Check that P_N = Q_N exactly at every gap index of every CROSS family in a range of dimensions.')
parser.add_argument('--dmax', type=int, default=16, help='Largest dimension.  Defaults to 16.')
parser.add_argument('--lmax', type=int, default=20, help='Highest level.  Defaults to 20.')
args = parser.parse_args()

import logging
logger = logging.getLogger(__name__)

spaces = []
for family in FAMILIES:
    for d in range(1, args.dmax + 1):
        try:
            spaces.append(CrossSpace(family, d))
        except ValueError:
            pass

failures = 0
with logging_redirect_tqdm():
    for space in tqdm(spaces):
        s = cross_spectrum(space, args.lmax)
        for N in gap_indices(s, s.counts[-2]):
            report = check_identity(s, space.dimension, N)
            if not report:
                logger.error(str(report))
                failures += 1

print(f'{len(spaces)} spaces, {failures} failures.')
