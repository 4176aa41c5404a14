#!/usr/bin/env python

from fractions import Fraction

import spectral_sumrules
from spectral_sumrules.torus import TorusModuli, torus_spectrum
from spectral_sumrules.sumrule import check_inequality
from spectral_sumrules.exactnum import rational_str

parser = spectral_sumrules.cli.ArgumentParser(description='Watch the N=3 inequality on rectangular tori change verdict at b^2 = 8/3.')
parser.add_argument('--bsq', type=Fraction, nargs='*', default=[Fraction(3, 2), 2, Fraction(5, 2), Fraction(8, 3), Fraction(11, 4), 3, 4, 9])
args = parser.parse_args()

for b_sq in args.bsq:
    s, _ = torus_spectrum(TorusModuli(0, b_sq), 4)
    report = check_inequality(s, 2, 3)
    lower, upper = report.witnesses
    print(f'b^2 = {rational_str(b_sq):>5}   residual = {str(report.residual):>16}   at lambda_4 = {rational_str(upper[1]):>8}   {"holds" if report else "FAILS"}')
