#!/usr/bin/env python

from fractions import Fraction

import spectral_sumrules
from spectral_sumrules.torus import TorusModuli, torus_spectrum
from spectral_sumrules.riesz import weyl_ratio
from spectral_sumrules.exactnum import PiPower

parser = spectral_sumrules.cli.ArgumentParser(description='R_2(z) divided by its Weyl bound on a torus approaches 1 from below.')
parser.add_argument('--torus', type=TorusModuli.parse, default='0,1', help='a,b^2.  Must have a rational area.  Defaults to the square torus.')
parser.add_argument('--area', type=PiPower.parse, default='1', help='The area b.  Defaults to 1.')
parser.add_argument('--zmax', type=Fraction, default=Fraction(400), help='In units of 4pi^2.  Defaults to 400.')
args = parser.parse_args()

s, _ = torus_spectrum(args.torus, args.zmax)
Lambda1 = s.first_positive_level()
z = Fraction(1, 2)
while z <= args.zmax:
    print(f'{float(z):10.2f} {weyl_ratio(s, 2, Lambda1, args.area, z):.6f}')
    z *= 2
