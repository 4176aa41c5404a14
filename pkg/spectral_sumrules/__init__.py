#!/usr/bin/env python

import spectral_sumrules.meta
from spectral_sumrules.exactnum import Rational, as_rational, rational_str, binomial, rising_product, generalized_binomial, PiPower
import spectral_sumrules.errors
import spectral_sumrules.h5
import spectral_sumrules.spectrum
from spectral_sumrules.spectrum import Spectrum, CrossSpace
from spectral_sumrules.torus import TorusModuli, DualVector
import spectral_sumrules.sumrule
import spectral_sumrules.frames
import spectral_sumrules.riesz
import spectral_sumrules.cli as cli
