from .data import Data
from .readwriteable import ReadWriteable

import spectral_sumrules.h5.strategy as strategy
