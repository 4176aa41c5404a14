from .spectrum import Spectrum, flatten, ABSOLUTE, FOUR_PI_SQUARED, UNITS
from .cross import CrossSpace, FAMILIES, cross_parameters, cross_eigenvalue, cross_multiplicity, cross_counting, counting_gamma_ratio, cross_spectrum, cross_spectrum_covering
from .oscillator import oscillator_spectrum
from .io import load_spectrum, dump_spectrum, spectrum_to_json, spectrum_from_json, write_h5, read_h5
