from fractions import Fraction

from spectral_sumrules.h5 import Data

# Exact rationals are stored as their 'p/q' string so that no precision is lost
# and the file stays readable outside python.
class Rational(Data, name='fraction'):

    metadata = {'fraction_format': 'p/q'}

    @staticmethod
    def applies(value):
        return isinstance(value, Fraction)

    @staticmethod
    def read(node, strict):
        return Fraction(node.asstr()[()])

    @staticmethod
    def write(group, key, value):
        group[key] = str(value)
        return group[key]
