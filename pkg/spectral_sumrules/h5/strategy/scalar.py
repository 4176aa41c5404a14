from spectral_sumrules.h5 import Data

class NoneType(Data, name='none'):

    @staticmethod
    def applies(value):
        return value is None

    @staticmethod
    def read(node, strict):
        return None

    @staticmethod
    def write(group, key, value):
        return group.create_group(key)

class Integer(Data, name='integer'):
    # Python ints are unbounded; the decimal string survives any size.

    @staticmethod
    def applies(value):
        return isinstance(value, int) and not isinstance(value, bool)

    @staticmethod
    def read(node, strict):
        return int(node.asstr()[()])

    @staticmethod
    def write(group, key, value):
        group[key] = str(value)
        return group[key]

class Boolean(Data, name='bool'):

    @staticmethod
    def applies(value):
        return isinstance(value, bool)

    @staticmethod
    def read(node, strict):
        return bool(node[()])

    @staticmethod
    def write(group, key, value):
        group[key] = value
        return group[key]

class String(Data, name='string'):

    @staticmethod
    def applies(value):
        return isinstance(value, str)

    @staticmethod
    def read(node, strict):
        return node.asstr()[()]

    @staticmethod
    def write(group, key, value):
        group[key] = value
        return group[key]
