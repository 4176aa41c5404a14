from spectral_sumrules.h5 import Data
import spectral_sumrules.h5.readwriteable as rw

# Nested ReadWriteable objects are written as subgroups; the concrete class is looked up
# among the subclasses of ReadWriteable by the name stored in the group.
class ReadWriteable(Data, name='readwriteable'):

    @staticmethod
    def applies(value):
        return isinstance(value, rw.ReadWriteable)

    @staticmethod
    def read(node, strict):
        name = node.attrs['class']
        for cls in _subclasses(rw.ReadWriteable):
            if cls.__name__ == name:
                return cls.from_h5(node, strict, _top=False)
        raise ValueError(f'No ReadWriteable class named {name} is loaded.')

    @staticmethod
    def write(group, key, value):
        g = group.create_group(key)
        value.to_h5(g, _top=False)
        return g

def _subclasses(cls):
    for sub in cls.__subclasses__():
        yield sub
        yield from _subclasses(sub)
