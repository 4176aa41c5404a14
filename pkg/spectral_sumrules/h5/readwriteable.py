from spectral_sumrules.h5 import Data

import logging
logger = logging.getLogger(__name__)

class ReadWriteable:
    r'''
    Objects that inherit from ReadWriteable can be stored in and restored from an HDF5 group.
    Every entry of the object's ``__dict__`` is written with the :class:`~.Data` strategy that applies to it.

    .. warning::
        Values with no known strategy are pickled.
        **Loading pickled data received from untrusted sources can be unsafe.**
    '''

    def to_h5(self, group, _top=True):
        r'''
        Write the object into the HDF5 `group`_, one member per attribute.
        The class name is recorded so :func:`from_h5` can check it is restoring the right thing.

        .. _group: https://docs.hdfgroup.org/hdf5/develop/_h5_d_m__u_g.html#subsubsec_data_model_abstract_group
        '''
        (logger.info if _top else logger.debug)(f'Saving {self.__class__.__name__} to_h5 as {group.name}.')

        group.attrs['class'] = self.__class__.__name__
        for attr, value in self.__dict__.items():
            Data.write(group, attr, value)

    @classmethod
    def from_h5(cls, group, strict=True, _top=True):
        r'''
        Construct a fresh object from the HDF5 group written by :func:`to_h5`.
        With ``strict`` a class-name or format mismatch raises; otherwise it only warns.
        '''
        (logger.info if _top else logger.debug)(f'Reading {cls.__name__} from_h5 {group.name} {"strictly" if strict else "leniently"}.')

        stored = group.attrs.get('class', cls.__name__)
        if stored != cls.__name__:
            message = f'{group.name} holds a {stored}, not a {cls.__name__}.'
            if strict:
                raise ValueError(message)
            logger.warning(message)

        o = cls.__new__(cls)
        for field in group:
            o.__dict__[field] = Data.read(group[field], strict)
        return o
