import pickle

import numpy as np

import logging
logger = logging.getLogger(__name__)

class Data:
    # Data is the dispatcher between python values and HDF5 groups and datasets.
    # Strategies inherit from Data and register themselves under a name;
    # the name is written into the HDF5 attributes so reading picks the same strategy.
    _strategies = {}

    # A strategy may carry metadata (say, a format version) that is stored alongside the data
    # and compared on read.
    metadata = {}

    @staticmethod
    def _mark(node, name, strategy):
        node.attrs['spectral_sumrules_strategy'] = name
        for key, value in strategy.metadata.items():
            node.attrs[f'spectral_sumrules_{key}'] = value

    @staticmethod
    def _check(node, strategy, strict):
        for key, current in strategy.metadata.items():
            stored = node.attrs.get(f'spectral_sumrules_{key}', current)
            if stored != current:
                message = f"Format mismatch for {node.name}: stored with {key}='{stored}' but currently '{current}'."
                if strict:
                    raise ValueError(message)
                logger.warning(message)

    def __init_subclass__(cls, name):
        Data._strategies[name] = cls

    @staticmethod
    def write(group, key, value):
        # Later registrations are more specific, so they are tried first.
        for name, strategy in reversed(Data._strategies.items()):
            if strategy.applies(value):
                logger.debug(f'Writing {group.name}/{key} as {name}.')
                node = strategy.write(group, key, value)
                Data._mark(node, name, strategy)
                return node

        logger.warning(f'No strategy for {type(value).__name__}; pickling {group.name}/{key}.')
        group[key] = np.void(pickle.dumps(value))
        return group[key]

    @staticmethod
    def read(node, strict=True):
        name = node.attrs.get('spectral_sumrules_strategy', None)
        if name is None:
            logger.debug(f'Reading {node.name} by unpickling.')
            return pickle.loads(node[()].tobytes())

        logger.debug(f'Reading {node.name} as {name}.')
        strategy = Data._strategies[name]
        Data._check(node, strategy, strict)
        return strategy.read(node, strict)
