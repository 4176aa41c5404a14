#!/usr/bin/env python

from pathlib import Path

from spectral_sumrules.exactnum import as_rational

import logging
logger = logging.getLogger(__name__)

EMIT_FORMATS = ('json', 'csv', 'plot-data')

class RunConfig:
    r'''
    Everything a command needs from the command line, validated.

    Parameters
    ----------
        command: str
            ``'spectrum'``, ``'verify'``, or ``'scan'``.
        kind: str or None
            The generator for ``spectrum`` or the check for ``verify``.
        input: pathlib.Path or None
            An ingested spectrum.
        output: pathlib.Path or None
            Where to write; standard output when absent.
        mode: ``'exact'`` or ``'float'``
        l_max, N_max: int or None
            Positive when given.
        nu_max: Fraction or None
            Positive when given.
        grid: list of TorusModuli
        emit: one of ``'json'``, ``'csv'``, ``'plot-data'``
        timestamp: bool
        workers: int

    Raises
    ------
        ValueError
            for nonpositive cutoffs, an unknown emit format, a missing input file, or an output in a missing directory.
    '''

    def __init__(self, command, kind=None, input=None, output=None, mode='exact',
                 l_max=None, nu_max=None, N_max=None, grid=(), emit='json', timestamp=True, workers=1):
        self.command = command
        self.kind = kind
        self.input = Path(input) if input is not None else None
        self.output = Path(output) if output is not None else None
        self.mode = mode
        self.l_max = l_max
        self.nu_max = as_rational(nu_max) if nu_max is not None else None
        self.N_max = N_max
        self.grid = list(grid)
        self.emit = emit
        self.timestamp = timestamp
        self.workers = workers

        for name in ('l_max', 'N_max', 'nu_max', 'workers'):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f'{name} must be positive, got {value}.')
        if self.mode not in ('exact', 'float'):
            raise ValueError(f'The mode must be exact or float, not {self.mode!r}.')
        if self.emit not in EMIT_FORMATS:
            raise ValueError(f'Cannot emit {self.emit!r}; choose one of {EMIT_FORMATS}.')
        if self.input is not None and not self.input.is_file():
            raise ValueError(f'The input {self.input} does not exist.')
        if self.output is not None and not self.output.parent.is_dir():
            raise ValueError(f'Cannot write {self.output}: {self.output.parent} is not a directory.')

    @classmethod
    def from_arguments(cls, args):
        r'''Build from a parsed ``argparse.Namespace``; absent options take the defaults above.'''
        get = lambda name, default=None: getattr(args, name, default)
        return cls(
            command=args.command,
            kind=get('kind'),
            input=get('input'),
            output=get('output'),
            mode=get('mode', 'exact'),
            l_max=get('lmax'),
            nu_max=get('numax'),
            N_max=get('nmax'),
            grid=get('grid', ()),
            emit=get('emit', 'json'),
            timestamp=not get('no_timestamp', False),
            workers=get('workers', 1),
        )

    def __str__(self):
        return f'RunConfig({", ".join(f"{k}={v}" for k, v in self.__dict__.items() if k != "grid")}, grid of {len(self.grid)})'
