import argparse
import sys

import spectral_sumrules.meta

import logging
logger = logging.getLogger(__name__)

from .log import defaults as log_defaults
from .metadata import defaults as meta_defaults
from .precision import defaults as precision_defaults
from .config import RunConfig, EMIT_FORMATS

def defaults():
    r'''
    The standard-library ``ArgumentParser`` objects every program shares:

    * :func:`spectral_sumrules.cli.log.defaults`
    * :func:`spectral_sumrules.cli.metadata.defaults`
    * :func:`spectral_sumrules.cli.precision.defaults`
    '''
    return [
            log_defaults(),
            meta_defaults(),
            precision_defaults(),
            ]

def output_defaults():
    r'''``--emit``, ``--output``, and ``--no-timestamp``, for every command that writes something.'''
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--emit', choices=EMIT_FORMATS, default='json', help='json, csv, or plot-data (x,y columns).')
    output.add_argument('--output', type=str, default=None, help='Write here instead of standard output.')
    output.add_argument('--no-timestamp', action='store_true', help='Leave the timestamp out, so that reruns are byte-identical.')
    return output

class ArgumentParser(argparse.ArgumentParser):
    r'''
    Forwards everything to the standard library's ``ArgumentParser`` but adds :func:`~.cli.defaults` to the ``parents``.
    '''
    def __init__(self, *args, **kwargs):
        k = {**kwargs}
        k['parents'] = k.get('parents', []) + defaults()
        super().__init__(*args, **k, epilog=f'Built on spectral_sumrules by {spectral_sumrules.meta.authors}.')

    def parse_args(self, args=None, namespace=None):
        r'''Parse as usual, then log every parsed value at DEBUG.'''
        parsed = super().parse_args(args, namespace)
        for arg in parsed.__dict__:
            logger.debug(f'{arg}: {parsed.__dict__[arg]}')
        return parsed

def parser():
    r'''The full ``spectrum`` / ``verify`` / ``scan`` command line.'''
    from . import generate, verify, scan

    p = ArgumentParser(prog='spectral_sumrules', description='Exact checks of Laplacian sum rules.')
    commands = p.add_subparsers(dest='command', required=True, parser_class=argparse.ArgumentParser)
    output = output_defaults()
    generate.add_parser(commands, output)
    verify.add_parser(commands, output)
    scan.add_parser(commands, output)
    return p

def main(argv=None):
    r'''
    Run the command line and return the exit code:
    0 on success, 1 when ``verify`` finds a violation, and 2 for bad usage or invalid input.
    An exact computation that cannot proceed, like the recurrence from ``--n0 0``, also exits with 2.
    '''
    from . import scan

    p = parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else 0

    try:
        if args.command == 'scan':
            args.grid = scan.grid(args)
        config = RunConfig.from_arguments(args)
        logger.debug(str(config))
        return args.run(config, args)
    except (ValueError, ArithmeticError) as error:
        logger.error(str(error))
        print(f'{p.prog}: error: {error}', file=sys.stderr)
        return 2
