#!/usr/bin/env python

import argparse
import spectral_sumrules.meta

def print_and_exit(description, data):
    r'''
    Options to **unpack into ``add_argument`` so that the flag prints ``data`` (called first, if callable) and exits.
    '''

    class anonymous(argparse.Action):
        def __call__(self, parser, namespace, values, option_string=None):
            print(data() if callable(data) else data)
            parser.exit()

    return {
            'help':   f'Print {description} and exit.',
            'action': anonymous,
            'nargs':  0,
            }

def defaults():
    r'''
    An ``ArgumentParser`` with ``--version``.
    '''
    meta_arguments = argparse.ArgumentParser(add_help=False)
    meta_arguments.add_argument('--version', **print_and_exit('the version', spectral_sumrules.meta.version))
    return meta_arguments
