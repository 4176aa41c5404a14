#!/usr/bin/env python

import argparse
import os

import mpmath

from spectral_sumrules.cli.log import StarStarSugar

import logging
logger = logging.getLogger(__name__)

ENVIRONMENT_VARIABLE = 'SPECTRAL_SUMRULES_PRECISION'

class Precision(StarStarSugar):
    r'''
    Sets ``mpmath.mp.dps``, the significant digits used wherever a bound is irrational.
    The default comes from the environment variable ``SPECTRAL_SUMRULES_PRECISION``, else 50.
    '''

    parameters = {
            'type': int,
            'help': f'Significant digits for floating-point bounds; overrides ${ENVIRONMENT_VARIABLE}.',
            }

    def __init__(self, **kwargs):
        super().__init__(default=int(os.environ.get(ENVIRONMENT_VARIABLE, 50)), **kwargs)

    def method(self, digits):
        digits = int(digits)
        if digits < 15:
            raise ValueError(f'The precision must be at least 15 digits, got {digits}.')
        mpmath.mp.dps = digits
        logger.debug(f'mpmath precision set to {digits} digits.')

def defaults():
    r'''An ``ArgumentParser`` with ``--precision``.'''
    precision_arguments = argparse.ArgumentParser(add_help=False)
    precision_arguments.add_argument('--precision', **Precision())
    return precision_arguments
