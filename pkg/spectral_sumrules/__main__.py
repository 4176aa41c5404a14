#!/usr/bin/env python

import sys

from spectral_sumrules.cli import main

sys.exit(main())
