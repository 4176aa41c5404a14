from spectral_sumrules.performance.timer import Timer
