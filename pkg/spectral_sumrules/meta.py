version='0.1.0'
authors='The spectral_sumrules developers'
