#!/usr/bin/env python

from spectral_sumrules.exactnum import as_rational, rational_str
from spectral_sumrules.sumrule.polynomial import QuadPoly

class CheckReport:
    r'''
    The outcome of one exact check.

    Parameters
    ----------
        kind: str
            Which check produced the report, for example ``'identity'``.
        holds: bool
        residual: QuadPoly or None
            The difference of the two sides, so that ``holds`` can be reproduced from it.
        witnesses: list of (z, value)
            The exact points at which the verdict was decided and the residual there.
        notes: str
        N: int or None
            The gap index, when there is one.
    '''

    def __init__(self, kind, holds, residual=None, witnesses=(), notes='', N=None):
        self.kind = kind
        self.holds = bool(holds)
        self.residual = residual
        self.witnesses = list(witnesses)
        self.notes = notes
        self.N = N

    def __str__(self):
        verdict = 'holds' if self.holds else 'VIOLATED'
        where = f' N={self.N}' if self.N is not None else ''
        return f'CheckReport({self.kind}{where}: {verdict}, residual={self.residual})'

    def __repr__(self):
        return str(self)

    def __bool__(self):
        return self.holds

    def to_json(self):
        r'''
        .. code-block:: json

            {"kind": "identity", "holds": false, "residual": {"c2": "0", "c1": "-6", "c0": "6"}, "witnesses": [["1", "0"], ["2", "-6"]], "notes": "...", "N": 5}
        '''
        data = {
            'kind': self.kind,
            'holds': self.holds,
            'residual': self.residual.to_json() if self.residual is not None else None,
            'witnesses': [[rational_str(z), rational_str(value)] for z, value in self.witnesses],
            'notes': self.notes,
        }
        if self.N is not None:
            data['N'] = self.N
        return data

    @classmethod
    def from_json(cls, data):
        residual = QuadPoly.from_json(data['residual']) if data.get('residual') else None
        witnesses = [(as_rational(z), as_rational(v)) for z, v in data['witnesses']]
        return cls(data['kind'], data['holds'], residual, witnesses, data.get('notes', ''), data.get('N'))
