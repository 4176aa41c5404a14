#!/usr/bin/env python

import json
import math
from fractions import Fraction
from pathlib import Path

import h5py as h5

from spectral_sumrules.exactnum import rational_str
from spectral_sumrules.errors import ParseError, NegativeEigenvalue
from spectral_sumrules.spectrum.spectrum import Spectrum, UNITS, ABSOLUTE

import logging
logger = logging.getLogger(__name__)

_unit_from_file = {spelling: tag for tag, spelling in UNITS.items()}
_unit_from_file.update({tag: tag for tag in UNITS})

def spectrum_to_json(s):
    r'''
    The JSON-ready dictionary

    .. code-block:: json

        {"unit": "4pi^2", "levels": [{"value": "4/3", "mult": 6}], "meta": "...", "cutoff": "4", "approximate": false}
    '''
    return {
        'unit': UNITS[s.unit],
        'levels': [{'value': rational_str(v), 'mult': m} for v, m in s.levels],
        'meta': s.meta,
        'cutoff': rational_str(s.cutoff),
        'approximate': s.approximate,
    }

def spectrum_from_json(data, mode='exact', dedupe_tolerance=0.):
    r'''
    Inverse of :func:`spectrum_to_json`, also accepting files that omit ``cutoff`` and ``approximate``.
    Levels pass through the same parsing and merging as :func:`load_spectrum`.
    '''
    try:
        unit = _unit_from_file[data.get('unit', UNITS[ABSOLUTE])]
        raw = [(entry['value'], int(entry.get('mult', 1))) for entry in data['levels']]
    except (KeyError, TypeError, ValueError, AttributeError) as error:
        raise ParseError(f'Not a spectrum document: {error}') from error

    levels, approximate = _merge(_parse(raw, mode), mode, dedupe_tolerance)

    cutoff = data.get('cutoff', None)
    if cutoff is not None:
        cutoff = Fraction(str(cutoff))
        cutoff = max(cutoff, levels[-1][0])

    return Spectrum(levels, unit=unit, meta=data.get('meta', None), cutoff=cutoff,
                    approximate=approximate or bool(data.get('approximate', False)))

def load_spectrum(source, mode='exact', dedupe_tolerance=0., unit=ABSOLUTE):
    r'''
    Read an externally computed spectrum.

    Parameters
    ----------
        source: pathlib.Path or str
            A ``Path`` is read from disk; ``.h5`` files are read with :func:`read_h5`.
            A ``str`` is treated as the content itself.
            Content starting with ``{`` is a spectrum JSON document, anything else is one eigenvalue per line (blank lines and ``#`` comments are skipped).
        mode: ``'exact'`` or ``'float'``
            Exact mode needs every value to be an exact rational (``'p/q'``, integers, or decimal strings) and merges only exactly equal values.
            Float mode reads floating-point numbers, merges neighbors within ``dedupe_tolerance`` (relative), and marks the result approximate.
        dedupe_tolerance: float
            Relative tolerance for merging in float mode.
        unit: str
            The unit for plain-text input; JSON documents carry their own.

    Raises
    ------
        ParseError
        NegativeEigenvalue
    '''
    if mode not in ('exact', 'float'):
        raise ValueError(f'mode must be exact or float, not {mode!r}.')
    if dedupe_tolerance < 0:
        raise ValueError('The dedupe tolerance must be nonnegative.')

    if isinstance(source, Path):
        if source.suffix in ('.h5', '.hdf5'):
            return read_h5(source)
        logger.info(f'Reading spectrum from {source}.')
        try:
            content = source.read_text(encoding='utf-8')
        except OSError as error:
            raise ParseError(f'Cannot read {source}: {error}') from error
    else:
        content = source

    if content.lstrip().startswith('{'):
        try:
            data = json.loads(content)
        except json.JSONDecodeError as error:
            raise ParseError(f'Invalid JSON: {error}') from error
        return spectrum_from_json(data, mode, dedupe_tolerance)

    raw = []
    for line in content.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            raw.append((line, 1))
    if not raw:
        raise ParseError('No eigenvalues found.')

    levels, approximate = _merge(_parse(raw, mode), mode, dedupe_tolerance)
    meta = str(source) if isinstance(source, Path) else 'ingested'
    return Spectrum(levels, unit=unit, meta=meta, approximate=approximate)

def _parse(raw, mode):
    values = []
    for value, mult in raw:
        if mode == 'exact':
            if isinstance(value, float):
                raise ParseError(f'{value!r} is a floating-point number; exact mode needs exact rationals.')
            try:
                parsed = Fraction(str(value).strip().replace('−', '-'))
            except (ValueError, ZeroDivisionError) as error:
                raise ParseError(f'{value!r} is not an exact rational.') from error
        else:
            try:
                parsed = float(str(value).strip().replace('−', '-'))
            except ValueError as error:
                raise ParseError(f'{value!r} is not a number.') from error
            if not math.isfinite(parsed):
                raise ParseError(f'{value!r} is not finite.')
        if parsed < 0:
            raise NegativeEigenvalue(f'The eigenvalue {value} is negative.')
        if mult < 1:
            raise ParseError(f'{value} has multiplicity {mult}.')
        values.append((parsed, mult))
    return sorted(values, key=lambda vm: vm[0])

def _merge(values, mode, tolerance):
    levels = []
    for value, mult in values:
        if levels:
            representative, count = levels[-1]
            if mode == 'exact':
                same = (value == representative)
            else:
                same = abs(value - representative) <= tolerance * max(abs(value), abs(representative))
            if same:
                levels[-1] = (representative, count + mult)
                continue
        levels.append((value, mult))

    if mode == 'float':
        # The shortest decimal that round-trips is the exact value we carry forward.
        exactified = [(Fraction(repr(v)), m) for v, m in levels]
        for (lower, _), (upper, _) in zip(exactified, exactified[1:]):
            if not lower < upper:
                raise ParseError(f'Levels {lower} and {upper} collide after exactification.')
        return exactified, True

    return levels, False

def dump_spectrum(s, destination=None, **kwargs):
    r'''
    Serialize ``s`` as JSON.
    With a ``destination`` path the text is also written there.
    Extra keyword arguments become extra top-level keys (for example a timestamp).

    Returns
    -------
        str
    '''
    text = json.dumps({**spectrum_to_json(s), **kwargs}, indent=2)
    if destination is not None:
        Path(destination).write_text(text + '\n', encoding='utf-8')
        logger.info(f'Wrote {s} to {destination}.')
    return text

def write_h5(s, path, name='spectrum'):
    r'''Archive ``s`` into the HDF5 file at ``path`` under the group ``name``.'''
    with h5.File(path, 'a') as f:
        if name in f:
            del f[name]
        s.to_h5(f.create_group(name))

def read_h5(path, name='spectrum', strict=True):
    r'''Restore a spectrum written by :func:`write_h5`.'''
    with h5.File(path, 'r') as f:
        if name not in f:
            raise ParseError(f'{path} has no group {name!r}.')
        return Spectrum.from_h5(f[name], strict=strict)
