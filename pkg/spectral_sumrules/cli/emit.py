#!/usr/bin/env python

import csv
import io
import json
import sys
from datetime import datetime, timezone

import logging
logger = logging.getLogger(__name__)

def stamp(record, config):
    r'''Add a ``timestamp`` key unless the run asked for none.'''
    if config.timestamp:
        return {**record, 'timestamp': datetime.now(timezone.utc).isoformat()}
    return record

def _csv(rows, columns):
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, extrasaction='ignore', lineterminator='\n')
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()

def render(config, json_text, rows=(), columns=(), points=()):
    r'''
    Choose the emitted text for ``config.emit``.

    Parameters
    ----------
        json_text: str
        rows, columns:
            The CSV table.
        points: iterable of (x, y)
            The plot data.
    '''
    if config.emit == 'json':
        return json_text
    if config.emit == 'csv':
        return _csv(rows, columns)
    return _csv([{'x': x, 'y': y} for x, y in points], ['x', 'y'])

def write(config, text):
    r'''Write ``text`` to ``config.output``, or to standard output.'''
    if not text.endswith('\n'):
        text += '\n'
    if config.output is None:
        sys.stdout.write(text)
        return
    config.output.write_text(text, encoding='utf-8')
    logger.info(f'Wrote {config.output}.')

def json_lines(records):
    return '\n'.join(json.dumps(record) for record in records)
