#!/usr/bin/env python

import json
from fractions import Fraction

import pytest

import spectral_sumrules
from spectral_sumrules.cli import main, parser
from spectral_sumrules.cli.config import RunConfig
from spectral_sumrules.cli.source import rational_range
from spectral_sumrules.cli.verify import registry

def records(path):
    return [json.loads(line) for line in path.read_text(encoding='utf-8').splitlines() if line.strip()]

def test_version(capsys):
    assert main(['--version']) == 0
    assert spectral_sumrules.meta.version in capsys.readouterr().out

def test_epilog_credits_the_authors():
    assert spectral_sumrules.meta.authors in parser().epilog

def test_every_kind_is_registered():
    assert set(registry) == {'identity', 'inequality', 'condition', 'recurrence', 'frame', 'addition',
                             'sumrule-exact', 'sign-bound', 'shifted', 'riesz-mono', 'weyl'}

def test_rational_range():
    assert rational_range('0:1/2:1/4') == [0, Fraction(1, 4), Fraction(1, 2)]
    assert rational_range('1/3,2') == [Fraction(1, 3), 2]
    assert len(rational_range('1:2:1/4')) == 5

def test_config_validation(tmp_path):
    with pytest.raises(ValueError):
        RunConfig('verify', N_max=0)
    with pytest.raises(ValueError):
        RunConfig('verify', emit='xml')
    with pytest.raises(ValueError):
        RunConfig('verify', input=tmp_path / 'missing.json')

def test_spectrum_command(tmp_path):
    out = tmp_path / 'sphere.json'
    assert main(['spectrum', 'cross', 'sphere', '--dim', '2', '--lmax', '3', '--no-timestamp', '--output', str(out)]) == 0
    data = json.loads(out.read_text(encoding='utf-8'))
    assert data['levels'] == [{'value': '0', 'mult': 1}, {'value': '2', 'mult': 3}, {'value': '6', 'mult': 5}, {'value': '12', 'mult': 7}]
    assert 'timestamp' not in data

def test_spectrum_csv(tmp_path):
    out = tmp_path / 'square.csv'
    assert main(['spectrum', 'torus', '--a', '0', '--bsq', '1', '--numax', '2', '--emit', 'csv', '--output', str(out)]) == 0
    assert out.read_text(encoding='utf-8').splitlines() == ['value,mult,count', '0,1,1', '1,4,5', '2,4,9']

def test_spectrum_h5_then_verify(tmp_path):
    archive = tmp_path / 'sphere.h5'
    out = tmp_path / 'identity.jsonl'
    assert main(['spectrum', 'cross', 'sphere', '--dim', '2', '--lmax', '6', '--h5', str(archive), '--output', str(tmp_path / 'ignored.json')]) == 0
    assert main(['verify', 'identity', '--input', str(archive), '--dim', '2', '--nmax', '25', '--output', str(out)]) == 0
    assert [r['N'] for r in records(out)] == [1, 4, 9, 16, 25]

def test_verify_identity_cross(tmp_path):
    out = tmp_path / 'identity.jsonl'
    assert main(['verify', 'identity', '--cross', 'complex_projective', '--dim', '4', '--nmax', '50', '--no-timestamp', '--output', str(out)]) == 0
    assert all(r['holds'] for r in records(out))

def test_verify_identity_square_torus_fails(tmp_path):
    out = tmp_path / 'identity.jsonl'
    assert main(['verify', 'identity', '--torus', '0,1', '--N', '5', '--no-timestamp', '--output', str(out)]) == 1
    report, = records(out)
    assert report['residual'] == {'c2': '0', 'c1': '-6', 'c0': '6'}
    assert report['N'] == 5

def test_verify_inequality_from_text(tmp_path):
    spectrum = tmp_path / 'levels.txt'
    spectrum.write_text('0\n2\n2\n2\n6\n6\n6\n6\n6\n12\n', encoding='utf-8')
    out = tmp_path / 'inequality.jsonl'
    assert main(['verify', 'inequality', '--input', str(spectrum), '--dim', '2', '--nmax', '9', '--output', str(out)]) == 0
    assert [r['N'] for r in records(out)] == [1, 4, 9]

def test_unreadable_input(tmp_path):
    spectrum = tmp_path / 'levels.txt'
    spectrum.write_text('0\nabc\n', encoding='utf-8')
    assert main(['verify', 'identity', '--input', str(spectrum), '--dim', '2']) == 2

def test_missing_input_is_usage_error(tmp_path):
    assert main(['verify', 'identity', '--input', str(tmp_path / 'nope.txt'), '--dim', '2']) == 2

def test_unknown_kind_is_usage_error():
    assert main(['verify', 'nonsense']) == 2

def test_verify_recurrence(tmp_path):
    out = tmp_path / 'recurrence.jsonl'
    assert main(['verify', 'recurrence', '--cross', 'sphere', '--dim', '3', '--lmax', '10', '--output', str(out)]) == 0
    report, = records(out)
    assert report['counts'][:4] == ['1', '5', '14', '30']

def test_verify_recurrence_growth_violation(tmp_path):
    out = tmp_path / 'recurrence.jsonl'
    assert main(['verify', 'recurrence', '--levels', '1,2,10', '--a', '3', '--h', '0', '--output', str(out)]) == 1
    report, = records(out)
    assert report['step'] == 0

def test_stalled_recurrence_is_an_input_error(tmp_path):
    out = tmp_path / 'recurrence.jsonl'
    assert main(['verify', 'recurrence', '--levels', '0,1,2', '--a', '3', '--h', '0', '--n0', '0', '--output', str(out)]) == 2

@pytest.mark.parametrize('arguments', (
    ['verify', 'frame', '--torus', '1/2,3/4'],
    ['verify', 'addition', '--torus', '0,2'],
    ['verify', 'sumrule-exact', '--torus', '0,1', '--q', '1,1', '--levels', '3'],
    ['verify', 'sign-bound', '--torus', '1/2,3/4', '--q', '0,1', '--levels', '2'],
    ['verify', 'shifted', '--torus', '0,4', '--N', '3'],
    ['verify', 'riesz-mono', '--cross', 'sphere', '--dim', '2', '--zmax', '100'],
    ['verify', 'weyl', '--torus', '0,1', '--zmax', '50'],
    ['verify', 'weyl', '--torus', '1/2,3/4', '--zmax', '50'],
    ['verify', 'weyl', '--cross', 'sphere', '--dim', '2', '--volume', '4pi', '--z', '6'],
    ['verify', 'condition', '--cross', 'real_projective', '--dim', '5'],
), ids=lambda arguments: ' '.join(arguments[1:3]))
def test_verify_kinds_hold(tmp_path, arguments):
    out = tmp_path / 'report.jsonl'
    assert main(arguments + ['--output', str(out)]) == 0
    assert all(r['holds'] for r in records(out))

def test_frame_fails_on_rectangle(tmp_path):
    out = tmp_path / 'frame.jsonl'
    assert main(['verify', 'frame', '--torus', '0,2', '--output', str(out)]) == 1

def test_plot_data(tmp_path):
    out = tmp_path / 'mono.csv'
    assert main(['verify', 'riesz-mono', '--torus', '0,1', '--z', '1/2,1,3/2', '--emit', 'plot-data', '--output', str(out)]) == 0
    lines = out.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'x,y'
    assert len(lines) == 4

def test_scan_is_deterministic(tmp_path):
    first, second = tmp_path / 'first.json', tmp_path / 'second.json'
    arguments = ['scan', '--a', '0:1/2:1/8', '--bsq', '1:2:1/4', '--numax', '20', '--nmax', '10', '--no-timestamp']
    assert main(arguments + ['--output', str(first)]) == 0
    assert main(arguments + ['--output', str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()
    assert len(json.loads(first.read_text(encoding='utf-8'))) == 25

def test_scan_boundary(tmp_path):
    out = tmp_path / 'boundary.json'
    assert main(['scan', '--a', '0,1/2', '--boundary', '--numax', '10', '--nmax', '5', '--output', str(out)]) == 0
    scanned = json.loads(out.read_text(encoding='utf-8'))
    assert [(r['a'], r['b_sq']) for r in scanned] == [('0', '1'), ('1/2', '3/4')]
    assert all(r['violations'] == [] for r in scanned)
    assert all('timestamp' in r for r in scanned)

def test_parser_builds():
    assert parser().prog == 'spectral_sumrules'
