from __future__ import annotations

import io
import json
import re

import jsonschema
import pytest

from main import parse_set, run
from generators import make_oracle
from errors import InvalidInputError


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def invoke_json(*argv):
    code, text = invoke(*argv)
    return code, json.loads(text)


@pytest.fixture(params=['1', '8'])
def jobs(request):
    return request.param


def load_schema(schema_dir, name):
    return json.loads((schema_dir / f'{name}.v1.json').read_text())


def assert_envelope(schema_dir, result, payload_schema=None):
    jsonschema.validate(result, load_schema(schema_dir, 'command_result'))
    if payload_schema and result['status'] == 'ok':
        jsonschema.validate(result['payload'], load_schema(schema_dir, payload_schema))


def test_profile_json(schema_dir, jobs):
    code, result = invoke_json('profile', 'grid:d=2', '--n', '3', '--jobs', jobs)
    assert code == 0
    assert_envelope(schema_dir, result, 'profile')
    entries = result['payload']['entries']
    assert [e['j'] for e in entries] == ['4/1', '3/1', '7/3']
    assert entries[0]['witness'] == ['(0,0)']
    assert [e['boundary'] for e in entries] == [4, 6, 7]


def test_profile_csv(jobs):
    code, text = invoke('profile', 'tree:d=3', '--n', '3', '--format', 'csv', '--jobs', jobs)
    assert code == 0
    assert text == 'n,p,q\n1,3,1\n2,2,1\n3,5,3\n'


GOLDEN_COMMANDS = [
    ('profile', 'grid:d=2', '--n', '3'),
    ('profile', 'tree:d=3', '--n', '3', '--format', 'csv'),
    ('profile', 'lamplighter', '--n', '3'),
    ('gdist', 'tree:d=4', 'grid:d=2', '--n', '3'),
    ('dmatrix', 'tree:d=3', 'tree:d=4', 'grid:d=2', '--n', '2'),
    ('bridge', 'tree:d=3', '--set', 'ball:3', '--r', '1'),
    ('reduce', 'subdiv(tree:d=3)', '--window', '4'),
    ('unimod', 'grandfather', '--x', '(0,0)', '--y', '(1,0)'),
    ('wordball', 'bs:m=2', '--n', '3'),
    ('catalog',),
    ('stability', 'grid:d=1', 'tree:d=2', '--n', '2'),
    ('stability', 'lamplighter', 'tree:d=3', '--n', '1'),
    ('folner', 'grid:d=2', '--eps', '1/2'),
    ('hg', 'tree:d=3', 'grid:d=2', '--n', '4'),
]

PRUNABLE = {'profile', 'stability', 'hg'}


def timeless_output(argv):
    code, text = invoke(*argv)
    assert code == 0, text
    return re.sub(r'"elapsed_ms":\d+', '"elapsed_ms":0', text)


@pytest.mark.parametrize('argv', GOLDEN_COMMANDS, ids=' '.join)
def test_output_bytes_do_not_depend_on_jobs_or_pruning(argv):
    variants = [('--jobs', '1'), ('--jobs', '8')]
    if argv[0] in PRUNABLE:
        variants += [('--jobs', '1', '--no-prune'), ('--jobs', '8', '--no-prune')]
    outputs = {timeless_output(argv + flags) for flags in variants}
    assert len(outputs) == 1


@pytest.mark.parametrize('argv, exit_code, error_code', [
    (['profile', 'power(tree:d=3', '--n', '2'], 3, 'parse-error'),
    (['profile', 'tree:d=1', '--n', '2'], 3, 'invalid-spec'),
    (['profile', 'grid:d=2', '--n', '0'], 4, 'invalid-input'),
    (['bridge', 'grid:d=2', '--set', 'list:', '--r', '1'], 4, 'invalid-input'),
    (['bridge', 'grid:d=2', '--set', 'box:3', '--r', '1'], 4, 'invalid-input'),
    (['wordball', 'grandfather', '--n', '2'], 7, 'unsupported-oracle'),
    (['folner', 'tree:d=3', '--eps', '1/2', '--shape', 'boxes'], 7, 'unsupported-shape'),
    (['folner', 'grid:d=2', '--eps', 'half'], 4, 'invalid-input'),
    (['gdist', 'subdiv(tree:d=3)', 'tree:d=3', '--n', '2'], 4, 'invalid-input'),
    (['profile', 'grid:d=2', '--n', '2', '--jobs', '0'], 4, 'invalid-input'),
    (['hg', 'grid:d=2', '--n', '2', '--jobs', '-3'], 4, 'invalid-input'),
    (['catalog', '--vertex-cap', '0'], 4, 'invalid-input'),
])
def test_errors_map_to_exit_codes(schema_dir, argv, exit_code, error_code):
    code, result = invoke_json(*argv)
    assert code == exit_code
    assert result['status'] == 'error'
    assert result['error']['code'] == error_code
    assert_envelope(schema_dir, result)


def test_vertex_cap_flag(schema_dir, monkeypatch):
    monkeypatch.setenv('ISOPX_VERTEX_CAP', '1000000')
    code, result = invoke_json('profile', 'grid:d=2', '--n', '4', '--vertex-cap', '20')
    assert code == 5
    assert result['error']['code'] == 'resource-error'
    assert result['error']['details']['cap'] == 20


@pytest.mark.parametrize('name', ['ISOPX_VERTEX_CAP', 'ISOPX_JOBS'])
def test_unparseable_settings_become_error_results(schema_dir, monkeypatch, name):
    monkeypatch.delenv('ISOPX_VERTEX_CAP', raising=False)
    monkeypatch.delenv('ISOPX_JOBS', raising=False)
    monkeypatch.setenv(name, 'abc')
    code, result = invoke_json('catalog')
    assert code == 4
    assert result['error']['code'] == 'config-error'
    assert result['error']['details']['issues'] == [f"{name} 'abc' is not an integer"]
    assert_envelope(schema_dir, result)


def test_usage_errors_exit_two(capsys):
    code, text = invoke('profile', 'grid:d=2')
    assert code == 2
    assert text == ''
    assert invoke('no-such-command')[0] == 2


def test_gdist(schema_dir):
    code, result = invoke_json('gdist', 'tree:d=4', 'grid:d=2', '--n', '3')
    assert code == 0
    assert_envelope(schema_dir, result, 'gdist')
    payload = result['payload']
    assert (payload['distance'], payload['exact']) == ('1/2', True)
    assert payload['invariant'] == {'name': 'four_cycles', 'value1': 0, 'value2': 4}

    code, result = invoke_json('gdist', 'grid:d=2', 'grid:d=2', '--n', '3')
    assert (result['payload']['distance'], result['payload']['exact']) == ('1/8', False)


def test_dmatrix(schema_dir):
    code, result = invoke_json('dmatrix', 'tree:d=3', 'tree:d=4', 'grid:d=2', '--n', '2')
    assert code == 0
    assert_envelope(schema_dir, result, 'dmatrix')
    matrix = result['payload']['matrix']
    assert matrix[0][1] == matrix[1][0] == '1'
    assert matrix[1][2] == '1/2'
    assert matrix[0][0] == '1/4'


def test_bridge(schema_dir):
    code, result = invoke_json('bridge', 'tree:d=3', '--set', 'ball:3', '--r', '1')
    assert code == 0
    assert_envelope(schema_dir, result, 'bridge')
    payload = result['payload']
    assert (payload['measure_before'], payload['measure_after']) == (22, 46)
    assert payload['folner_star_ratio'] == '12/11'

    code, result = invoke_json('bridge', 'grid:d=2', '--set', 'list:(0,0);(5,5)', '--r', '1')
    assert result['payload']['measure_after'] == 10
    assert result['payload']['folner_star_ratio'] == '4/1'


def test_parse_set(grid2):
    assert len(parse_set(grid2, 'ball:2')) == 13
    assert parse_set(grid2, 'list:(0,0);(1,0)') == ['(0,0)', '(1,0)']
    with pytest.raises(InvalidInputError):
        parse_set(grid2, 'ball:x')


def test_reduce(schema_dir):
    code, result = invoke_json('reduce', 'subdiv(tree:d=3)', '--window', '4')
    assert code == 0
    assert_envelope(schema_dir, result, 'reduce')
    payload = result['payload']
    assert payload['reduced_degree'] == 9
    assert payload['connected'] and payload['distortion_ok']
    assert payload['n_orbits'] == 2


def test_unimod(schema_dir):
    code, result = invoke_json('unimod', 'grandfather', '--x', '(0,0)', '--y', '(1,0)')
    assert code == 0
    assert_envelope(schema_dir, result, 'unimod')
    assert result['payload']['ratio'] == '2/1'

    code, result = invoke_json('unimod', 'grid:d=2')
    assert result['payload']['y'] == '(-1,0)'
    assert result['payload']['ratio'] == '1/1'


def test_wordball(schema_dir):
    code, result = invoke_json('wordball', 'bs:m=2', '--n', '3')
    assert code == 0
    assert_envelope(schema_dir, result, 'wordball')
    assert result['payload']['verified'] is True


def test_catalog(schema_dir):
    code, result = invoke_json('catalog')
    assert code == 0
    assert_envelope(schema_dir, result, 'catalog')
    specs = [e['spec'] for e in result['payload']['entries']]
    assert len(specs) == 13
    for spec in specs:
        assert make_oracle(spec).spec == spec


def test_stability(schema_dir, jobs):
    code, result = invoke_json('stability', 'tree:d=4', 'grid:d=2', '--n', '1', '--jobs', jobs)
    assert code == 0
    assert_envelope(schema_dir, result, 'stability')
    assert result['payload']['verdict'] == 'inapplicable'

    code, result = invoke_json('stability', 'grid:d=1', 'tree:d=2', '--n', '2', '--jobs', jobs)
    assert result['payload']['verdict'] == 'verified'
    assert result['payload']['j1'] == result['payload']['j2'] == '1/1'


def test_folner(schema_dir):
    code, result = invoke_json('folner', 'grid:d=2', '--eps', '1/2')
    assert code == 0
    assert_envelope(schema_dir, result, 'folner')
    payload = result['payload']
    assert (payload['k'], payload['size'], payload['ratio']) == (4, 41, '20/41')

    code, result = invoke_json('folner', 'tree:d=3', '--eps', '1/2', '--k-max', '4')
    assert result['payload']['found'] is False
    assert len(result['payload']['trace']) == 4


def test_hg(schema_dir, jobs):
    code, result = invoke_json('hg', 'tree:d=3', 'grid:d=2', '--n', '4', '--jobs', jobs)
    assert code == 0
    assert_envelope(schema_dir, result, 'hg')
    assert result['payload']['value'] == '3/2'
    assert result['payload']['argmin'] == 'tree:d=3'
