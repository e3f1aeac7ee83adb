"""
Test cases for the command line: reports, exit codes and written documents.
"""
import json
import os

import pytest

from tests.conftest import fixture_path

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), 'golden')


def golden(name):
    with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as handle:
        return handle.read()


def report(result):
    return json.loads(result.stdout)


@pytest.mark.parametrize('args, name, code', [
    (('run', 'parity.json', '--state', 'p0', '--word', '1,0,1'), 'run_parity.json', 0),
    (('equivalent', 'fix3.json', 'fix3.json', '--states', 'a,b'), 'equivalent_fix3.json', 0),
    (('validate', 'parity.json'), 'validate_parity.json', 0),
    (('behavior', 'parity.json', '--depth', '2'), 'behavior_parity.json', 0),
    (('minimize', 'fix3.json'), 'minimize_fix3.json', 0),
    (('product', 'parity.json', 'parity.json'), 'product_parity.json', 0),
    (('coproduct', 'parity.json', 'parity.json'), 'coproduct_parity.json', 0),
    (('equalizer', 'fix3.json', 'fix3_identity.json', 'fix3_collapse.json'), 'equalizer_fix3.json', 0),
    (('coequalizer', 'fix3.json', 'fix3_identity.json', 'fix3_collapse.json'), 'coequalizer_fix3.json', 0),
    (
        ('pullback', 'fix3.json', 'fix3.json', 'fix3_min.json', 'fix3_to_min.json', 'fix3_to_min.json'),
        'pullback_fix3.json', 0
    ),
    (('check-morphism', 'parity.json', 'parity.json', 'parity_swap.json'), 'check_morphism_swap.json', 1),
    (('check-universal', 'product', 'fix3_min.json', 'fix3_min.json'), 'check_universal_product.json', 0),
    (('decompose', 'parity.json'), 'decompose_parity.json', 0),
    (('check-adjunction', 'moore_parity.json', 'moore_parity.json'), 'check_adjunction_moore_parity.json', 0)
])
def test_golden_reports(invoke, args, name, code):
    result = invoke(*args)
    assert result.exit_code == code
    assert result.stdout == golden(name)


def test_run_reports_the_last_output(invoke):
    result = invoke('run', 'constant.json', '--state', 'e', '--word', '')
    assert result.exit_code == 0
    assert report(result)['data']['output'] == '0'


def test_run_rejects_foreign_symbols(invoke):
    result = invoke('run', 'parity.json', '--state', 'p0', '--word', '1,2')
    assert result.exit_code == 2
    assert report(result)['status'] == 'error'


def test_corrupt_document_exits_with_input_error(invoke, tmp_path):
    document = json.loads(open(fixture_path('parity.json'), encoding='utf-8').read())
    del document['machine']['s']['(p0,1)']
    path = tmp_path / 'corrupt.json'
    path.write_text(json.dumps(document), encoding='utf-8')
    result = invoke('validate', str(path))
    assert result.exit_code == 2
    assert '(p0,1)' in report(result)['error']


def test_syntax_error_reports_a_position(invoke, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{\n  "base": ,\n}', encoding='utf-8')
    result = invoke('validate', str(path))
    assert result.exit_code == 2
    assert report(result)['context'] == {'column': 11, 'line': 2}


def test_inequivalent_states_exit_with_failure(invoke):
    result = invoke('equivalent', 'parity.json', 'parity.json', '--states', 'p0,p1')
    assert result.exit_code == 1
    data = report(result)['data']
    assert data['equivalent'] is False
    assert data['separated_at'] == 0


def test_equivalent_needs_two_states(invoke):
    result = invoke('equivalent', 'fix3.json', 'fix3.json', '--states', 'a')
    assert result.exit_code == 2


def test_check_morphism(invoke):
    assert invoke('check-morphism', 'parity.json', 'parity.json', 'parity_identity.json').exit_code == 0
    result = invoke('check-morphism', 'parity.json', 'parity.json', 'parity_swap.json')
    assert result.exit_code == 1
    assert report(result)['data']['violations'][0] == {
        'actual': '1', 'at': '(p0,0)', 'expected': '0', 'square': 's'
    }


def test_behavior(invoke):
    result = invoke('behavior', 'parity.json', '--depth', '2')
    assert result.exit_code == 0
    data = report(result)['data']
    assert [mate['n'] for mate in data['mates']] == [1, 2]
    assert data['mates'][0]['table'] == {'p0': '[0,1]', 'p1': '[1,0]'}
    assert data['refinement']['rounds'] == 0
    assert invoke('behavior', 'parity.json', '--depth', '0').exit_code == 2


def test_minimize_writes_the_minimal_document(invoke, tmp_path):
    path = tmp_path / 'minimal.json'
    result = invoke('minimize', 'fix3.json', '-o', str(path))
    assert result.exit_code == 0
    assert report(result)['data']['quotient'] == {'a': 'a', 'b': 'a'}
    assert path.read_text(encoding='utf-8') == open(fixture_path('fix3_min.json'), encoding='utf-8').read()


def test_constructions(invoke, tmp_path):
    result = invoke('product', 'parity.json', 'parity.json')
    assert report(result)['data']['states'] == ['(p0,p0)', '(p1,p1)']

    result = invoke('coproduct', 'parity.json', 'constant.json')
    assert result.exit_code == 2

    path = tmp_path / 'pullback.json'
    result = invoke(
        'pullback', 'fix3.json', 'fix3.json', 'fix3_min.json', 'fix3_to_min.json', 'fix3_to_min.json',
        '-o', str(path)
    )
    assert result.exit_code == 0
    assert len(report(result)['data']['states']) == 4
    assert invoke('validate', str(path)).exit_code == 0

    result = invoke('equalizer', 'fix3.json', 'fix3_identity.json', 'fix3_collapse.json')
    assert report(result)['data']['states'] == ['b']


@pytest.mark.parametrize('args', [
    ('product', 'parity.json', 'parity.json'),
    ('coproduct', 'parity.json', 'parity.json'),
    ('initial', 'parity.json'),
    ('equalizer', 'fix3.json', 'fix3_identity.json', 'fix3_collapse.json'),
    ('coequalizer', 'fix3.json', 'fix3_identity.json', 'fix3_collapse.json'),
    ('pullback', 'fix3.json', 'fix3.json', 'fix3_min.json', 'fix3_to_min.json', 'fix3_to_min.json')
])
def test_check_universal(invoke, args):
    result = invoke('check-universal', *args)
    assert result.exit_code == 0
    assert report(result)['data']['ok'] is True


def test_check_universal_guards(invoke):
    result = invoke('check-universal', 'product', 'parity.json', 'parity.json', '--bound', '1')
    assert result.exit_code == 3
    assert report(result)['context'] == {'bound': 1, 'size': 2}
    assert invoke('check-universal', 'product', 'parity.json').exit_code == 2


def test_decompose(invoke):
    result = invoke('decompose', 'base_change.json')
    assert result.exit_code == 0
    assert report(result)['data']['roundtrip'] is True


def test_check_adjunction(invoke):
    result = invoke('check-adjunction', 'moore_parity.json', 'moore_parity.json')
    assert result.exit_code == 0
    assert report(result)['data']['sizes'] == [1, 1]
    assert invoke('check-adjunction', 'parity.json', 'moore_parity.json').exit_code == 2
