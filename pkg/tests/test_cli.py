from io import StringIO
import json
import logging

from django.core.management import CommandError, call_command
import pytest

from ringbench.cli import cli_main
from ringbench.core import FiniteRing
from ringbench.documents import load_ring, save_ring
from tests.utils import M2_E12


def run(*args, **options) -> str:
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


@pytest.mark.parametrize('argv', [[], ['frobnicate'], ['--verbose']])
def test_usage_errors(capsys, argv):
    assert cli_main(argv) == 2
    assert 'usage: ringbench' in capsys.readouterr().err


def test_help(capsys):
    assert cli_main(['--help']) == 0
    assert 'subcommands' in capsys.readouterr().out


def test_classify_json(capsys):
    assert cli_main(['classify', 'E4.6', '--json', '--no-cache']) == 0
    report = json.loads(capsys.readouterr().out)
    assert report['bits']['J-clean-like'] is True
    assert report['bits']['J-clean'] is False
    assert report['order'] == 27


def test_classify_text():
    output = run('classify', 'M2(Z2)', no_cache=True)
    assert 'of order 16' in output
    lines = {line.split()[0]: line.split()[-1] for line in output.splitlines()[1:]}
    assert lines['periodic'] == 'yes'
    assert lines['strongly-periodic'] == 'no'


def test_classify_uses_the_cache(caplog):
    run('classify', 'Z6')
    with caplog.at_level(logging.INFO, logger='ringbench.cache'):
        run('classify', 'Z6')
    assert 'Cache hit' in caplog.text


def test_classify_order_cap():
    with pytest.raises(CommandError) as error:
        run('classify', 'M2(Z2)', max_order=8)
    assert error.value.returncode == 2


def test_decompose_potent():
    result = json.loads(run('decompose', 'Z4', element=2, mode='potent', no_cache=True))
    assert (result['p'], result['w'], result['n']) == (0, 2, 2)


def test_decompose_euw():
    result = json.loads(run('decompose', 'Z4', element=2, mode='euw', no_cache=True))
    assert (result['e'], result['u'], result['w']) == (0, 1, 2)
    with pytest.raises(CommandError) as error:
        run('decompose', 'M2(Z2)', element=M2_E12, mode='euw')
    assert error.value.returncode == 1


def test_decompose_rejects_unknown_elements():
    with pytest.raises(CommandError) as error:
        run('decompose', 'Z4', element=9)
    assert error.value.returncode == 2


def test_construct(tmp_path, capsys, z4: FiniteRing):
    path = tmp_path / 'z4.json'
    assert cli_main(['construct', 'Z4', '-o', str(path)]) == 0
    assert load_ring(path) == z4
    document = json.loads(run('construct', '{"constructor": "zmod", "n": 4}'))
    assert document['order'] == 4
    assert document['provenance'] == 'constructor-built'


def test_construct_from_recipe_file(tmp_path, m2z2: FiniteRing):
    recipe = tmp_path / 'recipe.json'
    recipe.write_text('{"constructor": "matrix_ring", "ring": "Z2", "k": 2}')
    output = tmp_path / 'm2z2.json'
    call_command('construct', str(recipe), output=str(output), stderr=StringIO())
    assert load_ring(output) == m2z2
    with pytest.raises(CommandError) as error:
        run('classify', str(tmp_path / 'recipe.json'), max_order=8)
    assert error.value.returncode == 2


def test_construct_rejects_bad_recipes(capsys):
    assert cli_main(['construct', '{"constructor": "zmod"}']) == 2
    assert 'RecipeError' in capsys.readouterr().err


def test_radicals_with_oracle():
    result = json.loads(run('radicals', 'Z4', oracle=True, no_cache=True))
    assert result['prime_radical'] == result['jacobson_radical'] == [0, 2]
    assert result['prime_radical_index'] == 2
    assert result['oracle']['strongly_nilpotent'] == [0, 2]


def test_radicals_from_file(tmp_path, m2z2: FiniteRing):
    path = tmp_path / 'm2z2.json'
    save_ring(m2z2, path)
    result = json.loads(run('radicals', str(path), no_cache=True))
    assert result['jacobson_radical'] == [0]
    assert len(result['nil_elements']) == 4


def test_verify(tmp_path):
    path = tmp_path / 'suite.json'
    err = StringIO()
    call_command('verify', 'T3.3', catalog=['Z2', 'M2(Z2)'], output=str(path), stderr=err)
    suite = json.loads(path.read_text())
    assert suite['counts']['pass'] == 2
    assert {report['check'] for report in suite['reports']} == {'T3.3'}
    assert '2 pass' in err.getvalue()


def test_verify_unknown_check(capsys):
    assert cli_main(['verify', 'T0.0', '--catalog', 'Z2']) == 2


def test_catalog_list():
    output = run('catalog', 'list')
    assert 'E3.9' in output
    assert 'G7' in output


def test_catalog_show():
    entry = json.loads(run('catalog', 'show', 'E3.9'))
    assert entry['order'] == 128
    assert entry['has_context'] is True
    with pytest.raises(CommandError) as error:
        run('catalog', 'show')
    assert error.value.returncode == 2
    with pytest.raises(CommandError):
        run('catalog', 'show', 'nope')
