import json
from fractions import Fraction

import pytest

from regdepth import cli
from regdepth.cli import main, run_command
from regdepth.exceptions import VerificationError
from regdepth.dataset import Dataset
from regdepth.datagen import GeneratorSpec, generate, circle_point
from regdepth.render import render_svg

from conftest import random_distinct_x

def _write(tmp_path, name, points, k=None):
    path = tmp_path / name
    Dataset(points, k=k).to_csv(str(path))
    return str(path)

@pytest.fixture
def cube_csv(tmp_path, cube):
    return _write(tmp_path, 'cube.csv', cube)

@pytest.fixture
def planar_csv(tmp_path):
    return _write(tmp_path, 'plane.csv', random_distinct_x(3, 14, 2))

def _report(capsys, argv):
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)

def test_depth_of_cube_axis(capsys, cube_csv):
    out = _report(capsys, ['depth', '--input', cube_csv, '--flat', '0,0,0;1,0,0'])
    assert out['command'] == 'depth' and out['schema'] == 1
    assert out['result']['certificate']['depth'] == 2
    assert out['result']['vertical'] is False
    assert out['parameters']['k'] == 1
    assert len(out['input_digest']) == 64

def test_depth_with_audit(capsys, planar_csv):
    out = _report(capsys, ['depth', '--input', planar_csv, '--flat', '0,0;1,1', '--audit', '300', '--seed', '2'])
    assert out['result']['audit_passed'] is True
    assert out['parameters']['seed'] == 2

def test_reports_are_reproducible(planar_csv):
    argv = ['centerpoint', '--input', planar_csv, '--seed', '5']
    a = run_command(argv).to_json(timing=False)
    b = run_command(argv).to_json(timing=False)
    assert a == b
    assert 'timing' in run_command(argv).to_dict()

def test_seed_from_environment(monkeypatch, planar_csv):
    monkeypatch.setenv('REGDEPTH_SEED', '17')
    assert run_command(['centerpoint', '--input', planar_csv]).parameters['seed'] == 17

def test_tukey_and_crossing_distance(capsys, tmp_path, square):
    path = _write(tmp_path, 'square.csv', square)
    out = _report(capsys, ['tukey', '--input', path, '--flat', '1/2,1/2'])
    assert out['result']['certificate']['depth'] == 2
    out = _report(capsys, ['crossing-distance', '--input', path, '--flat', '0,1/2;1,0',
                           '--flat', 'infinity'])
    assert out['result']['certificate']['depth'] == 2

def test_constructions_report_guarantees(capsys, planar_csv):
    out = _report(capsys, ['catline', '--input', planar_csv])
    assert out['result']['certificate']['depth'] >= out['result']['guarantee'] == 5
    out = _report(capsys, ['deepest-line2d', '--input', planar_csv])
    assert out['result']['certificate']['depth'] >= 5
    out = _report(capsys, ['tverberg2d', '--input', planar_csv])
    assert out['result']['tverberg']['part_count'] == 5
    assert out['result']['tverberg']['valid'] is True

def test_sixsector_command(capsys, tmp_path):
    path = _write(tmp_path, 'circle.csv', [circle_point(j, 12) for j in range(12)])
    out = _report(capsys, ['sixsector', '--input', path])
    assert out['result']['witness']['sector_sizes'] == [2]*6

def test_hamsandwich2d_needs_two_inputs(capsys, tmp_path):
    a = _write(tmp_path, 'a.csv', random_distinct_x(1, 5, 2))
    b = _write(tmp_path, 'b.csv', random_distinct_x(2, 6, 2))
    out = _report(capsys, ['hamsandwich2d', '--input', a, '--input', b])
    counts = out['result']['counts']
    assert counts[0]['below'] <= 2 and counts[0]['above'] <= 2
    assert counts[1]['below'] <= 3 and counts[1]['above'] <= 3
    assert main(['hamsandwich2d', '--input', a]) == 2

def test_verify_tverberg(capsys, tmp_path, square):
    path = _write(tmp_path, 'square.csv', square)
    out = _report(capsys, ['verify-tverberg', '--input', path, '--flat', '1/2,1/2', '--parts', '0,3;1,2'])
    assert out['result']['per_part_depth'] == [1, 1]
    assert out['result']['valid'] is True
    assert main(['verify-tverberg', '--input', path, '--flat', '1/2,1/2', '--parts', '0,1;1,2']) == 2

def test_bounds(capsys):
    out = _report(capsys, ['bounds', '--d', '3', '--k', '1'])
    assert out['input_digest'] is None
    assert out['result']['deep_flat_constant'] == 5
    exact = [e for e in out['result']['entries']
             if e['quantity'] == 'R' and e['status'] == 'proven-exact']
    assert [e['value'] for e in exact] == [5]

def test_approx_deepest(capsys, planar_csv):
    out = _report(capsys, ['approx-deepest', '--input', planar_csv, '--delta', '1/2', '--seed', '1'])
    assert out['parameters']['approx']['sample_size'] == 14
    assert out['result']['certificate']['depth'] >= 5

def test_generate_writes_csv(capsys, tmp_path):
    assert main(['generate', 'kind=r31-lower-bound', 'n=20', 'd=3', 'seed=4']) == 0
    text = capsys.readouterr().out
    assert text.startswith('# k=1\nx,y,z\n')
    ds = Dataset.from_text(text)
    assert ds.points == Dataset(generate(GeneratorSpec('r31-lower-bound', 20, d=3, seed=4))).points
    out = tmp_path / 'gen.json'
    assert main(['generate', 'kind=uniform-box', 'n=5', '--format', 'json', '--output', str(out)]) == 0
    assert json.loads(out.read_text())['result']['n'] == 5

def test_render_svg(capsys, tmp_path):
    path = _write(tmp_path, 'circle.csv', [circle_point(j, 12) for j in range(12)])
    assert main(['render', '--input', path, '--overlay', 'sixsector']) == 0
    svg = capsys.readouterr().out
    assert svg.lstrip().startswith('<?xml')
    assert svg.count('id="point-') == 12
    assert svg.count('id="sector-line-') == 3
    assert main(['render', '--input', path, '--overlay', 'sixsector']) == 0
    assert capsys.readouterr().out == svg

@pytest.mark.parametrize("overlay,gid", [('catline', 'flat-catline'), ('deepest', 'flat-deepest'),
                                         ('tverberg', 'tverberg-point')])
def test_render_overlays(overlay, gid):
    xs = random_distinct_x(6, 9, 2)
    svg = render_svg(xs, overlay=overlay)
    assert 'id="{0}"'.format(gid) in svg
    assert svg.count('id="point-') == 9

def test_render_projection_of_spatial_data(cube):
    assert 'projection' in render_svg(cube)
    with pytest.raises(Exception) as e:
        render_svg(cube, overlay='catline')
    assert e.value.exit_code == 3

def test_empty_dataset_depth_is_zero(capsys, tmp_path):
    path = tmp_path / 'empty.csv'
    path.write_text('x,y\n')
    out = _report(capsys, ['depth', '--input', str(path), '--flat', '0,0;1,0'])
    assert out['result']['certificate']['depth'] == 0

def test_exit_codes(capsys, tmp_path, cube_csv):
    bad = tmp_path / 'bad.csv'
    bad.write_text('x,y\n1,abc\n')
    assert main(['depth', '--input', str(bad), '--flat', '0,0;1,0']) == 2
    assert main(['depth', '--input', cube_csv, '--flat', '0,0;1,0']) == 3
    assert main(['depth', '--input', cube_csv]) == 2
    assert main(['bounds', '--d', '3', '--k', '3']) == 3
    assert main(['crossing-distance', '--input', cube_csv, '--flat', 'infinity', '--flat', 'infinity', '--k', '1']) == 3
    assert main(['approx-deepest', '--input', cube_csv, '--delta', '2']) == 2
    with pytest.raises(SystemExit) as e:
        main(['no-such-command'])
    assert e.value.code == 2
    assert 'regdepth: Error!' in capsys.readouterr().err

def test_verification_failure_exit_code(monkeypatch, tmp_path):
    path = _write(tmp_path, 'circle.csv', [circle_point(j, 12) for j in range(12)])

    def broken(xs):
        raise VerificationError("Error! sector sizes differ by more than one")

    monkeypatch.setattr(cli, 'six_sector_partition', broken)
    assert main(['sixsector', '--input', path]) == 4
