import json
import subprocess
import sys
from pathlib import Path

import pytest

from spherical_cox.cli import main
from spherical_cox.inputs import FIXTURES, InputError, fixture_path, load, problem_from_dict

GOLDEN = Path(__file__).parent / "golden"
CASES = sorted(p.stem.split("__") for p in GOLDEN.glob("*.txt"))


@pytest.mark.parametrize("fixture, command", CASES)
def test_golden(fixture, command, capsys):
    assert main([command, "--input", str(fixture_path(fixture))]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{fixture}__{command}.txt").read_text()


def test_every_fixture_has_goldens():
    assert {f for f, _ in CASES} == set(FIXTURES)


def test_deterministic(capsys):
    outs = []
    for _ in range(2):
        main(["cox", "--input", str(fixture_path("sl_d")), "--format", "json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["relations"] == ["S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3] - W[1]*W[2]^2"]


def test_reports_are_reparseable(capsys):
    from spherical_cox.multipoly import parse
    main(["cox", "--input", str(fixture_path("sl2_torus")), "--format", "json"])
    for f in json.loads(capsys.readouterr().out)["relations"]:
        assert str(parse(f)) == f


def _write(tmp_path, text):
    p = tmp_path / "in.toml"
    p.write_text(text)
    return str(p)


def test_exit_input_error(tmp_path, capsys):
    assert main(["cox", "--input", str(tmp_path / "missing.toml")]) == 2
    assert main(["cox", "--input", _write(tmp_path, "[space\n")]) == 2
    assert main(["cox", "--input", _write(tmp_path, '[space]\ndims=[2]\n[[space.relations]]\npoly="S[1,1] +"\n')]) == 2
    assert main(["cox", "--input", _write(tmp_path, '[space]\ndims=[2]\n[embedding]\nrays=[[2]]\n')]) == 2
    assert main(["lift", "--input", str(fixture_path("sl_d"))]) == 2


def test_exit_math_inconsistency(tmp_path):
    bad_ray = '[space]\ndims=[3,3]\n[[space.relations]]\npoly="S[1,1]*S[2,1] + S[1,2]*S[2,2] + S[1,3]*S[2,3] - 1"\n' \
              '[embedding]\nrays=[[1,1]]\n'
    path = _write(tmp_path, bad_ray)
    assert main(["cox", "--input", path]) == 3
    assert main(["cox", "--input", path, "--allow-outside-valuation-cone"]) == 0


def test_exit_unsupported(tmp_path):
    text = '[space]\ndims=[2,2]\n[[space.relations]]\npoly="S[1,1]*S[2,1] - 1"\n' \
           '[[space.relations]]\npoly="S[1,2]*S[2,2] - 1"\n'
    path = _write(tmp_path, text)
    assert main(["valcone", "--input", path]) == 4
    assert main(["roots", "--input", path]) == 4


def test_brion_disagree(tmp_path):
    text = fixture_path("sl_d").read_text().replace('roots = [[1, 1]]', 'roots = [[1, 0]]')
    assert main(["brion-compare", "--input", _write(tmp_path, text)]) == 1


def test_problem_from_dict_errors():
    with pytest.raises(InputError):
        problem_from_dict({})
    with pytest.raises(InputError):
        problem_from_dict({"space": {"dims": [2], "r": 2}})
    with pytest.raises(InputError):
        problem_from_dict({"space": {"dims": ["a"]}})


def test_bold_rays_default_to_lift():
    p = problem_from_dict({
        "space": {"dims": [2, 2], "m": 1, "relations": [{"poly": "S[1,1]*S[2,2] - S[1,2]*S[2,1] - T[1]"}]},
        "bold": {"d_matrix": [[-1], [-1]], "bold_rays": [[1]]},
    })
    assert p.embedding.rays == ((0, 0, 1),)


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "spherical_cox.cli", "clgroup", "--input",
                        str(fixture_path("sl2_ntorus"))], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.splitlines()[0] == "Cl = Z/2"


def test_load_fixtures():
    for name in FIXTURES:
        assert load(fixture_path(name)).space is not None
