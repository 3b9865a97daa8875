import json

import pytest

from hurwitzian.cli import main
from hurwitzian.identities import hurwitz_radon_identity, mutate, render_text


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_twist_alpha_O(capsys):
    code, data = run_json(capsys, "twist", "--n", "3", "--alpha", "alpha_O")
    assert code == 0
    assert all(data["properties"].values())
    assert data["twist"] == "x1x2y3+x1x3y2+x2x3y1+x1y1+x1y2+x1y3+x2y2+x2y3+x3y3"


def test_twist_single_variable(capsys):
    code, data = run_json(capsys, "twist", "--n", "1", "--alpha", "x1")
    assert code == 0 and data["twist"] == "x1y1"


def test_twist_malformed_alpha(capsys):
    code, out, err = run(capsys, "twist", "--n", "3", "--alpha", "x1**x2")
    assert code == 2 and "error" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["maxset"])
    assert exc.value.code == 2


def test_maxset(capsys):
    code, data = run_json(capsys, "maxset", "--n", "7")
    assert code == 0 and data["max"] == 16 and data["alpha"] == "alpha_O"
    assert data["witness"][0] == "0000000" and len(data["witness"]) == 16


def test_maxset_all_forms(capsys):
    code, data = run_json(capsys, "maxset", "--n", "4", "--all-forms")
    assert code == 0 and data["global_max"] == 8


def test_maxset_budget_exceeded(capsys):
    code, data = run_json(capsys, "maxset", "--n", "64")
    assert code == 3 and data["lower_bound"] is True and data["max"] == 128


def test_maxset_node_budget(capsys):
    code, data = run_json(capsys, "maxset", "--n", "6", "--budget", "1")
    assert code == 3 and data["config"]["budget"] == 1


def test_identity_octonions(capsys):
    code, data = run_json(capsys, "identity", "--n", "3")
    assert code == 0 and data["verified"] and data["size"] == [8, 8, 8]


def test_identity_hadamard(capsys):
    code, data = run_json(capsys, "identity", "--n", "11", "--hadamard", "paley11")
    assert code == 0 and data["verified"] and data["size"] == [24, 2048, 2048]


def test_identity_mutated(capsys):
    code, data = run_json(capsys, "identity", "--n", "3", "--mutate", "1", "--seed", "7")
    assert code == 1 and data["verified"] is False and data["config"]["seed"] == 7


def test_identity_text(capsys):
    code, out, _ = run(capsys, "identity", "--n", "1", "--alpha", "x1", "--emit", "--format", "text")
    assert out.splitlines()[:2] == ["c0 = a0*b0 - a1*b1", "c1 = a0*b1 + a1*b0"]


def test_verify_files(capsys, tmp_path):
    ident = hurwitz_radon_identity(3)
    good = tmp_path / "good.json"
    good.write_text(ident.to_json())
    bad = tmp_path / "bad.txt"
    bad.write_text(render_text(mutate(ident, 1, seed=3)))
    assert run_json(capsys, "verify", str(good))[0] == 0
    code, data = run_json(capsys, "verify", str(bad))
    assert code == 1 and data["verified"] is False


def test_construct_and_hadamard(capsys):
    code, data = run_json(capsys, "construct", "--n", "7")
    assert code == 0 and data["size"] == 16 == data["rho"] and data["hurwitzian"]
    code, data = run_json(capsys, "construct", "--n", "11", "--method", "hadamard")
    assert code == 0 and data["size"] == 24
    code, data = run_json(capsys, "hadamard", "paley11")
    assert code == 0 and data["m"] == 12 and data["set_size"] == 24


def test_hadamard_file(capsys, fixtures_dir):
    code, data = run_json(capsys, "hadamard", str(fixtures_dir / "paley12.txt"))
    assert code == 0 and data["hurwitzian"]


def test_checkform(capsys):
    code, data = run_json(capsys, "checkform", "--n", "3", "--alpha", "x1x1x2+x3")
    assert code == 0 and data["alpha"] == "x1x2+x3"
    code, data = run_json(capsys, "checkform", "--table", "0" * 15 + "1")
    assert code == 1 and data["degree"] == 4


def test_quadruples(capsys, tmp_path):
    code, data = run_json(capsys, "quadruples", "--a", "full", "--b", "full", "--n", "3")
    assert code == 0 and data["hypothesis_holds"] is True and data["sumset_size"] == 8
    fa = tmp_path / "a.txt"
    fa.write_text("# two vectors\n000\n011\n")
    fb = tmp_path / "b.txt"
    fb.write_text("0000\n0011\n")
    code, _, _ = run(capsys, "quadruples", "--n", "3", "--a", str(fa), "--b", str(fb))
    assert code == 2
    code, data = run_json(capsys, "quadruples", "--n", "3", "--a", str(fa), "--b", "full")
    assert code == 0 and data["size_a"] == 2


def test_quadruples_csv(capsys):
    code, out, _ = run(capsys, "quadruples", "--sweep", "1-3")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("n,size_a") and len(lines) == 4


def test_alpha_from_json_file(capsys, tmp_path):
    path = tmp_path / "form.json"
    path.write_text('{"n": 3, "monomials": [[1, 2, 3]]}')
    code, data = run_json(capsys, "twist", "--n", "3", "--alpha", str(path))
    assert code == 0 and data["twist"] == "x1x2y3+x1x3y2+x2x3y1"


@pytest.mark.parametrize("argv", [
    ("maxset", "--n", "6", "--deterministic"),
    ("identity", "--n", "4", "--mutate", "2", "--seed", "5"),
    ("quadruples", "--n", "5"),
    ("twist", "--n", "4"),
])
def test_byte_identical_reruns(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second


def test_threads_do_not_change_output(capsys):
    one = run(capsys, "maxset", "--n", "4", "--all-forms", "--threads", "1")
    two = run(capsys, "maxset", "--n", "4", "--all-forms", "--threads", "2")
    assert one == two
