import json

import pytest

from entfam.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_w3_text(capsys):
    code, out, _ = run(capsys, "classify", "--state", "w", "--n", "3")
    assert code == 0
    assert "tangent(2)" in out
    assert "symmetric rank: 3" in out
    assert "tau_2" in out


def test_classify_ghz5(capsys):
    code, out, _ = run(capsys, "classify", "--state", "ghz", "--n", "5")
    assert code == 0
    assert "proper-secant(2)" in out
    assert "sigma_2" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--state", "x", "--n", "4",
                       "--w", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["label_text"] == "proper-secant(3)"
    assert data["rank_profile"]["ranks"] == [2, 3, 2]


def test_classify_separable_file(capsys, tmp_path):
    path = tmp_path / "sep.json"
    path.write_text(json.dumps({
        "N": 3, "d": 2,
        "coeffs": [[1, 0], [2, 0], [4, 0], [8, 0]],
    }))
    code, out, _ = run(capsys, "classify", "--file", str(path))
    assert code == 0
    assert "separable" in out


def test_classify_parse_failure(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{oops")
    code, _, err = run(capsys, "classify", "--file", str(path))
    assert code == 2
    assert "error" in err


def test_classify_rejects_qutrits(capsys, tmp_path):
    path = tmp_path / "qutrit.json"
    path.write_text(json.dumps({
        "N": 2, "d": 3,
        "coeffs": [[1, 0]] * 6,
    }))
    code, _, err = run(capsys, "classify", "--file", str(path))
    assert code == 2


def test_classify_missing_state(capsys):
    code, _, err = run(capsys, "classify")
    assert code == 2


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "sweep", "--protocol", "ghz-to-w",
                       "--eps-grid", "1e-1,1e-2,1e-3,1e-4")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "epsilon,chordal_distance,fidelity,p,p_over_eps2"
    dists = [float(line.split(",")[1]) for line in lines[1:]]
    assert all(a > b for a, b in zip(dists, dists[1:]))
    ratio = float(lines[3].split(",")[4])
    assert abs(ratio - 0.1875) < 1e-4


def test_sweep_empty_grid(capsys):
    code, _, err = run(capsys, "sweep", "--eps-grid", "")
    assert code == 2


def test_sweep_bad_grid(capsys):
    code, _, err = run(capsys, "sweep", "--eps-grid", "0.1,banana")
    assert code == 2


def test_parent_ham_auto(capsys):
    code, out, _ = run(capsys, "parent-ham", "--state", "w", "--n", "6",
                       "--j", "auto")
    assert code == 0
    data = json.loads(out)
    assert data["j"] == 2
    assert data["verification"]["residual"] <= 1e-10


def test_parent_ham_no_kernel(capsys):
    code, _, err = run(capsys, "parent-ham", "--state", "ghz", "--n", "4",
                       "--j", "1")
    assert code == 4
    assert "no kernel" in err


def test_parent_ham_x4(capsys):
    code, out, _ = run(capsys, "parent-ham", "--state", "x", "--n", "4",
                       "--w", "1", "--j", "auto")
    assert code == 0
    assert json.loads(out)["j"] == 3


def test_secant_dim(capsys):
    code, out, _ = run(capsys, "secant-dim", "--n", "4", "--k", "2")
    assert code == 0
    assert "estimated=3" in out
    code, out, _ = run(capsys, "secant-dim", "--n", "4", "--k", "3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["estimated"] == data["predicted"] == 4


def test_slocc_identity(capsys, tmp_path):
    mat = tmp_path / "eye.json"
    mat.write_text(json.dumps({"matrix": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]}))
    out_path = tmp_path / "out.json"
    code, out, _ = run(capsys, "slocc", "--state", "ghz", "--n", "4",
                       "--matrix", str(mat), "--out", str(out_path))
    assert code == 0
    assert "label before: proper-secant(2)" in out
    assert "label after:  proper-secant(2)" in out
    data = json.loads(out_path.read_text())
    assert data["coeffs"][0] == [1, 0]


def test_slocc_random_operator_preserves_label(capsys, tmp_path):
    mat = tmp_path / "a.json"
    mat.write_text(json.dumps({"matrix": [
        [[2, 1], ["1/2", 0]],
        [[0, -1], [3, "1/3"]],
    ]}))
    code, out, _ = run(capsys, "slocc", "--state", "w", "--n", "3",
                       "--matrix", str(mat))
    assert code == 0
    assert "label before: tangent(2)" in out
    assert "label after:  tangent(2)" in out


def test_slocc_singular_rejected(capsys, tmp_path):
    mat = tmp_path / "sing.json"
    mat.write_text(json.dumps({"matrix": [[[1, 0], [1, 0]], [[1, 0], [1, 0]]]}))
    code, _, err = run(capsys, "slocc", "--state", "ghz", "--n", "3",
                       "--matrix", str(mat))
    assert code == 2
    assert "singular" in err


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
