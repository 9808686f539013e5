import json
from fractions import Fraction

import numpy as np
import pytest

from entfam import ArgumentError, ModeError, QQi, classify, projective_equal, standard_state
from entfam.stateio import (
    decomposition_to_dict,
    dump_json,
    load_matrix_file,
    load_state_file,
    parse_matrix_dict,
    parse_scalar,
    parse_state_dict,
    report_to_dict,
    scalar_to_json,
    state_to_dict,
    sweep_to_csv,
)
from entfam.slocc import asymptotic_sweep


def test_parse_scalar_exact():
    assert parse_scalar([1, 0], "exact") == QQi(1)
    assert parse_scalar(["3/4", "-1/2"], "exact") == QQi(Fraction(3, 4), Fraction(-1, 2))
    assert parse_scalar("2/3", "exact") == QQi(Fraction(2, 3))
    with pytest.raises(ModeError):
        parse_scalar([0.5, 0], "exact")
    with pytest.raises(ArgumentError):
        parse_scalar([True, 0], "exact")


def test_parse_scalar_float():
    assert parse_scalar([0.5, -1], "float") == 0.5 - 1j
    assert parse_scalar(["1/4", 0], "float") == 0.25


def test_state_file_coeffs(tmp_path):
    path = tmp_path / "state.json"
    path.write_text(json.dumps({
        "N": 3, "d": 2,
        "coeffs": [[1, 0], [0, 0], [0, 0], ["1/1", 0]],
    }))
    s = load_state_file(path, mode="exact")
    assert projective_equal(s, standard_state("ghz", 3))


def test_state_file_decomposition(tmp_path):
    path = tmp_path / "dec.json"
    path.write_text(json.dumps({
        "N": 3,
        "decomposition": [
            {"weight": [1, 0], "vector": [[1, 0], [0, 0]]},
            {"weight": [1, 0], "vector": [[0, 0], [1, 0]]},
        ],
    }))
    s = load_state_file(path, mode="exact")
    assert projective_equal(s, standard_state("ghz", 3))


def test_state_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ArgumentError):
        load_state_file(bad)
    with pytest.raises(ArgumentError):
        parse_state_dict({"N": 3})
    with pytest.raises(ArgumentError):
        parse_state_dict([1, 2, 3])
    with pytest.raises(ArgumentError):
        parse_state_dict({"coeffs": [[1, 0]]})


def test_state_round_trip():
    s = standard_state("x", 5, w=Fraction(2, 7))
    data = state_to_dict(s)
    back = parse_state_dict(data, mode="exact")
    assert list(back.coeffs) == list(s.coeffs)
    f = s.to_float()
    back = parse_state_dict(state_to_dict(f), mode="float")
    assert np.allclose(np.asarray(back.coeffs), np.asarray(f.coeffs))


def test_scalar_serialization_uses_rational_strings():
    assert scalar_to_json(QQi(3)) == [3, 0]
    assert scalar_to_json(QQi(Fraction(1, 2), Fraction(-2, 3))) == ["1/2", "-2/3"]
    assert scalar_to_json(0.25 + 1j) == [0.25, 1.0]


def test_matrix_file(tmp_path):
    path = tmp_path / "mat.json"
    path.write_text(json.dumps({"matrix": [[[1, 0], [0, 0]], [[0, 0], ["1/2", 0]]]}))
    op = load_matrix_file(path, mode="exact")
    assert op.matrix[1][1] == QQi(Fraction(1, 2))
    bare = parse_matrix_dict([[[1, 0], [0, 0]], [[0, 0], [1, 0]]])
    assert bare.matrix[0][0] == QQi(1)


def test_report_dict_schema(ghz3):
    report = classify(ghz3)
    data = report_to_dict(report)
    assert data["schema"] == 1
    assert data["label_text"] == "proper-secant(2)"
    assert data["certified_exact"] is True
    assert data["rank_profile"]["border_rank"] == 2
    assert len(data["witness"]["decomposition"]) == 2
    text = dump_json(data)
    assert text == dump_json(json.loads(text))  # stable under round trip


def test_json_byte_determinism(w3):
    a = dump_json(report_to_dict(classify(w3, seed=0)))
    b = dump_json(report_to_dict(classify(w3, seed=0)))
    assert a == b


def test_sweep_csv_columns():
    rows = asymptotic_sweep([1e-1, 1e-2])
    csv = sweep_to_csv(rows)
    lines = csv.strip().split("\n")
    assert lines[0] == "epsilon,chordal_distance,fidelity,p,p_over_eps2"
    assert len(lines) == 3


def test_decomposition_serialization(ghz3):
    from entfam import waring_decomposition

    dec = waring_decomposition(ghz3)
    data = decomposition_to_dict(dec)
    assert data["N"] == 3
    assert len(data["decomposition"]) == 2
    back = parse_state_dict({"N": 3, "decomposition": data["decomposition"]},
                            mode="exact")
    assert projective_equal(back, ghz3)
