"""State files, operator files, and JSON/CSV report serialization.

State file format (JSON):

    {"N": 3, "d": 2, "coeffs": [[1, 0], [0, 0], [0, 0], [1, 0]]}

or, as an explicit decomposition,

    {"N": 3, "decomposition": [
        {"weight": [1, 0], "vector": [[1, 0], [0, 0]]},
        {"weight": [1, 0], "vector": [[0, 0], [1, 0]]}]}

Every scalar is a [real, imaginary] pair.  In exact mode each part must be
an integer or a string like "3/4"; floats are rejected to avoid silently
importing binary-rounding noise into exact classification.  In float mode
any number (or such a string) is accepted.

All JSON emitted by the package carries a "schema": 1 field and is
serialized with sorted keys, so byte-identical output for identical inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .catalecticant import RankProfile
from .errors import ArgumentError
from .scalars import QQi, ModeError, format_rational, rational_from_string
from .states import EXACT, FLOAT, DecomposedState, LocalVector, SymState
from .sylvester import ClassificationReport

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _parse_part(value, mode):
    if mode == EXACT:
        if isinstance(value, bool):
            raise ArgumentError(f"invalid scalar component {value!r}")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return rational_from_string(value)
            except ValueError as exc:
                raise ArgumentError(f"cannot parse rational {value!r}") from exc
        if isinstance(value, float):
            raise ModeError(
                f"float literal {value!r} in an exact-mode file; write it as a "
                'rational string like "1/2" or run with --mode float'
            )
        raise ArgumentError(f"invalid scalar component {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        return float(Fraction(value))
    raise ArgumentError(f"invalid scalar component {value!r}")


def parse_scalar(pair, mode):
    """Parse a [re, im] pair (or a bare number) into QQi or complex."""
    if isinstance(pair, (int, float, str)):
        pair = [pair, 0]
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ArgumentError(f"scalar must be a [re, im] pair, got {pair!r}")
    re = _parse_part(pair[0], mode)
    im = _parse_part(pair[1], mode)
    if mode == EXACT:
        return QQi(re, im)
    return complex(re, im)


def parse_state_dict(obj, mode=EXACT):
    if not isinstance(obj, dict):
        raise ArgumentError("state file must hold a JSON object")
    if "N" not in obj:
        raise ArgumentError('state file must carry an "N" field')
    n = obj["N"]
    if not isinstance(n, int) or n < 1:
        raise ArgumentError(f"invalid party count {n!r}")
    if "coeffs" in obj:
        d = obj.get("d", 2)
        coeffs = [parse_scalar(pair, mode) for pair in obj["coeffs"]]
        return SymState(n, coeffs, d=d)
    if "decomposition" in obj:
        terms = []
        for term in obj["decomposition"]:
            weight = parse_scalar(term["weight"], mode)
            vector = LocalVector(
                [parse_scalar(pair, mode) for pair in term["vector"]]
            )
            terms.append((weight, vector))
        from .states import expand_decomposition

        return expand_decomposition(DecomposedState(n, terms))
    raise ArgumentError('state file needs either "coeffs" or "decomposition"')


def load_state_file(path, mode=EXACT):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid JSON in {path}: {exc}") from exc
    return parse_state_dict(obj, mode=mode)


def parse_matrix_dict(obj, mode=EXACT):
    if isinstance(obj, dict):
        obj = obj.get("matrix", obj)
    if not isinstance(obj, list):
        raise ArgumentError("matrix file must hold a nested list")
    rows = [[parse_scalar(pair, mode) for pair in row] for row in obj]
    from .slocc import LocalOperator

    return LocalOperator(rows)


def load_matrix_file(path, mode=EXACT):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            obj = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ArgumentError(f"invalid JSON in {path}: {exc}") from exc
    return parse_matrix_dict(obj, mode=mode)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _part_to_json(value):
    frac = Fraction(value)
    if frac.denominator == 1:
        return frac.numerator
    return format_rational(frac)


def scalar_to_json(value):
    if isinstance(value, QQi):
        return [_part_to_json(value.re), _part_to_json(value.im)]
    value = complex(value)
    return [value.real, value.imag]


def state_to_dict(s):
    return {
        "schema": SCHEMA_VERSION,
        "N": s.N,
        "d": s.d,
        "mode": s.mode,
        "coeffs": [scalar_to_json(v) for v in s.coeffs],
    }


def decomposition_to_dict(dec):
    return {
        "schema": SCHEMA_VERSION,
        "N": dec.N,
        "mode": dec.mode,
        "decomposition": [
            {
                "weight": scalar_to_json(w),
                "vector": [scalar_to_json(x) for x in v.components],
            }
            for w, v in dec.terms
        ],
    }


def profile_to_dict(profile: RankProfile):
    return {
        "N": profile.N,
        "ranks": list(profile.ranks),
        "border_rank": profile.border_rank,
        "mode": profile.mode,
        "tolerance": profile.tol,
        "unstable": list(profile.unstable),
    }


def report_to_dict(report: ClassificationReport):
    out = {
        "schema": SCHEMA_VERSION,
        "N": report.N,
        "border_rank": report.border_rank,
        "symmetric_rank": report.symmetric_rank,
        "label": report.label,
        "label_text": report.label_text,
        "taxonomy": report.taxonomy,
        "certified_exact": report.certified_exact,
        "rank_profile": profile_to_dict(report.rank_profile),
        "flags": list(report.flags),
    }
    if report.witness is not None:
        out["witness"] = decomposition_to_dict(report.witness)
        out["witness_exact"] = report.witness_exact
        if report.residual is not None:
            out["witness_residual"] = report.residual
    if report.kernel_form is not None:
        out["kernel_form"] = {
            "degree": report.kernel_form.degree,
            "coeffs": [scalar_to_json(v) for v in report.kernel_form.coeffs],
        }
    cert = report.tangent_certificate
    if cert is not None:
        out["tangent_certificate"] = {
            "degree": cert.degree,
            "kernel_dimension": cert.kernel_dimension,
            "exact": cert.exact,
            "infinity_repeated": cert.infinity_repeated,
            "repeated_points": [
                [scalar_to_json(x0), scalar_to_json(x1)]
                for x0, x1 in cert.repeated_points
            ],
            "common_factor": (
                None
                if cert.common_factor is None
                else [scalar_to_json(v) for v in cert.common_factor.coeffs]
            ),
        }
    return out


def parent_ham_to_dict(ph, include_sparse=False):
    out = {
        "schema": SCHEMA_VERSION,
        "N": ph.N,
        "j": ph.j,
        "positions": list(ph.positions),
        "projector": [[scalar_to_json(v) for v in row] for row in ph.projector],
        "verification": {
            "residual": ph.residual,
            "min_eigenvalue": ph.min_eigenvalue,
            "ground_space_dim": ph.ground_space_dim,
            "operator_norm": ph.norm,
        },
    }
    if include_sparse:
        out["hamiltonian_triplets"] = [
            list(t) for t in ph.sparse_triplets()
        ]
    return out


def sweep_to_dicts(rows):
    return [
        {
            "epsilon": r.epsilon,
            "chordal_distance": r.chordal_distance,
            "fidelity": r.fidelity,
            "p": r.p,
            "p_over_eps2": r.p_over_eps2,
        }
        for r in rows
    ]


def sweep_to_csv(rows):
    lines = ["epsilon,chordal_distance,fidelity,p,p_over_eps2"]
    for r in rows:
        lines.append(
            f"{r.epsilon!r},{r.chordal_distance!r},{r.fidelity!r},"
            f"{r.p!r},{r.p_over_eps2!r}"
        )
    return "\n".join(lines) + "\n"


def dump_json(obj):
    """Deterministic JSON: sorted keys, no trailing whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)
