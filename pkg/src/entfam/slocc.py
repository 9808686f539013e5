"""SLOCC action on symmetric states and the stochastic filter machinery.

An invertible local operator A acts on the symmetric space as the N-th
tensor power.  Restricted to the induced basis this is an explicit
(N+1) x (N+1) matrix whose entries are polynomial in the entries of A; by
construction it intertwines with the Veronese embedding, i.e. applying it
to a product state gives the product state of A applied to the single-party
vector.  Border rank, symmetric rank, and the class label are invariant.

Singular operators are rejected: inequivalent classes are connected only by
limits of invertible filters, and those limits are exposed through the
epsilon-parametrized sweep (see :func:`asymptotic_sweep`), not through a
singular apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError
from .scalars import QQI_ZERO, QQi, ModeError, is_exact_scalar, to_qqi
from .states import (
    EXACT,
    FLOAT,
    SymState,
    chordal_distance,
    dicke_weights,
    fidelity,
    standard_state,
)

_FLOAT_SINGULAR_TOL = 1e-12


class LocalOperator:
    """A d x d single-party operator, exact or float entries."""

    __slots__ = ("matrix", "d", "mode")

    def __init__(self, matrix):
        rows = [list(row) for row in matrix]
        d = len(rows)
        if d < 2 or any(len(row) != d for row in rows):
            raise ArgumentError("operator matrix must be square, d >= 2")
        flat = [v for row in rows for v in row]
        if all(is_exact_scalar(v) for v in flat):
            mode = EXACT
            rows = tuple(tuple(to_qqi(v) for v in row) for row in rows)
        else:
            if any(isinstance(v, QQi) for v in flat):
                raise ModeError("cannot mix exact and float operator entries")
            mode = FLOAT
            rows = np.array(rows, dtype=complex)
            rows.setflags(write=False)
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("LocalOperator is immutable")

    @property
    def is_exact(self):
        return self.mode == EXACT

    def entry(self, i, j):
        return self.matrix[i][j]

    def det(self):
        if self.d != 2:
            raise ArgumentError("determinant helper implemented for d = 2")
        m = self.matrix
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    def is_invertible(self):
        """Nonzero determinant; float mode uses |det| > 1e-12 * ||A||_F^2."""
        det = self.det()
        if self.mode == EXACT:
            return not det.is_zero
        fro2 = float(np.sum(np.abs(self.matrix) ** 2))
        return abs(det) > _FLOAT_SINGULAR_TOL * fro2

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return LocalOperator([[complex(v) for v in row] for row in self.matrix])

    def as_array(self):
        if self.mode == FLOAT:
            return np.asarray(self.matrix)
        return np.array(
            [[complex(v) for v in row] for row in self.matrix], dtype=complex
        )

    def __repr__(self):
        return f"LocalOperator(d={self.d}, mode={self.mode})"


def as_local_operator(a):
    return a if isinstance(a, LocalOperator) else LocalOperator(a)


@dataclass(frozen=True)
class MeasurementPair:
    """Two-outcome measurement (E, Ebar) with E^t E + Ebar^t Ebar = 1."""

    E: np.ndarray
    Ebar: np.ndarray


# ---------------------------------------------------------------------------
# symmetric power
# ---------------------------------------------------------------------------

def sym_power_operator(a, N):
    """Matrix of the N-th tensor power restricted to the induced qubit basis.

    Row m, column n entry: the coefficient of x0^(N-n) x1^n in
    (A00 x0 + A01 x1)^(N-m) (A10 x0 + A11 x1)^m, so that applying the matrix
    to canonical coefficients equals applying the tensor power in the full
    product space followed by projection to the induced basis.
    """
    a = as_local_operator(a)
    if a.d != 2:
        raise ArgumentError("symmetric power operator implemented for d = 2")
    if not isinstance(N, int) or N < 1:
        raise ArgumentError(f"invalid power {N!r}")
    exact = a.mode == EXACT
    m00, m01 = a.matrix[0][0], a.matrix[0][1]
    m10, m11 = a.matrix[1][0], a.matrix[1][1]
    size = N + 1
    if exact:
        out = [[QQI_ZERO] * size for _ in range(size)]
    else:
        out = np.zeros((size, size), dtype=complex)
    for m in range(size):
        m0, m1 = N - m, m
        for n in range(size):
            n0 = N - n
            acc = QQI_ZERO if exact else 0.0j
            for s in range(max(0, n0 - m1), min(m0, n0) + 1):
                coeff = math.comb(m0, s) * math.comb(m1, n0 - s)
                term = (
                    (m00 ** s)
                    * (m01 ** (m0 - s))
                    * (m10 ** (n0 - s))
                    * (m11 ** (m1 - n0 + s))
                )
                acc = acc + coeff * term
            if exact:
                out[m][n] = acc
            else:
                out[m, n] = acc
    return out


def slocc_apply(s, a):
    """Apply the invertible local operator to a symmetric state.

    The class label and every catalecticant rank of the result match the
    input; singular operators are rejected.
    """
    a = as_local_operator(a)
    if s.d != 2 or a.d != 2:
        raise ArgumentError("slocc_apply is implemented for qubits")
    if not a.is_invertible():
        raise ArgumentError(
            "singular operator: class-changing limits are handled by "
            "parametrized sweeps, not by a singular apply"
        )
    if a.mode != s.mode:
        raise ModeError(
            "operator and state must share an arithmetic mode; "
            "downcast explicitly with .to_float()"
        )
    power = sym_power_operator(a, s.N)
    if s.mode == EXACT:
        coeffs = [
            sum((row[n] * s.coeffs[n] for n in range(s.N + 1)), QQI_ZERO)
            for row in power
        ]
        return SymState(s.N, coeffs)
    return SymState(s.N, power @ np.asarray(s.coeffs))


# ---------------------------------------------------------------------------
# stochastic implementation
# ---------------------------------------------------------------------------

def _herm2_eig(h, det=None):
    """Eigen-decomposition of a 2x2 Hermitian matrix in closed form.

    Returns (d0, d1, U) with d0 >= d1 and columns of U the eigenvectors.
    When the caller knows the determinant from a cancellation-free source
    (e.g. |det E|^2 for E^t E), passing it preserves the small eigenvalue's
    relative accuracy; the matrix entries alone lose it near singularity.
    """
    a = h[0, 0].real
    c = h[1, 1].real
    b = h[0, 1]
    half_tr = 0.5 * (a + c)
    disc = math.sqrt(max(0.0, (0.5 * (a - c)) ** 2 + abs(b) ** 2))
    d0 = half_tr + disc
    if det is None:
        det = a * c - abs(b) ** 2
    d1 = det / d0 if d0 > 0 else half_tr - disc
    if abs(b) <= 1e-15 * (abs(a) + abs(c)):
        if a >= c:
            u = np.eye(2, dtype=complex)
        else:
            u = np.array([[0, 1], [1, 0]], dtype=complex)
        return d0, d1, u

    def eigvec(lam):
        # two algebraically equivalent formulas; take the better conditioned one
        cand1 = np.array([b, lam - a], dtype=complex)
        cand2 = np.array([lam - c, np.conj(b)], dtype=complex)
        vec = cand1 if np.linalg.norm(cand1) >= np.linalg.norm(cand2) else cand2
        return vec / np.linalg.norm(vec)

    return d0, d1, np.column_stack([eigvec(d0), eigvec(d1)])


def povm_from_operator(a):
    """Two-outcome measurement implementing A stochastically.

    E is A scaled by the inverse square root of the largest eigenvalue of
    A^t A (so E is invariant under positive rescaling of A) and Ebar is the
    positive square root of 1 - E^t E; completeness holds by construction.
    """
    a = as_local_operator(a).to_float()
    if a.d != 2:
        raise ArgumentError("measurement construction implemented for d = 2")
    mat = a.as_array()
    gram = mat.conj().T @ mat
    if not np.any(np.abs(mat) > 0):
        raise ArgumentError("operator must be nonzero")
    lam_max, _, _ = _herm2_eig(gram)
    e = mat / math.sqrt(lam_max)
    ete = e.conj().T @ e
    d0, d1, u = _herm2_eig(ete)
    root = u @ np.diag(
        [math.sqrt(max(0.0, 1.0 - d0)), math.sqrt(max(0.0, 1.0 - d1))]
    ) @ u.conj().T
    return MeasurementPair(E=e, Ebar=root)


def success_probability(s, a):
    """Probability of the successful outcome of the filter A on the state.

    Computes <psi|(E^t E)^{tensor N}|psi> / <psi|psi> by diagonalizing
    E^t E = U diag(d0, d1) U^t, rotating the state by U^t (a unitary, so an
    ordinary symmetric-power application), and summing the diagonal weights
    with the induced-basis binomial norms.
    """
    if s.d != 2:
        raise ArgumentError("success probability implemented for qubits")
    a = as_local_operator(a).to_float()
    state = s.to_float()
    pair = povm_from_operator(a)
    e = pair.E
    ete = e.conj().T @ e
    det_e = e[0, 0] * e[1, 1] - e[0, 1] * e[1, 0]
    d0, d1, u = _herm2_eig(ete, det=abs(det_e) ** 2)
    rotated = slocc_apply(state, LocalOperator(u.conj().T))
    weights = dicke_weights(s.N)
    amps = np.abs(np.asarray(rotated.coeffs)) ** 2
    diag = np.array(
        [max(d0, 0.0) ** (s.N - k) * max(d1, 0.0) ** k for k in range(s.N + 1)]
    )
    numerator = float(np.sum(amps * weights * diag))
    denominator = float(np.sum(np.abs(np.asarray(state.coeffs)) ** 2 * weights))
    p = numerator / denominator
    return min(1.0, max(0.0, p))


def ghz_to_w_operator(eps):
    """The filter whose tensor cube drives GHZ_3 to W_3 as eps -> 0.

    In a convention where |0> is the second basis vector the operator reads
    eps^(-1/3) [[0, eps], [-1, 1]]; it is stored here conjugated by the basis
    swap so that it acts in the package convention |0> = (1, 0)^T.  The
    determinant is eps^(1/3), so the operator is invertible for eps > 0.
    """
    if not eps > 0:
        raise ArgumentError("the filter is defined for eps > 0")
    scale = eps ** (-1.0 / 3.0)
    return LocalOperator(
        [[scale * 1.0, scale * -1.0], [scale * eps, scale * 0.0]]
    )


@dataclass(frozen=True)
class SweepRow:
    epsilon: float
    chordal_distance: float
    fidelity: float
    p: float
    p_over_eps2: float


def asymptotic_sweep(eps_values):
    """Drive GHZ_3 toward W_3 with the eps filter and record convergence.

    For each eps: apply the cube of the filter to GHZ_3, measure the chordal
    distance and fidelity to W_3, and the success probability of the filter
    (which scales as eps^2).  Rows are returned in input order.
    """
    eps_values = [float(e) for e in eps_values]
    if not eps_values:
        raise ArgumentError("empty epsilon grid")
    if any(e <= 0 for e in eps_values):
        raise ArgumentError("epsilon values must be positive")
    ghz = standard_state("ghz", 3, mode=FLOAT)
    w3 = standard_state("w", 3, mode=FLOAT)
    rows = []
    for eps in eps_values:
        op = ghz_to_w_operator(eps)
        moved = slocc_apply(ghz, op)
        dist = chordal_distance(moved, w3)
        fid = fidelity(moved, w3)
        p = success_probability(ghz, op)
        rows.append(
            SweepRow(
                epsilon=eps,
                chordal_distance=dist,
                fidelity=fid,
                p=p,
                p_over_eps2=p / (eps * eps),
            )
        )
    return rows
