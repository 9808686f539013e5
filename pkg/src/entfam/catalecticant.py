"""Catalecticant (Hankel) matrices, rank profiles, and secant families.

For a qubit state with canonical coefficients c_0..c_N, the j-th
catalecticant C_j is the (N-j+1) x (j+1) Hankel matrix with entry
(r, c) = c_{r+c}.  Its ranks classify the state: rank one on the curve of
product states, and the border rank, the maximum of rank C_j over
j <= floor(N/2), is the index of the smallest secant family containing the
state.  Larger j are redundant because C_{N-j} is the transpose of C_j.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, NumericalError
from .linalg import DEFAULT_RANK_TOL, exact_rank, float_rank
from .scalars import ModeError
from .states import EXACT, FLOAT, SymState

_JACOBIAN_STEP = 1e-6
_JACOBIAN_RANK_TOL = 1e-6
_MIN_NODE_SPACING = 0.05


@dataclass(frozen=True)
class Catalecticant:
    """Hankel matrix C_j of a qubit state; entries[r][c] = c_{r+c}."""

    j: int
    entries: tuple
    mode: str

    @property
    def shape(self):
        return (len(self.entries), len(self.entries[0]))

    def as_array(self):
        return np.array(
            [[complex(v) for v in row] for row in self.entries], dtype=complex
        )


@dataclass(frozen=True)
class RankProfile:
    """All catalecticant ranks of a state plus the derived border rank.

    ranks[i] is rank C_{i+1}, for j = 1..N-1.  border_rank maximizes over
    j <= floor(N/2) only.  unstable lists the j whose float-mode rank decision
    fell within a factor of ten of the tolerance cutoff (always empty in
    exact mode).
    """

    N: int
    ranks: tuple
    border_rank: int
    mode: str
    tol: float | None
    unstable: tuple

    def rank(self, j):
        return self.ranks[j - 1]


def catalecticant(s, j):
    """Build C_j(s) from the canonical coefficients; requires d = 2."""
    if s.d != 2:
        raise ArgumentError("catalecticants are defined for qubit states only")
    if not isinstance(j, int) or j < 1 or j > s.N - 1:
        raise ArgumentError(f"catalecticant index must satisfy 1 <= j <= N-1, got {j}")
    rows = tuple(
        tuple(s.coeffs[r + c] for c in range(j + 1)) for r in range(s.N - j + 1)
    )
    return Catalecticant(j=j, entries=rows, mode=s.mode)


def matrix_rank(m, mode=None, tol=DEFAULT_RANK_TOL):
    """Rank of a matrix in either arithmetic mode.

    Exact mode runs deterministic fraction-free elimination over Gaussian
    rationals and ignores tol; float mode counts singular values above
    tol * sigma_max.  Requesting exact mode for float data raises ModeError.
    """
    if isinstance(m, Catalecticant):
        data_mode = m.mode
        entries = m.entries
    elif isinstance(m, np.ndarray):
        data_mode = FLOAT
        entries = m
    else:
        rows = [list(row) for row in m]
        inferred = EXACT
        for row in rows:
            for v in row:
                if isinstance(v, (float, complex)):
                    inferred = FLOAT
        data_mode = inferred
        entries = rows
    if mode is None:
        mode = data_mode
    if mode == EXACT:
        if data_mode != EXACT:
            raise ModeError("exact rank requested for floating-point data")
        return exact_rank([list(row) for row in entries])
    if data_mode == EXACT:
        entries = np.array(
            [[complex(v) for v in row] for row in entries], dtype=complex
        )
    rank, _ = float_rank(entries, tol=tol)
    return rank


def rank_profile(s, mode=None, tol=DEFAULT_RANK_TOL):
    """Ranks of C_1..C_{N-1} and the border rank (max over j <= floor(N/2))."""
    if s.d != 2:
        raise ArgumentError("rank profiles are defined for qubit states only")
    if s.N < 2:
        raise ArgumentError("rank profiles need N >= 2")
    if mode is None:
        mode = s.mode
    if mode == EXACT and s.mode == FLOAT:
        raise ModeError("exact rank profile requested for a float state")
    state = s.to_float() if (mode == FLOAT and s.mode == EXACT) else s
    ranks = []
    unstable = []
    for j in range(1, s.N):
        cat = catalecticant(state, j)
        if mode == EXACT:
            ranks.append(exact_rank([list(row) for row in cat.entries]))
        else:
            rank, near = float_rank(cat.as_array(), tol=tol)
            ranks.append(rank)
            if near:
                unstable.append(j)
    border = max(ranks[: s.N // 2]) if s.N >= 2 else 1
    return RankProfile(
        N=s.N,
        ranks=tuple(ranks),
        border_rank=border,
        mode=mode,
        tol=None if mode == EXACT else tol,
        unstable=tuple(unstable),
    )


def secant_family(s, mode=None, tol=DEFAULT_RANK_TOL):
    """Index k of the smallest secant family containing the state.

    Equals the border rank by the determinantal description of the secant
    varieties; k = 1 means separable.  Use :func:`rank_profile` directly when
    the float-mode instability flags are needed.
    """
    return rank_profile(s, mode=mode, tol=tol).border_rank


# ---------------------------------------------------------------------------
# Monte Carlo dimension estimation
# ---------------------------------------------------------------------------

def _secant_coefficient_map(params, N, k):
    """Coefficient vector of sum_r lambda_r * (1, z_r)^{tensor N}, stacked real."""
    lams = params[0:2 * k:2] + 1j * params[1:2 * k:2]
    zs = params[2 * k::2] + 1j * params[2 * k + 1::2]
    powers = zs[None, :] ** np.arange(N + 1)[:, None]
    coeffs = powers @ lams
    return np.concatenate([coeffs.real, coeffs.imag])


def _sample_parameters(rng, k):
    zs = rng.uniform(0.4, 1.3, size=k) * np.exp(2j * math.pi * rng.uniform(size=k))
    lams = rng.uniform(0.5, 1.5, size=k) * np.exp(2j * math.pi * rng.uniform(size=k))
    params = np.empty(4 * k)
    params[0:2 * k:2] = lams.real
    params[1:2 * k:2] = lams.imag
    params[2 * k::2] = zs.real
    params[2 * k + 1::2] = zs.imag
    return params, zs


def _nodes_separated(zs):
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            num = abs(zs[i] - zs[j])
            den = math.sqrt((1 + abs(zs[i]) ** 2) * (1 + abs(zs[j]) ** 2))
            if num / den < _MIN_NODE_SPACING:
                return False
    return True


def secant_dim_estimate(N, k, samples=8, seed=0):
    """Projective dimension of the k-th secant variety by Jacobian sampling.

    Samples random parameters (weights and nodes) of the k-term
    parametrization, forms the Jacobian of the coefficient map as a real map
    by central finite differences, and reports (max observed real rank)/2 - 1.
    Coincident nodes are resampled; a warning is emitted when fewer than 90%
    of samples attain the maximum rank.
    """
    if not isinstance(N, int) or N < 2:
        raise ArgumentError("dimension estimation needs integer N >= 2")
    if not isinstance(k, int) or k < 1 or k > N // 2 + 1:
        raise ArgumentError(f"k must satisfy 1 <= k <= floor(N/2)+1, got {k}")
    rng = np.random.default_rng(seed)
    step = _JACOBIAN_STEP
    nparams = 4 * k
    best = 0
    attained = 0
    observed = []
    for _ in range(samples):
        for _attempt in range(25):
            params, zs = _sample_parameters(rng, k)
            if _nodes_separated(zs):
                break
        else:
            raise NumericalError("could not sample well-separated nodes")
        jac = np.empty((2 * (N + 1), nparams))
        for p in range(nparams):
            shift = np.zeros(nparams)
            shift[p] = step
            fplus = _secant_coefficient_map(params + shift, N, k)
            fminus = _secant_coefficient_map(params - shift, N, k)
            jac[:, p] = (fplus - fminus) / (2 * step)
        rank, _ = float_rank(jac, tol=_JACOBIAN_RANK_TOL)
        observed.append(rank)
        if rank > best:
            best = rank
    attained = sum(1 for r in observed if r == best)
    if attained < 0.9 * len(observed):
        warnings.warn(
            f"secant dimension estimate: only {attained}/{len(observed)} samples "
            f"attained the maximal Jacobian rank",
            RuntimeWarning,
            stacklevel=2,
        )
    if best % 2 != 0:
        raise NumericalError("real Jacobian rank of a holomorphic map must be even")
    return best // 2 - 1
