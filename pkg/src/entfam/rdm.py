"""Reduced density matrices of symmetric states and parent Hamiltonians.

For a symmetric qubit state with canonical coefficients c, the reduced
density matrix of m kept qubits, written in the orthonormal Dicke basis of
m qubits, is the weighted Hankel congruence

    rho  proportional to  D * C * W * C^t * D,

where C is the catalecticant with rows indexed by the kept excitation
number (entries c_{r+l}), W holds the binomial norms of the traced
subsystem, and D the square roots of the kept-side binomial norms.  Since D
and W are positive diagonal, rank(rho^(m)) = rank(C_m) identically, and the
ranks are symmetric under m <-> N-m.  This analytic route scales to large N;
a brute-force partial trace over the full product space exists in the test
suite as an independent oracle.

A state whose j-qubit reduced matrix has a nontrivial kernel inside the
symmetric space admits a parent Hamiltonian of interaction length j: place
the kernel projector on every window of j consecutive parties.  Each term is
positive semidefinite and annihilates the state, so the state lies in the
ground space.  The smallest such j equals the border rank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from .catalecticant import rank_profile
from .errors import ArgumentError, DomainError, NumericalError, ResourceError
from .linalg import (
    DEFAULT_RANK_TOL,
    exact_dagger,
    exact_matmul,
    exact_nullspace,
    exact_rank,
    float_rank,
    orthonormal_range,
)
from .scalars import QQi, ModeError
from .states import EXACT, FLOAT, SymState, to_full_tensor

_DENSE_SPECTRUM_CAP = 2 ** 12
_RESIDUAL_TOL = 1e-10
_GROUND_GAP = 1e-8


@dataclass(frozen=True)
class ReducedDensity:
    """Reduced state of m kept qubits in the orthonormal Dicke basis."""

    m: int
    matrix: np.ndarray

    @property
    def dim(self):
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ParentHamiltonian:
    """Frustration-free parent Hamiltonian with interaction length j.

    terms are the window start positions (1-based, open boundary); the
    projector acts on each window of j consecutive qubits.  verification
    holds the relative residual of H applied to the state, the minimal
    eigenvalue, and the ground-space dimension (the latter two from a dense
    spectrum when the dimension permits, else from a Lanczos solver).
    """

    N: int
    j: int
    projector: np.ndarray
    positions: tuple
    residual: float
    min_eigenvalue: float
    ground_space_dim: int
    hamiltonian: scipy.sparse.csr_matrix
    norm: float

    def sparse_triplets(self):
        coo = self.hamiltonian.tocoo()
        return [
            (int(r), int(c), float(v.real), float(v.imag))
            for r, c, v in zip(coo.row, coo.col, coo.data)
        ]


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of probing parent Hamiltonians below the interaction length."""

    N: int
    interaction_length: int
    no_kernel_below: tuple
    generic_bound: int
    hamiltonian: ParentHamiltonian


def _hankel(coeffs, rows, cols):
    return [[coeffs[r + l] for l in range(cols)] for r in range(rows)]


def reduced_density(s, m):
    """Density matrix of m kept qubits (trace normalized, float entries).

    The entries carry square-root binomial weights and are therefore
    irrational in general; rank questions should use the exact congruent
    form, see :func:`rdm_rank_profile`.
    """
    if s.d != 2:
        raise ArgumentError("reduced densities are implemented for qubits")
    if not isinstance(m, int) or m < 1 or m > s.N - 1:
        raise ArgumentError(f"subsystem size must satisfy 1 <= m <= N-1, got {m}")
    return _reduced_density_any(s, m)


def _reduced_density_any(s, m):
    """Reduced density for 1 <= m <= N; m = N returns the pure state itself."""
    j = s.N - m
    c = np.asarray(s.to_float().coeffs)
    cat = np.array(_hankel(c, m + 1, j + 1), dtype=complex)
    w = np.array([math.comb(j, l) for l in range(j + 1)], dtype=float)
    dvec = np.sqrt(np.array([math.comb(m, r) for r in range(m + 1)], dtype=float))
    core = cat @ np.diag(w) @ cat.conj().T
    rho = dvec[:, None] * core * dvec[None, :]
    rho = rho / np.trace(rho).real
    rho = 0.5 * (rho + rho.conj().T)
    return ReducedDensity(m=m, matrix=rho)


def _exact_congruent_rank(s, m):
    """rank(rho^(m)) for an exact state, via the rational congruent matrix.

    Dropping the positive diagonal D leaves C W C^t, which is congruent to
    rho and has Gaussian-rational entries.
    """
    j = s.N - m
    cat = _hankel(list(s.coeffs), m + 1, j + 1)
    w = [QQi(math.comb(j, l)) for l in range(j + 1)]
    weighted = [[row[l] * w[l] for l in range(j + 1)] for row in cat]
    core = exact_matmul(weighted, exact_dagger(cat))
    return exact_rank(core)


def rdm_rank_profile(s, mode=None, tol=DEFAULT_RANK_TOL):
    """Ranks of the reduced densities for m = 1..N-1.

    Checks internally that rank(rho^(m)) agrees with the catalecticant rank
    (positive-diagonal congruence) and with the mirrored subsystem N-m.
    """
    if s.d != 2:
        raise ArgumentError("rank profiles are implemented for qubits")
    if mode is None:
        mode = s.mode
    if mode == EXACT and s.mode == FLOAT:
        raise ModeError("exact rdm ranks requested for a float state")
    cat_profile = rank_profile(s, mode=mode, tol=tol)
    ranks = []
    for m in range(1, s.N):
        if mode == EXACT:
            r = _exact_congruent_rank(s, m)
        else:
            rho = _reduced_density_any(s.to_float(), m)
            eigs = np.linalg.eigvalsh(rho.matrix)
            top = float(eigs[-1])
            r = int(np.count_nonzero(eigs > tol * top))
        if r != cat_profile.rank(m):
            raise NumericalError(
                f"rank(rho^({m})) = {r} disagrees with rank(C_{m}) = "
                f"{cat_profile.rank(m)}; numerical tolerance too loose?"
            )
        ranks.append(r)
    for m in range(1, s.N):
        if ranks[m - 1] != ranks[s.N - m - 1]:
            raise NumericalError("reduced-density rank symmetry m <-> N-m violated")
    return tuple(ranks)


def interaction_length(s, mode=None, tol=DEFAULT_RANK_TOL):
    """Least j with rank(rho^(j)) < j + 1; equals the border rank.

    Always at most floor(N/2) + 1.  For N = 2 entangled states this is
    j = N = 2: the only nontrivial kernel lives on the full pair.
    """
    if s.d != 2:
        raise ArgumentError("interaction length is implemented for qubits")
    profile = rank_profile(s, mode=mode, tol=tol)
    for j in range(1, s.N):
        if profile.rank(j) < j + 1:
            return j
    return s.N


def _symmetric_kernel_vectors(s, j, tol):
    """Kernel of rho^(j) inside the symmetric space, in induced coordinates.

    u lies in the kernel iff the conjugate of (binomial-weighted u) is
    annihilated by the degree-j Hankel pairing; in matrix form the condition
    is C_{N-j}^dagger diag(binom(j, r)) u = 0, all rational data.
    """
    weights = [math.comb(j, r) for r in range(j + 1)]
    if s.mode == EXACT:
        cat = _hankel(list(s.coeffs), j + 1, s.N - j + 1)
        condition = exact_dagger(cat)
        weighted = [
            [row[r] * QQi(weights[r]) for r in range(j + 1)] for row in condition
        ]
        basis = exact_nullspace(weighted, ncols=j + 1)
        return [np.array([complex(v) for v in vec]) for vec in basis]
    c = np.asarray(s.coeffs)
    cat = np.array(_hankel(c, j + 1, s.N - j + 1), dtype=complex)
    condition = cat.conj().T * np.asarray(weights, dtype=float)[None, :]
    _, svals, vh = np.linalg.svd(condition)
    smax = svals[0] if svals.size else 0.0
    cutoff = tol * smax if smax > 0 else np.inf
    rank = int(np.count_nonzero(svals > cutoff))
    return [vh[i].conj() for i in range(rank, vh.shape[0])]


def _embed_symmetric(vec, j):
    """Expand induced-basis coordinates into the full 2^j space."""
    full = np.zeros(2 ** j, dtype=complex)
    for code in range(2 ** j):
        full[code] = vec[bin(code).count("1")]
    return full


def parent_hamiltonian(s, j, cap=2 ** 14, tol=DEFAULT_RANK_TOL):
    """Build and verify the parent Hamiltonian with interaction length j.

    Kernel vectors of the j-qubit reduced state (inside the symmetric space)
    are embedded into the full 2^j window space and orthonormalized; their
    projector is summed over all N-j+1 windows (open boundary).  Raises
    DomainError when the kernel is trivial, ResourceError above the cap.
    """
    if s.d != 2:
        raise ArgumentError("parent Hamiltonians are implemented for qubits")
    if not isinstance(j, int) or j < 1 or j > s.N:
        raise ArgumentError(f"interaction length must satisfy 1 <= j <= N, got {j}")
    if 2 ** s.N > cap:
        raise ResourceError(f"full dimension 2^{s.N} exceeds cap {cap}")
    kernel = _symmetric_kernel_vectors(s, j, tol)
    if not kernel:
        raise DomainError(
            f"the reduced state of {j} qubits has full symmetric rank {j + 1}; "
            "no kernel projector exists at this interaction length"
        )
    columns = np.column_stack([_embed_symmetric(vec, j) for vec in kernel])
    q = orthonormal_range(columns)
    projector = q @ q.conj().T
    dim = 2 ** s.N
    positions = tuple(range(1, s.N - j + 2))
    ham = scipy.sparse.csr_matrix((dim, dim), dtype=complex)
    proj_sparse = scipy.sparse.csr_matrix(projector)
    for i in positions:
        left = scipy.sparse.identity(2 ** (i - 1), format="csr", dtype=complex)
        right = scipy.sparse.identity(
            2 ** (s.N - i - j + 1), format="csr", dtype=complex
        )
        term = scipy.sparse.kron(
            scipy.sparse.kron(left, proj_sparse, format="csr"), right, format="csr"
        )
        ham = ham + term
    psi = np.asarray(to_full_tensor(s.to_float(), cap=cap))
    psi_norm = np.linalg.norm(psi)
    if dim <= _DENSE_SPECTRUM_CAP:
        eigs = np.linalg.eigvalsh(ham.toarray())
        norm = float(max(abs(eigs[0]), abs(eigs[-1])))
        min_eig = float(eigs[0])
        ground_dim = int(np.count_nonzero(eigs <= eigs[0] + _GROUND_GAP * norm))
    else:
        top = scipy.sparse.linalg.eigsh(
            ham, k=1, which="LA", return_eigenvectors=False
        )
        norm = float(abs(top[0]))
        k = min(dim - 2, 48)
        small = scipy.sparse.linalg.eigsh(
            ham, k=k, sigma=-1e-6, which="LM", return_eigenvectors=False
        )
        small = np.sort(small)
        min_eig = float(small[0])
        ground_dim = int(np.count_nonzero(small <= small[0] + _GROUND_GAP * norm))
    residual = float(np.linalg.norm(ham @ psi) / (norm * psi_norm))
    return ParentHamiltonian(
        N=s.N,
        j=j,
        projector=projector,
        positions=positions,
        residual=residual,
        min_eigenvalue=min_eig,
        ground_space_dim=ground_dim,
        hamiltonian=ham,
        norm=norm,
    )


def minimality_check(s, cap=2 ** 14, tol=DEFAULT_RANK_TOL):
    """Confirm that no parent Hamiltonian exists below the interaction length.

    Probes every j below interaction_length(s) (each must fail for lack of a
    symmetric kernel), builds the Hamiltonian at the minimal j, and reports
    the comparison against the generic bound floor(N/2) + 1.
    """
    jmin = interaction_length(s, tol=tol)
    failures = []
    for j in range(1, jmin):
        try:
            parent_hamiltonian(s, j, cap=cap, tol=tol)
        except DomainError:
            failures.append(j)
        else:
            raise NumericalError(
                f"unexpected kernel at j={j} below the interaction length {jmin}"
            )
    ham = parent_hamiltonian(s, jmin, cap=cap, tol=tol)
    return MinimalityReport(
        N=s.N,
        interaction_length=jmin,
        no_kernel_below=tuple(failures),
        generic_bound=s.N // 2 + 1,
        hamiltonian=ham,
    )
