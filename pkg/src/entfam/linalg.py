"""Dense linear algebra in both arithmetic modes.

Exact routines take matrices as lists (or tuples) of rows of QQi entries and
are deterministic: pivots are chosen by position, never by magnitude.  Rank
uses fraction-free (Bareiss) elimination after clearing row denominators, so
intermediate entries stay Gaussian integers.  Reduced row echelon form over
the field Q(i) backs null spaces and linear solves.

Float routines wrap numpy/scipy: SVD thresholding for rank (relative
tolerance, with a flag when the decision falls within a factor of ten of the
cutoff) and column-pivoted QR for orthonormalization.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import scipy.linalg

from .scalars import QQI_ONE, QQI_ZERO, QQi, ModeError

DEFAULT_RANK_TOL = 1e-9


# ---------------------------------------------------------------------------
# exact mode
# ---------------------------------------------------------------------------

def _clear_row_denominators(row):
    """Scale a row of QQi by a positive integer so entries become Gaussian integers."""
    lcm = 1
    for entry in row:
        lcm = lcm * entry.re.denominator // _gcd(lcm, entry.re.denominator)
        lcm = lcm * entry.im.denominator // _gcd(lcm, entry.im.denominator)
    if lcm == 1:
        return list(row)
    factor = QQi(lcm)
    return [entry * factor for entry in row]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def exact_rank(rows):
    """Rank of a QQi matrix via fraction-free elimination.

    Row and column swaps bring any remaining nonzero entry to the pivot, so
    the elimination terminates as soon as the residual block vanishes; this
    makes low-rank matrices (the common case for separable states) cheap.
    """
    mat = [_clear_row_denominators(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    prev = QQI_ONE
    while rank < nrows and rank < ncols:
        pivot = None
        for i in range(rank, nrows):
            for j in range(rank, ncols):
                if not mat[i][j].is_zero:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != rank:
            mat[pi], mat[rank] = mat[rank], mat[pi]
        if pj != rank:
            for row in mat:
                row[pj], row[rank] = row[rank], row[pj]
        pv = mat[rank][rank]
        row_p = mat[rank]
        for i in range(rank + 1, nrows):
            head = mat[i][rank]
            row_i = mat[i]
            for j in range(rank + 1, ncols):
                row_i[j] = (pv * row_i[j] - head * row_p[j]) / prev
            row_i[rank] = QQI_ZERO
        prev = pv
        rank += 1
    return rank


def exact_rref(rows):
    """Reduced row echelon form over Q(i); returns (rows, pivot column tuple)."""
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not mat[i][col].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = QQI_ONE / mat[r][col]
        mat[r] = [entry * inv for entry in mat[r]]
        for i in range(nrows):
            if i != r and not mat[i][col].is_zero:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return mat, tuple(pivots)


def exact_nullspace(rows, ncols=None):
    """Basis of the right null space of a QQi matrix, as a list of QQi vectors.

    The basis is the canonical RREF one (one vector per free column, with a 1
    in that column), in ascending free-column order; fully deterministic.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [
            [QQI_ONE if i == j else QQI_ZERO for i in range(ncols)]
            for j in range(ncols)
        ]
    rref, pivots = exact_rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [QQI_ZERO] * ncols
        vec[free] = QQI_ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -rref[r][free]
        basis.append(vec)
    return basis


def exact_solve(a_rows, b):
    """Solve A x = b over Q(i); returns one solution (free vars 0) or None.

    None signals inconsistency.  The caller is expected to know, or not care,
    whether the solution is unique.
    """
    ncols = len(a_rows[0]) if a_rows else 0
    augmented = [list(row) + [rhs] for row, rhs in zip(a_rows, b)]
    rref, pivots = exact_rref(augmented)
    if ncols in pivots:
        return None
    solution = [QQI_ZERO] * ncols
    for r, pc in enumerate(pivots):
        solution[pc] = rref[r][ncols]
    return solution


def exact_matmul(a_rows, b_rows):
    inner = len(b_rows)
    return [
        [
            sum((row[t] * b_rows[t][j] for t in range(inner)), QQI_ZERO)
            for j in range(len(b_rows[0]))
        ]
        for row in a_rows
    ]


def exact_matvec(a_rows, x):
    return [sum((row[t] * x[t] for t in range(len(x))), QQI_ZERO) for row in a_rows]


def exact_dagger(a_rows):
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    return [[a_rows[i][j].conjugate() for i in range(nrows)] for j in range(ncols)]


def qqi_matrix_to_complex(rows):
    return np.array([[complex(entry) for entry in row] for row in rows], dtype=complex)


# ---------------------------------------------------------------------------
# float mode
# ---------------------------------------------------------------------------

def float_rank(matrix, tol=DEFAULT_RANK_TOL):
    """(rank, unstable) of a float matrix by singular-value thresholding.

    Singular values above ``tol * sigma_max`` count toward the rank.  The
    decision is flagged unstable when any singular value lies within a factor
    of ten of the cutoff, on either side.
    """
    a = np.asarray(matrix, dtype=complex)
    if a.size == 0:
        return 0, False
    svals = np.linalg.svd(a, compute_uv=False)
    smax = svals[0]
    if smax == 0.0:
        return 0, False
    cutoff = tol * smax
    rank = int(np.count_nonzero(svals > cutoff))
    near = np.any((svals > cutoff / 10.0) & (svals < cutoff * 10.0))
    return rank, bool(near)


def float_nullspace(matrix, tol=DEFAULT_RANK_TOL):
    """Orthonormal basis of the right null space (rows of the returned array)."""
    a = np.asarray(matrix, dtype=complex)
    _, svals, vh = np.linalg.svd(a)
    smax = svals[0] if svals.size else 0.0
    cutoff = tol * smax if smax > 0 else np.inf
    rank = int(np.count_nonzero(svals > cutoff))
    return vh[rank:].conj()


def orthonormal_range(columns, tol=1e-12):
    """Orthonormal basis (columns) of the column span, via pivoted QR."""
    b = np.asarray(columns, dtype=complex)
    if b.ndim != 2 or b.shape[1] == 0:
        return np.zeros((b.shape[0], 0), dtype=complex)
    q, r, _ = scipy.linalg.qr(b, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag.size == 0 or diag[0] == 0.0:
        return np.zeros((b.shape[0], 0), dtype=complex)
    keep = int(np.count_nonzero(diag > tol * diag[0]))
    return q[:, :keep]
