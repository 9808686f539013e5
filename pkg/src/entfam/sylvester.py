"""Symmetric tensor rank, Waring decompositions, and the tangent refinement.

The classification pipeline refines the border rank (smallest secant family)
into proper-secant versus tangent classes:

* The null space of the degree-k catalecticant consists of binary forms
  whose projective roots are candidate decomposition nodes.
* If that family contains a square-free form, the state is a combination of
  the k product states at its roots; the weights are solved for and the
  re-expansion is verified before the rank is certified.
* If every member of the family has a repeated root (equivalently, the
  family's common divisor has one, possibly at infinity), no k-term
  decomposition exists and the search moves to k+1.  A state whose symmetric
  rank exceeds its border rank is a tangent-class state: a limit of proper
  secants rather than a proper combination.

Exact certification avoids algebraic numbers entirely.  For a square-free
kernel form g with monic finite part h, the node weights are the values of a
single polynomial rho with Gaussian-rational coefficients (Galois
equivariance makes the unique weight vector of that shape), and the moment
identities c_m = sum_j rho_j P_{j+m} involve only the Newton power sums P_t
of h, which are rational.  Solving that exact linear system both determines
rho and proves the re-expansion identity exactly, even when the individual
roots are irrational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .binaryforms import (
    BinaryForm,
    REPEATED_ROOT_CHORDAL,
    binary_form,
    form_roots,
    is_squarefree,
    newton_power_sums,
    poly_degree,
    poly_derivative,
    poly_eval,
    poly_gcd,
    poly_monic,
    rationalize_roots,
    squarefree_margin,
    _trim,
)
from .catalecticant import RankProfile, rank_profile
from .errors import ArgumentError, DomainError, NumericalError
from .linalg import DEFAULT_RANK_TOL, exact_nullspace, exact_solve, float_nullspace
from .scalars import QQI_ONE, QQI_ZERO, QQi, ModeError, is_exact_scalar, to_qqi
from .states import (
    EXACT,
    FLOAT,
    DecomposedState,
    LocalVector,
    SymState,
    as_local_vector,
    chordal_distance,
    expand_decomposition,
    veronese_map,
)

LABEL_SEPARABLE = "separable"
LABEL_PROPER = "proper-secant"
LABEL_TANGENT = "tangent"

_PAIR_PATTERNS = (
    (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1),
    (1, 3), (3, 1), (2, 3), (3, 2), (1, -3), (3, -1),
)
_RANDOM_COMBOS = 200
_FLOAT_RESIDUAL_TOL = 1e-8
_FLOAT_WEIGHT_TOL = 1e-10


@dataclass(frozen=True)
class TangentCertificate:
    """Evidence that a kernel family has no square-free member.

    Every member of the degree-k kernel is divisible by the square of the
    recorded factor (or vanishes doubly at infinity), so no k-node
    decomposition exists; the repeated root is the tangency point.
    """

    degree: int
    kernel_dimension: int
    common_factor: BinaryForm | None
    repeated_points: tuple
    infinity_repeated: bool
    exact: bool


@dataclass(frozen=True)
class ClassificationReport:
    """Full classification of one symmetric qubit state."""

    N: int
    border_rank: int
    symmetric_rank: int
    label: str
    rank_profile: RankProfile
    witness: DecomposedState | None
    witness_exact: bool
    certified_exact: bool
    kernel_form: BinaryForm | None
    tangent_certificate: TangentCertificate | None
    residual: float | None
    flags: tuple

    @property
    def label_text(self):
        if self.label == LABEL_SEPARABLE:
            return LABEL_SEPARABLE
        return f"{self.label}({self.border_rank})"

    @property
    def taxonomy(self):
        if self.label == LABEL_SEPARABLE:
            return "V (Veronese curve)"
        if self.label == LABEL_PROPER:
            return f"sigma_{self.border_rank}* proper point"
        return f"tau_{self.border_rank} (tangent limit)"


@dataclass(frozen=True)
class _SearchOutcome:
    rank: int
    form: BinaryForm
    witness: DecomposedState
    witness_exact: bool
    residual: float | None
    certificate: TangentCertificate | None
    flags: tuple


# ---------------------------------------------------------------------------
# kernel of the degree-k catalecticant
# ---------------------------------------------------------------------------

def _hankel_rows(s, k):
    return [[s.coeffs[r + c] for c in range(k + 1)] for r in range(s.N - k + 1)]


def apolar_kernel(s, k):
    """Basis of the null space of C_k, as binary forms of degree k.

    k may run up to N (the degree-N pairing is the single row c_0..c_N);
    the rank search needs the top degree even though catalecticant matrices
    themselves are indexed 1..N-1.
    """
    if s.d != 2:
        raise ArgumentError("apolar kernels are defined for qubit states only")
    if not isinstance(k, int) or k < 1 or k > s.N:
        raise ArgumentError(f"kernel degree must satisfy 1 <= k <= N, got {k}")
    rows = _hankel_rows(s, k)
    if s.mode == EXACT:
        basis = exact_nullspace(rows, ncols=k + 1)
        return [binary_form(vec, degree=k) for vec in basis]
    basis = float_nullspace(np.array(rows, dtype=complex), tol=DEFAULT_RANK_TOL)
    return [binary_form(tuple(row), degree=k) for row in basis]


# ---------------------------------------------------------------------------
# square-free member search
# ---------------------------------------------------------------------------

def _combine_exact(basis, coeffs):
    out = [QQI_ZERO] * len(basis[0].coeffs)
    for form, coeff in zip(basis, coeffs):
        if coeff.is_zero:
            continue
        for pos, value in enumerate(form.coeffs):
            out[pos] = out[pos] + coeff * value
    if all(v.is_zero for v in out):
        return None
    return binary_form(out, degree=basis[0].degree)


def _combine_float(basis, coeffs):
    out = np.zeros(len(basis[0].coeffs), dtype=complex)
    for form, coeff in zip(basis, coeffs):
        out += coeff * np.asarray(form.coeffs, dtype=complex)
    if not np.any(np.abs(out) > 1e-14):
        return None
    return binary_form(tuple(out), degree=basis[0].degree)


def _candidate_combinations(basis, seed):
    """Deterministic small-integer combinations, then seeded random rationals."""
    t = len(basis)
    exact = basis[0].mode == EXACT
    combine = _combine_exact if exact else _combine_float
    one = QQI_ONE if exact else 1.0

    for i in range(t):
        coeffs = [QQI_ZERO if exact else 0.0] * t
        coeffs[i] = one
        candidate = combine(basis, coeffs)
        if candidate is not None:
            yield candidate
    for i in range(t):
        for j in range(i + 1, t):
            for a, b in _PAIR_PATTERNS:
                coeffs = [QQI_ZERO if exact else 0.0] * t
                coeffs[i] = QQi(a) if exact else float(a)
                coeffs[j] = QQi(b) if exact else float(b)
                candidate = combine(basis, coeffs)
                if candidate is not None:
                    yield candidate
    rng = random.Random(seed)
    for _ in range(_RANDOM_COMBOS):
        if exact:
            coeffs = [
                QQi(
                    Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                )
                for _ in range(t)
            ]
            if all(c.is_zero for c in coeffs):
                continue
        else:
            coeffs = [
                complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(t)
            ]
        candidate = combine(basis, coeffs)
        if candidate is not None:
            yield candidate


def _family_certificate(basis, seed=0):
    """Proof that no member of an exact kernel family is square-free, or None.

    Either every member vanishes at least doubly at infinity (all degrees
    drop by two or more), or the family's common polynomial divisor has a
    repeated finite root.  By the structure of apolar ideals of binary forms
    these are the only ways a kernel family can avoid square-free members.
    """
    degree = basis[0].degree
    max_zdeg = max(form.z_degree for form in basis)
    infinity_repeated = max_zdeg <= degree - 2
    common = _trim(list(basis[0].coeffs))
    for form in basis[1:]:
        common = poly_gcd(common, _trim(list(form.coeffs)))
        if poly_degree(common) < 1:
            common = common or [QQI_ONE]
            break
    repeated = []
    finite_repeated = False
    if poly_degree(common) >= 1:
        rep = poly_gcd(common, poly_derivative(common))
        if poly_degree(rep) >= 1:
            finite_repeated = True
            rep_form = binary_form(rep, degree=poly_degree(rep))
            exact_pts = rationalize_roots(rep_form)
            if exact_pts is not None:
                repeated.extend(exact_pts)
            else:
                repeated.extend(form_roots(rep_form))
    if infinity_repeated:
        repeated.append((QQI_ZERO, QQI_ONE))
    if not (infinity_repeated or finite_repeated):
        return None
    common_form = (
        binary_form(common, degree=poly_degree(common))
        if poly_degree(common) >= 1
        else None
    )
    return TangentCertificate(
        degree=degree,
        kernel_dimension=len(basis),
        common_factor=common_form,
        repeated_points=tuple(repeated),
        infinity_repeated=infinity_repeated,
        exact=True,
    )


def squarefree_member(forms, seed=0):
    """A square-free member of the linear span of the given forms, or None.

    None is returned only when provably no member is square-free (exact
    mode: the family's common divisor carries a repeated root, possibly at
    infinity).  The search order is deterministic: basis members, small
    integer pairs, then seeded random rational combinations.
    """
    member, _cert, _flags = _squarefree_search(list(forms), seed=seed)
    return member


def _squarefree_search(basis, seed=0):
    if not basis:
        raise ArgumentError("empty form family")
    exact = basis[0].mode == EXACT
    flags = []
    if exact:
        certificate = _family_certificate(basis, seed=seed)
        if certificate is not None:
            return None, certificate, tuple(flags)
        for candidate in _candidate_combinations(basis, seed):
            if is_squarefree(candidate):
                return candidate, None, tuple(flags)
        raise NumericalError(
            "no square-free member found although the family has no common "
            "repeated factor; this should not happen"
        )
    # float mode: no exact certificate is available; report the best margin
    best = None
    best_margin = -1.0
    for candidate in _candidate_combinations(basis, seed):
        margin = squarefree_margin(candidate)
        if margin > REPEATED_ROOT_CHORDAL:
            if margin < 10 * REPEATED_ROOT_CHORDAL:
                flags.append("squarefree-margin-near-threshold; exact mode recommended")
            return candidate, None, tuple(flags)
        if margin > best_margin:
            best_margin = margin
            best = candidate
    flags.append("no-squarefree-member-found-numerically; exact mode recommended")
    certificate = TangentCertificate(
        degree=basis[0].degree,
        kernel_dimension=len(basis),
        common_factor=best,
        repeated_points=tuple(form_roots(best)) if best is not None else (),
        infinity_repeated=False,
        exact=False,
    )
    return None, certificate, tuple(flags)


# ---------------------------------------------------------------------------
# weight solving and witnesses
# ---------------------------------------------------------------------------

def _certify_exact(s, form):
    """Solve the moment system for a square-free kernel form, exactly.

    Returns (rho, lam_inf) where the node weights are rho evaluated at the
    finite roots and lam_inf is the weight of the infinity node, or None when
    the system is inconsistent or a weight vanishes (either would contradict
    minimality of the current degree).
    """
    zpart = _trim(list(form.coeffs))
    e = poly_degree(zpart)
    q = form.degree - e
    N = s.N
    ncols = max(e, 0) + (1 if q == 1 else 0)
    if ncols == 0:
        return None
    sums = None
    monic = None
    if e > 0:
        monic = poly_monic(zpart)
        sums = newton_power_sums(monic, N + e)
    rows = []
    for m in range(N + 1):
        row = [sums[j + m] for j in range(e)] if e > 0 else []
        if q == 1:
            row.append(QQI_ONE if m == N else QQI_ZERO)
        rows.append(row)
    solution = exact_solve(rows, list(s.coeffs))
    if solution is None:
        return None
    rho = _trim(list(solution[:e]))
    lam_inf = solution[e] if q == 1 else None
    if q == 1 and lam_inf.is_zero:
        return None
    if e > 0:
        if not rho:
            return None
        if poly_degree(poly_gcd(monic, rho)) >= 1:
            return None
    return rho, lam_inf


def _witness_from_exact(s, form, rho, lam_inf):
    """Build the decomposition witness; exact vectors when the form splits over Q(i)."""
    exact_points = rationalize_roots(form)
    if exact_points is not None:
        terms = []
        for x0, x1 in exact_points:
            if x0.is_zero:
                terms.append((lam_inf, LocalVector((QQI_ZERO, QQI_ONE))))
            else:
                terms.append((poly_eval(rho, x1), LocalVector((QQI_ONE, x1))))
        dec = DecomposedState(s.N, terms)
        return dec, True, 0.0
    rho_float = [complex(c) for c in rho]
    terms = []
    for x0, x1 in form_roots(form):
        if x0 == 0:
            terms.append((complex(lam_inf), LocalVector((0.0, 1.0))))
        else:
            z = x1 / x0
            weight = 0.0j
            for c in reversed(rho_float):
                weight = weight * z + c
            terms.append((weight, LocalVector((1.0 + 0.0j, z))))
    dec = DecomposedState(s.N, terms)
    residual = chordal_distance(expand_decomposition(dec), s.to_float())
    return dec, False, residual


def _certify_float(s, form, tol):
    """Least-squares weights over the form's roots; residual in chordal metric."""
    roots = form_roots(form)
    N = s.N
    columns = []
    for x0, x1 in roots:
        columns.append([x0 ** (N - m) * x1 ** m for m in range(N + 1)])
    a = np.array(columns, dtype=complex).T
    c = np.asarray(s.coeffs, dtype=complex)
    weights, *_ = np.linalg.lstsq(a, c, rcond=None)
    approx = a @ weights
    denom = np.linalg.norm(c)
    residual = np.linalg.norm(approx - c) / denom if denom else np.inf
    if residual > _FLOAT_RESIDUAL_TOL:
        return None
    scale = np.max(np.abs(weights))
    if scale == 0 or np.min(np.abs(weights)) < _FLOAT_WEIGHT_TOL * scale:
        return None
    terms = [
        (weights[i], LocalVector((roots[i][0], roots[i][1])))
        for i in range(len(roots))
    ]
    dec = DecomposedState(N, terms)
    return dec, chordal_distance(expand_decomposition(dec), s.to_float())


# ---------------------------------------------------------------------------
# the rank search
# ---------------------------------------------------------------------------

def _rank_search(s, start, seed=0, tol=DEFAULT_RANK_TOL):
    """Find the least k >= start admitting a certified k-node decomposition."""
    exact = s.mode == EXACT
    border_certificate = None
    flags = []
    for k in range(start, s.N + 1):
        basis = apolar_kernel(s, k)
        if not basis:
            continue
        member, certificate, search_flags = _squarefree_search(basis, seed=seed)
        flags.extend(search_flags)
        if member is None:
            if k == start and certificate is not None:
                border_certificate = certificate
            continue
        if exact:
            for candidate in _iter_squarefree(basis, member, seed):
                certified = _certify_exact(s, candidate)
                if certified is not None:
                    rho, lam_inf = certified
                    witness, witness_exact, residual = _witness_from_exact(
                        s, candidate, rho, lam_inf
                    )
                    return _SearchOutcome(
                        rank=k,
                        form=candidate,
                        witness=witness,
                        witness_exact=witness_exact,
                        residual=residual,
                        certificate=border_certificate,
                        flags=tuple(flags),
                    )
            raise NumericalError(
                f"square-free kernel members at degree {k} exist but none "
                "certified by exact re-expansion; this should not happen"
            )
        for candidate in _iter_squarefree(basis, member, seed):
            result = _certify_float(s, candidate, tol)
            if result is not None:
                witness, residual = result
                return _SearchOutcome(
                    rank=k,
                    form=candidate,
                    witness=witness,
                    witness_exact=False,
                    residual=residual,
                    certificate=border_certificate,
                    flags=tuple(flags),
                )
        flags.append(f"degree-{k} float certification failed; continuing")
    raise NumericalError("rank search exhausted degrees up to N without success")


def _iter_squarefree(basis, first, seed):
    yield first
    for candidate in _candidate_combinations(basis, seed + 1):
        if candidate.coeffs != first.coeffs and is_squarefree(candidate):
            yield candidate


def symmetric_rank(s, mode=None, tol=DEFAULT_RANK_TOL, seed=0):
    """Minimal number of symmetric product terms representing the state."""
    return classify(s, mode=mode, tol=tol, seed=seed).symmetric_rank


def classify(s, mode=None, tol=DEFAULT_RANK_TOL, seed=0):
    """Classify a symmetric qubit state into its entanglement family and class.

    The border rank k places the state in the k-th secant family; the
    symmetric rank r refines it: r = k means a proper combination of k
    product states (witnessed by an explicit decomposition), r > k means a
    tangent-class state (witnessed by the kernel family's repeated-root
    certificate).  Separable states are exactly k = 1.
    """
    if s.d != 2:
        raise ArgumentError("classification is defined for qubit states only")
    if s.N < 2:
        raise ArgumentError("classification needs N >= 2")
    if mode is None:
        mode = s.mode
    if mode == EXACT and s.mode == FLOAT:
        raise ModeError("exact classification requested for a float state")
    state = s.to_float() if (mode == FLOAT and s.mode == EXACT) else s
    profile = rank_profile(state, mode=mode, tol=tol)
    border = profile.border_rank
    outcome = _rank_search(state, start=border, seed=seed, tol=tol)
    flags = list(outcome.flags)
    if profile.unstable:
        flags.append(
            "rank-decision-near-tolerance at j=" + ",".join(map(str, profile.unstable))
        )
    if border == 1:
        label = LABEL_SEPARABLE
    elif outcome.rank == border:
        label = LABEL_PROPER
    else:
        label = LABEL_TANGENT
    witness = outcome.witness if outcome.rank == border else None
    certificate = outcome.certificate if label == LABEL_TANGENT else None
    if label == LABEL_TANGENT and certificate is None:
        # float search concluded tangent without an exact proof
        flags.append("tangent-label-without-exact-certificate")
    return ClassificationReport(
        N=s.N,
        border_rank=border,
        symmetric_rank=outcome.rank,
        label=label,
        rank_profile=profile,
        witness=witness,
        witness_exact=outcome.witness_exact if witness is not None else False,
        certified_exact=mode == EXACT,
        kernel_form=outcome.form,
        tangent_certificate=certificate,
        residual=outcome.residual,
        flags=tuple(flags),
    )


def waring_decomposition(s, mode=None, tol=DEFAULT_RANK_TOL, seed=0):
    """Explicit decomposition of size border rank; tangent states are refused.

    The returned points are the projective roots of the certified square-free
    kernel form (including the infinity point, which maps to the local vector
    (0, 1)); weights come from the exact moment solve.  Re-expansion
    reproduces the input, exactly when the witness is exact.
    """
    report = classify(s, mode=mode, tol=tol, seed=seed)
    if report.label == LABEL_TANGENT:
        raise DomainError(
            f"no symmetric decomposition of size {report.border_rank} exists: "
            f"the state is a tangent-class limit (symmetric rank "
            f"{report.symmetric_rank})"
        )
    return report.witness


# ---------------------------------------------------------------------------
# secant and tangent constructions
# ---------------------------------------------------------------------------

def _require_distinct(points):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if _proj_same_point(points[i], points[j]):
                raise ArgumentError("construction points must be pairwise distinct")


def _proj_same_point(u, v):
    a, b = u.components, v.components
    if u.mode == EXACT and v.mode == EXACT:
        return all(
            a[i] * b[j] == a[j] * b[i]
            for i in range(len(a))
            for j in range(i + 1, len(a))
        )
    av = np.asarray([complex(x) for x in a])
    bv = np.asarray([complex(x) for x in b])
    cross = abs(av[0] * bv[1] - av[1] * bv[0])
    return cross <= 1e-12 * np.linalg.norm(av) * np.linalg.norm(bv)


def secant_point(points, weights, N):
    """Affine combination p_0 + sum_i w_i (p_i - p_0) of Veronese images.

    ``weights`` holds one scalar per point beyond the first; the implied
    decomposition weights are (1 - sum w, w_1, ..., w_t) and zero entries are
    dropped from the returned expansion.
    """
    pts = [as_local_vector(p) for p in points]
    if len(pts) < 2:
        raise ArgumentError("secant points need at least two construction points")
    _require_distinct(pts)
    weights = list(weights)
    if len(weights) != len(pts) - 1:
        raise ArgumentError("need one weight per point beyond the first")
    exact = pts[0].mode == EXACT and all(is_exact_scalar(w) for w in weights)
    if exact:
        lam = [to_qqi(w) for w in weights]
        lam0 = QQI_ONE - sum(lam, QQI_ZERO)
        full = [lam0] + lam
        terms = [(w, p) for w, p in zip(full, pts) if not w.is_zero]
    else:
        lam = [complex(w) for w in weights]
        lam0 = 1.0 - sum(lam)
        full = [lam0] + lam
        pts = [p.to_float() for p in pts]
        terms = [(w, p) for w, p in zip(full, pts) if w != 0]
    if not terms:
        raise ArgumentError("all combination weights vanish")
    return expand_decomposition(DecomposedState(N, terms))


def _chart_parameter(p0):
    """z-coordinate of a point in the x0 != 0 chart; rejects [0:1]."""
    p0 = as_local_vector(p0)
    if p0.d != 2:
        raise ArgumentError("tangent constructions are for qubits only")
    x0, x1 = p0.components
    if p0.mode == EXACT:
        if x0.is_zero:
            raise ArgumentError(
                "tangent construction needs x0 != 0; apply a local rotation "
                "to move the point into the standard chart first"
            )
        return x1 / x0, EXACT
    if abs(x0) <= 1e-14 * (abs(x0) + abs(x1)):
        raise ArgumentError(
            "tangent construction needs x0 != 0; apply a local rotation "
            "to move the point into the standard chart first"
        )
    return x1 / x0, FLOAT


def tangent_point(p0, lam, N):
    """Point on the tangent line to the Veronese curve at p0, chart x0 != 0.

    Closed form: c_m = z0^m + m * lam * z0^(m-1), the analytic limit of the
    secant through z0 and z0 + eps with weight lam / eps.
    """
    z0, mode = _chart_parameter(p0)
    if mode == EXACT:
        if not is_exact_scalar(lam):
            raise ModeError("exact tangent point needs an exact weight")
        lam = to_qqi(lam)
        coeffs = [QQI_ONE]
        for m in range(1, N + 1):
            coeffs.append(z0 ** m + QQi(m) * lam * z0 ** (m - 1))
    else:
        lam = complex(lam)
        z0 = complex(z0)
        coeffs = [1.0 + 0.0j]
        for m in range(1, N + 1):
            coeffs.append(z0 ** m + m * lam * z0 ** (m - 1))
    return SymState(N, coeffs)


def tangent_point_tilde(p0, N):
    """The tangent direction itself: c_m = m * z0^(m-1) (c_0 = 0)."""
    z0, mode = _chart_parameter(p0)
    if mode == EXACT:
        coeffs = [QQI_ZERO, QQI_ONE]
        for m in range(2, N + 1):
            coeffs.append(QQi(m) * z0 ** (m - 1))
    else:
        z0 = complex(z0)
        coeffs = [0.0j, 1.0 + 0.0j]
        for m in range(2, N + 1):
            coeffs.append(m * z0 ** (m - 1))
    return SymState(N, coeffs)


def tangent_plane_point(p0, p2, lam, mu, N=4):
    """Type-1 tangent plane point: tangent_point(p0; lam) + mu * (nu(p2) - nu(p0)).

    p0 is taken in its chart representative (1, z0); p2 contributes with the
    literal representative supplied.  The second ("both points collide") type
    of tangent plane collapses to tangent_point(p0; lam + mu) and is covered
    by tests rather than a separate constructor.
    """
    p0 = as_local_vector(p0)
    p2 = as_local_vector(p2)
    if _proj_same_point(p0, p2):
        raise ArgumentError("tangent plane needs p2 distinct from p0")
    base = tangent_point(p0, lam, N)
    z0, mode = _chart_parameter(p0)
    if mode == EXACT and p2.mode == EXACT and is_exact_scalar(mu):
        mu = to_qqi(mu)
        chart0 = LocalVector((QQI_ONE, z0))
        nu0 = veronese_map(chart0, N)
        nu2 = veronese_map(p2, N)
        coeffs = [
            b + mu * (t - z)
            for b, t, z in zip(base.coeffs, nu2.coeffs, nu0.coeffs)
        ]
        return SymState(N, coeffs)
    mu = complex(mu)
    base = base.to_float()
    nu0 = veronese_map(LocalVector((1.0 + 0.0j, complex(z0))), N)
    nu2 = veronese_map(p2.to_float(), N)
    coeffs = np.asarray(base.coeffs) + mu * (
        np.asarray(nu2.coeffs) - np.asarray(nu0.coeffs)
    )
    return SymState(N, coeffs)


def nest(dec):
    """Lift a decomposition from N to N+1 parties (same points and weights).

    Valid for k <= floor(N/2) + 1 terms, the range in which k-node states of
    N and N+1 parties correspond one to one; beyond it the lift is not
    guaranteed to preserve the classification.
    """
    if not isinstance(dec, DecomposedState):
        raise ArgumentError("expected a DecomposedState")
    k = len(dec.terms)
    if k > dec.N // 2 + 1:
        raise ArgumentError(
            f"nesting is guaranteed only for k <= floor(N/2)+1 terms, "
            f"got k={k} at N={dec.N}"
        )
    return DecomposedState(dec.N + 1, dec.terms)
