"""Binary forms: the polynomial layer behind kernel and decomposition work.

A degree-k binary form is stored by its monomial coefficients g_0..g_k,
meaning g = sum_c g_c x0^(k-c) x1^c; dehomogenized at x0 = 1 this is the
polynomial g(z) = sum_c g_c z^c.  The projective roots are the finite roots
of g(z) together with the point at infinity [0:1] carried with multiplicity
(k - deg_z g) when leading coefficients vanish.

Square-freeness therefore has two parts: gcd(g, g') constant for the finite
roots, and degree drop at most one for infinity (a form is certainly not
square-free when its top two coefficients both vanish).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ArgumentError
from .scalars import QQI_ONE, QQI_ZERO, QQi
from .states import EXACT, FLOAT, _classify_entries

REPEATED_ROOT_CHORDAL = 1e-7


@dataclass(frozen=True)
class ProjectiveRoot:
    """A root [x0 : x1] of a binary form together with its multiplicity."""

    point: tuple
    multiplicity: int

    @property
    def at_infinity(self):
        x0 = self.point[0]
        return x0.is_zero if isinstance(x0, QQi) else x0 == 0


@dataclass(frozen=True)
class BinaryForm:
    degree: int
    coeffs: tuple
    mode: str

    @property
    def z_degree(self):
        """Degree of the dehomogenized polynomial (index of last nonzero coeff)."""
        for c in range(self.degree, -1, -1):
            if not _is_zero(self.coeffs[c]):
                return c
        return -1

    @property
    def infinity_multiplicity(self):
        return self.degree - self.z_degree

    def __repr__(self):
        return f"BinaryForm(degree={self.degree}, coeffs={list(self.coeffs)})"


def binary_form(coeffs, degree=None):
    mode, data = _classify_entries(coeffs)
    if mode == FLOAT:
        data = tuple(complex(v) for v in data)
    if degree is None:
        degree = len(data) - 1
    if len(data) != degree + 1:
        raise ArgumentError("coefficient count must be degree + 1")
    if all(_is_zero(v) for v in data):
        raise ArgumentError("the zero form is not a binary form")
    return BinaryForm(degree=degree, coeffs=data, mode=mode)


def _is_zero(v):
    if isinstance(v, QQi):
        return v.is_zero
    return v == 0


# ---------------------------------------------------------------------------
# exact polynomial arithmetic on QQi coefficient lists (z-polynomials)
# ---------------------------------------------------------------------------

def _trim(p):
    while p and p[-1].is_zero:
        p.pop()
    return p


def poly_degree(p):
    return len(p) - 1


def poly_derivative(p):
    return _trim([QQi(c) * p[c] for c in range(1, len(p))])


def poly_monic(p):
    lead = p[-1]
    return [c / lead for c in p]


def poly_mul(p, q):
    out = [QQI_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return _trim(out)


def poly_divmod(p, q):
    """Polynomial division over Q(i); q must be nonzero."""
    p = list(p)
    dq = poly_degree(q)
    lead = q[-1]
    quotient = [QQI_ZERO] * max(0, len(p) - dq)
    while poly_degree(p) >= dq and p:
        shift = poly_degree(p) - dq
        factor = p[-1] / lead
        quotient[shift] = factor
        for i in range(dq + 1):
            p[shift + i] = p[shift + i] - factor * q[i]
        _trim(p)
    return _trim(quotient), p


def poly_gcd(p, q):
    """Monic gcd over Q(i), via the Euclidean algorithm."""
    a = _trim(list(p))
    b = _trim(list(q))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    return poly_monic(a)


def poly_eval(p, z):
    value = QQI_ZERO if isinstance(z, QQi) else 0.0
    for c in reversed(p):
        value = value * z + c
    return value


# ---------------------------------------------------------------------------
# square-freeness
# ---------------------------------------------------------------------------

def is_squarefree(form, tol=REPEATED_ROOT_CHORDAL):
    """Whether the form has pairwise distinct projective roots.

    Exact forms: gcd(g, g') must be constant and the infinity multiplicity at
    most one.  Float forms: companion-matrix roots must be pairwise separated
    by more than tol in the chordal metric (infinity included).
    """
    if form.mode == EXACT:
        if form.infinity_multiplicity > 1:
            return False
        zpart = _trim(list(form.coeffs))
        if poly_degree(zpart) < 1:
            return True
        return poly_degree(poly_gcd(zpart, poly_derivative(zpart))) < 1
    roots = form_roots(form)
    return _min_root_spacing(roots) > tol


def squarefree_margin(form):
    """Minimal pairwise chordal root distance of a float form (1.0 if <2 roots)."""
    return _min_root_spacing(form_roots(form))


def _min_root_spacing(roots):
    best = 1.0
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            best = min(best, _chordal_pair(roots[i], roots[j]))
    return best


def _chordal_pair(p, q):
    (a0, a1), (b0, b1) = p, q
    num = abs(a0 * b1 - a1 * b0)
    den = math.sqrt(
        (abs(a0) ** 2 + abs(a1) ** 2) * (abs(b0) ** 2 + abs(b1) ** 2)
    )
    return num / den


# ---------------------------------------------------------------------------
# roots
# ---------------------------------------------------------------------------

def form_roots(form):
    """Projective roots as a list of (x0, x1) complex pairs, repeats included.

    Finite roots come from companion-matrix eigenvalues of the dehomogenized
    polynomial (numpy.roots); the infinity root [0:1] is appended once per
    unit of degree drop.
    """
    coeffs = [complex(v) for v in form.coeffs]
    zdeg = form.z_degree
    roots = []
    if zdeg >= 1:
        zpoly = coeffs[: zdeg + 1]
        finite = np.roots(zpoly[::-1])
        roots.extend((1.0 + 0.0j, complex(z)) for z in finite)
    roots.extend((0.0j, 1.0 + 0.0j) for _ in range(form.degree - zdeg))
    return roots


def rationalize_roots(form, max_denominator=4096):
    """Try to express all roots as exact Gaussian rationals.

    Returns a list of (x0, x1) QQi pairs (with the infinity root as (0, 1))
    when every finite root verifies exactly after rounding the numerical root
    to nearby small rationals; returns None otherwise.  Purely opportunistic:
    used to provide exact witnesses when the kernel form splits over Q(i).
    """
    if form.mode != EXACT:
        return None
    if form.infinity_multiplicity > 1:
        return None
    zpart = _trim(list(form.coeffs))
    zdeg = poly_degree(zpart)
    exact_points = []
    if form.infinity_multiplicity == 1:
        exact_points.append((QQI_ZERO, QQI_ONE))
    if zdeg >= 1:
        numeric = np.roots([complex(v) for v in reversed(zpart)])
        found = []
        for z in numeric:
            candidate = None
            for denom in (1, 2, 3, 4, 6, 8, 12, 16, max_denominator):
                re = Fraction(z.real).limit_denominator(denom)
                im = Fraction(z.imag).limit_denominator(denom)
                trial = QQi(re, im)
                if poly_eval(zpart, trial).is_zero:
                    candidate = trial
                    break
            if candidate is None:
                return None
            found.append(candidate)
        if len(set(found)) != zdeg:
            return None
        exact_points.extend((QQI_ONE, z) for z in found)
    return exact_points


def squarefree_decomposition(p):
    """Yun decomposition of an exact z-polynomial: [(factor, multiplicity)].

    The product of factor^multiplicity reproduces the monic part of p; each
    factor is square-free and the factors are pairwise coprime.
    """
    f = poly_monic(_trim(list(p)))
    if poly_degree(f) < 1:
        return []
    df = poly_derivative(f)
    a = poly_gcd(f, df)
    b, _ = poly_divmod(f, a)
    c, _ = poly_divmod(df, a)
    d = _poly_sub(c, poly_derivative(b))
    parts = []
    i = 1
    while poly_degree(b) >= 1:
        ai = poly_gcd(b, d)
        if poly_degree(ai) >= 1:
            parts.append((poly_monic(ai), i))
        b, _ = poly_divmod(b, ai)
        c, _ = poly_divmod(d, ai)
        d = _poly_sub(c, poly_derivative(b))
        i += 1
    return parts


def _poly_sub(p, q):
    out = [QQI_ZERO] * max(len(p), len(q))
    for i, v in enumerate(p):
        out[i] = out[i] + v
    for i, v in enumerate(q):
        out[i] = out[i] - v
    return _trim(out)


def projective_roots(form):
    """Roots with multiplicities; multiplicities sum to the form's degree.

    Exact forms factor through the Yun decomposition, so multiplicities are
    exact; points are exact Gaussian rationals when the factor splits over
    Q(i) and float approximations otherwise.  Float forms cluster the
    companion-matrix roots at the repeated-root chordal threshold.  The
    infinity root [0:1] carries the degree drop as its multiplicity.
    """
    roots = []
    if form.mode == EXACT:
        zpart = _trim(list(form.coeffs))
        for factor, mult in squarefree_decomposition(zpart):
            factor_form = binary_form(factor, degree=poly_degree(factor))
            exact_pts = rationalize_roots(factor_form)
            points = exact_pts if exact_pts is not None else form_roots(factor_form)
            roots.extend(ProjectiveRoot(tuple(pt), mult) for pt in points)
        inf_mult = form.infinity_multiplicity
        if inf_mult:
            roots.append(ProjectiveRoot((QQI_ZERO, QQI_ONE), inf_mult))
        return tuple(roots)
    raw = form_roots(form)
    clusters = []
    for point in raw:
        for cluster in clusters:
            if _chordal_pair(point, cluster[0]) <= REPEATED_ROOT_CHORDAL:
                cluster.append(point)
                break
        else:
            clusters.append([point])
    for cluster in clusters:
        xs = np.array([p[0] for p in cluster])
        ys = np.array([p[1] for p in cluster])
        roots.append(
            ProjectiveRoot((complex(xs.mean()), complex(ys.mean())), len(cluster))
        )
    return tuple(roots)


# ---------------------------------------------------------------------------
# power sums
# ---------------------------------------------------------------------------

def newton_power_sums(monic, count):
    """Power sums P_0..P_{count-1} of the roots of a monic QQi polynomial.

    Newton's identities, degree e = len(monic) - 1:
      P_0 = e
      P_t = -t a_{e-t} - sum_{i=1..t-1} a_{e-i} P_{t-i}     (t <= e)
      P_t = -sum_{i=1..e} a_{e-i} P_{t-i}                   (t > e)
    """
    e = poly_degree(monic)
    sums = [QQi(e)]
    for t in range(1, count):
        acc = QQI_ZERO
        upper = min(t - 1, e)
        for i in range(1, upper + 1):
            acc = acc + monic[e - i] * sums[t - i]
        if t <= e:
            acc = acc + QQi(t) * monic[e - t]
        sums.append(-acc)
    return sums
