"""Symmetric multi-qudit states in the induced basis.

The induced basis vector labelled by a multi-index ``[n_0, ..., n_{d-1}]``
(with ``sum n_j = N``) is the unnormalized sum of all computational product
states in which level ``j`` occurs ``n_j`` times.  It is orthogonal but not
normalized; its squared norm is the multinomial ``N! / prod(n_j!)``, and
dividing by the square root of that multinomial gives the Dicke state.

Canonical coefficient order
---------------------------
Multi-indices are ordered descending-lexicographically, which for qubits
(d = 2) gives ``c_0 ... c_N`` with ``c_k`` attached to ``|[N-k, k]>``.  This
is THE coefficient order used everywhere: catalecticants, state files, and
reports all read coefficients in this order.

States are projective: two coefficient vectors represent the same state when
one is a nonzero scalar multiple of the other.  Exact states hold QQi
entries; float states hold a complex128 array.  The internal single-qubit
basis convention is ``|0> = e_0 = (1, 0)^T``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import ArgumentError, ResourceError
from .scalars import QQI_ONE, QQI_ZERO, QQi, ModeError, is_exact_scalar, to_qqi

FULL_TENSOR_CAP = 2 ** 14

EXACT = "exact"
FLOAT = "float"


# ---------------------------------------------------------------------------
# multi-indices and combinatorial weights
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def multi_indices(N, d=2):
    """All multi-indices [n_0, ..., n_{d-1}] with sum N, descending lex order."""
    if d == 2:
        return tuple((N - k, k) for k in range(N + 1))

    def gen(remaining, slots):
        if slots == 1:
            yield (remaining,)
            return
        for head in range(remaining, -1, -1):
            for tail in gen(remaining - head, slots - 1):
                yield (head,) + tail

    return tuple(gen(N, d))


@lru_cache(maxsize=None)
def _index_positions(N, d):
    return {idx: pos for pos, idx in enumerate(multi_indices(N, d))}


def induced_dim(N, d=2):
    """Dimension of the symmetric subspace of N qudits, binomial(N+d-1, N)."""
    if not isinstance(N, int) or N < 1:
        raise ArgumentError(f"party count must be a positive integer, got {N!r}")
    if not isinstance(d, int) or d < 2:
        raise ArgumentError(f"local dimension must be an integer >= 2, got {d!r}")
    return math.comb(N + d - 1, N)


def induced_norm_sq(idx):
    """Squared norm of the induced basis vector |[n_0, ..., n_{d-1}]>.

    Equals the multinomial coefficient, i.e. the number of product strings
    with the given level counts; exact integer.
    """
    idx = tuple(idx)
    if not idx or any((not isinstance(n, int)) or n < 0 for n in idx):
        raise ArgumentError(f"invalid multi-index {idx!r}")
    total = sum(idx)
    result = math.factorial(total)
    for n in idx:
        result //= math.factorial(n)
    return result


def dicke_normalizer(idx):
    """Factor converting |[n_0, ...]> to the normalized Dicke state (float).

    The value is 1/sqrt(multinomial) and is irrational in general, hence
    float; use :func:`induced_norm_sq` for the exact inverse square.
    """
    return 1.0 / math.sqrt(induced_norm_sq(idx))


@lru_cache(maxsize=None)
def dicke_weights(N, d=2):
    """Array of induced-basis squared norms in canonical order."""
    return np.array([induced_norm_sq(idx) for idx in multi_indices(N, d)], dtype=float)


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

def _classify_entries(entries):
    """Return (mode, normalized tuple/array) for a sequence of scalars."""
    entries = list(entries)
    if not entries:
        raise ArgumentError("empty coefficient sequence")
    if all(is_exact_scalar(v) for v in entries):
        return EXACT, tuple(to_qqi(v) for v in entries)
    if any(isinstance(v, QQi) for v in entries):
        raise ModeError("cannot mix exact QQi entries with floats in one vector")
    array = np.asarray(entries, dtype=complex)
    return FLOAT, array


class SymState:
    """Projective symmetric state: coefficients over the induced basis."""

    __slots__ = ("N", "d", "coeffs", "mode")

    def __init__(self, N, coeffs, d=2):
        dim = induced_dim(N, d)
        mode, data = _classify_entries(coeffs)
        if len(data) != dim:
            raise ArgumentError(
                f"expected {dim} coefficients for N={N}, d={d}, got {len(data)}"
            )
        if mode == EXACT:
            if all(v.is_zero for v in data):
                raise ArgumentError("zero coefficient vector does not define a state")
        else:
            if not np.any(data):
                raise ArgumentError("zero coefficient vector does not define a state")
            data = data.copy()
            data.setflags(write=False)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "coeffs", data)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("SymState is immutable")

    @property
    def is_exact(self):
        return self.mode == EXACT

    def c(self, k):
        """Qubit coefficient c_k (the coefficient of |[N-k, k]>)."""
        if self.d != 2:
            raise ArgumentError("c(k) indexing is defined for qubits only")
        return self.coeffs[k]

    def coeff(self, idx):
        return self.coeffs[_index_positions(self.N, self.d)[tuple(idx)]]

    def to_float(self):
        """Explicit downcast to a float-mode copy (identity for float states)."""
        if self.mode == FLOAT:
            return self
        return SymState(self.N, [complex(v) for v in self.coeffs], d=self.d)

    def __repr__(self):
        if self.d == 2 and self.N <= 8:
            body = ":".join(str(v) for v in self.coeffs)
            return f"SymState(N={self.N}, [{body}])"
        return f"SymState(N={self.N}, d={self.d}, mode={self.mode})"


class LocalVector:
    """Nonzero single-party vector (x_0, ..., x_{d-1}), projective semantics."""

    __slots__ = ("components", "d", "mode")

    def __init__(self, components):
        mode, data = _classify_entries(components)
        if mode == EXACT:
            if all(v.is_zero for v in data):
                raise ArgumentError("local vector must be nonzero")
        else:
            if not np.any(data):
                raise ArgumentError("local vector must be nonzero")
            data = tuple(complex(v) for v in data)
        if len(data) < 2:
            raise ArgumentError("local vector needs at least two components")
        object.__setattr__(self, "components", data)
        object.__setattr__(self, "d", len(data))
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("LocalVector is immutable")

    @property
    def is_exact(self):
        return self.mode == EXACT

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return LocalVector([complex(v) for v in self.components])

    def __iter__(self):
        return iter(self.components)

    def __repr__(self):
        return "LocalVector[" + ":".join(str(v) for v in self.components) + "]"


def as_local_vector(x):
    return x if isinstance(x, LocalVector) else LocalVector(x)


class DecomposedState:
    """Explicit Waring decomposition: sum of weight * vector^{tensor N}."""

    __slots__ = ("N", "terms", "mode")

    def __init__(self, N, terms):
        if not isinstance(N, int) or N < 1:
            raise ArgumentError(f"invalid party count {N!r}")
        norm_terms = []
        modes = set()
        for weight, vector in terms:
            vector = as_local_vector(vector)
            if is_exact_scalar(weight):
                weight = to_qqi(weight)
                wmode = EXACT
                if weight.is_zero:
                    raise ArgumentError("decomposition weights must be nonzero")
            else:
                weight = complex(weight)
                wmode = FLOAT
                if weight == 0:
                    raise ArgumentError("decomposition weights must be nonzero")
            if wmode != vector.mode:
                raise ModeError("weight and vector of a term must share a mode")
            modes.add(wmode)
            norm_terms.append((weight, vector))
        if not norm_terms:
            raise ArgumentError("decomposition needs at least one term")
        if len(modes) > 1:
            raise ModeError("all decomposition terms must share one mode")
        for i in range(len(norm_terms)):
            for j in range(i + 1, len(norm_terms)):
                vi, vj = norm_terms[i][1], norm_terms[j][1]
                if _points_projectively_equal(vi, vj):
                    raise ArgumentError(
                        "decomposition points must be pairwise projectively distinct"
                    )
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "terms", tuple(norm_terms))
        object.__setattr__(self, "mode", modes.pop())

    def __setattr__(self, name, value):
        raise AttributeError("DecomposedState is immutable")

    def __len__(self):
        return len(self.terms)

    @property
    def is_exact(self):
        return self.mode == EXACT

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return DecomposedState(
            self.N,
            [(complex(w), v.to_float()) for w, v in self.terms],
        )

    def __repr__(self):
        return f"DecomposedState(N={self.N}, terms={len(self.terms)})"


def _points_projectively_equal(u, v, tol=1e-12):
    if u.d != v.d:
        return False
    if u.mode == EXACT and v.mode == EXACT:
        a, b = u.components, v.components
        for i in range(u.d):
            for j in range(i + 1, u.d):
                if a[i] * b[j] != a[j] * b[i]:
                    return False
        return True
    return point_chordal(u, v) < tol


def point_chordal(u, v):
    """Chordal (sine of angle) distance between projective points in C^d."""
    a = np.asarray([complex(x) for x in as_local_vector(u).components])
    b = np.asarray([complex(x) for x in as_local_vector(v).components])
    na = np.linalg.norm(a)
    nb = np.linalg.norm(b)
    cos2 = abs(np.vdot(a, b)) ** 2 / (na * na * nb * nb)
    return math.sqrt(max(0.0, 1.0 - min(1.0, cos2)))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def veronese_map(x, N):
    """Symmetric state of the product x^{tensor N}.

    The coefficient at multi-index [n_0, ..., n_{d-1}] is the monomial
    prod_j x_j^{n_j}; for qubits, c_k = x_0^{N-k} x_1^k.
    """
    x = as_local_vector(x)
    if not isinstance(N, int) or N < 1:
        raise ArgumentError(f"invalid power {N!r}")
    comps = x.components
    if x.mode == EXACT:
        coeffs = []
        for idx in multi_indices(N, x.d):
            value = QQI_ONE
            for comp, power in zip(comps, idx):
                if power:
                    value = value * comp ** power
            coeffs.append(value)
        return SymState(N, coeffs, d=x.d)
    coeffs = []
    for idx in multi_indices(N, x.d):
        value = 1.0 + 0.0j
        for comp, power in zip(comps, idx):
            if power:
                value *= comp ** power
        coeffs.append(value)
    return SymState(N, coeffs, d=x.d)


def expand_decomposition(dec):
    """Coefficient-wise sum of weight * veronese_map(vector, N)."""
    if not isinstance(dec, DecomposedState):
        raise ArgumentError("expected a DecomposedState")
    states = [veronese_map(v, dec.N) for _, v in dec.terms]
    d = states[0].d
    if any(s.d != d for s in states):
        raise ArgumentError("decomposition vectors must share one local dimension")
    if dec.mode == EXACT:
        dim = induced_dim(dec.N, d)
        total = [QQI_ZERO] * dim
        for (weight, _), state in zip(dec.terms, states):
            for pos in range(dim):
                total[pos] = total[pos] + weight * state.coeffs[pos]
        return SymState(dec.N, total, d=d)
    total = sum(w * s.coeffs for (w, _), s in zip(dec.terms, states))
    return SymState(dec.N, total, d=d)


def standard_state(name, N, *, w=1, dicke=None, mode=EXACT):
    """Named reference states in canonical coordinates.

    ghz   -> [1:0:...:0:1]
    w     -> [0:1:0:...:0]
    x     -> [0:1:0:...:0:w]   (N >= 4; one nonzero c_1 and c_N = w)
    dicke -> the induced basis vector of the given multi-index

    The x family is usually written with a single-party amplitude parameter z
    multiplying the W component; in these coordinates that corresponds to
    w = z^(1-N).  The weight w is exposed directly.
    """
    name = name.lower()
    if name not in {"ghz", "w", "x", "dicke"}:
        raise ArgumentError(f"unknown standard state {name!r}")
    if not isinstance(N, int) or N < 2:
        raise ArgumentError("standard states require N >= 2")
    if mode not in (EXACT, FLOAT):
        raise ArgumentError(f"unknown mode {mode!r}")
    exact = mode == EXACT
    zero = QQI_ZERO if exact else 0.0
    one = QQI_ONE if exact else 1.0
    coeffs = [zero] * (N + 1)
    if name == "ghz":
        coeffs[0] = one
        coeffs[N] = one
    elif name == "w":
        coeffs[1] = one
    elif name == "x":
        if N < 4:
            raise ArgumentError("the x family is defined for N >= 4")
        if exact:
            if not is_exact_scalar(w):
                raise ModeError("exact mode needs an exact weight w; pass mode='float'")
            wval = to_qqi(w)
            if wval.is_zero:
                raise ArgumentError("the x family requires w != 0")
        else:
            wval = complex(w)
            if wval == 0:
                raise ArgumentError("the x family requires w != 0")
        coeffs[1] = one
        coeffs[N] = wval
    else:
        if dicke is None:
            raise ArgumentError("dicke states need a multi-index, e.g. dicke=(N-1, 1)")
        idx = tuple(dicke)
        if sum(idx) != N or len(idx) != 2:
            raise ArgumentError(f"multi-index {idx!r} does not match N={N}, d=2")
        coeffs[idx[1]] = one
    return SymState(N, coeffs)


# ---------------------------------------------------------------------------
# separability
# ---------------------------------------------------------------------------

def is_separable(s, tol=1e-9):
    """Test membership in the Veronese variety of product states.

    Checks every quadratic relation z_I z_J = z_K z_L over pairs of
    multi-indices with equal componentwise sums: exactly in exact mode, and
    against tol * (max |coeff|)^2 in float mode.  For qubits this is
    equivalent to the first catalecticant having rank one.
    """
    indices = multi_indices(s.N, s.d)
    groups = {}
    for a in range(len(indices)):
        for b in range(a, len(indices)):
            key = tuple(x + y for x, y in zip(indices[a], indices[b]))
            groups.setdefault(key, []).append((a, b))
    if s.mode == EXACT:
        cs = s.coeffs
        for pairs in groups.values():
            if len(pairs) < 2:
                continue
            first = cs[pairs[0][0]] * cs[pairs[0][1]]
            for a, b in pairs[1:]:
                if cs[a] * cs[b] != first:
                    return False
        return True
    cs = s.coeffs
    bound = tol * float(np.max(np.abs(cs))) ** 2
    for pairs in groups.values():
        if len(pairs) < 2:
            continue
        first = cs[pairs[0][0]] * cs[pairs[0][1]]
        for a, b in pairs[1:]:
            if abs(cs[a] * cs[b] - first) > bound:
                return False
    return True


# ---------------------------------------------------------------------------
# full tensor space
# ---------------------------------------------------------------------------

def _counts_of_string(digits, d):
    counts = [0] * d
    for value in digits:
        counts[value] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def _string_class_table(N, d):
    """For each computational index in 0..d^N-1, the canonical position of its class."""
    positions = _index_positions(N, d)
    table = np.empty(d ** N, dtype=np.int64)
    for code in range(d ** N):
        digits = []
        rem = code
        for _ in range(N):
            digits.append(rem % d)
            rem //= d
        table[code] = positions[_counts_of_string(digits, d)]
    return table


def to_full_tensor(s, cap=FULL_TENSOR_CAP):
    """Embed into the full d^N product space by expanding the induced basis.

    Exact states return a tuple of QQi of length d^N; float states return a
    complex array.  Computational index order: party 1 is the most
    significant digit.
    """
    dim = s.d ** s.N
    if dim > cap:
        raise ResourceError(f"full tensor dimension {dim} exceeds cap {cap}")
    table = _string_class_table(s.N, s.d)
    if s.mode == EXACT:
        return tuple(s.coeffs[table[code]] for code in range(dim))
    return np.asarray(s.coeffs)[table]


def from_full_tensor(full, N, d=2):
    """Orthogonal projection of a full product-space vector onto the induced basis.

    Round-trips exactly with :func:`to_full_tensor` for symmetric input.
    """
    table = _string_class_table(N, d)
    dim = induced_dim(N, d)
    exact = (not isinstance(full, np.ndarray)) and all(
        is_exact_scalar(v) for v in full
    )
    if exact:
        sums = [QQI_ZERO] * dim
        for code, value in enumerate(full):
            pos = table[code]
            sums[pos] = sums[pos] + to_qqi(value)
        norms = [induced_norm_sq(idx) for idx in multi_indices(N, d)]
        return SymState(N, [v / QQi(n) for v, n in zip(sums, norms)], d=d)
    data = np.asarray(full, dtype=complex)
    sums = np.zeros(dim, dtype=complex)
    np.add.at(sums, table, data)
    return SymState(N, sums / dicke_weights(N, d), d=d)


# ---------------------------------------------------------------------------
# projective comparisons
# ---------------------------------------------------------------------------

def hilbert_inner(a, b):
    """Physical inner product <a|b> with induced-basis weights (float)."""
    if (a.N, a.d) != (b.N, b.d):
        raise ArgumentError("states must share N and d")
    av = np.asarray(a.to_float().coeffs)
    bv = np.asarray(b.to_float().coeffs)
    wts = dicke_weights(a.N, a.d)
    return complex(np.sum(wts * np.conj(av) * bv))


def hilbert_norm_sq(a):
    return hilbert_inner(a, a).real


def fidelity(a, b):
    """|<a|b>|^2 / (<a|a><b|b>), the squared projective overlap."""
    num = abs(hilbert_inner(a, b)) ** 2
    return num / (hilbert_norm_sq(a) * hilbert_norm_sq(b))


def chordal_distance(a, b):
    """Sine of the angle between the two states (Fubini-Study chordal metric)."""
    return math.sqrt(max(0.0, 1.0 - min(1.0, fidelity(a, b))))


def projective_equal(a, b, tol=1e-9):
    """Whether a = mu * b for a nonzero scalar mu.

    Exact pairs are compared by exact vanishing of all 2x2 cross products.
    If either side is float, both are compared in float via the sine of the
    angle between them (with induced-basis weighting) against tol.
    """
    if (a.N, a.d) != (b.N, b.d):
        raise ArgumentError("states must share N and d")
    if a.mode == EXACT and b.mode == EXACT:
        av, bv = a.coeffs, b.coeffs
        for i in range(len(av)):
            for j in range(i + 1, len(av)):
                if av[i] * bv[j] != av[j] * bv[i]:
                    return False
        return True
    return chordal_distance(a, b) < tol
