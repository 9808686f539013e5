"""Shared fixtures and random generators for the test suite.

All randomness is drawn from seeded generators so the suite is
deterministic.  Exact random data uses small rationals (numerators up to 10)
so fraction-free elimination stays fast while exercising generic positions.
"""

import random
from fractions import Fraction

import numpy as np
import pytest

from entfam import (
    DecomposedState,
    LocalOperator,
    LocalVector,
    QQi,
    SymState,
    expand_decomposition,
    standard_state,
    veronese_map,
)


def rand_fraction(rng, num=10, den=4):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_qqi(rng, num=10, den=4, nonzero=False):
    while True:
        value = QQi(rand_fraction(rng, num, den), rand_fraction(rng, num, den))
        if not nonzero or not value.is_zero:
            return value


def rand_local_vector(rng):
    while True:
        vec = [rand_qqi(rng), rand_qqi(rng)]
        if not all(v.is_zero for v in vec):
            return LocalVector(vec)


def rand_distinct_vectors(rng, count):
    vectors = []
    while len(vectors) < count:
        cand = rand_local_vector(rng)
        ok = True
        for v in vectors:
            a, b = cand.components, v.components
            if a[0] * b[1] == a[1] * b[0]:
                ok = False
                break
        if ok:
            vectors.append(cand)
    return vectors


def rand_decomposition(rng, N, k):
    vectors = rand_distinct_vectors(rng, k)
    weights = [rand_qqi(rng, nonzero=True) for _ in range(k)]
    return DecomposedState(N, list(zip(weights, vectors)))


def rand_state(rng, N, k=None):
    """Random exact state; a random k-term combination when k is given."""
    if k is None:
        coeffs = [rand_qqi(rng) for _ in range(N + 1)]
        if all(v.is_zero for v in coeffs):
            coeffs[0] = QQi(1)
        return SymState(N, coeffs)
    return expand_decomposition(rand_decomposition(rng, N, k))


def rand_invertible_operator(rng, num=9, den=3):
    while True:
        mat = [
            [rand_qqi(rng, num, den), rand_qqi(rng, num, den)],
            [rand_qqi(rng, num, den), rand_qqi(rng, num, den)],
        ]
        op = LocalOperator(mat)
        if op.is_invertible():
            return op


def kron_power(vec, N):
    out = np.array([1.0 + 0.0j])
    for _ in range(N):
        out = np.kron(out, vec)
    return out


@pytest.fixture
def rng():
    return random.Random(20240911)


@pytest.fixture
def ghz3():
    return standard_state("ghz", 3)


@pytest.fixture
def w3():
    return standard_state("w", 3)


@pytest.fixture
def x4():
    return standard_state("x", 4, w=1)
