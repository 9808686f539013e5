import random
from fractions import Fraction

import numpy as np
import pytest

from entfam import (
    ArgumentError,
    ModeError,
    QQi,
    SymState,
    catalecticant,
    matrix_rank,
    rank_profile,
    secant_dim_estimate,
    secant_family,
    standard_state,
    veronese_map,
)

from conftest import rand_decomposition, rand_local_vector, rand_state
from entfam.states import expand_decomposition


def test_catalecticant_entries_ghz3(ghz3):
    cat = catalecticant(ghz3, 1)
    rows = [[complex(v) for v in row] for row in cat.entries]
    assert rows == [[1, 0], [0, 0], [0, 1]]


def test_catalecticant_w_states():
    for N in range(3, 8):
        cat = catalecticant(standard_state("w", N), 1)
        arr = cat.as_array()
        nz = {(r, c) for r in range(arr.shape[0]) for c in range(arr.shape[1])
              if arr[r, c] != 0}
        assert nz == {(0, 1), (1, 0)}


def test_catalecticant_geometric_rows():
    z = QQi(Fraction(3, 2))
    s = veronese_map([QQi(1), z], 3)
    cat = catalecticant(s, 1)
    assert [list(r) for r in cat.entries] == [
        [QQi(1), z], [z, z * z], [z * z, z * z * z]
    ]
    assert matrix_rank(cat) == 1


def test_catalecticant_hankel_structure(rng):
    s = rand_state(rng, 6)
    for j in range(1, 6):
        cat = catalecticant(s, j)
        for r in range(len(cat.entries)):
            for c in range(len(cat.entries[0])):
                assert cat.entries[r][c] == s.coeffs[r + c]


def test_catalecticant_range_errors(ghz3):
    with pytest.raises(ArgumentError):
        catalecticant(ghz3, 0)
    with pytest.raises(ArgumentError):
        catalecticant(ghz3, 3)


def test_matrix_rank_examples():
    assert matrix_rank([[QQi(0), QQi(0)], [QQi(0), QQi(0)]]) == 0
    outer = [[QQi(2), QQi(4)], [QQi(3), QQi(6)]]
    assert matrix_rank(outer) == 1
    x_c2 = [[QQi(0), QQi(1), QQi(0)],
            [QQi(1), QQi(0), QQi(0)],
            [QQi(0), QQi(0), QQi(7)]]
    assert matrix_rank(x_c2) == 3


def test_matrix_rank_mode_error():
    arr = np.eye(2)
    with pytest.raises(ModeError):
        matrix_rank(arr, mode="exact")


def test_rank_profile_ghz_w_separable(rng):
    for N in range(2, 9):
        assert rank_profile(standard_state("ghz", N)).ranks == tuple([2] * (N - 1))
        assert rank_profile(standard_state("w", N)).ranks == tuple([2] * (N - 1))
    for _ in range(10):
        N = rng.randint(2, 8)
        prof = rank_profile(veronese_map(rand_local_vector(rng), N))
        assert prof.ranks == tuple([1] * (N - 1))
        assert prof.border_rank == 1


def test_rank_profile_x_family():
    for N in range(4, 9):
        prof = rank_profile(standard_state("x", N, w=Fraction(5, 3)))
        assert prof.rank(2) == 3
        assert prof.border_rank == 3


def test_rank_symmetry_j_vs_n_minus_j(rng):
    for _ in range(40):
        N = rng.randint(2, 9)
        prof = rank_profile(rand_state(rng, N))
        for j in range(1, N):
            assert prof.rank(j) == prof.rank(N - j)


def test_border_rank_bound(rng):
    for _ in range(40):
        N = rng.randint(2, 9)
        prof = rank_profile(rand_state(rng, N))
        assert prof.border_rank <= N // 2 + 1
        for j in range(1, N):
            assert prof.rank(j) <= min(j + 1, N - j + 1)


def test_exact_and_float_ranks_agree_on_random_rational_states(rng):
    # spec-level property: 1000 random states with small rational entries
    for _ in range(1000):
        N = rng.randint(2, 6)
        s = rand_state(rng, N)
        exact_prof = rank_profile(s)
        float_prof = rank_profile(s, mode="float")
        assert exact_prof.ranks == float_prof.ranks


def test_secant_family_examples(rng):
    assert secant_family(standard_state("x", 4, w=2)) == 3
    assert secant_family(standard_state("ghz", 5)) == 2
    assert secant_family(veronese_map([QQi(1), QQi(7)], 6)) == 1


def test_border_rank_of_random_decompositions(rng):
    for _ in range(30):
        N = rng.randint(3, 8)
        k = rng.randint(1, N // 2 + 1)
        s = expand_decomposition(rand_decomposition(rng, N, k))
        assert secant_family(s) == k


def test_secant_dim_estimates():
    assert secant_dim_estimate(4, 2, samples=6, seed=3) == 3
    assert secant_dim_estimate(4, 3, samples=6, seed=3) == 4
    assert secant_dim_estimate(2, 1, samples=6, seed=3) == 1


def test_secant_dim_rejects_bad_k():
    with pytest.raises(ArgumentError):
        secant_dim_estimate(4, 4)
    with pytest.raises(ArgumentError):
        secant_dim_estimate(4, 0)
