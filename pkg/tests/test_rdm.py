import math
import random
from fractions import Fraction

import numpy as np
import pytest

from entfam import (
    ArgumentError,
    DomainError,
    QQi,
    ResourceError,
    interaction_length,
    minimality_check,
    parent_hamiltonian,
    rank_profile,
    rdm_rank_profile,
    reduced_density,
    secant_family,
    standard_state,
    to_full_tensor,
    veronese_map,
)

from conftest import rand_local_vector, rand_state


def partial_trace_oracle(s, m):
    """Brute-force reduced density of the first m qubits, Dicke basis."""
    psi = np.asarray(to_full_tensor(s.to_float()))
    psi = psi / np.linalg.norm(psi)
    N = s.N
    rho_full = np.outer(psi, psi.conj()).reshape(2 ** m, 2 ** (N - m),
                                                 2 ** m, 2 ** (N - m))
    rho_kept = np.einsum("ajbj->ab", rho_full)
    # project onto the orthonormal Dicke basis of m qubits
    basis = np.zeros((2 ** m, m + 1), dtype=complex)
    for code in range(2 ** m):
        r = bin(code).count("1")
        basis[code, r] = 1.0 / math.sqrt(math.comb(m, r))
    return basis.conj().T @ rho_kept @ basis


def test_ghz3_single_qubit_marginal(ghz3):
    rho = reduced_density(ghz3, 1)
    assert np.allclose(rho.matrix, np.eye(2) / 2, atol=1e-12)
    assert np.allclose(rho.matrix, partial_trace_oracle(ghz3, 1), atol=1e-12)


def test_w3_two_qubit_marginal(w3):
    rho = reduced_density(w3, 2)
    eigs = np.sort(np.linalg.eigvalsh(rho.matrix))[::-1]
    assert eigs[0] == pytest.approx(2 / 3)
    assert eigs[1] == pytest.approx(1 / 3)
    assert abs(eigs[2]) < 1e-12
    assert np.allclose(rho.matrix, partial_trace_oracle(w3, 2), atol=1e-12)


def test_reduced_density_matches_partial_trace(rng):
    for _ in range(20):
        N = rng.randint(2, 6)
        m = rng.randint(1, N - 1)
        s = rand_state(rng, N)
        rho = reduced_density(s, m)
        oracle = partial_trace_oracle(s, m)
        assert np.allclose(rho.matrix, oracle, atol=1e-10)


def test_reduced_density_invariants(rng):
    for _ in range(10):
        N = rng.randint(2, 6)
        m = rng.randint(1, N - 1)
        rho = reduced_density(rand_state(rng, N), m).matrix
        assert np.allclose(rho, rho.conj().T, atol=1e-12)
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
        assert np.linalg.eigvalsh(rho).min() >= -1e-10


def test_separable_marginals_are_pure(rng):
    for _ in range(5):
        N = rng.randint(3, 7)
        s = veronese_map(rand_local_vector(rng), N)
        for m in range(1, N):
            eigs = np.linalg.eigvalsh(reduced_density(s, m).matrix)
            assert np.count_nonzero(eigs > 1e-10) == 1


def test_rdm_rank_profile_matches_catalecticant(rng):
    for _ in range(15):
        N = rng.randint(2, 7)
        s = rand_state(rng, N)
        ranks = rdm_rank_profile(s)
        prof = rank_profile(s)
        assert ranks == prof.ranks
    ghz = standard_state("ghz", 6)
    assert rdm_rank_profile(ghz) == (2, 2, 2, 2, 2)
    w = standard_state("w", 6)
    assert rdm_rank_profile(w) == (2, 2, 2, 2, 2)


def test_rdm_profile_x4(x4):
    assert rdm_rank_profile(x4) == (2, 3, 2)
    assert rdm_rank_profile(x4.to_float(), mode="float") == (2, 3, 2)


def test_reduced_density_range_errors(ghz3):
    with pytest.raises(ArgumentError):
        reduced_density(ghz3, 0)
    with pytest.raises(ArgumentError):
        reduced_density(ghz3, 3)


# ---------------------------------------------------------------------------
# interaction length
# ---------------------------------------------------------------------------

def test_interaction_length_examples(rng):
    for N in range(3, 9):
        assert interaction_length(standard_state("w", N)) == 2
        assert interaction_length(standard_state("ghz", N)) == 2
    assert interaction_length(standard_state("x", 4, w=1)) == 3
    assert interaction_length(veronese_map(rand_local_vector(rng), 5)) == 1
    # N = 2 entangled states only have the full-pair kernel
    assert interaction_length(standard_state("ghz", 2)) == 2


def test_interaction_length_equals_border_rank(rng):
    for _ in range(40):
        N = rng.randint(2, 8)
        s = rand_state(rng, N)
        assert interaction_length(s) == secant_family(s)


def test_interaction_length_bound(rng):
    for _ in range(20):
        N = rng.randint(2, 8)
        assert interaction_length(rand_state(rng, N)) <= N // 2 + 1


# ---------------------------------------------------------------------------
# parent Hamiltonians
# ---------------------------------------------------------------------------

def test_w4_parent_hamiltonian():
    w4 = standard_state("w", 4)
    ham = parent_hamiltonian(w4, 2)
    assert ham.positions == (1, 2, 3)
    assert ham.residual <= 1e-10
    assert ham.min_eigenvalue >= -1e-10
    # projector is a projector
    p = ham.projector
    assert np.allclose(p @ p, p, atol=1e-12)
    assert np.allclose(p, p.conj().T, atol=1e-12)


def test_ghz4_parent_hamiltonian_contains_state():
    ghz4 = standard_state("ghz", 4)
    ham = parent_hamiltonian(ghz4, 2)
    psi = np.asarray(to_full_tensor(ghz4.to_float()))
    assert np.linalg.norm(ham.hamiltonian @ psi) <= 1e-10 * np.linalg.norm(psi)
    assert ham.ground_space_dim >= 1


def test_w4_j1_has_no_kernel():
    with pytest.raises(DomainError):
        parent_hamiltonian(standard_state("w", 4), 1)


def test_each_term_is_psd_and_matches_projector():
    w5 = standard_state("w", 5)
    ham = parent_hamiltonian(w5, 2)
    h = ham.hamiltonian.toarray()
    assert np.allclose(h, h.conj().T, atol=1e-12)
    # reconstruct from the triplet export
    dim = 2 ** 5
    rebuilt = np.zeros((dim, dim), dtype=complex)
    for r, c, re, im in ham.sparse_triplets():
        rebuilt[r, c] += re + 1j * im
    assert np.allclose(rebuilt, h, atol=1e-12)


def test_parent_hamiltonian_full_pair_for_n2():
    ghz2 = standard_state("ghz", 2)
    ham = parent_hamiltonian(ghz2, 2)
    assert ham.positions == (1,)
    assert ham.residual <= 1e-10
    assert ham.ground_space_dim >= 1


def test_parent_hamiltonian_cap():
    with pytest.raises(ResourceError):
        parent_hamiltonian(standard_state("w", 6), 2, cap=2 ** 5)


def test_float_state_parent_hamiltonian():
    w4 = standard_state("w", 4, mode="float")
    ham = parent_hamiltonian(w4, 2)
    assert ham.residual <= 1e-10
    assert ham.min_eigenvalue >= -1e-10


# ---------------------------------------------------------------------------
# minimality
# ---------------------------------------------------------------------------

def test_minimality_w6():
    report = minimality_check(standard_state("w", 6))
    assert report.interaction_length == 2
    assert report.no_kernel_below == (1,)
    assert report.generic_bound == 4
    assert report.hamiltonian.residual <= 1e-10


def test_minimality_x4(x4):
    report = minimality_check(x4)
    assert report.interaction_length == 3
    assert report.no_kernel_below == (1, 2)


def test_minimality_separable(rng):
    s = veronese_map(rand_local_vector(rng), 4)
    report = minimality_check(s)
    assert report.interaction_length == 1
    assert report.no_kernel_below == ()
