import numpy as np

from diracshell import algebra


def test_pauli_algebra():
    s = [algebra.pauli(j) for j in (1, 2, 3)]
    for j in range(3):
        assert np.array_equal(s[j] @ s[j], np.eye(2))
        assert np.allclose(s[j].conj().T, s[j])
    # sigma_1 sigma_2 = i sigma_3 cyclically
    for j, k, l in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert np.allclose(s[j] @ s[k], 1j * s[l])


def test_dirac_anticommutation():
    al = [algebra.alpha(j) for j in (1, 2, 3)]
    b = algebra.beta()
    for j in range(3):
        for k in range(3):
            anti = al[j] @ al[k] + al[k] @ al[j]
            assert np.allclose(anti, 2.0 * (j == k) * np.eye(4))
        assert np.allclose(al[j] @ b + b @ al[j], 0)
    assert np.array_equal(b @ b, np.eye(4))


def test_tau_swaps_two_spinor_blocks():
    t = algebra.tau()
    v = np.arange(4, dtype=complex)
    assert np.allclose(t @ v, [2, 3, 0, 1])
    assert np.array_equal(t @ t, np.eye(4))


def test_sigma_dot_linear_and_squares_to_norm():
    v = np.array([0.3, -1.2, 0.5])
    sv = algebra.sigma_dot(v)
    assert np.allclose(sv @ sv, np.dot(v, v) * np.eye(2))
    av = algebra.alpha_dot(v)
    assert np.allclose(av @ av, np.dot(v, v) * np.eye(4))


def test_sigma_dot_batch_matches_loop(rng):
    V = rng.standard_normal((7, 3))
    B = algebra.sigma_dot_batch(V)
    assert B.shape == (7, 2, 2)
    for i in range(7):
        assert np.allclose(B[i], algebra.sigma_dot(V[i]))
