# Copyright 2026 the sqptlab authors
# SPDX-License-Identifier: Apache-2.0

import numpy as np
import pytest

import sqptlab as sq


def depolarizing(q, d=2):
    return sq.make_channel('{"kind": "depolarizing", "d": %d, "q": %s}' % (d, q))


def test_vec_round_trip():
    a = np.arange(9, dtype=complex).reshape(3, 3) + 1j
    v = sq.vec(a)
    assert v.shape == (9,)
    # row-major flattening
    assert np.allclose(v, a.reshape(-1))
    assert np.allclose(sq.unvec(v), a)


def test_hs_inner_and_kron():
    a = np.eye(2, dtype=complex)
    assert sq.hs_inner(a, a) == pytest.approx(2.0)
    assert np.allclose(sq.kron(a, a), np.eye(4))


def test_reshuffle_is_involution():
    rng = np.random.default_rng(0)
    g = rng.normal(size=(9, 9)) + 1j * rng.normal(size=(9, 9))
    assert np.allclose(sq.reshuffle(sq.reshuffle(g)), g)
    b = sq.beta_swap(2)
    assert np.allclose(b @ b, np.eye(16))


def test_channel_representations():
    k = depolarizing(0.3)
    rho = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    out = k.apply(rho)
    assert out[0, 0] == pytest.approx(0.85)
    chi = k.chi_c()
    lam = k.lambda_c()
    assert chi.trace() == pytest.approx(2.0)
    assert np.allclose(sq.reshuffle(lam), chi)
    assert np.allclose(k.choi(), chi / 2.0)
    back = sq.kraus_from_chi(chi)
    assert np.allclose(back.chi_c(), chi)


def test_kraus_channel_validation():
    with pytest.raises(sq.RepresentationError):
        sq.kraus_channel([0.5 * np.eye(2, dtype=complex)])


def test_sic_layer():
    vectors = sq.sic_vectors(2)
    assert len(vectors) == 4
    pot = sq.frame_potential(vectors)
    assert pot == pytest.approx(sq.sic_potential_minimum(2))


def test_exact_reconstruction_round_trip():
    k = depolarizing(0.3)
    omega = sq.omega_exact(k)
    assert omega.sum() == pytest.approx(2.0)
    chi = sq.reconstruct_chi_c(omega, 2)
    assert np.allclose(chi, k.chi_c(), atol=1e-9)
    chi_u = sq.reconstruct_chi_c(omega, 2, unital=True)
    assert np.allclose(chi_u, chi, atol=1e-9)


def test_unital_shortcut_rejects_non_unital():
    k = sq.make_channel('{"kind": "amplitude-damping", "d": 2, "gamma": 0.5}')
    omega = sq.omega_exact(k)
    with pytest.raises(sq.ConsistencyError):
        sq.reconstruct_chi_c(omega, 2, unital=True)


def test_sampling_is_seeded():
    k = depolarizing(0.3)
    a = sq.simulate_omega(k, 1000, seed=7)
    b = sq.simulate_omega(k, 1000, seed=7)
    c = sq.simulate_omega(k, 1000, seed=8)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert a.sum() == pytest.approx(2.0)


def test_delta_constants():
    c = sq.delta_constants(2)
    assert c["avg_opt"] == 25.0
    assert c["joint_opt"] == 12.25
    assert c["ratio_bound"] == pytest.approx(1.0 / 3.0)


def test_verify_all_pass():
    results = sq.verify(2, seed=1)
    assert results
    assert all(r["pass"] for r in results)


def test_bad_spec_raises():
    with pytest.raises(sq.ParseError):
        sq.make_channel('{"kind": "nope"}')
