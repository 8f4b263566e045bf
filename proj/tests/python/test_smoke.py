"""Smoke tests for the _pfq extension module."""

import cmath
import math

import pytest

import _pfq as pfq


def test_quaternion_algebra():
    i, j, k = pfq.quat_i(), pfq.quat_j(), pfq.quat_k()
    assert (i * j - k).max_abs() == 0.0
    assert (j * i + k).max_abs() == 0.0
    q = pfq.Quaternion(1 + 2j, 0.5, -0.25, 3)
    assert (q.conj().conj() - q).max_abs() == 0.0
    assert pfq.Quaternion(0.5j).conj().s == 0.5j  # scalars are self-conjugate


def test_worked_fixtures():
    det0 = pfq.moore_dyson_pfaffian(pfq.example_selfdual_det0())
    assert abs(det0) < 1e-12
    det1 = pfq.moore_dyson_pfaffian(pfq.example_selfdual_det1())
    assert abs(det1 - 1.0) < 1e-12
    det4 = pfq.moore_dyson_pfaffian(pfq.example_nonquasireal())
    assert abs(det4.real - 0.3745) < 1e-3
    eigs = sorted(pfq.selfdual_eigenvalues(pfq.example_nonquasireal()), key=lambda z: z.imag)
    assert abs(eigs[0] - (0.5 - 0.3529j)) < 1e-3


def test_dual_and_embeddings():
    m = pfq.QuaternionMatrix([[pfq.Quaternion(1.0), pfq.quat_i()],
                              [-1 * pfq.quat_i(), pfq.Quaternion(1.0)]])
    assert pfq.is_selfdual(m)
    emb = pfq.phi_embed(m)
    assert emb.shape == (4, 4)


def test_pfaffian():
    import numpy as np

    m = np.array([[0, 1], [-1, 0]], dtype=complex)
    assert pfq.pfaffian(m) == 1.0
    assert pfq.pfaffian_combinatorial(m) == 1.0


def test_cauchy_binet():
    rows = [[pfq.Quaternion(0.3, 0.1, -0.2, 0.4), pfq.Quaternion(1.0, 0, 0.5, 0)],
            [pfq.Quaternion(-0.7, 0.2, 0.0, 0.1), pfq.Quaternion(0.2, -0.3, 0.1, 0.9)],
            [pfq.Quaternion(0.5, 0.5, 0.5, -0.5), pfq.Quaternion(0.0, 1.0, 0.0, 0.25)]]
    lhs, rhs = pfq.cauchy_binet_sides(pfq.QuaternionMatrix(rows))
    assert abs(lhs - rhs) <= 1e-9 * (1 + abs(lhs))


def test_kernels_and_pointfield():
    k = pfq.kernel("cse:N=3")
    assert k.rank == 3
    r1 = pfq.correlation(k, [[0.3]])
    assert math.isclose(r1, 3 / (2 * math.pi), rel_tol=1e-12)

    t = 1.1
    prod, fred = pfq.char_function_count(k, t)
    assert abs(prod - cmath.exp(3j * t)) < 1e-12
    assert abs(prod - fred) < 1e-7

    spec = pfq.restricted_spectrum(k, -math.pi / 2, math.pi / 2)
    assert len(spec) == 3
    assert all(abs(l.imag) < 1e-8 and -1e-8 <= l.real <= 1 + 1e-8 for l in spec)

    pmf, mean, var = pfq.count_distribution_from_spectrum([l.real for l in spec])
    assert math.isclose(sum(pmf), 1.0, abs_tol=1e-12)
    assert math.isclose(mean, sum(l.real for l in spec), rel_tol=1e-12)


def test_expected_product_hole_probability():
    k = pfq.kernel("cse:N=2")
    hole, tail = pfq.expected_product(k, lambda x: -1.0 if 0.0 <= x < 0.6 else 0.0)
    assert 0.0 < hole.real < 1.0
    assert abs(hole.imag) < 1e-9
    assert tail < 1e-9


def test_diagonal_form_classifications():
    assert pfq.diagonal_form_check(pfq.ginibre_quaternion(3)).is_real_form
    rep = pfq.diagonal_form_check(pfq.circular_symplectic(2))
    assert rep.is_quasi_real and not rep.is_real_form
    assert not pfq.diagonal_form_check(pfq.finite_kernel(pfq.example_nonquasireal())).is_quasi_real


def test_sampler_roundtrip():
    cfg = pfq.ChainConfig()
    cfg.steps = 4000
    cfg.burnin = 1000
    cfg.thinning = 10
    cfg.seed = 3
    pts = pfq.mcmc_cse(2, cfg)
    assert len(pts) == 300
    assert all(len(p) == 2 and all(-math.pi <= x < math.pi for x in p) for p in pts)

    ev = pfq.sample_gse_eigenvalues(4, 123)
    assert len(ev) == 4
    assert ev == pfq.sample_gse_eigenvalues(4, 123)  # deterministic


def test_verify_suite_entry_point():
    ok, report = pfq.run_suite("algebra", 25, 1)
    assert ok
    assert "unit_table" in report
