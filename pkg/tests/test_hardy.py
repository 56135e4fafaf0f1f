import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nchilbert.algebra import (
    Operator, SubspaceTag, TracedAlgebra, expectation, membership, min_eigenvalue, real_part,
    trace,
)
from nchilbert.errors import NotPositive, Singular
from nchilbert.hardy import (
    analytic_completion, decompose, exp_series, exp_series_terms, hilbert, kolmogorov_weight,
    moebius, moebius_scalar, regularization_diagnostics, regularize, riesz,
)
from nchilbert.spectral import lp_norm, op_norm

from conftest import gaussian

seeds = st.integers(0, 2**32 - 1)
partitions = st.sampled_from([(1, 1, 1, 1), (2, 2), (4,), (1, 3), (2, 1, 2), (1, 1, 1, 1, 1, 1)])


def make(part, seed, kind="general"):
    alg = TracedAlgebra.from_partition(part)
    g = gaussian(np.random.default_rng(seed), alg.n)
    if kind == "selfadjoint":
        g = (g + g.conj().T) / 2
    elif kind == "positive":
        g = g.conj().T @ g / alg.n
        g = (g + g.conj().T) / 2
    return Operator(alg, g)


def literal_conjugate(a):
    """``i a2* - i a1`` straight from the pattern split, written out entry by entry."""
    n = a.n
    blocks = a.algebra.block_of
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if blocks[i] < blocks[j]:
                out[i, j] = -1j * a.entries[i, j]
            elif blocks[i] > blocks[j]:
                out[i, j] = 1j * a.entries[i, j]
    return out


class TestDecompose:
    def test_example(self, m22):
        dec = decompose(m22)
        assert np.array_equal(dec.a1.entries, [[0, 2], [0, 0]])
        assert np.array_equal(dec.a2.adj.entries, [[0, 0], [3, 0]])
        assert np.array_equal(dec.d.entries, np.diag([1, 4]))

    def test_diagonal_input(self):
        alg = TracedAlgebra.from_partition((2, 1))
        d0 = Operator(alg, [[1, 2, 0], [3, 4, 0], [0, 0, 5]])
        dec = decompose(d0)
        assert dec.a1.max_abs() == 0 and dec.a2.max_abs() == 0
        assert np.array_equal(dec.d.entries, d0.entries)

    @given(partitions, seeds)
    def test_invariants(self, part, seed):
        a = make(part, seed)
        dec = decompose(a)
        assert (dec.reconstruct() - a).max_abs() <= 1e-12
        assert membership(dec.a1, SubspaceTag.HINF0, 1e-12)
        assert membership(dec.a2, SubspaceTag.HINF0, 1e-12)
        assert membership(dec.d, SubspaceTag.DIAG, 1e-12)
        x, y, z = dec.a1, dec.a2.adj, dec.d
        for p, q in ((x, y), (x, z), (y, z)):
            assert abs(trace(p.adj @ q)) <= 1e-10
        pyth = lp_norm(x, 2) ** 2 + lp_norm(y, 2) ** 2 + lp_norm(z, 2) ** 2
        assert abs(lp_norm(a, 2) ** 2 - pyth) <= 1e-10


class TestHilbert:
    def test_example(self, m22):
        assert np.array_equal(hilbert(m22).entries, 1j * np.array([[0, -2], [3, 0]]))

    def test_diagonal_vanishes(self):
        alg = TracedAlgebra.from_partition((2, 2))
        d = Operator(alg, np.kron(np.eye(2), np.ones((2, 2))))
        assert hilbert(d).max_abs() == 0.0

    @given(partitions, seeds)
    def test_matches_decomposition_route(self, part, seed):
        a = make(part, seed)
        t = hilbert(a)
        assert np.array_equal(t.entries, literal_conjugate(a))
        assert (decompose(a).conjugate() - t).max_abs() <= 1e-12

    @given(partitions, seeds)
    def test_analytic_completion_in_hinf(self, part, seed):
        a = make(part, seed)
        f = a + hilbert(a) * 1j
        dec = decompose(a)
        assert (f - (dec.a1 * 2 + dec.d)).max_abs() <= 1e-12
        assert membership(f, SubspaceTag.HINF, 1e-12)

    @given(partitions, seeds)
    def test_selfadjoint_in_selfadjoint_out(self, part, seed):
        u = make(part, seed, "selfadjoint")
        t = hilbert(u)
        assert (t - t.adj).max_abs() <= 1e-12

    @given(partitions, seeds)
    def test_double_transform(self, part, seed):
        a = make(part, seed)
        assert (hilbert(hilbert(a)) - (expectation(a) - a)).max_abs() <= 1e-12
        assert hilbert(expectation(a)).max_abs() == 0.0

    @given(partitions, seeds, st.complex_numbers(max_magnitude=10, allow_nan=False))
    def test_complex_linear(self, part, seed, alpha):
        a, b = make(part, seed), make(part, seed + 1)
        assert np.array_equal(hilbert(a * 1j).entries, (hilbert(a) * 1j).entries)
        lhs = hilbert(a * alpha + b)
        rhs = hilbert(a) * alpha + hilbert(b)
        assert (lhs - rhs).max_abs() <= 1e-12 * (1 + abs(alpha))

    @given(partitions, seeds)
    def test_contraction(self, part, seed):
        a = make(part, seed)
        assert lp_norm(hilbert(a), 2) <= lp_norm(a, 2) + 1e-10

    def test_strictly_upper_is_isometric(self, rng):
        alg = TracedAlgebra.flag(6)
        a = Operator(alg, np.triu(gaussian(rng, 6), 1))
        assert lp_norm(hilbert(a), 2) == pytest.approx(lp_norm(a, 2), rel=1e-14)

    def test_single_block_kills_everything(self, rng):
        a = Operator(TracedAlgebra.single(5), gaussian(rng, 5))
        assert hilbert(a).max_abs() == 0.0

    @given(partitions, seeds, seeds)
    def test_duality(self, part, s1, s2):
        u, v = make(part, s1, "selfadjoint"), make(part, s2, "selfadjoint")
        assert abs(trace(u @ hilbert(v)) + trace(hilbert(u) @ v)) <= 1e-10


class TestRiesz:
    def test_example(self, m22):
        assert np.allclose(riesz(m22).entries, [[1, 2], [0, 4]], atol=1e-15)

    @given(partitions, seeds)
    def test_projection(self, part, seed):
        a = make(part, seed)
        r = riesz(a)
        assert (riesz(r) - r).max_abs() <= 1e-12
        assert membership(r, SubspaceTag.HINF, 1e-12)
        mask = a.algebra.mask(SubspaceTag.HINF)
        assert np.abs(r.entries - a.entries * mask).max() <= 1e-12
        h = Operator(a.algebra, a.entries * mask)
        assert (riesz(h) - h).max_abs() <= 1e-12
        assert lp_norm(r, 2) <= lp_norm(a, 2) + 1e-12


class TestRegularize:
    def test_identity_is_fixed(self):
        one = TracedAlgebra.flag(2).identity
        for eps in (0.1, 0.5, 0.001):
            assert (regularize(one, eps) - one).max_abs() <= 1e-15

    def test_zero(self):
        zero = TracedAlgebra.flag(3).zero
        assert (regularize(zero, 0.3) - TracedAlgebra.flag(3).identity * 0.3).max_abs() <= 1e-15

    def test_approximation(self):
        u = make((1,) * 8, 5, "positive")
        eps = 0.01
        f = analytic_completion(u)
        one = u.algebra.identity
        assert lp_norm(regularize(u, eps) - f, 2) <= eps * lp_norm(one + f @ f, 2)

    @given(partitions, seeds, st.sampled_from([0.5, 0.1, 0.01, 0.001]))
    def test_lemma_conclusions(self, part, seed, eps):
        u = make(part, seed, "positive")
        dg = regularization_diagnostics(u, eps)
        assert dg.resolvent_norm <= 1 + 1e-10
        assert dg.hinf_residual <= 1e-9
        assert dg.expectation_residual <= 1e-9
        assert dg.real_part_min >= eps - 1e-9
        for p, err in dg.approx_error.items():
            assert err <= dg.approx_bound[p] + 1e-9

    def test_rejects(self, m22):
        with pytest.raises(NotPositive):
            regularize(Operator(TracedAlgebra.flag(2), np.diag([1.0, -1.0])), 0.1)
        one = TracedAlgebra.flag(2).identity
        for eps in (0.0, 1.0, -0.1):
            with pytest.raises(ValueError):
                regularize(one, eps)


class TestMoebius:
    def test_fixed_points(self):
        alg = TracedAlgebra.flag(3)
        for s in (0.5, 1.0, 4.0):
            assert (moebius(alg.identity * s, s) - alg.identity).max_abs() <= 1e-15
        assert (moebius(alg.identity, 1.0) - alg.identity).max_abs() <= 1e-15

    @given(partitions, seeds, st.sampled_from([0.1, 0.01]), st.sampled_from([0.1, 0.5, 1.0, 7.0]))
    def test_properties(self, part, seed, eps, s):
        u = make(part, seed, "positive")
        f_eps = regularize(u, eps)
        A = moebius(f_eps, s)
        assert min_eigenvalue(real_part(A)) >= -1e-10
        assert membership(A, SubspaceTag.HINF, 1e-9)
        target = moebius(moebius_scalar(expectation(u), eps), s)
        assert (expectation(A) - target).max_abs() <= 1e-9

    def test_singular_and_bad_s(self):
        alg = TracedAlgebra.flag(2)
        with pytest.raises(Singular):
            moebius(alg.identity * -1.0, 1.0)
        with pytest.raises(ValueError):
            moebius(alg.identity, 0.0)


class TestKolmogorovWeight:
    def test_half_at_s(self):
        assert kolmogorov_weight(1.0, 1.0) == 0.5
        assert kolmogorov_weight(3.0, 3.0) == 0.5

    @given(st.floats(1e-3, 1e3), st.floats(1.0, 1e3))
    def test_monotone_above_s(self, s, factor):
        t = s * factor
        assert kolmogorov_weight(t, s) >= 0.5 - 1e-15
        assert kolmogorov_weight(t * 1.01, s) >= kolmogorov_weight(t, s)
        assert kolmogorov_weight(t, s) < 2.0


class TestExpSeries:
    def test_zero(self):
        alg = TracedAlgebra.flag(3)
        assert np.array_equal(exp_series(alg.zero, 1.0, 0.5).entries, np.eye(3))

    def test_scalar(self):
        alg = TracedAlgebra.flag(2)
        res = exp_series(alg.identity, 2.0, 0.5, tol=1e-14)
        assert np.abs(res.entries - math.e * np.eye(2)).max() <= 1e-13

    def test_tail_bound_is_honest(self):
        alg = TracedAlgebra.flag(2)
        for x in (0.1, 1.0, 5.0, 20.0):
            K = exp_series_terms(alg.identity, x, 1.0, 1e-12)
            partial = sum(x ** k / math.factorial(k) for k in range(K + 1))
            assert math.exp(x) - partial <= 1e-12 * max(1.0, math.exp(x)) + 1e-12
            if K > 0:
                shorter = sum(x ** k / math.factorial(k) for k in range(K))
                assert math.exp(x) - shorter > 0

    @given(partitions, seeds)
    def test_stays_in_hinf(self, part, seed):
        alg = TracedAlgebra.from_partition(part)
        f = Operator(alg, make(part, seed).entries * alg.mask(SubspaceTag.HINF))
        res = exp_series(f, 0.7, 0.3)
        assert membership(res, SubspaceTag.HINF, 1e-9)

    def test_matches_eigen_exponential(self, rng):
        g = gaussian(rng, 6)
        h = (g + g.conj().T) / 2
        w, q = np.linalg.eigh(h)
        alg = TracedAlgebra.flag(6)
        res = exp_series(Operator(alg, h), 1.5, 0.2, tol=1e-14)
        oracle = (q * np.exp(0.3 * w)) @ q.conj().T
        assert np.abs(res.entries - oracle).max() <= 1e-12 * op_norm(Operator(alg, oracle))

    def test_bad_t(self):
        with pytest.raises(ValueError):
            exp_series(TracedAlgebra.flag(2).identity, 0.0, 0.5)
