"""Tests for the truncated Szasz-Mirakyan operator and its iterates."""

import math

import numpy as np
import pytest

from iterbern import (
    SzaszContext,
    poisson_basis,
    szasz_apply,
    szasz_coefficients,
    szasz_eval,
    szasz_iterated,
)
from iterbern.szasz import _poisson_vector


def poisson_pmf_oracle(mean, i):
    return math.exp(-mean + i * math.log(mean) - math.lgamma(i + 1))


class TestPoissonBasis:
    def test_at_origin(self):
        assert poisson_basis(7, 0, 0.0) == 1.0
        assert poisson_basis(7, 3, 0.0) == 0.0

    def test_log_gamma_oracle(self):
        assert poisson_basis(10, 20, 2.0) == pytest.approx(
            poisson_pmf_oracle(20.0, 20), rel=1e-12
        )
        assert poisson_basis(10, 20, 2.0) == pytest.approx(0.0888353, abs=5e-8)

    def test_small_and_large_index_paths_agree(self):
        # direct product (i <= 20) and log-space branch must join smoothly
        for i in (19, 20, 21, 22):
            assert poisson_basis(3, i, 4.0) == pytest.approx(
                poisson_pmf_oracle(12.0, i), rel=1e-12
            )

    def test_negative_x(self):
        with pytest.raises(ValueError, match="outside"):
            poisson_basis(3, 1, -0.5)


class TestSzaszContext:
    def test_truncation_invariants(self):
        ctx = SzaszContext(10)
        assert ctx.M >= math.ceil(10 * 8.0)
        # direct tail summation at the domain edge
        tail = 1.0 - np.sum(_poisson_vector(10, 8.0, ctx.M))
        assert tail < ctx.tail_tol

    def test_partition_of_unity_on_domain(self):
        ctx = SzaszContext(6, x_max=5.0, tail_tol=1e-10)
        for x in np.linspace(0, 5, 21):
            assert np.sum(_poisson_vector(6, x, ctx.M)) >= 1.0 - ctx.tail_tol

    def test_explicit_m_honored(self):
        ctx = SzaszContext(4, 8.0, 1e-14, M=80)
        assert ctx.M == 80

    def test_m_below_mean_rejected(self):
        with pytest.raises(ValueError, match="below"):
            SzaszContext(10, 8.0, 1e-12, M=50)

    def test_tail_tol_range(self):
        with pytest.raises(ValueError, match="tail_tol"):
            SzaszContext(10, 8.0, 1e-3)


class TestSzaszApply:
    def test_constant(self):
        ctx = SzaszContext(10)
        for x in (0.0, 1.0, 7.5):
            assert szasz_apply(lambda u: 1.0, ctx, x) == pytest.approx(
                1.0, abs=ctx.tail_tol
            )

    def test_linear(self):
        ctx = SzaszContext(10)
        for x in (0.0, 2.0, 8.0):
            assert szasz_apply(lambda u: u, ctx, x) == pytest.approx(x, abs=1e-10)

    def test_square_closed_form(self):
        # second moment: S_n(x^2) = x^2 + x/n
        ctx = SzaszContext(10)
        assert szasz_apply(lambda u: u * u, ctx, 2.0) == pytest.approx(4.2, abs=1e-6)

    def test_nonfinite_node_value(self):
        ctx = SzaszContext(2, x_max=2.0, tail_tol=1e-8)
        with pytest.raises(ValueError, match="not finite"):
            szasz_apply(lambda u: 1.0 / u if u > 0 else math.inf, ctx, 1.0)

    def test_x_outside_domain(self):
        ctx = SzaszContext(10)
        with pytest.raises(ValueError, match="outside"):
            szasz_apply(lambda u: u, ctx, 9.0)


class TestSzaszIterated:
    def test_k1_matches_apply(self):
        ctx = SzaszContext(5, x_max=4.0, tail_tol=1e-10)
        f = lambda u: math.exp(-u)
        for x in (0.3, 2.2):
            assert szasz_iterated(f, ctx, 1, x) == pytest.approx(
                szasz_apply(f, ctx, x), abs=1e-14
            )

    def test_linear_fixed_point(self):
        ctx = SzaszContext(10)
        for k in (2, 3, 5):
            for x in (0.0, 1.5, 8.0):
                assert szasz_iterated(lambda u: u, ctx, k, x) == pytest.approx(
                    x, abs=10 * ctx.tail_tol
                )

    def test_iteration_improves_smooth_target(self):
        ctx = SzaszContext(10)
        f = lambda x: 0.25 * x * math.exp(-x / 2.0)
        grid = np.linspace(0, 8, 81)
        c1 = szasz_coefficients(f, ctx, 1)
        c3 = szasz_coefficients(f, ctx, 3)
        e1 = max(abs(szasz_eval(ctx, c1, x) - f(x)) for x in grid)
        e3 = max(abs(szasz_eval(ctx, c3, x) - f(x)) for x in grid)
        assert e3 < e1

    def test_matches_double_summation_oracle(self):
        # brute-force closed form over iterated Poisson basis functions,
        # on the identical truncated index set
        ctx = SzaszContext(4, 8.0, 1e-14, M=80)
        f = lambda x: 0.25 * x * math.exp(-x / 2.0)
        m, n = ctx.M, ctx.n
        op = np.empty((m + 1, m + 1))
        for j in range(m + 1):
            op[:, j] = _poisson_vector(n, j / n, m)
        node_vals = np.array([f(i / n) for i in range(m + 1)])

        def brute(k, x):
            px = _poisson_vector(n, x, m)
            total = 0.0
            for i in range(m + 1):
                w = np.zeros(m + 1)
                w[i] = 1.0
                part = 0.0
                for j in range(1, k + 1):
                    part += math.comb(k, j) * (-1.0) ** (j - 1) * (w @ px)
                    w = w @ op
                total += node_vals[i] * part
            return total

        for k in (1, 2, 3):
            for x in (0.5, 3.7, 7.0):
                assert szasz_iterated(f, ctx, k, x) == pytest.approx(
                    brute(k, x), abs=1e-9
                )

    def test_node_cap(self):
        ctx = SzaszContext(10, 8.0, 1e-12, M=60_000)
        with pytest.raises(ValueError, match="cap"):
            szasz_iterated(lambda u: u, ctx, 2, 1.0)
