"""Derivatives, integrals and the integral-free quadrature rule.

Derivatives of iterated approximants come from forward differences of the
operator-iterate samples; integrals reduce to the cumulative basis
integrals S_ni, which are themselves sums of a degree-elevated basis.
"""

from __future__ import annotations

import math

import numpy as np

from .core import UniformSamples, basis_vector, bernstein_matrix, binomial
from .iterated import INFINITY, IterCoefficients, coefficients, eval_iterated


def forward_difference(values, r: int, i: int) -> float:
    """r-th forward difference of a sample vector at index i."""
    values = np.asarray(values, dtype=float)
    if r < 0:
        raise ValueError(f"difference order must be nonnegative, got r={r}")
    if i < 0 or i + r >= len(values):
        raise ValueError(
            f"difference window [{i}, {i + r}] exceeds {len(values) - 1}"
        )
    acc = 0.0
    for m in range(r + 1):
        acc += binomial(r, m) * (-1.0) ** m * values[i + r - m]
    return acc


def difference_table(values, r: int) -> np.ndarray:
    """All r-th forward differences of a sample vector at once."""
    return np.diff(np.asarray(values, dtype=float), r) if r else np.asarray(values, float)


def derivative_eval(samples: UniformSamples, k: int, r: int, t: float) -> float:
    """r-th derivative of the order-k iterated approximant at t.

    r = 0 is accepted and forwards to plain evaluation, so grid sweeps can
    treat the value and its derivatives uniformly.
    """
    n = samples.n
    if r < 0:
        raise ValueError(f"derivative order must be nonnegative, got r={r}")
    if r > n:
        raise ValueError(f"derivative order r={r} exceeds degree n={n}")
    if k < 1:
        raise ValueError(f"iteration order must be >= 1, got k={k}")
    if r == 0:
        return eval_iterated(coefficients(samples, k), t)
    matrix = bernstein_matrix(n).entries
    # Node samples of the operator iterates B^{j-1} f, built once per call.
    falling = 1.0
    for m in range(r):
        falling *= n - m
    g = samples.values
    combo = np.zeros(n + 1 - r)
    for j in range(1, k + 1):
        combo += (-1.0) ** (j - 1) * binomial(k, j) * np.diff(g, r)
        if j < k:
            g = g @ matrix
    return falling * float(combo @ basis_vector(n - r, t))


def basis_integral_vector(n: int, x: float) -> np.ndarray:
    """All cumulative basis integrals S_ni(x), i = 0..n.

    Uses the degree-elevation identity: S_ni(x) is 1/(n+1) times the tail
    sum of the degree-(n+1) basis at x.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x={x} outside [0, 1]")
    elevated = basis_vector(n + 1, x)
    # tail[i] = sum of elevated[i+1:]; tail sums keep endpoint values exact.
    tail = np.cumsum(elevated[::-1])[::-1]
    return tail[1:] / (n + 1)


def basis_integral(n: int, i: int, x: float) -> float:
    """S_ni(x), the integral of the basis polynomial B_ni from 0 to x."""
    if not 0 <= i <= n:
        raise ValueError(f"basis index i={i} outside 0..{n}")
    return float(basis_integral_vector(n, x)[i])


def integral_eval(coeffs: IterCoefficients, x: float) -> float:
    """Integral of the iterated approximant from 0 to x."""
    return float(coeffs.coeffs @ basis_integral_vector(coeffs.n, x))


def quadrature(g, a: float, b: float, n: int, k, force: bool = False) -> float:
    """Integral-free quadrature of g over [a, b].

    Samples f(t) = (b-a) * g(a + (b-a)t) at the uniform nodes, forms the
    order-k coefficients (k may be INFINITY) and returns their mean. Exact
    for linear integrands at every order.
    """
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    width = b - a
    values = np.empty(n + 1)
    for i in range(n + 1):
        node = a + width * (i / n)
        try:
            v = width * float(g(node))
        except ArithmeticError:
            raise ValueError(f"integrand is not finite at node x={node}")
        if not math.isfinite(v):
            raise ValueError(f"integrand is not finite at node x={node}")
        values[i] = v
    coeffs = coefficients(UniformSamples(n, values), k, force=force)
    return float(np.sum(coeffs.coeffs)) / (n + 1)
