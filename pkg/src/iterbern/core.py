"""Bernstein basis evaluation and the classical Bernstein operator.

The operator acts on the n+1 samples f(i/n); everything downstream
(iteration, derivatives, integrals) is built on the basis vector and the
node-evaluation matrix produced here.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

# Exact integer accumulation is safe in a double up to here: C(60, 30) is
# below 2**63 and converts to float without losing the oracle's exactness
# at small n. Beyond the cap, log-space products take over.
EXACT_BINOMIAL_CAP = 60

# Degree above which the node-evaluation matrix is too ill-conditioned for
# the k -> infinity linear solve in double precision.
LIMIT_DEGREE_CAP = 30


class ConditioningError(ValueError):
    """Linear solve rejected because the system is too ill-conditioned."""

    def __init__(self, message, condition_estimate=None):
        super().__init__(message)
        self.condition_estimate = condition_estimate


def binomial(n: int, i: int) -> float:
    """Binomial coefficient C(n, i) as a float.

    Exact for n <= EXACT_BINOMIAL_CAP (integer accumulation), log-space
    product beyond that.
    """
    if i < 0 or n < 0:
        raise ValueError(f"binomial requires nonnegative arguments, got ({n}, {i})")
    if i > n:
        raise ValueError(f"binomial index i={i} exceeds n={n}")
    if n <= EXACT_BINOMIAL_CAP:
        return float(math.comb(n, i))
    return math.exp(math.lgamma(n + 1) - math.lgamma(i + 1) - math.lgamma(n - i + 1))


def basis_vector(n: int, t: float) -> np.ndarray:
    """All n+1 Bernstein basis values at t via the triangular recurrence.

    Stable near the endpoints; at t = 0 and t = 1 the result is an exact
    unit vector (0**0 counts as 1).
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got n={n}")
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t={t} outside [0, 1]")
    b = np.zeros(n + 1)
    b[0] = 1.0
    s = 1.0 - t
    for m in range(1, n + 1):
        b[1 : m + 1] = t * b[0:m] + s * b[1 : m + 1]
        b[0] *= s
    return b


def basis_eval(n: int, i: int, t: float) -> float:
    """Single Bernstein basis polynomial B_{ni}(t)."""
    if not 0 <= i <= n:
        raise ValueError(f"basis index i={i} outside 0..{n}")
    return float(basis_vector(n, t)[i])


@dataclass(frozen=True)
class UniformSamples:
    """Values f(i/n), i = 0..n, driving every classical/iterated approximant."""

    n: int
    values: np.ndarray

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"degree must be positive, got n={self.n}")
        values = np.asarray(self.values, dtype=float)
        if values.shape != (self.n + 1,):
            raise ValueError(
                f"expected {self.n + 1} sample values, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            raise ValueError("sample values must all be finite")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, fn, n: int) -> "UniformSamples":
        nodes = np.arange(n + 1) / n
        return cls(n, np.array([float(fn(t)) for t in nodes]))

    @property
    def nodes(self) -> np.ndarray:
        return np.arange(self.n + 1) / self.n


def bernstein_apply(samples: UniformSamples, t: float) -> float:
    """Classical Bernstein approximant of degree n at t."""
    return float(samples.values @ basis_vector(samples.n, t))


@dataclass(frozen=True)
class BernsteinMatrix:
    """Dense (n+1) x (n+1) matrix with entries B_{n,i}(j/n).

    Right-multiplication by a row vector of node samples yields the node
    samples of the Bernstein approximant. Columns 0 and n are exact unit
    vectors, so endpoint samples are invariant under the operator.
    """

    n: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (self.n + 1, self.n + 1):
            raise ValueError(f"matrix shape {entries.shape} does not match n={self.n}")
        object.__setattr__(self, "entries", entries)


def bernstein_matrix(n: int) -> BernsteinMatrix:
    """Build the node-evaluation matrix for degree n."""
    if n < 1:
        raise ValueError(f"degenerate degree n={n}; need n >= 1")
    if n > LIMIT_DEGREE_CAP:
        warnings.warn(
            f"n={n} exceeds the conditioning cap {LIMIT_DEGREE_CAP}; the "
            "k=infinity solve is unreliable at this degree (finite-k "
            "iteration is unaffected)",
            RuntimeWarning,
            stacklevel=2,
        )
    entries = np.empty((n + 1, n + 1))
    for j in range(n + 1):
        entries[:, j] = basis_vector(n, j / n)
    return BernsteinMatrix(n, entries)
