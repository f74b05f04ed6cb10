"""Special-function kernel: log-gamma, Jacobi polynomials, Gauss-Legendre rules.

Everything downstream that touches gamma-function ratios goes through
``ln_gamma`` and log-space summation, because the normalization constants
involve arguments well past the overflow point of Gamma itself.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

__all__ = ["ln_gamma", "jacobi", "QuadratureRule", "gauss_legendre"]


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def jacobi(n: int, a: float, b: float, x):
    """Jacobi polynomial P_n^(a,b)(x) by the ascending three-term recurrence.

    Stable on x in [-1, 1], the only region used here.  Accepts scalar or
    array ``x``; exact for n = 0 (-> 1) and n = 1 (-> (a-b)/2 + (a+b+2)x/2).
    """
    if n < 0:
        raise DomainError(f"polynomial degree must be >= 0, got {n}")
    xs = np.asarray(x, dtype=float)
    if n == 0:
        result = np.ones_like(xs)
    else:
        p_prev = np.ones_like(xs)
        p = 0.5 * (a - b + (a + b + 2.0) * xs)
        apb = a + b
        for k in range(2, n + 1):
            c1 = 2.0 * k * (k + apb) * (2.0 * k + apb - 2.0)
            c2 = (2.0 * k + apb - 1.0) * (a * a - b * b)
            c3 = (2.0 * k + apb - 2.0) * (2.0 * k + apb - 1.0) * (2.0 * k + apb)
            c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + apb)
            p, p_prev = ((c2 + c3 * xs) * p - c4 * p_prev) / c1, p
        result = p
    if np.isscalar(x) or xs.ndim == 0:
        return float(result)
    return result


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss-Legendre nodes/weights on (-1, 1); immutable and shareable."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def __post_init__(self):
        self.nodes.setflags(write=False)
        self.weights.setflags(write=False)

    def mapped(self, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights transplanted to the interval (lo, hi)."""
        half = 0.5 * (hi - lo)
        return lo + half * (self.nodes + 1.0), half * self.weights

    def integrate(self, fn, lo: float = -1.0, hi: float = 1.0) -> float:
        x, w = self.mapped(lo, hi)
        return float(np.sum(w * fn(x)))


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> QuadratureRule:
    """Gauss-Legendre rule of the given order.

    Exact for polynomials up to degree 2*order - 1.  Rules are cached and
    returned with read-only arrays, so sharing across threads is safe.
    """
    if order < 1:
        raise DomainError(f"quadrature order must be >= 1, got {order}")
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return QuadratureRule(nodes=nodes, weights=weights, order=order)
