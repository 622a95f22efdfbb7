"""Tsallis and Renyi entropies, the alpha-logarithm, and order algebra.

All entropies are in nats.  Orders within EPS_ORDER of 1 switch over to the
Shannon formulas, since the direct expressions are numerically unstable there.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import check_density

# |alpha - 1| below this uses the Shannon limit.
EPS_ORDER = 1e-8

_SUM_TOL = 1e-10
_NEG_TOL = 1e-12


def as_prob_vector(p, tol_sum: float = _SUM_TOL) -> np.ndarray:
    """Validate and normalize a probability vector.

    Entries in [-1e-12, 0) are clipped to 0; the sum must be 1 within tol_sum
    (the residual is renormalized away).
    """
    p = np.asarray(p, dtype=float).ravel()
    if not np.all(np.isfinite(p)):
        raise ValueError("probabilities contain non-finite entries")
    if np.any(p < -_NEG_TOL):
        raise ValueError(f"negative probability {p.min():.3e}")
    p = np.clip(p, 0.0, None)
    s = p.sum()
    if abs(s - 1) > tol_sum:
        raise ValueError(f"probabilities sum to {s!r}, expected 1")
    return p / s


def _check_order(alpha: float) -> float:
    alpha = float(alpha)
    if not np.isfinite(alpha) or alpha <= 0:
        raise ValueError(f"entropy order must be > 0, got {alpha}")
    return alpha


def alpha_log(x: float, alpha: float) -> float:
    """Deformed logarithm ln_a(x) = (x^(1-a) - 1)/(1-a); natural log at a -> 1."""
    alpha = _check_order(alpha)
    x = float(x)
    if x < 0:
        raise ValueError(f"alpha_log requires x >= 0, got {x}")
    if x == 0:
        if alpha < 1 - EPS_ORDER:
            # finite limit of (x^(1-a) - 1)/(1-a) as x -> 0+
            return -1.0 / (1.0 - alpha)
        raise ValueError(f"alpha_log(0) diverges for order {alpha}")
    if abs(alpha - 1) < EPS_ORDER:
        return float(np.log(x))
    return float((x ** (1.0 - alpha) - 1.0) / (1.0 - alpha))


def _shannon(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-np.sum(p * np.log(p)))


def tsallis_entropy(p, alpha: float) -> float:
    """Non-extensive entropy (1-a)^(-1) (sum p^a - 1); Shannon at a -> 1."""
    alpha = _check_order(alpha)
    p = as_prob_vector(p)
    if abs(alpha - 1) < EPS_ORDER:
        return _shannon(p)
    return float((np.sum(p[p > 0] ** alpha) - 1.0) / (1.0 - alpha))


def renyi_entropy(p, alpha: float) -> float:
    """Renyi entropy (1-a)^(-1) ln(sum p^a); Shannon at a -> 1."""
    alpha = _check_order(alpha)
    p = as_prob_vector(p)
    if abs(alpha - 1) < EPS_ORDER:
        return _shannon(p)
    return float(np.log(np.sum(p[p > 0] ** alpha)) / (1.0 - alpha))


def renyi_from_tsallis(h: float, alpha: float) -> float:
    """Convert a Tsallis value to the Renyi value of the same order."""
    alpha = _check_order(alpha)
    h = float(h)
    if abs(alpha - 1) < EPS_ORDER:
        return h
    arg = 1.0 + (1.0 - alpha) * h
    if arg <= 0:
        raise ValueError(f"log argument {arg!r} <= 0 in Tsallis-to-Renyi conversion")
    return float(np.log(arg) / (1.0 - alpha))


def classical_entropy(p, alpha: float, kind: str) -> float:
    """Dispatch on kind in {'tsallis', 'renyi'}."""
    if kind == "tsallis":
        return tsallis_entropy(p, alpha)
    if kind == "renyi":
        return renyi_entropy(p, alpha)
    raise ValueError(f"unknown entropy kind {kind!r}")


def quantum_entropy(rho, alpha: float, kind: str = "tsallis") -> float:
    """Entropy of the eigenvalue distribution of a density matrix."""
    rho = check_density(rho)
    w = np.linalg.eigvalsh(rho)
    return classical_entropy(as_prob_vector(w), alpha, kind)


@dataclass(frozen=True)
class ConjugateOrders:
    """Order pair with 1/alpha + 1/beta = 2 and mu = max(alpha, beta)."""

    alpha: float
    beta: float
    mu: float

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("orders must be positive")
        if abs(1.0 / self.alpha + 1.0 / self.beta - 2.0) > 1e-12:
            raise ValueError(
                f"orders ({self.alpha}, {self.beta}) are not conjugate: 1/a + 1/b != 2"
            )
        if self.mu != max(self.alpha, self.beta):
            raise ValueError("mu must equal max(alpha, beta)")

    @property
    def shannon_limit(self) -> bool:
        """True when mu is at the (limit-extrapolated) Shannon switchover."""
        return abs(self.mu - 1) < EPS_ORDER


def conjugate_order(alpha: float) -> ConjugateOrders:
    """Solve 1/alpha + 1/beta = 2 for beta; requires alpha > 1/2."""
    alpha = float(alpha)
    if alpha <= 0.5:
        raise ValueError(f"conjugate order undefined for alpha <= 1/2, got {alpha}")
    beta = alpha / (2.0 * alpha - 1.0)
    return ConjugateOrders(alpha=alpha, beta=beta, mu=max(alpha, beta))
