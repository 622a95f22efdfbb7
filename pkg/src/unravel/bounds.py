"""Uncertainty bounds for pairs of generalized resolutions of the identity.

The overlap factors g (state-dependent), f (spectral-decomposition form) and
f_bar (state-independent) obey g <= f <= f_bar <= 1 and set the lower bounds

    H_a(M|rho) + H_b(N|rho) >= ln_mu(factor^-2)      (Tsallis)
    R_a(M|rho) + R_b(N|rho) >= -2 ln(factor)          (Renyi)

for conjugate orders 1/a + 1/b = 2, mu = max(a, b).  The module also hosts a
grid verifier for the two-variable function whose constrained minimum yields
the Tsallis bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .channels import Unraveling
from .entropy import (
    ConjugateOrders,
    alpha_log,
    as_prob_vector,
    renyi_entropy,
    tsallis_entropy,
)
from .linalg import check_density, check_hermitian, matrix_norms, psd_sqrt_hermitian

# Probabilities below this are treated as zero in the factor maxima.
P_ZERO_TOL = 1e-12

TOL_POVM_COMPLETE = 1e-9


@dataclass(frozen=True)
class Povm:
    """Set of Hermitian PSD operators summing to the identity."""

    elements: tuple[np.ndarray, ...]

    def __post_init__(self):
        elems = []
        for k, m in enumerate(self.elements):
            m = check_hermitian(m, name=f"POVM element {k}")
            w = np.linalg.eigvalsh(m)
            if w[0] < -linalg.TOL_PSD:
                raise ValueError(f"POVM element {k} not PSD: min eigenvalue {w[0]:.3e}")
            elems.append(m)
        if not elems:
            raise ValueError("POVM needs at least one element")
        dim = elems[0].shape[0]
        if any(m.shape[0] != dim for m in elems):
            raise ValueError("POVM elements must share one dimension")
        dev = np.linalg.norm(sum(elems) - np.eye(dim))
        if dev > TOL_POVM_COMPLETE:
            raise ValueError(f"POVM completeness violated: ||sum M - I||_F = {dev:.3e}")
        object.__setattr__(self, "elements", tuple(elems))

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]

    @property
    def n_outcomes(self) -> int:
        return len(self.elements)

    def stacked(self) -> np.ndarray:
        return np.stack(self.elements)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated uncertainty inequality: lhs >= rhs up to slack tolerance."""

    lhs: float
    rhs: float
    slack: float
    factor: float
    orders: ConjugateOrders
    limit_extrapolated: bool = False


def _check_pair(m: Povm, n: Povm, rho) -> np.ndarray:
    rho = check_density(rho)
    if m.dim != rho.shape[0] or n.dim != rho.shape[0]:
        raise ValueError(
            f"dimension mismatch: POVMs of dim {m.dim}/{n.dim}, state of dim {rho.shape[0]}"
        )
    return rho


def povm_probabilities(m: Povm, rho) -> np.ndarray:
    """p_i = tr(M_i rho)."""
    rho = check_density(rho)
    if m.dim != rho.shape[0]:
        raise ValueError(f"POVM dim {m.dim} != state dim {rho.shape[0]}")
    p = np.einsum("iab,ba->i", m.stacked(), rho).real
    return as_prob_vector(p)


def povm_from_unraveling(a: Unraveling) -> Povm:
    """Measurement with elements M_i = A_i† A_i."""
    return Povm(tuple(k.conj().T @ k for k in a.kraus_ops))


def g_factor(m: Povm, n: Povm, rho) -> float:
    """max |tr(M_i N_j rho)| / sqrt(p_i q_j) over outcomes with nonzero probability."""
    rho = _check_pair(m, n, rho)
    p = np.einsum("iab,ba->i", m.stacked(), rho).real
    q = np.einsum("iab,ba->i", n.stacked(), rho).real
    ii = np.flatnonzero(p > P_ZERO_TOL)
    jj = np.flatnonzero(q > P_ZERO_TOL)
    if ii.size == 0 or jj.size == 0:
        raise ValueError("degenerate input: no outcome pair with nonzero probabilities")
    num = np.abs(
        np.einsum("iab,jbc,ca->ij", m.stacked()[ii], n.stacked()[jj], rho, optimize=True)
    )
    ratio = num / np.sqrt(np.outer(p[ii], q[jj]))
    return float(ratio.max())


def f_factor(m: Povm, n: Povm, rho) -> float:
    """Overlap maximum over the eigenvectors of rho.

    For eigenvector psi: |<M_i psi, N_j psi>| / sqrt(<psi|M_i|psi> <psi|N_j|psi>),
    maximized over eigenvectors with nonzero weight and admissible (i, j).
    Coincides with g on pure states and dominates it otherwise.
    """
    rho = _check_pair(m, n, rho)
    w, v = linalg.hermitian_eig(rho)
    best = -np.inf
    for k in np.flatnonzero(w > P_ZERO_TOL):
        psi = v[:, k]
        p = np.einsum("a,iab,b->i", psi.conj(), m.stacked(), psi).real
        q = np.einsum("a,iab,b->i", psi.conj(), n.stacked(), psi).real
        ii = np.flatnonzero(p > P_ZERO_TOL)
        jj = np.flatnonzero(q > P_ZERO_TOL)
        if ii.size == 0 or jj.size == 0:
            continue
        num = np.abs(
            np.einsum("a,iab,jbc,c->ij", psi.conj(), m.stacked()[ii], n.stacked()[jj], psi, optimize=True)
        )
        ratio = num / np.sqrt(np.outer(p[ii], q[jj]))
        best = max(best, float(ratio.max()))
    if best == -np.inf:
        raise ValueError("degenerate input: no outcome pair with nonzero probabilities")
    return best


def f_bar(m: Povm, n: Povm) -> float:
    """State-independent overlap: max spectral norm of M_i^(1/2) N_j^(1/2)."""
    if m.dim != n.dim:
        raise ValueError(f"POVM dimension mismatch: {m.dim} vs {n.dim}")
    roots_m = [psd_sqrt_hermitian(x) for x in m.elements]
    roots_n = [psd_sqrt_hermitian(x) for x in n.elements]
    return max(matrix_norms(a @ b)[1] for a in roots_m for b in roots_n)


def overlap_factor(m: Povm, n: Povm, rho, factor_kind: str) -> float:
    if factor_kind == "g":
        return g_factor(m, n, rho)
    if factor_kind == "f":
        return f_factor(m, n, rho)
    if factor_kind == "fbar":
        return f_bar(m, n)
    raise ValueError(f"unknown factor kind {factor_kind!r}")


def tsallis_uncertainty_check(
    m: Povm, n: Povm, rho, orders: ConjugateOrders, factor_kind: str = "g"
) -> BoundReport:
    """Evaluate H_a(M|rho) + H_b(N|rho) against ln_mu(factor^-2).

    alpha is bound to the first POVM and beta to the second.  A mu at the
    Shannon switchover is reported as limit-extrapolated.
    """
    rho = _check_pair(m, n, rho)
    factor = overlap_factor(m, n, rho, factor_kind)
    lhs = tsallis_entropy(povm_probabilities(m, rho), orders.alpha) + tsallis_entropy(
        povm_probabilities(n, rho), orders.beta
    )
    rhs = alpha_log(factor**-2, orders.mu)
    return BoundReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        factor=factor,
        orders=orders,
        limit_extrapolated=orders.shannon_limit,
    )


def renyi_uncertainty_check(
    m: Povm, n: Povm, rho, orders: ConjugateOrders, factor_kind: str = "g"
) -> BoundReport:
    """Evaluate R_a(M|rho) + R_b(N|rho) against -2 ln(factor)."""
    rho = _check_pair(m, n, rho)
    factor = overlap_factor(m, n, rho, factor_kind)
    lhs = renyi_entropy(povm_probabilities(m, rho), orders.alpha) + renyi_entropy(
        povm_probabilities(n, rho), orders.beta
    )
    rhs = float(-2.0 * np.log(factor))
    return BoundReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        factor=factor,
        orders=orders,
        limit_extrapolated=orders.shannon_limit,
    )


@dataclass(frozen=True)
class PhiProblem:
    """Constrained minimization instance for phi(xi, zeta).

    phi(xi, zeta) = (xi - 1)/(1 - alpha) + (zeta - 1)/(1 - beta) over the
    domain 0 <= xi <= 1, zeta >= 1, zeta >= gamma * xi^(beta/alpha), where
    gamma = factor^(-2(1-beta)) >= 1 and (alpha, beta) are conjugate with
    alpha > 1.  The minimum sits at (xi0, 1), xi0 = gamma^(-alpha/beta).
    """

    gamma: float
    alpha: float

    def __post_init__(self):
        if self.gamma < 1:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if self.alpha <= 1:
            raise ValueError(f"alpha must be > 1, got {self.alpha}")

    @property
    def beta(self) -> float:
        return self.alpha / (2.0 * self.alpha - 1.0)

    @property
    def xi0(self) -> float:
        return self.gamma ** (-self.alpha / self.beta)

    def phi(self, xi, zeta):
        return (np.asarray(xi) - 1.0) / (1.0 - self.alpha) + (np.asarray(zeta) - 1.0) / (
            1.0 - self.beta
        )


def phi_min_verify(problem: PhiProblem, grid_points: int = 2000) -> tuple[float, float]:
    """Return (analytic_min, numeric_min) for a PhiProblem.

    The numeric minimum combines a grid_points x grid_points rectangular grid
    (masked to the feasible region; zeta <= gamma suffices since phi increases
    in zeta) with a fine sweep along the active lower boundary
    zeta = max(1, gamma * xi^(beta/alpha)), where the minimum lives.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    gamma, alpha, beta = problem.gamma, problem.alpha, problem.beta
    analytic = (problem.xi0 - 1.0) / (1.0 - alpha)

    xi = np.linspace(0.0, 1.0, grid_points)
    zeta = np.linspace(1.0, gamma, grid_points) if gamma > 1 else np.ones(1)
    feasible = zeta[None, :] >= gamma * (xi[:, None] ** (beta / alpha))
    if not feasible.any():
        raise ValueError("empty feasible grid")
    grid_min = float(problem.phi(xi[:, None], zeta[None, :])[feasible].min())

    n_edge = min(grid_points * grid_points, 4_000_001)
    xi_edge = np.linspace(0.0, 1.0, n_edge)
    zeta_edge = np.maximum(1.0, gamma * xi_edge ** (beta / alpha))
    edge_min = float(problem.phi(xi_edge, zeta_edge).min())

    return analytic, min(grid_min, edge_min)


def random_projective_povm(dim: int, seed: int) -> Povm:
    """Rank-1 orthogonal projectors onto a Haar-random basis."""
    u = linalg.haar_random_unitary(dim, seed)
    return Povm(tuple(np.outer(u[:, k], u[:, k].conj()) for k in range(dim)))


def random_povm(dim: int, n_outcomes: int, seed: int) -> Povm:
    """General POVM: Wishart pieces whitened by the inverse root of their sum."""
    if n_outcomes < 1:
        raise ValueError("n_outcomes must be >= 1")
    rng = np.random.default_rng(seed)
    pieces = []
    for _ in range(n_outcomes):
        g = linalg.ginibre(rng, dim, dim)
        pieces.append(g @ g.conj().T)
    total = sum(pieces)
    w, v = np.linalg.eigh(total)
    inv_root = (v / np.sqrt(w)) @ v.conj().T
    return Povm(tuple(linalg.hermitianize(inv_root @ s @ inv_root) for s in pieces))
