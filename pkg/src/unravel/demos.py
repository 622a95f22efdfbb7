"""Two executable demonstrations of the Tsallis uncertainty bound.

First, complementary observables connected by the discrete Fourier transform
in a d-level system, where the bound is ln_mu(d) and basis states saturate
it.  Second, the binned angle versus the angular momentum of a truncated
wavefunction on the circle, where the bound is ln_mu(2*pi/delta_phi).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .bounds import BoundReport
from .entropy import ConjugateOrders, alpha_log, as_prob_vector, tsallis_entropy


def dft_matrix(d: int) -> np.ndarray:
    """Unitary with entries exp(2*pi*i*k*l/d)/sqrt(d), k, l = 1..d."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    k = np.arange(1, d + 1)
    return np.exp(2j * np.pi * np.outer(k, k) / d) / np.sqrt(d)


def dft_uncertainty_demo(state, orders: ConjugateOrders) -> BoundReport:
    """H_a of the Fourier-side distribution plus H_b of the input one vs ln_mu(d)."""
    c = np.asarray(state, dtype=complex).ravel()
    if abs(np.linalg.norm(c) - 1) > 1e-10:
        raise ValueError("state is not normalized")
    d = c.size
    q = as_prob_vector(np.abs(c) ** 2)
    p = as_prob_vector(np.abs(dft_matrix(d) @ c) ** 2)
    lhs = tsallis_entropy(p, orders.alpha) + tsallis_entropy(q, orders.beta)
    rhs = alpha_log(float(d), orders.mu)
    return BoundReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        factor=1.0 / np.sqrt(d),
        orders=orders,
        limit_extrapolated=orders.shannon_limit,
    )


@dataclass(frozen=True)
class AngleState:
    """Momentum amplitudes c_l, l = -L..L, with an angular bin count.

    The wavefunction is Psi(phi) = (2*pi)^(-1/2) sum_l c_l exp(i*l*phi); all
    bins share the width delta_phi = 2*pi/nbins.
    """

    coeffs: np.ndarray
    nbins: int

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex).ravel()
        if c.size % 2 == 0:
            raise ValueError("coeffs must cover l = -L..L, so their count is odd")
        if abs(np.sum(np.abs(c) ** 2) - 1) > 1e-10:
            raise ValueError("momentum amplitudes are not normalized")
        if self.nbins < 1:
            raise ValueError(f"nbins must be >= 1, got {self.nbins}")
        object.__setattr__(self, "coeffs", c)

    @property
    def truncation(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def delta_phi(self) -> float:
        return 2 * np.pi / self.nbins


def wavefunction(state: AngleState, phis) -> np.ndarray:
    """Psi evaluated at the given angles."""
    ls = np.arange(-state.truncation, state.truncation + 1)
    return np.exp(1j * np.outer(np.asarray(phis, float), ls)) @ state.coeffs / np.sqrt(2 * np.pi)


def bin_probabilities(state: AngleState, quad_points_per_bin: int = 64) -> np.ndarray:
    """Per-bin integrals of |Psi|^2 by composite Simpson quadrature.

    quad_points_per_bin counts subintervals per bin (rounded up to even).
    A normalization defect above 1e-6 means the resolution is too low.
    """
    if quad_points_per_bin < 2:
        raise ValueError("quad_points_per_bin must be >= 2")
    n_int = quad_points_per_bin + (quad_points_per_bin % 2)
    edges = np.linspace(0.0, 2 * np.pi, state.nbins + 1)
    offsets = np.linspace(0.0, state.delta_phi, n_int + 1)
    phis = edges[:-1, None] + offsets[None, :]
    dens = np.abs(wavefunction(state, phis.ravel())) ** 2
    p = simpson(dens.reshape(state.nbins, n_int + 1), x=phis, axis=1)
    defect = abs(p.sum() - 1.0)
    if defect > 1e-6:
        raise ValueError(
            f"quadrature normalization off by {defect:.3e}; raise quad_points_per_bin"
        )
    return p / p.sum()


def angle_momentum_demo(
    state: AngleState, orders: ConjugateOrders, quad_points_per_bin: int = 64
) -> BoundReport:
    """Binned-angle vs angular-momentum bound H_a(phi) + H_b(J) >= ln_mu(nbins)."""
    if orders.alpha <= 1 and not orders.shannon_limit:
        raise ValueError("the binned-angle bound needs alpha > 1 > beta")
    p = bin_probabilities(state, quad_points_per_bin)
    q = as_prob_vector(np.abs(state.coeffs) ** 2)
    lhs = tsallis_entropy(p, orders.alpha) + tsallis_entropy(q, orders.beta)
    rhs = alpha_log(float(state.nbins), orders.mu)
    return BoundReport(
        lhs=lhs,
        rhs=rhs,
        slack=lhs - rhs,
        factor=1.0 / np.sqrt(state.nbins),
        orders=orders,
        limit_extrapolated=orders.shannon_limit,
    )


def gaussian_wavepacket(truncation: int, width: float, nbins: int, tail_tol: float = 1e-12) -> AngleState:
    """AngleState with c_l proportional to exp(-l^2/(2*width^2)).

    The weight the truncation discards (relative to the untruncated profile)
    must stay below tail_tol.
    """
    if width <= 0:
        raise ValueError("width must be positive")
    ls = np.arange(-truncation, truncation + 1)
    c = np.exp(-(ls.astype(float) ** 2) / (2 * width**2))
    ls_far = np.arange(truncation + 1, max(10 * truncation, truncation + 1000))
    tail = 2 * np.sum(np.exp(-(ls_far.astype(float) ** 2) / width**2))
    body = np.sum(c**2)
    if tail / (body + tail) > tail_tol:
        raise ValueError(
            f"discarded tail weight {tail / (body + tail):.3e} exceeds {tail_tol:.1e}; raise truncation"
        )
    return AngleState(coeffs=c / np.sqrt(body), nbins=nbins)


def psi_lb_norm(state: AngleState, b: float, num_points: int = 8192) -> float:
    """(integral of |Psi|^b over the circle)^(1/b) by periodic trapezoid rule."""
    if b <= 0:
        raise ValueError("b must be positive")
    phis = np.linspace(0.0, 2 * np.pi, num_points, endpoint=False)
    vals = np.abs(wavefunction(state, phis)) ** b
    return float((vals.mean() * 2 * np.pi) ** (1.0 / b))
