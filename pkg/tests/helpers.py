"""Shared fixtures-free helpers for the test suite."""

from __future__ import annotations

import numpy as np

from unravel.bounds import Povm
from unravel.channels import Unraveling

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def depolarizing_unraveling(p: float) -> Unraveling:
    """Pauli Kraus set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}."""
    return Unraveling(
        (
            np.sqrt(1 - 3 * p / 4) * np.eye(2, dtype=complex),
            np.sqrt(p / 4) * SIGMA_X,
            np.sqrt(p / 4) * SIGMA_Y,
            np.sqrt(p / 4) * SIGMA_Z,
        )
    )


def z_basis_povm() -> Povm:
    return Povm((np.diag([1.0, 0.0]).astype(complex), np.diag([0.0, 1.0]).astype(complex)))


def x_basis_povm() -> Povm:
    h = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    return Povm(tuple(np.outer(h[:, k], h[:, k].conj()) for k in range(2)))


def measurement_channel(povm: Povm) -> Unraveling:
    """von Neumann style channel with Kraus operators M_i^(1/2)."""
    from unravel.linalg import psd_sqrt_hermitian

    return Unraveling(tuple(psd_sqrt_hermitian(m) for m in povm.elements))


def random_state_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    psi = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return psi / np.linalg.norm(psi)
