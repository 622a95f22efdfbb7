"""Dense complex-matrix kernel.

Hilbert-Schmidt inner products, Frobenius/spectral norms, Hermitian
eigendecomposition with a canonical (descending) eigenvalue order, PSD square
roots, and seeded random generators for unitaries and density matrices.
"""

from __future__ import annotations

import numpy as np

# Tolerances for double-precision dense algebra at dim <= 64.
TOL_HERM = 1e-9
TOL_UNITARY = 1e-9
TOL_TRACE = 1e-10
TOL_PSD = 1e-10


def as_matrix(x) -> np.ndarray:
    """Coerce to a finite 2-D complex array."""
    m = np.asarray(x, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got array of shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def hermitianize(x: np.ndarray) -> np.ndarray:
    """Return the Hermitian part (x + x†)/2."""
    return (x + x.conj().T) / 2


def hs_inner(x, y) -> complex:
    """Hilbert-Schmidt inner product tr(x† y)."""
    x = as_matrix(x)
    y = as_matrix(y)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return complex(np.vdot(x, y))


def frobenius_norm(x) -> float:
    return float(np.linalg.norm(as_matrix(x)))


def matrix_norms(x) -> tuple[float, float]:
    """Return (frobenius, spectral) norms from the singular values."""
    s = np.linalg.svd(as_matrix(x), compute_uv=False)
    return float(np.sqrt(np.sum(s**2))), float(s[0])


def check_hermitian(h, tol: float = TOL_HERM, name: str = "matrix") -> np.ndarray:
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise ValueError(f"{name} is not square: {h.shape}")
    dev = np.linalg.norm(h - h.conj().T)
    if dev > tol:
        raise ValueError(f"{name} is not Hermitian: deviation {dev:.3e} > {tol:.1e}")
    return hermitianize(h)


def check_unitary(u, tol: float = TOL_UNITARY, name: str = "matrix") -> np.ndarray:
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise ValueError(f"{name} is not square: {u.shape}")
    dev = np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]))
    if dev > tol:
        raise ValueError(f"{name} is not unitary: deviation {dev:.3e} > {tol:.1e}")
    return u


def check_density(rho, name: str = "rho") -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, positive semidefinite."""
    rho = check_hermitian(rho, name=name)
    tr = np.trace(rho).real
    if abs(tr - 1) > TOL_TRACE:
        raise ValueError(f"{name} has trace {tr!r}, expected 1")
    w = np.linalg.eigvalsh(rho)
    if w[0] < -TOL_PSD:
        raise ValueError(f"{name} is not PSD: min eigenvalue {w[0]:.3e}")
    return rho


def hermitian_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Returns (w, v) with h = v @ diag(w) @ v†.  Eigenvector phases are not
    canonicalized; compare only phase-invariant quantities downstream.
    """
    h = check_hermitian(h)
    w, v = np.linalg.eigh(h)
    return w[::-1].copy(), v[:, ::-1].copy()


def psd_sqrt_hermitian(m, tol_psd: float = TOL_PSD, name: str = "matrix") -> np.ndarray:
    """Hermitian PSD square root, clipping eigenvalues in [-tol_psd, 0) to 0."""
    w, v = hermitian_eig(check_hermitian(m, name=name))
    if w[-1] < -tol_psd:
        raise ValueError(f"{name} is not PSD: min eigenvalue {w[-1]:.3e}")
    w = np.clip(w, 0.0, None)
    return hermitianize((v * np.sqrt(w)) @ v.conj().T)


def psd_sqrt(rho) -> np.ndarray:
    """Square root of a density matrix."""
    return psd_sqrt_hermitian(check_density(rho), name="rho")


def ginibre(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Matrix of independent standard complex Gaussians."""
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def haar_unitary_from_rng(rng: np.random.Generator, dim: int) -> np.ndarray:
    """QR of a Ginibre matrix with the R diagonal made real positive."""
    q, r = np.linalg.qr(ginibre(rng, dim, dim))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def haar_random_unitary(dim: int, seed: int) -> np.ndarray:
    """Seeded Haar-random unitary of the given dimension."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    return haar_unitary_from_rng(np.random.default_rng(seed), dim)


def haar_random_unitaries(dim: int, count: int, seed: int) -> np.ndarray:
    """Stack of `count` Haar-random unitaries, shape (count, dim, dim)."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((count, dim, dim)) + 1j * rng.standard_normal((count, dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def random_density(dim: int, rank: int, seed: int) -> np.ndarray:
    """Random density matrix rho = GG†/tr(GG†) with G a dim x rank Ginibre matrix."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if not 1 <= rank <= dim:
        raise ValueError(f"rank must lie in [1, {dim}], got {rank}")
    g = ginibre(np.random.default_rng(seed), dim, rank)
    rho = g @ g.conj().T
    return hermitianize(rho / np.trace(rho).real)
