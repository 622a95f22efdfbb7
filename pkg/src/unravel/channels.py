"""Kraus unravelings of trace-preserving super-operators.

Channel application, unitary remixing of Kraus sets, the Gram matrix of an
unraveling at a state, effect probabilities, and the extremal unraveling
obtained by diagonalizing that Gram matrix (which minimizes every Tsallis
entropy of positive order and the Renyi entropies of order below 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .entropy import as_prob_vector, classical_entropy
from .linalg import as_matrix, check_density, check_unitary, hermitian_eig

TOL_COMPLETE = 1e-9


@dataclass(frozen=True)
class Unraveling:
    """Ordered Kraus set {A_i} with completeness sum A_i† A_i = I.

    Operators may be rectangular (dim_out x dim_in).  Inputs violating
    completeness beyond TOL_COMPLETE are rejected, not renormalized.
    """

    kraus_ops: tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(as_matrix(a) for a in self.kraus_ops)
        if not ops:
            raise ValueError("unraveling needs at least one Kraus operator")
        shape = ops[0].shape
        if any(a.shape != shape for a in ops):
            raise ValueError("Kraus operators must all share the same shape")
        din = shape[1]
        total = sum(a.conj().T @ a for a in ops)
        dev = np.linalg.norm(total - np.eye(din))
        if dev > TOL_COMPLETE:
            raise ValueError(f"completeness violated: ||sum A†A - I||_F = {dev:.3e}")
        object.__setattr__(self, "kraus_ops", ops)

    @property
    def n_ops(self) -> int:
        return len(self.kraus_ops)

    @property
    def dim_in(self) -> int:
        return self.kraus_ops[0].shape[1]

    @property
    def dim_out(self) -> int:
        return self.kraus_ops[0].shape[0]

    def stacked(self) -> np.ndarray:
        return np.stack(self.kraus_ops)


@dataclass(frozen=True)
class ExtremalResult:
    """Extremal unraveling with the Gram spectrum and its diagonalizer."""

    extremal: Unraveling
    lambdas: np.ndarray
    diagonalizer: np.ndarray


def _check_state(a: Unraveling, rho) -> np.ndarray:
    rho = check_density(rho)
    if rho.shape[0] != a.dim_in:
        raise ValueError(f"state dim {rho.shape[0]} != channel input dim {a.dim_in}")
    return rho


def apply_channel(a: Unraveling, rho) -> np.ndarray:
    """sum_i A_i rho A_i†."""
    rho = _check_state(a, rho)
    out = sum(k @ rho @ k.conj().T for k in a.kraus_ops)
    return linalg.hermitianize(out)


def remix(a: Unraveling, u) -> Unraveling:
    """Equivalent unraveling B_i = sum_j A_j u_ji.

    A unitary larger than the Kraus set pads the set with zero operators
    first; a smaller one is rejected.
    """
    u = check_unitary(u)
    m = u.shape[0]
    if m < a.n_ops:
        raise ValueError(f"remix unitary dim {m} < number of Kraus operators {a.n_ops}")
    k = a.stacked()
    if m > a.n_ops:
        pad = np.zeros((m - a.n_ops, a.dim_out, a.dim_in), dtype=complex)
        k = np.concatenate([k, pad])
    b = np.einsum("ji,jkl->ikl", u, k)
    return Unraveling(tuple(b))


def gram_matrix(a: Unraveling, rho) -> np.ndarray:
    """Hermitian PSD unit-trace matrix with entries tr(A_i† A_j rho)."""
    rho = _check_state(a, rho)
    k = a.stacked()
    pi = np.einsum("iab,jac,cb->ij", k.conj(), k, rho, optimize=True)
    return linalg.hermitianize(pi)


def effect_probabilities(a: Unraveling, rho) -> np.ndarray:
    """p_i = tr(A_i† A_i rho)."""
    rho = _check_state(a, rho)
    k = a.stacked()
    p = np.einsum("iab,iac,cb->i", k.conj(), k, rho, optimize=True).real
    return as_prob_vector(p)


def extremal_unraveling(a: Unraveling, rho) -> ExtremalResult:
    """Diagonalize the Gram matrix and remix by its eigenvector matrix.

    With degenerate Gram eigenvalues the diagonalizer (hence the extremal
    Kraus set) is non-unique; only spectrum-derived quantities are canonical.
    """
    pi = gram_matrix(a, rho)
    w, v = hermitian_eig(pi)
    return ExtremalResult(
        extremal=remix(a, v),
        lambdas=as_prob_vector(w),
        diagonalizer=v,
    )


def unraveling_entropy(a: Unraveling, rho, alpha: float, kind: str = "tsallis") -> float:
    """Entropy of the effect-probability distribution."""
    return classical_entropy(effect_probabilities(a, rho), alpha, kind)


def random_unraveling(dim: int, n_kraus: int, seed: int) -> Unraveling:
    """Random unraveling from the blocks of a Haar-random isometry."""
    if dim < 1 or n_kraus < 1:
        raise ValueError("dim and n_kraus must be >= 1")
    rng = np.random.default_rng(seed)
    g = linalg.ginibre(rng, n_kraus * dim, dim)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return Unraveling(tuple(q.reshape(n_kraus, dim, dim)))


def remixed_probabilities(pi: np.ndarray, unitaries: np.ndarray) -> np.ndarray:
    """Effect probabilities of remixings, straight from the Gram matrix.

    For B = remix(A, U) the probabilities are diag(U† Pi U); `unitaries` is a
    stack (count, n, n) and the result has shape (count, n).
    """
    p = np.einsum("tji,jl,tli->ti", unitaries.conj(), pi, unitaries, optimize=True).real
    p = np.clip(p, 0.0, None)
    return p / p.sum(axis=1, keepdims=True)
