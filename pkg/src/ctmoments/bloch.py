"""Bloch decompositions, correlation tensors, and mode-k unfoldings.

A state on H_{d1} (x) ... (x) H_{dn} is expanded over tensor products of
the identity and the su(d_k) generators. The "plain" correlation tensor
collects the coefficients of pure generator products (all modes nonzero);
the "extended" tensor additionally carries the identity component in each
mode, so its (0, ..., 0) entry is 1 / prod(d_k) and, for two parties, it
coincides with the canonical correlation matrix
[[1/(d1 d2), s^t], [r, T]].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

import numpy as np

from . import _kernels
from .basis import extended_basis, gellmann_generators
from .errors import ModeOutOfRange, TooFewParties
from .linalg import DensityMatrix, _require_bipartite

REALITY_ATOL = 1e-12


@dataclass(frozen=True)
class BlochDecomposition:
    """Bloch vectors r, s and correlation matrix T of a bipartite state."""

    d1: int
    d2: int
    r: np.ndarray = field(repr=False)
    s: np.ndarray = field(repr=False)
    T: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class CorrelationTensor:
    """n-way real tensor of correlation coefficients.

    dims are the subsystem dimensions; entries has shape (d_k^2 - 1,)
    per mode for the plain tensor and (d_k^2,) per mode when extended.
    """

    dims: tuple[int, ...]
    entries: np.ndarray = field(repr=False)
    extended: bool

    @property
    def n(self) -> int:
        return len(self.dims)


def _real_part(raw: np.ndarray) -> np.ndarray:
    imag = float(np.max(np.abs(raw.imag))) if raw.size else 0.0
    if imag > 1e-9:
        raise ValueError(f"correlation entries not real: max imag {imag:.3e}")
    return np.ascontiguousarray(raw.real)


def correlation_tensor(
    rho: DensityMatrix,
    extended: bool = False,
    bases: list[list[np.ndarray]] | None = None,
    use_numba: bool | None = None,
) -> CorrelationTensor:
    """Correlation tensor of a multipartite state.

    With extended=False the entries are Tr(rho lam_{a1} (x) ... ) / 2^n
    over nonzero generator indices only. With extended=True index 0 of
    each mode is the identity and each entry carries the prefactor
    prod_{nonzero modes} d_k / (2^m prod_k d_k) with m the number of
    nonzero indices.

    An explicit generator basis per mode may be supplied for testing;
    it must use the same Tr(lam_i lam_j) = 2 delta_ij normalization.
    """
    dims = rho.dims
    n = rho.n_parties
    if n < 2:
        raise TooFewParties(f"correlation tensor needs >= 2 parties, got {n}")
    if bases is None:
        gens = [gellmann_generators(d) for d in dims]
    else:
        gens = bases
    if extended:
        stacks = [
            np.stack([np.eye(d, dtype=np.complex128)] + list(g))
            for d, g in zip(dims, gens)
        ]
    else:
        stacks = [np.stack(list(g)) for g in gens]
    raw = _kernels.expectation_tensor(rho.mat, stacks, dims, use_numba=use_numba)
    entries = _real_part(raw)

    d_total = prod(dims)
    if extended:
        # per-mode factor d_k/2 on nonzero indices, 1 on the identity slot
        for k, d in enumerate(dims):
            f = np.full(d * d, d / 2.0)
            f[0] = 1.0
            shape = [1] * n
            shape[k] = d * d
            entries = entries * f.reshape(shape)
        entries = entries / d_total
    else:
        entries = entries / (2.0**n)
    return CorrelationTensor(dims=dims, entries=np.ascontiguousarray(entries),
                             extended=extended)


def decompose_bipartite(rho: DensityMatrix) -> BlochDecomposition:
    """Bloch coefficients r_i, s_j, T_ij of a bipartite state."""
    d1, d2 = _require_bipartite(rho)
    ext = correlation_tensor(rho, extended=True).entries
    return BlochDecomposition(
        d1=d1,
        d2=d2,
        r=np.ascontiguousarray(ext[1:, 0]),
        s=np.ascontiguousarray(ext[0, 1:]),
        T=np.ascontiguousarray(ext[1:, 1:]),
    )


def canonical_matrix(dec: BlochDecomposition) -> np.ndarray:
    """Canonical correlation matrix [[1/(d1 d2), s^t], [r, T]]."""
    d1sq = dec.d1 * dec.d1
    d2sq = dec.d2 * dec.d2
    out = np.empty((d1sq, d2sq), dtype=np.float64)
    out[0, 0] = 1.0 / (dec.d1 * dec.d2)
    out[0, 1:] = dec.s
    out[1:, 0] = dec.r
    out[1:, 1:] = dec.T
    return out


def unfold(t: CorrelationTensor, mode: int) -> np.ndarray:
    """Mode-k unfolding: rows indexed by the given mode (1-based).

    Columns enumerate the remaining modes in lexicographic order with the
    lowest remaining mode most significant.
    """
    if not 1 <= mode <= t.n:
        raise ModeOutOfRange(f"mode {mode} out of range for {t.n}-way tensor")
    arr = np.moveaxis(t.entries, mode - 1, 0)
    return np.ascontiguousarray(arr.reshape(arr.shape[0], -1))


def reconstruct(t: CorrelationTensor) -> np.ndarray:
    """Rebuild the density matrix from an extended correlation tensor."""
    if not t.extended:
        raise ValueError("reconstruction requires the extended tensor")
    dims = t.dims
    bases = [extended_basis(d) for d in dims]
    d_total = prod(dims)
    out = np.zeros((d_total, d_total), dtype=np.complex128)
    for idx in np.ndindex(*t.entries.shape):
        c = t.entries[idx]
        if c == 0.0:
            continue
        op = bases[0][idx[0]]
        for k in range(1, len(dims)):
            op = np.kron(op, bases[k][idx[k]])
        out += c * op
    return out


def reconstruct_bipartite(dec: BlochDecomposition) -> np.ndarray:
    """Rebuild rho from r, s, T via the bipartite Bloch expansion."""
    t = CorrelationTensor(
        dims=(dec.d1, dec.d2),
        entries=canonical_matrix(dec),
        extended=True,
    )
    return reconstruct(t)
