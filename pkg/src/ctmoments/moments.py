"""Moment vectors of correlation objects and their Hankel matrices.

The k-th moment of a matrix with singular values sigma_i is
sum_i sigma_i^k; index 0 holds a conventional ambient value (the number
of rows times columns of the correlation object), not sum sigma^0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import floor, prod

import numpy as np

from .bloch import canonical_matrix, decompose_bipartite
from .errors import InsufficientMoments, NegativeSingularValue
from .linalg import DensityMatrix, _require_bipartite, singular_values

SIGMA_FLOOR = 1e-300


@dataclass(frozen=True)
class MomentVector:
    """Moments a_0, a_1, ..., a_K of a correlation object.

    a_0 is the conventional ambient value, stored separately from the
    power sums so the two are never confused.
    """

    values: np.ndarray = field(repr=False)
    a0_convention: float
    source: str  # "plain" | "canonical"
    dims: tuple[int, ...]

    def __getitem__(self, k: int) -> float:
        return float(self.values[k])

    @property
    def order(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class HankelPair:
    """Hankel matrices H_hat_k and B_hat_l with a_1 replaced by a bound."""

    h_hat: list[np.ndarray]
    b_hat: list[np.ndarray]
    substituted_a1: float


def moment_vector(
    sigmas: np.ndarray,
    K: int,
    a0: float,
    source: str = "plain",
    dims: tuple[int, ...] = (),
) -> MomentVector:
    """Power sums of the singular values up to order K, with a_0 = a0."""
    s = np.asarray(sigmas, dtype=np.float64)
    if np.any(s < 0):
        raise NegativeSingularValue(f"negative singular value in {s}")
    if K < 1:
        raise InsufficientMoments(f"K must be >= 1, got {K}")
    values = np.empty(K + 1)
    values[0] = a0
    mask = s > SIGMA_FLOOR
    logs = np.log(s[mask])
    for k in range(1, K + 1):
        values[k] = float(np.sum(np.exp(k * logs)))
    return MomentVector(values=values, a0_convention=float(a0),
                        source=source, dims=tuple(dims))


def moments_of_state(
    rho: DensityMatrix, canonical: bool, K: int | None = None
) -> MomentVector:
    """Moment vector of T (plain) or of T-tilde (canonical) for a bipartite state.

    K defaults to d1*d2, enough for every Hankel matrix below.
    """
    d1, d2 = _require_bipartite(rho)
    dec = decompose_bipartite(rho)
    if canonical:
        mat = canonical_matrix(dec)
        a0 = float(d1 * d1 * d2 * d2)
        source = "canonical"
    else:
        mat = dec.T
        a0 = float((d1 * d1 - 1) * (d2 * d2 - 1))
        source = "plain"
    if K is None:
        K = d1 * d2
    return moment_vector(singular_values(mat), K, a0, source=source, dims=(d1, d2))


def hankel_matrices(m: MomentVector, substituted_a1: float) -> HankelPair:
    """Build all H_hat_k and B_hat_l from a moment vector.

    [H_k]_{ij} = a_{i+j} for k = 1..floor(D/2), [B_l]_{mn} = a_{m+n+1}
    for l = 1..floor((D-1)/2) with D = d1*d2; every a_1 entry is replaced
    by substituted_a1 (off-diagonal in H, diagonal corner in B).
    """
    D = prod(m.dims) if m.dims else m.order
    if m.order < D:
        raise InsufficientMoments(
            f"need moments up to order {D}, have {m.order}"
        )

    def entry(idx: int) -> float:
        return substituted_a1 if idx == 1 else m[idx]

    h_hat = []
    for k in range(1, floor(D / 2) + 1):
        h = np.array([[entry(i + j) for j in range(k + 1)] for i in range(k + 1)])
        h_hat.append(h)
    b_hat = []
    for l in range(1, floor((D - 1) / 2) + 1):
        b = np.array(
            [[entry(i + j + 1) for j in range(l + 1)] for i in range(l + 1)]
        )
        b_hat.append(b)
    return HankelPair(h_hat=h_hat, b_hat=b_hat,
                      substituted_a1=float(substituted_a1))
