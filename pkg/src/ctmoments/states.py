"""Test-state constructors: Werner family, the tiles PPT state, GHZ/W/Bell,
product states, white-noise mixing, and seeded random state generators."""

from __future__ import annotations

from math import prod, sqrt

import numpy as np

from .errors import ParamOutOfRange, UnnormalizedVector
from .linalg import DensityMatrix

FAMILY_NAMES = (
    "werner",
    "tiles-ppt",
    "ghz",
    "w",
    "pure-product",
    "maximally-mixed",
    "bell",
)


def maximally_mixed(dims) -> DensityMatrix:
    d = prod(dims)
    return DensityMatrix(tuple(dims), np.eye(d, dtype=np.complex128) / d)


def werner(d: int, x: float) -> DensityMatrix:
    """Werner state [(d - x) I + (d x - 1) F] / (d^3 - d), separable iff x >= 0."""
    if d < 2:
        raise ParamOutOfRange(f"werner requires d >= 2, got {d}")
    if not -1.0 <= x <= 1.0:
        raise ParamOutOfRange(f"werner parameter x must lie in [-1, 1], got {x}")
    flip = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            flip[i * d + j, j * d + i] = 1.0
    eye = np.eye(d * d, dtype=np.complex128)
    mat = ((d - x) * eye + (d * x - 1) * flip) / (d**3 - d)
    return DensityMatrix((d, d), mat)


def _ket(*amps) -> np.ndarray:
    v = np.asarray(amps, dtype=np.complex128)
    return v / np.linalg.norm(v)


def tiles_ppt() -> DensityMatrix:
    """The 3x3 bound entangled state (I_9 - sum of five tile projectors) / 4."""
    e = np.eye(3, dtype=np.complex128)
    chis = [
        np.kron(e[0], _ket(1, -1, 0)),
        np.kron(_ket(1, -1, 0), e[2]),
        np.kron(e[2], _ket(0, 1, -1)),
        np.kron(_ket(0, 1, -1), e[0]),
        np.kron(_ket(1, 1, 1), _ket(1, 1, 1)),
    ]
    mat = np.eye(9, dtype=np.complex128)
    for chi in chis:
        mat -= np.outer(chi, chi.conj())
    return DensityMatrix((3, 3), mat / 4.0)


def mix_white_noise(rho: DensityMatrix, x: float) -> DensityMatrix:
    """x * rho + (1 - x)/D * I; x = 0 is maximally mixed, x = 1 is rho."""
    if not 0.0 <= x <= 1.0:
        raise ParamOutOfRange(f"noise parameter x must lie in [0, 1], got {x}")
    d = rho.dim
    mat = x * rho.mat + (1.0 - x) / d * np.eye(d, dtype=np.complex128)
    return DensityMatrix(rho.dims, mat)


def pure_product(vectors) -> DensityMatrix:
    """Projector onto the tensor product of the given unit vectors."""
    dims = []
    full = np.array([1.0], dtype=np.complex128)
    for v in vectors:
        v = np.asarray(v, dtype=np.complex128)
        norm = np.linalg.norm(v)
        if abs(norm - 1.0) > 1e-12:
            raise UnnormalizedVector(f"vector norm {norm} differs from 1")
        dims.append(len(v))
        full = np.kron(full, v)
    return DensityMatrix(tuple(dims), np.outer(full, full.conj()))


def ghz(n: int = 3) -> DensityMatrix:
    """Projector onto (|0...0> + |1...1>) / sqrt(2) on n qubits."""
    if n < 2:
        raise ParamOutOfRange(f"ghz requires n >= 2, got {n}")
    v = np.zeros(2**n, dtype=np.complex128)
    v[0] = v[-1] = 1.0 / sqrt(2.0)
    return DensityMatrix((2,) * n, np.outer(v, v.conj()))


def w_state(n: int = 3) -> DensityMatrix:
    """Projector onto the equal superposition of single-excitation basis states."""
    if n < 2:
        raise ParamOutOfRange(f"w requires n >= 2, got {n}")
    v = np.zeros(2**n, dtype=np.complex128)
    for k in range(n):
        v[1 << k] = 1.0 / sqrt(n)
    return DensityMatrix((2,) * n, np.outer(v, v.conj()))


def bell() -> DensityMatrix:
    return ghz(2)


def random_pure_state(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return v / np.linalg.norm(v)


def random_pure_product(dims, rng: np.random.Generator) -> DensityMatrix:
    return pure_product([random_pure_state(d, rng) for d in dims])


def random_separable(
    dims, rng: np.random.Generator, max_terms: int = 10
) -> DensityMatrix:
    """Convex mixture of random pure products with Dirichlet-uniform weights."""
    m = int(rng.integers(1, max_terms + 1))
    weights = rng.dirichlet(np.ones(m))
    d = prod(dims)
    mat = np.zeros((d, d), dtype=np.complex128)
    for w in weights:
        mat += w * random_pure_product(dims, rng).mat
    return DensityMatrix(tuple(dims), mat)


def random_density(dims, rng: np.random.Generator) -> DensityMatrix:
    """Ginibre-induced random density matrix on the full space."""
    d = prod(dims)
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    mat = g @ g.conj().T
    mat /= np.trace(mat).real
    return DensityMatrix(tuple(dims), mat)
