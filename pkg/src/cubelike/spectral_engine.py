"""Spectra and adjacency matrices of weighted cubelike graphs.

A weight vector z of length n = 2**d defines the graph whose adjacency
matrix is A[i][j] = z[i ^ j]: every pair of vertices at XOR-difference h
carries weight z[h], and z[0] sits on the whole diagonal as a loop weight.
All such matrices share the Walsh-Hadamard eigenbasis, and the eigenvalue
attached to character k is the unnormalized Walsh-Hadamard transform of z
at k. Integer weights therefore give exact integer spectra, computed here
with 64-bit integer butterflies instead of a floating-point eigensolver.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolean_domain import DENSE_DIMENSION_LIMIT, check_dimension
from .exceptions import (
    DimensionMismatchError,
    DomainError,
    OverflowGuardError,
    StructureError,
)

_INT64_MAX = np.iinfo(np.int64).max

# Floating-point circulant comparison tolerance; integer matrices compare exactly.
CIRCULANT_TOL = 1e-9


def _normalize_real_vector(values, what: str):
    """Coerce to a fresh 1-D int64 or float64 array; returns (array, integral)."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise DimensionMismatchError(f"{what} must be one-dimensional, got shape {arr.shape}")
    if arr.dtype == object:
        try:
            arr = arr.astype(np.int64)
        except (OverflowError, TypeError, ValueError) as exc:
            raise OverflowGuardError(
                f"{what} entries must be 64-bit integers or floats: {exc}"
            ) from exc
    if np.issubdtype(arr.dtype, np.bool_):
        arr = arr.astype(np.int64)
    if np.issubdtype(arr.dtype, np.integer):
        return arr.astype(np.int64), True
    if np.issubdtype(arr.dtype, np.floating):
        arr = arr.astype(np.float64)
        if arr.size and not np.isfinite(arr).all():
            raise DomainError(f"{what} entries must be finite")
        # Integer-valued floats up to 2**53 are exact; keep them exact.
        if arr.size and np.all(arr == np.floor(arr)) and np.abs(arr).max() <= 2.0**53:
            return arr.astype(np.int64), True
        return arr, False
    raise DomainError(f"{what} entries must be real numbers, got dtype {arr.dtype}")


def _power_of_two_dimension(n: int, what: str) -> int:
    if n < 2 or n & (n - 1):
        raise DimensionMismatchError(
            f"{what} length must be 2**d with d >= 1, got {n}"
        )
    return check_dimension(n.bit_length() - 1)


@dataclass(frozen=True)
class WeightVector:
    """Length-2**d weight vector; values is read-only int64 when integral."""

    d: int
    values: np.ndarray
    integral: bool

    @property
    def n(self) -> int:
        return 1 << self.d

    @classmethod
    def from_values(cls, values) -> "WeightVector":
        pre = np.asarray(values)
        if pre.ndim != 1:
            raise DimensionMismatchError(
                f"weight vector must be one-dimensional, got shape {pre.shape}"
            )
        d = _power_of_two_dimension(pre.size, "weight vector")
        arr, integral = _normalize_real_vector(pre, "weight vector")
        if integral:
            _guard_accumulation(arr, "weight")
        arr.flags.writeable = False
        return cls(d=d, values=arr, integral=integral)


def as_weight_vector(z) -> WeightVector:
    return z if isinstance(z, WeightVector) else WeightVector.from_values(z)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues indexed by group character; values[k] belongs to character k."""

    d: int
    values: np.ndarray
    integral: bool

    @property
    def n(self) -> int:
        return 1 << self.d

    @classmethod
    def from_values(cls, values) -> "Spectrum":
        pre = np.asarray(values)
        if pre.ndim != 1:
            raise DimensionMismatchError(
                f"spectrum must be one-dimensional, got shape {pre.shape}"
            )
        d = _power_of_two_dimension(pre.size, "spectrum")
        arr, integral = _normalize_real_vector(pre, "spectrum")
        if integral and arr.size:
            # Differences of eigenvalues must stay inside int64.
            if arr.max() > _INT64_MAX // 2 or arr.min() < -(_INT64_MAX // 2):
                raise OverflowGuardError(
                    "spectrum entries exceed half the 64-bit range; differences would wrap"
                )
        arr.flags.writeable = False
        return cls(d=d, values=arr, integral=integral)


def as_spectrum(x) -> Spectrum:
    return x if isinstance(x, Spectrum) else Spectrum.from_values(x)


@dataclass(frozen=True)
class WeightedGraph:
    """Dense symmetric adjacency matrix of a weighted cubelike graph."""

    d: int
    matrix: np.ndarray

    @property
    def n(self) -> int:
        return 1 << self.d


def _guard_accumulation(work: np.ndarray, what: str) -> None:
    """Refuse int64 inputs whose length-n signed sums could wrap."""
    n = work.size
    if n < 2:
        return
    limit = _INT64_MAX // n
    if work.max() > limit or work.min() < -limit:
        raise OverflowGuardError(
            f"max |{what}| exceeds {limit} for length {n}; "
            "64-bit accumulation would overflow"
        )


def _transform_last_axis(work: np.ndarray) -> np.ndarray:
    """In-place size-doubling butterfly along the last axis (length 2**d)."""
    n = work.shape[-1]
    half = 1
    while half < n:
        blocks = work.reshape(work.shape[:-1] + (n // (2 * half), 2, half))
        top = blocks[..., 0, :] + blocks[..., 1, :]
        bottom = blocks[..., 0, :] - blocks[..., 1, :]
        blocks[..., 0, :] = top
        blocks[..., 1, :] = bottom
        half *= 2
    return work


def fwht(values) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform of a length-2**d sequence.

    out[k] = sum_l (-1)**popcount(k AND l) * v[l]. Self-inverse up to the
    factor n: fwht(fwht(v)) == n * v. Integer inputs are transformed in
    exact int64 arithmetic; a guard raises instead of wrapping when the
    accumulation bound n * max|v| would exceed the 64-bit range.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise DimensionMismatchError(f"fwht expects a one-dimensional sequence, got shape {arr.shape}")
    n = arr.size
    if n == 0 or n & (n - 1):
        raise DimensionMismatchError(f"fwht length must be a power of two, got {n}")
    work, integral = _normalize_real_vector(arr, "fwht input")
    if integral:
        _guard_accumulation(work, "entry")
    return _transform_last_axis(np.ascontiguousarray(work))


def eigenvalues_from_weights(z) -> Spectrum:
    """Exact spectrum of the weighted cubelike graph generated by z."""
    wv = as_weight_vector(z)
    return Spectrum.from_values(fwht(wv.values))


def adjacency_from_weights(z) -> WeightedGraph:
    """Dense adjacency matrix A[i][j] = z[i ^ j] (limited to d <= 13)."""
    wv = as_weight_vector(z)
    check_dimension(wv.d, DENSE_DIMENSION_LIMIT)
    n = wv.n
    idx = np.arange(n)
    a = np.empty((n, n), dtype=wv.values.dtype)
    for i in range(n):
        a[i] = wv.values[np.bitwise_xor(i, idx)]
    a.flags.writeable = False
    return WeightedGraph(d=wv.d, matrix=a)


def weights_from_adjacency(a) -> WeightVector:
    """Invert adjacency_from_weights: read z off the first row.

    The matrix must satisfy a[i][j] == a[0][i ^ j] for all i, j, which is
    checked row by row (this also forces symmetry). Integer matrices are
    compared exactly, real ones within CIRCULANT_TOL.
    """
    mat = a.matrix if isinstance(a, WeightedGraph) else np.asarray(a)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"adjacency must be square, got shape {mat.shape}")
    n = mat.shape[0]
    _power_of_two_dimension(n, "adjacency")
    idx = np.arange(n)
    exact = np.issubdtype(mat.dtype, np.integer) or mat.dtype == bool
    first_row = mat[0]
    for i in range(n):
        expected = first_row[np.bitwise_xor(i, idx)]
        if exact:
            bad = mat[i] != expected
        else:
            bad = np.abs(mat[i] - expected) > CIRCULANT_TOL
        if bad.any():
            j = int(np.argmax(bad))
            raise StructureError(
                f"matrix is not XOR-circulant at entry ({i}, {j}): "
                f"a[{i}][{j}] = {mat[i, j]} but a[0][{i ^ j}] = {first_row[i ^ j]}"
            )
    return WeightVector.from_values(np.array(first_row, copy=True))


@dataclass(frozen=True)
class StructuralReport:
    """Loop, integrality and parity facts about a weight vector's graph."""

    d: int
    n: int
    loop_weight: float
    loop_free: bool
    integral: bool
    eigenvalue_parity: str | None
    eigenvalue_sum: float


def structural_report(z) -> StructuralReport:
    """Report loop-freeness, integrality and the common eigenvalue parity.

    z[0] == 0 is equivalent to a zero diagonal and to a zero eigenvalue sum;
    the sum always equals n * z[0]. For integer weights all eigenvalues
    share the parity of their sum entry.
    """
    wv = as_weight_vector(z)
    loop = wv.values[0]
    parity = None
    if wv.integral:
        parity = "even" if int(wv.values.sum()) % 2 == 0 else "odd"
    loop_val = int(loop) if wv.integral else float(loop)
    return StructuralReport(
        d=wv.d,
        n=wv.n,
        loop_weight=loop_val,
        loop_free=bool(loop == 0),
        integral=wv.integral,
        eigenvalue_parity=parity,
        eigenvalue_sum=loop_val * wv.n,
    )
