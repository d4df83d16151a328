"""Classification of integer-weighted cubelike graphs at t = pi/2.

Every integer weight vector yields a graph that either admits perfect
state transfer at t = pi/2 or is periodic with period dividing pi/2. The
transfer offset sigma is read off eigenvalue parities: bit j of sigma is
set exactly when half the difference between the eigenvalue at character
index 2**j and the eigenvalue at index 0 is odd. A nonzero sigma splits
the vertex set into n/2 transfer pairs {u, u ^ sigma}; sigma = 0 means
every vertex returns to itself. The same offset is also computed directly
from the weights (bit j is the parity of the sum of z over indices with
bit j set), and classify cross-checks the two routes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .boolean_domain import GroupElement
from .exceptions import ConsistencyError, DimensionMismatchError, DomainError, ParityError
from .spectral_engine import as_spectrum, as_weight_vector, eigenvalues_from_weights

TRANSFER_TIME = math.pi / 2


class TransferKind(enum.Enum):
    PERIODIC = "periodic"
    PERFECT_STATE_TRANSFER = "perfect_state_transfer"


@dataclass(frozen=True)
class PstResult:
    """Outcome of classify: periodic, or PST with the full pair partition.

    kind is PERIODIC exactly when sigma is the zero element; otherwise
    pairs holds n/2 rows (u, u ^ sigma) covering every vertex once.
    """

    sigma: GroupElement
    kind: TransferKind
    pairs: np.ndarray | None
    time: float = field(default=TRANSFER_TIME)

    def __post_init__(self):
        if not isinstance(self.sigma, GroupElement):
            raise DimensionMismatchError("sigma must be a GroupElement")
        if not math.isfinite(self.time):
            raise DomainError("transfer time must be finite")
        n = 1 << self.sigma.dim
        if self.sigma.bits == 0:
            if self.kind is not TransferKind.PERIODIC:
                raise ConsistencyError("sigma = 0 must classify as periodic")
            if self.pairs is not None:
                raise ConsistencyError("periodic results carry no pair partition")
            return
        if self.kind is not TransferKind.PERFECT_STATE_TRANSFER:
            raise ConsistencyError("nonzero sigma must classify as perfect state transfer")
        arr = np.asarray(self.pairs, dtype=np.int64)
        if arr.ndim != 2 or arr.shape != (n // 2, 2):
            raise ConsistencyError(
                f"pair partition must have shape ({n // 2}, 2), got {arr.shape}"
            )
        if np.any(np.bitwise_xor(arr[:, 0], arr[:, 1]) != self.sigma.bits):
            raise ConsistencyError("every pair must satisfy u ^ v == sigma")
        seen = np.sort(arr.ravel())
        if np.any(seen != np.arange(n)):
            raise ConsistencyError("pairs must cover every vertex exactly once")
        arr = np.array(arr, copy=True)
        arr.flags.writeable = False
        object.__setattr__(self, "pairs", arr)

    @property
    def n(self) -> int:
        return 1 << self.sigma.dim


def sigma_from_spectrum(spectrum) -> GroupElement:
    """Transfer offset from an integer spectrum.

    Requires every difference lambda[k] - lambda[0] to be even. After the
    d defining bits are read at indices 2**j, the parity pattern of all n
    halved differences is checked against the character of sigma; a
    mismatch means the spectrum is not the transform of any integer weight
    vector.
    """
    spec = as_spectrum(spectrum)
    if not spec.integral:
        raise DomainError("classification needs an integer spectrum")
    lam = spec.values
    diffs = lam - lam[0]
    odd = (diffs & 1) != 0
    if odd.any():
        k = int(np.argmax(odd))
        raise ParityError(
            f"eigenvalue difference at index {k} is odd ({int(diffs[k])}); "
            "not the spectrum of an integer weight vector"
        )
    half_odd = (diffs >> 1) & 1
    sigma = 0
    for j in range(spec.d):
        if half_odd[1 << j]:
            sigma |= 1 << j
    idx = np.arange(spec.n, dtype=np.int64)
    wanted = np.bitwise_count(np.bitwise_and(idx, sigma)).astype(np.int64) & 1
    bad = half_odd != wanted
    if bad.any():
        k = int(np.argmax(bad))
        raise ConsistencyError(
            f"halved-difference parities do not match any group character "
            f"(first mismatch at index {k}); the spectrum did not come from "
            "an integer weight vector"
        )
    return GroupElement(sigma, spec.d)


def sigma_from_weights(z) -> GroupElement:
    """Transfer offset straight from the weights, no transform needed.

    Bit j of sigma is the parity of the sum of z[l] over indices l whose
    bit j is set. Agrees with sigma_from_spectrum(fwht(z)) for every
    integer weight vector.
    """
    wv = as_weight_vector(z)
    if not wv.integral:
        raise DomainError("transfer offset needs integer weights")
    parities = (wv.values & 1).astype(np.int64)
    idx = np.arange(wv.n, dtype=np.int64)
    sigma = 0
    for j in range(wv.d):
        if int(parities[(idx & (1 << j)) != 0].sum()) & 1:
            sigma |= 1 << j
    return GroupElement(sigma, wv.d)


def classify(z) -> PstResult:
    """Decide PST vs periodicity at t = pi/2 and enumerate the pairs.

    sigma is computed along both routes (spectrum parities and weight
    sums) and the two must agree. Pairs are listed with u < u ^ sigma,
    ascending in u. The loop weight z[0] shifts every eigenvalue equally,
    so it never changes the outcome.
    """
    wv = as_weight_vector(z)
    if not wv.integral:
        raise DomainError("classification needs integer weights")
    spectrum = eigenvalues_from_weights(wv)
    via_spectrum = sigma_from_spectrum(spectrum)
    via_weights = sigma_from_weights(wv)
    if via_spectrum != via_weights:
        raise ConsistencyError(
            f"sigma routes disagree: spectrum gave {via_spectrum.bits}, "
            f"weights gave {via_weights.bits}"
        )
    sigma = via_spectrum
    if sigma.bits == 0:
        return PstResult(sigma=sigma, kind=TransferKind.PERIODIC, pairs=None)
    idx = np.arange(wv.n, dtype=np.int64)
    partners = np.bitwise_xor(idx, sigma.bits)
    lower = idx[idx < partners]
    pairs = np.stack((lower, np.bitwise_xor(lower, sigma.bits)), axis=1)
    return PstResult(sigma=sigma, kind=TransferKind.PERFECT_STATE_TRANSFER, pairs=pairs)
