"""Built-in reference table: weight vectors with known spectra and pairs.

Each case records the exact integer spectrum and the transfer pairs in
1-based vertex labels (self-pairs (i, i) mark periodic cases). The table
doubles as the regression fixture for the `table` CLI command and the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceCase:
    index: int
    d: int
    weights: tuple[int, ...]
    eigenvalues: tuple[int, ...]
    pairs_one_based: tuple[tuple[int, int], ...]


def _self_pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, i) for i in range(1, n + 1))


REFERENCE_TABLE: tuple[ReferenceCase, ...] = (
    ReferenceCase(
        index=1,
        d=2,
        weights=(0, 1, -7, -10),
        eigenvalues=(-16, 2, 18, -4),
        pairs_one_based=((1, 4), (2, 3)),
    ),
    ReferenceCase(
        index=2,
        d=2,
        weights=(0, 50, -10, -3),
        eigenvalues=(37, -57, 63, -43),
        pairs_one_based=((1, 4), (2, 3)),
    ),
    ReferenceCase(
        index=3,
        d=3,
        weights=(0, 3, 1, 4, -6, 0, -1, 10),
        eigenvalues=(11, -23, -17, 5, 5, 11, 13, -5),
        pairs_one_based=((1, 6), (2, 5), (3, 8), (4, 7)),
    ),
    ReferenceCase(
        index=4,
        d=3,
        weights=(0, 2, 3, 4, 5, 6, 5, 4),
        eigenvalues=(29, -3, -3, -3, -11, -3, -7, 1),
        pairs_one_based=_self_pairs(8),
    ),
    ReferenceCase(
        index=5,
        d=3,
        weights=(0, -72, 38, 93, 100, -86, -91, -42),
        eigenvalues=(-60, 154, -56, 362, 178, -120, -350, -108),
        pairs_one_based=((1, 6), (2, 5), (3, 8), (4, 7)),
    ),
    ReferenceCase(
        index=6,
        d=4,
        weights=(0, 5, -1, -4, -1, 5, 3, 2, -8, 10, -8, -4, -8, 1, 7, -1),
        eigenvalues=(-2, -30, 10, -46, -18, -18, 38, 2, 20, 16, 8, 16, 0, 24, -16, -4),
        pairs_one_based=tuple((i, i + 8) for i in range(1, 9)),
    ),
    ReferenceCase(
        index=7,
        d=4,
        weights=(0, -83, -80, -35, 65, 64, -31, -50, 94, 5, 97, -60, -92, -25, -5, 24),
        eigenvalues=(
            -112, 208, 168, 4, -12, 360, 20, 116,
            -188, -92, 316, 216, -480, -324, -376, 176,
        ),
        pairs_one_based=_self_pairs(16),
    ),
    ReferenceCase(
        index=8,
        d=4,
        weights=(0, -30, 99, 5, 46, -85, -19, 100, 83, -10, -43, -4, 59, 60, 29, 22),
        eigenvalues=(
            312, 196, -66, 310, -112, 160, 38, -174,
            -80, 76, -442, 62, 176, 64, -66, -454,
        ),
        pairs_one_based=(
            (1, 3), (2, 4), (5, 7), (6, 8),
            (9, 11), (10, 12), (13, 15), (14, 16),
        ),
    ),
    ReferenceCase(
        index=9,
        d=5,
        weights=(
            0, -10, -5, 0, -7, -7, -5, 2, -1, -3, -3, -9, -7, 3, 6, -8,
            -5, 5, 0, 4, 3, 9, 2, 10, 1, 7, 8, -3, 8, -3, -2, -8,
        ),
        eigenvalues=(
            -18, 4, 4, -22, -10, 4, 0, -2, 10, -64, -44, 58, -26, 20, 4, 2,
            -90, 16, -24, 10, -6, 28, 32, 58, -30, 36, 0, 42, 50, -4, -12, -26,
        ),
        pairs_one_based=(
            (1, 4), (2, 3), (5, 8), (6, 7),
            (9, 12), (10, 11), (13, 16), (14, 15),
            (17, 20), (18, 19), (21, 24), (22, 23),
            (25, 28), (26, 27), (29, 32), (30, 31),
        ),
    ),
)
