"""Bit-mask helpers for subsets of a carrier 0..n-1.

Subsets are plain Python ints with bit i standing for point i.  All hot
loops in the package work on these masks directly.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> list[int]:
    return list(bits(mask))


def bit_reversed(mask: int, n: int) -> int:
    """Value of ``mask`` with its low n bits read in reverse order.

    Sorting masks by this key equals sorting their '0'/'1' strings written
    lowest bit first, which is the row order of the canonical matrix
    encoding.
    """
    out = 0
    for y in range(n):
        if (mask >> y) & 1:
            out |= 1 << (n - 1 - y)
    return out
