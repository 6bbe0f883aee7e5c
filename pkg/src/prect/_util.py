"""Small shared helpers for bitmask graph and incidence work."""

from __future__ import annotations


def iter_bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def comb2(n: int) -> int:
    return n * (n - 1) // 2
