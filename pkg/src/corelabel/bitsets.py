"""Small helpers for int-encoded element sets."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(xs: Iterable[int]) -> int:
    """Pack element indices into a bitset."""
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def lowest(mask: int) -> int:
    """Position of the lowest set bit; mask must be nonzero."""
    return (mask & -mask).bit_length() - 1


def highest(mask: int) -> int:
    """Position of the highest set bit; mask must be nonzero."""
    return mask.bit_length() - 1
