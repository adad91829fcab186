"""Brute-force counting of restricted set partitions.

Partitions of [n] are walked as restricted-growth strings (element i gets a
block label at most one more than the largest label used so far).  The
restriction intervals are laid out in the order given, so a non-sorted
layout can be checked against the canonical one.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

COUNT_GUARD = 14
ENUMERATE_GUARD = 10


def count_guard() -> int:
    return int(os.environ.get("RPBELL_ENUM_GUARD", COUNT_GUARD))


@dataclass(frozen=True)
class PartitionSpec:
    """Ground set [n], restriction interval sizes in layout order, optional block count."""

    n: int
    parts: tuple[int, ...] = ()
    blocks: Optional[int] = None

    def __init__(self, n: int, parts: Sequence[int] = (), blocks: Optional[int] = None):
        parts = tuple(int(x) for x in parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"restriction parts must be >= 1, got {parts}")
        if n < sum(parts):
            raise ValueError(f"n = {n} is smaller than |r| = {sum(parts)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "blocks", blocks)

    def groups(self) -> list[int]:
        """Group id per element (0-based); -1 for unrestricted elements."""
        out = []
        for g, size in enumerate(self.parts):
            out.extend([g] * size)
        out.extend([-1] * (self.n - len(out)))
        return out


def _walk(spec: PartitionSpec) -> Iterator[tuple[int, ...]]:
    n, k = spec.n, spec.blocks
    groups = spec.groups()
    labels = [0] * n
    block_groups: list[int] = []  # bitmask of restriction groups present per block

    def rec(i: int, used: int):
        if k is not None and used + (n - i) < k:
            return
        if i == n:
            if k is None or used == k:
                yield tuple(labels)
            return
        g = groups[i]
        bit = 1 << g if g >= 0 else 0
        top = used if k is None else min(used, k - 1)
        for b in range(top + 1):
            if b < used:
                if block_groups[b] & bit:
                    continue
                labels[i] = b
                block_groups[b] |= bit
                yield from rec(i + 1, used)
                block_groups[b] &= ~bit
            else:
                labels[i] = b
                block_groups.append(bit)
                yield from rec(i + 1, used + 1)
                block_groups.pop()

    yield from rec(0, 0)


def enumerate_partitions(spec: PartitionSpec) -> Iterator[tuple[int, ...]]:
    """Admissible restricted-growth strings in lexicographic order."""
    if spec.n > ENUMERATE_GUARD:
        raise ValueError(f"enumeration guard is n <= {ENUMERATE_GUARD}, got {spec.n}")
    return _walk(spec)


def count_partitions(spec: PartitionSpec) -> int:
    guard = count_guard()
    if spec.n > guard:
        raise ValueError(f"counting guard is n <= {guard}, got {spec.n}")
    return sum(1 for _ in _walk(spec))


def count_by_blocks(n: int, parts: Sequence[int] = ()) -> list[int]:
    """Admissible partition counts for every block count 0..n in one sweep."""
    spec = PartitionSpec(n, parts)
    guard = count_guard()
    if n > guard:
        raise ValueError(f"counting guard is n <= {guard}, got {n}")
    counts = [0] * (n + 1)
    for rgs in _walk(spec):
        counts[(max(rgs) + 1) if rgs else 0] += 1
    return counts
