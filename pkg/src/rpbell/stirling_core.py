"""Classical and Broder r-Stirling numbers from their triangular recurrences.

Each family lives in a :class:`StirlingTable` grown row by row on demand.
First-kind numbers are unsigned throughout; callers apply signs themselves.
"""
from __future__ import annotations

import threading
from typing import Dict, List, Tuple

KINDS = ("second", "first_unsigned", "r_second", "r_first_unsigned")


class StirlingTable:
    """Memoized triangle ``rows[n][k]`` for one (kind, r).

    For the r-kinds the triangle starts at row ``r`` with a single 1 at
    ``k = r``; classical kinds are the ``r = 0`` case of the same recurrences.
    Entries with ``k`` outside ``0..n`` read as 0.
    """

    def __init__(self, kind: str, r: int = 0):
        if kind not in KINDS:
            raise ValueError(f"unknown Stirling kind {kind!r}")
        if r < 0:
            raise ValueError(f"r must be nonnegative, got {r}")
        if kind in ("second", "first_unsigned") and r != 0:
            raise ValueError(f"kind {kind!r} takes r = 0")
        self.kind = kind
        self.r = r
        self._second = kind in ("second", "r_second")
        self.rows: List[Tuple[int, ...]] = [tuple([0] * r + [1])]  # row n = r
        self._lock = threading.Lock()

    def _extend_to(self, n: int) -> None:
        with self._lock:
            while self.r + len(self.rows) - 1 < n:
                prev = self.rows[-1]
                m = self.r + len(self.rows) - 1  # index of prev
                row = [0] * (m + 2)
                for k in range(m + 2):
                    up = prev[k] if k <= m else 0
                    diag = prev[k - 1] if k >= 1 else 0
                    mult = k if self._second else m
                    row[k] = mult * up + diag
                self.rows.append(tuple(row))

    def row(self, n: int) -> Tuple[int, ...]:
        if n < self.r:
            raise ValueError(f"n = {n} is smaller than r = {self.r}")
        self._extend_to(n)
        return self.rows[n - self.r]

    def __call__(self, n: int, k: int) -> int:
        if k < 0:
            return 0
        row = self.row(n)
        return row[k] if k < len(row) else 0


_TABLES: Dict[Tuple[str, int], StirlingTable] = {}
_TABLES_LOCK = threading.Lock()


def get_table(kind: str, r: int = 0) -> StirlingTable:
    key = (kind, r)
    table = _TABLES.get(key)
    if table is None:
        with _TABLES_LOCK:
            table = _TABLES.setdefault(key, StirlingTable(kind, r))
    return table


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k nonempty blocks."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return get_table("second")(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Coefficient of u**k in u(u+1)...(u+n-1)."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return get_table("first_unsigned")(n, k)


def r_stirling2(n: int, k: int, r: int) -> int:
    """Partitions of [n] into k blocks with 1..r in distinct blocks."""
    if n < r:
        raise ValueError(f"r-Stirling number needs n >= r, got n={n}, r={r}")
    return get_table("r_second" if r else "second", r)(n, k)


def r_stirling1_unsigned(n: int, k: int, r: int) -> int:
    """Unsigned r-Stirling numbers of the first kind.

    sum_k [n+r, k+r]_r x**k = (x + r)(x + r + 1)...(x + r + n - 1).
    """
    if n < r:
        raise ValueError(f"r-Stirling number needs n >= r, got n={n}, r={r}")
    return get_table("r_first_unsigned" if r else "first_unsigned", r)(n, k)


def bell_number(n: int) -> int:
    return sum(get_table("second").row(n))
