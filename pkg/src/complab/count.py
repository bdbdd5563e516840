"""Exact counts for every family: memoised recurrences plus an independent part-DP.

Counts are Python ints throughout, so nothing overflows. Each family owns a
growing series ``s[0], s[1], ...`` that is extended under a lock, which keeps
a value computed once and read-only afterwards even with concurrent callers.
"""

from __future__ import annotations

import threading
from typing import Callable

from .core import (
    U_FIXED,
    V_FIXED,
    CompositionError,
    FamilyId,
    FamilyKind,
    arndt,
    even_restricted,
    odd_restricted,
    part_allowed,
)
from .generate import iter_parts


class UnsupportedFamilyError(CompositionError):
    pass


Step = Callable[[list, int], int]


class CountTable:
    """Memo of (series key, n) -> count, grown on demand."""

    def __init__(self):
        # seeding steps call back into the table, so the lock must be reentrant
        self._lock = threading.RLock()
        self._series: dict[object, list[int]] = {}

    def value(self, key, n: int, step: Step) -> int:
        s = self._series.get(key)
        if s is not None and n < len(s):
            return s[n]
        with self._lock:
            s = self._series.setdefault(key, [])
            while len(s) <= n:
                s.append(step(s, len(s)))
            return s[n]

    def entries(self) -> dict[tuple[object, int], int]:
        with self._lock:
            return {(key, n): v for key, s in self._series.items() for n, v in enumerate(s)}

    def clear(self) -> None:
        with self._lock:
            self._series.clear()


TABLE = CountTable()


def _check_n(n: int) -> None:
    if n < 0:
        raise CompositionError(f"n must be >= 0, got {n}")


def fibonacci(n: int) -> int:
    _check_n(n)

    def step(s, m):
        return m if m < 2 else s[m - 1] + s[m - 2]

    return TABLE.value("fibonacci", n, step)


def restricted_family_for(k: int) -> FamilyId:
    """The part-restricted family equinumerous with A(n, k) for k <= 0."""
    if k > 0:
        raise CompositionError(f"no part-restricted counterpart for k={k} > 0")
    return odd_restricted(-k) if k % 2 == 0 else even_restricted(-k)


def count_restricted_dp(n: int, f: FamilyId) -> int:
    """Compositions of n into allowed parts: c(m) = sum over allowed p <= m of c(m - p)."""
    _check_n(n)
    if f.kind not in (FamilyKind.ALL, FamilyKind.ODD_RESTRICTED, FamilyKind.EVEN_RESTRICTED):
        raise UnsupportedFamilyError(
            f"family {f} is not characterised by its parts; use count_arndt or count_fixed"
        )

    def step(s, m):
        if m == 0:
            return 1
        return sum(s[m - p] for p in range(1, m + 1) if part_allowed(p, f))

    return TABLE.value(("dp", f), n, step)


def count_arndt(n: int, k: int) -> int:
    """|A(n, k)| by the length-parity recurrence, seeded below its validity window."""
    _check_n(n)
    if k <= 0:
        seed_family = restricted_family_for(k)
        # at k = 0, n = 2 the recurrence would read a(0) = 1 twice; start at 3
        window = max(2 - k, 3)

        def step(s, m):
            if m < window:
                return count_restricted_dp(m, seed_family)
            return s[m - 1] + 2 * s[m - 2] - s[m - 2 + k]
    else:
        fam = arndt(k)

        def step(s, m):
            if m < 3 + k:
                return sum(1 for _ in iter_parts(fam, m))
            return s[m - 1] + s[m - 2] - s[m - 3] + s[m - 3 - k]

    return TABLE.value(("arndt", k), n, step)


def count_split(n: int, k: int) -> tuple[int, int]:
    """(odd-length, even-length) counts of A(n, k) for k < 0."""
    if k >= 0:
        raise CompositionError(f"count_split needs k < 0, got k={k}")
    if n < 2 - k:
        raise CompositionError(f"count_split needs n >= 2 - k = {2 - k}, got n={n}")
    odd = count_arndt(n - 1, k)
    even = 2 * count_arndt(n - 2, k) - count_arndt(n - 2 + k, k)
    return odd, even


def count_fixed(n: int, which: FamilyId) -> int:
    """Number of fixed points of U (Padovan) or V (doubled Fibonacci) in C(n)."""
    if n <= 0:
        raise CompositionError(f"fixed-point counts start at n=1, got n={n}")
    if which == U_FIXED:
        initial, lags = (1, 1, 0, 1), (2, 3)
    elif which == V_FIXED:
        initial, lags = (1, 1, 0, 0, 1), (2, 4)
    else:
        raise UnsupportedFamilyError(f"count_fixed takes ufixed or vfixed, not {which}")

    def step(s, m):
        if m < len(initial):
            return initial[m]
        return s[m - lags[0]] + s[m - lags[1]]

    return TABLE.value(("fixed", which), n, step)


def count(f: FamilyId, n: int) -> int:
    """Size of family ``f`` at ``n`` using the fastest applicable counter."""
    _check_n(n)
    kind = f.kind
    if kind is FamilyKind.ALL:
        return 1 if n == 0 else 1 << (n - 1)
    if kind is FamilyKind.ARNDT:
        return count_arndt(n, f.param)
    if kind in (FamilyKind.U_FIXED, FamilyKind.V_FIXED):
        return 1 if n == 0 else count_fixed(n, f)
    return count_restricted_dp(n, f)


def sequence(f: FamilyId, n_max: int) -> list[int]:
    if n_max < 1:
        raise CompositionError(f"n_max must be >= 1, got {n_max}")
    return [count(f, n) for n in range(1, n_max + 1)]

