"""Exhaustive generation of every composition family, in reverse-lexicographic order.

Each family has its own recursive generator that only ever builds members, so
sparse families (the U- and V-fixed points in particular) are produced without
walking all ``2**(n-1)`` compositions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .core import Composition, CompositionError, FamilyId, FamilyKind, part_allowed

DEFAULT_ENUM_CAP = 24
CAP_ENV_VAR = "COMPLAB_ENUM_CAP"


class CapExceededError(CompositionError):
    pass


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise CompositionError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class GeneratorSpec:
    family: FamilyId
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise CompositionError(f"n must be >= 0, got {self.n}")


def _restricted(n: int, f: FamilyId) -> Iterator[tuple[int, ...]]:
    # 1 is allowed by every part-restricted family, so no branch dead-ends
    allowed = [p for p in range(n, 0, -1) if part_allowed(p, f)]
    prefix: list[int] = []

    def rec(m):
        if m == 0:
            yield tuple(prefix)
            return
        for p in allowed:
            if p <= m:
                prefix.append(p)
                yield from rec(m - p)
                prefix.pop()

    yield from rec(n)


def _arndt(n: int, k: int) -> Iterator[tuple[int, ...]]:
    prefix: list[int] = []

    def rec(m):
        if m == 0:
            yield tuple(prefix)
            return
        for a in range(m, 0, -1):
            prefix.append(a)
            if a == m:
                yield tuple(prefix)
            else:
                # second part b of the pair needs a > b + k
                for b in range(min(m - a, a - k - 1), 0, -1):
                    prefix.append(b)
                    yield from rec(m - a - b)
                    prefix.pop()
            prefix.pop()

    yield from rec(n)


def _alternating_ones(n: int, partner_ok) -> Iterator[tuple[int, ...]]:
    """Compositions 1, e1, 1, e2, ... with every even-indexed part passing ``partner_ok``."""
    prefix: list[int] = []

    def rec(m):
        if m == 0:
            yield tuple(prefix)
            return
        prefix.append(1)
        if m == 1:
            yield tuple(prefix)
        else:
            for e in range(m - 1, 1, -1):
                if partner_ok(e):
                    prefix.append(e)
                    yield from rec(m - 1 - e)
                    prefix.pop()
        prefix.pop()

    yield from rec(n)


def iter_parts(family: FamilyId, n: int) -> Iterator[tuple[int, ...]]:
    """Members of ``family`` at ``n`` as plain tuples, in canonical order."""
    if n < 0:
        raise CompositionError(f"n must be >= 0, got {n}")
    kind = family.kind
    if kind is FamilyKind.ARNDT:
        return _arndt(n, family.param)
    if kind is FamilyKind.U_FIXED:
        return _alternating_ones(n, lambda e: e % 2 == 0)
    if kind is FamilyKind.V_FIXED:
        return _alternating_ones(n, lambda e: e % 2 == 1)
    return _restricted(n, family)


def enumerate_compositions(spec: GeneratorSpec) -> Iterator[Composition]:
    for parts in iter_parts(spec.family, spec.n):
        yield Composition(parts)


def compositions(family: FamilyId, n: int) -> list[Composition]:
    return list(enumerate_compositions(GeneratorSpec(family, n)))


def count_by_generation(spec: GeneratorSpec, cap: int | None = None) -> int:
    cap = enumeration_cap() if cap is None else cap
    if spec.n > cap:
        raise CapExceededError(
            f"n={spec.n} exceeds the enumeration cap {cap}; "
            f"use complab.count for large n or raise {CAP_ENV_VAR}"
        )
    return sum(1 for _ in iter_parts(spec.family, spec.n))
