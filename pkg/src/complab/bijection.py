"""Explicit bijections between composition families, each with its inverse.

All maps work pairwise on the padded pair view or blockwise on the run
decomposition. The tuple-level helpers (``u_parts`` and friends) skip
validation and are what the verification harness iterates; the public
functions take and return :class:`Composition`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .core import (
    U_FIXED,
    V_FIXED,
    Composition,
    TERMINAL_ONE,
    PreconditionError,
    arndt_violation,
    is_member,
    pairs_of,
    runs_of,
)

Parts = tuple[int, ...]


def _ones(j: int) -> list[int]:
    return [1] * j


# ---------------------------------------------------------------------------
# Arndt compositions <-> odd-part compositions
# ---------------------------------------------------------------------------


def arndt_to_odd_parts(parts: Sequence[int]) -> Parts:
    out: list[int] = []
    for a, b in pairs_of(parts):
        out += _ones(a - b - 1)
        out.append(2 * b + 1)
    return tuple(out)


def odd_to_arndt_parts(parts: Sequence[int]) -> Parts:
    out: list[int] = []
    for ones, closer in runs_of(parts):
        b = (closer - 1) // 2
        out.append(ones + b + 1)
        if b:
            out.append(b)
    return tuple(out)


def arndt_to_odd(c: Composition) -> Composition:
    bad = arndt_violation(c.parts, 0)
    if bad is not None:
        i, (a, b) = bad
        raise PreconditionError(f"{c} is not an Arndt composition: pair {i} is ({a}, {b}) and {a} <= {b}")
    return Composition(arndt_to_odd_parts(c.parts))


def odd_to_arndt(c: Composition) -> Composition:
    for i, p in enumerate(c.parts):
        if p % 2 == 0:
            raise PreconditionError(f"{c} has even part {p} at index {i}; expected odd parts only")
    return Composition(odd_to_arndt_parts(c.parts))


# ---------------------------------------------------------------------------
# The permutations U and V of C(n)
# ---------------------------------------------------------------------------


def u_parts(parts: Sequence[int]) -> Parts:
    out: list[int] = []
    for a, b in pairs_of(parts):
        d = b - a
        if d < 0:
            out += _ones(a - b - 1)
            out.append(2 * b + 1)
        else:
            k = d // 2 + 1
            out += _ones(a + b - 2 * k)
            out.append(2 * k)
    return tuple(out)


def u_inverse_parts(parts: Sequence[int]) -> Parts:
    out: list[int] = []
    for j, ell in runs_of(parts):
        if ell % 2:
            m = (ell + 1) // 2
            out.append(j + m)
            if m > 1:
                out.append(m - 1)
        else:
            m = ell // 2
            k = (j + 1) // 2
            first = k + 1 if j % 2 == 0 else k
            out += [first, k + 2 * m - 1]
    return tuple(out)


def v_parts(parts: Sequence[int]) -> Parts:
    out: list[int] = []
    for a, b in pairs_of(parts):
        d = b - a
        if d < 1:
            out += _ones(a - b)
            if b:
                out.append(2 * b)
        else:
            k = (d + 1) // 2
            out += _ones(a + b - 2 * k - 1)
            out.append(2 * k + 1)
    return tuple(out)


def v_inverse_parts(parts: Sequence[int]) -> Parts:
    out: list[int] = []
    blocks = runs_of(parts)
    for i, (j, ell) in enumerate(blocks):
        if ell == TERMINAL_ONE and i == len(blocks) - 1:
            # V only emits trailing ones from a final (a, 0) pair, which became 1^a
            out.append(j + 1)
        elif ell % 2 == 0:
            m = ell // 2
            out += [j + m, m]
        else:
            m = (ell + 1) // 2
            k = (j + 1) // 2
            first = k + 1 if j % 2 == 0 else k
            out += [first, k + 2 * m - 2]
    return tuple(out)


def u_forward(c: Composition) -> Composition:
    return Composition(u_parts(c.parts))


def u_inverse(c: Composition) -> Composition:
    return Composition(u_inverse_parts(c.parts))


def v_forward(c: Composition) -> Composition:
    return Composition(v_parts(c.parts))


def v_inverse(c: Composition) -> Composition:
    return Composition(v_inverse_parts(c.parts))


# ---------------------------------------------------------------------------
# Fixed-point recurrences
# ---------------------------------------------------------------------------


class FixedSource(NamedTuple):
    """A fixed point of U or V tagged with how far below the target size it sits."""

    value: Composition
    offset: int


def u_fixed_expand(src: FixedSource) -> Composition:
    """C^U(n-2) and C^U(n-3) onto C^U(n)."""
    c, offset = src
    if not is_member(c, U_FIXED) or not c.parts:
        raise PreconditionError(f"{c} is not a nonempty U-fixed composition")
    parts = list(c.parts)
    if offset == 3:
        parts += [1, 2] if len(parts) % 2 == 0 else [2, 1]
    elif offset == 2:
        if len(parts) < 2:
            raise PreconditionError(f"{c} has no even-indexed part to increase")
        last_even = len(parts) - 1 if len(parts) % 2 == 0 else len(parts) - 2
        parts[last_even] += 2
    else:
        raise PreconditionError(f"U-fixed sources come from n-2 or n-3, not n-{offset}")
    return Composition(tuple(parts))


def u_fixed_reduce(c: Composition) -> FixedSource:
    if not is_member(c, U_FIXED):
        raise PreconditionError(f"{c} is not U-fixed")
    if c.n < 4:
        raise PreconditionError(f"U-fixed reduction needs n >= 4, got n={c.n}")
    parts = list(c.parts)
    last_even = len(parts) - 1 if len(parts) % 2 == 0 else len(parts) - 2
    if parts[last_even] >= 4:
        parts[last_even] -= 2
        return FixedSource(Composition(tuple(parts)), 2)
    # last even part is 2; it and the 1 next to it are the final two parts
    return FixedSource(Composition(tuple(parts[:-2])), 3)


def v_fixed_expand(src: FixedSource) -> Composition:
    """C^V(2j) onto C^V(2j+1) (offset 1); C^V(2j-2) and C^V(2j-4) onto C^V(2j)."""
    c, offset = src
    if not is_member(c, V_FIXED) or c.n % 2:
        raise PreconditionError(f"{c} is not a V-fixed composition of an even number")
    parts = list(c.parts)
    if offset == 1:
        parts.append(1)
    elif offset == 4:
        parts += [1, 3]
    elif offset == 2:
        if not parts:
            raise PreconditionError("the empty composition has no last part to increase")
        parts[-1] += 2
    else:
        raise PreconditionError(f"V-fixed sources come from n-1, n-2 or n-4, not n-{offset}")
    return Composition(tuple(parts))


def v_fixed_reduce(c: Composition) -> FixedSource:
    if not is_member(c, V_FIXED) or not c.parts:
        raise PreconditionError(f"{c} is not a nonempty V-fixed composition")
    parts = c.parts
    if c.n % 2:
        return FixedSource(Composition(parts[:-1]), 1)
    if parts[-1] >= 5:
        return FixedSource(Composition(parts[:-1] + (parts[-1] - 2,)), 2)
    return FixedSource(Composition(parts[:-2]), 4)


# ---------------------------------------------------------------------------
# Length-parity split of A(n, k)
# ---------------------------------------------------------------------------


class Direction(Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


def _require_arndt(c: Composition, k: int) -> None:
    bad = arndt_violation(c.parts, k)
    if bad is not None:
        i, (a, b) = bad
        raise PreconditionError(f"{c} is not in A(n,{k}): pair {i} is ({a}, {b}) and {a} <= {b} + {k}")


def odd_length_step(c: Composition, k: int, direction: Direction | str = Direction.FORWARD) -> Composition:
    """A^o(n, k) onto A(n-1, k) by taking one from the last part; inverse adds it back."""
    direction = Direction(direction)
    _require_arndt(c, k)
    parts = list(c.parts)
    if direction is Direction.FORWARD:
        if len(parts) % 2 == 0:
            raise PreconditionError(f"{c} has even length; forward step needs odd length")
        parts[-1] -= 1
        if parts[-1] == 0:
            parts.pop()
    elif len(parts) % 2:
        parts[-1] += 1
    else:
        parts.append(1)
    return Composition(tuple(parts))


class Origin(Enum):
    EVEN_PART = "even"
    SHIFT_PART = "shift"


@dataclass(frozen=True)
class SplitSource:
    """An element of A^e(n, k) (EVEN_PART) or of A(n-2+k, k) (SHIFT_PART)."""

    origin: Origin
    value: Composition


@dataclass(frozen=True)
class TwoCopyElement:
    copy: int
    value: Composition

    def __post_init__(self):
        if self.copy not in (1, 2):
            raise PreconditionError(f"copy must be 1 or 2, got {self.copy}")


def _require_negative(k: int) -> None:
    if k >= 0:
        raise PreconditionError(f"the even-length step is defined for k < 0, got k={k}")


def even_length_step(src: SplitSource, k: int) -> TwoCopyElement:
    """A^e(n, k) and A(n-2+k, k) onto two copies of A(n-2, k)."""
    _require_negative(k)
    c = src.value
    _require_arndt(c, k)
    parts = list(c.parts)
    if src.origin is Origin.EVEN_PART:
        if not parts or len(parts) % 2:
            raise PreconditionError(f"{c} must have positive even length")
        copy = 1 if parts[-2] > 1 else 2
        parts[-2] -= 1
        parts[-1] -= 1
        parts = [p for p in parts if p]
        return TwoCopyElement(copy, Composition(tuple(parts)))
    if len(parts) % 2:
        parts[-1] -= k
    else:
        parts.append(-k)
    return TwoCopyElement(2, Composition(tuple(parts)))


def even_length_step_inverse(e: TwoCopyElement, k: int, n: int) -> SplitSource:
    _require_negative(k)
    c = e.value
    _require_arndt(c, k)
    if c.n != n - 2:
        raise PreconditionError(f"{c} is a composition of {c.n}, expected n-2 = {n - 2}")
    if not c.parts:
        raise PreconditionError("the even-length step needs n >= 3")
    parts = list(c.parts)
    odd = len(parts) % 2 == 1
    if e.copy == 1:
        if odd:
            parts[-1] += 1
            parts.append(1)
        else:
            parts[-2] += 1
            parts[-1] += 1
        return SplitSource(Origin.EVEN_PART, Composition(tuple(parts)))
    if not odd:
        return SplitSource(Origin.EVEN_PART, Composition(tuple(parts + [1, 1])))
    last = parts[-1]
    if last < -k:
        parts[-1:] = [1, last + 1]
        return SplitSource(Origin.EVEN_PART, Composition(tuple(parts)))
    parts[-1] = last + k
    if parts[-1] == 0:
        parts.pop()
    return SplitSource(Origin.SHIFT_PART, Composition(tuple(parts)))
