"""Compositions, their pair and run views, family membership and the h statistic."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, NamedTuple, Sequence


class CompositionError(ValueError):
    """Base class for every domain error raised by complab."""


class PreconditionError(CompositionError):
    """A map or counter was called outside its domain."""


TERMINAL_ONE = 1
"""Closer of the last run block when a composition ends in a run of ones."""


@dataclass(frozen=True, slots=True)
class Composition:
    parts: tuple[int, ...]
    n: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p <= 0:
                raise CompositionError(f"part at index {i} is {p!r}; parts must be positive integers")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Composition({to_text(self)})"


def make_composition(parts: Iterable[int]) -> Composition:
    return Composition(tuple(parts))


def to_text(c: Composition | Sequence[int], commas: bool = False) -> str:
    """Condensed text form: ``2121`` for single-digit parts, ``12,1,3`` otherwise.

    The empty composition is written ``()``. A lone part of ten or more gets a
    trailing comma (``12,``) so that it does not read back as ``(1, 2)``.
    ``commas=True`` forces the separated form whenever there are two or more parts.
    """
    parts = tuple(c)
    if not parts:
        return "()"
    if all(p < 10 for p in parts) and not (commas and len(parts) > 1):
        return "".join(map(str, parts))
    if len(parts) == 1:
        return f"{parts[0]},"
    return ",".join(map(str, parts))


def parse_composition(text: str) -> Composition:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        return Composition(())
    if "," in s:
        tokens = [t.strip() for t in s.split(",")]
        if tokens and tokens[-1] == "":
            tokens.pop()
    else:
        tokens = list(s)
    try:
        parts = [int(t) for t in tokens]
    except ValueError:
        raise CompositionError(f"cannot parse composition {text!r}") from None
    return Composition(tuple(parts))


# ---------------------------------------------------------------------------
# Views
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PairView:
    pairs: tuple[tuple[int, int], ...]

    def flatten(self) -> tuple[int, ...]:
        out = [x for pair in self.pairs for x in pair]
        if out and out[-1] == 0:
            out.pop()
        return tuple(out)


def pairs_of(parts: Sequence[int]) -> list[tuple[int, int]]:
    t = len(parts)
    out = [(parts[i], parts[i + 1]) for i in range(0, t - 1, 2)]
    if t % 2:
        out.append((parts[-1], 0))
    return out


def pair_view(c: Composition) -> PairView:
    return PairView(tuple(pairs_of(c.parts)))


def h_statistic(c: Composition) -> int:
    """Greatest increase from an odd-indexed part to its successor (virtual 0 included)."""
    if not c.parts:
        raise CompositionError("h statistic is undefined on the empty composition")
    return max(b - a for a, b in pairs_of(c.parts))


class RunBlock(NamedTuple):
    ones: int
    closer: int

    @property
    def is_terminal(self) -> bool:
        return self.closer == TERMINAL_ONE

    @property
    def size(self) -> int:
        return self.ones + self.closer

    def parts(self) -> tuple[int, ...]:
        return (1,) * self.ones + (self.closer,)


def runs_of(parts: Sequence[int]) -> list[RunBlock]:
    blocks = []
    ones = 0
    for p in parts:
        if p == 1:
            ones += 1
        else:
            blocks.append(RunBlock(ones, p))
            ones = 0
    if ones:
        blocks.append(RunBlock(ones - 1, TERMINAL_ONE))
    return blocks


def run_decompose(c: Composition) -> list[RunBlock]:
    return runs_of(c.parts)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


class FamilyKind(Enum):
    ALL = "all"
    ARNDT = "arndt"
    ODD_RESTRICTED = "oddres"
    EVEN_RESTRICTED = "evenres"
    U_FIXED = "ufixed"
    V_FIXED = "vfixed"


@dataclass(frozen=True, slots=True)
class FamilyId:
    kind: FamilyKind
    param: int | None = None

    def __post_init__(self):
        k, p = self.kind, self.param
        if k in (FamilyKind.ALL, FamilyKind.U_FIXED, FamilyKind.V_FIXED):
            if p is not None:
                raise CompositionError(f"family {k.value} takes no parameter")
        elif not isinstance(p, int):
            raise CompositionError(f"family {k.value} needs an integer parameter")
        elif k is FamilyKind.ODD_RESTRICTED and (p < 0 or p % 2):
            raise CompositionError(f"odd-restricted bound must be even and >= 0, got {p}")
        elif k is FamilyKind.EVEN_RESTRICTED and (p < 1 or p % 2 == 0):
            raise CompositionError(f"even-restricted bound must be odd and >= 1, got {p}")

    def __str__(self) -> str:
        if self.param is None:
            return self.kind.value
        return f"{self.kind.value}:{self.param}"

    @classmethod
    def parse(cls, text: str) -> FamilyId:
        """Parse the ``arndt:K`` / ``oddres:2K`` / ``evenres:2K+1`` / ``ufixed`` / ``vfixed`` / ``all`` syntax."""
        name, _, arg = text.strip().lower().partition(":")
        try:
            kind = FamilyKind(name)
        except ValueError:
            raise CompositionError(f"unknown family {text!r}") from None
        if not arg:
            return cls(kind)
        try:
            return cls(kind, int(arg))
        except ValueError:
            raise CompositionError(f"bad family parameter in {text!r}") from None


ALL = FamilyId(FamilyKind.ALL)
U_FIXED = FamilyId(FamilyKind.U_FIXED)
V_FIXED = FamilyId(FamilyKind.V_FIXED)


def arndt(k: int) -> FamilyId:
    return FamilyId(FamilyKind.ARNDT, k)


def odd_restricted(bound: int) -> FamilyId:
    return FamilyId(FamilyKind.ODD_RESTRICTED, bound)


def even_restricted(bound: int) -> FamilyId:
    return FamilyId(FamilyKind.EVEN_RESTRICTED, bound)


def part_allowed(p: int, f: FamilyId) -> bool:
    """Part-membership test for the families characterised by their parts alone."""
    if f.kind is FamilyKind.ALL:
        return True
    if f.kind is FamilyKind.ODD_RESTRICTED:
        return p % 2 == 1 or p <= f.param
    if f.kind is FamilyKind.EVEN_RESTRICTED:
        return p % 2 == 0 or p <= f.param
    raise CompositionError(f"family {f} is not defined by a set of allowed parts")


def arndt_violation(parts: Sequence[int], k: int) -> tuple[int, tuple[int, int]] | None:
    """First pair (1-based index, pair) failing ``first > second + k``, or None.

    The padded final pair ``(c_t, 0)`` is exempt for every k.
    """
    for i in range(0, len(parts) - 1, 2):
        a, b = parts[i], parts[i + 1]
        if not a > b + k:
            return i // 2 + 1, (a, b)
    return None


def _alternating(parts: Sequence[int], even_ok) -> bool:
    for i, p in enumerate(parts):
        if i % 2 == 0:
            if p != 1:
                return False
        elif not even_ok(p):
            return False
    return True


def parts_member(parts: Sequence[int], f: FamilyId) -> bool:
    kind = f.kind
    if kind is FamilyKind.ALL:
        return True
    if kind is FamilyKind.ARNDT:
        return arndt_violation(parts, f.param) is None
    if kind is FamilyKind.U_FIXED:
        return _alternating(parts, lambda p: p % 2 == 0)
    if kind is FamilyKind.V_FIXED:
        return _alternating(parts, lambda p: p % 2 == 1 and p >= 3)
    return all(part_allowed(p, f) for p in parts)


def is_member(c: Composition, f: FamilyId) -> bool:
    return parts_member(c.parts, f)
