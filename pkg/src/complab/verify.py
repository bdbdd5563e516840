"""Machine checks: exhaustive bijection audits, cycle census, count cross-checks, OEIS b-files."""

from __future__ import annotations

import io
import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, BinaryIO, Callable, Iterable, TextIO

from . import bijection as bij
from .core import (
    ALL,
    U_FIXED,
    V_FIXED,
    Composition,
    CompositionError,
    FamilyId,
    PreconditionError,
    arndt,
    even_restricted,
    odd_restricted,
)
from .count import count, count_arndt, count_fixed, count_restricted_dp, restricted_family_for
from .generate import CapExceededError, GeneratorSpec, count_by_generation, enumeration_cap, iter_parts

MAX_WITNESSES = 20


class UnknownMapError(CompositionError):
    pass


class BFileFormatError(CompositionError):
    def __init__(self, line_no: int, line: str):
        super().__init__(f"malformed b-file line {line_no}: {line!r}")
        self.line_no = line_no


@dataclass
class CheckReport:
    subject: str
    n_range: tuple[int, int]
    k_range: tuple[int, int] | None = None
    failures: list[tuple[Any, Any, Any]] = field(default_factory=list)
    failure_count: int = 0
    domain_size: int = 0
    codomain_size: int = 0
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, input, expected, actual) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_WITNESSES:
            self.failures.append((input, expected, actual))

    def summary(self) -> str:
        ns = f"n={self.n_range[0]}" if self.n_range[0] == self.n_range[1] else f"n={self.n_range[0]}..{self.n_range[1]}"
        if self.k_range is not None:
            lo, hi = self.k_range
            ns += f" k={lo}" if lo == hi else f" k={lo}..{hi}"
        line = f"[{self.status.upper()}] {self.subject} {ns}"
        if self.domain_size:
            line += f" ({self.domain_size} checked)"
        if self.failure_count:
            line += f" {self.failure_count} failures"
        return line


# ---------------------------------------------------------------------------
# Bijection audits
# ---------------------------------------------------------------------------


def _comps(family: FamilyId, n: int) -> list[Composition]:
    if n < 0:
        return []
    return [Composition(p) for p in iter_parts(family, n)]


@dataclass(frozen=True)
class MapSpec:
    name: str
    inverse_name: str
    domain: Callable[[int, int | None], Iterable]
    codomain: Callable[[int, int | None], Iterable]
    forward: Callable[[Any, int, int | None], Any]
    inverse: Callable[[Any, int, int | None], Any]
    valid: Callable[[int, int | None], bool]
    needs_k: bool = False

    def flipped(self) -> MapSpec:
        return MapSpec(
            self.inverse_name, self.name, self.codomain, self.domain,
            self.inverse, self.forward, self.valid, self.needs_k,
        )


def _even_split_domain(n, k):
    evens = [bij.SplitSource(bij.Origin.EVEN_PART, c) for c in _comps(arndt(k), n) if c.parts and len(c) % 2 == 0]
    shifts = [bij.SplitSource(bij.Origin.SHIFT_PART, c) for c in _comps(arndt(k), n - 2 + k)]
    return evens + shifts


def _two_copies(n, k):
    below = _comps(arndt(k), n - 2)
    return [bij.TwoCopyElement(copy, c) for copy in (1, 2) for c in below]


def _v_fixed_domain(n, _k):
    if n % 2:
        return [bij.FixedSource(c, 1) for c in _comps(V_FIXED, n - 1)]
    return [bij.FixedSource(c, 2) for c in _comps(V_FIXED, n - 2)] + [
        bij.FixedSource(c, 4) for c in _comps(V_FIXED, n - 4)
    ]


_SPECS = [
    MapSpec(
        "arndt_to_odd", "odd_to_arndt",
        lambda n, k: _comps(arndt(0), n),
        lambda n, k: _comps(odd_restricted(0), n),
        lambda c, n, k: bij.arndt_to_odd(c),
        lambda c, n, k: bij.odd_to_arndt(c),
        lambda n, k: n >= 0,
    ),
    MapSpec(
        "u_forward", "u_inverse",
        lambda n, k: _comps(ALL, n),
        lambda n, k: _comps(ALL, n),
        lambda c, n, k: bij.u_forward(c),
        lambda c, n, k: bij.u_inverse(c),
        lambda n, k: n >= 0,
    ),
    MapSpec(
        "v_forward", "v_inverse",
        lambda n, k: _comps(ALL, n),
        lambda n, k: _comps(ALL, n),
        lambda c, n, k: bij.v_forward(c),
        lambda c, n, k: bij.v_inverse(c),
        lambda n, k: n >= 0,
    ),
    MapSpec(
        "u_restricted", "u_restricted_inverse",
        lambda n, k: _comps(arndt(k), n),
        lambda n, k: _comps(odd_restricted(-k), n),
        lambda c, n, k: bij.u_forward(c),
        lambda c, n, k: bij.u_inverse(c),
        lambda n, k: n >= 0 and k <= 0 and k % 2 == 0,
        needs_k=True,
    ),
    MapSpec(
        "v_restricted", "v_restricted_inverse",
        lambda n, k: _comps(arndt(k), n),
        lambda n, k: _comps(even_restricted(-k), n),
        lambda c, n, k: bij.v_forward(c),
        lambda c, n, k: bij.v_inverse(c),
        lambda n, k: n >= 0 and k < 0 and k % 2 == 1,
        needs_k=True,
    ),
    MapSpec(
        "u_fixed_expand", "u_fixed_reduce",
        lambda n, k: [bij.FixedSource(c, 2) for c in _comps(U_FIXED, n - 2)]
        + [bij.FixedSource(c, 3) for c in _comps(U_FIXED, n - 3)],
        lambda n, k: _comps(U_FIXED, n),
        lambda s, n, k: bij.u_fixed_expand(s),
        lambda c, n, k: bij.u_fixed_reduce(c),
        lambda n, k: n >= 4,
    ),
    MapSpec(
        "v_fixed_expand", "v_fixed_reduce",
        _v_fixed_domain,
        lambda n, k: _comps(V_FIXED, n),
        lambda s, n, k: bij.v_fixed_expand(s),
        lambda c, n, k: bij.v_fixed_reduce(c),
        lambda n, k: n >= 3,
    ),
    MapSpec(
        "odd_length_step", "odd_length_step_inverse",
        lambda n, k: [c for c in _comps(arndt(k), n) if len(c) % 2],
        lambda n, k: _comps(arndt(k), n - 1),
        lambda c, n, k: bij.odd_length_step(c, k, bij.Direction.FORWARD),
        lambda c, n, k: bij.odd_length_step(c, k, bij.Direction.INVERSE),
        lambda n, k: n >= 1,
        needs_k=True,
    ),
    MapSpec(
        "even_length_step", "even_length_step_inverse",
        _even_split_domain,
        _two_copies,
        lambda s, n, k: bij.even_length_step(s, k),
        lambda e, n, k: bij.even_length_step_inverse(e, k, n),
        lambda n, k: n >= 3 and k < 0,
        needs_k=True,
    ),
]

MAPS: dict[str, MapSpec] = {}
for _spec in _SPECS:
    MAPS[_spec.name] = _spec
    MAPS[_spec.inverse_name] = _spec.flipped()

PRIMARY_MAPS = tuple(s.name for s in _SPECS)


def map_spec(map_id: str) -> MapSpec:
    try:
        return MAPS[map_id]
    except KeyError:
        raise UnknownMapError(f"unknown map {map_id!r}; known: {', '.join(sorted(MAPS))}") from None


def check_bijection(map_id: str, n: int, k: int | None = None, cap: int | None = None) -> CheckReport:
    """Audit one map on one (n, k) cell.

    Every domain element is mapped; the image must lie in the independently
    enumerated codomain at the target size (which also pins the sum offset),
    images must be distinct and cover the codomain, and the inverse must send
    each image back to its source.
    """
    spec = map_spec(map_id)
    if spec.needs_k and k is None:
        raise PreconditionError(f"map {map_id} needs k")
    if not spec.valid(n, k):
        raise PreconditionError(f"map {map_id} is not defined at n={n}, k={k}")
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}")

    report = CheckReport(map_id, (n, n), None if k is None else (k, k))
    domain = list(spec.domain(n, k))
    codomain = set(spec.codomain(n, k))
    report.domain_size = len(domain)
    report.codomain_size = len(codomain)

    seen: dict[Any, Any] = {}
    for x in domain:
        try:
            y = spec.forward(x, n, k)
        except CompositionError as err:
            report.fail(x, "an image", f"error: {err}")
            continue
        if y not in codomain:
            report.fail(x, "image in codomain", y)
        if y in seen:
            report.fail(x, f"image distinct from that of {seen[y]}", y)
        seen[y] = x
        try:
            back = spec.inverse(y, n, k)
        except CompositionError as err:
            report.fail(y, x, f"error: {err}")
            continue
        if back != x:
            report.fail(y, x, back)
    for y in codomain:
        if y not in seen:
            report.fail(None, y, "not in image")
    return report


def bijection_suite(n_max: int, ks: Iterable[int] = range(-5, 0), maps: Iterable[str] = PRIMARY_MAPS) -> list[CheckReport]:
    """One merged report per map over every valid cell with n <= n_max."""
    ks = list(ks)
    reports = []
    for name in maps:
        spec = map_spec(name)
        cells = [(n, k) for n in range(0, n_max + 1) for k in (ks if spec.needs_k else [None]) if spec.valid(n, k)]
        if not cells:
            continue
        ns = [n for n, _ in cells]
        kk = [k for _, k in cells if k is not None]
        merged = CheckReport(name, (min(ns), max(ns)), (min(kk), max(kk)) if kk else None)
        for n, k in cells:
            r = check_bijection(name, n, k)
            merged.domain_size += r.domain_size
            merged.codomain_size += r.codomain_size
            for w in r.failures:
                merged.fail((n, k, w[0]), w[1], w[2])
        reports.append(merged)
    return reports


# ---------------------------------------------------------------------------
# Cycle census
# ---------------------------------------------------------------------------


class Permutation(Enum):
    U = "U"
    V = "V"


_PERM_PARTS = {Permutation.U: bij.u_parts, Permutation.V: bij.v_parts}
_PERM_FIXED = {Permutation.U: U_FIXED, Permutation.V: V_FIXED}


@dataclass
class CycleCensus:
    n: int
    permutation: Permutation
    cycle_type: Counter
    fixed_point_count: int
    cycles: list[tuple[Composition, ...]]
    expected_fixed_points: int

    @property
    def matches_count(self) -> bool:
        return self.fixed_point_count == self.expected_fixed_points


def cycle_census(permutation: Permutation | str, n: int, cap: int | None = None) -> CycleCensus:
    perm = Permutation(permutation.upper() if isinstance(permutation, str) else permutation)
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise CapExceededError(f"n={n} exceeds the enumeration cap {cap}")
    if n < 1:
        raise CompositionError(f"cycle census needs n >= 1, got {n}")
    step = _PERM_PARTS[perm]
    seen: set[tuple[int, ...]] = set()
    cycles = []
    for start in iter_parts(ALL, n):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = step(start)
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = step(x)
        cycles.append(tuple(Composition(p) for p in cycle))
    cycle_type = Counter(len(c) for c in cycles)
    return CycleCensus(
        n=n,
        permutation=perm,
        cycle_type=cycle_type,
        fixed_point_count=cycle_type[1],
        cycles=cycles,
        expected_fixed_points=count_fixed(n, _PERM_FIXED[perm]),
    )


def census_suite(n_max: int) -> list[CheckReport]:
    reports = []
    for perm in Permutation:
        report = CheckReport(f"{perm.value} fixed-point census", (1, n_max))
        for n in range(1, n_max + 1):
            census = cycle_census(perm, n)
            report.domain_size += sum(len(c) for c in census.cycles)
            if not census.matches_count:
                report.fail(n, census.expected_fixed_points, census.fixed_point_count)
            fixed = {c[0] for c in census.cycles if len(c) == 1}
            members = set(_comps(_PERM_FIXED[perm], n))
            if fixed != members:
                report.fail(n, sorted(map(str, members)), sorted(map(str, fixed)))
        reports.append(report)
    return reports


# ---------------------------------------------------------------------------
# Count cross-checks
# ---------------------------------------------------------------------------


def cross_check_counts(n_max: int, k_min: int, k_max: int) -> CheckReport:
    """Generation, recurrence and part-DP counts must agree on every grid cell."""
    report = CheckReport("counts", (1, n_max), (k_min, k_max))
    grid: dict[tuple[int, int], int] = {}
    for k in range(k_min, k_max + 1):
        for n in range(1, n_max + 1):
            gen = count_by_generation(GeneratorSpec(arndt(k), n))
            legs = {"recurrence": count_arndt(n, k)}
            if k <= 0:
                legs["dp"] = count_restricted_dp(n, restricted_family_for(k))
            for leg, value in legs.items():
                if value != gen:
                    report.fail(("arndt", n, k, leg), gen, value)
            grid[(k, n)] = gen
            report.domain_size += 1
    for fam in (U_FIXED, V_FIXED):
        for n in range(1, n_max + 1):
            gen = count_by_generation(GeneratorSpec(fam, n))
            if count_fixed(n, fam) != gen:
                report.fail((str(fam), n), gen, count_fixed(n, fam))
            report.domain_size += 1
    for n in range(1, n_max + 1):
        gen = count_by_generation(GeneratorSpec(ALL, n))
        for value in (count(ALL, n), count_restricted_dp(n, ALL)):
            if value != gen:
                report.fail(("all", n), gen, value)
        report.domain_size += 1
    report.data["grid"] = grid
    return report


# ---------------------------------------------------------------------------
# OEIS b-files
# ---------------------------------------------------------------------------


def parse_bfile(bfile: bytes | str | BinaryIO | TextIO) -> dict[int, int]:
    """Read ``index value`` lines; blank lines and ``#`` comments are skipped."""
    if isinstance(bfile, bytes):
        text = bfile.decode("utf-8")
    elif isinstance(bfile, str):
        text = bfile
    else:
        raw = bfile.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    terms: dict[int, int] = {}
    for line_no, line in enumerate(io.StringIO(text), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        fields = s.split()
        if len(fields) != 2:
            raise BFileFormatError(line_no, line.rstrip("\n"))
        try:
            index, value = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileFormatError(line_no, line.rstrip("\n")) from None
        terms[index] = value
    return terms


FIT_TERMS = 5


def fit_offset(terms: dict[int, int], values: Callable[[int], int]) -> int | None:
    """Smallest offset o with terms[n + o] == values(n) for n = 1..5."""
    if not terms:
        return None
    lo, hi = min(terms), max(terms)
    for o in range(lo - 1, hi - FIT_TERMS + 1):
        if all(terms.get(n + o) == values(n) for n in range(1, FIT_TERMS + 1)):
            return o
    return None


def oeis_compare(f: FamilyId, bfile, offset: int | None = None, label: str | None = None) -> CheckReport:
    """Compare count(f, n) with b-file term n + offset; the offset is fitted when not given."""
    terms = parse_bfile(bfile)
    report = CheckReport(label or f"oeis {f}", (1, 1))
    if offset is None:
        offset = fit_offset(terms, lambda n: count(f, n))
        report.data["fitted"] = True
        if offset is None:
            report.fail(str(f), "alignment on the first 5 terms", "none found")
            return report
    else:
        report.data["fitted"] = False
    report.data["offset"] = offset
    ns = sorted(i - offset for i in terms if i - offset >= 1)
    compared = 0
    for n in ns:
        got = count(f, n)
        if got != terms[n + offset]:
            report.fail(n, terms[n + offset], got)
            report.data.setdefault("first_mismatch", n)
        compared += 1
    report.data["terms_compared"] = compared
    report.domain_size = compared
    report.n_range = (ns[0], ns[-1]) if ns else (1, 1)
    return report


OEIS_TARGETS: tuple[tuple[FamilyId, str], ...] = (
    (arndt(0), "A000045"),
    (odd_restricted(0), "A000045"),
    (U_FIXED, "A000931"),
    (even_restricted(1), "A028495"),
    (odd_restricted(2), "A052535"),
)


def bfile_name(a_number: str) -> str:
    return "b" + a_number[1:] + ".txt"


def oeis_suite(bfile_dir: str | os.PathLike) -> list[CheckReport]:
    reports = []
    for fam, a_number in OEIS_TARGETS:
        path = os.path.join(bfile_dir, bfile_name(a_number))
        label = f"oeis {fam} vs {a_number}"
        if not os.path.exists(path):
            r = CheckReport(label, (1, 1))
            r.fail(path, "b-file present", "missing")
            reports.append(r)
            continue
        with open(path, "rb") as fh:
            reports.append(oeis_compare(fam, fh, label=label))
    return reports
