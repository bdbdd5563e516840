"""Rebuild the published tables from library calls, plus renderers (plain, CSV, JSON).

Table ids follow the numbering 1..9 used throughout complab:

    1  Arndt compositions A(n), n <= 7, with counts
    2  A(6) -> C_odd(6) under arndt_to_odd
    3  U on C(5), grouped by h
    4  U-fixed compositions, n <= 10
    5  V on C(5), grouped by h
    6  V-fixed compositions, n <= 10
    7  a(n, k) for 3 >= k >= -3, n <= 10
    8  A^o(6,-1) -> A(5,-1) by the odd-length step
    9  A^e(6,-1) u A(3,-1) <-> 2A(4,-1) by the even-length step

and two extra ids, ``uex`` (C^U(8) u C^U(7) -> C^U(10)) and ``vex``
(C^V(6) u C^V(4) -> C^V(8)).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from . import bijection as bij
from .core import ALL, U_FIXED, V_FIXED, Composition, arndt, h_statistic, to_text
from .count import count, count_arndt
from .generate import compositions

ARROW = "->"
EMPTY_SET = "(none)"


@dataclass
class Table:
    table_id: str
    title: str
    header: list[str]
    rows: list[list[str]]
    sections: list[int] = field(default_factory=list)

    def to_plain(self) -> str:
        cells = [self.header] + self.rows
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.header))]

        def fmt(row):
            return " | ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip()

        rule = "-+-".join("-" * w for w in widths)
        lines = [f"Table {self.table_id}: {self.title}", fmt(self.header), rule]
        for i, row in enumerate(self.rows):
            if i in self.sections:
                lines.append(rule)
            lines.append(fmt(row))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        w.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"table": self.table_id, "title": self.title, "header": self.header, "rows": self.rows},
            indent=2,
        )

    def render(self, fmt: str = "plain") -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json() + "\n"
        return self.to_plain()


def _listing(cs) -> str:
    return ", ".join(map(to_text, cs)) if cs else EMPTY_SET


def table_1() -> Table:
    rows = [[str(n), _listing(compositions(arndt(0), n)), str(count_arndt(n, 0))] for n in range(1, 8)]
    return Table("1", "Arndt compositions A(n) and a(n)", ["n", "A(n)", "a(n)"], rows)


def table_2() -> Table:
    rows = [[to_text(c), to_text(bij.arndt_to_odd(c))] for c in compositions(arndt(0), 6)]
    return Table("2", "A(6) -> C_odd(6)", ["A(6)", "C_odd(6)"], rows)


def _permutation_by_h(table_id, name, perm, bounds, labels) -> Table:
    columns: list[list[str]] = [[] for _ in labels]
    for c in compositions(ALL, 5):
        h = h_statistic(c)
        col = next(i for i, b in enumerate(bounds) if h < b)
        columns[col].append(f"{to_text(c)} {ARROW} {to_text(perm(c))}")
    depth = max(map(len, columns))
    rows = [[col[i] if i < len(col) else "" for col in columns] for i in range(depth)]
    return Table(table_id, f"the permutation {name} on C(5) grouped by h", labels, rows)


def table_3() -> Table:
    return _permutation_by_h("3", "U", bij.u_forward, (0, 2, 4), ["h < 0", "0 <= h < 2", "2 <= h < 4"])


def table_5() -> Table:
    return _permutation_by_h("5", "V", bij.v_forward, (1, 3, 5), ["h < 1", "1 <= h < 3", "3 <= h < 5"])


def _fixed_listing(table_id, fam, name) -> Table:
    rows = [[str(n), _listing(compositions(fam, n)), str(count(fam, n))] for n in range(1, 11)]
    return Table(table_id, f"compositions fixed by {name}", ["n", f"C^{name}(n)", f"c^{name}(n)"], rows)


def table_4() -> Table:
    return _fixed_listing("4", U_FIXED, "U")


def table_6() -> Table:
    return _fixed_listing("6", V_FIXED, "V")


def table_7() -> Table:
    ns = range(1, 11)
    rows = [[str(k)] + [str(count_arndt(n, k)) for n in ns] for k in range(3, -4, -1)]
    return Table("7", "generalized Arndt counts a(n,k)", ["k\\n"] + [str(n) for n in ns], rows, sections=[3, 4])


def table_8() -> Table:
    odd = [c for c in compositions(arndt(-1), 6) if len(c) % 2]
    rows = [[to_text(c), to_text(bij.odd_length_step(c, -1))] for c in odd]
    return Table("8", "A^o(6,-1) -> A(5,-1)", ["A^o(6,-1)", "A(5,-1)"], rows)


def table_9(n: int = 6, k: int = -1) -> Table:
    evens = [c for c in compositions(arndt(k), n) if len(c) % 2 == 0]
    sources = [bij.SplitSource(bij.Origin.EVEN_PART, c) for c in evens]
    sources += [bij.SplitSource(bij.Origin.SHIFT_PART, c) for c in compositions(arndt(k), n - 2 + k)]
    left = []
    for s in sources:
        e = bij.even_length_step(s, k)
        left.append([to_text(s.value), to_text(e.value), str(e.copy)])
    right = []
    for copy in (1, 2):
        for c in compositions(arndt(k), n - 2):
            s = bij.even_length_step_inverse(bij.TwoCopyElement(copy, c), k, n)
            right.append([str(copy), to_text(c), to_text(s.value)])
    src = f"A^e({n},{k}) u A({n - 2 + k},{k})"
    tgt = f"2A({n - 2},{k})"
    header = [src, tgt, "copy", "copy", tgt, src]
    rows = [l + r for l, r in zip(left, right)]
    return Table("9", f"{src} <-> {tgt}", header, rows, sections=[len(evens)])


def table_uex() -> Table:
    rows = []
    for offset in (2, 3):
        for c in compositions(U_FIXED, 10 - offset):
            rows.append([to_text(c), to_text(bij.u_fixed_expand(bij.FixedSource(c, offset)))])
    return Table("uex", "C^U(8) u C^U(7) -> C^U(10)", ["C^U(8) u C^U(7)", "C^U(10)"], rows,
                 sections=[len(compositions(U_FIXED, 8))])


def table_vex() -> Table:
    rows = []
    for offset in (2, 4):
        for c in compositions(V_FIXED, 8 - offset):
            rows.append([to_text(c), to_text(bij.v_fixed_expand(bij.FixedSource(c, offset)))])
    return Table("vex", "C^V(6) u C^V(4) -> C^V(8)", ["C^V(6) u C^V(4)", "C^V(8)"], rows,
                 sections=[len(compositions(V_FIXED, 6))])


BUILDERS = {
    "1": table_1,
    "2": table_2,
    "3": table_3,
    "4": table_4,
    "5": table_5,
    "6": table_6,
    "7": table_7,
    "8": table_8,
    "9": table_9,
    "uex": table_uex,
    "vex": table_vex,
}


def build_table(table_id: str | int) -> Table:
    key = str(table_id).lower()
    if key not in BUILDERS:
        raise KeyError(f"unknown table {table_id!r}; choose from {', '.join(BUILDERS)}")
    return BUILDERS[key]()


def render_bars(c: Composition, cell: str = "[ ]") -> list[str]:
    """Bar-graph rows, top first: one column of ``cell`` blocks per part, bottom-aligned."""
    blank = " " * len(cell)
    height = max(c.parts, default=0)
    return ["".join(cell if p >= level else blank for p in c.parts).rstrip() for level in range(height, 0, -1)]


def render_side_by_side(left: Composition, right: Composition, gap: str = "   =>   ") -> str:
    a, b = render_bars(left), render_bars(right)
    height = max(len(a), len(b))
    a = [""] * (height - len(a)) + a
    b = [""] * (height - len(b)) + b
    width = max((len(x) for x in a), default=0)
    lines = []
    for i, (x, y) in enumerate(zip(a, b)):
        mid = gap if i == height - 1 else " " * len(gap)
        lines.append((x.ljust(width) + mid + y).rstrip())
    lines.append(to_text(left).ljust(width) + " " * len(gap) + to_text(right))
    return "\n".join(lines) + "\n"
