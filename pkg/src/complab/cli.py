"""Command-line front end: ``complab {enumerate,count,table,map,render,census,check}``.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import bijection as bij
from .core import Composition, CompositionError, FamilyId, parse_composition, to_text
from .count import count, sequence
from .generate import CAP_ENV_VAR, GeneratorSpec, enumerate_compositions, enumeration_cap
from .tables import BUILDERS, build_table, render_bars, render_side_by_side
from .verify import bijection_suite, census_suite, cross_check_counts, cycle_census, oeis_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# map: text in, text out, so that ``map X`` and ``map X --inverse`` round-trip
# ---------------------------------------------------------------------------


def _tagged(text: str) -> tuple[str, Composition]:
    tag, sep, rest = text.partition(":")
    if not sep:
        raise UsageError(f"expected TAG:COMPOSITION, got {text!r}")
    return tag.strip(), parse_composition(rest)


def _need_k(k):
    if k is None:
        raise UsageError("this map needs --k")
    return k


def _fixed(expand, reduce):
    def forward(text, k):
        tag, c = _tagged(text)
        if not tag.isdigit():
            raise UsageError(f"expected a numeric offset tag, got {tag!r}")
        return to_text(expand(bij.FixedSource(c, int(tag))))

    def inverse(text, k):
        src = reduce(parse_composition(text))
        return f"{src.offset}:{to_text(src.value)}"

    return forward, inverse


def _evenstep_forward(text, k):
    tag, c = _tagged(text)
    try:
        origin = bij.Origin(tag)
    except ValueError:
        raise UsageError(f"origin tag must be 'even' or 'shift', got {tag!r}") from None
    e = bij.even_length_step(bij.SplitSource(origin, c), _need_k(k))
    return f"{e.copy}:{to_text(e.value)}"


def _evenstep_inverse(text, k):
    tag, c = _tagged(text)
    if tag not in ("1", "2"):
        raise UsageError(f"copy tag must be 1 or 2, got {tag!r}")
    src = bij.even_length_step_inverse(bij.TwoCopyElement(int(tag), c), _need_k(k), c.n + 2)
    return f"{src.origin.value}:{to_text(src.value)}"


def _plain(fwd, inv):
    return (
        lambda text, k: to_text(fwd(parse_composition(text))),
        lambda text, k: to_text(inv(parse_composition(text))),
    )


MAPS = {
    "arndt2odd": _plain(bij.arndt_to_odd, bij.odd_to_arndt),
    "odd2arndt": _plain(bij.odd_to_arndt, bij.arndt_to_odd),
    "u": _plain(bij.u_forward, bij.u_inverse),
    "v": _plain(bij.v_forward, bij.v_inverse),
    "oddstep": (
        lambda text, k: to_text(bij.odd_length_step(parse_composition(text), _need_k(k), "forward")),
        lambda text, k: to_text(bij.odd_length_step(parse_composition(text), _need_k(k), "inverse")),
    ),
    "evenstep": (_evenstep_forward, _evenstep_inverse),
    "ufixed": _fixed(bij.u_fixed_expand, bij.u_fixed_reduce),
    "vfixed": _fixed(bij.v_fixed_expand, bij.v_fixed_reduce),
}


def apply_map(map_id: str, text: str, inverse: bool = False, k: int | None = None) -> str:
    if map_id not in MAPS:
        raise UsageError(f"unknown map {map_id!r}; choose from {', '.join(MAPS)}")
    forward, backward = MAPS[map_id]
    result = (backward if inverse else forward)(text, k)
    body = text.partition(":")[2] if ":" in text else text
    if "," not in body or to_text(parse_composition(body)) != body.replace(",", "").strip():
        return result
    # single-digit input written with commas is answered in the same style
    tag, sep, rest = result.rpartition(":")
    return tag + sep + to_text(parse_composition(rest), commas=True)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _family(text: str) -> FamilyId:
    try:
        return FamilyId.parse(text)
    except CompositionError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def cmd_enumerate(args, out) -> int:
    cap = enumeration_cap()
    if args.n > cap:
        raise UsageError(f"n={args.n} exceeds the enumeration cap {cap}; raise it with --cap or {CAP_ENV_VAR}")
    comps = [to_text(c) for c in enumerate_compositions(GeneratorSpec(args.family, args.n))]
    if args.format == "json":
        out.write(json.dumps({"family": str(args.family), "n": args.n, "compositions": comps, "count": str(len(comps))}) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["composition"])
        w.writerows([c] for c in comps)
        out.write(buf.getvalue())
    else:
        for c in comps:
            out.write(c + "\n")
        out.write(f"count: {len(comps)}\n")
    return EXIT_OK


def cmd_count(args, out) -> int:
    if args.nmax is not None:
        values = sequence(args.family, args.nmax)
        ns = range(1, args.nmax + 1)
    elif args.n is not None:
        values, ns = [count(args.family, args.n)], [args.n]
    else:
        raise UsageError("count needs --n or --nmax")
    if args.format == "json":
        out.write(json.dumps({"family": str(args.family), "counts": {str(n): str(v) for n, v in zip(ns, values)}}) + "\n")
    elif args.format == "csv":
        out.write("n,count\n" + "".join(f"{n},{v}\n" for n, v in zip(ns, values)))
    else:
        out.write("".join(f"{n} {v}\n" for n, v in zip(ns, values)))
    return EXIT_OK


def cmd_table(args, out) -> int:
    out.write(build_table(args.table_id).render(args.format))
    return EXIT_OK


def cmd_map(args, out) -> int:
    out.write(apply_map(args.map_id, args.input, args.inverse, args.k) + "\n")
    return EXIT_OK


def cmd_render(args, out) -> int:
    c = parse_composition(args.composition)
    if args.map:
        image = parse_composition(apply_map(args.map, args.composition, args.inverse, args.k))
        out.write(render_side_by_side(c, image))
    else:
        out.write("\n".join(render_bars(c)) + "\n")
    return EXIT_OK


def cmd_census(args, out) -> int:
    census = cycle_census(args.perm, args.n)
    lengths = ", ".join(f"{length}x{mult}" for length, mult in sorted(census.cycle_type.items()))
    out.write(f"{census.permutation.value} on C({args.n}): cycle type {lengths}\n")
    out.write(f"fixed points: {census.fixed_point_count} (recurrence: {census.expected_fixed_points})\n")
    if args.cycles:
        for cyc in census.cycles:
            out.write("(" + " ".join(map(to_text, cyc)) + ")\n")
    return EXIT_OK if census.matches_count else EXIT_FAIL


def cmd_check(args, out) -> int:
    suite = args.suite
    if suite == "oeis" and not args.bfile_dir:
        raise UsageError("check oeis needs --bfile-dir")
    reports = []
    if suite in ("all", "counts"):
        nmax = args.nmax or 10
        kmin = -3 if args.kmin is None else args.kmin
        kmax = 3 if args.kmax is None else args.kmax
        reports.append(cross_check_counts(nmax, kmin, kmax))
    if suite in ("all", "bijections"):
        nmax = args.nmax or 12
        kmin = -5 if args.kmin is None else args.kmin
        kmax = -1 if args.kmax is None else args.kmax
        reports += bijection_suite(nmax, range(kmin, kmax + 1))
        reports += census_suite(nmax)
    if suite in ("all", "oeis") and args.bfile_dir:
        reports += oeis_suite(args.bfile_dir)
    elif suite == "all":
        out.write("oeis: skipped (no --bfile-dir)\n")
    for r in reports:
        line = r.summary()
        if "offset" in r.data:
            how = "fitted" if r.data.get("fitted") else "given"
            line += f" offset={r.data['offset']} ({how}), {r.data['terms_compared']} terms"
        out.write(line + "\n")
        for w in r.failures:
            out.write(f"    input={w[0]} expected={w[1]} actual={w[2]}\n")
    ok = all(r.passed for r in reports)
    out.write(f"{'PASS' if ok else 'FAIL'}: {sum(r.passed for r in reports)}/{len(reports)} reports passed\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="complab", description="Arndt, De Morgan and parity-restricted compositions.")
    p.add_argument("--cap", type=int, help=f"enumeration cap (default 24; also {CAP_ENV_VAR})")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["plain", "csv", "json"], default="plain")

    e = sub.add_parser("enumerate", help="list a family in canonical order")
    e.add_argument("--family", type=_family, required=True, help="all, arndt:K, oddres:2K, evenres:2K+1, ufixed, vfixed")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--format", **fmt)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("count", help="exact counts via recurrences")
    c.add_argument("--family", type=_family, required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--nmax", type=int)
    c.add_argument("--format", **fmt)
    c.set_defaults(func=cmd_count)

    t = sub.add_parser("table", help="regenerate a published table")
    t.add_argument("table_id", choices=list(BUILDERS))
    t.add_argument("--format", **fmt)
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("map", help="apply a bijection to one composition")
    m.add_argument("map_id", choices=list(MAPS))
    m.add_argument("--in", dest="input", required=True)
    m.add_argument("--inverse", action="store_true")
    m.add_argument("--k", type=int)
    m.set_defaults(func=cmd_map)

    r = sub.add_parser("render", help="bar-graph diagram of a composition")
    r.add_argument("composition")
    r.add_argument("--map", choices=["arndt2odd", "odd2arndt", "u", "v", "oddstep"])
    r.add_argument("--inverse", action="store_true")
    r.add_argument("--k", type=int)
    r.set_defaults(func=cmd_render)

    cs = sub.add_parser("census", help="cycle type of U or V on C(n)")
    cs.add_argument("--perm", choices=["U", "V", "u", "v"], required=True)
    cs.add_argument("--n", type=int, required=True)
    cs.add_argument("--cycles", action="store_true", help="print every cycle")
    cs.set_defaults(func=cmd_census)

    ck = sub.add_parser("check", help="run verification suites")
    ck.add_argument("suite", choices=["all", "bijections", "counts", "oeis"])
    ck.add_argument("--nmax", type=int)
    ck.add_argument("--kmin", type=int)
    ck.add_argument("--kmax", type=int)
    ck.add_argument("--bfile-dir")
    ck.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    saved = os.environ.get(CAP_ENV_VAR)
    if args.cap is not None:
        os.environ[CAP_ENV_VAR] = str(args.cap)
    try:
        return args.func(args, out)
    except (UsageError, CompositionError, KeyError) as err:
        print(f"complab: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.cap is not None:
            if saved is None:
                del os.environ[CAP_ENV_VAR]
            else:
                os.environ[CAP_ENV_VAR] = saved


if __name__ == "__main__":
    sys.exit(main())
