import io
import json
import random

import pytest

from complab.cli import apply_map, main
from complab.core import ALL, U_FIXED, V_FIXED, arndt, odd_restricted, to_text
from complab.generate import compositions

from . import published
from .conftest import BFILES


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_enumerate_arndt_0_6():
    code, text = run("enumerate", "--family", "arndt:0", "--n", "6")
    assert code == 0
    assert text.splitlines() == ["6", "51", "42", "411", "321", "312", "213", "2121", "count: 8"]


def test_enumerate_vfixed_8():
    code, text = run("enumerate", "--family", "vfixed", "--n", "8")
    assert text.splitlines() == ["17", "1313", "count: 2"]


def test_enumerate_all_1():
    assert run("enumerate", "--family", "all", "--n", "1") == (0, "1\ncount: 1\n")


def test_enumerate_json_uses_strings():
    code, text = run("enumerate", "--family", "oddres:0", "--n", "5", "--format", "json")
    doc = json.loads(text)
    assert doc["compositions"] == ["5", "311", "131", "113", "11111"]
    assert doc["count"] == "5"


def test_enumerate_csv():
    code, text = run("enumerate", "--family", "ufixed", "--n", "6", "--format", "csv")
    assert text.splitlines() == ["composition", "141", "1212"]


def test_enumerate_respects_cap_flag():
    code, _ = run("--cap", "4", "enumerate", "--family", "all", "--n", "6")
    assert code == 2


def test_count_sequence():
    code, text = run("count", "--family", "arndt:-1", "--nmax", "10")
    assert code == 0
    assert [int(line.split()[1]) for line in text.splitlines()] == published.TABLE_7[-1]


def test_count_big_n_json():
    code, text = run("count", "--family", "arndt:0", "--n", "300", "--format", "json")
    value = json.loads(text)["counts"]["300"]
    assert value == "222232244629420445529739893461909967206666939096499764990979600"


def test_table_7_plain():
    code, text = run("table", "7")
    assert code == 0
    rows = [line for line in text.splitlines() if "|" in line and not line.startswith("k")]
    got = {int(r.split("|")[0]): [int(x) for x in r.split("|")[1:]] for r in rows}
    assert got == published.TABLE_7


def test_table_4_plain_lists_counts():
    code, text = run("table", "4", "--format", "json")
    rows = json.loads(text)["rows"]
    assert [int(r[2]) for r in rows] == published.TABLE_4_COUNTS


def test_table_2_two_columns():
    code, text = run("table", "2", "--format", "json")
    rows = json.loads(text)["rows"]
    assert [tuple(r) for r in rows] == [(published.expand(a), published.expand(b)) for a, b in published.TABLE_2]


@pytest.mark.parametrize("table_id", [str(i) for i in range(1, 10)] + ["uex", "vex"])
def test_table_csv_is_deterministic(table_id):
    first = run("table", table_id, "--format", "csv")
    second = run("table", table_id, "--format", "csv")
    assert first == second and first[0] == 0


def test_table_unknown_id():
    assert run("table", "10")[0] == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("map", "u", "--in", "41"), "113"),
        (("map", "arndt2odd", "--in", "6,2,4,3,3"), "1,1,1,5,7,1,1,1"),
        (("map", "v", "--inverse", "--in", "14"), "32"),
        (("map", "oddstep", "--in", "21111", "--k", "-1"), "2111"),
        (("map", "evenstep", "--in", "shift:21", "--k", "-1"), "2:211"),
        (("map", "ufixed", "--in", "3:16"), "1612"),
        (("map", "vfixed", "--inverse", "--in", "1513"), "4:15"),
    ],
)
def test_map_examples(argv, expected):
    assert run(*argv) == (0, expected + "\n")


def test_map_domain_violation_explains(capsys):
    code, _ = run("map", "arndt2odd", "--in", "23")
    assert code == 2
    assert "pair 1" in capsys.readouterr().err


def test_map_needs_k():
    assert run("map", "oddstep", "--in", "5")[0] == 2


def _samples(family, n_lo, n_hi, per_n=25, seed=7):
    rng = random.Random(seed)
    out = []
    for n in range(n_lo, n_hi + 1):
        comps = compositions(family, n)
        out += rng.sample(comps, min(per_n, len(comps)))
    return out


ROUND_TRIP_GRID = [
    ("arndt2odd", None, lambda: _samples(arndt(0), 1, 14), str),
    ("odd2arndt", None, lambda: _samples(odd_restricted(0), 1, 14), str),
    ("u", None, lambda: _samples(ALL, 1, 14), str),
    ("v", None, lambda: _samples(ALL, 1, 14), str),
    ("ufixed", None, lambda: [(o, c) for o in (2, 3) for c in _samples(U_FIXED, 4 - o, 12)], "{0[0]}:{0[1]}".format),
    ("vfixed", None, lambda: [(o, c) for o in (2, 4) for c in _samples(V_FIXED, 2, 12) if c.n % 2 == 0]
     + [(1, c) for c in _samples(V_FIXED, 2, 12) if c.n % 2 == 0], "{0[0]}:{0[1]}".format),
] + [
    ("oddstep", k, (lambda k=k: [c for c in _samples(arndt(k), 1, 13) if len(c) % 2]), str) for k in range(-4, 0)
] + [
    ("evenstep", k, (lambda k=k: [("even", c) for c in _samples(arndt(k), 3, 13) if len(c) % 2 == 0]
                     + [("shift", c) for c in _samples(arndt(k), 0, 8)]), "{0[0]}:{0[1]}".format)
    for k in range(-4, 0)
]


@pytest.mark.parametrize("map_id, k, sample, fmt", ROUND_TRIP_GRID, ids=lambda x: str(x) if isinstance(x, (str, int)) else "")
def test_map_round_trip_text(map_id, k, sample, fmt):
    items = sample()
    assert items
    for item in items:
        text = fmt(item)
        image = apply_map(map_id, text, False, k)
        assert apply_map(map_id, image, True, k) == text


def _columns(lines, start=0):
    """Column heights read back from a bar diagram by counting cells."""
    width = max(len(line) for line in lines)
    heights = []
    for col in range(start, width, 3):
        h = sum(1 for line in lines if line[col:col + 3] == "[ ]")
        if h == 0:
            break
        heights.append(h)
    return heights


@pytest.mark.parametrize("text, heights", [("1", [1]), ("3,1", [3, 1]), ("2121", [2, 1, 2, 1])])
def test_render_heights(text, heights):
    code, out = run("render", text)
    lines = out.splitlines()
    assert code == 0
    assert _columns(lines) == heights
    assert len(lines) == max(heights)


def test_render_side_by_side():
    code, out = run("render", "6,2,4,3,3", "--map", "arndt2odd")
    lines = out.splitlines()
    diagram, label = lines[:-1], lines[-1]
    assert label.split() == ["62433", "11157111"]
    right = label.index("11157111")
    assert _columns(diagram) == [6, 2, 4, 3, 3]
    assert _columns(diagram, right) == [1, 1, 1, 5, 7, 1, 1, 1]


def test_census_command():
    code, text = run("census", "--perm", "V", "--n", "5", "--cycles")
    assert code == 0
    assert "fixed points: 1 (recurrence: 1)" in text
    assert "(131)" in text.splitlines()


def test_check_counts():
    code, text = run("check", "counts", "--nmax", "10", "--kmin", "-3", "--kmax", "3")
    assert code == 0
    assert text.rstrip().endswith("PASS: 1/1 reports passed")


def test_check_bijections():
    code, text = run("check", "bijections", "--nmax", "12")
    assert code == 0
    assert "FAIL" not in text


def test_check_oeis_prints_offsets():
    code, text = run("check", "oeis", "--bfile-dir", str(BFILES))
    assert code == 0
    assert "offset=2 (fitted)" in text
    assert text.count("(fitted)") == 5


def test_check_oeis_missing_dir_fails(tmp_path):
    code, text = run("check", "oeis", "--bfile-dir", str(tmp_path))
    assert code == 1
    assert "FAIL" in text


def test_check_oeis_needs_dir():
    assert run("check", "oeis")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("enumerate", "--family", "oddres:3", "--n", "4"),
        ("enumerate", "--n", "4"),
        ("map", "u", "--in", "1x2"),
        ("map", "evenstep", "--in", "51", "--k", "-1"),
        ("bogus",),
        (),
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "complab", "map", "u", "--in", "131"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "41\n"


def test_text_form_for_large_parts():
    code, text = run("map", "arndt2odd", "--in", "12,")
    assert text.strip() == to_text(compositions(odd_restricted(0), 12)[-1])


def test_map_keeps_comma_style():
    assert run("map", "u", "--in", "1,3,1") == (0, "4,1\n")
    assert run("map", "u", "--inverse", "--in", "4,1") == (0, "1,3,1\n")
    assert run("map", "ufixed", "--in", "3:1,6") == (0, "1,6,1,2\n")
    assert run("map", "u", "--in", "12,1") == (0, apply_map("u", "12,1") + "\n")
