import io

import pytest

from complab.core import U_FIXED, V_FIXED, CompositionError, arndt, even_restricted, odd_restricted
from complab.generate import CapExceededError
from complab.verify import (
    MAPS,
    MAX_WITNESSES,
    PRIMARY_MAPS,
    BFileFormatError,
    CheckReport,
    Permutation,
    UnknownMapError,
    bijection_suite,
    census_suite,
    check_bijection,
    cross_check_counts,
    cycle_census,
    fit_offset,
    oeis_compare,
    oeis_suite,
    parse_bfile,
)

from . import published
from .conftest import BFILES, C


def test_check_bijection_arndt_to_odd():
    r = check_bijection("arndt_to_odd", 6)
    assert r.passed and r.status == "pass"
    assert r.domain_size == r.codomain_size == 8


def test_check_bijection_even_step():
    r = check_bijection("even_length_step", 6, -1)
    assert r.passed
    assert r.domain_size == 9 + 3
    assert r.codomain_size == 2 * 6


def test_check_bijection_u_forward():
    r = check_bijection("u_forward", 5)
    assert r.passed
    assert r.domain_size == 16
    assert r.failure_count == 0


def test_unknown_map():
    with pytest.raises(UnknownMapError):
        check_bijection("w_forward", 5)


def test_check_bijection_needs_k():
    with pytest.raises(CompositionError):
        check_bijection("odd_length_step", 5)


def test_check_bijection_respects_cap():
    with pytest.raises(CapExceededError):
        check_bijection("u_forward", 9, cap=8)


def test_inverse_names_are_registered():
    for name in PRIMARY_MAPS:
        inv = MAPS[name].inverse_name
        assert MAPS[inv].inverse_name == name
        ks = [k for k in (-1, -2, -3) if MAPS[inv].valid(6, k)] if MAPS[inv].needs_k else [None]
        assert ks
        for k in ks:
            assert check_bijection(inv, 6, k).passed


def test_suite_over_declared_grid():
    reports = bijection_suite(14, range(-5, 0))
    assert {r.subject for r in reports} == set(PRIMARY_MAPS)
    for r in reports:
        assert r.passed, r.summary()


def test_a_broken_map_is_caught(monkeypatch):
    from complab import verify

    spec = MAPS["u_forward"]
    broken = spec.__class__(
        spec.name, spec.inverse_name, spec.domain, spec.codomain,
        lambda x, n, k: C("1" * n), spec.inverse, spec.valid,
    )
    monkeypatch.setitem(verify.MAPS, "u_forward", broken)
    r = check_bijection("u_forward", 5)
    assert not r.passed
    assert r.failure_count > MAX_WITNESSES
    assert len(r.failures) == MAX_WITNESSES


def test_report_status_tracks_failures():
    r = CheckReport("x", (1, 1))
    assert r.status == "pass"
    r.fail(1, 2, 3)
    assert r.status == "fail" and r.failures == [(1, 2, 3)]
    assert "[FAIL]" in r.summary()


def test_census_u5():
    assert cycle_census(Permutation.U, 5).fixed_point_count == 1


def test_census_v5_contains_131():
    census = cycle_census("V", 5)
    assert census.fixed_point_count == 1
    assert (C("131"),) in census.cycles


def test_census_u1():
    census = cycle_census("U", 1)
    assert dict(census.cycle_type) == {1: 1}
    assert census.fixed_point_count == 1


@pytest.mark.parametrize("perm", list(Permutation))
def test_census_invariants(perm):
    for n in range(1, 15):
        census = cycle_census(perm, n)
        assert sum(length * mult for length, mult in census.cycle_type.items()) == 2 ** (n - 1)
        assert census.fixed_point_count == census.cycle_type[1]
        assert census.matches_count


def test_census_suite_checks_membership():
    assert all(r.passed for r in census_suite(12))


def test_census_needs_positive_n():
    with pytest.raises(CompositionError):
        cycle_census("U", 0)


def test_cross_check_reproduces_count_grid():
    r = cross_check_counts(10, -3, 3)
    assert r.passed
    grid = r.data["grid"]
    assert len(grid) == 70
    for k, row in published.TABLE_7.items():
        assert [grid[(k, n)] for n in range(1, 11)] == row


def test_cross_check_k_zero():
    r = cross_check_counts(10, 0, 0)
    assert r.passed
    assert [r.data["grid"][(0, n)] for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_cross_check_single_cell():
    r = cross_check_counts(1, -1, -1)
    assert r.passed
    assert r.data["grid"] == {(-1, 1): 1}


def test_parse_bfile_skips_comments_and_blanks():
    text = "# header\n\n0 1\n1 1\n  # indented comment\n2 2\n"
    assert parse_bfile(text) == {0: 1, 1: 1, 2: 2}
    assert parse_bfile(text.encode()) == {0: 1, 1: 1, 2: 2}
    assert parse_bfile(io.BytesIO(text.encode())) == {0: 1, 1: 1, 2: 2}


def test_parse_bfile_reports_line_number():
    with pytest.raises(BFileFormatError) as info:
        parse_bfile("0 1\n1 1\n2 two\n")
    assert info.value.line_no == 3
    assert "line 3" in str(info.value)


def test_parse_bfile_rejects_extra_fields():
    with pytest.raises(BFileFormatError):
        parse_bfile("0 1 2\n")


def _fib_bfile(n_terms, start=0):
    a, b = 0, 1
    lines = []
    for i in range(n_terms):
        if i >= start:
            lines.append(f"{i} {a}")
        a, b = b, a + b
    return "\n".join(lines) + "\n"


def test_oeis_compare_given_offset():
    r = oeis_compare(arndt(0), _fib_bfile(80).encode(), offset=0)
    assert r.passed
    assert r.data["offset"] == 0 and r.data["fitted"] is False
    assert r.data["terms_compared"] == 79


def test_oeis_compare_fits_offset():
    # shifting the indices by 3 must be recovered by the fit
    shifted = "\n".join(f"{i + 3} {v}" for i, v in parse_bfile(_fib_bfile(60)).items())
    r = oeis_compare(odd_restricted(0), shifted)
    assert r.passed
    assert r.data["offset"] == 3 and r.data["fitted"] is True


def test_oeis_compare_reports_first_mismatch():
    terms = parse_bfile(_fib_bfile(40))
    terms[30] += 1
    terms[35] += 1
    text = "\n".join(f"{i} {v}" for i, v in terms.items())
    r = oeis_compare(arndt(0), text, offset=0)
    assert not r.passed
    assert r.data["first_mismatch"] == 30
    assert r.failure_count == 2


def test_oeis_compare_unalignable():
    r = oeis_compare(V_FIXED, _fib_bfile(30))
    assert not r.passed
    assert "offset" not in r.data


def test_fit_offset_empty():
    assert fit_offset({}, lambda n: n) is None


@pytest.mark.parametrize(
    "family, a_number, offset",
    [
        (arndt(0), "000045", 0),
        (U_FIXED, "000931", 2),
        (even_restricted(1), "028495", 0),
        (odd_restricted(2), "052535", 0),
    ],
)
def test_oeis_fixtures(family, a_number, offset):
    with open(BFILES / f"b{a_number}.txt", "rb") as fh:
        r = oeis_compare(family, fh)
    assert r.passed
    assert r.data["offset"] == offset
    assert r.data["terms_compared"] >= 50


def test_oeis_suite_flags_missing_files(tmp_path):
    reports = oeis_suite(tmp_path)
    assert reports and not any(r.passed for r in reports)
    assert all(r.failures[0][2] == "missing" for r in reports)
