import pytest

from catalan_bijections import verify as V
from catalan_bijections.model import Family
from catalan_bijections.terms import enumerate_family


def test_catalan_values():
    assert V.catalan(0) == 1
    assert V.catalan(3) == 5
    assert V.catalan(12) == 208012
    assert [V.catalan(n) for n in range(11)] == list(V.KNOWN_CATALAN)


def test_catalan_matches_closed_form_to_the_limit():
    for n in range(V.MAX_CATALAN_N + 1):
        assert V.catalan(n) == V.catalan_closed(n)
    assert V.catalan(35) < 2**63


def test_catalan_refuses_36():
    with pytest.raises(V.CatalanOverflow):
        V.catalan(36)


def test_brute_force_sizes():
    assert len(V.brute_force_family("S", 3)) == 5
    assert len(V.brute_force_family("A", 4)) == 14
    assert V.brute_force_family("T", 2) == set(enumerate_family("T", 2))


def test_brute_force_is_bounded():
    with pytest.raises(ValueError):
        V.brute_force_family("T", 9)


def test_rectangulations_with_fewer_rects_do_not_exist():
    # the staircase of size n has n outer corners, so fewer rectangles never suffice
    assert all(len(s.rects) == 4 for s in V.rectangulations(4, 4))


def test_line_format():
    r = V.CheckResult("beta", 3, True, "ok")
    assert r.line() == "CHECK beta n=3 PASS ok"


def test_crash_becomes_failed_check():
    result = V.run_job(("check_oracle", ("T", 9)))
    assert not result.passed and "error" in result.detail


@pytest.mark.parametrize("max_n", [2, 3])
def test_small_suites_pass(max_n):
    results = V.run_suite(max_n, max_n)
    assert all(r.passed for r in results), V.format_table(results)
    lines = [r.line() for r in results]
    if max_n == 2:
        assert "CHECK alpha-vs-beta n=2 PASS 2 equal, 0 differ" in lines
    else:
        assert "CHECK alpha-vs-beta n=3 PASS 3 equal, 2 swapped" in lines


def test_suite_six_includes_rectangulations():
    names = {(name, args) for name, args in V.suite_jobs(6, 6)}
    assert ("check_rectangulations", (6,)) in names
    assert V.check_rectangulations(5).passed


def test_report_table_is_aligned():
    table = V.format_table(V.run_suite(1, 1))
    rows = table.splitlines()
    assert rows[-1].endswith("checks passed")
    status_col = rows[0].index("status")
    assert all(row[status_col:status_col + 4] == "PASS" for row in rows[1:-1])


def test_worked_example_check():
    r = V.check_worked_example()
    assert r.passed, r.detail


def test_class_counts_at_size_four():
    assert V.class_counts(4) == {"m": 5, "r": 5, "l": 3, "f": 1}


def test_beta_check_catches_a_wrong_pair(monkeypatch):
    import catalan_bijections.verify as mod

    monkeypatch.setattr(mod, "beta_inv", lambda s: None)
    assert not mod.check_beta(2).passed


def test_family_enum_is_string_like():
    assert Family("T") is Family.T and str(Family.S) == "S"
