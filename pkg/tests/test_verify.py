"""Identity checkers: pass on clean families, fail loudly on corrupted ones."""

from fractions import Fraction

import pytest

from degenpoly.verify import (
    FamilyMemo,
    _classical_genocchi_numbers,
    check_basics,
    check_corollary2,
    check_eq15,
    check_eq19,
    check_prop4,
    check_reduction,
    check_theorem1,
    check_theorem3,
    check_vanishing,
    default_k_lists,
    run_identity,
)

K_LISTS = [(1,), (-2,), (1, 2), (0, -1), (1, 1, 1), (-1, 1, 2)]


@pytest.fixture(scope="module")
def memo():
    return FamilyMemo()


@pytest.mark.parametrize("ks", K_LISTS)
def test_theorem1_passes(ks, memo):
    report = check_theorem1(ks, 8, memo)
    assert report.identity_id == "Thm1"
    assert report.passed
    # cells cover n = r..n_max (vanishing violations would add extras)
    assert len(report.cells) == 8 - len(ks) + 1
    assert report.cells[0].params == (("n", len(ks)),)


@pytest.mark.parametrize("ks", K_LISTS)
def test_corollary2_passes(ks, memo):
    report = check_corollary2(ks, 8, memo)
    assert report.identity_id == "Cor2"
    assert report.passed
    assert len(report.cells) == 8 - len(ks) + 1


@pytest.mark.parametrize("ks", K_LISTS)
def test_theorem3_passes(ks, memo):
    report = check_theorem3(ks, 8, memo)
    assert report.identity_id == "Thm3"
    assert report.passed


@pytest.mark.parametrize("ks", K_LISTS)
def test_prop4_passes(ks, memo):
    report = check_prop4(ks, 8, memo)
    assert report.passed
    assert len(report.cells) == 9


@pytest.mark.parametrize("ks", K_LISTS)
def test_eq15_passes(ks, memo):
    assert check_eq15(ks, 8, memo).passed


@pytest.mark.parametrize("ks", K_LISTS)
def test_vanishing_passes(ks, memo):
    report = check_vanishing(ks, 8, memo)
    assert report.passed
    assert len(report.cells) == len(ks)


def test_eq19_passes(memo):
    assert check_eq19(8, 3, memo).passed


def test_reduction_passes(memo):
    assert check_reduction(8, memo).passed


def test_basics_pass(memo):
    reports = check_basics(8, memo)
    assert [r.identity_id for r in reports] == ["Eq05", "InverseLogExp", "LambdaZeroClassical"]
    assert all(r.passed for r in reports)


def test_edge_small_n_max():
    # identities stay well defined when n_max < r
    memo = FamilyMemo()
    assert check_prop4((1,), 0, memo).passed
    assert len(check_prop4((1,), 0, memo).cells) == 1
    assert check_theorem1((1, 2), 1, memo).passed  # vanishing clause only
    assert check_corollary2((1, 2), 1, memo).cells == ()
    assert check_theorem3((1, 2), 1, memo).cells == ()
    assert len(check_vanishing((1, 2, 1), 1, memo).cells) == 2


def test_checkers_validate_ks():
    with pytest.raises(ValueError):
        check_theorem1((), 5)


def test_corrupt_memo_fails_dependent_identities():
    memo = FamilyMemo(corrupt=True)
    assert not check_theorem1((1,), 5, memo).passed
    assert not check_corollary2((1, 2), 5, memo).passed
    assert not check_eq15((1,), 5, memo).passed
    assert not check_prop4((2,), 5, memo).passed
    # the corrupted slot is the top value, so the vanishing cells stay clean
    assert check_vanishing((1, 2), 5, memo).passed


def test_corrupt_failure_carries_both_sides():
    memo = FamilyMemo(corrupt=True)
    report = check_eq15((1,), 4, memo)
    bad = [cell for cell in report.cells if not cell.passed]
    assert len(bad) == 1
    cell = bad[0]
    assert cell.params == (("n", 4),)
    assert cell.lhs is not None and cell.rhs is not None
    assert cell.lhs != cell.rhs
    d = cell.to_dict()
    assert d["passed"] is False and "lhs" in d and "rhs" in d


def test_passing_cell_omits_sides():
    report = check_vanishing((1,), 3)
    cell = report.cells[0]
    assert cell.passed and cell.lhs is None and cell.rhs is None
    assert "lhs" not in cell.to_dict()


def test_report_to_dict_shape():
    report = check_theorem1((1, 2), 4, FamilyMemo())
    d = report.to_dict()
    assert d["identity_id"] == "Thm1"
    assert d["params"] == {"ks": [1, 2], "n_max": 4}
    assert d["passed"] is True
    assert len(d["cells"]) == len(report.cells)
    assert d["cells"][0]["params"] == {"n": 2}


def test_memo_caches_and_is_shared():
    memo = FamilyMemo()
    a = memo.multi_poly_genocchi((1, 2), "x", 6)
    b = memo.multi_poly_genocchi([1, 2], "x", 6)
    assert a is b
    assert memo.stirling(6) is memo.stirling(6)


def test_classical_genocchi_oracle_frozen():
    assert _classical_genocchi_numbers(8) == [
        Fraction(0),
        Fraction(1),
        Fraction(-1),
        Fraction(0),
        Fraction(1),
        Fraction(0),
        Fraction(-3),
        Fraction(0),
        Fraction(17),
    ]


def test_default_k_lists_shape():
    lists = default_k_lists()
    assert len(lists) == 29
    assert len(set(lists)) == 29
    assert all(1 <= len(ks) <= 3 for ks in lists)
    assert all(-2 <= k <= 2 for ks in lists for k in ks)
    # exhaustive grids for r = 1 and r = 2
    assert {ks for ks in lists if len(ks) == 1} == {(k,) for k in range(-2, 3)}
    assert {ks for ks in lists if len(ks) == 2} == {
        (a, b) for a in range(-1, 3) for b in range(-1, 3)
    }
    assert sum(1 for ks in lists if len(ks) == 3) == 8


def test_run_identity_single():
    reports = run_identity("thm1", 6, [(1,), (2, 1)])
    assert [r.identity_id for r in reports] == ["Thm1", "Thm1"]
    assert all(r.passed for r in reports)


def test_run_identity_all_composition():
    reports = run_identity("all", 4, [(1,), (1, 2)])
    ids = [r.identity_id for r in reports]
    # six per-ks identities over two k-lists, then the fixed reports
    assert ids[:12] == (
        ["Thm1"] * 2 + ["Cor2"] * 2 + ["Thm3"] * 2 + ["Prop4"] * 2 + ["Eq15"] * 2 + ["Vanishing"] * 2
    )
    assert ids[12:] == ["Eq19", "ReductionR1K1", "Eq05", "InverseLogExp", "LambdaZeroClassical"]
    assert all(r.passed for r in reports)


def test_run_identity_default_sweep_skips_oversized_r():
    reports = run_identity("vanishing", 2)
    assert all(len(dict(r.params)["ks"]) <= 2 for r in reports)
    assert len(reports) == 21  # 5 singles + 16 pairs


def test_run_identity_rejects_unknown():
    with pytest.raises(ValueError):
        run_identity("nope", 4)


def test_run_identity_explicit_infeasible_list_is_honored():
    # explicit ks longer than n_max still runs; the vanishing clause holds,
    # so no cells at all are emitted and the report passes vacuously
    reports = run_identity("thm1", 1, [(1, 2, 1)])
    assert len(reports) == 1
    assert reports[0].cells == ()
    assert reports[0].passed
