import pytest

import expdioph


def test_check():
    assert expdioph.check(2, 1, 2, 1, 3)
    assert expdioph.check(2, 1, 1, 2, 2)
    assert not expdioph.check(2, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        expdioph.check(1, 1, 1, 1, 1)


def test_big_comparisons():
    assert expdioph.cmp_powersum(5, 2, 2, 1, 3, 3) == "equal"
    assert expdioph.cmp_powersum(3, 1, 2, 1, 5, 2) == "less"
    assert expdioph.check_generic(89, 2, 91, 1, 13, 2)
    big = 10**40 + 1
    assert expdioph.cmp_powersum(big, 3, 2, 1, big, 3) == "greater"


def test_filters_explain():
    verdicts = expdioph.filters(4, 2, 1, 2, 3)
    name, passed, reason = verdicts[-1]
    assert name == "z_parity" and not passed and reason


def test_bounds():
    b = expdioph.bounds()["values"]
    assert b["s_max_coarse"] == 5040
    assert b["A_max_refined"] == 5044
    assert b["y_cap_final"] == 10


def test_small_cases_and_identities():
    assert expdioph.small_case_survivors() == [(8, 4, 1), (8, 4, 3)]
    assert expdioph.identity_scan("eq22", (1, 10000), y=(4, 64)) == []


def test_searches():
    assert expdioph.oracle_search(12, 12, 16) == [(2, 1, 1, 2, 2), (2, 1, 2, 1, 3)]
    assert sorted(map(tuple, expdioph.corollary_search(501, 60))) == [(5, 1, 2, 2), (5, 2, 1, 3)]
    rep = expdioph.theorem_search(10)
    assert rep["solutions"] == []
    assert rep["units_done"] == rep["units_total"]


def test_theorem_search_checkpoint(tmp_path):
    ck = tmp_path / "y9.jsonl"
    first = expdioph.theorem_search(9, threads=2, checkpoint=str(ck))
    again = expdioph.theorem_search(9, checkpoint=str(ck))
    assert ck.read_text().count("\n") == first["units_total"]
    first.pop("wall_ms")
    again.pop("wall_ms")
    assert first == again


def test_verify_aux():
    le = expdioph.verify_aux("le")
    assert le["passed"]
    assert le["solutions"] == [[5, 3, 1, 3], [7, 3, 5, 4], [11, 5, 2, 3]]
    with pytest.raises(ValueError):
        expdioph.verify_aux("nope")
