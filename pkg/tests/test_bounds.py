import json

import pytest
from hypothesis import given, strategies as st

from oracles import case_table

from hirzcusp.bounds import (
    BmyCheck, BoundReport, KodairaVerdict, bmy_check, bmy_h_check, bound_report,
    euler_complement, h0_lower_bound, kodaira_classify, max_cusps, twig_bound)
from hirzcusp.errors import DomainError
from hirzcusp.germs import CuspidalConfig
from hirzcusp.lattice import build

ORDER = {KodairaVerdict.UNKNOWN: 0, KodairaVerdict.AT_LEAST_ZERO: 1, KodairaVerdict.TWO: 2}


def test_euler():
    assert [euler_complement(g) for g in (0, 1, 5)] == [2, 4, 12]
    with pytest.raises(DomainError):
        euler_complement(-1)


def test_bmy_examples():
    v = KodairaVerdict.TWO
    assert bmy_check(build(CuspidalConfig.of(1, 2, 3)), v) == BmyCheck(True, 3, 36, True)
    assert bmy_check(build(CuspidalConfig.of(1, 2, 3, ["[2]"])), v) == BmyCheck(True, 2, 30, True)
    unk = bmy_check(build(CuspidalConfig.of(1, 2, 3)), KodairaVerdict.UNKNOWN)
    assert not unk.applicable and unk.passed is None
    assert bmy_h_check(30, 4) and not bmy_h_check(31, 4)


def test_h0():
    assert h0_lower_bound(1, 2, 1, [1]) == 6
    for e in range(4):
        for a in range(1, 5):
            for b in range(1, 5):
                assert h0_lower_bound(e, a, b, [0, 0]) * 2 == (b + 1) * (2 * a + 2 + b * e)
    # (2)(4)/2 - 2*3/2
    assert h0_lower_bound(0, 1, 1, [2]) == 1
    with pytest.raises(DomainError):
        h0_lower_bound(0, 0, 1)


def test_kodaira_examples():
    assert kodaira_classify(2, 1, 3, 1, 0) is KodairaVerdict.TWO
    assert kodaira_classify(1, 1, 3, 0, 3) is KodairaVerdict.TWO
    assert kodaira_classify(1, 1, 2, 0, 5) is KodairaVerdict.UNKNOWN
    assert kodaira_classify(1, 1, 3, 0, 2) is KodairaVerdict.AT_LEAST_ZERO
    # a = 2 - b e / 2 exactly: the strict inequality fails
    assert kodaira_classify(0, 2, 4, 0, 3) is KodairaVerdict.UNKNOWN
    assert kodaira_classify(1, 1, 3, 0, 2).value == "AtLeastZero"


@given(st.integers(0, 6), st.integers(0, 8), st.integers(1, 8), st.integers(0, 5),
       st.integers(0, 20))
def test_kodaira_matches_case_table(e, a, b, g, s):
    assert kodaira_classify(e, a, b, g, s).value == case_table(e, a, b, g, s)


@given(st.integers(0, 6), st.integers(0, 8), st.integers(1, 8), st.integers(0, 19))
def test_kodaira_monotone_in_s(e, a, b, s):
    assert ORDER[kodaira_classify(e, a, b, 0, s)] <= ORDER[kodaira_classify(e, a, b, 0, s + 1)]


def test_twig_bound():
    assert twig_bound(2, 0) == 29
    assert twig_bound(4, 1) == 50
    for n in (3, 4, 10):
        with pytest.raises(DomainError):
            twig_bound(2 - n, 0)


def test_max_cusps():
    assert [max_cusps(g) for g in (0, 1, 2)] == [14, 25, 35]
    with pytest.raises(DomainError):
        max_cusps(-1)


def test_final_display_identity():
    for g in range(-20, 60):
        for n in range(-5, 30):
            assert 12 * (2 * g + 2 - n) + 5 - 3 * g == 21 * g + 29 - 12 * n


def test_floor_chain():
    for g in range(51):
        assert max_cusps(g) == twig_bound(euler_complement(g), g) // 2


def test_bound_report_examples():
    rep = bound_report(CuspidalConfig.of(0, 2, 3, ["[2]", "[2]"]))
    assert (rep.g, rep.s, rep.bound, rep.satisfied) == (0, 2, 14, True)
    assert rep.euler_complement == 2
    rep = bound_report(CuspidalConfig.of(1, 2, 3))
    assert rep.s == 0 and rep.satisfied
    doc = rep.to_json()
    assert set(doc) == {"g", "s", "bound", "satisfied", "euler_complement", "bmy_left",
                        "bmy_right", "bmy_applicable", "kodaira_verdict"}
    assert json.loads(json.dumps(doc))["kodaira_verdict"] == "Two"


def test_synthetic_over_bound():
    rep = BoundReport.assemble(0, 15, BmyCheck(False, 0, 6, None), KodairaVerdict.UNKNOWN)
    assert rep.bound == 14 and not rep.satisfied


def test_report_fields_on_random_configs(configs200):
    for cfg in configs200:
        rep = bound_report(cfg)
        assert rep.bound == (21 * rep.g + 29) // 2
        assert rep.euler_complement == 2 * rep.g + 2
        assert rep.bmy_right == 6 * rep.g + 6
        assert rep.bmy_applicable == (rep.kodaira_verdict is not KodairaVerdict.UNKNOWN)
