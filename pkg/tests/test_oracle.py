"""Brute-force extremal scans certifying the closed-form operations.

Production implication/subtraction/negations use local formulas; the oracle
recomputes them from the defining universal properties by scanning every
subobject.  Both routes must agree everywhere, and a corrupted operation
handed to the adjunction checker must surface a concrete counterexample.
"""
import json

from biheyt import (bottom, brute_coheyting_subtract, brute_heyting_implies,
                    brute_negations, check_adjunctions, coheyting_not,
                    coheyting_subtract, heyting_implies, heyting_not, top)


def test_brute_implication_universal_cases(mo2_poset, mo2_subs):
    t = top(mo2_poset)
    for s in mo2_subs:
        assert brute_heyting_implies(s, s) == t
        assert brute_heyting_implies(t, s) == s


def test_brute_subtraction_universal_cases(mo2_poset, mo2_subs):
    b = bottom(mo2_poset)
    for s in mo2_subs:
        assert brute_coheyting_subtract(s, s) == b
        assert brute_coheyting_subtract(s, b) == s


def test_brute_negations_of_the_bounds(boolean3_poset):
    t, b = top(boolean3_poset), bottom(boolean3_poset)
    assert brute_negations(t) == (b, b)
    assert brute_negations(b) == (t, t)


def test_production_matches_oracle_on_all_pairs(boolean3_subs, mo2_subs):
    for subs in (mo2_subs, boolean3_subs):
        for s in subs:
            for t in subs:
                assert heyting_implies(s, t) == brute_heyting_implies(s, t)
                assert coheyting_subtract(s, t) == brute_coheyting_subtract(s, t)


def test_production_negations_match_oracle(boolean3_subs, mo2_subs):
    for subs in (mo2_subs, boolean3_subs):
        for s in subs:
            assert brute_negations(s) == (heyting_not(s), coheyting_not(s))


def test_corrupted_implication_is_caught(mo2_poset):
    t = top(mo2_poset)
    report = check_adjunctions(mo2_poset, heyting_impl=lambda s, u: t)
    assert not report.passed
    ce = report.counterexample
    assert ce["law"] == "heyting"
    assert ce["below_implication"] and not ce["meet_below"]
    assert set(ce) >= {"S", "T", "R"}


def test_corrupted_subtraction_is_caught(mo2_poset):
    b = bottom(mo2_poset)
    report = check_adjunctions(mo2_poset, coheyting_sub=lambda s, u: b)
    assert not report.passed
    assert report.counterexample["law"] == "coheyting"
    assert report.counterexample["subtraction_below"]
    assert not report.counterexample["inside_join"]


def test_report_serializes(mo2_poset):
    report = check_adjunctions(mo2_poset)
    blob = report.to_json()
    assert blob["passed"] is True and blob["counterexample"] is None
    assert blob["subobjects"] == 16 and blob["triples"] == 16 ** 3
    json.dumps(blob)

    bad = check_adjunctions(mo2_poset, heyting_impl=lambda s, u: top(mo2_poset))
    json.dumps(bad.to_json())
