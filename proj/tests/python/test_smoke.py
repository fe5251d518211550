from fractions import Fraction

import pytest

import sqscope


def test_sequence_both_engines():
    w = "abaababaabaababaa"
    assert sqscope.sequence(w) == "22000011100110010"
    assert sqscope.sequence(w, engine="oracle") == "22000011100110010"


def test_fs_positions():
    assert sqscope.fs_positions("abaababaabaababaa") == [
        (1, "abaab", "abaababa"),
        (2, "baaba", "baababaa"),
    ]


def test_distinct_squares_and_density():
    records = sqscope.distinct_squares("abaababaabaababaa")
    assert len(records) == 10
    assert ("abaab", 1) in records
    assert sqscope.density("abaababaabaababaa") == Fraction(10, 17)
    assert sqscope.density_3dp(sqscope.build("yij:i=5,j=15")) == ".781"


def test_constructions():
    assert sqscope.build("wm:m=1") == "babbababba"
    w = sqscope.build("wm:m=7")
    assert len(w) == 52
    assert sqscope.sequence(w) == sqscope.expected_sequence("wm:m=7")
    assert sqscope.expected_sequence("xk:k=2") is None


def test_factorize_roundtrip():
    assert sqscope.factorize("abaab", "abaababa") == ("aba", "ab", 1, 1)
    assert sqscope.expand("aba", "ab", 1, 1) == "abaababaabaababa"


def test_best_i_and_runs():
    assert sqscope.best_i_for_j(64) == 19
    r = sqscope.analyze_runs("2220111011100000011110000111100111000010")
    assert r["runs"][0] == (2, 1, 3)
    assert not r["strong_ok"]
    assert r["weak_ok"]


def test_search():
    r = sqscope.search(1, 3, 5, length=10)
    assert r["found"] and r["witness"] == "abaababaab"
    assert sqscope.search(1, 6, 8, length=16)["status"] == "not_found"
    assert sqscope.search(1, 6, 9, alphabet=3, length=40, budget_ms=-1)["status"] == "inconclusive"


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        sqscope.sequence("ab1")
    with pytest.raises(ValueError, match="'m'"):
        sqscope.build("wm:m=x")
    with pytest.raises(ValueError):
        sqscope.factorize("ab", "abab")
