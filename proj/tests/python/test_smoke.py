from fractions import Fraction

import _irrec as irrec


def test_counts():
    assert irrec.count_u(0, [3]) == 5
    assert irrec.count_big_b(0, [1, 1, 1]) == 2
    assert irrec.count_pruned(1, [3]) == Fraction(1, 3)
    assert irrec.count_u_local(1, [1, 1], "half") == Fraction(1, 8)
    assert irrec.three_term_u(1, 4) == 10
    assert irrec.epsilon_hz(1, 2) == 1
    assert irrec.one_point(2) == Fraction(9, 1024)
    assert irrec.f_bullet(2, 2) == Fraction(1, 2)


def test_invariants():
    s = irrec.invariant_string("airy", 1, 1)
    assert "1/16" in s
    coeffs = irrec.invariant_taylor("dessin", 0, 3, 1)
    # constant coefficient equals the pruned three-face count
    assert coeffs[0] == 2
    cls = irrec.branch_classification("dessin")
    assert (Fraction(-1), "irregular-simple-pole") in [(a, c) for a, c in cls]


def test_oracle_and_verify():
    counts = irrec.dessins_brute([3])
    assert counts[1] == Fraction(1, 3)
    report = irrec.verify("three-term")
    assert report["failures"] == 0
    assert "oracle" in irrec.suite_names()
