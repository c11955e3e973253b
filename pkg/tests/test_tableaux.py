from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from symfunc.partitions import Partition, partitions_of
from symfunc.ring import SymFunc, basis_element, expand, hn
from symfunc.tableaux import (
    UniPoly,
    bounded_height_pairs,
    bounded_height_schur_sum,
    catalan,
    rs0_power_expansion,
    syt_count,
    syt_count_brute,
    theta,
)
from symfunc.vertex import cs_column, rs_row, rs_rows

P = Partition

# brute tableau enumeration is exponential; cap the shape size
parts_strategy = st.lists(st.integers(1, 5), max_size=5).filter(
    lambda xs: sum(xs) <= 8
).map(lambda xs: P(sorted(xs, reverse=True)))


def test_unipoly_basics():
    p = UniPoly({2: Fraction(1, 2), 0: 1})
    q = UniPoly({1: 1})
    assert (p * q).coefficient(3) == Fraction(1, 2)
    assert (p + UniPoly({0: -1})).coefficient(0) == 0
    assert UniPoly({0: 0}).is_zero
    assert p.degree() == 2
    with pytest.raises(ValueError):
        UniPoly({-1: 1})


def test_syt_count_examples():
    assert syt_count(P((1, 1, 1, 1))) == 1
    assert syt_count(P((2, 1))) == 2
    assert syt_count(P((3, 2))) == 5
    assert syt_count(P(())) == 1
    # enumeration agrees on the documented cases
    assert syt_count_brute(P((2, 1))) == 2
    assert syt_count_brute(P((3, 2))) == 5


@given(parts_strategy)
@settings(max_examples=50, deadline=None)
def test_syt_hooks_vs_enumeration(lam):
    assert syt_count(lam) == syt_count_brute(lam)


def test_theta_examples():
    assert theta(basis_element("h", (3,))) == UniPoly({3: Fraction(1, 6)})
    assert theta(SymFunc.one()) == UniPoly.one()
    assert theta(basis_element("s", (2, 1))) == UniPoly({3: Fraction(1, 3)})
    assert theta(basis_element("p", (2,))).is_zero


@given(parts_strategy, parts_strategy)
@settings(max_examples=40, deadline=None)
def test_theta_multiplicative(lam, mu):
    g1 = basis_element("h", lam)
    g2 = basis_element("s", mu)
    assert theta(g1 * g2) == theta(g1) * theta(g2)


def test_schur_sum_examples():
    want = basis_element("s", (3,)) + 2 * basis_element("s", (2, 1))
    assert bounded_height_schur_sum(3, 2, "formula") == want
    assert bounded_height_schur_sum(3, 2, "operator") == want
    assert bounded_height_schur_sum(0, 4, "formula") == SymFunc.one()
    assert bounded_height_schur_sum(0, 4, "operator") == SymFunc.one()
    assert bounded_height_schur_sum(2, 1, "formula") == basis_element("s", (2,))
    with pytest.raises(ValueError):
        bounded_height_schur_sum(2, 1, "closed")


def test_schur_sum_is_syt_weighted():
    for n in range(7):
        for k in range(1, 4):
            want = SymFunc.zero()
            for lam in partitions_of(n, max_length=k):
                want = want + syt_count(lam) * basis_element("s", lam)
            assert bounded_height_schur_sum(n, k, "formula") == want


def test_rs0_power_expansion_examples():
    assert rs0_power_expansion(0, 2) == SymFunc.one()
    assert rs0_power_expansion(2, 1) == rs_row(0, hn(1) ** 2)
    assert rs0_power_expansion(2, 2) == rs_rows(0, 2, hn(1) ** 2)
    for n in range(5):
        for k in range(1, 3):
            assert rs0_power_expansion(n, k) == rs_rows(0, k, hn(1) ** n)


def test_pairs_examples():
    assert bounded_height_pairs(5, 1, "closed") == 1
    assert bounded_height_pairs(4, 2, "det") == 14
    assert bounded_height_pairs(3, 3, "brute") == 6
    with pytest.raises(ValueError):
        bounded_height_pairs(3, 0)
    with pytest.raises(ValueError):
        bounded_height_pairs(3, 2, "magic")


@given(st.integers(0, 7), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_pairs_methods_agree(n, k):
    closed = bounded_height_pairs(n, k, "closed")
    det = bounded_height_pairs(n, k, "det")
    brute = bounded_height_pairs(n, k, "brute")
    assert closed == det == brute


@given(st.integers(0, 8))
@settings(max_examples=20, deadline=None)
def test_pairs_catalan_and_saturation(n):
    assert bounded_height_pairs(n, 2, "closed") == catalan(n)
    assert bounded_height_pairs(n, max(n, 1), "closed") == factorial(n)


def test_catalan_examples():
    assert catalan(0) == 1
    assert catalan(4) == 14
    assert catalan(10) == 16796
    assert [catalan(n) for n in range(11)] == [
        1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
    ]
