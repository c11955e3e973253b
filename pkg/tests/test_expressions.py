from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from symfunc.expressions import ParseError, parse_expression
from symfunc.partitions import Partition, partitions_of
from symfunc.ring import BASES, SymFunc, basis_element, expand, hn, pn

P = Partition


def test_single_atom():
    assert parse_expression("h[2,1]") == basis_element("h", P((2, 1)))


def test_combination():
    want = Fraction(3, 2) * basis_element("s", P((2, 1))) - pn(3)
    assert parse_expression("3/2*s[2,1] - p[3]") == want


def test_power_shorthand():
    assert parse_expression("h[1]^4") == hn(1) ** 4
    assert parse_expression("p[2]^0") == SymFunc.one()


def test_products_and_constants():
    assert parse_expression("p[3]*h[1]") == pn(3) * hn(1)
    assert parse_expression("1") == SymFunc.one()
    assert parse_expression("5/3") == Fraction(5, 3) * SymFunc.one()
    assert parse_expression("2*3") == 6 * SymFunc.one()
    assert parse_expression("e[]") == SymFunc.one()


def test_signs_and_whitespace():
    assert parse_expression("-p[2]") == -pn(2)
    assert parse_expression("+p[2]") == pn(2)
    assert parse_expression("  h[ 2 , 1 ] - 1 ") == basis_element("h", P((2, 1))) - SymFunc.one()
    assert parse_expression("p[2]-p[2]").is_zero


@pytest.mark.parametrize(
    "src",
    ["", "h[", "h[2,", "h[1,2]", "q[2]", "3/0", "h[2]]", "p[2] +", "*p[2]", "h[0]"],
)
def test_parse_errors(src):
    with pytest.raises(ParseError) as exc:
        parse_expression(src)
    assert "position" in str(exc.value)


def test_error_position_is_annotated():
    with pytest.raises(ParseError) as exc:
        parse_expression("p[3] @ h[1]")
    assert exc.value.pos == 5


@given(
    st.sampled_from(BASES),
    st.lists(st.integers(1, 5), max_size=4).filter(lambda xs: sum(xs) <= 8),
)
@settings(max_examples=80, deadline=None)
def test_print_parse_roundtrip_single(b, parts):
    lam = P(sorted(parts, reverse=True))
    g = basis_element(b, lam)
    for dst in BASES:
        assert parse_expression(expand(g, dst).to_text()) == g


@given(
    st.sampled_from(BASES),
    st.lists(
        st.tuples(
            st.integers(-3, 3),
            st.lists(st.integers(1, 4), max_size=3),
        ),
        max_size=3,
    ),
)
@settings(max_examples=60, deadline=None)
def test_print_parse_roundtrip_combination(b, spec):
    g = SymFunc.zero()
    for coeff, parts in spec:
        g = g + coeff * basis_element(b, P(sorted(parts, reverse=True)))
    assert parse_expression(expand(g, b).to_text()) == g
