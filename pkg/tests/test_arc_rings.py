from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from arcring import matchings as m
from arcring.arc_rings import (BasisMonomial, RingElement, ring_basis, unit,
                               multiply, multiply_diagrammatic, BUILTIN_RULES,
                               FlippedRule, CustomRule, validate_rule,
                               format_element, parse_element, exterior_degree)

DEFAULT = BUILTIN_RULES["default"]
ORD = BUILTIN_RULES["ord"]


def mono(top, bottom, colored=()):
    return RingElement.monomial(BasisMonomial(top, bottom,
                                              frozenset(colored)))


def test_basis_size():
    # total rank of the ring is sum over pairs of 2^circles
    for n in (1, 2, 3):
        expect = sum(2 ** len(m.closed_diagram(b, a).circles)
                     for b in m.enumerate_matchings(n)
                     for a in m.enumerate_matchings(n))
        assert len(ring_basis(n)) == expect


def test_degrees():
    x = BasisMonomial("(())", "()()", frozenset())
    assert x.degree() == 1  # one circle, nothing colored, n=2
    y = BasisMonomial("(())", "(())", frozenset({1, 2}))
    assert y.degree() == 4
    assert exterior_degree(y) == 2


def test_worked_product_colored():
    x = mono("(())", "()()")
    y = mono("()()", "(())", {1})
    assert multiply(DEFAULT, x, y) == -mono("(())", "(())", {1, 2})
    assert multiply(DEFAULT, x, y, "even") == mono("(())", "(())", {1, 2})


def test_worked_product_split():
    x = mono("(())", "()()")
    y = mono("()()", "(())")
    out = multiply(DEFAULT, x, y)
    assert out == mono("(())", "(())", {2}) - mono("(())", "(())", {1})


def test_unit_law():
    for n in (1, 2):
        e = unit(n)
        for bm, _ in ring_basis(n):
            x = RingElement.monomial(bm)
            assert multiply(DEFAULT, e, x) == x
            assert multiply(DEFAULT, x, e) == x


def test_non_associativity_witness():
    g = mono("(())", "(())", {1})
    u = mono("(())", "()()")
    v = mono("()()", "(())")
    for rule in (DEFAULT, ORD):
        left = multiply(rule, multiply(rule, g, u), v)
        right = multiply(rule, g, multiply(rule, u, v))
        assert not left.is_zero()
        assert left == -right


def test_block_mismatch_is_zero():
    x = mono("(())", "(())")
    y = mono("()()", "()()")
    assert multiply(DEFAULT, x, y).is_zero()


@pytest.mark.parametrize("rule", [DEFAULT, ORD], ids=["default", "ord"])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_diagrammatic_oracle_agrees(rule, n):
    basis = [bm for bm, _ in ring_basis(n)]
    for mx in basis:
        x = RingElement.monomial(mx)
        for my in basis:
            if mx.bottom != my.top:
                continue
            y = RingElement.monomial(my)
            assert multiply(rule, x, y) == multiply_diagrammatic(rule, x, y)


def test_degree_additivity():
    for n in (1, 2):
        for mx, dx in ring_basis(n):
            x = RingElement.monomial(mx)
            for my, dy in ring_basis(n):
                if mx.bottom != my.top:
                    continue
                out = multiply(DEFAULT, x, RingElement.monomial(my))
                for mz in out.terms:
                    assert mz.degree() == dx + dy


def test_flipped_rule_flips_split_sign():
    x = mono("(())", "()()")
    y = mono("()()", "(())")
    flip = FlippedRule(DEFAULT)
    assert multiply(flip, x, y) == -multiply(DEFAULT, x, y)


def test_custom_rule_validation():
    with pytest.raises(ValueError):
        CustomRule(2, orders={("(())", "(())", "(())"): (2, 1, 3, 4)})
    rule = CustomRule(2, orders={("(())", "(())", "(())"): (1, 4, 2, 3)})
    validate_rule(rule, 2)


def test_even_ignores_rule():
    basis = [bm for bm, _ in ring_basis(2)]
    for mx in basis:
        x = RingElement.monomial(mx)
        for my in basis:
            if mx.bottom != my.top:
                continue
            y = RingElement.monomial(my)
            assert multiply(DEFAULT, x, y, "even") == \
                multiply(ORD, x, y, "even")


def test_format_parse_golden():
    x = mono("(())", "(())", {1, 2}) - mono("(())", "(())", {1}).scale(2)
    s = format_element(x)
    assert s == "-2*[(())|(())|{1}] + 1*[(())|(())|{1,2}]"
    assert parse_element(s) == x
    assert format_element(RingElement.zero(2)) == "0"
    assert parse_element("0", 2) == RingElement.zero(2)


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_element("[(())|()|{}]")  # size mismatch
    with pytest.raises(ValueError):
        parse_element("[(())|(())|{7}]")  # circle index out of range
    with pytest.raises(ValueError):
        parse_element("junk")


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_format_parse_roundtrip(data):
    n = data.draw(st.sampled_from([1, 2]))
    basis = [bm for bm, _ in ring_basis(n)]
    picks = data.draw(st.lists(
        st.tuples(st.sampled_from(basis), st.integers(-9, 9)), max_size=4))
    elem = RingElement(n, {bm: c for bm, c in picks})
    assert parse_element(format_element(elem), n) == elem
