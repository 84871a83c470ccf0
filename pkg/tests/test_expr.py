import pytest

from chowq import make_ring
from chowq.expr import (DyadicInIntegerRing, ExprSyntaxError, Gen, Lit, Power, Product, Sum,
                        UnknownGenerator, evaluate, parse_expr)

RING = make_ring("quadric_integral_even", 2)


def test_parse_tree():
    tree = parse_expr("h^2 + 3*gamma")
    assert tree == Sum((Power(Gen("h"), 2), Product((Lit(3), Gen("gamma")))))


@pytest.mark.parametrize("text,expected", [
    ("h*h", "2*h*gamma + c1F*h - c2F"),
    ("(h + gamma)^2 - h^2 - gamma^2 - 2*h*gamma", "0"),
    ("-gamma^2", "c1F*gamma"),
    ("h^0", "1"),
    ("2*(c1F - c1F)", "0"),
])
def test_evaluate(text, expected):
    assert RING(text).to_text() == expected


def test_dyadic_literals():
    halves = make_ring("quadric_halves", 2, point=True)
    assert halves("1/2^1*h + 1/2^1*h").to_text() == "h"
    with pytest.raises(DyadicInIntegerRing):
        RING("1/2^1*h")


@pytest.mark.parametrize("text", ["h +", "h^(-1)", "*h", "h^", "(h", "h)", "h $ gamma", ""])
def test_syntax_errors(text):
    with pytest.raises(ExprSyntaxError) as info:
        RING(text)
    assert info.value.code == "SYNTAX_ERROR"
    assert info.value.position >= 0


def test_unknown_generator():
    with pytest.raises(UnknownGenerator) as info:
        RING("gamma*z")
    assert info.value.name == "z"


def test_named_elements_are_usable():
    tower = make_ring("flag_tower", 2)
    assert tower("xn") == tower("x2")
    assert evaluate(parse_expr("h1", tower), tower) is not None
