import dataclasses
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chowq import make_ring
from chowq.polynomials import Polynomial
from chowq.rings import (NoPushforwardData, NonterminationGuard, NotPointRing, NotTopDegree,
                         RingMismatch, RingPresentation, Rule, comparison_embed, normal_form,
                         point_degree, pushforward, ring_mul)
from chowq.scalars import Variant
from chowq.soundness import ring_soundness_check

HALVES = make_ring("quadric_halves", 3)
INT_EVEN = make_ring("quadric_integral_even", 2)


def raw_polys(ring, max_exp=4):
    mono = st.tuples(*[st.integers(0, max_exp)] * len(ring.fiber),
                     *[st.integers(0, 1)] * len(ring.base))
    return st.dictionaries(mono, st.integers(-50, 50), max_size=4).map(
        lambda d: Polynomial(ring.full, ring.variant, d))


@settings(max_examples=50, deadline=None)
@given(raw_polys(HALVES))
def test_normal_form_idempotent(p):
    nf = normal_form(HALVES, p)
    assert normal_form(HALVES, nf.lift()) == nf
    assert nf.support() <= set(HALVES.basis)


@settings(max_examples=40, deadline=None)
@given(raw_polys(HALVES, 2), raw_polys(HALVES, 2))
def test_representative_independence(p, q):
    # adding a multiple of a defining relation does not move the normal form
    label, rel = HALVES.relations[0]
    shifted = p + rel * q
    assert normal_form(HALVES, shifted) == normal_form(HALVES, p)


@settings(max_examples=40, deadline=None)
@given(raw_polys(INT_EVEN, 3), raw_polys(INT_EVEN, 3))
def test_multiplication_matches_raw_product(p, q):
    a, b = normal_form(INT_EVEN, p), normal_form(INT_EVEN, q)
    assert ring_mul(INT_EVEN, a, b) == normal_form(INT_EVEN, p * q)


def test_gradedness():
    for b1, b2 in itertools.product(HALVES.basis, repeat=2):
        prod = HALVES.basis_element(b1) * HALVES.basis_element(b2)
        if prod:
            assert prod.degrees() == {HALVES.basis_degree(b1) + HALVES.basis_degree(b2)}


def test_projection_formula_on_basis():
    ring = make_ring("quadric_halves", 2)
    alpha = Polynomial.gen(ring.base, "c2V", ring.variant) + Polynomial.gen(ring.base, "xn", ring.variant) * 3
    for b in ring.basis:
        el = ring.basis_element(b)
        lhs = pushforward(ring, el.times_base(alpha))
        assert lhs == pushforward(ring, el) * alpha


def test_worked_examples():
    pe2 = make_ring("quadric_point_even", 2)
    assert pe2("h^2").to_text() == "2*h*e"
    assert pe2("e*e").is_zero()
    assert make_ring("quadric_point_even", 3)("e*e").to_text() == "h^2*e"
    assert INT_EVEN("h*h").to_text() == "2*h*gamma + c1F*h - c2F"
    assert INT_EVEN("gamma^2").to_text() == "-c1F*gamma"
    assert make_ring("quadric_halves", 2, point=True)("x*x").to_text() == "-h^2"


def test_point_degree_and_errors():
    pe2 = make_ring("quadric_point_even", 2)
    assert point_degree(pe2, pe2("h^2")).raw() == 2
    assert point_degree(pe2, pe2("h*e")).raw() == 1
    with pytest.raises(NotTopDegree):
        point_degree(pe2, pe2("h"))
    with pytest.raises(NotPointRing):
        point_degree(HALVES, HALVES("h"))
    with pytest.raises(NoPushforwardData):
        pushforward(make_ring("quadric_integral_odd", 2), make_ring("quadric_integral_odd", 2)("h"))
    with pytest.raises(RingMismatch):
        pe2("h") * make_ring("quadric_point_even", 2)("h")


def test_comparison_embed_examples():
    src = make_ring("quadric_integral_even", 2, point=True)
    assert comparison_embed(src("gamma") * src("gamma")).is_zero()
    assert comparison_embed(src("gamma")).to_text() == "1/2^1*h - 1/2^1*x"


def test_step_budget_guard(monkeypatch):
    monkeypatch.setenv("CHOWQ_STEP_BUDGET", "3")
    ring = make_ring("flag_dn", 3)
    with pytest.raises(NonterminationGuard):
        ring("c1^6 * x1^3")


def test_soundness_detects_a_corrupted_rule():
    ring = make_ring("flag_tower", 2)
    rule = next(r for r in ring.rules if ring.fiber.monomial_text(r.lhs) == "h2^3")
    m = next(iter(rule.rhs.terms))
    terms = dict(rule.rhs.terms)
    terms[m] = -terms[m]
    bad = Rule(rule.lhs, Polynomial(rule.rhs.table, rule.rhs.variant, terms), rule.label)
    fields = {f.name: getattr(ring, f.name) for f in dataclasses.fields(ring)}
    fields["rules"] = tuple(bad if r is rule else r for r in ring.rules)
    rep = ring_soundness_check(RingPresentation(**fields))
    assert rep.status == "FAIL"
    assert ring_soundness_check(ring).ok


def test_soundness_backends_agree():
    ring = make_ring("flag_bn", 2)
    a, b = ring_soundness_check(ring, use_flint=True), ring_soundness_check(ring, use_flint=False)
    assert a.ok and b.ok
    assert (a.witness["backend"], b.witness["backend"]) == ("flint", "python")


def test_json_shape():
    data = INT_EVEN("h*h").to_json()
    assert data["ring"] == {"kind": "quadric_integral_even", "n": 2}
    basis = {tuple(sorted((g, e) for g, e in t["basis"].items() if e)) for t in data["terms"]}
    assert basis == {(("gamma", 1), ("h", 1)), (("h", 1),), ()}
