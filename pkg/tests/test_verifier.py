import itertools

import pytest

from chowq import RingKind
from chowq.polynomials import graded_component, series_inverse, truncate
from chowq.verifier import (BoundTooLarge, Parity, Role, SplitModel, SubbundleSpec,
                            chern_pieces, euler_axioms_check, fulton_check, fulton_suite,
                            integral_odd_diagnostic, no_subbundle_check,
                            odd_chern_identity_check, oracle_relations_check, pushpull_check,
                            split_chern, whitney_invariance_check)


@pytest.mark.parametrize("n,parity", [(1, Parity.EVEN), (2, Parity.EVEN), (3, Parity.EVEN),
                                      (1, Parity.ODD), (2, Parity.ODD), (3, Parity.ODD)])
def test_quotient_from_complementary_roots_matches_series_inverse(n, parity):
    model = SplitModel(n, parity)
    bound = 2 * model.rank
    cv = split_chern(model, SubbundleSpec(frozenset(), Role.V), bound)
    for k in range(n + 1):
        for flips in itertools.combinations(range(1, n + 1), k):
            flips = frozenset(flips)
            ce = split_chern(model, SubbundleSpec(flips, Role.E), bound)
            q = split_chern(model, SubbundleSpec(flips, Role.V_MOD_E), bound)
            assert q == truncate(cv * series_inverse(ce, bound), bound)


def test_bound_and_flip_validation():
    model = SplitModel(2, Parity.EVEN)
    with pytest.raises(BoundTooLarge):
        split_chern(model, SubbundleSpec(frozenset(), Role.E), 9)
    with pytest.raises(ValueError):
        split_chern(model, SubbundleSpec(frozenset({3}), Role.E), 2)


def test_fulton_sign_witness():
    rep = fulton_check(4, Parity.EVEN, frozenset(), frozenset({1}))
    assert rep.ok and rep.witness == "c_4(F) = -c_4(E)"
    rep = fulton_check(4, Parity.EVEN, frozenset({2}), frozenset({1}))
    assert rep.ok and rep.witness == "c_4(F) = +c_4(E)"


@pytest.mark.parametrize("parity", list(Parity))
def test_fulton_all_pairs_small(parity):
    rep = fulton_suite(3, parity, all_pairs=True)
    assert rep.ok and rep.params["pairs"] == 64


def test_total_class_pieces():
    model = SplitModel(2, Parity.EVEN)
    pieces = chern_pieces(split_chern(model, SubbundleSpec(frozenset(), Role.E), 2), 2)
    assert pieces[2] == model.gen("y1") * model.gen("y2")
    assert pieces[1] == graded_component(model.gen("y1") + model.gen("y2"), 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_whitney_and_odd_identity(n):
    for parity in Parity:
        assert whitney_invariance_check(n, parity).ok
    assert odd_chern_identity_check(n).ok


def test_euler_and_pushpull():
    assert euler_axioms_check(2).ok
    assert pushpull_check(2).ok
    with pytest.raises(ValueError):
        euler_axioms_check(1)


@pytest.mark.parametrize("kind", [RingKind.FLAG_DN, RingKind.FLAG_BN, RingKind.QUADRIC_HALVES,
                                  RingKind.FLAG_TOWER, RingKind.QUADRIC_INTEGRAL_EVEN])
def test_oracle_small(kind):
    assert oracle_relations_check(kind, 2).ok


def test_example_and_control():
    rep = no_subbundle_check()
    assert rep.status == "UNSAT"
    eqs = {row["monomial"]: row["equation"] for row in rep.witness["system"]}
    assert eqs["x"] == "2 = 0"
    ctl = no_subbundle_check(perturbed=True)
    assert ctl.status == "SAT" and ctl.witness["a"] in (1, -1)


def test_integral_odd_diagnostic_reports_counts():
    w = integral_odd_diagnostic(2).witness
    assert w["reachable_monomials"] == 5
    assert isinstance(w["dependencies"], list)
