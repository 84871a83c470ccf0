import pytest

from chowq import RingKind, UnsupportedParameter, make_ring
from chowq.catalog import MIN_N, expected_rank
from chowq.soundness import ring_soundness_check


SIZES = [(k, n) for k in RingKind for n in range(MIN_N[k], 4 if k is RingKind.FLAG_BN else 5)]


@pytest.mark.parametrize("kind,n", SIZES, ids=[f"{k.value}-{n}" for k, n in SIZES])
def test_basis_size(kind, n):
    assert len(make_ring(kind, n).basis) == expected_rank(kind, n)


def test_rank_formulas():
    assert expected_rank("quadric_halves", 4) == 8
    assert expected_rank("projective_bundle", 5) == 5
    assert expected_rank("flag_tower", 4) == expected_rank("flag_dn", 4) == 192
    assert expected_rank("flag_bn", 3) == 48


@pytest.mark.parametrize("kind", list(RingKind))
def test_sound_at_smallest_parameter(kind):
    n = max(MIN_N[kind], 2)
    assert ring_soundness_check(make_ring(kind, n)).ok
    assert ring_soundness_check(make_ring(kind, n, point=True)).ok


def test_point_rings_have_no_base():
    for kind in RingKind:
        ring = make_ring(kind, MIN_N[kind], point=True)
        assert len(ring.base) == 0 and ring.point


def test_unsupported():
    with pytest.raises(UnsupportedParameter):
        make_ring("flag_dn", 0)
    with pytest.raises(UnsupportedParameter):
        make_ring("flag_dn", 99)
    with pytest.raises(UnsupportedParameter):
        make_ring("no_such_kind", 2)


def test_variants():
    assert make_ring("quadric_halves", 2).variant.value == "dyadic"
    assert make_ring("quadric_point_even", 2).variant.value == "int"


def test_two_torsion_in_bn():
    ring = make_ring("flag_bn", 2)
    assert ring("2*l").is_zero()
    assert not ring("l").is_zero()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_integral_even_over_a_point_is_the_point_quadric(n):
    src = make_ring("quadric_integral_even", n, point=True)
    tgt = make_ring("quadric_point_even", n)
    rename = lambda el: el.to_text().replace("gamma", "e")
    for a in src.basis:
        for b in src.basis:
            prod = src.basis_element(a) * src.basis_element(b)
            text = lambda m: src.fiber.monomial_text(m).replace("gamma", "e") or "1"
            assert rename(prod) == tgt(f"({text(a)})*({text(b)})").to_text()
