import pytest
from hypothesis import given, settings, strategies as st

from pairforge.catalog import catalog_pair, gauss_pair, rect_pair, split_pair, zero_pair
from pairforge.centroid import (
    central_closure,
    centroid_pair,
    commutes_with_peirce,
    extend_to_imbedding,
    extended_centroid,
    restrict_to_pair,
    verify_centroid_iso,
    verify_closure_imbedding_commutes,
)
from pairforge.errors import PreconditionError
from pairforge.fields import GF, QQ
from pairforge.imbedding import build_standard_imbedding
from pairforge.pair import AssocPair, MINUS, PLUS, PairElement, triple_product


def over(field, A):
    return AssocPair(field, A.dim_plus, A.dim_minus, A.tables)


@pytest.mark.parametrize("name,dim", [("rect(1,1)", 1), ("rect(2,3)", 1), ("split(2)", 2), ("gauss", 2), ("zero(1)", 2)])
def test_centroid_dimensions(name, dim):
    C = centroid_pair(catalog_pair(name).pair)
    assert C.dim == dim
    assert C.contains(C.identity)


def test_centroid_maps_commute_with_products():
    A = gauss_pair()
    C = centroid_pair(A)
    for T in C.basis:
        for s in (PLUS, MINUS):
            for i in range(2):
                for j in range(2):
                    for k in range(2):
                        x, y, z = (PairElement.basis(A, s, i), PairElement.basis(A, -s, j), PairElement.basis(A, s, k))
                        p = triple_product(A, x, y, z)
                        Tp = T.apply(s, p.coords, QQ)
                        assert Tp == triple_product(A, PairElement(s, T.apply(s, x.coords, QQ)), y, z).coords
                        assert Tp == triple_product(A, x, PairElement(-s, T.apply(-s, y.coords, QQ)), z).coords


def test_extension_and_restriction_are_inverse():
    A = split_pair(2)
    emb = build_standard_imbedding(A)
    C = centroid_pair(A)
    for T in C.basis:
        z = extend_to_imbedding(emb, T)
        assert commutes_with_peirce(emb, z)
        assert restrict_to_pair(emb, z) == T


def test_extended_centroid_requires_semiprime():
    with pytest.raises(PreconditionError):
        extended_centroid(zero_pair(1))


def test_closure_requires_prime():
    with pytest.raises(PreconditionError):
        central_closure(split_pair(2))


def test_gauss_over_finite_fields():
    # i exists in GF(13) but not in GF(11)
    inert = over(GF(11), gauss_pair())
    assert centroid_pair(inert).is_field()
    assert str(central_closure(inert).closure_field).startswith("GF(11)[t]")
    split = over(GF(13), gauss_pair())
    assert centroid_pair(split).is_field() is False
    rep = verify_centroid_iso(split)
    assert rep.ok and rep.pair_dim == 2


def test_closure_commutes_rect23():
    res = verify_closure_imbedding_commutes(rect_pair(2, 3))
    assert res.ok
    assert res.k_dim_left == res.k_dim_right == 25


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_gauss_presentation_round_trip(v):
    closed = central_closure(gauss_pair())
    for s in (PLUS, MINUS):
        pres = closed.presentations[s]
        w = tuple(QQ(c) for c in v)
        assert pres.from_K(pres.to_K(w)) == w


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=2))
def test_split_centroid_regular(coords):
    C = extended_centroid(split_pair(2)).ring
    x = tuple(QQ(c) for c in coords)
    mu = C.regularity_witness(x)
    S = C.structure
    assert mu is not None
    assert S.mul(S.mul(x, mu), x) == x
    inv = C.inverse(x)
    assert (inv is not None) == all(c != 0 for c in x)
