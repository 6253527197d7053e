import pytest
from hypothesis import given, settings, strategies as st

from pairforge.catalog import catalog_pair, rect_pair, split_pair, transpose_involution, zero_pair
from pairforge.errors import PreconditionError
from pairforge.fields import QQ
from pairforge.imbedding import build_standard_imbedding
from pairforge.involutions import (
    Involution,
    check_algebra_involution,
    check_involution,
    decomposition_witness,
    extend_to_imbedding,
    is_star_ideal,
    is_star_prime,
    star_centroid,
    star_ideal_generate,
    verify_star_isos,
)
from pairforge.linalg import identity, mat_scale
from pairforge.pair import MINUS, PLUS, PairElement, ideal_generate, triple_product


@pytest.mark.parametrize("name", ["rect(1,1)", "rect(2,2)", "split(2)", "gauss", "zero(1)"])
def test_catalog_involutions_are_valid(name):
    entry = catalog_pair(name)
    assert check_involution(entry.pair, entry.involution).ok
    emb = build_standard_imbedding(entry.pair)
    J = extend_to_imbedding(emb, entry.involution)
    assert check_algebra_involution(emb.algebra, J).ok


def test_negation_is_not_an_involution():
    A = rect_pair(2, 2)
    minus_one = mat_scale(QQ(-1), identity(4, QQ))
    res = check_involution(A, Involution(minus_one, minus_one))
    assert not res.ok
    assert res.witness == ("reversal", PLUS, (0, 0, 1))
    # negated transpose is fine: the three signs cancel to one
    t = transpose_involution(2)
    assert check_involution(A, Involution(mat_scale(QQ(-1), t.star_plus), mat_scale(QQ(-1), t.star_minus))).ok


def test_order_witness():
    A = rect_pair(1, 1)
    twice = Involution(((QQ(2),),), ((QQ(1),),))
    assert check_involution(A, twice).witness == ("order", PLUS, 0)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_transpose_reverses_triples(x, y, z):
    entry = catalog_pair("rect(2,2)")
    A, inv = entry.pair, entry.involution
    X, Y, Z = PairElement.of(A, PLUS, x), PairElement.of(A, MINUS, y), PairElement.of(A, PLUS, z)
    lhs = inv.apply_element(triple_product(A, X, Y, Z))
    rhs = triple_product(A, inv.apply_element(Z), inv.apply_element(Y), inv.apply_element(X))
    assert lhs == rhs


def test_split_with_identity_is_not_star_prime():
    A = split_pair(2)
    ident = Involution.identity(A)
    assert check_involution(A, ident).ok
    assert star_centroid(A, ident).dim == 2
    assert not is_star_prime(A, ident)
    I, J = decomposition_witness(A, ident)
    assert is_star_ideal(A, ident, I) and not J.is_zero()
    # with the swap the summands merge into one *-ideal
    swap = catalog_pair("split(2)").involution
    assert star_ideal_generate(A, swap, [PairElement.basis(A, PLUS, 0)]).is_whole()
    assert ideal_generate(A, [PairElement.basis(A, PLUS, 0)]).dims == (1, 1)


def test_star_centroid_needs_semiprime():
    A = zero_pair(1)
    with pytest.raises(PreconditionError):
        star_centroid(A, Involution.identity(A))


def test_gauss_star_isos():
    entry = catalog_pair("gauss")
    rep = verify_star_isos(entry.pair, entry.involution)
    assert rep.ok
    sc = star_centroid(entry.pair, entry.involution)
    assert sc.ring.dim == 2 and sc.dim == 1
