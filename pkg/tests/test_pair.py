import pytest
from hypothesis import given, settings, strategies as st

from pairforge.catalog import catalog_pair, rect_pair, split_pair, zero_pair
from pairforge.fields import QQ
from pairforge.fileformat import parse_pair_file
from pairforge.pair import (
    MINUS,
    PLUS,
    PairElement,
    annihilator,
    check_pair_axioms,
    degenerate_witness,
    direct_sum,
    ideal_generate,
    is_pair_ideal,
    is_pair_isomorphism,
    sandwich_vanishes,
    triple_product,
)

from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"


def test_rect_triple_is_matrix_product():
    A = rect_pair(2, 3)
    # <e_{0,1}, f_{1,0}, e_{0,2}> = e_{0,1} f_{1,0} e_{0,2} = e_{0,2}
    x = PairElement.basis(A, PLUS, 0 * 3 + 1)
    y = PairElement.basis(A, MINUS, 1 * 2 + 0)
    z = PairElement.basis(A, PLUS, 0 * 3 + 2)
    assert triple_product(A, x, y, z) == PairElement.basis(A, PLUS, 2)
    # and the minus side: f_{1,0} e_{0,2} f_{2,1} = f_{1,1}
    a = PairElement.basis(A, MINUS, 1 * 2 + 0)
    b = PairElement.basis(A, PLUS, 0 * 3 + 2)
    c = PairElement.basis(A, MINUS, 2 * 2 + 1)
    assert triple_product(A, a, b, c) == PairElement.basis(A, MINUS, 1 * 2 + 1)


def test_sign_mismatch_rejected():
    A = rect_pair(1, 1)
    e = PairElement.basis(A, PLUS, 0)
    with pytest.raises(ValueError):
        triple_product(A, e, e, e)


@pytest.mark.parametrize("name", ["rect(1,1)", "rect(2,3)", "split(2)", "gauss", "zero(2)"])
def test_catalog_satisfies_axioms(name):
    assert check_pair_axioms(catalog_pair(name).pair).ok


def test_nonassociative_witness():
    A = parse_pair_file((FIXTURES / "nonassoc.pair").read_text(), check_axioms=False).pair
    res = check_pair_axioms(A)
    assert not res.ok
    assert res.witness == (PLUS, (0, 0, 0, 0, 0))


def test_split_ideals():
    A = split_pair(2)
    first = ideal_generate(A, [PairElement.basis(A, PLUS, 0)])
    second = ideal_generate(A, [PairElement.basis(A, PLUS, 1)])
    assert first.dims == second.dims == (1, 1)
    assert is_pair_ideal(first)
    assert sandwich_vanishes(A, first, second)
    assert annihilator(A, first) == second
    assert degenerate_witness(A) is None


def test_zero_pair_degenerate():
    A = zero_pair(2)
    assert degenerate_witness(A) is not None
    assert annihilator(A, ideal_generate(A, [])).is_whole()


def test_direct_sum_dims():
    B = direct_sum(rect_pair(1, 2), rect_pair(2, 1))
    assert B.dims == (4, 4)
    assert check_pair_axioms(B).ok


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.lists(st.integers(-3, 3), min_size=6, max_size=6),
       st.integers(-3, 3))
def test_triple_is_trilinear(x, y, z, c):
    A = rect_pair(2, 3)
    X = PairElement.of(A, PLUS, x)
    Y = PairElement.of(A, MINUS, y)
    Z = PairElement.of(A, PLUS, z)
    cX = PairElement.of(A, PLUS, [c * v for v in x])
    lhs = triple_product(A, cX + Z, Y, Z)
    rhs = triple_product(A, X, Y, Z).coords
    rhs = tuple(c * a + b for a, b in zip(rhs, triple_product(A, Z, Y, Z).coords))
    assert lhs.coords == rhs


def test_isomorphism_check_rejects_non_bijection():
    A = rect_pair(1, 1)
    assert is_pair_isomorphism(A, A, ((QQ(1),),), ((QQ(1),),)).ok
    assert not is_pair_isomorphism(A, A, ((QQ(0),),), ((QQ(1),),)).ok
    assert not is_pair_isomorphism(A, A, ((QQ(2),),), ((QQ(1),),)).ok
