import pytest
from hypothesis import given, settings, strategies as st

from pairforge.catalog import catalog_pair, gauss_pair, rect_module, rect_pair, split_pair, zero_pair
from pairforge.errors import PreconditionError
from pairforge.pair import MINUS, PLUS, PairElement
from pairforge.structure import (
    capacity,
    check_module,
    element_rank,
    is_faithful,
    is_simple,
    martindale_posner_report,
    rank_one_decompose,
    socle_pair,
    structure_report,
)

from oracles import matrix_rank


@pytest.mark.parametrize("p,q", [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2)])
def test_rect_modules(p, q):
    A = rect_pair(p, q)
    M = rect_module(A, p, q)
    assert check_module(M).ok
    assert is_faithful(M)
    assert capacity(A, M) == capacity(A) == min(p, q)


def test_gauss_module_and_capacity():
    entry = catalog_pair("gauss")
    assert check_module(entry.module).ok
    assert capacity(entry.pair, entry.module) == 1
    assert capacity(entry.pair) == 1


def test_capacity_needs_prime():
    with pytest.raises(PreconditionError):
        capacity(split_pair(2))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([PLUS, MINUS]), st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_rank_matches_matrix_rank(sign, coords):
    entry = catalog_pair("rect(2,3)")
    A, M = entry.pair, entry.module
    rows, cols = (2, 3) if sign == PLUS else (3, 2)
    r = matrix_rank([coords[i * cols:(i + 1) * cols] for i in range(rows)])
    a = PairElement.of(A, sign, coords)
    assert element_rank(A, a, M) == r
    assert element_rank(A, a) == r
    pieces = rank_one_decompose(A, a, M)
    assert len(pieces) == r
    assert all(element_rank(A, p, M) == 1 for p in pieces)
    if pieces:
        total = pieces[0]
        for p in pieces[1:]:
            total = total + p
        assert total == a


@pytest.mark.parametrize("name,simple", [("rect(2,3)", True), ("gauss", True), ("split(2)", False), ("zero(1)", False)])
def test_simplicity(name, simple):
    A = catalog_pair(name).pair
    assert is_simple(A).ok is simple


def test_socle():
    assert socle_pair(rect_pair(2, 3)).is_whole()
    assert socle_pair(split_pair(2)).is_whole()
    with pytest.raises(PreconditionError):
        socle_pair(zero_pair(1))


def test_structure_report_fields():
    rep = structure_report(gauss_pair(), catalog_pair("gauss").module)
    assert rep.semiprime and rep.prime and rep.primitive and rep.strongly_primitive
    assert rep.capacity == 1 and rep.simple
    bad = structure_report(split_pair(2))
    assert bad.semiprime and not bad.prime and bad.capacity is None


def test_martindale_posner_rect13():
    rep = martindale_posner_report(rect_pair(1, 3))
    assert rep.ok
    assert rep.hpi_degree == 3 and rep.capacity == 1 and rep.bound == 1
