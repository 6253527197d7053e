"""The eighteen acceptance criteria; the terminal summary prints one line per criterion."""

from itertools import product

import pytest
import sympy

from pairforge.algebra import center, find_unit, is_simple_algebra, matrix_algebra_certificate, regularity_profile
from pairforge.catalog import STANDARD_CATALOG, catalog_pair, rect_pair
from pairforge.centroid import (
    central_closure,
    centroid_pair,
    closure_is_closed,
    compare_closure_with_imbedding,
    extended_centroid,
    verify_centroid_iso,
)
from pairforge.fields import QQ
from pairforge.identities import (
    DEFAULT_BUDGET,
    MultilinearPoly,
    check_hpi,
    check_star_identity,
    estimate_cost,
    local_min_standard_degree,
    standard_identity,
    symmetric_difference_poly,
)
from pairforge.imbedding import build_standard_imbedding, pair_regularity, verify_local_transfer, verify_round_trip
from pairforge.involutions import Involution, extend_to_imbedding, is_star_prime, star_centroid, verify_star_isos
from pairforge.pair import MINUS, PLUS, SIGNS, PairElement, ideal_generate, is_pair_isomorphism
from pairforge.polys import Poly, irreducible_over_base
from pairforge.report import Options, run_report
from pairforge.structure import (
    element_rank,
    is_simple,
    martindale_posner_report,
    rank_one_decompose,
    socle_pair,
    structure_report,
)

from oracles import dense_identity_holds, dual_numbers_pair, matrix_rank


def crit(n):
    return pytest.mark.criterion(n)


def element(A, sign, coords):
    return PairElement(sign, tuple(QQ(c) for c in coords))


# 1 -----------------------------------------------------------------------------

@crit(1)
def test_c01_rect12_is_m3():
    emb = build_standard_imbedding(rect_pair(1, 2))
    E = emb.algebra
    assert E.dim == 9
    assert emb.dims == (1, 2, 2, 4)
    assert find_unit(E) is not None
    assert is_simple_algebra(E)
    assert center(E).dim == 1
    assert matrix_algebra_certificate(E) == 3


@crit(1)
def test_c01_rect11_is_m2():
    E = build_standard_imbedding(rect_pair(1, 1)).algebra
    assert E.dim == 4
    assert matrix_algebra_certificate(E) == 2


# 2 -----------------------------------------------------------------------------

@crit(2)
@pytest.mark.parametrize("name", STANDARD_CATALOG)
def test_c02_round_trip(name):
    from pairforge.imbedding import extract_pair

    A = catalog_pair(name).pair
    rt = verify_round_trip(A)
    assert rt.ok, rt.witness
    emb = build_standard_imbedding(A)
    B = extract_pair(emb.algebra, emb.e1)
    assert B.dims == A.dims
    assert is_pair_isomorphism(A, B, rt.phi_plus, rt.phi_minus).ok


# 3 -----------------------------------------------------------------------------

@crit(3)
@pytest.mark.parametrize("name,expected", [("rect(2,2)", (True, True)), ("split(2)", (True, False)),
                                           ("zero(1)", (False, False))])
def test_c03_regularity_transfer(name, expected):
    A = catalog_pair(name).pair
    prof = regularity_profile(build_standard_imbedding(A).algebra)
    assert (prof.semiprime, bool(prof.prime)) == expected
    pp = pair_regularity(A)
    assert (pp.semiprime, bool(pp.prime)) == expected


# 4 -----------------------------------------------------------------------------

@crit(4)
@pytest.mark.parametrize("coords,dim", [((0, 0, 0, 0), 0), ((1, 0, 0, 0), 1), ((1, 0, 0, 1), 4)])
@pytest.mark.parametrize("sign", SIGNS)
def test_c04_local_transfer(coords, dim, sign):
    A = rect_pair(2, 2)
    res = verify_local_transfer(A, element(A, sign, coords))
    assert res.ok, res.witness
    assert res.pair_dim == res.algebra_dim == dim


# 5 -----------------------------------------------------------------------------

@crit(5)
@pytest.mark.parametrize("name,dims", [("rect(2,2)", (1, 1)), ("split(2)", (2, 2)), ("gauss", (2, 2))])
def test_c05_centroid_iso(name, dims):
    rep = verify_centroid_iso(catalog_pair(name).pair)
    assert rep.ok, rep.failures
    assert (rep.pair_dim, rep.algebra_dim) == dims
    n = dims[0]
    phi = sympy.Matrix(rep.phi)
    psi = sympy.Matrix(rep.psi)
    assert psi * phi == sympy.eye(n)
    assert phi * psi == sympy.eye(n)


# 6 -----------------------------------------------------------------------------

@crit(6)
def test_c06_split_centroid_regular():
    A = catalog_pair("split(2)").pair
    ext = extended_centroid(A)
    C = ext.ring
    S = C.structure
    for i in range(S.dim):
        for j in range(S.dim):
            a, b = C.basis[i], C.basis[j]
            assert a.compose(b, QQ) == b.compose(a, QQ)
    for i, mu in enumerate(ext.witnesses):
        lam = S.basis_vector(i)
        assert S.mul(S.mul(lam, mu), lam) == lam
        # the same identity on the pair maps themselves
        L, M = C.basis[i], C.element(mu)
        assert L.compose(M, QQ).compose(L, QQ) == L
    assert ext.is_field is False


# 7 -----------------------------------------------------------------------------

@crit(7)
def test_c07_gauss_centroid_is_gaussian_field():
    A = catalog_pair("gauss").pair
    C = centroid_pair(A)
    assert C.dim == 2 and C.is_field()
    # T -> T(1) is a ring isomorphism onto Q(i) written in the basis (1, i)
    one = A.basis_vector(PLUS, 0)
    images = [T.apply(PLUS, one, QQ) for T in C.basis]
    assert sympy.Matrix(images).rank() == 2
    i_unit = None
    for a, b in product(range(-2, 3), repeat=2):
        x = tuple(QQ(a) * u + QQ(b) * v for u, v in zip(C.structure.basis_vector(0), C.structure.basis_vector(1)))
        sq = C.structure.mul(x, x)
        if tuple(-c for c in C.structure.unit) == sq:
            i_unit = x
            break
    assert i_unit is not None, "no square root of -1 in C(gauss)"
    t2p1 = Poly(QQ, (1, 0, 1))
    assert irreducible_over_base(t2p1)
    t = sympy.symbols("t")
    assert sympy.Poly(t ** 2 + 1, t, domain="QQ").is_irreducible
    for a, b in product(range(-3, 4), repeat=2):
        if a == b == 0:
            continue
        x = tuple(QQ(a) * u + QQ(b) * v for u, v in zip(C.structure.basis_vector(0), C.structure.basis_vector(1)))
        inv = C.inverse(x)
        assert inv is not None
        assert C.structure.mul(x, inv) == tuple(C.structure.unit)


# 8 -----------------------------------------------------------------------------

@crit(8)
def test_c08_gauss_closure():
    closed = central_closure(catalog_pair("gauss").pair)
    assert str(closed.closure_field) == "Q[t]/(t^2 + 1)"
    assert closed.k_dims == (1, 1)
    assert closed.tight()
    comm = compare_closure_with_imbedding(closed)
    assert comm.ok, comm.failures
    assert comm.k_dim_left == comm.k_dim_right == 4
    EL = build_standard_imbedding(closed.pair_over_K).algebra
    assert matrix_algebra_certificate(EL) == 2
    assert closure_is_closed(closed)


@crit(8)
def test_c08_rect22_closure_is_identity():
    A = rect_pair(2, 2)
    closed = central_closure(A)
    assert closed.closure_field == QQ
    assert closed.pair_over_K.dims == A.dims
    comm = compare_closure_with_imbedding(closed)
    assert comm.ok and comm.k_dim_left == 16
    assert closure_is_closed(closed)


# 9 -----------------------------------------------------------------------------

@crit(9)
def test_c09_transpose_extension():
    entry = catalog_pair("rect(2,2)")
    emb = build_standard_imbedding(entry.pair)
    E = emb.algebra
    J = extend_to_imbedding(emb, entry.involution)
    assert E.dim == 16
    star = [J.apply(E.basis_vector(i), QQ) for i in range(16)]
    for i in range(16):
        assert J.apply(star[i], QQ) == E.basis_vector(i)
        for j in range(16):
            assert J.apply(E.mul(E.basis_vector(i), E.basis_vector(j)), QQ) == E.mul(star[j], star[i])
    assert J.apply(emb.e1, QQ) == emb.e2
    assert J.apply(emb.e2, QQ) == emb.e1


# 10 ----------------------------------------------------------------------------

@crit(10)
@pytest.mark.parametrize("name", ["rect(2,2)", "gauss", "split(2)"])
def test_c10_star_centroid(name):
    entry = catalog_pair(name)
    A, inv = entry.pair, entry.involution
    sc = star_centroid(A, inv)
    assert sc.dim == 1 and sc.is_field
    assert is_star_prime(A, inv)
    rep = verify_star_isos(A, inv)
    assert rep.ok, rep.failures
    assert rep.pair_dim == rep.algebra_dim == 1
    if name == "split(2)":
        assert pair_regularity(A).prime is False


# 11 ----------------------------------------------------------------------------

@crit(11)
def test_c11_rect22_s4_holds_within_budget():
    A = rect_pair(2, 2)
    assert estimate_cost(A, standard_identity(4)) <= DEFAULT_BUDGET
    assert check_hpi(A, standard_identity(4), budget=DEFAULT_BUDGET).holds


@crit(11)
def test_c11_rect22_s3_fails_deterministically():
    A = rect_pair(2, 2)
    r1 = check_hpi(A, standard_identity(3))
    r2 = check_hpi(A, standard_identity(3), jobs=2)
    assert not r1.holds
    assert r1.witness == r2.witness
    assert r1.witness.args == (0, 1, 2)  # e11, e12, e21
    from pairforge.identities import eval_homotope

    w = r1.witness
    val = eval_homotope(A, standard_identity(3), PairElement(-w.sign, w.z),
                        [PairElement.basis(A, w.sign, i) for i in w.args])
    assert not val.is_zero()


@crit(11)
@pytest.mark.parametrize("q", [1, 2, 3])
def test_c11_rect1q_s2(q):
    # Expected to fail for q = 2, 3: the homotope x.y = (x z) y is not commutative.
    assert check_hpi(rect_pair(1, q), standard_identity(2)).holds


# 12 ----------------------------------------------------------------------------

@crit(12)
def test_c12_star_identity_gives_s2_locally():
    A = rect_pair(1, 1)
    inv = Involution.identity(A)
    assert check_star_identity(A, inv, symmetric_difference_poly()).holds
    for s in SIGNS:
        for c in range(-3, 4):
            d = local_min_standard_degree(A, element(A, s, (c,)))
            assert d is not None and d <= 2


# 13 ----------------------------------------------------------------------------

@crit(13)
def test_c13_rank_machinery():
    entry = catalog_pair("rect(2,3)")
    A, M = entry.pair, entry.module
    seen = set()
    for i in range(6):
        for j in range(6):
            coords = [0] * 6
            coords[i] += 1
            coords[j] += 1
            a = element(A, MINUS, coords)
            mat = [coords[r * 2:(r + 1) * 2] for r in range(3)]  # A- is 3 x 2, row-major
            r = matrix_rank(mat)
            seen.add(r)
            assert element_rank(A, a, M) == r
            if r >= 1:
                assert local_min_standard_degree(A, a) == 2 * r
            pieces = rank_one_decompose(A, a, M)
            assert len(pieces) == r
            if pieces:
                total = pieces[0]
                for p in pieces[1:]:
                    total = total + p
                assert total == a
    assert seen <= {0, 1, 2}


# 14 ----------------------------------------------------------------------------

@crit(14)
@pytest.mark.parametrize("name", STANDARD_CATALOG)
def test_c14_amitsur(name):
    entry = catalog_pair(name)
    rep = structure_report(entry.pair, entry.module)
    assert rep.amitsur_agree
    if name.startswith("rect") or name == "gauss":
        assert rep.amitsur == (True, True, True)
    else:
        assert rep.amitsur == (False, False, False)


# 15 ----------------------------------------------------------------------------

@crit(15)
def test_c15_kaplansky():
    A = rect_pair(2, 3)
    for s in SIGNS:
        for i in range(A.dim(s)):
            assert ideal_generate(A, [PairElement.basis(A, s, i)]).is_whole()
    assert is_simple(A).ok
    assert socle_pair(A).is_whole()


# 16 ----------------------------------------------------------------------------

@crit(16)
@pytest.mark.parametrize("name,cap,degree", [("gauss", 1, 2), ("rect(2,2)", 2, 4)])
def test_c16_martindale_posner(name, cap, degree):
    rep = martindale_posner_report(catalog_pair(name).pair)
    assert rep.ok, rep.failures
    assert rep.capacity == cap
    assert rep.hpi_degree == degree
    assert rep.capacity == degree // 2


# 17 ----------------------------------------------------------------------------

_SMALL = ["rect(1,1)", "rect(1,2)", "zero(1)", "zero(2)", "split(2)", "gauss", "rect(2,1)"]
_POLYS = [
    standard_identity(1),
    standard_identity(2),
    standard_identity(3),
    MultilinearPoly.from_terms(2, [((0, 1), 1)]),
    MultilinearPoly.from_terms(3, [((0, 1, 2), 1), ((2, 1, 0), -1)]),
    MultilinearPoly.from_terms(3, [((0, 1, 2), 1), ((1, 0, 2), -1), ((2, 0, 1), 1), ((2, 1, 0), -1)]),
]


@crit(17)
@pytest.mark.parametrize("name", _SMALL + ["dual"])
def test_c17_basis_check_matches_dense_oracle(name):
    A = dual_numbers_pair() if name == "dual" else catalog_pair(name).pair
    assert max(A.dims) <= 2
    for f in _POLYS:
        assert check_hpi(A, f).holds == dense_identity_holds(A, f), (name, str(f))


# 18 ----------------------------------------------------------------------------

@crit(18)
@pytest.mark.parametrize("name", STANDARD_CATALOG)
def test_c18_report_determinism(name):
    entry = catalog_pair(name)
    a = run_report("report-all", entry, Options(jobs=1)).render()
    b = run_report("report-all", entry, Options(jobs=1)).render()
    c = run_report("report-all", entry, Options(jobs=3)).render()
    assert a == b == c
