import pytest

from pairforge.algebra import (
    StructureAlgebra,
    center,
    check_associativity,
    find_unit,
    generate_ideal,
    is_field_algebra,
    matrix_algebra_certificate,
    min_standard_degree,
    radical,
    regularity_profile,
)
from pairforge.errors import UnsupportedError
from pairforge.fields import GF, QQ


def matrix_algebra(n, field=QQ):
    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[(i * n + j, j * n + k)] = ((i * n + k, 1),)
    return StructureAlgebra(field, n * n, table)


def product_algebra():
    # Q x Q with orthogonal idempotents
    return StructureAlgebra(QQ, 2, {(0, 0): ((0, 1),), (1, 1): ((1, 1),)})


def upper_triangular():
    # e11, e12, e22
    return StructureAlgebra(QQ, 3, {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 2): ((1, 1),), (2, 2): ((2, 1),)})


def test_nonassociative_witness():
    # e0 e0 = e1, e1 e0 = e0, everything else zero: (e0 e0) e0 = e0 but e0 (e0 e0) = 0
    A = StructureAlgebra(QQ, 2, {(0, 0): ((1, 1),), (1, 0): ((0, 1),)})
    res = check_associativity(A)
    assert not res.ok
    assert res.witness == (0, 0, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matrix_algebra(n):
    M = matrix_algebra(n)
    assert check_associativity(M).ok
    assert find_unit(M) is not None
    assert center(M).dim == 1
    prof = regularity_profile(M)
    assert prof.semiprime and prof.prime
    assert matrix_algebra_certificate(M) == n


def test_min_standard_degree_m2():
    assert min_standard_degree(matrix_algebra(2)) == 4
    assert min_standard_degree(product_algebra()) == 2


def test_product_is_semiprime_not_prime():
    prof = regularity_profile(product_algebra())
    assert prof.semiprime and prof.prime is False
    assert prof.center_dim == 2


def test_upper_triangular_radical():
    T = upper_triangular()
    R = radical(T)
    assert R.dim == 1 and R.contains((0, 1, 0))
    assert not regularity_profile(T).semiprime
    I = generate_ideal(T, [(0, 1, 0)])
    assert I.dim == 1 and I.is_ideal()


def test_gaussian_field_and_gf():
    G = StructureAlgebra(QQ, 2, {(0, 0): ((0, 1),), (0, 1): ((1, 1),), (1, 0): ((1, 1),), (1, 1): ((0, -1),)})
    assert is_field_algebra(G) is True
    # over GF(5), i^2 = -1 has a root, so the same tensor splits
    G5 = StructureAlgebra(GF(5), 2, G.table)
    assert is_field_algebra(G5) is False
    assert regularity_profile(matrix_algebra(2, GF(5))).prime
    with pytest.raises(UnsupportedError):
        radical(matrix_algebra(2, GF(3)))


def test_zero_algebra():
    Z = StructureAlgebra.zero_algebra(QQ, 2)
    assert radical(Z).dim == 2
    assert find_unit(Z) is None
