import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pmmonoid import pm_linalg
from pmmonoid.pm_core import enumerate_rn
from pmmonoid.pm_linalg import (MatrixTuple, PolyMatrix, RationalMatrix, Subspace, TupleError, family_limit,
                                intersect, kernel, mtuple_normalize, mtuple_product, projective_limit, rank,
                                realize, restriction_limit)

R = RationalMatrix
entries = st.integers(-3, 3)


def matrices(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(R.from_rows)


def test_kernel_canonical_basis():
    A = R.from_rows([[1, 2, 3], [2, 4, 6]])
    K = kernel(A)
    assert K.basis == ((1, 0, Fraction(-1, 3)), (0, 1, Fraction(-2, 3)))
    assert (A @ K.inclusion()).is_zero()


@settings(max_examples=100, deadline=None)
@given(matrices(3, 4))
def test_rank_nullity(A):
    assert rank(A.entries, A.cols) + kernel(A).dim == A.cols
    assert (A @ kernel(A).inclusion()).is_zero() if kernel(A).dim else True


@settings(max_examples=100, deadline=None)
@given(matrices(2, 4), matrices(2, 4))
def test_intersection_dimension(A, B):
    U, W = Subspace.span(4, A.entries), Subspace.span(4, B.entries)
    I = intersect(U, W)
    assert I.dim == U.dim + W.dim - rank(U.basis + W.basis, 4)
    assert I <= U and I <= W


def test_subspace_canonical_form_is_basis_independent():
    assert Subspace.span(3, [[1, 1, 0], [0, 1, 0]]) == Subspace.span(3, [[1, 0, 0], [2, 5, 0]])


def test_projective_limit_and_invariance():
    P = PolyMatrix.from_coeffs([[[0, 2], [0, 0, 1]], [[], [0, 3]]])
    assert projective_limit(P) == R.from_rows([[2, 0], [0, 3]])
    assert projective_limit(P.scale(Fraction(-5, 2))) == R.from_rows([[-5, 0], [0, Fraction(-15, 2)]])
    assert projective_limit(P.shift(3)) == projective_limit(P)
    with pytest.raises(ValueError):
        projective_limit(PolyMatrix.from_coeffs([[[]]]))


def test_family_limit_of_diagonal_powers():
    lim = family_limit(PolyMatrix.diagonal_powers([0, 1, 2, 3]))
    assert lim.matrices() == [R.unit(4, [(1, 1)]), R.unit(4, [(2, 1)], 3), R.unit(4, [(3, 1)], 2),
                              R.unit(4, [(4, 1)], 1)]
    assert [t.domain.dim for t in lim.terms] == [4, 3, 2, 1]
    assert lim.padded() == MatrixTuple(tuple(R.unit(4, [(i, i)]) for i in range(1, 5)))


def test_family_limit_simple_cases():
    assert family_limit(PolyMatrix.constant(R.identity(3))).matrices() == [R.identity(3)]
    assert family_limit(PolyMatrix.diagonal_powers([1, 1])).matrices() == [R.identity(2)]
    with pytest.raises(ValueError, match="determinant"):
        family_limit(PolyMatrix.constant(R.from_rows([[1, 1], [1, 1]])))


def test_family_limit_non_diagonal():
    # [[1, t], [1, 2t]]: leading term has rank 1, kernel spanned by e2
    P = PolyMatrix.from_coeffs([[[1], [0, 1]], [[1], [0, 2]]])
    lim = family_limit(P)
    assert lim.matrices() == [R.from_rows([[1, 0], [1, 0]]), R.from_rows([[1], [2]])]


def test_family_limit_terminates_with_decreasing_domains():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(1, 4)
        grid = [[[rng.randint(-2, 2) for _ in range(rng.randint(0, 3))] for _ in range(n)] for _ in range(n)]
        P = PolyMatrix.from_coeffs(grid)
        if not pm_linalg.det_is_nonzero_poly(P):
            continue
        dims = [t.domain.dim for t in family_limit(P).terms]
        assert dims[0] == n and all(a > b for a, b in zip(dims, dims[1:])) and len(dims) <= n


def test_restriction_limit_with_domain_coordinates():
    B1 = PolyMatrix.from_coeffs([[[], []], [[], []], [[1], []], [[], [0, 1]]])
    dom = Subspace.span(4, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert restriction_limit(B1, Subspace.span(4, [[0, 0, 0, 1]]), dom) == R.unit(4, [(4, 1)], 1)
    with pytest.raises(ValueError):
        restriction_limit(B1, Subspace.span(4, [[1, 0, 0, 0]]), dom)


def test_tuple_invariants():
    with pytest.raises(TupleError, match="common kernel"):
        MatrixTuple((R.unit(2, [(1, 1)]),))
    with pytest.raises(TupleError, match="vanishes"):
        MatrixTuple((R.unit(2, [(1, 1)]), R.unit(2, [(1, 1)]), R.unit(2, [(2, 2)])))
    t = mtuple_normalize([R.unit(2, [(1, 1)]), R.unit(2, [(1, 1)]), R.unit(2, [(2, 2)]), R.identity(2)])
    assert len(t) == 2


def test_realization_is_multiplicative():
    els = enumerate_rn(3)
    rng = random.Random(1)
    for _ in range(300):
        a, b = rng.choice(els), rng.choice(els)
        assert mtuple_product(realize(a), realize(b)) == realize(a * b)


def test_mtuple_product_associative():
    els = enumerate_rn(3)
    rng = random.Random(2)
    for _ in range(100):
        a, b, c = (realize(rng.choice(els)) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_json_roundtrip():
    P = PolyMatrix.from_coeffs([[["1/2"], [0, 1]], [[], ["-3"]]])
    assert PolyMatrix.from_json(P.to_json()) == P
    assert PolyMatrix.from_json({"n": 2, "entries": [["1", {"coeffs": ["0", "1"]}], ["0", "2/3"]]}).entries[1][1] == (
        Fraction(2, 3),)
    A = R.unit(4, [(2, 1)], 3)
    assert R.from_json(A.to_json()) == A
    t = realize(enumerate_rn(3)[40])
    assert MatrixTuple.from_json(t.to_json()) == t


def test_determinant():
    assert pm_linalg.determinant(R.from_rows([[0, 1], [1, 0]])) == -1
    assert pm_linalg.determinant(R.from_rows([[2, 0, 0], [0, 3, 0], [1, 1, 0]])) == 0
