import random

import pytest

from hopfkit.cyclo import CycloNum
from hopfkit.errors import AmbientMismatch
from hopfkit.linalg import (SparseTensor3, Subspace, algebra_radical,
                            dense_to_sparse, identity_matrix, image, kernel,
                            left_mult_matrix, mat_eq, mat_inverse, mat_mul,
                            mat_vec, preimage, solve, split_character_count,
                            block_count, subspace_ops, unit_vector, vec_add,
                            vec_is_zero, vec_sub)

M = 9


def rnum(rng):
    return CycloNum.from_rational(M, rng.randint(-3, 3))


def rmat(rng, m, n):
    return [[rnum(rng) for _ in range(n)] for _ in range(m)]


def test_rank_nullity_random():
    rng = random.Random(11)
    for _ in range(30):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        A = rmat(rng, m, n)
        K = kernel(A, n, M)
        I = image(A, n, M)
        assert K.dim + I.dim == n
        for v in K.basis:
            assert vec_is_zero(mat_vec(A, list(v)))


def test_kernel_degenerate_cases():
    assert kernel(identity_matrix(5, M), 5, M).dim == 0
    Z = [[CycloNum.zero(M)] * 5 for _ in range(5)]
    assert kernel(Z, 5, M) == Subspace.full(5, M)


def test_preimage_of_zero_is_kernel():
    rng = random.Random(3)
    for _ in range(10):
        A = rmat(rng, 4, 6)
        assert preimage(A, 6, M, Subspace.zero(4, M)) == kernel(A, 6, M)


def test_preimage_general():
    rng = random.Random(4)
    A = rmat(rng, 5, 5)
    W = Subspace.from_vectors(5, M, [rmat(rng, 1, 5)[0] for _ in range(2)])
    P = preimage(A, 5, M, W)
    for v in P.basis:
        assert W.contains(mat_vec(A, list(v)))


def test_subspace_ops():
    rng = random.Random(9)
    # rational coordinates: the coordinate pairing is anisotropic over Q
    MQ = 3
    for _ in range(25):
        n = rng.randint(2, 6)
        vs = [[CycloNum.from_rational(MQ, rng.randint(-3, 3)) for _ in range(n)]
              for _ in range(rng.randint(1, n))]
        U = Subspace.from_vectors(n, MQ, vs)
        assert subspace_ops(U, Subspace.zero(n, MQ), "sum") == U
        assert subspace_ops(U, U.perp(), "intersect").dim == 0
        assert U.perp().dim == n - U.dim
        assert U.perp().perp() == U
    assert Subspace.full(4, M).perp() == Subspace.zero(4, M)
    with pytest.raises(AmbientMismatch):
        subspace_ops(Subspace.zero(3, M), Subspace.zero(4, M), "sum")


def test_canonical_echelon_representation():
    v1 = [CycloNum.from_rational(M, x) for x in (1, 2, 3)]
    v2 = [CycloNum.from_rational(M, x) for x in (0, 1, 1)]
    S1 = Subspace.from_vectors(3, M, [v1, v2])
    S2 = Subspace.from_vectors(3, M, [vec_add(v1, v2), vec_sub(v1, v2)])
    assert S1 == S2
    assert S1.basis == S2.basis


def test_solve_and_inverse():
    rng = random.Random(17)
    for _ in range(10):
        A = rmat(rng, 4, 4)
        x = [rnum(rng) for _ in range(4)]
        b = mat_vec(A, x)
        x2 = solve(A, b)
        assert x2 is not None
        assert mat_vec(A, x2) == b
        inv = mat_inverse(A, M)
        if inv is not None:
            assert mat_eq(mat_mul(A, inv), identity_matrix(4, M))


def _upper_triangular_fixture():
    # basis e11, e12, e22 of upper-triangular 2x2 matrices
    one = CycloNum.one(M)
    d = {(0, 0, 0): one, (0, 1, 1): one, (1, 2, 1): one, (2, 2, 2): one}
    mult = SparseTensor3.from_dict((3, 3, 3), d)
    unit = [one, CycloNum.zero(M), one]
    return mult, unit


def _group_algebra_z3():
    one = CycloNum.one(3)
    d = {(i, j, (i + j) % 3): one for i in range(3) for j in range(3)}
    return SparseTensor3.from_dict((3, 3, 3), d), \
        [one, CycloNum.zero(3), CycloNum.zero(3)]


def test_radical_upper_triangular():
    mult, unit = _upper_triangular_fixture()
    rad = algebra_radical(mult, unit, M)
    assert rad.dim == 1
    assert rad.contains(unit_vector(3, M, 1))


def test_radical_group_algebra_semisimple():
    mult, unit = _group_algebra_z3()
    assert algebra_radical(mult, unit, 3).dim == 0
    assert split_character_count(mult, unit, 3) == 3
    assert block_count(mult, unit, 3) == 3


def test_radical_is_nilpotent_ideal_and_quotient_semisimple():
    # radical output: two-sided ideal, nilpotent left-multiplications,
    # semisimple quotient (its own radical vanishes)
    from hopfkit.linalg import QuotientAlgebra
    mult, unit = _upper_triangular_fixture()
    rad = algebra_radical(mult, unit, M)
    rows = mult.rows_ij()
    one = CycloNum.one(M)
    for v in rad.basis:
        sv = dense_to_sparse(list(v))
        for j in range(3):
            from hopfkit.linalg import mult_vectors, sparse_to_dense
            assert rad.contains(sparse_to_dense(mult_vectors(rows, sv, {j: one}), 3, M))
            assert rad.contains(sparse_to_dense(mult_vectors(rows, {j: one}, sv), 3, M))
        L = left_mult_matrix(rows, list(v), 3, M)
        P = L
        for _ in range(3):
            P = mat_mul(P, L)
        assert all(c.is_zero() for row in P for c in row)
    qa = QuotientAlgebra(rows, 3, M, rad)
    qunit = qa.project(unit)
    assert algebra_radical(qa.mult, qunit, M).dim == 0


def test_matrix_algebra_blocks():
    # full 2x2 matrix algebra: no characters, one block
    one = CycloNum.one(3)
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    d = {}
    for (a, b), i in idx.items():
        for (c, e), j in idx.items():
            if b == c:
                d[(i, j, idx[(a, e)])] = one
    mult = SparseTensor3.from_dict((4, 4, 4), d)
    unit = [one, CycloNum.zero(3), CycloNum.zero(3), one]
    assert algebra_radical(mult, unit, 3).dim == 0
    assert split_character_count(mult, unit, 3) == 0
    assert block_count(mult, unit, 3) == 1


def test_perp_of_sum_is_intersection_of_perps():
    rng = random.Random(19)
    for _ in range(15):
        n = rng.randint(2, 6)
        def sub():
            vs = [[CycloNum.from_rational(M, rng.randint(-2, 2)) for _ in range(n)]
                  for _ in range(rng.randint(1, n))]
            return Subspace.from_vectors(n, M, vs)
        U, V = sub(), sub()
        assert U.sum(V).perp() == U.perp().intersect(V.perp())
