import random

from amdeg.linalg import rref, rank, nullspace, solve, inverse, mat_mul, mat_vec

P = 101


def _rand_matrix(rng, m, n):
    return [[rng.randrange(P) for _ in range(n)] for _ in range(m)]


def test_rref_idempotent_and_rank():
    rng = random.Random(0)
    for _ in range(200):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        A = _rand_matrix(rng, m, n)
        R, pivots = rref(A, P)
        R2, pivots2 = rref(R, P)
        assert R == R2 and pivots == pivots2
        assert rank(A, P) == len(pivots)


def test_nullspace_annihilates():
    rng = random.Random(1)
    for _ in range(200):
        m, n = rng.randrange(1, 5), rng.randrange(1, 6)
        A = _rand_matrix(rng, m, n)
        basis = nullspace(A, P, n)
        assert len(basis) == n - rank(A, P)
        for v in basis:
            assert all(x == 0 for x in mat_vec(A, v, P))


def test_solve_consistent_systems():
    rng = random.Random(2)
    for _ in range(200):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        A = _rand_matrix(rng, m, n)
        x = [rng.randrange(P) for _ in range(n)]
        b = mat_vec(A, x, P)
        y = solve(A, b, P)
        assert y is not None and mat_vec(A, y, P) == b


def test_inverse():
    rng = random.Random(3)
    found = 0
    while found < 50:
        n = rng.randrange(1, 5)
        A = _rand_matrix(rng, n, n)
        if rank(A, P) < n:
            continue
        found += 1
        B = inverse(A, P)
        I = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        assert mat_mul(A, B, P) == I and mat_mul(B, A, P) == I
