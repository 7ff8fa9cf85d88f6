from fractions import Fraction

import numpy as np
import sympy
from hypothesis import given, strategies as st

from hyperlat import linalg as la
from conftest import int_matrices


@given(int_matrices(square=True))
def test_det_matches_sympy(A):
    assert la.det(A) == sympy.Matrix(A).det()


@given(int_matrices(square=True))
def test_inverse(A):
    if la.det(A) == 0:
        return
    inv = la.inverse(A)
    assert la.mat_mul(A, inv) == la.identity(len(A))


@given(int_matrices())
def test_smith_form_matches_sympy(A):
    d, U, V = la.smith_form(A)
    m, n = len(A), len(A[0])
    D = la.mat_mul(la.mat_mul(U, A), V)
    for i in range(m):
        for j in range(n):
            assert D[i][j] == (d[i] if i == j and i < len(d) else 0)
    assert abs(la.det(U)) == 1 and abs(la.det(V)) == 1
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    from sympy.matrices.normalforms import smith_normal_form
    S = smith_normal_form(sympy.Matrix(A), domain=sympy.ZZ)
    ref = [abs(S[i, i]) for i in range(min(m, n)) if S[i, i] != 0]
    assert sorted(ref) == sorted(d)


@given(int_matrices())
def test_hnf_spans_same_lattice(A):
    H = la.hnf(A)
    assert la.rank(H) == la.rank(A) == len(H)
    # every row of A is an integer combination of H, and conversely
    for row in A:
        if any(row):
            c = la.solve_left(H, row)
            assert all(Fraction(x).denominator == 1 for x in c)
    for row in H:
        c = la.solve_left(la.hnf(A), row)
        assert all(Fraction(x).denominator == 1 for x in c)


@given(int_matrices(max_rows=4, max_cols=6))
def test_integer_left_kernel(A):
    K = la.integer_left_kernel(A)
    assert len(K) == len(A) - la.rank(A)
    for k in K:
        assert not any(la.vec_mat(k, A))


@given(int_matrices(square=True, max_rows=5))
def test_inertia_against_eigenvalues(A):
    G = [[A[i][j] + A[j][i] for j in range(len(A))] for i in range(len(A))]
    ev = np.linalg.eigvalsh(np.array(G, dtype=float))
    pos, neg, zero = la.inertia(G)
    assert pos == int((ev > 1e-9).sum()) and neg == int((ev < -1e-9).sum())
    assert pos + neg + zero == len(G)


@given(st.integers(0, 10**6))
def test_lll_gram_is_unimodular_and_reduces(seed):
    import random
    from hyperlat.lattice_core import GramLattice, change_basis, random_unimodular
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    G = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    L = change_basis(GramLattice(G), random_unimodular(n, rng, steps=8 * n))
    T = la.lll_gram(L.matrix())
    assert abs(la.det(T)) == 1
    R = la.congruence(T, L.matrix())
    # Z^n scaled by 2 reduces to its standard basis
    assert sorted(R[i][i] for i in range(n)) == [2] * n


def test_saturation_of_multiple():
    assert la.saturation([[2, 4, 6]]) == [[1, 2, 3]]
