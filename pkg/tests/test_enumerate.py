import math
import random
from collections import Counter

import numpy as np

import pytest
import sympy
from hypothesis import given, strategies as st

from hyperlat import linalg as la
from hyperlat.catalog import make_named
from hyperlat.enumerate import (count_roots, is_rootless, isometric, isometry_verdict,
                                represented_values, represents, short_vectors, strong_invariants,
                                vectors_of_norm)
from hyperlat.lattice_core import GramLattice, LatticeError, change_basis, random_unimodular, rescale
from conftest import even_lattices


def _sigma3(n):
    return sum(d ** 3 for d in range(1, n + 1) if n % d == 0)


def _brute_counts(L, bound):
    """Count vectors with norm <= bound by scanning a box from the inverse Gram."""
    G = np.array(L.gram, dtype=np.int64)
    inv = sympy.Matrix(L.gram).inv()
    # |x_i|^2 <= bound * (G^-1)_ii for every vector of norm <= bound
    radii = [math.isqrt(int(bound * inv[i, i])) + 1 for i in range(L.rank)]
    axes = [np.arange(-r, r + 1) for r in radii]
    X = np.stack(np.meshgrid(*axes, indexing="ij"), -1).reshape(-1, L.rank)
    norms = np.einsum("ij,jk,ik->i", X, G, X)
    counts = Counter(int(v) for v in norms if 0 < v <= bound)
    return dict(sorted(counts.items()))


def test_E8_theta_series():
    E8 = make_named("E8")
    census = short_vectors(E8, 6)
    # theta series of E8 is the weight-4 Eisenstein series: 240 sigma_3(n) at norm 2n
    assert census.counts == {2 * k: 240 * _sigma3(k) for k in (1, 2, 3)}


@given(even_lattices(max_rank=4, definite=True, max_scale=2))
def test_short_vectors_against_box(L):
    assert short_vectors(L, 8).counts == _brute_counts(L, 8)


def test_negative_definite_signs():
    L = rescale(make_named("E8"), -1)
    assert short_vectors(L, 2).counts == {-2: 240}
    assert count_roots(L) == 240


def test_indefinite_rejected():
    with pytest.raises(LatticeError):
        short_vectors(GramLattice([[0, 1], [1, 0]]), 4)


@given(even_lattices(max_rank=4, definite=True, max_scale=3), st.integers(1, 6))
def test_represents_filters(L, k):
    n = 2 * k
    v = represents(L, n, primitive=True)
    if v is not None:
        assert L.norm(v) == n and math.gcd(*v) == 1
    assert (v is not None) <= (n in represented_values(L, n, primitive=True))
    vs = vectors_of_norm(L, n)
    assert (represents(L, n) is None) == (not vs)


def test_represents_divisibility():
    L = GramLattice([[2, 0], [0, 6]])
    assert represents(L, 6, div=6) in ([0, 1], [0, -1])
    assert represents(L, 2, div=6) is None


@given(even_lattices(max_rank=5, definite=True, max_scale=3), st.integers(0, 10**6))
def test_isometric_finds_basis_changes(L, seed):
    U = random_unimodular(L.rank, random.Random(seed))
    M = change_basis(L, U)
    status, X = isometric(M, L)
    assert status == "isometric"
    assert la.congruence(X, L.matrix()) == M.matrix()


def test_isometric_none():
    a = GramLattice([[2, 1], [1, 2]])
    b = GramLattice([[2, 0], [0, 6]])
    assert isometric(a, b)[0] == "none"
    # same determinant, different minimum
    c, d = GramLattice([[2, 0], [0, 8]]), GramLattice([[4, 0], [0, 4]])
    assert isometric(c, d)[0] == "none"


def test_verdict_falls_back_to_invariants():
    K = make_named("K12(-2)")
    M = change_basis(K, random_unimodular(12, random.Random(3), steps=60))
    status, _ = isometry_verdict(K, M, budget=1)
    assert status in ("invariant-match", "isometric")
    assert strong_invariants(K) == strong_invariants(M)


def test_rootless():
    assert is_rootless(make_named("K12(-2)"))
    assert not is_rootless(make_named("E8"))
