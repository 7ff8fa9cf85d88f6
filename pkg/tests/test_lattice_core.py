import random

import pytest
import sympy
from hypothesis import given, strategies as st

from hyperlat import linalg as la
from hyperlat.lattice_core import (GramLattice, LatticeError, change_basis, direct_sum,
                                   divisibility, orthogonal_complement, quotient_invariants,
                                   random_unimodular, rescale, saturate, signature, span)
from conftest import even_lattices


def test_rejects_asymmetric_and_degenerate():
    with pytest.raises(LatticeError):
        GramLattice([[2, 1], [0, 2]])
    with pytest.raises(LatticeError):
        GramLattice([[2, 2], [2, 2]])


def test_basic_properties():
    U = GramLattice([[0, 1], [1, 0]])
    assert U.det == -1 and U.is_even and signature(U) == (1, 1)
    assert not GramLattice([[1]]).is_even


@given(even_lattices(), st.integers(0, 10**6))
def test_change_basis_preserves_invariants(L, seed):
    M = change_basis(L, random_unimodular(L.rank, random.Random(seed)))
    assert M.det == L.det and signature(M) == signature(L) and M.is_even == L.is_even


@given(even_lattices(max_rank=3), even_lattices(max_rank=3))
def test_direct_sum_det_is_multiplicative(A, B):
    assert direct_sum(A, B).det == A.det * B.det


@given(even_lattices(max_rank=4), st.integers(-3, 3).filter(bool))
def test_rescale(L, k):
    assert rescale(L, k).det == k ** L.rank * L.det


@given(even_lattices(), st.integers(0, 10**6))
def test_orthogonal_complement_is_primitive_and_orthogonal(L, seed):
    rng = random.Random(seed)
    k = rng.randint(1, max(1, L.rank - 1))
    gens = [[rng.randint(-2, 2) for _ in range(L.rank)] for _ in range(k)]
    if la.rank(gens) == 0:
        return
    C = orthogonal_complement(L, gens)
    assert C.rank == L.rank - la.rank(gens)
    for c in C.rows:
        for g in gens:
            assert L.pair(c, g) == 0
    if C.rank:
        tors, free = quotient_invariants(L, C)
        assert tors == [] and free == L.rank - C.rank


@given(st.integers(0, 10**6))
def test_saturate_contains_span(seed):
    rng = random.Random(seed)
    L = GramLattice([[2 if i == j else 0 for j in range(4)] for i in range(4)])
    g = [rng.randint(-3, 3) for _ in range(4)]
    if not any(g):
        return
    c = 0
    for x in g:
        c = sympy.gcd(c, x)
    S = saturate(L, [g])
    assert S.contains([x // int(c) for x in g])
    tors, _ = quotient_invariants(L, span(L, [g]))
    assert tors == ([int(c)] if c != 1 else [])


def test_divisibility():
    L = GramLattice([[2, 0], [0, 6]])
    assert divisibility(L, [0, 1]) == 6
    assert divisibility(L, [1, 1]) == 2
    with pytest.raises(LatticeError):
        divisibility(L, [0, 0])


def test_json_round_trip():
    L = GramLattice([[2, 1], [1, 2]], name="A2")
    assert GramLattice.from_json(L.to_json()) == L
