import random

import pytest
from hypothesis import given, strategies as st

from hyperlat import linalg as la
from hyperlat.catalog import WITNESSES, Witness, make_named, witness_isometry
from hyperlat.isometry import (IsometryError, IsometrySpec, LatticeIsometry, closure, compose,
                               discriminant_action, eichler_equivalent, eichler_transvection,
                               extend_to_mukai, fixed_sublattices, from_spec, identity, invert,
                               minus_identity, order, power, restrict, structure_checks,
                               transvection_normal_form)
from hyperlat.lattice_core import (GramLattice, direct_sum, orthogonal_complement,
                                   quotient_invariants, rescale)
from hyperlat.niemeier import build_niemeier
from conftest import even_lattices


def _shift(L, p, r):
    """Cyclic shift of the p summands of L = B^p, each of rank r."""
    N = p * r
    rows = [[0] * N for _ in range(N)]
    for blk in range(p):
        for i in range(r):
            rows[blk * r + i][((blk + 1) % p) * r + i] = 1
    return LatticeIsometry(L, la.transpose(rows))


def test_rejects_non_isometry():
    L = GramLattice([[2, 0], [0, 4]])
    with pytest.raises(IsometryError):
        LatticeIsometry(L, [[0, 1], [1, 0]])


def test_group_operations():
    A1 = GramLattice([[2]])
    L = direct_sum(A1, A1, A1)
    g = _shift(L, 3, 1)
    assert order(g) == 3
    assert power(g, 3).is_identity() and compose(g, invert(g)).is_identity()
    assert len(closure([g])) == 3
    assert len(closure([g, minus_identity(L)])) == 6


@given(even_lattices(max_rank=3, definite=True, max_scale=3), st.sampled_from((2, 3, 5)),
       st.integers(0, 10**6))
def test_torsion_bounds(B, p, seed):
    L = direct_sum(*([B] * p))
    g = _shift(L, p, B.rank)
    fx = fixed_sublattices(L, [g])
    assert fx.T.rank == B.rank and fx.S.rank == (p - 1) * B.rank
    both = type(fx.T)(L, tuple(fx.T.rows) + tuple(fx.S.rows))
    tors, free = quotient_invariants(L, both)
    assert free == 0 and all(p % d == 0 for d in tors)
    rng = random.Random(seed)
    v = [rng.randint(-3, 3) for _ in range(L.rank)]
    assert fx.S.contains([a - b for a, b in zip(v, g.apply(v))])
    # g restricted to S is annihilated by the cyclotomic polynomial
    R = restrict(g, fx.S)
    S_sum = la.zeros(len(R), len(R))
    P = la.identity(len(R))
    for _ in range(p):
        S_sum = [[a + b for a, b in zip(x, y)] for x, y in zip(S_sum, P)]
        P = la.mat_mul(P, R)
    assert not any(any(r) for r in S_sum)


def _UU(M):
    U = GramLattice([[0, 1], [1, 0]])
    return direct_sum(U, U, M)


@given(even_lattices(max_rank=3, definite=True, max_scale=3), st.integers(0, 10**6))
def test_eichler_laws(M, seed):
    rng = random.Random(seed)
    T = _UU(rescale(M, -1))
    e = [1, 0] + [0] * (T.rank - 2)
    perp = orthogonal_complement(T, [e]).rows

    def rand():
        c = [rng.randint(-2, 2) for _ in perp]
        return [sum(ci * r[j] for ci, r in zip(c, perp)) for j in range(T.rank)]

    a, b = rand(), rand()
    ta, tb = eichler_transvection(T, e, a), eichler_transvection(T, e, b)
    tab = eichler_transvection(T, e, [x + y for x, y in zip(a, b)])
    assert ta.apply(e) == e
    assert compose(ta, tb).matrix == tab.matrix
    assert eichler_transvection(T, e, [0] * T.rank).is_identity()


def test_eichler_preconditions():
    T = _UU(GramLattice([[-2]]))
    with pytest.raises(IsometryError):
        eichler_transvection(T, [1, 1, 0, 0, 0], [0, 0, 1, 0, 0])
    with pytest.raises(IsometryError):                      # a not orthogonal to e
        eichler_transvection(T, [1, 0, 0, 0, 0], [0, 1, 0, 0, 0])


PAIRS = [([1, 0, 0, 0], [0, 1, 0, 0]), ([0, 0, 1, 0], [0, 0, 0, 1])]


@given(st.integers(0, 10**6))
def test_eichler_criterion_recovers_images(seed):
    rng = random.Random(seed)
    M = rescale(GramLattice([[2, -1], [-1, 2]]), -1)
    T = _UU(M)
    pairs = [(p[0] + [0, 0], p[1] + [0, 0]) for p in PAIRS]
    v = [rng.randint(-3, 3) for _ in range(T.rank)]
    if not any(v):
        return
    g = identity(T)
    for _ in range(3):
        e = list(rng.choice([p[0] for p in pairs] + [p[1] for p in pairs]))
        a = [rng.randint(-2, 2) for _ in orthogonal_complement(T, [e]).rows]
        perp = orthogonal_complement(T, [e]).rows
        a = [sum(c * r[j] for c, r in zip(a, perp)) for j in range(T.rank)]
        g = compose(eichler_transvection(T, e, a), g)
    w = g.apply(v)
    res = eichler_equivalent(T, v, w, pairs)
    assert res.equivalent
    if res.matrix is not None:
        assert LatticeIsometry(T, res.matrix).apply(v) == w


def test_eichler_distinguishes_norms():
    T = _UU(GramLattice([[-2]]))
    pairs = [(p[0] + [0], p[1] + [0]) for p in PAIRS]
    assert not eichler_equivalent(T, [1, 1, 0, 0, 0], [1, 2, 0, 0, 0], pairs).equivalent
    v = [3, 5, 1, 0, 1]
    nf, chain, g = transvection_normal_form(T, v, pairs)
    # the chain carries v to the vector with normal-form coordinates
    basis = [list(x) for p in pairs for x in p] + [list(r) for r in
                                                   orthogonal_complement(T, [list(x) for p in pairs for x in p]).rows]
    image = [sum(c * b[i] for c, b in zip(nf, basis)) for i in range(5)]
    assert g.apply(v) == image
    assert T.norm(image) == T.norm(v)


def test_discriminant_action():
    A2 = GramLattice([[2, -1], [-1, 2]])
    assert not discriminant_action(A2, minus_identity(A2)).trivial
    A1 = GramLattice([[2]])
    assert discriminant_action(A1, minus_identity(A1)).trivial


def test_extend_to_mukai_swap():
    L = make_named("L_n", n=2)
    # swap the two E8(-1) summands (coordinates 6..13 and 14..21)
    n = L.rank
    perm = list(range(n))
    for i in range(8):
        perm[6 + i], perm[14 + i] = 14 + i, 6 + i
    rows = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
    g = LatticeIsometry(L, la.transpose(rows))
    ext = extend_to_mukai(g)
    assert ext.lattice.rank == 24 and abs(ext.lattice.det) == 1
    assert ext.S_matches
    assert fixed_sublattices(ext.lattice, [ext.isometry]).S.rank == 8


def test_witness_structure():
    g, _ = witness_isometry(WITNESSES["K12(-2)"])
    rep = structure_checks(g.lattice, [g])
    assert rep.invariant_factors == [3] * 6 and rep.free_action and rep.cyclotomic_annihilation


def test_from_spec_rejects_non_code_permutation():
    E = build_niemeier("N23")
    perm = list(range(24))
    perm[0], perm[1] = 1, 0
    with pytest.raises(IsometryError):
        from_spec(E, IsometrySpec(perm))


def test_spec_json_round_trip():
    s = IsometrySpec([1, 0, 2], [(0, "sigma")], None)
    assert IsometrySpec.from_json(s.to_json()) == s
