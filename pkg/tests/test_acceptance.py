"""The fourteen acceptance criteria, each at its stated tolerance (all exact).

A summary line per criterion is printed at the end of the pytest run.  Where
the computation contradicts a stated expected value the subcheck is a strict
xfail: it keeps asserting the stated value and would start failing the run if
the computation ever agreed.
"""
import time

import numpy as np
import pytest
import sympy

from hyperlat import linalg as la
from hyperlat.catalog import Witness, coinvariant_of, make_named, resolve, witness_isometry
from hyperlat.classification import (COMPLEMENTS, TABLE_WITNESSES, _row_lattice,
                                     hilbert_embeddability, same_as_partner)
from hyperlat.disc_form import discriminant_module, unimodular_overlattice
from hyperlat.enumerate import count_roots, isometric, isometry_verdict, represents
from hyperlat.fixed_locus import (AutInvariants, bns_dimension, census_order3, census_order5,
                                  divisor_euler_characteristic, k3_census, rejected_order3,
                                  vsp_polarization)
from hyperlat.isometry import fixed_sublattices
from hyperlat.lattice_core import direct_sum
from hyperlat.niemeier import (NIEMEIER_TABLE, build_niemeier, coxeter_number, holy_pair, leech,
                               verify_leech)
from hyperlat import properties

crit = pytest.mark.criterion


def _invariant_rank(w):
    g, _ = witness_isometry(w)
    return fixed_sublattices(g.lattice, [g]).T.rank


# 1 ---------------------------------------------------------------------------------------

@crit(1, "Niemeier suite")
def test_c01_niemeier_suite():
    start = time.perf_counter()
    for name in sorted(NIEMEIER_TABLE, key=lambda s: int(s[1:])):
        L = build_niemeier(name).lattice
        assert (L.rank, abs(L.det), L.is_even) == (24, 1, True), name
        # a Niemeier lattice with Coxeter number h has 24 h roots
        assert count_roots(L) == 24 * coxeter_number(name), name
    L = leech("mod23").lattice
    assert (L.rank, abs(L.det), L.is_even, count_roots(L)) == (24, 1, True, 0)
    elapsed = time.perf_counter() - start
    assert [count_roots(build_niemeier(n).lattice) for n in ("N23", "N22", "N3")] == [48, 72, 720]
    assert elapsed < 60


# 2 ---------------------------------------------------------------------------------------

@crit(2, "Leech constructions")
@pytest.mark.parametrize("route", ["mod23", "holy:N23", "weyl"])
def test_c02_leech(route):
    E = leech(route)
    L = E.lattice
    assert (L.rank, abs(L.det), L.is_even) == (24, 1, True)
    assert count_roots(L) == 0 and verify_leech(E)


# 3 ---------------------------------------------------------------------------------------

@crit(3, "holy-pair indices")
@pytest.mark.parametrize("name,h", [("N23", 2), ("N22", 3), ("N20", 5), ("N17", 7)])
def test_c03_holy_indices(name, h):
    assert coxeter_number(name) == h
    assert holy_pair(name).indices() == (h, h)


# 4 ---------------------------------------------------------------------------------------

@crit(4, "order-11 co-invariants")
def test_c04_order11():
    rows = {label: (w, _row_lattice(label, w)) for label, w, _ in TABLE_WITNESSES[11]}
    w, (S, couple) = rows["N23 permutation"]
    A = discriminant_module(S)
    assert (S.rank, abs(S.det), A.length(), count_roots(S)) == (20, 121, 2, 0)
    assert same_as_partner(w)
    assert rows["N22 permutation"][1][0].rank == 20
    printed = resolve("S11")
    status, M = isometry_verdict(S, printed.lattice, budget=300)
    assert status in ("isometric", "invariant-match")


# 5 ---------------------------------------------------------------------------------------

@crit(5, "class ranks on the Leech lattice")
def test_c05_class_ranks():
    tw = {lab: w for p in (3, 5, 7) for lab, w, _ in TABLE_WITNESSES[p]}
    assert [_invariant_rank(tw[k]) for k in ("3A", "3B", "3C")] == [0, 12, 6]
    assert [_invariant_rank(tw[k]) for k in ("5A", "5B", "5C")] == [0, 8, 4]
    assert _invariant_rank(Witness("holy:N10", glue=(1, 5), side="Leech")) == 0
    assert [24 - _invariant_rank(tw[k]) for k in ("[1216]", "[2130]")] == [24, 18]


# 6 ---------------------------------------------------------------------------------------

@crit(6, "constructive catalog")
def test_c06_catalog():
    K = make_named("K12(-2)")
    A = discriminant_module(K)
    assert K.rank == 12 and A.exponent() == 3 and A.order > 1
    S = make_named("S5K3")
    assert S.rank == 16 and discriminant_module(S).invariant_factors() == [5, 5, 5, 5]
    _, _, fx = coinvariant_of("S3exo")
    assert isometric(fx.T.lattice(), make_named("E8(-3)"))[0] == "isometric"
    W = make_named("W")
    assert (W.rank, discriminant_module(W).invariant_factors(), count_roots(W)) == (18, [3] * 5, 0)


# 7 ---------------------------------------------------------------------------------------

@crit(7, "BNS formula")
def test_c07_bns():
    assert bns_dimension(AutInvariants(3, 5, 9)) == 16
    assert bns_dimension(AutInvariants(7, 3, 3)) == 9
    assert bns_dimension(AutInvariants(11, 2, 2)) == 5
    inv = AutInvariants.from_lattice(3, make_named("K12(-2)"))
    assert inv.m == 6 and bns_dimension(inv) == 27


# 8 ---------------------------------------------------------------------------------------

@crit(8, "fixed-locus censuses")
def test_c08_census():
    got = {(p.a, p.total_points, p.k3[0]) for p in census_order3()}
    assert got == {(6, 27, 0), (5, 6, 2), (9, 0, 0)} and len(census_order3()) == 3
    rej = {(a, k): n for a, k, n in rejected_order3()}
    assert rej[(4, 5)] < 0
    prof = census_order5()
    assert len(prof) == 1
    assert (prof[0].a, prof[0].total_points, prof[0].k3) == (4, 14, (0, 0))


# 9 ---------------------------------------------------------------------------------------

@crit(9, "K3 fixed-point counting")
def test_c09_k3():
    assert [k3_census("cyclic", p).counts[p] for p in (2, 3, 5, 7)] == [8, 6, 4, 3]
    assert not k3_census("p2", 3).consistent
    assert not k3_census("pq", 3, 5).consistent


# 10 --------------------------------------------------------------------------------------

def _primitive_values(G, bound=16):
    """Even integers <= bound represented primitively, by a numpy box scan."""
    G = np.array(G, dtype=np.int64)
    inv = sympy.Matrix(G.tolist()).inv()
    radii = [int(sympy.sqrt(bound * inv[i, i])) + 1 for i in range(len(G))]
    X = np.stack(np.meshgrid(*[np.arange(-r, r + 1) for r in radii], indexing="ij"),
                 -1).reshape(-1, len(G))
    norms = np.einsum("ij,jk,ik->i", X, G, X)
    g = np.gcd.reduce(np.abs(X), axis=1)
    return sorted({int(v) for v, c in zip(norms, g) if c == 1 and 0 < v <= bound and v % 2 == 0})


def _library_values(G, bound=16):
    from hyperlat.lattice_core import GramLattice
    return [v for v in range(2, bound + 1, 2) if represents(GramLattice(G), v, primitive=True)]


@crit(10, "representability table")
def test_c10_representability_consistent_parts():
    M = COMPLEMENTS["S5exo"].forms[0]
    assert 8 not in _library_values(M) and 8 not in _primitive_values(M)
    union = set()
    for G in COMPLEMENTS["S11"].forms:
        assert _library_values(G) == _primitive_values(G)
        union |= set(_library_values(G))
    assert sorted(union) == list(range(2, 17, 2))
    assert [v.verdict for v in hilbert_embeddability("S11")] == ["yes"] * 8


@crit(10, "representability table")
@pytest.mark.xfail(strict=True, reason="A2+A2(3) also represents 12 primitively: "
                   "(2,1) in A2 has norm 6 and (1,0) in A2(3) has norm 6")
def test_c10_A2_A2_3_set():
    G = COMPLEMENTS["W(-1)"].forms[0]
    # two independent enumerations agree on {2, 6, 8, 12, 14}; 12 = 6 + 6 from (2,1) + (1,0)
    assert _library_values(G, 14) == _primitive_values(G, 14)
    assert _library_values(G, 14) == [2, 6, 8, 14]


@crit(10, "representability table")
@pytest.mark.xfail(strict=True, reason="the positive rank-4 form of determinant 125 does not "
                   "represent 12; both enumerations give {4, 6, 10, 14, 16}")
def test_c10_M125_set():
    G = COMPLEMENTS["S5exo"].forms[0]
    assert _library_values(G) == _primitive_values(G)
    assert _library_values(G) == [4, 6, 10, 12, 14, 16]


# 11 --------------------------------------------------------------------------------------

@crit(11, "T11 discrimination")
def test_c11_t11():
    T1, T2 = make_named("T11_1"), make_named("T11_2")
    assert represents(T1, 2, primitive=True) is not None
    assert represents(T1, 6, div=2) is None
    assert represents(T2, 2, primitive=True) is None
    assert represents(T2, 6, div=2) is not None


# 12 --------------------------------------------------------------------------------------

@crit(12, "Euler characteristic bound")
def test_c12_euler():
    assert divisor_euler_characteristic(38, 2) == 231 <= 1365
    assert divisor_euler_characteristic(108, 2) == 1596 > 1365
    assert vsp_polarization()["square"] == 38


# 13 --------------------------------------------------------------------------------------

@crit(13, "property suites")
@pytest.mark.parametrize("law", ["overlattice_laws", "milgram_on_catalog", "eichler_laws",
                                 "torsion_bounds"])
def test_c13_properties(law):
    import random
    assert getattr(properties, law)(random.Random(13), 100) == []


# 14 --------------------------------------------------------------------------------------

@crit(14, "overlattice searches")
def test_c14_overlattices_consistent_parts():
    over = unimodular_overlattice(make_named("D8"))
    assert over is not None and isometric(over[0], make_named("E8"))[0] == "isometric"
    M = make_named("M125")
    over = unimodular_overlattice(direct_sum(M, M))
    assert over is not None and isometric(over[0], make_named("E8(-1)"))[0] == "isometric"


@crit(14, "overlattice searches")
@pytest.mark.xfail(strict=True, reason="M81 + M81 has an even unimodular overlattice, "
                   "isometric to E8(-1); it is certified in test_c14_M81_overlattice_certificate")
def test_c14_M81_no_overlattice():
    M = make_named("M81")
    assert unimodular_overlattice(direct_sum(M, M)) is None


def test_c14_M81_overlattice_certificate():
    """Independent check of the overlattice found for M81 + M81."""
    M = make_named("M81")
    L = direct_sum(M, M)
    O, basis = unimodular_overlattice(L)
    B = sympy.Matrix(basis)
    G = sympy.Matrix(L.gram)
    Gram = B * G * B.T
    assert Gram == sympy.Matrix(O.gram)
    assert abs(Gram.det()) == 1 and all(Gram[i, i] % 2 == 0 for i in range(8))
    # L sits inside with index 81 = sqrt(81 * 81)
    assert all(x.q == 1 for x in B.inv())
    assert abs(B.det()) == sympy.Rational(1, 81)
    assert count_roots(O) == 240


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
