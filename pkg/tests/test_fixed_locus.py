from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperlat.catalog import make_named
from hyperlat.fixed_locus import (AutInvariants, FixedLocusError, bns_dimension, census_order3,
                                  census_order5, divisor_euler_characteristic, k3_census,
                                  rejected_order3, solve_census, vsp_polarization)


@pytest.mark.parametrize("p,a,m,want", [(3, 5, 9, 16), (7, 3, 3, 9), (11, 2, 2, 5)])
def test_bns_values(p, a, m, want):
    assert bns_dimension(AutInvariants(p, a, m)) == want


def test_bns_with_computed_a():
    inv = AutInvariants.from_lattice(3, make_named("K12(-2)"))
    assert (inv.a, inv.m) == (6, 6)
    assert bns_dimension(inv) == 27


@pytest.mark.parametrize("args", [(4, 1, 1), (3, 20, 2), (3, -1, 1), (13, 1, 2)])
def test_invalid_invariants(args):
    with pytest.raises(FixedLocusError):
        AutInvariants(*args)


def test_bns_outside_range():
    with pytest.raises(FixedLocusError):
        bns_dimension(AutInvariants(5, 4, 4))
    with pytest.raises(FixedLocusError):
        bns_dimension(AutInvariants(2, 1, 1))


def _reduced_system_scan():
    """Brute-force scan of the order-3 reduced system over a box of integers."""
    out = []
    for a in range(10):
        for K in range(40):
            if 9 * a * a - 135 * a + 486 - 18 * K:
                continue
            N2 = 3 * (54 - 6 * a - 10 * K)          # from 6a - 54 = -2N/3 - 10K
            if N2 % 2 or N2 < 0:
                continue
            N = N2 // 2
            A = 6 * (3 - Fraction(N, 9) + Fraction(10 * K, 3))
            if A < 0 or A.denominator != 1:
                continue
            if Fraction(-N, 3) + 4 * K != Fraction(9 * a * a - 129 * a, 2) + 216:
                continue
            out.append((a, N, K))
    return sorted(out)


def test_order3_census():
    got = sorted((pr.a, pr.total_points, pr.k3[0]) for pr in census_order3())
    assert got == [(5, 6, 2), (6, 27, 0), (9, 0, 0)] == _reduced_system_scan()
    assert (4, 5) in [(a, k) for a, k, n in rejected_order3()]
    assert all(n < 0 for _, _, n in rejected_order3())


def test_order3_derived_system_agrees():
    derived = sorted((a, s["N"], s["K"]) for a in range(10) for s in solve_census(3, a))
    assert derived == _reduced_system_scan()


def test_order5_census():
    prof = census_order5()
    assert len(prof) == 1
    pr = prof[0]
    assert (pr.a, pr.total_points, pr.k3, pr.c2) == (4, 14, (0, 0), (0, 0))
    assert pr.swapped() == pr or pr.swapped() in prof


@given(st.integers(0, 400).map(lambda t: 2 * t))
def test_divisor_euler_characteristic(q):
    t = q // 2
    # Riemann-Roch on K3 and on K3^[2]
    assert divisor_euler_characteristic(q, 1) == t + 2
    assert divisor_euler_characteristic(q, 2) == (t + 3) * (t + 2) // 2


def test_divisor_values():
    assert divisor_euler_characteristic(38, 2) == 231
    assert divisor_euler_characteristic(108, 2) == 1596
    with pytest.raises(FixedLocusError):
        divisor_euler_characteristic(7, 2)


def test_polarization():
    pol = vsp_polarization()
    assert pol["square"] == 38 and pol["chi"] <= 1365
    rejected = [r for r in pol["table"] if r["chi"] is not None and not r["kept"]]
    assert rejected and rejected[0]["chi"] > 1365


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_k3_cyclic(p):
    c = k3_census("cyclic", p)
    assert c.consistent and c.counts == {p: 24 // (p + 1)}


def test_k3_contradictions():
    assert not k3_census("p2", 3).consistent
    assert not k3_census("pq", 3, 5).consistent
    assert not k3_census("cyclic", 13).consistent


def test_k3_consistent_groups():
    assert k3_census("p2", 2).counts == {2: 4, 4: 4}
    assert k3_census("pq", 2, 3).counts == {2: 6, 3: 4, 6: 2}
    with pytest.raises(FixedLocusError):
        k3_census("cyclic", 9)
