import pytest

from hyperlat import linalg as la
from hyperlat.enumerate import count_roots
from hyperlat.lattice_core import LatticeError
from hyperlat.niemeier import (NIEMEIER_TABLE, build_niemeier, coxeter_number,
                               expected_root_count, glue_generators, holy_pair, leech,
                               parse_components, verify_leech)

# Coxeter numbers of the 23 rooted Niemeier lattices, N1 .. N23
COXETER = [46, 30, 30, 25, 22, 18, 18, 16, 14, 13, 12, 12, 10, 10, 9, 8, 7, 6, 6, 5, 4, 3, 2]
NAMES = ["N%d" % k for k in range(1, 24)]


def test_table_covers_all_rooted_lattices():
    assert sorted(NIEMEIER_TABLE, key=lambda s: int(s[1:])) == NAMES
    assert [coxeter_number(n) for n in NAMES] == COXETER


@pytest.mark.parametrize("name", NAMES)
def test_root_system_rank_and_count(name):
    comps = parse_components(NIEMEIER_TABLE[name][0])
    assert sum(c.n for c in comps) == 24
    # a Niemeier root system has 24 h roots
    assert expected_root_count(name) == 24 * coxeter_number(name)


@pytest.mark.parametrize("name", ["N23", "N22", "N12", "N3", "N18", "N1"])
def test_build_even_unimodular(name):
    L = build_niemeier(name).lattice
    assert (L.rank, abs(L.det), L.is_even) == (24, 1, True)
    assert count_roots(L) == 24 * coxeter_number(name)


def test_negative_definite_convention():
    L = build_niemeier("N23").lattice
    assert la.inertia(L.gram)[:2] == (0, 24)


def test_glue_generators_are_words():
    comps = parse_components(NIEMEIER_TABLE["N22"][0])
    for w in glue_generators("N22"):
        assert len(w) == len(comps)


def test_parse_components_rejects_junk():
    for bad in ("Q5", "D3", "E9", "A"):
        with pytest.raises(LatticeError):
            parse_components(bad)


@pytest.mark.parametrize("route", ["mod23", "holy:N23", "weyl"])
def test_leech_routes(route):
    E = leech(route)
    assert verify_leech(E)
    assert count_roots(E.lattice) == 0


def test_verify_leech_rejects_rooted():
    with pytest.raises(LatticeError):
        verify_leech(build_niemeier("N23"))


@pytest.mark.parametrize("name,h", [("N23", 2), ("N22", 3), ("N20", 5), ("N17", 7)])
def test_holy_indices(name, h):
    assert holy_pair(name).indices() == (h, h)


def test_holy_translation_is_permutation():
    P = holy_pair("N20").translation_matrix([1, 0, 2, 0, 0, 4])
    assert all(sorted(r) == [0] * (len(r) - 1) + [1] for r in P)
    assert all(sum(col) == 1 for col in zip(*P))


def test_holy_requires_pure_A_type():
    with pytest.raises(LatticeError):
        holy_pair("N12")
