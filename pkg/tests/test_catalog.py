import pytest

from hyperlat import linalg as la
from hyperlat.catalog import (CATALOG, CatalogError, Witness, cartan, get_entry, make_named,
                              names, parse_formula, repaired_matrix, resolve, validate_matrix)
from hyperlat.disc_form import discriminant_module
from hyperlat.enumerate import count_roots, isometric
from hyperlat.lattice_core import signature

FAST = [n for n in names() if CATALOG[n].recipe in ("formula", "explicit") and not CATALOG[n].params]


@pytest.mark.parametrize("name", FAST)
def test_entries_validate(name):
    r = resolve(name)
    assert r.status in ("ok", "repaired"), r.problems


@pytest.mark.parametrize("name", ["K12(-2)", "S3exo", "S5K3", "S5exo", "W(-1)"])
def test_constructive_entries(name):
    r = resolve(name)
    assert r.status == "ok", r.problems
    assert signature(r.lattice)[0] == 0 and count_roots(r.lattice) == 0


def test_cartan_matrices():
    assert abs(la.det(cartan("A", 4))) == 5
    assert abs(la.det(cartan("D", 6))) == 4
    assert abs(la.det(cartan("E", 8))) == 1
    with pytest.raises(CatalogError):
        cartan("F", 4)


def test_parse_formula():
    L = parse_formula("U^3+E8(-1)^2+(-2)")
    assert (L.rank, abs(L.det), signature(L)) == (23, 2, (3, 20))
    assert parse_formula("A2(3)").det == 27
    with pytest.raises(CatalogError):
        parse_formula("Z9+")


@pytest.mark.parametrize("n,det", [(2, 2), (3, 4), (5, 8)])
def test_L_n(n, det):
    L = make_named("L_n", n=n)
    assert abs(L.det) == det and signature(L) == (3, 20)


def test_parametrised_entry_needs_parameter():
    with pytest.raises(CatalogError):
        resolve("L_n")
    with pytest.raises(CatalogError):
        resolve("L_n", n=2, k=1)


def test_unknown_name():
    with pytest.raises(CatalogError):
        get_entry("nope")


@pytest.mark.parametrize("name", ["S7K3", "S11"])
def test_printed_matrix_repair(name):
    entry = get_entry(name)
    _, problems = validate_matrix(entry.matrix, entry.claims)
    assert problems                       # the printed matrix is broken as printed
    fixed = repaired_matrix(entry)
    changed = [i for i in range(len(fixed)) if fixed[i] != list(entry.matrix[i])]
    assert changed == [entry.repair[0]]
    assert resolve(name).status == "repaired"


def test_claims_S11():
    S = make_named("S11")
    A = discriminant_module(S)
    assert (S.rank, abs(S.det), A.invariant_factors()) == (20, 121, [11, 11])


def test_K12_and_W():
    K = make_named("K12(-2)")
    assert K.rank == 12 and discriminant_module(K).exponent() == 3
    W = make_named("W")
    assert (W.rank, discriminant_module(W).invariant_factors()) == (18, [3] * 5)
    assert count_roots(W) == 0


def test_M7_alternative_form():
    # same signature and discriminant form; indefinite with l(A) <= rank - 2, so one class
    from hyperlat.disc_form import are_isometric
    a, b = make_named("M7"), parse_formula("U+U(7)+(14)")
    assert signature(a) == signature(b)
    assert are_isometric(discriminant_module(a), discriminant_module(b))


def test_witness_json():
    w = Witness("holy:N20", glue=(0, 0, 1, 2, 3, 4), side="Leech")
    js = w.to_json()
    assert js["glue"] == [0, 0, 1, 2, 3, 4] and js["side"] == "Leech"


def test_resolved_json():
    js = resolve("M81").to_json()
    assert js["status"] == "ok" and len(js["gram"]) == 4


def test_M81_short_vector_census():
    # 9 pairs of norm -4 and 6 pairs of norm -6, nothing shorter
    from hyperlat.enumerate import short_vectors
    c = short_vectors(make_named("M81"), 6)
    assert c.counts == {-6: 12, -4: 18}
