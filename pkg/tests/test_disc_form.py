import cmath
import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from hyperlat import linalg as la
from hyperlat.disc_form import (FiniteQuadraticModule, are_isometric, discriminant_data,
                                discriminant_module, exists_even_lattice,
                                exists_primitive_embedding, gauss_sum_signature, glue_pair,
                                GlueMap, is_isotropic, isotropic_subgroups, overlattice,
                                unimodular_overlattice)
from hyperlat.lattice_core import GramLattice, direct_sum, rescale, signature
from conftest import even_lattices


def _box_histogram(L):
    """q-value histogram of Z^n / G Z^n by brute force over a box of side |det|."""
    d = abs(L.det)
    inv = sympy.Matrix(L.gram).inv()
    hist = Counter()
    for x in itertools.product(range(d), repeat=L.rank):
        v = sympy.Matrix(x)
        q = Fraction(str((v.T * inv * v)[0]))
        hist[q % 2] += 1
    scale = d ** (L.rank - 1)
    return {k: v // scale for k, v in hist.items()}


def _module_histogram(A):
    return dict(Counter(A.q(x) for x in A.elements()))


small = even_lattices(max_rank=3, max_scale=3).filter(lambda L: abs(L.det) ** L.rank <= 4000)


@given(small)
def test_discriminant_module_matches_brute_force(L):
    A = discriminant_module(L)
    assert A.order == abs(L.det)
    assert _module_histogram(A) == _box_histogram(L)


@given(small)
def test_gauss_sum_against_numeric_sum(L):
    A = discriminant_module(L)
    assume(A.order > 1)
    z = sum(cmath.exp(1j * math.pi * float(A.q(x))) for x in A.elements())
    numeric = round(cmath.phase(z) / (math.pi / 4)) % 8
    assert gauss_sum_signature(A) == numeric


@given(even_lattices(max_rank=5))
def test_milgram(L):
    pos, neg = signature(L)
    assert (pos - neg - gauss_sum_signature(discriminant_module(L))) % 8 == 0


@given(even_lattices(max_rank=4))
def test_length_and_exponent(L):
    A = discriminant_module(L)
    inv = A.invariant_factors()
    assert math.prod(inv) == abs(L.det)
    assert A.length() == len(inv)
    assert A.exponent() == (inv[-1] if inv else 1)


def test_examples():
    A2 = GramLattice([[2, -1], [-1, 2]])
    A = discriminant_module(A2)
    assert A.invariant_factors() == [3]
    assert sorted(A.q(x) for x in A.elements()) == [0, Fraction(2, 3), Fraction(2, 3)]
    E8 = GramLattice(la.congruence(la.identity(8), [[2 if i == j else 0 for j in range(8)]
                                                     for i in range(8)]))
    assert discriminant_module(E8).order == 2 ** 8


def test_discriminant_requires_even():
    with pytest.raises(ValueError):
        discriminant_module(GramLattice([[1]]))


def test_fqm_validation():
    with pytest.raises(ValueError):
        FiniteQuadraticModule((3,), (Fraction(1, 3),), ((Fraction(1, 3),),))


@given(even_lattices(max_rank=4, max_scale=3))
def test_json_round_trip(L):
    A = discriminant_module(L)
    assert FiniteQuadraticModule.from_json(A.to_json()) == A


@given(even_lattices(max_rank=4, max_scale=3).filter(lambda L: abs(L.det) <= 300))
def test_isometric_to_itself_and_sign(L):
    A = discriminant_module(L)
    assert are_isometric(A, A)
    B = discriminant_module(rescale(L, -1))
    assert are_isometric(B, A, sign=-1)


def test_non_isometric():
    a = discriminant_module(GramLattice([[2, -1], [-1, 2]]))        # q = 2/3
    b = discriminant_module(GramLattice([[-2, 1], [1, -2]]))        # q = 4/3
    assert not are_isometric(a, b)


@given(even_lattices(max_rank=4, max_scale=4).filter(lambda L: abs(L.det) <= 1500))
def test_overlattice_laws(L):
    data = discriminant_data(L)
    A = data.module
    iso = [x for x in A.elements() if any(x) and A.q(x) == 0]
    assume(iso)
    x = iso[0]
    h = A.element_order(x)
    M, basis = overlattice(L, [x], data)
    B = discriminant_module(M)
    assert B.order * h * h == A.order
    assert are_isometric(B, A.subquotient([x]))


def test_overlattice_rejects_anisotropic():
    A1 = GramLattice([[2]])
    with pytest.raises(ValueError):
        overlattice(A1, [(1,)])


def test_isotropic_subgroups_are_isotropic():
    L = direct_sum(*[GramLattice([[2]])] * 4)
    A = discriminant_module(L)
    subs, complete = isotropic_subgroups(A)
    # q = 1/2 on each generator: only the sum of all four is isotropic
    assert complete and sorted(H.order for H in subs) == [1, 2]
    for H in subs:
        assert is_isotropic(A, list(H.generators))


def test_unimodular_overlattice_D8_and_obstruction():
    D8 = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i in range(6):
        D8[i][i + 1] = D8[i + 1][i] = -1
    D8[5][7] = D8[7][5] = -1
    res = unimodular_overlattice(GramLattice(D8))
    assert res is not None and abs(res[0].det) == 1 and res[0].is_even
    assert unimodular_overlattice(GramLattice([[2, -1], [-1, 2]])) is None


def test_glue_pair_A2_A2_minus():
    A2 = GramLattice([[2, -1], [-1, 2]])
    m = rescale(A2, -1)
    d1, d2 = discriminant_data(A2), discriminant_data(m)
    x = next(v for v in d1.module.elements() if any(v))
    y = next(v for v in d2.module.elements() if d2.module.q(v) == (-d1.module.q(x)) % 2)
    M, _ = glue_pair(A2, m, GlueMap((x,), (y,)))
    assert abs(M.det) == 1


def test_exists_even_lattice_verdicts():
    A = discriminant_module(GramLattice([[2, -1], [-1, 2]]))
    assert exists_even_lattice((1, 0), A)[0] == "no"                    # signature mod 8
    assert exists_even_lattice((2, 0), A)[0] == "yes"
    assert exists_even_lattice((0, 2), A)[0] == "no"                    # signature mod 8
    E = discriminant_module(GramLattice([[2]]))
    assert exists_even_lattice((1, 0), E)[0] == "yes"


def test_exists_primitive_embedding_rank_criterion():
    E8m2 = rescale(GramLattice([[2]]), -1)
    verdict, reason, _ = exists_primitive_embedding(E8m2, (3, 19))
    assert verdict == "yes"
