"""Integral lattices given by Gram matrices, their sublattices and invariants."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg as la


class LatticeError(ValueError):
    pass


def _freeze(M):
    return tuple(tuple(int(x) for x in row) for row in M)


@dataclass(frozen=True)
class GramLattice:
    """A lattice given by an exact integer Gram matrix in a fixed basis."""
    gram: tuple
    name: str = None
    basis_tag: str = None
    _det: int = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        g = _freeze(self.gram)
        object.__setattr__(self, "gram", g)
        if not la.is_symmetric(g):
            raise LatticeError("Gram matrix is not symmetric")
        d = la.det(g) if g else 1
        if d == 0:
            raise LatticeError("degenerate lattice")
        object.__setattr__(self, "_det", int(d))

    @property
    def rank(self):
        return len(self.gram)

    @property
    def det(self):
        return self._det

    @property
    def is_even(self):
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def matrix(self):
        return [list(r) for r in self.gram]

    def norm(self, v):
        return la.bilinear(v, self.gram, v)

    def pair(self, u, v):
        return la.bilinear(u, self.gram, v)

    def renamed(self, name):
        return GramLattice(self.gram, name=name, basis_tag=self.basis_tag)

    def negated(self):
        return rescale(self, -1)

    def definiteness(self):
        """+1 for positive definite, -1 for negative definite, 0 otherwise."""
        pos, neg, _ = la.inertia(self.gram)
        if neg == 0:
            return 1
        if pos == 0:
            return -1
        return 0

    def to_json(self):
        out = {"gram": self.matrix()}
        if self.name:
            out = {"name": self.name, "gram": self.matrix()}
        return out

    @classmethod
    def from_json(cls, data):
        return cls(data["gram"], name=data.get("name"))


def lattice(gram, name=None, basis_tag=None):
    return GramLattice(gram, name=name, basis_tag=basis_tag)


@dataclass(frozen=True)
class Sublattice:
    """A sublattice given by generator rows in the ambient basis."""
    ambient: GramLattice
    rows: tuple
    primitive: bool = False

    def __post_init__(self):
        rows = _freeze(self.rows)
        object.__setattr__(self, "rows", rows)
        if rows and la.rank(rows) != len(rows):
            raise LatticeError("sublattice generators are not independent")

    @property
    def rank(self):
        return len(self.rows)

    def gram(self):
        return la.congruence([list(r) for r in self.rows], self.ambient.matrix())

    def lattice(self, name=None):
        return GramLattice(self.gram(), name=name)

    def hnf_key(self):
        return tuple(tuple(r) for r in la.hnf([list(r) for r in self.rows]))

    def same_as(self, other):
        return self.hnf_key() == other.hnf_key()

    def contains(self, v):
        if not self.rows:
            return not any(v)
        try:
            x = la.solve_left([list(r) for r in self.rows], list(v))
        except ValueError:
            return False
        return all(c.denominator == 1 for c in x)

    def is_zero(self):
        return not self.rows


def basic_invariants(L):
    pos, neg, zero = la.inertia(L.gram)
    if zero:
        raise LatticeError("degenerate lattice")
    return {
        "rank": L.rank,
        "determinant": L.det,
        "parity": "even" if L.is_even else "odd",
        "signature": (pos, neg),
    }


def signature(L):
    pos, neg, _ = la.inertia(L.gram)
    return pos, neg


def divisibility(L, v):
    """Positive generator of the ideal (v, L)."""
    if not any(v):
        raise LatticeError("divisibility of the zero vector")
    g = 0
    for x in la.vec_mat(list(v), L.matrix()):
        g = gcd(g, x)
    return g


def saturate(L, gens):
    """Primitive closure of the span of gens inside L."""
    gens = [list(map(int, g)) for g in gens]
    if not gens or not any(any(g) for g in gens):
        return Sublattice(L, (), primitive=True)
    for g in gens:
        if len(g) != L.rank:
            raise LatticeError("generator length differs from the lattice rank")
    return Sublattice(L, la.saturation(gens), primitive=True)


def span(L, gens):
    """Sublattice generated by gens (not saturated)."""
    gens = [list(map(int, g)) for g in gens]
    return Sublattice(L, la.hnf(gens) if gens else ())


def orthogonal_complement(L, S):
    """Saturated kernel of the pairing with the rows of S."""
    rows = S.rows if isinstance(S, Sublattice) else S
    if not rows:
        return Sublattice(L, la.identity(L.rank), primitive=True)
    P = la.mat_mul(L.matrix(), la.transpose([list(r) for r in rows]))  # n x k
    K = la.integer_left_kernel(P)
    if not K:
        return Sublattice(L, (), primitive=True)
    return Sublattice(L, la.saturation(K), primitive=True)


def quotient_invariants(L, S):
    """Invariant factors of Z^n / span(S) (torsion part), and the free rank."""
    rows = [list(r) for r in S.rows]
    if not rows:
        return [], L.rank
    d, _, _ = la.smith_form(rows)
    return [x for x in d if x != 1], L.rank - len(d)


def direct_sum(*parts, name=None):
    n = sum(p.rank for p in parts)
    G = la.zeros(n, n)
    off = 0
    for p in parts:
        for i in range(p.rank):
            for j in range(p.rank):
                G[off + i][off + j] = p.gram[i][j]
        off += p.rank
    return GramLattice(G, name=name)


def rescale(L, k, name=None):
    if k == 0:
        raise LatticeError("rescaling by zero")
    return GramLattice([[k * x for x in r] for r in L.gram], name=name)


def assemble(parts, scale=1, name=None):
    """Direct sum of parts, then rescaled by scale."""
    out = direct_sum(*parts)
    if scale != 1:
        out = rescale(out, scale)
    return out.renamed(name) if name else out


def dual_data(L):
    """Coordinates of the dual basis (inverse Gram) and the dual Gram matrix."""
    inv = la.inverse(L.gram)
    return {"dual_basis": inv, "dual_gram": inv}


def induced(L, rows, name=None):
    return GramLattice(la.congruence([list(r) for r in rows], L.matrix()), name=name)


def random_unimodular(n, rng, steps=None):
    """Random product of elementary integer matrices, for basis-change tests."""
    U = la.identity(n)
    if n < 2:
        return [[rng.choice((1, -1))]] if n == 1 else U
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    if rng.random() < 0.5:
        U[0] = [-a for a in U[0]]
    return U


def change_basis(L, U):
    return GramLattice(la.congruence(U, L.matrix()), name=L.name)
