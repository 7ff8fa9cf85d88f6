"""Isometries of lattices: algebra, invariant and co-invariant sublattices,
Eichler transvections, discriminant actions and the extension to the
Mukai lattice.

Matrices act on column coordinate vectors, so an isometry M of a lattice
with Gram G satisfies M^T G M = G.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import linalg as la
from .cyclotomic import cyclotomic_polynomial
from .lattice_core import (GramLattice, LatticeError, Sublattice, divisibility,
                           orthogonal_complement)


class IsometryError(LatticeError):
    pass


def _check(G, M):
    n = len(G)
    if len(M) != n or any(len(r) != n for r in M):
        raise IsometryError("matrix shape does not match the lattice rank")
    P = la.mat_mul(la.mat_mul(la.transpose(M), G), M)
    for i in range(n):
        for j in range(n):
            if P[i][j] != G[i][j]:
                raise IsometryError("not an isometry: entry (%d, %d) is %s, expected %s"
                                    % (i, j, P[i][j], G[i][j]))


@dataclass(frozen=True)
class LatticeIsometry:
    lattice: GramLattice
    matrix: tuple

    def __post_init__(self):
        M = tuple(tuple(int(x) for x in r) for r in self.matrix)
        object.__setattr__(self, "matrix", M)
        _check(self.lattice.matrix(), [list(r) for r in M])
        if la.det(M) not in (1, -1):
            raise IsometryError("determinant is not a unit")

    @property
    def rank(self):
        return self.lattice.rank

    def rows(self):
        """Row-convention matrix R = M^T, acting as x -> x R."""
        return la.transpose([list(r) for r in self.matrix])

    def apply(self, v):
        return [sum(a * b for a, b in zip(r, v)) for r in self.matrix]

    def is_identity(self):
        return self.matrix == tuple(tuple(r) for r in la.identity(self.rank))

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix]}


def identity(L):
    return LatticeIsometry(L, la.identity(L.rank))


def minus_identity(L):
    return LatticeIsometry(L, [[-x for x in r] for r in la.identity(L.rank)])


def compose(a, b):
    """a after b."""
    if a.lattice.gram != b.lattice.gram:
        raise IsometryError("isometries of different lattices")
    return LatticeIsometry(a.lattice, la.mat_mul([list(r) for r in a.matrix],
                                                 [list(r) for r in b.matrix]))


def invert(a):
    inv = la.inverse(a.matrix)
    return LatticeIsometry(a.lattice, [[int(x) for x in r] for r in inv])


def power(a, k):
    if k < 0:
        return power(invert(a), -k)
    out = identity(a.lattice)
    base = a
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


def order(a, bound=10_000):
    I = tuple(tuple(r) for r in la.identity(a.rank))
    M = [list(r) for r in a.matrix]
    P = M
    for k in range(1, bound + 1):
        if tuple(tuple(r) for r in P) == I:
            return k
        P = la.mat_mul(P, M)
    raise IsometryError("order exceeds %d" % bound)


def verify(L, M):
    """Raise IsometryError naming the first violated Gram entry."""
    return LatticeIsometry(L, M)


def closure(gens, bound=10_000):
    """All elements of the finite group generated by gens (BFS order)."""
    if not gens:
        return []
    L = gens[0].lattice
    start = identity(L)
    seen = {start.matrix: start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y.matrix not in seen:
                    if len(seen) >= bound:
                        raise IsometryError("group larger than %d" % bound)
                    seen[y.matrix] = y
                    nxt.append(y)
        frontier = nxt
    return list(seen.values())


# -- invariant and co-invariant lattices -------------------------------------

@dataclass
class FixedSublattices:
    T: Sublattice
    S: Sublattice

    def T_lattice(self):
        return self.T.lattice()

    def S_lattice(self):
        return self.S.lattice()


def invariant_sublattice(L, gens):
    n = L.rank
    if not gens:
        return Sublattice(L, la.identity(n), primitive=True)
    cols = []
    for g in gens:
        R = g.rows()
        D = [[R[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        cols.append(D)
    A = [sum((D[i] for D in cols), []) for i in range(n)]
    K = la.integer_left_kernel(A)
    if not K:
        return Sublattice(L, (), primitive=True)
    return Sublattice(L, la.saturation(K), primitive=True)


def fixed_sublattices(L, gens):
    for g in gens:
        if g.lattice.gram != L.gram:
            raise IsometryError("generator acts on a different lattice")
    T = invariant_sublattice(L, gens)
    S = orthogonal_complement(L, T)
    return FixedSublattices(T, S)


def restrict(g, sub):
    """Matrix of g on a g-stable sublattice, row convention in the sublattice basis."""
    rows = [list(r) for r in sub.rows]
    R = g.rows()
    out = []
    for r in rows:
        img = la.vec_mat(r, R)
        c = la.solve_left(rows, img)
        if any(x.denominator != 1 for x in c):
            raise IsometryError("sublattice is not stable")
        out.append([int(x) for x in c])
    return out


def _eval_poly(coeffs, M):
    n = len(M)
    out = la.zeros(n, n)
    P = la.identity(n)
    for c in coeffs:
        if c:
            out = [[a + c * b for a, b in zip(ro, rp)] for ro, rp in zip(out, P)]
        P = la.mat_mul(P, M)
    return out


def _is_prime(n):
    return n > 1 and all(n % p for p in range(2, int(n ** 0.5) + 1))


@dataclass
class StructureReport:
    exponent: int
    invariant_factors: list
    free_action: bool
    cyclotomic_annihilation: bool = None
    group_order: int = None

    def to_json(self):
        return dict(self.__dict__)


def structure_checks(L, gens, bound=10_000):
    fx = fixed_sublattices(L, gens)
    rows = [list(r) for r in fx.T.rows] + [list(r) for r in fx.S.rows]
    d, _, _ = la.smith_form(rows)
    exponent = max(d) if d else 1
    group = closure(gens, bound) if gens else []
    S = fx.S
    free = True
    if S.rows:
        for g in group:
            if g.is_identity():
                continue
            Rs = restrict(g, S)
            D = [[Rs[i][j] - (1 if i == j else 0) for j in range(len(Rs))] for i in range(len(Rs))]
            if la.det(D) == 0:
                free = False
                break
    annihilated = None
    if len(gens) == 1 and S.rows:
        p = order(gens[0], bound)
        if _is_prime(p):
            Rs = restrict(gens[0], S)
            annihilated = not any(any(r) for r in _eval_poly(cyclotomic_polynomial(p), Rs))
    return StructureReport(exponent, [x for x in d if x != 1], free, annihilated,
                           len(group) if group else 1)


# -- Eichler transvections ----------------------------------------------------

def eichler_transvection(L, e, a):
    """t(e, a): v -> v - (a,v) e + (e,v) a - (a,a)/2 (e,v) e."""
    G = L.matrix()
    if L.pair(e, e) != 0:
        raise IsometryError("e is not isotropic")
    if L.pair(e, a) != 0:
        raise IsometryError("a is not orthogonal to e")
    aa = L.pair(a, a)
    eG = la.vec_mat(list(e), G)
    aG = la.vec_mat(list(a), G)
    n = L.rank
    cols = []
    for k in range(n):
        ev, av = eG[k], aG[k]
        if (aa * ev) % 2:
            raise IsometryError("(a,a)(e,v) is odd for a basis vector")
        img = [int(k == i) - av * e[i] + ev * a[i] - (aa * ev // 2) * e[i] for i in range(n)]
        cols.append(img)
    return LatticeIsometry(L, la.transpose(cols))


@dataclass
class HyperbolicSplitting:
    """Two orthogonal hyperbolic pairs (e, f), (e', f') and a complement basis."""
    pairs: list
    rest: list
    basis: list      # e, f, e', f', rest: rows in the original coordinates


def hyperbolic_splitting(T, pairs):
    if len(pairs) != 2:
        raise IsometryError("missing hyperbolic splitting: two pairs required")
    vecs = [list(v) for p in pairs for v in p]
    G = la.congruence(vecs, T.matrix())
    U2 = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    if G != U2:
        raise IsometryError("missing hyperbolic splitting: pairs do not span U + U")
    rest = orthogonal_complement(T, vecs)
    basis = vecs + [list(r) for r in rest.rows]
    if len(basis) != T.rank or la.det(basis) not in (1, -1):
        raise IsometryError("missing hyperbolic splitting: U + U is not a summand")
    return HyperbolicSplitting(pairs, [list(r) for r in rest.rows], basis)


class _Reducer:
    """Normal form of a vector under Eichler transvections of U + U + M."""

    def __init__(self, T, split):
        self.T = T
        self.s = split
        self.e, self.f = list(split.pairs[0][0]), list(split.pairs[0][1])
        self.e2, self.f2 = list(split.pairs[1][0]), list(split.pairs[1][1])
        self.chain = []

    def coords(self, v):
        return [int(x) for x in la.solve_left(self.s.basis, list(v))]

    def apply(self, v, u, a):
        if not any(a):
            return v
        t = eichler_transvection(self.T, u, a)
        self.chain.append((tuple(u), tuple(a)))
        return t.apply(list(v))

    def _scaled(self, k, x):
        return [k * c for c in x]

    # elementary operations on X = [[a1, a2], [-b2, b1]]
    def row2_add(self, v, k):
        return self.apply(v, self.f, self._scaled(-k, self.f2))

    def row1_add(self, v, k):
        return self.apply(v, self.e, self._scaled(k, self.e2))

    def col2_add(self, v, k):
        return self.apply(v, self.f, self._scaled(k, self.e2))

    def col1_add(self, v, k):
        return self.apply(v, self.e, self._scaled(-k, self.f2))

    def hyper(self, v):
        c = self.coords(v)
        a1, b1, a2, b2 = c[:4]
        return [[a1, a2], [-b2, b1]]

    def smith(self, v):
        """Make the hyperbolic matrix diagonal with X[0][0] = gcd > 0 (if nonzero)."""
        for _ in range(10_000):
            X = self.hyper(v)
            entries = [abs(X[0][0]), abs(X[0][1]), abs(X[1][0]), abs(X[1][1])]
            if not any(entries):
                return v
            if X[0][1] == 0 and X[1][0] == 0 and X[0][0] != 0 and X[1][1] % X[0][0] == 0:
                if X[0][0] < 0:
                    # negate both rows' first entries: rotate by two swaps
                    v = self._negate_diag(v)
                    continue
                return v
            v = self._smith_step(v, X)
        raise IsometryError("Smith reduction did not terminate")

    def _swap_rows(self, v):
        v = self.row1_add(v, 1)
        v = self.row2_add(v, -1)
        return self.row1_add(v, 1)      # (R1, R2) -> (R2, -R1)

    def _swap_cols(self, v):
        v = self.col1_add(v, 1)
        v = self.col2_add(v, -1)
        return self.col1_add(v, 1)

    def _negate_diag(self, v):
        v = self._swap_rows(v)
        return self._swap_rows(v)       # (R1, R2) -> (-R1, -R2)

    def _smith_step(self, v, X):
        # bring a smallest nonzero entry to (0, 0)
        best = min(((abs(X[i][j]), i, j) for i in range(2) for j in range(2) if X[i][j]))
        _, i, j = best
        if i == 1:
            v = self._swap_rows(v)
        if j == 1:
            v = self._swap_cols(v)
        X = self.hyper(v)
        p = X[0][0]
        if X[1][0]:
            v = self.row2_add(v, -(X[1][0] // p))
        X = self.hyper(v)
        if X[0][1]:
            v = self.col2_add(v, -(X[0][1] // p))
        X = self.hyper(v)
        if X[1][0] == 0 and X[0][1] == 0 and X[1][1] % p:
            v = self.row1_add(v, 1)     # bring X[1][1] into the first row
        return v

    def normal_form(self, v):
        v = self.smith(list(v))
        k = len(self.s.rest)
        rest = self.s.rest
        G = self.T.matrix()
        # feed the pairings of the M-part into the hyperbolic block
        changed = True
        while changed:
            changed = False
            c = self.coords(v)
            g = c[0]
            if g == 0:
                break
            mu = la.vec_mat(c[4:], rest) if k else [0] * self.T.rank
            for x in rest:
                p = la.bilinear(x, G, mu)
                if p % g:
                    v = self.apply(v, self.e2, x)   # X[0][1] -= (x, mu) since b2 = 0
                    v = self.smith(v)
                    changed = True
                    break
        c = self.coords(v)
        g = c[0]
        if g and k:
            for idx in range(k):
                q = c[4 + idx] // g
                if q:
                    v = self.apply(v, self.f, [-q * y for y in rest[idx]])
                    c = self.coords(v)
        return self.coords(v)


@dataclass
class EichlerResult:
    equivalent: bool
    reason: str
    witness: list = None        # chain of (e, a) transvection data
    matrix: tuple = None


def eichler_equivalent(T, v, w, pairs, allow_disc_isometry=False, witness=True):
    """Decide whether an isometry generated by transvections maps v to w."""
    split = hyperbolic_splitting(T, pairs)
    if T.norm(v) != T.norm(w):
        return EichlerResult(False, "norms differ")
    dv, dw = divisibility(T, v), divisibility(T, w)
    if dv != dw:
        return EichlerResult(False, "divisibilities differ")
    from .disc_form import discriminant_data
    same_class = True
    if T.is_even and abs(T.det) != 1:
        data = discriminant_data(T)
        cv = data.coordinates([Fraction(c, dv) for c in v])
        cw = data.coordinates([Fraction(c, dw) for c in w])
        if cv != cw:
            same_class = False
            if allow_disc_isometry:
                from .disc_form import isometries
                A = data.module
                found = any(A.reduce(_apply_fqm(A, h, cv)) == A.reduce(cw)
                            for h in isometries(A, A, first_only=False))
                if not found:
                    return EichlerResult(False, "discriminant classes are not in one O(A) orbit")
            else:
                return EichlerResult(False, "discriminant classes differ")
    reason = "Eichler criterion"
    if not witness:
        return EichlerResult(True, reason)
    rv, rw = _Reducer(T, split), _Reducer(T, split)
    nv, nw = rv.normal_form(v), rw.normal_form(w)
    if nv != nw or not same_class:
        return EichlerResult(True, reason + " (no transvection chain found)")
    gv = _chain_matrix(T, rv.chain)
    gw = _chain_matrix(T, rw.chain)
    g = compose(invert(gw), gv)
    if g.apply(list(v)) != list(w):
        raise AssertionError("transvection chain does not map v to w")
    chain = rv.chain + [("inverse",) + c for c in reversed(rw.chain)]
    return EichlerResult(True, reason, chain, g.matrix)


def _apply_fqm(A, h, x):
    out = A.zero()
    for c, img in zip(x, h):
        out = A.add(out, A.mul(c, img))
    return out


def _chain_matrix(T, chain):
    g = identity(T)
    for e, a in chain:
        g = compose(eichler_transvection(T, list(e), list(a)), g)
    return g


def transvection_normal_form(T, v, pairs):
    """Coordinates (in the e, f, e', f', rest basis) of the reduced vector, and the chain."""
    split = hyperbolic_splitting(T, pairs)
    r = _Reducer(T, split)
    nf = r.normal_form(v)
    return nf, r.chain, _chain_matrix(T, r.chain)


# -- discriminant action -------------------------------------------------------

@dataclass
class DiscriminantAction:
    images: list        # images of the Smith generators, in A_L coordinates
    trivial: bool


def discriminant_action(L, g):
    from .disc_form import discriminant_data
    data = discriminant_data(L)
    R = g.rows()
    images = []
    A = data.module
    for i, gen in enumerate(data.generators):
        img = la.vec_mat(list(gen), R)
        images.append(data.coordinates(img))
    trivial = all(A.reduce(img) == A.reduce(tuple(int(i == j) for j in range(A.rank)))
                  for i, img in enumerate(images))
    return DiscriminantAction(images, trivial)


# -- Mukai extension -------------------------------------------------------------

@dataclass
class MukaiExtension:
    lattice: GramLattice
    isometry: LatticeIsometry
    basis: list           # rational rows in L + <x> coordinates
    S_matches: bool


def extend_to_mukai(g, v=None):
    """Extend an isometry of U^3 + E8(-1)^2 + (-2) to U^4 + E8(-1)^2.

    The glue is (x + v)/2 with x of norm 2 and v the generator of the (-2)
    summand (the last basis vector unless given).
    """
    L = g.lattice
    n = L.rank
    if v is None:
        v = [0] * (n - 1) + [1]
    if L.norm(v) != -2 or divisibility(L, v) != 2:
        raise IsometryError("v must have norm -2 and divisibility 2")
    G = L.matrix()
    ambient = [r + [0] for r in G] + [[0] * n + [2]]
    gens = [[Fraction(int(i == j)) for j in range(n + 1)] for i in range(n + 1)]
    gens.append([Fraction(c, 2) for c in v] + [Fraction(1, 2)])
    den, ints = la.scale_to_integers(gens)
    H = la.hnf(ints)
    basis = [[Fraction(x, den) for x in r] for r in H]
    big = GramLattice(_rational_gram(basis, ambient), name="L'")
    R = g.rows()
    Rbar = [r + [0] for r in R] + [[0] * n + [1]]
    img = [la.vec_mat(b, Rbar) for b in basis]
    Rnew = []
    for row in img:
        c = la.solve_left(basis, row)
        if any(x.denominator != 1 for x in c):
            raise IsometryError("isometry does not extend (acts nontrivially on the glue)")
        Rnew.append([int(x) for x in c])
    gbar = LatticeIsometry(big, la.transpose(Rnew))
    # compare co-invariant lattices inside the common rational span
    S_small = fixed_sublattices(L, [g]).S
    S_big = fixed_sublattices(big, [gbar]).S
    small_rows = [[Fraction(x) for x in r] + [Fraction(0)] for r in S_small.rows]
    big_rows = [la.vec_mat([Fraction(x) for x in r], basis) for r in S_big.rows]
    return MukaiExtension(big, gbar, basis, _same_span(small_rows, big_rows))


def _rational_gram(basis, ambient):
    G = la.congruence(basis, ambient)
    out = []
    for r in G:
        if any(Fraction(x).denominator != 1 for x in r):
            raise IsometryError("glued lattice is not integral")
        out.append([int(x) for x in r])
    return out


def _same_span(A, B):
    if len(A) != len(B):
        return False
    if not A:
        return True
    den, ints = la.scale_to_integers(A + B)
    return la.hnf(ints[:len(A)]) == la.hnf(ints[len(A):])


# -- isometries of rooted Niemeier lattices and holy pairs ------------------------

@dataclass
class IsometrySpec:
    perm: list = None           # perm[i] = image component of component i (0-based)
    diagram: list = field(default_factory=list)   # [(component, "sigma" | "gamma")]
    glue: list = None           # translation element t in the glue group

    @classmethod
    def from_json(cls, data):
        diag = [tuple(x) for x in data.get("diagram", [])]
        return cls(data.get("perm"), diag, data.get("glue"))

    def to_json(self):
        return {"perm": self.perm, "diagram": [list(x) for x in self.diagram], "glue": self.glue}


def _triality_matrix():
    """Ambient matrix of D4 triality cycling the outer simple roots."""
    from .niemeier import RootComponent
    roots = [[Fraction(x) for x in r] for r in RootComponent("D", 4).simple_roots()]
    # outer nodes: 0, 2, 3; the centre is node 1
    target = [roots[2], roots[1], roots[3], roots[0]]
    return la.mat_mul(la.inverse(roots), target)


def _central_symmetry(h):
    """x -> -reverse(x) on R^h."""
    return [[-1 if i + j == h - 1 else 0 for j in range(h)] for i in range(h)]


def _ambient_map(components, offsets, total, spec, holy=None):
    P = [[Fraction(0)] * total for _ in range(total)]
    m = len(components)
    perm = spec.perm if spec.perm is not None else list(range(m))
    if sorted(perm) != list(range(m)):
        raise IsometryError("perm is not a permutation of the components")
    for i, j in enumerate(perm):
        if components[i] != components[j]:
            raise IsometryError("perm mixes components %s and %s"
                                % (components[i].name, components[j].name))
    local = {}
    for comp_idx, tag in spec.diagram:
        c = components[comp_idx]
        if tag == "sigma":
            if c.kind != "A":
                raise IsometryError("central symmetry is defined for A_n only")
            local[comp_idx] = _central_symmetry(c.dim)
        elif tag == "gamma":
            if c.name != "D4":
                raise IsometryError("triality is defined for D4 only")
            local[comp_idx] = _triality_matrix()
        else:
            raise IsometryError("unsupported diagram automorphism %r" % (tag,))
    for i in range(m):
        d = components[i].dim
        B = local.get(i, la.identity(d))
        oi, oj = offsets[i], offsets[perm[i]]
        for a in range(d):
            for b in range(d):
                P[oi + a][oj + b] = Fraction(B[a][b])
    if spec.glue is not None:
        if holy is None:
            raise IsometryError("glue translations need a holy-construction target")
        T = holy.translation_matrix(spec.glue)
        P = la.mat_mul(P, T)
    return P


def _label_of(component, block):
    roots = [[Fraction(x) for x in r] for r in component.simple_roots()]
    for lab in component.labels():
        g = component.glue_vector(lab)
        diff = [a - b for a, b in zip(block, g)]
        if not any(diff):
            return lab
        try:
            c = la.solve_left(roots, diff)
        except ValueError:
            continue
        if all(x.denominator == 1 for x in c):
            return lab
    raise IsometryError("vector is not in the dual of %s" % component.name)


def glue_image(E, P, word):
    """Codeword obtained by applying the ambient map P to a glue word."""
    total = len(P)
    v = [Fraction(0)] * total
    for c, off, lab in zip(E.components, E.offsets, word):
        for i, x in enumerate(c.glue_vector(lab)):
            v[off + i] += x
    w = la.vec_mat(v, P)
    return tuple(_label_of(c, w[off:off + c.dim]) for c, off in zip(E.components, E.offsets))


def from_spec(target, spec):
    """Isometry of a rooted Niemeier lattice (or both halves of a holy pair).

    Returns a LatticeIsometry of N, or for a holy pair the tuple
    (isometry of N, isometry of the Leech copy).
    """
    from .niemeier import HolyPair, glue_generators
    holy = target if isinstance(target, HolyPair) else None
    E = holy.N if holy else target
    total = len(E.ambient)
    P = _ambient_map(E.components, E.offsets, total, spec, holy)
    # the label map is a homomorphism, so checking generators suffices
    from .niemeier import NIEMEIER_TABLE
    base = (E.name or "").replace("(holy)", "")
    words = glue_generators(base) if base in NIEMEIER_TABLE else sorted(E.glue)
    for w in words:
        img = glue_image(E, P, w)
        if img not in E.glue:
            raise IsometryError("glue code not preserved: codeword %s maps to %s"
                                % ("".join(map(str, w)), "".join(map(str, img))))
    gN = LatticeIsometry(E.lattice, la.transpose(E.isometry_matrix(P)))
    if holy is None:
        return gN
    gL = LatticeIsometry(holy.Leech.lattice, la.transpose(holy.Leech.isometry_matrix(P)))
    return gN, gL


def ambient_sublattice(E, sub):
    """Rows of a sublattice of an embedded lattice, in ambient coordinates."""
    return [la.vec_mat([Fraction(x) for x in r], E.basis) for r in sub.rows]


def same_sublattice(E1, sub1, E2, sub2):
    """HNF equality of two sublattices of lattices sharing one ambient space."""
    return _same_span(ambient_sublattice(E1, sub1), ambient_sublattice(E2, sub2))
