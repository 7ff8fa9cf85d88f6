"""Finite quadratic modules, discriminant forms, overlattices and gluing.

A finite quadratic module is stored on generators g_1..g_k of orders d_i
together with q(g_i) mod 2 and the full matrix b(g_i, g_j) mod 1.  Elements
are integer coordinate tuples reduced modulo the orders.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, isqrt

from . import linalg as la
from .cyclotomic import CyclotomicField, sqrt_prime
from .lattice_core import GramLattice, LatticeError, direct_sum, rescale


def mod2(x):
    x = Fraction(x)
    return x - 2 * (x.numerator // (2 * x.denominator))


def mod1(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def _lcm(a, b):
    return a * b // gcd(a, b)


def prime_factors(n):
    out = []
    p = 2
    n = abs(n)
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class FiniteQuadraticModule:
    orders: tuple
    q_diag: tuple
    b: tuple

    def __post_init__(self):
        k = len(self.orders)
        object.__setattr__(self, "orders", tuple(int(d) for d in self.orders))
        object.__setattr__(self, "q_diag", tuple(mod2(x) for x in self.q_diag))
        object.__setattr__(self, "b", tuple(tuple(mod1(x) for x in row) for row in self.b))
        if len(self.q_diag) != k or len(self.b) != k:
            raise ValueError("inconsistent module data")
        for i, d in enumerate(self.orders):
            if d < 2:
                raise ValueError("generator orders must be at least 2")
            if mod2(d * d * self.q_diag[i]) != 0:
                raise ValueError("form not well-defined on a cyclic factor")
            if mod1(self.q_diag[i]) != self.b[i][i]:
                raise ValueError("q and b disagree on a generator")
            for j in range(k):
                if self.b[i][j] != self.b[j][i] or mod1(d * self.b[i][j]) != 0:
                    raise ValueError("bilinear form not well-defined")

    # -- basic structure ----------------------------------------------------
    @property
    def rank(self):
        return len(self.orders)

    @property
    def order(self):
        return reduce(lambda a, b: a * b, self.orders, 1)

    def exponent(self):
        return reduce(_lcm, self.orders, 1)

    def length(self):
        """l(A): the minimal number of generators."""
        best = 0
        for p in prime_factors(self.order):
            best = max(best, sum(1 for d in self.orders if d % p == 0))
        return best

    def invariant_factors(self):
        if not self.orders:
            return []
        d, _, _ = la.smith_form([[d if i == j else 0 for j in range(self.rank)]
                                 for i, d in enumerate(self.orders)])
        return [x for x in d if x > 1]

    def is_trivial(self):
        return self.rank == 0

    # -- element arithmetic -------------------------------------------------
    def reduce(self, x):
        return tuple(c % d for c, d in zip(x, self.orders))

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def mul(self, k, x):
        return tuple((k * a) % d for a, d in zip(x, self.orders))

    def zero(self):
        return (0,) * self.rank

    def q(self, x):
        k = self.rank
        total = Fraction(0)
        for i in range(k):
            if x[i]:
                total += x[i] * x[i] * self.q_diag[i]
                for j in range(i + 1, k):
                    if x[j]:
                        total += 2 * x[i] * x[j] * self.b[i][j]
        return mod2(total)

    def bil(self, x, y):
        total = Fraction(0)
        for i in range(self.rank):
            if x[i]:
                for j in range(self.rank):
                    if y[j]:
                        total += x[i] * y[j] * self.b[i][j]
        return mod1(total)

    def element_order(self, x):
        o = 1
        for a, d in zip(x, self.orders):
            o = _lcm(o, d // gcd(a, d))
        return o

    def elements(self):
        return product(*[range(d) for d in self.orders])

    # -- constructions ------------------------------------------------------
    def scaled(self, k):
        """The module with q multiplied by k (k = -1 gives the opposite form)."""
        return FiniteQuadraticModule(self.orders, [k * x for x in self.q_diag],
                                     [[k * x for x in row] for row in self.b])

    def __neg__(self):
        return self.scaled(-1)

    def direct_sum(self, other):
        k1, k2 = self.rank, other.rank
        b = [[Fraction(0)] * (k1 + k2) for _ in range(k1 + k2)]
        for i in range(k1):
            for j in range(k1):
                b[i][j] = self.b[i][j]
        for i in range(k2):
            for j in range(k2):
                b[k1 + i][k1 + j] = other.b[i][j]
        return FiniteQuadraticModule(self.orders + other.orders,
                                     self.q_diag + other.q_diag, b)

    def subquotient(self, gens_H):
        """H-perp / H for an isotropic subgroup H, as a new module."""
        H = subgroup_elements(self, gens_H)
        perp = [x for x in self.elements() if all(self.bil(x, h) == 0 for h in gens_H)]
        return _module_from_group(self, perp, H)

    def p_part(self, p):
        """Restriction to the p-primary component, on rescaled generators."""
        idx = [i for i, d in enumerate(self.orders) if d % p == 0]
        mult = []
        orders = []
        for i in idx:
            pp = p ** _valuation(self.orders[i], p)
            mult.append(self.orders[i] // pp)
            orders.append(pp)
        q = [mult[a] ** 2 * self.q_diag[i] for a, i in enumerate(idx)]
        b = [[mult[a] * mult[c] * self.b[i][j] for c, j in enumerate(idx)]
             for a, i in enumerate(idx)]
        return FiniteQuadraticModule(orders, q, b)

    # -- serialization ------------------------------------------------------
    def to_json(self):
        return {"orders": list(self.orders),
                "q": [str(x) for x in self.q_diag],
                "b": [[str(x) for x in row] for row in self.b]}

    @classmethod
    def from_json(cls, data):
        return cls(data["orders"], [Fraction(x) for x in data["q"]],
                   [[Fraction(x) for x in row] for row in data["b"]])


TRIVIAL = FiniteQuadraticModule((), (), ())


def subgroup_elements(A, gens):
    seen = {A.zero()}
    frontier = [A.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = A.add(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _module_from_group(A, perp, H):
    return _quotient_module(A, perp, H)[0]


def _quotient_module(A, perp, H):
    """Present the quotient group perp/H in Smith form as a new module.

    Also returns the representatives in A of the new generators.
    """
    H = set(H)
    if len(perp) == len(H):
        return TRIVIAL, []
    # represent perp/H as a quotient of Z^k (coordinates in A's generators)
    k = A.rank
    # relations: the orders of A and the elements of H, restricted to perp
    # work inside Z^k: perp lifts to a lattice P containing K = span(orders, H)
    P = la.hnf([list(x) for x in perp] + [[d if i == j else 0 for j in range(k)]
                                          for i, d in enumerate(A.orders)])
    rel = la.hnf([list(h) for h in H] + [[d if i == j else 0 for j in range(k)]
                                         for i, d in enumerate(A.orders)])
    # coordinates of rel in the basis P
    coords = [[int(c) for c in la.solve_left(P, r)] for r in rel]
    d, U, V = la.smith_form(coords)
    # P-basis change: rel = Uinv D Vinv, generators are rows of Vinv applied to P
    Vinv = [[int(x) for x in row] for row in la.inverse(V)]
    gens = la.mat_mul(Vinv, P)
    orders, vecs = [], []
    for di, g in zip(d + [0] * (len(P) - len(d)), gens):
        if di != 1:
            if di == 0:
                raise ValueError("quotient is not finite")
            orders.append(di)
            vecs.append(tuple(g))
    vecs = [A.reduce(v) for v in vecs]
    q = [A.q(v) for v in vecs]
    b = [[A.bil(u, v) for v in vecs] for u in vecs]
    return FiniteQuadraticModule(orders, q, b), vecs


# -- discriminant modules of lattices ---------------------------------------

@dataclass(frozen=True)
class DiscriminantData:
    """A_L together with the lift of its generators to the dual lattice."""
    module: FiniteQuadraticModule
    generators: tuple        # rational coordinate rows in the lattice basis
    coord_matrix: tuple      # U^-1 from the Smith form U G V = D
    kept: tuple              # indices of the nontrivial invariant factors
    factors: tuple           # all invariant factors d_i

    def coordinates(self, x):
        """Coordinates in A_L of a dual vector x (rational row, lattice basis)."""
        y = la.vec_mat([Fraction(c) for c in x], [list(r) for r in self.coord_matrix])
        out = []
        for i, d in zip(self.kept, self.module.orders):
            c = y[i] * self.factors[i]
            if c.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            out.append(int(c) % d)
        for i, f in enumerate(self.factors):
            if f == 1 and Fraction(y[i]).denominator != 1:
                raise ValueError("vector is not in the dual lattice")
        return tuple(out)

    def lift(self, x):
        """A dual vector representing the element x of A_L."""
        v = [Fraction(0)] * len(self.coord_matrix)
        for c, g in zip(x, self.generators):
            if c:
                v = [a + c * b for a, b in zip(v, g)]
        return v


def discriminant_data(L):
    if not L.is_even:
        raise LatticeError("even lattice required")
    G = L.matrix()
    if not G:
        return DiscriminantData(TRIVIAL, (), (), (), ())
    d, U, V = la.smith_form(G)
    if len(d) != L.rank:
        raise LatticeError("degenerate lattice")
    kept = [i for i, x in enumerate(d) if x != 1]
    gens = [[Fraction(u, d[i]) for u in U[i]] for i in kept]
    orders = [d[i] for i in kept]
    q = [la.bilinear(g, G, g) for g in gens]
    b = [[la.bilinear(g, G, h) for h in gens] for g in gens]
    A = FiniteQuadraticModule(orders, q, b)
    Uinv = la.inverse(U)
    return DiscriminantData(A, tuple(tuple(g) for g in gens),
                            tuple(tuple(r) for r in Uinv), tuple(kept), tuple(d))


def discriminant_module(L):
    return discriminant_data(L).module


# -- invariants: Milgram signature -------------------------------------------

def gauss_sum_signature(A, max_elements=2_000_000):
    """Signature mod 8 from the exact Gauss sum sum_x exp(pi i q(x)).

    Computed one primary component at a time inside a cyclotomic field.
    """
    if A.is_trivial():
        return 0
    total = 0
    for p in prime_factors(A.order):
        Ap = A.p_part(p)
        if Ap.order > max_elements:
            raise ValueError("module too large for an exact Gauss sum")
        total += _signature_p(Ap, p)
    return total % 8


def _signature_p(A, p):
    counts = {}
    for x in A.elements():
        v = A.q(x)
        counts[v] = counts.get(v, 0) + 1
    N = 8 if p == 2 else 8 * p
    for v in counts:
        N = _lcm(N, 2 * v.denominator)
    F = CyclotomicField(N)
    s = F.zero()
    for v, c in counts.items():
        # exp(pi i v) = zeta_N^(v N / 2)
        e = v * N / 2
        s = s + F.zeta(int(e)) * c
    order = A.order
    k = _valuation(order, p)
    root = F.one() * (p ** (k // 2))
    if k % 2:
        root = root * sqrt_prime(F, p)
    z8 = F.zeta(N // 8)
    for sig in range(8):
        if s == root * (z8 ** sig):
            return sig
    raise ValueError("form not well-defined")


def fqm_invariants(A, lattice_signature=None):
    sig = gauss_sum_signature(A)
    out = {"order": A.order, "length": A.length(), "signature_mod8": sig}
    if lattice_signature is not None:
        pos, neg = lattice_signature
        if (pos - neg - sig) % 8:
            raise ValueError("Gauss sum disagrees with the lattice signature")
    return out


# -- isotropic subgroups and isometries of modules ---------------------------

@dataclass(frozen=True)
class IsotropicSubgroup:
    module: FiniteQuadraticModule
    generators: tuple

    def elements(self):
        return subgroup_elements(self.module, list(self.generators))

    @property
    def order(self):
        return len(self.elements())


def is_isotropic(A, gens):
    for i, g in enumerate(gens):
        if A.q(g) != 0:
            return False
        for h in gens[i + 1:]:
            if A.bil(g, h) != 0:
                return False
    return True


def isotropic_subgroups(A, bound=None, limit=100_000):
    """All totally isotropic subgroups of order <= bound.

    Returns (list, complete_flag).  The flag is False when the search hit the
    limit on the number of subgroups.
    """
    bound = bound or A.order
    iso = [x for x in A.elements() if any(x) and A.q(x) == 0]
    seen = {frozenset([A.zero()])}
    result = [IsotropicSubgroup(A, ())]
    frontier = [((), frozenset([A.zero()]))]
    complete = True
    while frontier:
        nxt = []
        for gens, elems in frontier:
            for x in iso:
                if x in elems or any(A.bil(x, g) != 0 for g in gens):
                    continue
                new = subgroup_elements(A, list(gens) + [x])
                if len(new) > bound:
                    continue
                key = frozenset(new)
                if key in seen:
                    continue
                seen.add(key)
                sub = IsotropicSubgroup(A, tuple(gens) + (x,))
                result.append(sub)
                nxt.append((sub.generators, key))
                if len(result) >= limit:
                    return result, False
        frontier = nxt
    return result, complete


def _element_profile(A, x):
    return (A.element_order(x), A.q(x))


def isometries(A, B, sign=1, first_only=True, budget=2_000_000):
    """Maps f on generators with q_B(f x) = sign * q_A(x) and matching b.

    Returns a list of images (tuple of B-elements, one per A-generator).
    Raises TimeoutError when the budget of search nodes is exhausted.
    """
    if A.order != B.order:
        return []
    if sorted(A.invariant_factors()) != sorted(B.invariant_factors()):
        return []
    candidates = []
    by_profile = {}
    for y in B.elements():
        by_profile.setdefault((B.element_order(y), B.q(y)), []).append(y)
    for i, d in enumerate(A.orders):
        g = tuple(int(i == j) for j in range(A.rank))
        key = (d, mod2(sign * A.q_diag[i]))
        candidates.append(by_profile.get(key, []))
    out = []
    nodes = [0]
    Bset_size = B.order

    def rec(i, images):
        nodes[0] += 1
        if nodes[0] > budget:
            raise TimeoutError("isometry search budget exhausted")
        if i == A.rank:
            # injectivity: the images must generate a group of full order
            if len(subgroup_elements(B, list(images))) == Bset_size:
                out.append(tuple(images))
                return first_only
            return False
        for y in candidates[i]:
            if all(B.bil(y, images[j]) == mod1(sign * A.b[i][j]) for j in range(i)):
                images.append(y)
                if rec(i + 1, images):
                    return True
                images.pop()
        return False

    rec(0, [])
    return out


def _two_elementary_key(A):
    """(rank, parity, signature) which classify 2-elementary forms."""
    if any(d != 2 for d in A.orders):
        return None
    parity = 0 if all(A.q(x).denominator == 1 for x in A.elements()) else 1
    return (A.rank, parity, gauss_sum_signature(A))


def are_isometric(A, B, sign=1, budget=2_000_000):
    """True/False, or None when undecided within the budget."""
    if sign == -1:
        B = -B
    if A.order != B.order or sorted(A.invariant_factors()) != sorted(B.invariant_factors()):
        return False
    if A.order == 1:
        return True
    for p in prime_factors(A.order):
        Ap, Bp = A.p_part(p), B.p_part(p)
        if gauss_sum_signature(Ap) != gauss_sum_signature(Bp):
            return False
        prof_a = sorted((Ap.element_order(x), Ap.q(x)) for x in Ap.elements())
        prof_b = sorted((Bp.element_order(x), Bp.q(x)) for x in Bp.elements())
        if prof_a != prof_b:
            return False
        ka = _two_elementary_key(Ap) if p == 2 else None
        if ka is not None:
            if ka != _two_elementary_key(Bp):
                return False
            continue
        if p != 2 and all(d == p for d in Ap.orders) and all(d == p for d in Bp.orders):
            # nondegenerate quadratic spaces over F_p are classified by
            # dimension and discriminant, which the Gauss sum detects
            continue
        try:
            if not isometries(Ap, Bp, budget=budget):
                return False
        except TimeoutError:
            return None
    return True


# -- overlattices and gluing --------------------------------------------------

def overlattice(L, H, data=None):
    """Overlattice of L obtained by adjoining lifts of an isotropic subgroup.

    Returns (lattice, basis) where basis rows are rational coordinates of the
    new basis in the basis of L.
    """
    data = data or discriminant_data(L)
    A = data.module
    gens = list(H.generators if isinstance(H, IsotropicSubgroup) else H)
    if not is_isotropic(A, gens):
        raise ValueError("subgroup is not isotropic")
    rows = [[Fraction(int(i == j)) for j in range(L.rank)] for i in range(L.rank)]
    for g in gens:
        rows.append(data.lift(g))
    basis = la.rational_row_basis(rows)
    G = la.congruence(basis, L.matrix())
    for row in G:
        for x in row:
            if Fraction(x).denominator != 1:
                raise ValueError("overlattice Gram is not integral")
    new = GramLattice([[int(x) for x in row] for row in G])
    if not new.is_even:
        raise ValueError("overlattice is not even")
    return new, basis


@dataclass(frozen=True)
class GlueMap:
    domain: tuple      # generators of H1 in A1
    images: tuple      # their images in A2


def glue_pair(L1, L2, gamma, check=True):
    """Overlattice of L1 + L2 along the graph of an anti-isometry gamma."""
    d1, d2 = discriminant_data(L1), discriminant_data(L2)
    A1, A2 = d1.module, d2.module
    if check:
        for x, y in zip(gamma.domain, gamma.images):
            if A2.q(y) != mod2(-A1.q(x)):
                raise ValueError("glue map is not an anti-isometry")
    L = direct_sum(L1, L2)
    data = discriminant_data(L)
    # graph elements written as dual vectors of L, then read in A_L coordinates
    gens = []
    for x, y in zip(gamma.domain, gamma.images):
        gens.append(data.coordinates(d1.lift(x) + d2.lift(y)))
    return overlattice(L, gens, data)


def find_isotropic_element(A, primes=None):
    """Some nonzero isotropic element of prime order, or None."""
    for p in primes or prime_factors(A.order):
        idx = [i for i, d in enumerate(A.orders) if d % p == 0]
        steps = [A.orders[i] // p for i in idx]
        for coeffs in product(range(p), repeat=len(idx)):
            if not any(coeffs):
                continue
            x = [0] * A.rank
            for i, s, c in zip(idx, steps, coeffs):
                x[i] = (s * c) % A.orders[i]
            x = tuple(x)
            if A.q(x) == 0:
                return x
    return None


def unimodular_overlattice(L):
    """Even unimodular overlattice of L, or None when none exists.

    Greedy: adjoin isotropic elements of prime order one at a time.  Any
    isotropic subgroup extends to a maximal one, and the quotient H-perp/H
    of a maximal one is the anisotropic kernel, which does not depend on the
    choices; so reaching a nonzero anisotropic module certifies that no even
    unimodular overlattice exists.
    """
    det = abs(L.det)
    r = isqrt(det)
    if r * r != det:
        return None
    current = L
    basis = [[Fraction(int(i == j)) for j in range(L.rank)] for i in range(L.rank)]
    while abs(current.det) != 1:
        data = discriminant_data(current)
        x = find_isotropic_element(data.module)
        if x is None:
            return None
        current, step = overlattice(current, [x], data)
        basis = la.mat_mul(step, basis)
    return current, basis


# -- existence and embedding verdicts ----------------------------------------

def _unimodular_witness(tpos, tneg):
    if (tpos - tneg) % 8:
        return None
    from .catalog import make_named
    parts = []
    k = min(tpos, tneg)
    parts += [make_named("U")] * k
    j = (tpos - tneg) // 8
    e8 = make_named("E8")
    parts += [e8] * j if j > 0 else [rescale(e8, -1)] * (-j)
    if not parts:
        return None
    return direct_sum(*parts)


def _small_rank_witness(sig, A):
    """Search rank-1 and rank-2 even lattices with the given invariants."""
    tpos, tneg = sig
    n = tpos + tneg
    D = A.order
    if n == 1:
        s = 1 if tpos else -1
        cand = GramLattice([[s * D]]) if D % 2 == 0 else None
        if cand and are_isometric(discriminant_module(cand), A):
            return cand
        return None
    if n == 2:
        det_sign = 1 if tpos != 1 else -1
        target = det_sign * D
        sgn = 1 if tpos == 2 else -1
        bound = D + 2
        for a in range(1, bound + 1):
            for c in range(a, bound + 1):
                for b in range(0, a + 1):
                    if tpos == 1:
                        for aa, cc in ((a, -c), (-a, c), (0, c), (0, -c)):
                            G = [[2 * aa, b], [b, 2 * cc]]
                            if la.det(G) == target and _matches(G, A):
                                return GramLattice(G)
                    else:
                        G = [[2 * sgn * a, b], [b, 2 * sgn * c]]
                        if la.det(G) == target and _matches(G, A):
                            return GramLattice(G)
    return None


def _matches(G, A):
    try:
        return are_isometric(discriminant_module(GramLattice(G)), A)
    except LatticeError:
        return False


def exists_even_lattice(sig, A, witnesses=()):
    """Verdict on an even lattice of signature sig and discriminant form A.

    Returns (verdict, reason, witness) with verdict in {"yes", "no", "unknown"}.
    """
    tpos, tneg = sig
    if tpos < 0 or tneg < 0:
        return "no", "negative signature entry", None
    if tpos + tneg < A.length():
        return "no", "rank %d below l(A) = %d" % (tpos + tneg, A.length()), None
    s = gauss_sum_signature(A)
    if (tpos - tneg - s) % 8:
        return "no", "signature %d mod 8 differs from Gauss sum %d" % ((tpos - tneg) % 8, s), None
    if A.is_trivial():
        w = _unimodular_witness(tpos, tneg)
        if w is not None or (tpos, tneg) == (0, 0):
            return "yes", "unimodular witness", w
    for W in witnesses:
        pos, neg = la.inertia(W.gram)[:2]
        if (pos, neg) == (tpos, tneg) and are_isometric(discriminant_module(W), A):
            return "yes", "supplied witness", W
    if tpos + tneg <= 2 and A.order <= 200:
        w = _small_rank_witness(sig, A)
        if w is not None:
            return "yes", "small-rank witness", w
    return "unknown", "no constructive witness", None


def twisted_witness(S, sig):
    """S(-1) plus unimodular padding, when the signature allows it."""
    pos, neg = la.inertia(S.gram)[:2]
    a, b = sig[0] - neg, sig[1] - pos
    if a < 0 or b < 0 or (a - b) % 8:
        return None
    parts = [rescale(S, -1)]
    pad = _unimodular_witness(a, b)
    if pad is not None:
        parts.append(pad)
    return direct_sum(*parts)


def exists_primitive_embedding(S, target_signature, extra_witnesses=()):
    """Primitive embedding of S into an even unimodular lattice of the given signature.

    Reduces to the existence of the orthogonal complement with form -q_S.
    The sufficient condition rank(S) + l(A_S) <= 21 for the K3 lattice
    U^3 + E8(-1)^2 (and anything containing it) is reported separately.
    """
    pos, neg = la.inertia(S.gram)[:2]
    lpos, lneg = target_signature
    comp = (lpos - pos, lneg - neg)
    A = discriminant_module(S)
    if comp[0] < 0 or comp[1] < 0:
        return "no", "signature of S does not fit", None
    if comp == (0, 0):
        ok = abs(S.det) == 1
        return ("yes" if ok else "no"), "S itself must be unimodular", None
    witnesses = list(extra_witnesses)
    tw = twisted_witness(S, comp)
    if tw is not None:
        witnesses.append(tw)
    verdict, reason, w = exists_even_lattice(comp, -A, witnesses)
    if verdict == "unknown" and neg == S.rank and lpos >= 3 and lneg >= 19:
        if S.rank + A.length() <= 21:
            return "yes", "rank + l(A) <= 21 embeds in the K3 lattice", None
    return verdict, reason, w


def split_off(sig, A, summand):
    """Whether a lattice with these invariants splits off U or E8(-1).

    For U: rank condition t+ >= 1, t- >= 1 and rank >= l(A) + 3.
    For E8(-1): t+ >= 1 (indefinite), t- >= 9 and rank >= l(A) + 10.
    """
    tpos, tneg = sig
    n = tpos + tneg
    l = A.length()
    if summand == "U":
        return tpos >= 1 and tneg >= 1 and n >= l + 3
    if summand == "E8(-1)":
        return tpos >= 1 and tneg >= 9 and n >= l + 10
    raise ValueError("unknown summand")


def primitive_embeddings_small(S, N, limit=50_000):
    """Nikulin data (H_S, H_N, gamma) for primitive embeddings S -> N.

    For every pair of subgroups and isometry gamma: H_S -> H_N the glued
    form delta of the complement is (q_S + -q_N) on Gamma-perp / Gamma.
    The data are grouped into classes by the order of H_S and the isometry
    class of delta; each class reports how many raw data it contains and the
    existence verdict for the complement.
    """
    AS, AN = discriminant_module(S), discriminant_module(N)
    sp, sn = la.inertia(S.gram)[:2]
    np_, nn = la.inertia(N.gram)[:2]
    comp_sig = (np_ - sp, nn - sn)
    total = AS.direct_sum(-AN)
    subs_S = _all_subgroups(AS)
    subs_N = _all_subgroups(AN)
    records = []
    for _, elems_S in subs_S:
        ModS, gS = _quotient_module(AS, list(elems_S), {AS.zero()})
        for _, elems_N in subs_N:
            if len(elems_S) != len(elems_N):
                continue
            ModN, gN = _quotient_module(AN, list(elems_N), {AN.zero()})
            if ModS.order == 1:
                maps = [()]
            else:
                maps = isometries(ModS, ModN, sign=1, first_only=False)
            for gamma in maps:
                graph = []
                for a, y in zip(gS, gamma):
                    b = AN.zero()
                    for c, g in zip(y, gN):
                        b = AN.add(b, AN.mul(c, g))
                    graph.append(tuple(a) + tuple(b))
                delta = total.subquotient(graph) if graph else total
                records.append({"H_S": len(elems_S), "H_N": len(elems_N), "delta": delta})
                if len(records) > limit:
                    raise TimeoutError("too many embedding data")
    classes = []
    for r in records:
        for c in classes:
            if c["H_S"] == r["H_S"] and are_isometric(c["delta"], r["delta"]):
                c["count"] += 1
                break
        else:
            classes.append(dict(r, count=1))
    for c in classes:
        c["verdict"] = exists_even_lattice(comp_sig, c["delta"])[0]
    return classes


def _all_subgroups(A):
    seen = {frozenset([A.zero()])}
    out = [((), frozenset([A.zero()]))]
    frontier = list(out)
    elems = [x for x in A.elements() if any(x)]
    while frontier:
        nxt = []
        for gens, els in frontier:
            for x in elems:
                if x in els:
                    continue
                new = frozenset(subgroup_elements(A, list(gens) + [x]))
                if new not in seen:
                    seen.add(new)
                    item = (tuple(gens) + (x,), new)
                    out.append(item)
                    nxt.append(item)
        frontier = nxt
    return out
