"""Definite-lattice kernels: short vectors, representation, isometry search.

All pruning is exact.  The Gram matrix is LLL-reduced first, then
decomposed as L D L^T over Q and the Fincke-Pohst recursion is run on
integers obtained by clearing the denominators of D and L.
"""
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from . import linalg as la
from .lattice_core import GramLattice, LatticeError


def default_budget():
    try:
        return int(os.environ.get("HYPERLAT_BUDGET", "2000000"))
    except ValueError:
        return 2_000_000


def _positive_form(L):
    """(sign, Gram) with sign * Gram positive definite."""
    G = L.matrix() if isinstance(L, GramLattice) else [list(r) for r in L]
    pos, neg, zero = la.inertia(G)
    if zero or (pos and neg):
        raise LatticeError("definite lattice required")
    if neg:
        return -1, [[-x for x in r] for r in G]
    return 1, G


class _Enumerator:
    """Exact Fincke-Pohst enumeration for a positive definite integer Gram."""

    def __init__(self, G):
        self.n = len(G)
        self.T = la.lll_gram(G)
        self.R = la.congruence(self.T, G)
        L, D = la.ldl(self.R)
        n = self.n
        den_mu = 1
        for i in range(n):
            for j in range(i):
                q = L[i][j].denominator
                den_mu = den_mu * q // gcd(den_mu, q)
        den_d = 1
        for d in D:
            den_d = den_d * d.denominator // gcd(den_d, d.denominator)
        self.M = den_mu
        self.TD = [int(d * den_d) for d in D]       # T * D_i
        self.den_d = den_d
        # mu[j][i] for i > j: coefficient of x_i in the j-th square, times M
        self.mu = [[int(L[i][j] * den_mu) for i in range(n)] for j in range(n)]

    def run(self, bound, visit, symmetric=True):
        """Call visit(y) for every nonzero y (reduced coordinates) with y R y <= bound.

        With symmetric=True only one vector of each pair +-y is produced.
        """
        n = self.n
        M = self.M
        scale = self.den_d * M * M
        B0 = bound * scale
        y = [0] * n
        budgets = [0] * (n + 1)
        budgets[n] = B0
        TD, mu = self.TD, self.mu

        def center(i):
            s = 0
            row = mu[i]
            for k in range(i + 1, n):
                if y[k]:
                    s += row[k] * y[k]
            return -s  # M * c_i

        # iterative depth-first search
        i = n - 1
        lo = [0] * n
        hi = [0] * n
        nonzero_above = [False] * (n + 1)

        def setup(i):
            C = center(i)
            rem = budgets[i + 1]
            s = isqrt(rem // TD[i]) if rem >= 0 else -1
            # M*x - C in [-s, s]
            a = -((-(C - s)) // M)   # ceil((C - s) / M)
            b = (C + s) // M
            if symmetric and not nonzero_above[i + 1]:
                a = max(a, 0)
            lo[i], hi[i] = a, b
            y[i] = a - 1
            return C

        centers = [0] * n
        centers[i] = setup(i)
        while True:
            y[i] += 1
            if y[i] > hi[i]:
                i += 1
                if i == n:
                    return
                continue
            diff = M * y[i] - centers[i]
            used = TD[i] * diff * diff
            rem = budgets[i + 1] - used
            if rem < 0:
                # values further along only grow once past the centre
                if M * y[i] > centers[i]:
                    i += 1
                    if i == n:
                        return
                continue
            nz = nonzero_above[i + 1] or y[i] != 0
            if i == 0:
                if nz:
                    visit(y, (B0 - rem))
                continue
            budgets[i] = rem
            nonzero_above[i] = nz
            i -= 1
            centers[i] = setup(i)

    def to_original(self, y):
        return la.vec_mat(y, self.T)


@dataclass
class VectorCensus:
    counts: dict
    vectors: dict = field(default_factory=dict)
    bound: int = 0
    sign: int = 1

    def count(self, norm):
        return self.counts.get(norm, 0)


def _norm_of(G, v):
    return la.bilinear(v, G, v)


def short_vectors(L, bound, keep=False, norms=None):
    """Census of nonzero vectors with |norm| <= bound, counting both +-v.

    With keep=True the representatives (one per +- pair, in the original
    basis) are stored per norm.  The norms are reported with the sign of L.
    """
    sign, G = _positive_form(L)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    en = _Enumerator(G)
    counts = {}
    reps = {}
    scale = en.den_d * en.M * en.M

    def visit(y, used):
        nrm = used // scale
        if norms is not None and nrm not in norms:
            return
        key = sign * nrm
        counts[key] = counts.get(key, 0) + 2
        if keep:
            reps.setdefault(key, []).append(en.to_original(list(y)))

    en.run(bound, visit)
    return VectorCensus(dict(sorted(counts.items())), reps, bound, sign)


def vectors_of_norm(L, n):
    """All vectors (one per +- pair) of norm exactly n."""
    census = short_vectors(L, abs(n), keep=True, norms={abs(n)})
    return census.vectors.get(n, [])


def count_roots(L):
    sign, _ = _positive_form(L)
    return short_vectors(L, 2, norms={2}).count(2 * sign)


def is_rootless(L):
    return count_roots(L) == 0


def represents(L, n, primitive=False, div=None):
    """A vector of norm n satisfying the filters, or None."""
    sign, G = _positive_form(L)
    if n == 0:
        return None
    if (n > 0) != (sign > 0):
        return None
    Gorig = L.matrix() if isinstance(L, GramLattice) else L
    for v in vectors_of_norm(L, n):
        if primitive and _content(v) != 1:
            continue
        if div is not None and _content(la.vec_mat(v, Gorig)) != div:
            continue
        return v
    return None


def represented_values(L, bound, primitive=False):
    """Sorted set of |norms| <= bound represented (primitively if asked)."""
    census = short_vectors(L, bound, keep=True)
    out = set()
    for norm, vs in census.vectors.items():
        if not primitive or any(_content(v) == 1 for v in vs):
            out.add(abs(norm))
    return sorted(out)


def _content(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


# -- isometry testing -------------------------------------------------------

_PRIME = 2 ** 61 - 1


def _short_basis(P):
    """Z-basis of a positive definite lattice built greedily from short vectors.

    Independence is screened modulo a large prime: a vector independent mod p
    is independent over Q, and a false "dependent" only skips a candidate.
    Saturation is then checked exactly.
    """
    n = len(P)
    T = la.lll_gram(P)
    R = la.congruence(T, P)
    bound = max(R[i][i] for i in range(n))
    census = short_vectors(GramLattice(P), bound, keep=True)
    chosen, echelon = [], []
    for nrm in sorted(census.vectors):
        for v in census.vectors[nrm]:
            r = [x % _PRIME for x in v]
            for piv, row in echelon:
                c = r[piv]
                if c:
                    r = [(x - c * y) % _PRIME for x, y in zip(r, row)]
            piv = next((i for i, x in enumerate(r) if x), None)
            if piv is None:
                continue
            trial = chosen + [list(v)]
            d = la.smith_form(trial)[0]
            if all(x == 1 for x in d):
                chosen = trial
                inv = pow(r[piv], _PRIME - 2, _PRIME)
                echelon.append((piv, [(x * inv) % _PRIME for x in r]))
                if len(chosen) == n:
                    return chosen
    return T


def isometric(L1, L2, budget=None):
    """Search for M with M G2 M^T = G1.

    Returns ("isometric", M), ("none", None) or ("timeout", None).
    """
    budget = budget or default_budget()
    G1 = L1.matrix() if isinstance(L1, GramLattice) else L1
    G2 = L2.matrix() if isinstance(L2, GramLattice) else L2
    n = len(G1)
    if n != len(G2) or la.det(G1) != la.det(G2):
        return "none", None
    if [list(r) for r in G1] == [list(r) for r in G2]:
        return "isometric", la.identity(n)
    if all(G1[i][i] % 2 == 0 for i in range(n)) != all(G2[i][i] % 2 == 0 for i in range(n)):
        return "none", None
    s1, P1 = _positive_form(G1)
    s2, P2 = _positive_form(G2)
    if s1 != s2:
        return "none", None
    # a basis of short vectors keeps the candidate pools small
    T1 = _short_basis(P1)
    R1 = la.congruence(T1, P1)
    maxnorm = max(R1[i][i] for i in range(n))
    census = short_vectors(GramLattice(P2), maxnorm, keep=True)
    by_norm = {}
    for nrm, vs in census.vectors.items():
        full = []
        for v in vs:
            full.append(v)
            full.append([-x for x in v])
        by_norm[nrm] = full
    pools = []
    for i in range(n):
        vs = by_norm.get(R1[i][i], [])
        if not vs:
            return "none", None
        pools.append([(v, la.vec_mat(v, P2)) for v in vs])
    images = [None] * n
    nodes = [0]

    def rec(lists):
        # lists: {basis index: candidates compatible with the images chosen so far}
        nodes[0] += 1
        if nodes[0] > budget:
            raise TimeoutError
        if not lists:
            return True
        i = min(lists, key=lambda k: (len(lists[k]), k))
        rest = [j for j in lists if j != i]
        cands = lists[i]
        if all(x is None for x in images):
            # an isometry composed with -1 is again one: fix the sign of the first image
            seen, half = set(), []
            for v, w in cands:
                key = tuple(v)
                if tuple(-x for x in v) not in seen:
                    seen.add(key)
                    half.append((v, w))
            cands = half
        for v, w in cands:
            new = {}
            for j in rest:
                target = R1[i][j]
                kept = [(u, wu) for u, wu in lists[j] if la.dot(wu, v) == target]
                if not kept:
                    break
                new[j] = kept
            else:
                images[i] = v
                if rec(new):
                    return True
                images[i] = None
        return False

    try:
        found = rec({i: pools[i] for i in range(n)})
    except TimeoutError:
        return "timeout", None
    if not found:
        return "none", None
    # images[i] is the image of the i-th reduced basis vector of L1
    M_red = [images[i] for i in range(n)]
    if la.det(M_red) not in (1, -1):
        return "none", None
    T1inv = [[int(x) for x in r] for r in la.inverse(T1)]
    M = la.mat_mul(T1inv, M_red)
    if la.congruence(M, G2) != [list(r) for r in G1]:
        raise AssertionError("isometry check failed")
    return "isometric", M


def strong_invariants(L, census_bound=4):
    """Invariants used when an explicit isometry is too expensive."""
    from .disc_form import discriminant_module, gauss_sum_signature
    G = L.matrix()
    A = discriminant_module(L) if L.is_even else None
    census = short_vectors(L, census_bound)
    return {
        "rank": L.rank,
        "det": L.det,
        "even": L.is_even,
        "disc_orders": A.invariant_factors() if A else None,
        "disc_signature": gauss_sum_signature(A) if A else None,
        "census": census.counts,
    }


def isometry_verdict(L1, L2, budget=None, census_bound=4):
    """"isometric" with a matrix, "none", or "invariant-match" / "invariant-mismatch"."""
    from .disc_form import are_isometric, discriminant_module
    status, M = isometric(L1, L2, budget)
    if status != "timeout":
        return status, M
    inv1, inv2 = strong_invariants(L1, census_bound), strong_invariants(L2, census_bound)
    if inv1 != inv2:
        return "none", None
    if L1.is_even and are_isometric(discriminant_module(L1), discriminant_module(L2)) is False:
        return "none", None
    return "invariant-match", None


def unimodular_overlattice(L):
    """Even unimodular overlattice of a definite even lattice, or None."""
    from .disc_form import unimodular_overlattice as _uo
    res = _uo(L)
    return None if res is None else res[0]
