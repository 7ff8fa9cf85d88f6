"""Fixed-point arithmetic for prime-order symplectic actions.

Covers the cohomology dimension formula for fixed loci on K3^[2]-type
manifolds, holomorphic Lefschetz censuses for orders 3 and 5, Euler
characteristics of divisors and the Euler-characteristic count for
abelian group actions on K3 surfaces.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .cyclotomic import CyclotomicField, euler_phi, sqrt_prime


class FixedLocusError(ValueError):
    pass


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class AutInvariants:
    """(p, a, m): order, l(A_S) and rank(S)/(p - 1)."""
    p: int
    a: int
    m: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise FixedLocusError("p = %d is not prime" % self.p)
        if self.a < 0 or self.m < 0:
            raise FixedLocusError("a and m must be nonnegative")
        if self.a > (self.p - 1) * self.m:
            raise FixedLocusError("a = %d exceeds rank(S) = %d" % (self.a, (self.p - 1) * self.m))
        if self.m * (self.p - 1) > 23:
            raise FixedLocusError("rank(S) = %d exceeds 23" % (self.m * (self.p - 1)))

    @classmethod
    def from_lattice(cls, p, S):
        """Invariants of a co-invariant lattice S of an order-p isometry."""
        from .disc_form import discriminant_module
        if S.rank % (p - 1):
            raise FixedLocusError("rank %d is not divisible by p - 1" % S.rank)
        return cls(p, discriminant_module(S).length(), S.rank // (p - 1))


def bns_dimension(inv):
    """Total mod-p cohomology dimension of the fixed locus.

    The middle term is subtracted; this reading gives 16, 9 and 5 for
    (p, a, m) = (3, 5, 9), (7, 3, 3) and (11, 2, 2).
    """
    p, a, m = inv.p, inv.a, inv.m
    if not 3 <= p <= 19 or p == 5:
        raise FixedLocusError("the formula holds for 3 <= p <= 19, p != 5 (got p = %d)" % p)
    val = (324 - 2 * a * (25 - a) - (p - 2) * m * (25 - 2 * a)
           + Fraction(m * ((p - 2) ** 2 * m - p), 2))
    if val.denominator != 1 or val < 0:
        raise FixedLocusError("invalid invariants: dimension evaluates to %s" % val)
    return int(val)


@dataclass(frozen=True)
class FixedLocusProfile:
    """Isolated points by local type, K3 counts and c2 integrals by normal type."""
    p: int
    a: int
    points: tuple
    k3: tuple
    c2: tuple
    note: str = ""

    @property
    def total_points(self):
        return sum(self.points)

    def swapped(self):
        """Profile of the square of the automorphism (types 1 and 2 exchanged)."""
        if len(self.points) != 3:
            return self
        n1, n2, n3 = self.points
        return FixedLocusProfile(self.p, self.a, (n2, n1, n3), self.k3[::-1], self.c2[::-1], self.note)

    def to_json(self):
        return {"p": self.p, "a": self.a, "points": list(self.points),
                "total_points": self.total_points, "k3": list(self.k3),
                "c2": [str(x) for x in self.c2], "note": self.note}


# -- order 3: the printed reduced system ----------------------------------------

def census_order3():
    """Profiles (a, N, K, A) for order 3, solved from the reduced system.

    K comes from 9a^2 - 135a + 486 - 18K = 0, N from 6a - 54 = -2N/3 - 10K,
    A from 3 = N/9 - 10K/3 + A/6, and -N/3 + 4K = 9a^2/2 - 129a/2 + 216 is
    checked.
    """
    out = []
    for a in range(10):
        K = Fraction(9 * a * a - 135 * a + 486, 18)
        if K.denominator != 1 or K < 0:
            continue
        N = 81 - 9 * a - 15 * K
        if N < 0:
            continue
        A = 6 * (3 - Fraction(N, 9) + Fraction(10, 3) * K)
        if A < 0 or A.denominator != 1:
            continue
        if -Fraction(N, 3) + 4 * K != Fraction(9 * a * a - 129 * a, 2) + 216:
            continue
        note = "abelian surface" if N == 0 and K == 0 else ""
        out.append(FixedLocusProfile(3, a, (int(N),), (int(K),), (int(A),), note))
    return out


def rejected_order3():
    """Integral roots of the K equation dropped because N < 0."""
    out = []
    for a in range(10):
        K = Fraction(9 * a * a - 135 * a + 486, 18)
        if K.denominator == 1 and K >= 0 and 81 - 9 * a - 15 * K < 0:
            out.append((a, int(K), int(81 - 9 * a - 15 * K)))
    return out


# -- holomorphic Lefschetz contributions ----------------------------------------

class _Trunc:
    """Truncated graded algebra on 1, x, x^2, cZ, cX (degree <= 2)."""
    __slots__ = ("c",)

    def __init__(self, c):
        self.c = list(c)

    @classmethod
    def scalar(cls, s, zero):
        return cls([s, zero, zero, zero, zero])

    def __add__(self, o):
        return _Trunc([a + b for a, b in zip(self.c, o.c)])

    def __sub__(self, o):
        return _Trunc([a - b for a, b in zip(self.c, o.c)])

    def __mul__(self, o):
        if not isinstance(o, _Trunc):
            return _Trunc([a * o for a in self.c])
        a, b = self.c, o.c
        return _Trunc([a[0] * b[0], a[0] * b[1] + a[1] * b[0],
                       a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
                       a[0] * b[3] + a[3] * b[0], a[0] * b[4] + a[4] * b[0]])

    def inverse(self):
        a0 = self.c[0]
        inv0 = a0.inverse()
        zero = a0 - a0
        n = _Trunc([zero] + [x * inv0 for x in self.c[1:]])
        one = _Trunc.scalar(a0.field.one(), zero)
        return (one - n + n * n) * inv0

    def top(self):
        """(coefficient of cZ, coefficient of cX) after x^2 = cZ - cX."""
        x2 = self.c[2]
        return self.c[3] + x2, self.c[4] - x2


def point_contribution(eigs):
    """Local terms for O, Omega^1, Omega^2 at an isolated point."""
    F = eigs[0].field
    one = F.one()
    det = one
    for e in eigs:
        det = det * (one - e)
    tr = sum(eigs[1:], eigs[0])
    e2 = F.zero()
    for i in range(len(eigs)):
        for j in range(i + 1, len(eigs)):
            e2 = e2 + eigs[i] * eigs[j]
    inv = det.inverse()
    return [inv, tr * inv, e2 * inv]


def surface_contribution(mu):
    """Local terms on a fixed surface with normal eigenvalues mu, conj(mu).

    Each term is a pair (coefficient of c2(Z), coefficient of c2(X)|Z).
    """
    F = mu.field
    one, zero = F.one(), F.zero()
    mub = mu.conjugate()
    half = Fraction(1, 2)

    def ex(m, s):
        # m * exp(s x), truncated
        return _Trunc([m, m * s, m * half, zero, zero])

    lam = _Trunc.scalar(one * 2, zero) - ex(mu, 1) - ex(mub, -1)
    todd = _Trunc([one, zero, zero, one * Fraction(1, 12), zero])
    base = todd * lam.inverse()
    cot = ex(mu, 1) + ex(mub, -1)
    omega1 = _Trunc([one * 2, zero, zero, -one, zero]) + cot
    omega2 = _Trunc.scalar(one * 2, zero) + _Trunc([one * 2, zero, zero, -one, zero]) * cot
    return [base.top(), (omega1 * base).top(), (omega2 * base).top()]


def cohomology_traces(t, t2):
    """Alternating traces on H^q(Omega^p) for a symplectic action on K3^[2].

    t, t2 are the traces of g and g^2 on H^2; returns polynomials given as
    plain numbers for the current value of a.
    """
    h11 = t - 2
    sym2 = Fraction(t * t + t2, 2)
    h22 = sym2 - 2 - 2 * h11
    return [Fraction(3), Fraction(-2 * h11), 2 + h22]


def _real_components(x, p):
    """Split an element of the real subfield of Q(zeta_p), p in {3, 5}."""
    d = euler_phi(p)
    r = Fraction(x.trace()) / d
    if p == 3:
        if x != x.field.one() * r:
            raise FixedLocusError("term is not rational")
        return [r]
    s5 = sqrt_prime(x.field, p)
    s = Fraction((x * s5).trace()) / (d * p)
    if x != x.field.one() * r + s5 * s:
        raise FixedLocusError("term does not lie in Q(sqrt %d)" % p)
    return [r, s]


@dataclass
class LinearSystem:
    """Equations sum(coeff[v] * v) = rhs, one per row."""
    variables: list
    rows: list = field(default_factory=list)   # (dict var -> Fraction, Fraction)
    labels: list = field(default_factory=list)


def lefschetz_system(p, a):
    """Linear equations on the fixed-locus counts, derived from scratch.

    p = 3: unknowns N, K, A with points of type (w, w, w', w').
    p = 5: unknowns N1, N2, N3, K1, K2, A1, A2 with point types
    (w, w, w', w'), (w^2, w^2, w'^2, w'^2), (w, w^2, w', w'^2) and
    surfaces with normal eigenvalue w or w^2.
    """
    if p not in (3, 5):
        raise FixedLocusError("Lefschetz census implemented for p = 3, 5")
    F = CyclotomicField(p)
    w = F.zeta(1)
    wb = w.conjugate()
    if p == 3:
        points = {"N": [w, w, wb, wb]}
        surfaces = {"1": w}
    else:
        w2, w2b = F.zeta(2), F.zeta(2).conjugate()
        points = {"N1": [w, w, wb, wb], "N2": [w2, w2, w2b, w2b], "N3": [w, w2, wb, w2b]}
        surfaces = {"1": w, "2": F.zeta(2)}
    t = 23 - p * a
    lhs = cohomology_traces(t, t)
    ptc = {k: point_contribution(v) for k, v in points.items()}
    suc = {k: surface_contribution(mu) for k, mu in surfaces.items()}
    if p == 3:
        variables = ["N", "K", "A"]
        kname = {"1": ("K", "A")}
    else:
        variables = ["N1", "N2", "N3", "K1", "K2", "A1", "A2"]
        kname = {"1": ("K1", "A1"), "2": ("K2", "A2")}
    sys_ = LinearSystem(variables)
    for deg in range(3):
        terms = {}
        for k, c in ptc.items():
            terms[k] = _real_components(c[deg], p)
        for s, c in suc.items():
            cz, cx = c[deg]
            K, A = kname[s]
            terms[K] = [24 * v for v in _real_components(cz, p)]
            terms[A] = _real_components(cx, p)
        ncomp = 1 if p == 3 else 2
        for comp in range(ncomp):
            row = {v: terms[v][comp] for v in variables}
            rhs = lhs[deg] if comp == 0 else Fraction(0)
            sys_.rows.append((row, rhs))
            sys_.labels.append("Omega^%d %s" % (deg, "rational" if comp == 0 else "sqrt%d" % p))
    return sys_


def _swap_row(row):
    swap = {"N1": "N2", "N2": "N1", "K1": "K2", "K2": "K1", "A1": "A2", "A2": "A1"}
    return {swap.get(k, k): v for k, v in row.items()}


def _echelon(system):
    """Reduced row echelon form over Q; returns (pivots, reduced rows) or None."""
    vars_ = system.variables
    M = [[row.get(v, Fraction(0)) for v in vars_] + [rhs] for row, rhs in system.rows]
    n = len(vars_)
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(M)):
        if M[i][n] != 0:
            return None
    return pivots, M[:r]


def _affine_solution(system):
    """Pivot variables as affine functions of the free ones, or None if inconsistent."""
    res = _echelon(system)
    if res is None:
        return None
    pivots, rows = res
    vars_ = system.variables
    free = [v for i, v in enumerate(vars_) if i not in pivots]
    expr = {}
    for c, row in zip(pivots, rows):
        # v = rhs - sum(row[f] * f)
        expr[vars_[c]] = (row[-1], {f: -row[vars_.index(f)] for f in free})
    for f in free:
        expr[f] = (Fraction(0), {g: Fraction(int(g == f)) for g in free})
    return free, expr


def _bounded_box(free, constraints):
    """Integer box containing {x : const + lin.x >= 0} for one or two free variables."""
    dim = len(free)
    if dim == 0:
        return [()]
    if dim > 2:
        raise FixedLocusError("derivation mismatch: %d free variables" % dim)
    lines = [(c, [lin.get(f, Fraction(0)) for f in free]) for c, lin in constraints]
    lines = [(c, n) for c, n in lines if any(n)]

    def feasible(x):
        return all(c + sum(a * b for a, b in zip(n, x)) >= 0 for c, n in constraints_vec)

    constraints_vec = lines
    if dim == 1:
        lo, hi = None, None
        for c, (n,) in lines:
            b = -c / n
            if n > 0:
                lo = b if lo is None else max(lo, b)
            else:
                hi = b if hi is None else min(hi, b)
        if lo is None or hi is None:
            raise FixedLocusError("derivation mismatch: unbounded solution set")
        return [(x,) for x in range(_ceil(lo), _floor(hi) + 1)]
    # unbounded iff some direction along a constraint line stays feasible
    for _, n in lines:
        for d in ((-n[1], n[0]), (n[1], -n[0])):
            if all(m[0] * d[0] + m[1] * d[1] >= 0 for _, m in lines):
                raise FixedLocusError("derivation mismatch: unbounded solution set")
    verts = []
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            (c1, n1), (c2, n2) = lines[i], lines[j]
            det = n1[0] * n2[1] - n1[1] * n2[0]
            if det == 0:
                continue
            x = (-c1 * n2[1] + c2 * n1[1]) / det
            y = (-n1[0] * c2 + n2[0] * c1) / det
            if feasible((x, y)):
                verts.append((x, y))
    if not verts:
        return []
    xs, ys = [v[0] for v in verts], [v[1] for v in verts]
    return list(product(range(_ceil(min(xs)), _floor(max(xs)) + 1),
                        range(_ceil(min(ys)), _floor(max(ys)) + 1)))


def _floor(x):
    return x.numerator // x.denominator


def _ceil(x):
    return -((-x.numerator) // x.denominator)


def solve_census(p, a, symmetric=True):
    """All nonnegative integral solutions of the derived system for one a."""
    system = lefschetz_system(p, a)
    if symmetric and p == 5:
        for row, rhs in list(system.rows):
            system.rows.append((_swap_row(row), rhs))
            system.labels.append("swapped")
    sol = _affine_solution(system)
    if sol is None:
        return []
    free, expr = sol
    nonneg = [v for v in system.variables if v[0] in "NK"]
    cons = [expr[v] for v in nonneg]
    out = []
    for x in _bounded_box(free, cons):
        vals = {}
        for v, (c, lin) in expr.items():
            vals[v] = c + sum(lin[f] * xi for f, xi in zip(free, x))
        if any(vals[v] < 0 for v in nonneg):
            continue
        if any(val.denominator != 1 for val in vals.values()):
            continue
        out.append({k: int(v) for k, v in vals.items()})
    return out


def census_order5():
    """Fixed-locus profiles for order 5 from the derived Lefschetz system."""
    out = []
    for a in range(6):
        for s in solve_census(5, a):
            out.append(FixedLocusProfile(5, a, (s["N1"], s["N2"], s["N3"]),
                                         (s["K1"], s["K2"]), (s["A1"], s["A2"])))
    ok = (len(out) == 1 and out[0].a == 4 and out[0].total_points == 14
          and not any(out[0].k3) and not any(out[0].c2))
    if not ok:
        raise FixedLocusError("derivation mismatch: %s" % [p.to_json() for p in out])
    for prof in out:
        if prof.swapped() not in out:
            raise FixedLocusError("derivation mismatch: solution set not closed under squaring")
    return out


# -- divisors on K3^[n]-type -------------------------------------------------------

def divisor_euler_characteristic(q, n):
    """chi(D) = binom(q/2 + n + 1, n) for a divisor of square q on K3^[n]-type."""
    if q % 2:
        raise FixedLocusError("the square of a divisor is even (got %d)" % q)
    if n < 1:
        raise FixedLocusError("n must be positive")
    top = q // 2 + n + 1
    if top < n:
        return 0 if top >= 0 else _negative_binomial(top, n)
    return comb(top, n)


def _negative_binomial(top, n):
    num = 1
    for i in range(n):
        num *= top - i
    den = 1
    for i in range(1, n + 1):
        den *= i
    return num // den


def vsp_polarization(h2=14, pairing_with_line=3, bound=1365, n=2):
    """Determine l = a h - 3 delta from the Euler characteristic bound.

    Picard lattice <h, delta> with h^2 = h2, delta^2 = -2, (h, delta) = 0;
    (h, D) = 0 and (delta, D) = -1 for the exceptional rational curve D,
    so (l, D) = pairing_with_line fixes the delta coefficient.
    """
    from .catalog import make_named
    from .lattice_core import divisibility
    b = -pairing_with_line
    table = []
    a = 1
    chosen = None
    while True:
        sq = h2 * a * a - 2 * b * b
        if sq <= 0:
            table.append({"a": a, "square": sq, "chi": None, "kept": False})
            a += 1
            continue
        chi = divisor_euler_characteristic(sq, n)
        kept = chi <= bound
        table.append({"a": a, "square": sq, "chi": chi, "kept": kept})
        if kept and chosen is None:
            chosen = (a, sq)
        if chi > bound:
            break
        a += 1
    if chosen is None:
        raise FixedLocusError("no polarization satisfies the bound")
    a, sq = chosen
    # realise h inside a hyperbolic plane of L_n: h = e + (h2/2) f, delta = generator of (2 - 2n)
    L = make_named("L_n", n=n)
    v = [0] * L.rank
    v[0], v[1] = a, a * h2 // 2
    v[-1] = b
    if L.norm(v) != sq:
        raise FixedLocusError("model of the Picard lattice is inconsistent")
    return {"a": a, "delta_coefficient": b, "square": sq,
            "divisibility": divisibility(L, v), "chi": divisor_euler_characteristic(sq, n),
            "bound": bound, "table": table}


# -- K3 surfaces: Euler characteristic counting ------------------------------------

@dataclass
class K3Census:
    group: str
    counts: dict = None            # stabilizer order -> number of points
    contradiction: str = None
    exceptional_rank: int = None

    @property
    def consistent(self):
        return self.contradiction is None

    def to_json(self):
        return {"group": self.group, "counts": self.counts,
                "contradiction": self.contradiction, "exceptional_rank": self.exceptional_rank}


def _frac_or_int(x):
    return int(x) if x.denominator == 1 else x


def _exceptional_rank(m, counts):
    """Rank of the exceptional curves on the resolved quotient."""
    total = 0
    for mi, k in counts.items():
        orbits = Fraction(k * mi, m)
        total += orbits * (mi - 1)
    return total


def _finish(name, m, counts):
    for mi, k in sorted(counts.items()):
        if k < 0 or Fraction(k).denominator != 1:
            return K3Census(name, {s: _frac_or_int(Fraction(v)) for s, v in counts.items()},
                            "points with stabilizer of order %d: %s is not a nonnegative integer"
                            % (mi, Fraction(k)))
    counts = {s: int(v) for s, v in counts.items()}
    for mi, k in sorted(counts.items()):
        orbit = m // mi
        if k % orbit:
            return K3Census(name, counts, "t_%d = %d is not divisible by the orbit size %d"
                            % (mi, k, orbit))
    rk = _exceptional_rank(m, counts)
    if rk > 19:
        return K3Census(name, counts, "exceptional curves span a negative definite lattice "
                        "of rank %s > 19" % rk, int(rk))
    return K3Census(name, counts, None, int(rk))


def k3_census(shape, p, q=None):
    """Fixed-point counts for Z/p, Z/p^2 or Z/pq acting symplectically on a K3.

    shape is "cyclic", "p2" or "pq". The Euler characteristic relation
    (24 - k)/m = 24 - sum k_i m_i^2 / m is solved exactly.
    """
    if not _is_prime(p) or (q is not None and not _is_prime(q)):
        raise FixedLocusError("orders must be prime")
    if shape == "cyclic":
        k = Fraction(24, p + 1)
        return _finish("Z/%d" % p, p, {p: k})
    if shape == "p2":
        m = p * p
        # 24 = 24/(p+1) + t_{p^2} p^2
        t2 = (24 - Fraction(24, p + 1)) / (p * p)
        t1 = Fraction(24, p + 1) - t2
        return _finish("Z/%d" % m, m, {p: t1, m: t2})
    if shape == "pq":
        if q is None or q == p:
            raise FixedLocusError("Z/pq needs two distinct primes")
        m = p * q
        # 24(pq-1) = (24/(p+1) - t)(p^2-1) + (24/(q+1) - t)(q^2-1) + t(p^2 q^2 - 1)
        lhs = 24 * (m - 1) - Fraction(24, p + 1) * (p * p - 1) - Fraction(24, q + 1) * (q * q - 1)
        t = lhs / (p * p * q * q - 1 - (p * p - 1) - (q * q - 1))
        return _finish("Z/%d" % m, m, {p: Fraction(24, p + 1) - t, q: Fraction(24, q + 1) - t, m: t})
    raise FixedLocusError("unsupported group shape %r" % shape)
