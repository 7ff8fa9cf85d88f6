"""Co-invariant lattices of prime-order Leech automorphisms and what they imply.

Covers the transfer of a co-invariant lattice into the Niemeier lattices, the
prime-order tables computed from explicit witnesses, embeddability into the
K3^[n]-type lattices L_n, order bounds, and the exceptional vector orthogonal
to an isotropic class in M2, M3, M5.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from . import linalg as la
from .catalog import Witness, make_named, reduced, witness_isometry
from .disc_form import are_isometric, discriminant_module, exists_even_lattice
from .enumerate import count_roots, isometry_verdict, represents
from .fixed_locus import AutInvariants, bns_dimension
from .isometry import (IsometryError, LatticeIsometry, discriminant_action,
                       fixed_sublattices, restrict, transvection_normal_form)
from .lattice_core import GramLattice, LatticeError, direct_sum, divisibility


class ClassificationError(LatticeError):
    pass


# -- Leech couples -----------------------------------------------------------------

@dataclass
class LeechCoupleCandidate:
    S: GramLattice
    witness: object            # LatticeIsometry of the host
    host: str
    definite: bool = False
    rootless: bool = False
    trivial_action: bool = False

    @property
    def is_leech_couple(self):
        return self.definite and self.rootless and self.trivial_action

    def to_json(self):
        return {"host": self.host, "rank": self.S.rank, "det": self.S.det,
                "definite": self.definite, "rootless": self.rootless,
                "trivial_action": self.trivial_action,
                "leech_couple": self.is_leech_couple}


def leech_couple(g, host):
    """Check the Leech couple conditions for the co-invariant lattice of g."""
    fx = fixed_sublattices(g.lattice, [g])
    sub = fx.S
    S = sub.lattice()
    pos, neg, _ = la.inertia(S.gram)
    definite = S.rank == 0 or pos == S.rank or neg == S.rank
    rootless = definite and (S.rank == 0 or count_roots(S) == 0)
    if S.rank == 0 or abs(S.det) == 1:
        trivial = True
    else:
        gs = LatticeIsometry(S, la.transpose(restrict(g, sub)))
        trivial = discriminant_action(S, gs).trivial
    return LeechCoupleCandidate(S, g, host, definite, rootless, trivial), fx


# -- Niemeier transfer -------------------------------------------------------------

@dataclass
class TransferResult:
    verdict: str               # "yes" | "no" | "unknown" | "rejected"
    reason: str
    host: str = None
    root_trick: tuple = None   # (verdict, reason, host) for S + (-2)

    def to_json(self):
        out = {"verdict": self.verdict, "reason": self.reason, "host": self.host}
        if self.root_trick is not None:
            out["root_trick"] = dict(zip(("verdict", "reason", "host"), self.root_trick))
        return out


def _root_complements(T, limit=50):
    """Orthogonal complements of roots of a negative definite T."""
    from .enumerate import vectors_of_norm
    from .lattice_core import orthogonal_complement
    out = []
    for v in vectors_of_norm(T, -2)[:limit]:
        out.append(orthogonal_complement(T, [v]).lattice())
    return out


def niemeier_transfer(S, with_root_trick=False, witnesses=()):
    """Verdict on a primitive embedding of S into some Niemeier lattice.

    S is negative definite of rank at most 21.  witnesses is a list of
    (host name, candidate complement T); a match certifies "yes" and names the
    host.  The root trick asks for an embedding of S + (-2), which forces a
    host with roots.
    """
    pos, neg, _ = la.inertia(S.gram)
    if pos:
        return TransferResult("rejected", "S is not negative definite")
    if S.rank > 21:
        return TransferResult("rejected", "rank %d > 21: S cannot sit in a K3^[n]-type "
                              "second cohomology with a positive complement" % S.rank)
    A = discriminant_module(S)
    sig = (0, 24 - S.rank)
    cands = [T for _, T in witnesses]
    verdict, reason, w = exists_even_lattice(sig, -A, cands)
    host = None
    if w is not None:
        host = next((h for h, T in witnesses if T is w), None)
    result = TransferResult(verdict, reason, host)
    if with_root_trick:
        root = GramLattice([[-2]])
        A2 = discriminant_module(direct_sum(S, root))
        rooted = []
        for h, T in witnesses:
            if count_roots(T):
                rooted += [(h, T2) for T2 in _root_complements(T)]
        v2, r2, w2 = exists_even_lattice((0, 23 - S.rank), -A2, [T for _, T in rooted])
        h2 = next((h for h, T in rooted if T is w2), None) if w2 is not None else None
        if v2 == "yes":
            r2 += "; a root orthogonal to S forces a host other than the Leech lattice"
        result.root_trick = (v2, r2, h2)
    return result


def transfer_witnesses(key):
    """(host, T) pairs from the catalog witness of a co-invariant lattice."""
    from .catalog import WITNESSES
    w = WITNESSES[key]
    out = []
    sides = ("N", "Leech") if w.target.startswith("holy:") else ("N",)
    base = w.target.split(":", 1)[-1]
    for side in sides:
        if side == "N" and w.glue is not None:
            continue        # glue translations are trivial on N itself
        ww = Witness(w.target, w.perm, w.glue, w.diagram, side)
        g, _ = witness_isometry(ww)
        fx = fixed_sublattices(g.lattice, [g])
        out.append(("Leech" if side == "Leech" else base, fx.T.lattice()))
    return out


# -- prime-order tables ---------------------------------------------------------------

def _n22_order11():
    return tuple([0] + [(k + 1) % 11 + 1 for k in range(11)])


def _n23_order(step):
    """Fix the first component and multiply the other 23 indices by step."""
    return tuple([0] + [(step * k) % 23 + 1 for k in range(23)])


def _n23_shift():
    """Fix the first component and rotate the other 23 cyclically."""
    return tuple([0] + [(k + 1) % 23 + 1 for k in range(23)])


# (label, witness, expected catalog name or None for the full Leech lattice)
TABLE_WITNESSES = {
    2: [("N3 swap", Witness("N3", perm=(1, 0, 2)), "E8(-2)")],
    3: [("N12 rotation", Witness("N12", perm=(0, 2, 3, 1)), "K12(-2)"),
        ("N18 rotation with triality", Witness("N18", perm=(0, 2, 3, 1, 4),
                                               diagram=((4, "gamma"),)), "K12(-2)"),
        ("3A", Witness("holy:N22", glue=(1,) * 12, side="Leech"), None),
        ("3B", Witness("holy:N22", glue=(0, 0, 0, 0, 0, 1, 2, 2, 2, 1, 0, 1),
                       side="Leech"), "K12(-2)"),
        ("3C", Witness("holy:N22", glue=(0, 0, 0, 1, 1, 1, 2, 1, 1, 2, 2, 1),
                       side="Leech"), "W(-1)"),
        ("3D", Witness("N3", perm=(1, 2, 0)), "S3exo")],
    5: [("5A", Witness("holy:N20", glue=(1, 1, 1, 3, 2, 3), side="Leech"), None),
        ("5B", Witness("holy:N20", glue=(0, 0, 1, 2, 3, 4), side="Leech"), "S5K3"),
        ("5C", Witness("holy:N20", glue=(0, 1, 1, 1, 1, 1), side="Leech"), "S5exo")],
    7: [("[1216]", Witness("holy:N17", glue=(1, 2, 1, 6), side="Leech"), None),
        ("[2130]", Witness("holy:N17", glue=(2, 1, 3, 0), side="Leech"), "S7K3")],
    11: [("N23 permutation", Witness("holy:N23", perm=_n23_order(2), side="N"), "S11"),
         ("N23 permutation on Leech", Witness("holy:N23", perm=_n23_order(2), side="Leech"), "S11"),
         ("N22 permutation", Witness("holy:N22", perm=_n22_order11(), side="N"), "S11"),
         ("N22 permutation on Leech", Witness("holy:N22", perm=_n22_order11(), side="Leech"), "S11")],
}

# fixed loci of symplectic automorphisms of K3^[2]-type fourfolds, with the
# total dimension of their mod-p cohomology
FIXED_LOCI = {
    "E8(-2)": ("1 K3 surface and 28 isolated points", 52),
    "K12(-2)": ("27 isolated points", 27),
    "W(-1)": ("1 abelian surface", 16),
    "S5K3": ("14 isolated points", 14),
    "S7K3": ("9 isolated points", 9),
    "S11": ("5 isolated points", 5),
}


@dataclass
class TableRow:
    label: str
    witness: Witness
    host: str
    S: GramLattice
    couple: LeechCoupleCandidate
    name: str = None            # catalog name the lattice matched, if any
    match: str = None           # "isometric" | "invariant-match" | "none" | None
    klass: int = 0              # isometry class index within the table
    fixed_locus: str = None
    bns: int = None
    bns_agrees: bool = None
    note: str = ""

    def to_json(self):
        A = discriminant_module(self.S) if self.S.rank else None
        return {"label": self.label, "host": self.host, "witness": self.witness.to_json(),
                "rank": self.S.rank, "det": self.S.det,
                "disc": A.invariant_factors() if A else [],
                "leech_couple": self.couple.to_json(), "name": self.name,
                "match": self.match, "class": self.klass,
                "fixed_locus": self.fixed_locus, "bns": self.bns,
                "bns_agrees": self.bns_agrees, "note": self.note}


def _host_name(w):
    base = w.target.split(":", 1)[-1]
    return "Leech" if w.target.startswith("holy:") and w.side == "Leech" else base


@lru_cache(maxsize=None)
def _row_lattice(label, w):
    g, _ = witness_isometry(w)
    couple, fx = leech_couple(g, _host_name(w))
    S = reduced(couple.S, name=label) if couple.S.rank else couple.S
    couple.S = S
    return S, couple


def _compare(S, name, budget):
    target = make_named(name)
    if (S.rank, abs(S.det)) != (target.rank, abs(target.det)):
        return "none"
    status, _ = isometry_verdict(S, target, budget=budget)
    return status


def _holy_partner(w):
    """The same holy-pair isometry acting on the other lattice of the pair."""
    other = "N" if w.side == "Leech" else "Leech"
    return Witness(w.target, w.perm, w.glue, w.diagram, other)


def same_as_partner(w):
    """Whether S on N and S on the Leech copy coincide inside the common span."""
    from .isometry import same_sublattice
    from .niemeier import holy_pair
    if not w.target.startswith("holy:") or w.perm is None:
        return None
    P = holy_pair(w.target.split(":", 1)[1])
    subs = []
    for ww in (w, _holy_partner(w)):
        g, _ = witness_isometry(ww)
        subs.append(fixed_sublattices(g.lattice, [g]).S)
    E = {"N": P.N, "Leech": P.Leech}
    return same_sublattice(E[w.side], subs[0], E[_holy_partner(w).side], subs[1])


def prime_coinvariant_table(p, budget=300):
    """Rows for the explicit order-p witnesses, grouped into isometry classes.

    Rows matching a catalog lattice are grouped under that name; the match is
    "isometric" when an explicit isometry was found within the budget and
    "invariant-match" when only the strong invariants agree.
    """
    if p not in TABLE_WITNESSES:
        raise ClassificationError("supported primes: %s" % sorted(TABLE_WITNESSES))
    rows = []
    classes = {}               # class key -> (index, representative)
    for label, w, expected in TABLE_WITNESSES[p]:
        S, couple = _row_lattice(label, w)
        row = TableRow(label, w, _host_name(w), S, couple)
        if S.rank == 24:
            row.note = "fixed-point free on the Leech lattice: rank 24 > 21, no K3^[2] realization"
            row.match = "isometric" if abs(S.det) == 1 and couple.rootless else "none"
            key = "rank 24"
        elif expected is not None:
            row.name, row.match = expected, _compare(S, expected, budget)
            key = expected if row.match in ("isometric", "invariant-match") else None
        else:
            key = None
        if key is None:
            for k, (idx, R) in classes.items():
                if isometry_verdict(S, R, budget=budget)[0] in ("isometric", "invariant-match"):
                    key = k
                    break
            else:
                key = label
        if key not in classes:
            classes[key] = (len(classes), S)
        row.klass = classes[key][0]
        if row.name in FIXED_LOCI and row.match in ("isometric", "invariant-match"):
            row.fixed_locus, dim = FIXED_LOCI[row.name]
            if p in (3, 7, 11) and S.rank < 24:
                row.bns = bns_dimension(AutInvariants.from_lattice(p, S))
                row.bns_agrees = row.bns == dim
        if w.target.startswith("holy:") and w.perm is not None:
            if same_as_partner(w):
                row.note = "equal to the co-invariant lattice on the other side of the holy pair"
        if p == 2:
            row.note = ("verified fact: the fixed locus and lattice for involutions are "
                        "geometric input; lattice-side checks only")
        rows.append(row)
    return rows


def involution_checks():
    """Lattice-side checks for the involution row: E8(-2) rootless, unique embedding."""
    S = make_named("E8(-2)")
    A = discriminant_module(S)
    unique = 22 - S.rank >= A.length() + 2
    return {"rootless": count_roots(S) == 0, "rank": S.rank, "l(A)": A.length(),
            "unique_embedding_in_K3_lattice": unique,
            "criterion": "rank(L) - rank(S) >= l(A_S) + 2 for L = U^3 + E8(-1)^2"}


# -- embeddings into L_n ----------------------------------------------------------

@dataclass
class ComplementGenus:
    forms: list                # Gram matrices of complements in the Mukai lattice
    complete: bool             # True when the list exhausts the genus
    reference: str             # lattice whose discriminant form the complement carries
    sign: int                  # q_T = sign * q_reference
    note: str = ""


def _u3_4():
    return [[0, 3, 0, 0, 0, 0, 0, 0], [3, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 3, 0, 0, 0, 0], [0, 0, 3, 0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0, 3, 0, 0], [0, 0, 0, 0, 3, 0, 0, 0],
            [0, 0, 0, 0, 0, 0, 0, 3], [0, 0, 0, 0, 0, 0, 3, 0]]


COMPLEMENTS = {
    "W(-1)": ComplementGenus(
        [[[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 6, -3], [0, 0, -3, 6]]], False, "M81", 1,
        "complement of a rank-20 overlattice F of W(-1); a representation is sufficient only"),
    "S5exo": ComplementGenus(
        [[[4, 1, 1, -1], [1, 4, -1, 1], [1, -1, 4, 1], [-1, 1, 1, 4]]], True, "S5exo", -1,
        "single class in its genus"),
    "S11": ComplementGenus(
        [[[4, 2, 1, 0], [2, 4, 1, 1], [1, 1, 4, 2], [0, 1, 2, 4]],
         [[2, 1, 1, 0], [1, 2, 1, 1], [1, 1, 8, 4], [0, 1, 4, 8]],
         [[2, 0, 1, 0], [0, 2, 0, 1], [1, 0, 6, 0], [0, 1, 0, 6]]], True, "S11", -1,
        "three classes in the genus of determinant 121"),
    "S3exo": ComplementGenus([_u3_4()], True, "S3exo", -1,
                             "U(3)^4: rank 8 with (Z/3)^8 forces T = 3 T^dual"),
}


def _norm_gcd(G):
    g = 0
    for i, row in enumerate(G):
        for j, x in enumerate(row):
            g = gcd(g, x if i == j else 2 * x)
    return g


def _scaled_hyperbolic(G):
    """k for an orthogonal summand U(k) on two basis vectors, or None."""
    n = len(G)
    for i in range(n - 1):
        j = i + 1
        if G[i][i] == 0 and G[j][j] == 0 and G[i][j] > 0:
            others = [k for k in range(n) if k not in (i, j)]
            if all(G[i][k] == 0 and G[j][k] == 0 for k in others):
                return G[i][j]
    return None


def represents_primitively(T, N):
    """("yes" | "no" | "unknown") for a primitive vector of norm N in T."""
    pos, neg, _ = la.inertia(T.gram)
    if pos and neg:
        if N % _norm_gcd(T.gram):
            return "no"
        k = _scaled_hyperbolic(T.gram)
        if k and N % (2 * k) == 0:
            return "yes"        # e + (N / 2k) f
        return "unknown"
    return "yes" if represents(T, N, primitive=True) is not None else "no"


@lru_cache(maxsize=None)
def complement_check(name):
    """Whether the listed complements carry the discriminant form they should."""
    c = COMPLEMENTS[name]
    A = discriminant_module(make_named(c.reference))
    if c.sign < 0:
        A = -A
    return all(are_isometric(discriminant_module(GramLattice(G)), A) for G in c.forms)


@dataclass
class EmbeddingVerdict:
    n: int
    verdict: str               # "yes" | "no" | "unknown"
    reason: str
    witness: str = None

    def to_json(self):
        return {"n": self.n, "verdict": self.verdict, "reason": self.reason,
                "witness": self.witness}


def hilbert_embeddability(name, n_range=range(2, 10)):
    """For each n, can S embed primitively into L_n?"""
    S = make_named(name)
    pos, neg, _ = la.inertia(S.gram)
    if pos or neg != S.rank:
        raise ClassificationError("%s is not negative definite" % name)
    A = discriminant_module(S)
    out = []
    if S.rank + A.length() <= 21:
        for n in n_range:
            out.append(EmbeddingVerdict(n, "yes", "rank + l(A) = %d <= 21: embeds in the K3 "
                                        "lattice, a summand of L_n" % (S.rank + A.length())))
        return out
    if name not in COMPLEMENTS:
        return [EmbeddingVerdict(n, "unknown", "no complement data") for n in n_range]
    c = COMPLEMENTS[name]
    if not complement_check(name):
        raise ClassificationError("complement forms of %s do not match its discriminant form" % name)
    forms = [GramLattice(G) for G in c.forms]
    for n in n_range:
        N = 2 * (n - 1)
        answers = [represents_primitively(T, N) for T in forms]
        if "yes" in answers:
            i = answers.index("yes")
            out.append(EmbeddingVerdict(n, "yes", "complement %d represents %d primitively"
                                        % (i, N), witness=str(c.forms[i])))
        elif c.complete and all(a == "no" for a in answers):
            out.append(EmbeddingVerdict(n, "no", "no class of the complement genus represents "
                                        "%d primitively" % N))
        else:
            out.append(EmbeddingVerdict(n, "unknown", "%d not represented by the known "
                                        "complement (%s)" % (N, c.note)))
    return out


# -- order bounds ------------------------------------------------------------------

def euler_phi(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def max_with_phi_at_most(k):
    """Largest n with phi(n) <= k, by brute force.

    phi(n) >= sqrt(n / 2) bounds the search by 2 k^2.
    """
    top = 2 * k * k + 2
    return max(n for n in range(1, top + 1) if euler_phi(n) <= k)


def _primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % q for q in range(2, int(p ** 0.5) + 1))]


CO1_ORDER = 2 ** 21 * 3 ** 9 * 5 ** 4 * 7 ** 2 * 11 * 13 * 23


@dataclass
class OrderBound:
    context: str
    bound: int
    kind: str                  # "order" | "prime"
    certificate: dict = field(default_factory=dict)

    def to_json(self):
        return {"context": self.context, "bound": self.bound, "kind": self.kind,
                "certificate": self.certificate}


PHI_CAPS = {"nonsymplectic_K3": 21, "K3n": 22, "Kummer-n": 6, "Og6": 7, "Og10": 23}
RANK_CAPS = {"Kummer-n": 4, "Og6": 5, "Og10": 21}


def _prime_rank_bound(cap):
    ps = [p for p in _primes_upto(cap + 1) if p - 1 <= cap]
    return max(ps)


def order_bounds(context, prime=False):
    """Bound on the order of an automorphism, with the certificate."""
    if context == "K3[2]_prime":
        return _k3_2_prime_bound()
    if prime:
        if context not in RANK_CAPS:
            raise ClassificationError("no rank cap for %s" % context)
        cap = RANK_CAPS[context]
        p = _prime_rank_bound(cap)
        cert = {"rank_cap": cap, "rule": "(p - 1) m <= rank cap with m >= 1"}
        if p - 1 == cap or (p - 1) * 2 > cap:
            s = "A%d(-1)" % (p - 1)
            cert["extremal_lattice"] = s
            cert["extremal_rootful"] = count_roots(make_named(s)) > 0
        return OrderBound(context, p, "prime", cert)
    if context not in PHI_CAPS:
        raise ClassificationError("unknown context %r; choose from %s"
                                  % (context, sorted(PHI_CAPS) + ["K3[2]_prime"]))
    k = PHI_CAPS[context]
    n = max_with_phi_at_most(k)
    return OrderBound(context, n, "order",
                      {"phi_cap": k, "phi(n_max)": euler_phi(n), "search_limit": 2 * k * k + 2})


def _k3_2_prime_bound():
    """p <= 11 for symplectic prime order on K3^[2]-type, with exclusions computed."""
    divisors = [p for p in _primes_upto(23) if CO1_ORDER % p == 0]
    cert = {"primes_dividing_Co1": divisors}
    w13 = Witness("holy:N10", glue=(1, 5), side="Leech")
    g, _ = witness_isometry(w13)
    fx = fixed_sublattices(g.lattice, [g])
    cert["p=13"] = {"witness": w13.to_json(), "invariant_rank": fx.T.rank,
                    "coinvariant_rank": 24 - fx.T.rank}
    w23 = Witness("N23", perm=_n23_shift())
    g, _ = witness_isometry(w23)
    fx = fixed_sublattices(g.lattice, [g])
    cert["p=23"] = {"witness": w23.to_json(), "coinvariant_rank": 24 - fx.T.rank}
    allowed = [p for p in divisors
               if not (p == 13 and cert["p=13"]["coinvariant_rank"] > 21)
               and not (p == 23 and cert["p=23"]["coinvariant_rank"] > 21)]
    cert["allowed"] = allowed
    return OrderBound("K3[2]_prime", max(allowed), "prime", cert)


# -- exceptional vectors orthogonal to an isotropic class -------------------------

def _summand_generator(M):
    """Index of a basis vector spanning an orthogonal (-2) summand (the last one)."""
    G = M.matrix()
    t = M.rank - 1
    if G[t][t] != -2 or any(G[t][j] for j in range(M.rank) if j != t):
        raise ClassificationError("the last basis vector does not span a (-2) summand")
    return t


def _hyperbolic_pairs(M):
    G = M.matrix()
    pairs = []
    n = M.rank
    for i in range(n - 1):
        j = i + 1
        if G[i][i] == 0 and G[j][j] == 0 and G[i][j] == 1:
            others = [k for k in range(n) if k not in (i, j)]
            if all(G[i][k] == 0 and G[j][k] == 0 for k in others):
                e = [int(k == i) for k in range(n)]
                f = [int(k == j) for k in range(n)]
                pairs.append((e, f))
    return pairs


def _hyperbolic_blocks(G):
    """Index pairs (i, i+1) spanning orthogonal summands U(k)."""
    n = len(G)
    out = []
    for i in range(n - 1):
        j = i + 1
        if G[i][i] == 0 and G[j][j] == 0 and G[i][j]:
            if all(G[i][k] == 0 and G[j][k] == 0 for k in range(n) if k not in (i, j)):
                out.append((i, j))
    return out


def _linear_solution(coeffs, target):
    """Integers c with sum c_i coeffs_i = target, or None."""
    g, cs = 0, []
    for a in coeffs:
        # maintain sum(cs_i coeffs_i) = g
        if a == 0:
            cs.append(0)
            continue
        if g == 0:
            g, cs = abs(a), [0] * len(cs) + [1 if a > 0 else -1]
            continue
        d, x, y = _egcd(g, a)
        cs = [x * c for c in cs] + [y]
        g = d
    if g == 0:
        return [0] * len(coeffs) if target == 0 else None
    if target % g:
        return None
    k = target // g
    return [k * c for c in cs]


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a > 0 else -1, 0)
    q, r = divmod(a, b)
    d, x, y = _egcd(b, r)
    return d, y, x - q * y


def _solve_isotropic(M, t, w, bound=12):
    """y with y.t = 0, y^2 = 0 and (y, w) = s, where w = w' + s t.

    y = a e_j + b f_j + z + sum c_i u_i: (e_j, f_j) spans a block U(m_j), z
    lies in the definite part D (basis vectors outside the blocks and t) and
    the u_i are isotropic basis vectors taken one from each other block, so
    y^2 = 2 m_j a b + z^2 and the pairing condition is linear in the c_i.
    """
    from itertools import product
    from .enumerate import short_vectors
    G = M.matrix()
    n = M.rank
    s = -M.pair(w, [int(k == t) for k in range(n)]) // 2
    wG = la.vec_mat(list(w), G)
    blocks = _hyperbolic_blocks(G)
    in_blocks = {i for blk in blocks for i in blk}
    D = [k for k in range(n) if k not in in_blocks and k != t]

    def candidates():
        yield [0] * len(D), 0
        if D:
            GD = GramLattice([[G[i][j] for j in D] for i in D])
            census = short_vectors(GD, bound, keep=True)
            for norm in sorted(census.vectors, key=abs):
                for v in census.vectors[norm]:
                    yield list(v), norm

    def embed(zd):
        y = [0] * n
        for k, c in zip(D, zd):
            y[k] = c
        return y

    for zd, zz in candidates():
        z = embed(zd)
        rhs = s - la.dot(z, wG)
        options = []
        if zz == 0:
            options.append((None, 0, 0))
        for j, (ie, jf) in enumerate(blocks):
            m = G[ie][jf]
            if zz and (-zz) % (2 * m) == 0:
                k = -zz // (2 * m)
                for d in range(1, abs(k) + 1):
                    if k % d == 0:
                        for a in (d, -d):
                            options.append((j, a, k // a))
        for j, a, b in options:
            others = [blk for i, blk in enumerate(blocks) if i != j]
            base = list(z)
            r = rhs
            if j is not None:
                ie, jf = blocks[j]
                base[ie] += a
                base[jf] += b
                r -= a * wG[ie] + b * wG[jf]
            for choice in product((0, 1), repeat=len(others)):
                idx = [blk[c] for blk, c in zip(others, choice)]
                sol = _linear_solution([wG[i] for i in idx], r)
                if sol is not None:
                    y = list(base)
                    for i, c in zip(idx, sol):
                        y[i] += c
                    return y
    return None


@dataclass
class ExceptionalVector:
    p: list
    norm: int
    divisibility: int
    pairing: int
    divisibility_in_L: int
    route: str

    def to_json(self):
        return dict(self.__dict__)


def _l2_divisibility(name, M, p):
    """Divisibility of p in L_2 under the fixed embedding M -> L_2."""
    if name == "M2":
        # E8(-2) -> E8(-1)^2 diagonally; U^3 and (-2) map identically
        L = make_named("L_n", n=2)
        img = [0] * 6 + [0] * 16 + [0]
        for i in range(8):
            img[6 + i] += p[i]
            img[14 + i] += p[i]
        for i in range(6):
            img[i] = p[8 + i]
        img[22] = p[14]
        if L.norm(img) != M.norm(p):
            raise AssertionError("embedding of M2 into L_2 is not isometric")
        return divisibility(L, img)
    # odd-determinant part glued: the class of p/2 lies in the 2-part of A_M,
    # which is the order-2 part carried by the (-2) summand and maps into A_L
    data = discriminant_module(M)
    two_part = 1
    for d in data.invariant_factors():
        while d % 2 == 0:
            two_part *= 2
            d //= 2
    if two_part != 2:
        raise ClassificationError("2-part of A_%s is not Z/2" % name)
    return divisibility(M, p)


def orthogonal_exceptional_vector(name, w, bound=12):
    """p in M with p^2 = -2, div(p) = 2 and (p, w) = 0, for isotropic primitive w."""
    if name not in ("M2", "M3", "M5"):
        raise ClassificationError("supported lattices: M2, M3, M5")
    M = make_named(name)
    w = [int(x) for x in w]
    if M.norm(w) != 0:
        raise ClassificationError("w is not isotropic")
    if gcd(*w) != 1:
        raise ClassificationError("w is not primitive")
    t = _summand_generator(M)
    pairs = _hyperbolic_pairs(M)
    route = "direct search"
    g = None
    w0 = w
    if len(pairs) >= 2:
        try:
            _, chain, g = transvection_normal_form(M, w, pairs[:2])
            w0 = g.apply(list(w))
            route = "Eichler reduction (%d transvections) then search" % len(chain)
        except IsometryError:
            g, w0 = None, w
    y = _solve_isotropic(M, t, w0, bound)
    if y is None:
        raise ClassificationError("no exceptional vector found up to norm bound %d" % bound)
    p0 = [2 * c for c in y]
    p0[t] += 1
    if g is not None:
        from .isometry import invert
        p = invert(g).apply(p0)
    else:
        p = p0
    res = ExceptionalVector(p, M.norm(p), divisibility(M, p), M.pair(p, w),
                            _l2_divisibility(name, M, p), route)
    if (res.norm, res.divisibility, res.pairing) != (-2, 2, 0):
        raise AssertionError("exceptional vector fails its postconditions: %s" % res)
    return res
