"""Batch verification of the tabulated facts the library reproduces.

Each check compares a computed value with an expected one and records the
outcome.  Checks are grouped by topic so a run can be restricted.
"""
import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import linalg as la


@dataclass
class Check:
    id: str
    source: str          # what the expected value is
    status: str          # "pass" | "fail" | "unknown"
    computed: object
    expected: object
    kind: str            # "table" (tabulated value) | "oracle" (independent computation)


@dataclass
class VerificationReport:
    checks: list = field(default_factory=list)

    def add(self, id, source, computed, expected, kind="table", status=None):
        if any(c.id == id for c in self.checks):
            raise ValueError("duplicate check id %r" % id)
        if status is None:
            status = "pass" if computed == expected else "fail"
        self.checks.append(Check(id, source, status, _plain(computed), _plain(expected), kind))

    @property
    def failed(self):
        return [c for c in self.checks if c.status == "fail"]

    def sorted(self):
        return VerificationReport(sorted(self.checks, key=lambda c: c.id))

    def to_json(self):
        return {"checks": [asdict(c) for c in self.checks],
                "summary": {s: sum(1 for c in self.checks if c.status == s)
                            for s in ("pass", "fail", "unknown")}}

    @classmethod
    def from_json(cls, data):
        return cls([Check(**c) for c in data["checks"]])

    def to_text(self):
        lines = []
        for c in self.checks:
            line = "%s: %s" % (c.id, c.status)
            if c.status != "pass":
                line += " (computed %s, expected %s)" % (json.dumps(c.computed), json.dumps(c.expected))
            lines.append(line)
        js = self.to_json()["summary"]
        lines.append("%d pass, %d fail, %d unknown" % (js["pass"], js["fail"], js["unknown"]))
        return "\n".join(lines)


def _plain(x):
    """JSON-ready exact value: Fractions become strings, tuples and sets lists."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_plain(y) for y in x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return _plain(x.to_json())
    if x is None or isinstance(x, (bool, int, str)):
        return x
    return repr(x)


# -- groups -------------------------------------------------------------------------

def check_niemeier(rep):
    from .enumerate import count_roots
    from .niemeier import NIEMEIER_TABLE, build_niemeier, expected_root_count
    for name in sorted(NIEMEIER_TABLE, key=lambda s: int(s[1:])):
        L = build_niemeier(name).lattice
        rep.add("%s unimodular" % name, "even unimodular of rank 24",
                [L.rank, abs(L.det), L.is_even], [24, 1, True])
        rep.add("%s roots" % name, "root count of %s" % NIEMEIER_TABLE[name][0],
                count_roots(L), expected_root_count(name), kind="oracle")


def check_leech(rep):
    from .enumerate import count_roots
    from .niemeier import leech
    for route in ("mod23", "holy:N23", "weyl"):
        L = leech(route).lattice
        rep.add("Leech via %s" % route, "even unimodular rank 24 without roots",
                [L.rank, abs(L.det), L.is_even, count_roots(L)], [24, 1, True, 0])


def check_holy(rep):
    from .niemeier import coxeter_number, holy_pair
    for name in ("N23", "N22", "N20", "N17"):
        h = coxeter_number(name)
        rep.add("holy %s indices" % name, "both indices equal the Coxeter number",
                list(holy_pair(name).indices()), [h, h])


def check_order11(rep):
    from .classification import TABLE_WITNESSES, _row_lattice, same_as_partner
    from .disc_form import discriminant_module
    from .catalog import resolve
    from .enumerate import count_roots, isometry_verdict
    printed = resolve("S11")
    for label, w, _ in TABLE_WITNESSES[11]:
        S, couple = _row_lattice(label, w)
        A = discriminant_module(S)
        rep.add("order 11 %s invariants" % label, "rank 20, |det| 121, l(A) 2, rootless",
                [S.rank, abs(S.det), A.length(), count_roots(S)], [20, 121, 2, 0])
        if w.side == "N":
            rep.add("order 11 %s equals Leech side" % label, "same sublattice of the common span",
                    same_as_partner(w), True)
        status = isometry_verdict(S, printed.lattice, budget=300)[0]
        rep.add("order 11 %s vs printed matrix" % label,
                "isometric or strong-invariant match with the printed matrix (%s)" % printed.status,
                status, "isometric" if status == "isometric" else "invariant-match")


def _invariant_rank(w):
    from .catalog import witness_isometry
    from .isometry import fixed_sublattices
    g, _ = witness_isometry(w)
    return fixed_sublattices(g.lattice, [g]).T.rank


def check_classes(rep):
    from .catalog import Witness
    from .classification import TABLE_WITNESSES
    tw = {lab: w for p in (3, 5, 7) for lab, w, _ in TABLE_WITNESSES[p]}
    rep.add("order 3 glue classes invariant ranks", "weights 12, 6, 9",
            [_invariant_rank(tw[k]) for k in ("3A", "3B", "3C")], [0, 12, 6])
    rep.add("order 5 glue classes invariant ranks", "5A, 5B, 5C",
            [_invariant_rank(tw[k]) for k in ("5A", "5B", "5C")], [0, 8, 4])
    rep.add("order 13 fixed-point free", "holy A12^2 translation",
            _invariant_rank(Witness("holy:N10", glue=(1, 5), side="Leech")), 0)
    rep.add("order 7 co-invariant ranks", "codewords [1216] and [2130]",
            [24 - _invariant_rank(tw[k]) for k in ("[1216]", "[2130]")], [24, 18])


def check_catalog(rep):
    from .catalog import coinvariant_of, make_named, resolve
    from .disc_form import discriminant_module
    from .enumerate import count_roots, isometric
    K = make_named("K12(-2)")
    A = discriminant_module(K)
    rep.add("K12(-2) rank and exponent", "rank 12, nonzero elements of order 3",
            [K.rank, A.exponent()], [12, 3])
    S = make_named("S5K3")
    rep.add("S5K3 discriminant", "rank 16, (Z/5)^4",
            [S.rank, discriminant_module(S).invariant_factors()], [16, [5, 5, 5, 5]])
    _, _, fx = coinvariant_of("S3exo")
    T = fx.T.lattice()
    E83 = make_named("E8(-3)")
    rep.add("S3exo complement is E8(-3)", "invariant lattice of the N3 rotation",
            isometric(T, E83)[0], "isometric")
    W = resolve("W")
    rep.add("W claims", "(Z/3)^5, rank 18, rootless",
            [W.status, W.lattice.rank, discriminant_module(W.lattice).invariant_factors(),
             count_roots(W.lattice)], ["ok", 18, [3] * 5, 0])
    for name in ("S7K3", "S11"):
        r = resolve(name)
        rep.add("%s printed matrix" % name, "validates after restoring a dropped zero",
                r.status, "repaired")


def check_bns(rep):
    from .catalog import make_named
    from .fixed_locus import AutInvariants, bns_dimension
    for (p, a, m), want in (((3, 5, 9), 16), ((7, 3, 3), 9), ((11, 2, 2), 5)):
        rep.add("bns(%d,%d,%d)" % (p, a, m), "fixed-locus cohomology dimension",
                bns_dimension(AutInvariants(p, a, m)), want)
    inv = AutInvariants.from_lattice(3, make_named("K12(-2)"))
    rep.add("bns for K12(-2)", "a computed from the lattice, 27 points",
            [inv.a, inv.m, bns_dimension(inv)], [6, 6, 27])


def check_census(rep):
    from .fixed_locus import census_order3, census_order5, rejected_order3
    got = sorted((p.a, p.total_points, p.k3[0]) for p in census_order3())
    rep.add("order 3 census", "three profiles (a, N, K)", got, [(5, 6, 2), (6, 27, 0), (9, 0, 0)])
    rej = [(a, k) for a, k, n in rejected_order3()]
    rep.add("order 3 root a=4 K=5 rejected", "excluded by N >= 0", (4, 5) in rej, True)
    prof = census_order5()
    rep.add("order 5 census", "unique: a=4, 14 points, no surfaces",
            [len(prof), prof[0].a, prof[0].total_points, list(prof[0].k3), [int(x) for x in prof[0].c2]],
            [1, 4, 14, [0, 0], [0, 0]])


def check_k3(rep):
    from .fixed_locus import k3_census
    got = [k3_census("cyclic", p).counts[p] for p in (2, 3, 5, 7)]
    rep.add("K3 fixed points", "24/(p+1) for p = 2, 3, 5, 7", got, [8, 6, 4, 3])
    rep.add("Z/9 contradiction", "no symplectic Z/9", k3_census("p2", 3).consistent, False)
    rep.add("Z/15 contradiction", "no symplectic Z/15", k3_census("pq", 3, 5).consistent, False)


def check_represent(rep):
    from .classification import COMPLEMENTS, hilbert_embeddability
    from .enumerate import represented_values
    from .lattice_core import GramLattice

    def vals(G):
        return [v for v in represented_values(GramLattice(G), 16, primitive=True) if v % 2 == 0]

    A = vals(COMPLEMENTS["W(-1)"].forms[0])
    rep.add("A2+A2(3) values <= 14", "tabulated set {2, 6, 8, 14}",
            [v for v in A if v <= 14], [2, 6, 8, 14])
    B = vals(COMPLEMENTS["S5exo"].forms[0])
    rep.add("M125(-1) values", "tabulated set {4, 6, 10, 12, 14, 16}", B, [4, 6, 10, 12, 14, 16])
    rep.add("M125(-1) misses 8", "8 not represented", 8 in B, False)
    union = sorted(set().union(*[vals(G) for G in COMPLEMENTS["S11"].forms]))
    rep.add("S11 complements values", "2, 4, ..., 16", union, list(range(2, 17, 2)))
    ok = [v.n for v in hilbert_embeddability("S11") if v.verdict == "yes"]
    rep.add("S11 embeds in L_n", "all n in 2..9", ok, list(range(2, 10)))


def check_t11(rep):
    from .catalog import make_named
    from .enumerate import represents
    got = []
    for name in ("T11_1", "T11_2"):
        T = make_named(name)
        got.append([represents(T, 2, primitive=True) is not None,
                    represents(T, 6, div=2) is not None])
    rep.add("T11 discrimination", "T11_1: norm 2 only; T11_2: norm 6 div 2 only",
            got, [[True, False], [False, True]])


def check_euler(rep):
    from .fixed_locus import divisor_euler_characteristic, vsp_polarization
    a, b = divisor_euler_characteristic(38, 2), divisor_euler_characteristic(108, 2)
    rep.add("chi(38)", "231 <= 1365", [a, a <= 1365], [231, True])
    rep.add("chi(108)", "1596 > 1365", [b, b > 1365], [1596, True])
    rep.add("polarization square", "l^2 = 38", vsp_polarization()["square"], 38)


def check_overlattice(rep):
    from .catalog import make_named
    from .disc_form import unimodular_overlattice
    from .enumerate import isometric
    from .lattice_core import direct_sum
    D8 = make_named("D8")
    over = unimodular_overlattice(D8)
    rep.add("D8 overlattice", "E8", over is not None and isometric(over[0], make_named("E8"))[0],
            "isometric")
    M = make_named("M125")
    over = unimodular_overlattice(direct_sum(M, M))
    rep.add("M125+M125 overlattice", "E8(-1)",
            over is not None and isometric(over[0], make_named("E8(-1)"))[0], "isometric")
    M = make_named("M81")
    rep.add("M81+M81 overlattice", "none", unimodular_overlattice(direct_sum(M, M)), None)


def check_properties(rep, n=100, seed=0):
    from .properties import (eichler_laws, milgram_on_catalog, overlattice_laws,
                             torsion_bounds)
    rng = random.Random(seed)
    for name, fn in (("overlattice laws", overlattice_laws), ("Milgram", milgram_on_catalog),
                     ("Eichler laws", eichler_laws), ("torsion bounds", torsion_bounds)):
        failures = fn(rng, n)
        rep.add("property %s" % name, "%d random instances" % n, failures, [], kind="oracle")


def check_classify(rep):
    from .classification import hilbert_embeddability, prime_coinvariant_table
    for p in (3, 5, 7, 11):
        rows = prime_coinvariant_table(p)
        rep.add("classify p=%d Leech couples" % p, "definite, rootless, trivial action",
                all(r.couple.is_leech_couple for r in rows), True)
        bad = [r.label for r in rows if r.bns_agrees is False]
        rep.add("classify p=%d fixed loci" % p, "bns matches the fixed-locus dimension", bad, [])
    yes = sorted(name for name in ("S3exo", "K12(-2)", "W(-1)", "S5K3", "S5exo", "S7K3", "S11")
                 if hilbert_embeddability(name, [2])[0].verdict == "yes")
    rep.add("embeds in L_2", "the odd-order fourfold rows",
            yes, sorted(["K12(-2)", "W(-1)", "S5K3", "S7K3", "S11"]))


GROUPS = {
    "niemeier": check_niemeier, "leech": check_leech, "holy": check_holy,
    "order11": check_order11, "classes": check_classes, "catalog": check_catalog,
    "bns": check_bns, "census": check_census, "k3": check_k3,
    "represent": check_represent, "t11": check_t11, "euler": check_euler,
    "overlattice": check_overlattice, "properties": check_properties,
    "classify": check_classify,
}


def run(groups=None):
    rep = VerificationReport()
    for g in groups or GROUPS:
        if g not in GROUPS:
            raise KeyError("unknown group %r; choose from %s" % (g, sorted(GROUPS)))
        try:
            GROUPS[g](rep)
        except Exception as exc:            # a crashing group is a failed check
            rep.add("%s error" % g, "group ran to completion", repr(exc), None, status="fail")
    return rep.sorted()
