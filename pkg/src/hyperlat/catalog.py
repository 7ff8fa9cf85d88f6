"""Named lattices with checkable published properties.

Entries are built in one of three ways: an explicit Gram matrix, an assembly
of standard summands, or as the co-invariant lattice of a fixed witness
isometry of a Niemeier lattice (or of the Leech lattice through a holy pair).
"""
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg as la
from . import printed
from .cyclotomic import CyclotomicField, CyclotomicNumber, euler_phi
from .disc_form import discriminant_module
from .lattice_core import (GramLattice, LatticeError, change_basis, direct_sum,
                           rescale, signature)


class CatalogError(LatticeError):
    pass


# -- standard summands --------------------------------------------------------

def cartan(kind, n):
    """Positive definite Cartan matrix of A_n, D_n or E_6, E_7, E_8."""
    from .niemeier import _cartan_from_edges, _e_edges
    if kind == "A":
        if n < 1:
            raise CatalogError("A_n needs n >= 1")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "D":
        if n < 4:
            raise CatalogError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif kind == "E":
        if n not in (6, 7, 8):
            raise CatalogError("E_n exists for n = 6, 7, 8 only")
        edges = _e_edges(n)
    else:
        raise CatalogError("unknown root type %r" % kind)
    return _cartan_from_edges(n, edges)


U_GRAM = [[0, 1], [1, 0]]

_TOKEN = re.compile(r"^(?:(?P<root>[ADE])(?P<n>\d+)|(?P<U>U)|\((?P<k>-?\d+)\))"
                    r"(?:\((?P<scale>-?\d+)\))?(?:\^(?P<power>\d+))?$")


def parse_summand(token):
    """One summand such as 'E8(-1)^2', 'U(3)', 'A2' or '(-2)'."""
    m = _TOKEN.match(token.strip().replace(" ", ""))
    if not m:
        raise CatalogError("cannot parse lattice summand %r" % token)
    if m.group("root"):
        G = cartan(m.group("root"), int(m.group("n")))
    elif m.group("U"):
        G = U_GRAM
    else:
        k = int(m.group("k"))
        if k == 0:
            raise CatalogError("rank-one lattice (0) is degenerate")
        G = [[k]]
    L = GramLattice(G)
    if m.group("scale"):
        L = rescale(L, int(m.group("scale")))
    power = int(m.group("power") or 1)
    if power < 1:
        raise CatalogError("power must be positive")
    return direct_sum(*([L] * power))


def parse_formula(text, name=None):
    """Direct sum of '+'-separated summands, e.g. 'U^3+E8(-1)^2+(-2)'."""
    parts = [parse_summand(t) for t in text.replace("⊕", "+").split("+") if t.strip()]
    if not parts:
        raise CatalogError("empty lattice formula")
    return direct_sum(*parts, name=name or text)


# -- claims and validation ----------------------------------------------------

@dataclass(frozen=True)
class Claims:
    """Published properties of a named lattice."""
    rank: int = None
    det: int = None               # absolute value
    disc: tuple = None            # invariant factors of the discriminant group
    signature: tuple = None
    even: bool = True
    rootless: bool = None
    source: str = ""

    def to_json(self):
        out = {k: v for k, v in self.__dict__.items() if v is not None}
        if "disc" in out:
            out["disc"] = list(out["disc"])
        if "signature" in out:
            out["signature"] = list(out["signature"])
        return out


def _matrix_problems(M):
    """Structural problems of a candidate Gram matrix, before building it."""
    n = len(M)
    if any(len(r) != n for r in M):
        bad = [i for i, r in enumerate(M) if len(r) != n]
        return ["row length differs from %d in rows %s" % (n, bad)]
    out = []
    asym = [(i, j) for i in range(n) for j in range(i + 1, n) if M[i][j] != M[j][i]]
    if asym:
        out.append("not symmetric at %d entries, first %s" % (len(asym), asym[0]))
    if any(M[i][i] % 2 for i in range(n)):
        out.append("odd diagonal entry")
    return out


def validate_claims(L, claims):
    """List of (claim, expected, actual) triples that fail for the lattice L."""
    bad = []
    if claims.rank is not None and L.rank != claims.rank:
        bad.append(("rank", claims.rank, L.rank))
    if claims.det is not None and abs(L.det) != claims.det:
        bad.append(("det", claims.det, abs(L.det)))
    if claims.even and not L.is_even:
        bad.append(("even", True, False))
    sig = signature(L)
    if claims.signature is not None and tuple(sig) != tuple(claims.signature):
        bad.append(("signature", tuple(claims.signature), tuple(sig)))
    if claims.disc is not None:
        got = tuple(discriminant_module(L).invariant_factors())
        if got != tuple(claims.disc):
            bad.append(("disc", tuple(claims.disc), got))
    if claims.rootless is not None:
        if 0 in sig:
            from .enumerate import is_rootless
            got = is_rootless(L)
            if got != claims.rootless:
                bad.append(("rootless", claims.rootless, got))
        else:
            bad.append(("rootless", claims.rootless, "indefinite"))
    return bad


def validate_matrix(M, claims):
    """Validate a printed matrix; returns (lattice or None, list of problems)."""
    problems = _matrix_problems(M)
    if problems:
        return None, problems
    try:
        L = GramLattice(M)
    except LatticeError as exc:
        return None, [str(exc)]
    return L, ["%s: expected %s, got %s" % t for t in validate_claims(L, claims)]


# -- constructive witnesses ---------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """A fixed isometry of a Niemeier lattice or of a holy pair."""
    target: str                 # "N12" or "holy:N20"
    perm: tuple = None
    glue: tuple = None
    diagram: tuple = ()
    side: str = "N"             # which lattice of a holy pair to act on

    def spec(self):
        from .isometry import IsometrySpec
        return IsometrySpec(list(self.perm) if self.perm is not None else None,
                            list(self.diagram), list(self.glue) if self.glue is not None else None)

    def to_json(self):
        return {"target": self.target, "perm": self.perm and list(self.perm),
                "glue": self.glue and list(self.glue), "diagram": [list(d) for d in self.diagram],
                "side": self.side}


def _n23_perm():
    # fixes the first coordinate (infinity) and doubles the others mod 23
    return tuple([0] + [(2 * k) % 23 + 1 for k in range(23)])


WITNESSES = {
    "K12(-2)": Witness("N12", perm=(0, 2, 3, 1)),
    "K12(-2)/N18": Witness("N18", perm=(0, 2, 3, 1, 4), diagram=((4, "gamma"),)),
    "S3exo": Witness("N3", perm=(1, 2, 0)),
    "S5K3": Witness("holy:N20", glue=(0, 0, 1, 2, 3, 4), side="Leech"),
    "S5exo": Witness("holy:N20", glue=(0, 1, 1, 1, 1, 1), side="Leech"),
    "S7K3": Witness("holy:N17", glue=(2, 1, 3, 0), side="Leech"),
    "S11": Witness("holy:N23", perm=_n23_perm(), side="Leech"),
    "W(-1)": Witness("holy:N22", glue=(0, 0, 0, 1, 1, 1, 2, 1, 1, 2, 2, 1), side="Leech"),
}


@lru_cache(maxsize=None)
def witness_isometry(w):
    """(isometry, embedded lattice) for a witness."""
    from .isometry import from_spec
    from .niemeier import build_niemeier, holy_pair
    if w.target.startswith("holy:"):
        P = holy_pair(w.target.split(":", 1)[1])
        gN, gL = from_spec(P, w.spec())
        return (gL, P.Leech) if w.side == "Leech" else (gN, P.N)
    E = _niemeier(w.target)
    return from_spec(E, w.spec()), E


@lru_cache(maxsize=None)
def _niemeier(name):
    from .niemeier import build_niemeier
    return build_niemeier(name)


def reduced(L, name=None):
    """LLL-reduced basis of a definite lattice (sign preserved)."""
    pos, neg, _ = la.inertia(L.gram)
    if pos and neg:
        return L.renamed(name) if name else L
    s = -1 if neg else 1
    T = la.lll_gram([[s * x for x in r] for r in L.gram])
    out = change_basis(L, T)
    return GramLattice(out.gram, name=name or L.name)


@lru_cache(maxsize=None)
def coinvariant_of(key):
    """Co-invariant lattice of the named witness, reduced, with its data."""
    from .isometry import fixed_sublattices
    w = WITNESSES[key]
    g, E = witness_isometry(w)
    fx = fixed_sublattices(g.lattice, [g])
    S = reduced(fx.S.lattice(), name=key)
    return S, g, fx


# -- the catalog ----------------------------------------------------------------

@dataclass
class NamedLatticeEntry:
    name: str
    recipe: str                  # "formula" | "explicit" | "constructive"
    claims: Claims
    description: str = ""
    formula: str = None
    matrix: list = None
    witness: str = None          # key into WITNESSES
    builder: object = None       # callable(**params) for parametrised entries
    params: tuple = ()
    repair: tuple = None         # (row, position, description): a dropped zero

    def to_json(self):
        out = {"name": self.name, "recipe": self.recipe, "claims": self.claims.to_json(),
               "description": self.description}
        if self.formula:
            out["formula"] = self.formula
        if self.witness:
            out["witness"] = WITNESSES[self.witness].to_json()
        if self.params:
            out["params"] = list(self.params)
        return out


def _l_n(n):
    if n < 2:
        raise CatalogError("L_n needs n >= 2")
    return parse_formula("U^3+E8(-1)^2+(%d)" % (2 - 2 * n), name="L_%d" % n)


def _l_kummer(n):
    if n < 1:
        raise CatalogError("L_K needs n >= 1")
    return parse_formula("U^3+(%d)" % (-2 - 2 * n), name="L_K%d" % n)


def _pi_1_25():
    from .niemeier import lattice_from_generators, pi_1_25
    gens, ambient = pi_1_25()
    return lattice_from_generators(gens, ambient, name="Pi_1_25", reduce=False).lattice


def _m7():
    return direct_sum(parse_formula("U(7)"), GramLattice([[4, 1], [1, 2]]),
                      parse_formula("(-2)"), name="M7")


def _entries():
    E = {}

    def add(entry):
        E[entry.name] = entry

    add(NamedLatticeEntry("L_n", "formula", Claims(rank=23),
                          "second cohomology of K3^[n]-type: U^3+E8(-1)^2+(2-2n)",
                          builder=_l_n, params=("n",)))
    add(NamedLatticeEntry("L_K", "formula", Claims(rank=7),
                          "second cohomology of Kummer n-type: U^3+(-2-2n)",
                          builder=_l_kummer, params=("n",)))
    add(NamedLatticeEntry("L_O6", "formula", Claims(rank=8, det=4, signature=(3, 5), disc=(2, 2)),
                          "second cohomology of O'Grady's six-dimensional example",
                          formula="U^3+(-2)^2"))
    add(NamedLatticeEntry("L_O10", "formula", Claims(rank=24, det=3, signature=(3, 21), disc=(3,)),
                          "second cohomology of O'Grady's ten-dimensional example",
                          formula="U^3+E8(-1)^2+A2(-1)"))
    add(NamedLatticeEntry("Mukai", "formula", Claims(rank=24, det=1, signature=(4, 20)),
                          "Mukai lattice U^4+E8(-1)^2", formula="U^4+E8(-1)^2"))
    add(NamedLatticeEntry("M2", "formula", Claims(rank=15, signature=(3, 12), disc=(2,) * 9),
                          "E8(-2)+U^3+(-2)", formula="E8(-2)+U^3+(-2)"))
    add(NamedLatticeEntry("M3", "formula", Claims(rank=11, disc=(3,) * 5 + (6,)),
                          "U+U(3)^2+A2(-1)^2+(-2)", formula="U+U(3)^2+A2(-1)^2+(-2)"))
    add(NamedLatticeEntry("M5", "formula", Claims(rank=7, disc=(5, 5, 5, 10)),
                          "U+U(5)^2+(-2)", formula="U+U(5)^2+(-2)"))
    add(NamedLatticeEntry("M7", "formula", Claims(rank=5, disc=(7, 7, 14)),
                          "U(7)+[[4,1],[1,2]]+(-2), isometric to U+U(7)+(14)",
                          builder=lambda: _m7()))
    add(NamedLatticeEntry("Pi_1_25", "formula", Claims(rank=26, det=1, signature=(1, 25)),
                          "odd-coordinate model of the even unimodular lattice U+E8(-1)^3",
                          builder=lambda: _pi_1_25()))
    add(NamedLatticeEntry("S7K3", "explicit",
                          Claims(rank=18, det=7 ** 3, disc=(7, 7, 7), signature=(0, 18), rootless=True),
                          "co-invariant lattice of an order-7 isometry",
                          matrix=printed.S7K3_PRINTED, witness="S7K3",
                          repair=(13, 11, "row 14 lost the zero in column 12 and was shifted left")))
    add(NamedLatticeEntry("W", "explicit",
                          Claims(rank=18, det=3 ** 5, disc=(3,) * 5, signature=(18, 0), rootless=True),
                          "positive definite rank-18 lattice with (Z/3)^5 discriminant",
                          matrix=printed.W_PRINTED))
    add(NamedLatticeEntry("S11", "explicit",
                          Claims(rank=20, det=121, disc=(11, 11), signature=(0, 20), rootless=True),
                          "co-invariant lattice of an order-11 isometry of N23 and Leech",
                          matrix=printed.S11_PRINTED, witness="S11",
                          repair=(15, 12, "row 16 lost the zero in column 13")))
    add(NamedLatticeEntry("T11_1", "explicit", Claims(rank=3, det=242, signature=(3, 0)),
                          "invariant lattice, first order-11 family", matrix=printed.T11_1_PRINTED))
    add(NamedLatticeEntry("T11_2", "explicit", Claims(rank=3, det=242, signature=(3, 0)),
                          "invariant lattice, second order-11 family", matrix=printed.T11_2_PRINTED))
    add(NamedLatticeEntry("M125", "explicit",
                          Claims(rank=4, det=125, disc=(5, 5, 5), signature=(0, 4)),
                          "rank-4 invariant lattice of a 5C element of the Leech lattice",
                          matrix=printed.M125_PRINTED))
    add(NamedLatticeEntry("M81", "explicit", Claims(rank=4, det=81, signature=(0, 4)),
                          "rank-4 S-lattice with determinant 81", matrix=printed.M81_PRINTED))
    add(NamedLatticeEntry("K12(-2)", "constructive",
                          Claims(rank=12, det=3 ** 6, disc=(3,) * 6, signature=(0, 12), rootless=True),
                          "co-invariant of the order-3 component rotation of N12",
                          witness="K12(-2)"))
    add(NamedLatticeEntry("S5K3", "constructive",
                          Claims(rank=16, det=5 ** 4, disc=(5,) * 4, signature=(0, 16), rootless=True),
                          "co-invariant of a 5B glue translation on the Leech lattice",
                          witness="S5K3"))
    add(NamedLatticeEntry("S5exo", "constructive",
                          Claims(rank=20, det=125, disc=(5, 5, 5), signature=(0, 20), rootless=True),
                          "co-invariant of a 5C glue translation on the Leech lattice",
                          witness="S5exo"))
    add(NamedLatticeEntry("S3exo", "constructive",
                          Claims(rank=16, det=3 ** 8, disc=(3,) * 8, signature=(0, 16), rootless=True),
                          "co-invariant of the cyclic permutation of the three E8 of N3",
                          witness="S3exo"))
    add(NamedLatticeEntry("W(-1)", "constructive",
                          Claims(rank=18, det=3 ** 5, disc=(3,) * 5, signature=(0, 18), rootless=True),
                          "co-invariant of a 3C glue translation on the Leech lattice",
                          witness="W(-1)"))
    return E


CATALOG = _entries()


@dataclass
class Resolved:
    lattice: GramLattice
    entry: NamedLatticeEntry
    status: str                  # "ok" | "repaired" | "transcription-suspect" | "invalid"
    problems: list = field(default_factory=list)
    note: str = ""

    def to_json(self):
        out = self.lattice.to_json()
        out.update({"entry": self.entry.to_json(), "status": self.status})
        if self.problems:
            out["problems"] = self.problems
        if self.note:
            out["note"] = self.note
        return out


def names():
    return sorted(CATALOG)


def get_entry(name):
    if name not in CATALOG:
        raise CatalogError("unknown catalog entry %r" % name)
    return CATALOG[name]


def _call_builder(entry, params):
    unknown = set(params) - set(entry.params)
    if unknown:
        raise CatalogError("unexpected parameters %s for %s" % (sorted(unknown), entry.name))
    missing = [p for p in entry.params if p not in params]
    if missing:
        raise CatalogError("%s needs parameters %s" % (entry.name, missing))
    return entry.builder(**params)


def resolve(name, **params):
    """Build a named lattice and check it against its published claims.

    Explicit matrices that fail validation are flagged transcription-suspect
    and replaced by the constructive definition when one exists.
    """
    if name not in CATALOG:
        try:
            L = parse_formula(name)
        except CatalogError:
            raise CatalogError("unknown catalog entry %r" % name) from None
        entry = NamedLatticeEntry(name, "formula", Claims(even=L.is_even), formula=name)
        return Resolved(L, entry, "ok")
    entry = CATALOG[name]
    if entry.recipe == "explicit":
        L, problems = validate_matrix(entry.matrix, entry.claims)
        if not problems:
            return Resolved(L.renamed(name), entry, "ok")
        if entry.repair is not None:
            R, still = validate_matrix(repaired_matrix(entry), entry.claims)
            if not still:
                return Resolved(R.renamed(name), entry, "repaired", problems, entry.repair[2])
        if entry.witness is None:
            raise CatalogError("printed matrix for %s fails validation: %s" % (name, problems))
        S = coinvariant_of(entry.witness)[0]
        return Resolved(S.renamed(name), entry, "transcription-suspect", problems,
                        "rebuilt as the co-invariant lattice of witness %s" % entry.witness)
    if entry.recipe == "constructive":
        S = coinvariant_of(entry.witness)[0]
        bad = validate_claims(S, entry.claims)
        status = "ok" if not bad else "invalid"
        return Resolved(S.renamed(name), entry, status, ["%s: expected %s, got %s" % t for t in bad])
    if entry.builder is not None:
        L = _call_builder(entry, params)
    else:
        if params:
            raise CatalogError("%s takes no parameters" % name)
        L = parse_formula(entry.formula, name=name)
    L = L.renamed(L.name or name)
    bad = validate_claims(L, entry.claims)
    return Resolved(L, entry, "ok" if not bad else "invalid",
                    ["%s: expected %s, got %s" % t for t in bad])


def repaired_matrix(entry):
    """The printed matrix with a dropped zero restored in one row."""
    row, pos, _ = entry.repair
    M = [list(r) for r in entry.matrix]
    n = len(M)
    fixed = M[row][:pos] + [0] + M[row][pos:]
    M[row] = fixed[:n]
    return M


def make_named(name, **params):
    """The Gram lattice of a catalog entry or of a summand formula."""
    return resolve(name, **params).lattice


# -- cyclotomic trace lattices -------------------------------------------------

def _as_cyclotomic(F, x):
    if isinstance(x, CyclotomicNumber):
        if x.field != F:
            raise CatalogError("entry lives in a different cyclotomic field")
        return x
    if isinstance(x, (int, Fraction)):
        return F.element([x])
    return F.element(list(x))


def cyclotomic_trace_lattice(p, hermitian_gram):
    """Z-lattice on the basis e_i * w^j from a Hermitian form over Z[w_p].

    The integral form is the average of the Galois conjugates of the
    Hermitian form, (x, y) = (1/phi(p)) * Tr h(x, y).
    """
    if p < 3 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise CatalogError("p must be an odd prime")
    F = CyclotomicField(p)
    H = [[_as_cyclotomic(F, x) for x in row] for row in hermitian_gram]
    k = len(H)
    if any(len(r) != k for r in H):
        raise CatalogError("Hermitian Gram must be square")
    for i in range(k):
        for j in range(k):
            if H[i][j] != H[j][i].conjugate():
                raise CatalogError("Hermitian Gram is not conjugate-symmetric at (%d, %d)" % (i, j))
    d = euler_phi(p)
    zeta = [F.zeta(j) for j in range(p)]
    G = [[None] * (k * d) for _ in range(k * d)]
    for i in range(k):
        for a in range(d):
            for j in range(k):
                for b in range(d):
                    # h(e_i w^a, e_j w^b) = w^(a-b) h_ij
                    val = (zeta[(a - b) % p] * H[i][j]).trace() / d
                    val = Fraction(val)
                    if val.denominator != 1:
                        raise CatalogError("trace form is not integral: entry %s" % val)
                    G[i * d + a][j * d + b] = int(val)
    return GramLattice(G, name="trace lattice over Z[w_%d]" % p)


def omega_action(p, k):
    """Row-convention matrix of multiplication by w_p on the trace lattice basis."""
    d = p - 1
    phi = [1] * p                     # 1 + x + ... + x^(p-1), so w^(p-1) = -(1 + ... + w^(p-2))
    R = la.zeros(k * d, k * d)
    for i in range(k):
        for a in range(d):
            if a + 1 < d:
                R[i * d + a][i * d + a + 1] = 1
            else:
                for b in range(d):
                    R[i * d + a][i * d + b] = -phi[b]
    return R
