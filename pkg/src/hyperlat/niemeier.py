"""The 24 Niemeier lattices and three constructions of the Leech lattice.

Every lattice here lives in an explicit rational coordinate space with a
fixed ambient Gram matrix.  All lattices are negative definite.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from . import linalg as la
from .lattice_core import GramLattice, LatticeError


class GlueError(LatticeError):
    pass


# -- root components ----------------------------------------------------------

def _cartan_from_edges(n, edges):
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in edges:
        C[a][b] = C[b][a] = -1
    return C


# Bourbaki numbering, 0-based: chain 1-3-4-...-n with node 2 attached to node 4
def _e_edges(n):
    edges = [(0, 2), (1, 3), (2, 3)]
    for k in range(3, n - 1):
        edges.append((k, k + 1))
    return edges


@dataclass(frozen=True)
class RootComponent:
    kind: str
    n: int

    @property
    def name(self):
        return "%s%d" % (self.kind, self.n)

    @property
    def dim(self):
        """Ambient dimension of the coordinate model."""
        return self.n + 1 if self.kind == "A" else self.n

    def ambient_gram(self):
        """Negative ambient Gram matrix of the coordinate model."""
        if self.kind in "AD":
            return [[-1 if i == j else 0 for j in range(self.dim)] for i in range(self.dim)]
        C = _cartan_from_edges(self.n, _e_edges(self.n))
        return [[-x for x in r] for r in C]

    def simple_roots(self):
        d = self.dim
        out = []
        if self.kind == "A":
            for j in range(self.n):
                v = [0] * d
                v[j], v[j + 1] = -1, 1
                out.append(v)
        elif self.kind == "D":
            for j in range(self.n - 1):
                v = [0] * d
                v[j], v[j + 1] = 1, -1
                out.append(v)
            v = [0] * d
            v[-2] = v[-1] = 1
            out.append(v)
        else:
            out = [[int(i == j) for j in range(d)] for i in range(d)]
        return out

    @property
    def coxeter(self):
        if self.kind == "A":
            return self.n + 1
        if self.kind == "D":
            return 2 * self.n - 2
        return {6: 12, 7: 18, 8: 30}[self.n]

    @property
    def root_count(self):
        if self.kind == "A":
            return self.n * (self.n + 1)
        if self.kind == "D":
            return 2 * self.n * (self.n - 1)
        return {6: 72, 7: 126, 8: 240}[self.n]

    @property
    def discriminant_order(self):
        if self.kind == "A":
            return self.n + 1
        if self.kind == "D":
            return 4
        return {6: 3, 7: 2, 8: 1}[self.n]

    def labels(self):
        if self.kind == "A":
            return list(range(self.n + 1))
        if self.kind == "D":
            return [0, 1, 2, 3]
        return list(range(self.discriminant_order))

    def glue_vector(self, label):
        """Minimal coset representative of the dual class with this label."""
        if label not in self.labels():
            raise GlueError("invalid glue label %r for %s" % (label, self.name))
        d = self.dim
        if label == 0:
            return [Fraction(0)] * d
        if self.kind == "A":
            h = self.n + 1
            j = label
            return [Fraction(j, h)] * (h - j) + [Fraction(-(h - j), h)] * j
        if self.kind == "D":
            half = Fraction(1, 2)
            if label == 1:
                return [half] * d
            if label == 2:
                return [Fraction(0)] * (d - 1) + [Fraction(1)]
            return [half] * (d - 1) + [-half]
        # E6: labels 1, 2 are the fundamental weights w1, w6; E7: label 1 is w7
        C = _cartan_from_edges(self.n, _e_edges(self.n))
        inv = la.inverse(C)
        if self.n == 6:
            return list(inv[0] if label == 1 else inv[5])
        if self.n == 7:
            return list(inv[6])
        raise GlueError("E8 has no nonzero glue")

    def add_labels(self, a, b):
        """Label of the sum of two glue classes."""
        if self.kind == "A":
            return (a + b) % (self.n + 1)
        if self.kind == "D":
            if self.n % 2 == 0:
                return a ^ b  # Klein four-group: 1 + 2 = 3
            # cyclic of order 4 generated by 1: 1 -> 1, 2 -> 2, 3 -> 3
            return (a + b) % 4
        return (a + b) % self.discriminant_order

    def extended_root(self):
        """Negative of the highest root, for A_n: (1, 0, ..., 0, -1)."""
        if self.kind != "A":
            raise GlueError("extended roots only for A_n")
        v = [0] * self.dim
        v[0], v[-1] = 1, -1
        return v


def parse_components(spec):
    """'A2^12' / 'D16E8' style strings into RootComponent lists."""
    out = []
    i = 0
    while i < len(spec):
        kind = spec[i]
        j = i + 1
        while j < len(spec) and spec[j].isdigit():
            j += 1
        if kind not in "ADE" or j == i + 1:
            raise LatticeError("cannot parse root system %r at %r" % (spec, spec[i:]))
        n = int(spec[i + 1:j])
        if (kind == "D" and n < 4) or (kind == "E" and n not in (6, 7, 8)) or n < 1:
            raise LatticeError("no root system %s%d" % (kind, n))
        mult = 1
        if j < len(spec) and spec[j] == "^":
            k = j + 1
            while k < len(spec) and spec[k].isdigit():
                k += 1
            mult = int(spec[j + 1:k])
            j = k
        out += [RootComponent(kind, n)] * mult
        i = j
    return out


NIEMEIER_TABLE = {
    "N1": ("D24", ["1"], 46),
    "N2": ("D16E8", ["10"], 30),
    "N3": ("E8^3", ["000"], 30),
    "N4": ("A24", ["5"], 25),
    "N5": ("D12^2", ["12", "21"], 22),
    "N6": ("A17E7", ["31"], 18),
    "N7": ("D10E7^2", ["110", "301"], 18),
    "N8": ("A15D9", ["21"], 16),
    "N9": ("D8^3", ["(122)"], 14),
    "N10": ("A12^2", ["15"], 13),
    "N11": ("A11D7E6", ["111"], 12),
    "N12": ("E6^4", ["1(012)"], 12),
    "N13": ("A9^2D6", ["240", "501", "053"], 10),
    "N14": ("D6^4", ["even-perm 0123"], 10),
    "N15": ("A8^3", ["(114)"], 9),
    "N16": ("A7^2D5^2", ["1112", "1721"], 8),
    "N17": ("A6^4", ["1(216)"], 7),
    "N18": ("A5^4D4", ["2(024)0", "33001", "30302", "30033"], 6),
    "N19": ("D4^6", ["111111", "0(02332)"], 6),
    "N20": ("A4^6", ["1(01441)"], 5),
    "N21": ("A3^8", ["3(2001011)"], 4),
    "N22": ("A2^12", ["2(11211122212)"], 3),
    "N23": ("A1^24", ["1(00000101001100110101111)"], 2),
}

ROOT_COUNTS = {"N23": 48, "N22": 72, "N3": 720}


def expand_codeword(word):
    """Expand the Table notation: '( )' is replaced by all its cyclic shifts."""
    if word.startswith("even-perm"):
        digits = [int(c) for c in word.split()[1]]
        out = []
        for p in permutations(range(len(digits))):
            inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
            if inv % 2 == 0:
                out.append(tuple(digits[k] for k in p))
        return out
    if "(" not in word:
        return [tuple(int(c) for c in word)]
    a, rest = word.split("(")
    block, b = rest.split(")")
    out = []
    for s in range(len(block)):
        shifted = block[s:] + block[:s]
        out.append(tuple(int(c) for c in a + shifted + b))
    return out


# the D4^6 glue code is linear over F4 = {0, 1, 2, 3}; scalar
# multiplication permutes the three nonzero labels cyclically
F4_LINEAR = {"N19"}


def glue_generators(name):
    words = []
    for w in NIEMEIER_TABLE[name][1]:
        words += expand_codeword(w)
    if name in F4_LINEAR:
        rot = {0: 0, 1: 2, 2: 3, 3: 1}
        extra = []
        for w in words:
            w1 = tuple(rot[x] for x in w)
            extra += [w1, tuple(rot[x] for x in w1)]
        words += extra
    return words


def glue_group(components, generators):
    zero = tuple(0 for _ in components)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = tuple(c.add_labels(a, b) for c, a, b in zip(components, x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- embedded lattices ----------------------------------------------------------

@dataclass
class EmbeddedLattice:
    """A lattice spanned by rational rows inside a space with a fixed Gram."""
    basis: list                 # rational rows
    ambient: list               # ambient Gram (integers or Fractions)
    name: str = None
    components: list = field(default_factory=list)
    offsets: list = field(default_factory=list)
    glue: set = None
    _lattice: GramLattice = None

    @property
    def lattice(self):
        if self._lattice is None:
            self._lattice = GramLattice(_gram(self.basis, self.ambient), name=self.name)
        return self._lattice

    @property
    def rank(self):
        return len(self.basis)

    def coordinates(self, v):
        """Integer coordinates of an ambient vector in the basis (ValueError if outside)."""
        x = la.solve_left(self.basis, v)
        if any(c.denominator != 1 for c in x):
            raise ValueError("vector is not in the lattice")
        return [int(c) for c in x]

    def contains(self, v):
        try:
            self.coordinates(v)
            return True
        except ValueError:
            return False

    def isometry_matrix(self, P):
        """Matrix (basis coordinates, row convention) of the ambient map x -> x P."""
        rows = []
        for b in self.basis:
            rows.append(self.coordinates(la.vec_mat(b, P)))
        return rows

    def vectors(self, coords_rows):
        return [la.vec_mat(list(c), self.basis) for c in coords_rows]


def _gram(basis, ambient):
    den_b, B = la.scale_to_integers(basis)
    den_a, A = la.scale_to_integers(ambient)
    G = la.congruence(B, A)
    d = den_b * den_b * den_a
    out = []
    for row in G:
        r = []
        for x in row:
            if x % d:
                raise LatticeError("Gram matrix is not integral")
            r.append(x // d)
        out.append(r)
    return out


def lattice_from_generators(gens, ambient, name=None, reduce=True):
    """HNF basis of the Z-span of rational generators, optionally LLL-reduced."""
    den, ints = la.scale_to_integers(gens)
    H = la.IncrementalHNF(len(ints[0]), ints).basis()
    basis = [[Fraction(x, den) for x in r] for r in H]
    if reduce:
        basis = reduce_basis(basis, ambient)
    return EmbeddedLattice(basis, ambient, name=name)


def reduce_basis(basis, ambient):
    G = _gram(basis, ambient)
    pos, neg, _ = la.inertia(G)
    if pos and neg:
        return basis
    sign = -1 if neg else 1
    T = la.lll_gram([[sign * x for x in r] for r in G])
    return [la.vec_mat(t, basis) for t in T]


def block_diagonal(blocks):
    n = sum(len(b) for b in blocks)
    M = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                M[off + i][off + j] = b[i][j]
        off += len(b)
    return M


def _embed(v, offset, total):
    out = [Fraction(0)] * total
    for i, x in enumerate(v):
        out[offset + i] = Fraction(x)
    return out


def component_layout(components):
    offsets = []
    off = 0
    for c in components:
        offsets.append(off)
        off += c.dim
    return offsets, off


def check_glue_code(components, group):
    """Glue group must be isotropic with order^2 = prod |A_i|."""
    total = 1
    for c in components:
        total *= c.discriminant_order
    if len(group) ** 2 != total:
        raise GlueError("bad glue code: order %d, expected %d" % (len(group), round(total ** 0.5)))


def build_niemeier(name, reduce=True):
    if name not in NIEMEIER_TABLE:
        raise KeyError("unknown Niemeier lattice %r" % name)
    comps = parse_components(NIEMEIER_TABLE[name][0])
    gens_words = glue_generators(name)
    group = glue_group(comps, gens_words)
    check_glue_code(comps, group)
    offsets, total = component_layout(comps)
    ambient = block_diagonal([c.ambient_gram() for c in comps])
    gens = []
    for c, off in zip(comps, offsets):
        for r in c.simple_roots():
            gens.append(_embed(r, off, total))
    for w in gens_words:
        v = [Fraction(0)] * total
        for c, off, lab in zip(comps, offsets, w):
            g = c.glue_vector(lab)
            for i, x in enumerate(g):
                v[off + i] += x
        gens.append(v)
    E = lattice_from_generators(gens, ambient, name=name, reduce=reduce)
    E.components = comps
    E.offsets = offsets
    E.glue = group
    L = E.lattice
    if L.rank != 24 or abs(L.det) != 1 or not L.is_even:
        raise GlueError("bad glue code: result is not even unimodular of rank 24")
    return E


def expected_root_count(name):
    return sum(c.root_count for c in parse_components(NIEMEIER_TABLE[name][0]))


def coxeter_number(name):
    return NIEMEIER_TABLE[name][2]


# -- Leech lattice ---------------------------------------------------------------

QR23 = sorted({(x * x) % 23 for x in range(1, 23)})


def _mod23_index(w):
    """Coordinate index in R^W: infinity is 0, residue k is k + 1."""
    return 0 if w == "inf" else w + 1


def _translate_sets():
    Q = [0] + QR23
    sets = [[(q + w) % 23 for q in Q] for w in range(23)]
    # image of Q under x -> -1/x, the translate "by infinity"
    inv = {}
    for x in range(1, 23):
        inv[x] = (-pow(x, -1, 23)) % 23
    imgs = ["inf"] + [inv[q] for q in QR23]
    return sets, imgs


def leech_mod23(with_infinity_translate=True):
    """Leech lattice in R^24 with ambient Gram -(1/8) I, integer coordinates."""
    ambient = [[Fraction(-1, 8) if i == j else 0 for j in range(24)] for i in range(24)]
    sets, inf_set = _translate_sets()
    gens = []
    for S in sets + ([inf_set] if with_infinity_translate else []):
        v = [0] * 24
        for w in S:
            v[_mod23_index(w)] = 2
        gens.append(v)
    gens.append([-3] + [1] * 23)
    for i in range(24):
        for j in range(i + 1, 24):
            for s in (4, -4):
                v = [0] * 24
                v[i], v[j] = 4, s
                gens.append(v)
    E = lattice_from_generators([[Fraction(x) for x in g] for g in gens], ambient, name="Leech(mod23)")
    return E


def pi_1_25():
    """Generators of the even unimodular lattice of signature (1, 25)."""
    n = 26
    gens = []
    v = [0] * n
    v[0], v[1] = 1, 1
    gens.append(v)
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        gens.append(v)
    gens.append([Fraction(-1, 2)] + [Fraction(1, 2)] * 25)
    ambient = [[(1 if i == 0 else -1) if i == j else 0 for j in range(n)] for i in range(n)]
    return [[Fraction(x) for x in g] for g in gens], ambient


def weyl_vector():
    return [70] + list(range(25))


def leech_weyl_quotient(w=None):
    """(w-perp in the (1,25) lattice) / w for a primitive isotropic w."""
    w = [Fraction(x) for x in (w or weyl_vector())]
    gens, ambient = pi_1_25()
    Pi = lattice_from_generators(gens, ambient, reduce=False)
    if la.bilinear(w, ambient, w) != 0:
        raise LatticeError("vector is not isotropic")
    cw = Pi.coordinates(w)
    G = Pi.lattice.matrix()
    pair = la.vec_mat(cw, G)
    K = la.integer_left_kernel([[x] for x in pair])           # w-perp, coordinates
    cK = [int(c) for c in la.solve_left(K, cw)]               # w in the kernel basis
    _, U, _ = la.hnf_with_transform([[c] for c in cK])
    W = [[int(x) for x in r] for r in la.transpose(la.inverse(U))]
    if W[0] != cK and W[0] != [-c for c in cK]:
        raise LatticeError("could not complete w to a basis")
    rest = la.mat_mul(W[1:], K)                               # Pi coordinates
    basis = [la.vec_mat(r, Pi.basis) for r in rest]
    basis = reduce_basis(basis, ambient)
    E = EmbeddedLattice(basis, ambient, name="Leech(weyl)")
    return E


# -- holy construction ---------------------------------------------------------

def holy_g(h, i):
    """g_i: the cyclic shift by i of g_0 = (k - n/2)/h, k = 0..n."""
    n = h - 1
    g0 = [Fraction(2 * k - n, 2 * h) for k in range(h)]
    return [g0[(k + i) % h] for k in range(h)]


def extended_roots(h):
    """f_0 = (1, 0, .., 0, -1) and f_j = -e_j + e_{j+1}; they sum to zero."""
    out = []
    for j in range(h):
        v = [0] * h
        if j == 0:
            v[0], v[-1] = 1, -1
        else:
            v[j - 1], v[j] = -1, 1
        out.append(v)
    return out


@dataclass
class HolyPair:
    name: str
    h: int
    m: int
    N: EmbeddedLattice
    Leech: EmbeddedLattice
    glue: list
    ambient: list

    def translation_matrix(self, t):
        """Ambient permutation matrix of the glue translation h_w -> h_{w+t}."""
        h, m = self.h, self.m
        D = h * m
        P = [[0] * D for _ in range(D)]
        for j in range(m):
            for k in range(h):
                # (x P)[j, k] = x[j, (k + t_j) mod h]
                P[j * h + (k + t[j]) % h][j * h + k] = 1
        return P

    def permutation_matrix(self, sigma):
        """Ambient matrix moving component i to component sigma[i]."""
        h, m = self.h, self.m
        D = h * m
        P = [[0] * D for _ in range(D)]
        for i in range(m):
            for k in range(h):
                P[i * h + k][sigma[i] * h + k] = 1
        return P

    def intersection(self):
        """N intersected with the Leech copy, as an embedded lattice."""
        BN, BL = self.N.basis, self.Leech.basis
        den, ints = la.scale_to_integers(BN + BL)
        K = la.integer_left_kernel(ints)
        rows = [la.vec_mat([Fraction(c) for c in k[:len(BN)]], BN) for k in K]
        return EmbeddedLattice(reduce_basis(rows, self.ambient), self.ambient,
                               name="%s-cap-Leech" % self.name)

    def indices(self):
        """([N : N cap L], [L : N cap L]) from Gram determinants."""
        I = self.intersection().lattice
        dI = abs(I.det)
        dN, dL = abs(self.N.lattice.det), abs(self.Leech.lattice.det)
        iN, iL = _exact_sqrt(dI // dN), _exact_sqrt(dI // dL)
        return iN, iL


def _exact_sqrt(x):
    from math import isqrt
    r = isqrt(x)
    if r * r != x:
        raise ValueError("index is not an integer")
    return r


HOLY_SUPPORTED = ("N4", "N10", "N15", "N17", "N20", "N21", "N22", "N23")


@lru_cache(maxsize=None)
def holy_pair(name):
    if name not in NIEMEIER_TABLE:
        raise KeyError(name)
    comps = parse_components(NIEMEIER_TABLE[name][0])
    if any(c.kind != "A" for c in comps) or len({c.n for c in comps}) != 1:
        raise LatticeError("holy construction implemented for pure A-type only")
    h = comps[0].n + 1
    m = len(comps)
    D = h * m
    ambient = [[-1 if i == j else 0 for j in range(D)] for i in range(D)]
    words = glue_generators(name)
    group = sorted(glue_group(comps, words))
    check_glue_code(comps, group)
    roots = []
    for j in range(m):
        for f in extended_roots(h):
            roots.append(_embed(f, j * h, D))
    hw = {}
    for w in group:
        v = []
        for lab in w:
            v += holy_g(h, lab)
        hw[w] = v
    h0 = hw[tuple(0 for _ in comps)]
    n_gens = roots + [[a - b for a, b in zip(hw[w], h0)] for w in words]
    l_gens = [[a - b for a, b in zip(r, h0)] for r in roots]
    l_gens += [[a - b for a, b in zip(hw[w], h0)] for w in group]
    N = lattice_from_generators(n_gens, ambient, name=name + "(holy)")
    Lam = lattice_from_generators(l_gens, ambient, name="Leech(holy %s)" % name)
    for E in (N, Lam):
        L = E.lattice
        if L.rank != 24 or abs(L.det) != 1 or not L.is_even:
            raise LatticeError("holy construction failed for %s" % name)
    N.components = comps
    N.offsets = [j * h for j in range(m)]
    N.glue = set(group)
    return HolyPair(name, h, m, N, Lam, group, ambient)


def leech(route="mod23"):
    """The Leech lattice by one of the routes mod23, weyl, holy:<N>."""
    if route == "mod23":
        return leech_mod23()
    if route in ("weyl", "weyl_quotient"):
        return leech_weyl_quotient()
    if route.startswith("holy"):
        name = route.split(":", 1)[1] if ":" in route else "N23"
        return holy_pair(name).Leech
    raise ValueError("unknown route %r" % route)


def verify_leech(E):
    """Even, unimodular, rank 24, rootless; raise with a witness root otherwise."""
    from .enumerate import vectors_of_norm
    L = E.lattice
    if L.rank != 24 or abs(L.det) != 1 or not L.is_even:
        raise LatticeError("not Leech: rank %d det %d even %s" % (L.rank, L.det, L.is_even))
    roots = vectors_of_norm(L, -2)
    if roots:
        raise LatticeError("not Leech: root %s" % (roots[0],))
    return True
