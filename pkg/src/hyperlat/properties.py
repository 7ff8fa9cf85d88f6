"""Randomized law checks shared by the batch runner.

Each function draws instances from a seeded random.Random and returns a list
of failure descriptions (empty when every instance satisfies the law).
"""
from . import linalg as la
from .lattice_core import (GramLattice, change_basis, direct_sum, orthogonal_complement,
                           quotient_invariants, random_unimodular, rescale)

_BLOCKS = ([[2]], [[2, 1], [1, 2]], [[2, -1], [-1, 2]], [[4, 1], [1, 2]], [[0, 1], [1, 0]])


def random_even_lattice(rng, max_rank=5, definite=False):
    """Direct sum of small rescaled even blocks, in a random basis."""
    parts, rank = [], 0
    while rank < 1 or (rank < max_rank and rng.random() < 0.6):
        B = rng.choice(_BLOCKS[:4] if definite else _BLOCKS)
        if rank + len(B) > max_rank:
            break
        k = rng.choice((1, 2, 3, 4, 6)) * (1 if definite else rng.choice((1, -1)))
        parts.append(rescale(GramLattice(B), k))
        rank += len(B)
    L = direct_sum(*parts)
    return change_basis(L, random_unimodular(L.rank, rng))


def overlattice_laws(rng, n):
    """|A_L'| = |A_L| / |H|^2 and A_L' = H-perp / H for isotropic cyclic H."""
    from .disc_form import are_isometric, discriminant_data, discriminant_module, overlattice
    failures, done, tries = [], 0, 0
    while done < n and tries < 50 * n:
        tries += 1
        L = random_even_lattice(rng)
        data = discriminant_data(L)
        A = data.module
        if A.order > 2000:
            continue
        iso = [x for x in A.elements() if any(x) and A.q(x) == 0]
        if not iso:
            continue
        x = rng.choice(iso)
        h = A.element_order(x)
        over, _ = overlattice(L, [x], data)
        B = discriminant_module(over)
        done += 1
        if B.order * h * h != A.order:
            failures.append("order law fails for %s" % (L.gram,))
        elif not are_isometric(B, A.subquotient([x])):
            failures.append("form law fails for %s" % (L.gram,))
    if done < n:
        failures.append("only %d instances drawn" % done)
    return failures


def milgram_on_catalog(rng, n):
    """Gauss sum signature equals n+ - n- mod 8 on catalog lattices and sums of them."""
    from .catalog import CATALOG, make_named
    from .disc_form import discriminant_module, gauss_sum_signature
    pool = []
    for name in sorted(CATALOG):
        entry = CATALOG[name]
        if entry.params:
            pool += [make_named(name, n=k) for k in (2, 3, 4)]
        else:
            pool.append(make_named(name))
    pool = [L for L in pool if L.is_even]
    small = [L for L in pool if abs(L.det) <= 729]
    failures = []
    for i in range(n):
        if i < len(pool):
            L = pool[i]
        else:
            # keep the discriminant group small enough for the Gauss sum
            while True:
                L = direct_sum(rng.choice(small), random_even_lattice(rng, max_rank=3))
                if abs(L.det) <= 50_000:
                    break
        pos, neg, _ = la.inertia(L.gram)
        s = gauss_sum_signature(discriminant_module(L))
        if (pos - neg - s) % 8:
            failures.append("Milgram fails for %s" % (L.name or L.gram,))
    return failures


def eichler_laws(rng, n):
    """t(e, a) is an isometry fixing e, and t(e, a) t(e, b) = t(e, a + b)."""
    from .isometry import compose, eichler_transvection
    failures = []
    U = GramLattice([[0, 1], [1, 0]])
    for _ in range(n):
        M = random_even_lattice(rng, max_rank=4, definite=True)
        T = direct_sum(U, U, rescale(M, -1))
        e = [1, 0, 1, 0] + [0] * M.rank          # sum of isotropic vectors of the two U's
        perp = orthogonal_complement(T, [e]).rows

        def rand_perp():
            c = [rng.randint(-2, 2) for _ in perp]
            return [sum(ci * r[j] for ci, r in zip(c, perp)) for j in range(T.rank)]

        a, b = rand_perp(), rand_perp()
        try:
            ta, tb = eichler_transvection(T, e, a), eichler_transvection(T, e, b)
            tab = eichler_transvection(T, e, [x + y for x, y in zip(a, b)])
        except Exception as exc:
            failures.append("transvection failed: %r" % exc)
            continue
        G = T.matrix()
        for t in (ta, tb, tab):
            if la.congruence(t.rows(), G) != [list(r) for r in G]:
                failures.append("not an isometry")
        if ta.apply(list(e)) != list(e):
            failures.append("e is not fixed")
        if compose(ta, tb).matrix != tab.matrix:
            failures.append("composition law fails for a=%s b=%s" % (a, b))
    return failures


def torsion_bounds(rng, n):
    """For g of prime order p: R / (T + S) is p-torsion and p - 1 divides rank S."""
    from .isometry import LatticeIsometry, fixed_sublattices
    failures = []
    for _ in range(n):
        p = rng.choice((2, 3, 5))
        B = random_even_lattice(rng, max_rank=3, definite=True)
        R = direct_sum(*([B] * p))
        r = B.rank
        N = R.rank
        # cyclic shift of the p summands
        rows = [[0] * N for _ in range(N)]
        for blk in range(p):
            for i in range(r):
                rows[blk * r + i][((blk + 1) % p) * r + i] = 1
        g = LatticeIsometry(R, la.transpose(rows))
        fx = fixed_sublattices(R, [g])
        both = type(fx.T)(R, tuple(fx.T.rows) + tuple(fx.S.rows))
        tors, free = quotient_invariants(R, both)
        if free or any(p % d for d in tors):
            failures.append("torsion %s for p=%d" % (tors, p))
        if fx.S.rank % (p - 1):
            failures.append("rank S = %d not divisible by %d" % (fx.S.rank, p - 1))
        v = [rng.randint(-3, 3) for _ in range(N)]
        gv = g.apply(v)
        if not fx.S.contains([x - y for x, y in zip(v, gv)]):
            failures.append("v - gv not in S")
    return failures
