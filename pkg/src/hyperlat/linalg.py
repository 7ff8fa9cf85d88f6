"""Exact integer and rational matrix algorithms.

Matrices are plain lists of rows.  Integer matrices hold Python ints,
rational ones hold Fractions.  Nothing here uses floating point.
"""
from fractions import Fraction
from math import gcd, isqrt


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def transpose(A):
    return [list(r) for r in zip(*A)] if A else []


def mat_mul(A, B):
    if not A:
        return []
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


def vec_mat(v, A):
    n = len(A[0]) if A else 0
    out = [0] * n
    for c, row in zip(v, A):
        if c:
            for j, a in enumerate(row):
                if a:
                    out[j] += c * a
    return out


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def bilinear(u, G, v):
    """u G v^T for row vectors u, v."""
    return dot(vec_mat(u, G), v)


def congruence(B, G):
    """Gram matrix B G B^T."""
    BG = mat_mul(B, G)
    return [[dot(r, b) for b in B] for r in BG]


def is_symmetric(G):
    n = len(G)
    return all(len(r) == n for r in G) and all(
        G[i][j] == G[j][i] for i in range(n) for j in range(i))


def to_fraction(A):
    return [[Fraction(x) for x in row] for row in A]


def denominator_lcm(rows):
    d = 1
    for row in rows:
        for x in row:
            q = Fraction(x).denominator
            d = d * q // gcd(d, q)
    return d


def scale_to_integers(rows):
    """Return (d, rows*d) with d the least common denominator."""
    d = denominator_lcm(rows)
    return d, [[int(Fraction(x) * d) for x in row] for row in rows]


def det(A):
    """Determinant via fraction-free Bareiss elimination (exact for ints and Fractions)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    M[i][j] = num // prev
                else:
                    M[i][j] = num / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rref(A):
    """Reduced row echelon form over Q.  Returns (R, pivot_columns)."""
    M = to_fraction(A)
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rank(A):
    if not A:
        return 0
    return len(rref(A)[1])


def inverse(A):
    n = len(A)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(A)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]


def right_kernel(A, ncols=None):
    """Rational basis of {x : A x = 0}."""
    if not A:
        n = ncols or 0
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R, piv = rref(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            v[p] = -R[i][f]
        basis.append(v)
    return basis


def solve_left(B, v):
    """Solve x B = v over Q for a full-row-rank B; raise ValueError when impossible."""
    Bt = transpose(B)
    m = len(B)
    aug = [list(Bt[j]) + [v[j]] for j in range(len(v))]
    R, piv = rref(aug)
    if m in piv:
        raise ValueError("vector not in the row space")
    x = [Fraction(0)] * m
    for i, p in enumerate(piv):
        x[p] = R[i][m]
    return x


# -- integer row operations --------------------------------------------------

def _xgcd(a, b):
    """Return (g, s, t) with s a + t b = g >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def _elim(a, b):
    """Unimodular (s, t, u, v) with s a + t b = g and u a + v b = 0.

    When a divides b the transform is a plain row subtraction, which keeps
    the pivot (and its sign) unchanged.
    """
    if a != 0 and b % a == 0:
        return 1, 0, -(b // a), 1
    g, s, t = _xgcd(a, b)
    return s, t, -(b // g), a // g


def hnf_with_transform(A):
    """Row Hermite normal form H = U A with U unimodular.

    H is upper echelon with positive pivots and entries above each pivot reduced
    into [0, pivot).  Zero rows sit at the bottom.  Returns (H, U, pivots).
    """
    m = len(A)
    n = len(A[0]) if A else 0
    H = [list(r) for r in A]
    U = identity(m)
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine column c into row r
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [s * x + t * y for x, y in zip(Hr, Hi)]
            H[i] = [-bg * x + ag * y for x, y in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [s * x + t * y for x, y in zip(Ur, Ui)]
            U[i] = [-bg * x + ag * y for x, y in zip(Ur, Ui)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        pivots.append(c)
        r += 1
    return H, U, pivots


def hnf(A):
    """Nonzero rows of the row Hermite normal form of an integer matrix."""
    if not A:
        return []
    return IncrementalHNF(len(A[0]), A).basis()


class IncrementalHNF:
    """Row-HNF basis of a Z-lattice, grown one generator at a time.

    Useful when a lattice is spanned by thousands of generators: the basis
    never exceeds the ambient dimension.
    """

    def __init__(self, n, rows=()):
        self.n = n
        self.rows = {}  # pivot column -> row
        self._since_reduce = 0
        for v in rows:
            self.add(v)

    def add(self, v):
        """Insert a generator; return True when it enlarged the rank."""
        v = list(v)
        grew = False
        for c in range(self.n):
            if v[c] == 0:
                continue
            row = self.rows.get(c)
            if row is None:
                if v[c] < 0:
                    v = [-x for x in v]
                self.rows[c] = v
                grew = True
                break
            a, b = row[c], v[c]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, row)]
                continue
            g, s, t = _xgcd(a, b)
            ag, bg = a // g, b // g
            new_row = [s * x + t * y for x, y in zip(row, v)]
            v = [-bg * x + ag * y for x, y in zip(row, v)]
            self.rows[c] = new_row
        self._since_reduce += 1
        if self._since_reduce >= 32:
            self.reduce()
        return grew

    def reduce(self):
        cols = sorted(self.rows)
        for c in cols:
            p = self.rows[c]
            piv = p[c]
            for c2 in cols:
                if c2 >= c:
                    break
                row = self.rows[c2]
                q = row[c] // piv
                if q:
                    self.rows[c2] = [x - q * y for x, y in zip(row, p)]
        self._since_reduce = 0

    def basis(self):
        self.reduce()
        return [list(self.rows[c]) for c in sorted(self.rows)]

    def rank(self):
        return len(self.rows)

    def index_in_ambient(self):
        """Product of pivots: the index in Z^n when the rank is full."""
        out = 1
        for c in self.rows:
            out *= self.rows[c][c]
        return out


def integer_left_kernel(A):
    """Z-basis of {x in Z^m : x A = 0} for an integer m x n matrix A."""
    H, U, piv = hnf_with_transform(A)
    r = len(piv)
    return hnf([U[i] for i in range(r, len(A))]) if r < len(A) else []


def smith_form(A):
    """Smith normal form with transforms.

    Returns (d, U, V) with U A V = diag(d) (padded with zeros), U and V
    unimodular and d[i] | d[i+1].  Only nonzero invariant factors are in d.
    """
    m = len(A)
    n = len(A[0]) if A else 0
    M = [list(r) for r in A]
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        # choose the smallest nonzero pivot in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] and (best is None or abs(M[i][j]) < best[0]):
                    best = (abs(M[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        M[t], M[i] = M[i], M[t]
        U[t], U[i] = U[i], U[t]
        if j != t:
            for row in M:
                row[t], row[j] = row[j], row[t]
            for row in V:
                row[t], row[j] = row[j], row[t]
        while True:
            for i in range(t + 1, m):
                if M[i][t]:
                    s, tt, u, v = _elim(M[t][t], M[i][t])
                    Mt, Mi = M[t], M[i]
                    M[t] = [s * x + tt * y for x, y in zip(Mt, Mi)]
                    M[i] = [u * x + v * y for x, y in zip(Mt, Mi)]
                    Ut, Ui = U[t], U[i]
                    U[t] = [s * x + tt * y for x, y in zip(Ut, Ui)]
                    U[i] = [u * x + v * y for x, y in zip(Ut, Ui)]
            for j in range(t + 1, n):
                if M[t][j]:
                    s, tt, u, v = _elim(M[t][t], M[t][j])
                    for row in M:
                        x, y = row[t], row[j]
                        row[t], row[j] = s * x + tt * y, u * x + v * y
                    for row in V:
                        x, y = row[t], row[j]
                        row[t], row[j] = s * x + tt * y, u * x + v * y
            if all(M[i][t] == 0 for i in range(t + 1, m)):
                break
        # enforce divisibility on the rest of the block
        p = M[t][t]
        bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                    if M[i][j] % p), None)
        if bad is not None:
            i, _ = bad
            M[t] = [x + y for x, y in zip(M[t], M[i])]
            U[t] = [x + y for x, y in zip(U[t], U[i])]
            continue
        if p < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    d = [M[i][i] for i in range(min(m, n)) if M[i][i] != 0]
    return d, U, V


def saturation(rows):
    """Integer basis of (Q-span of rows) intersected with Z^n."""
    if not rows:
        return []
    n = len(rows[0])
    B = hnf([[int(x) for x in r] for r in rows])
    if not B:
        return []
    d, U, V = smith_form(B)
    # B = U^-1 D V^-1 ; the first r rows of V^-1 span the saturation
    Vinv = inverse(V)
    return hnf([[int(x) for x in Vinv[i]] for i in range(len(d))])


def rational_row_basis(rows):
    """Z-basis (Fractions, HNF order) of the group generated by rational rows."""
    d, ints = scale_to_integers(rows)
    return [[Fraction(x, d) for x in r] for r in hnf(ints)]


def ldl(G):
    """G = L D L^T over Q for a symmetric matrix with nonzero leading minors."""
    n = len(G)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Fraction(G[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        if D[j] == 0:
            raise ZeroDivisionError("singular leading minor")
        for i in range(j + 1, n):
            L[i][j] = (Fraction(G[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D


def inertia(G):
    """(positive, negative, zero) counts of eigenvalue signs, exactly."""
    n = len(G)
    M = to_fraction(G)
    pos = neg = 0
    size = n
    idx = list(range(n))
    # symmetric Gaussian elimination with 2x2 pivot fallback
    while idx:
        k = next((i for i in idx if M[i][i] != 0), None)
        if k is not None:
            piv = M[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            idx.remove(k)
            for i in idx:
                f = M[i][k] / piv
                if f:
                    for j in idx:
                        M[i][j] -= f * M[k][j]
            continue
        pair = next(((i, j) for i in idx for j in idx if i < j and M[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        # replace row/col i by i + j to create a nonzero diagonal entry
        for c in range(size):
            M[i][c] += M[j][c]
        for r in range(size):
            M[r][i] += M[r][j]
    zero = n - pos - neg
    return pos, neg, zero


def lll_gram(G, delta=Fraction(3, 4)):
    """LLL reduction of a positive definite integral Gram matrix.

    Integral version working only with the Gram matrix.  Returns the
    unimodular transform T so that T G T^T is reduced.
    """
    n = len(G)
    b = [list(r) for r in G]  # current Gram matrix
    T = identity(n)
    if n <= 1:
        return T
    d = [0] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    d[0] = 1

    def gram(i, j):
        return b[i][j]

    def compute_row(k):
        for j in range(k + 1):
            u = gram(k, j)
            for i in range(j):
                u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
            if j < k:
                lam[k][j] = u
            else:
                d[k + 1] = u
        if d[k + 1] <= 0:
            raise ValueError("Gram matrix is not positive definite")

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            _row_sub(k, l, q)
            lam[k][l] -= q * d[l + 1]
            for i in range(l):
                lam[k][i] -= q * lam[l][i]

    def _row_sub(k, l, q):
        # basis change b_k <- b_k - q b_l applied to the Gram matrix
        T[k] = [x - q * y for x, y in zip(T[k], T[l])]
        b[k] = [x - q * y for x, y in zip(b[k], b[l])]
        for i in range(n):
            b[i][k] -= q * b[i][l]

    def swap(k):
        b[k], b[k - 1] = b[k - 1], b[k]
        for row in b:
            row[k], row[k - 1] = row[k - 1], row[k]
        T[k], T[k - 1] = T[k - 1], T[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lm = lam[k][k - 1]
        B = (d[k - 1] * d[k + 1] + lm * lm) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lm * t) // d[k]
            lam[i][k - 1] = (B * t + lm * lam[i][k]) // d[k + 1]
        d[k] = B

    k = 1
    kmax = 0
    compute_row(0)
    while k < n:
        if k > kmax:
            kmax = k
            compute_row(k)
        red(k, k - 1)
        num, den = delta.numerator, delta.denominator
        if den * d[k + 1] * d[k - 1] < num * d[k] * d[k] - den * lam[k][k - 1] ** 2:
            swap(k)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                red(k, l)
            k += 1
    return T


def isqrt_floor_fraction(x):
    """floor(sqrt(x)) for a nonnegative Fraction."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative")
    r = isqrt(x.numerator // x.denominator)
    while (r + 1) ** 2 * x.denominator <= x.numerator:
        r += 1
    while r * r * x.denominator > x.numerator:
        r -= 1
    return r
