"""Exact integer and rational matrix routines.

Matrices are tuples of row tuples holding ``int`` or ``Fraction`` entries.
Everything here is exact; the sizes met in practice are tiny (at most a few
dozen rows), so clarity wins over asymptotics.
"""

from fractions import Fraction
from math import gcd

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]


def as_matrix(rows):
    return tuple(tuple(row) for row in rows)


def int_matrix(rows):
    """Coerce nested sequences (ints or decimal strings) to an integer matrix."""
    out = []
    for row in rows:
        new = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"non-integral entry {x}")
                x = x.numerator
            elif isinstance(x, str):
                x = int(x.strip())
            elif not isinstance(x, int) or isinstance(x, bool):
                if float(x) != int(x):
                    raise ValueError(f"non-integral entry {x}")
                x = int(x)
            new.append(x)
        out.append(tuple(new))
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise ValueError("ragged matrix")
    return tuple(out)


def shape(M):
    return len(M), (len(M[0]) if M else 0)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(m, n):
    return tuple((0,) * n for _ in range(m))


def transpose(M):
    return tuple(zip(*M)) if M else ()


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def matadd(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matsub(A, B):
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def scale(c, A):
    return tuple(tuple(c * a for a in row) for row in A)


def matpow(A, e):
    result = identity(len(A))
    base = A
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result


def block_diag(A, B):
    m, n = shape(A)
    p, q = shape(B)
    rows = [tuple(row) + (0,) * q for row in A]
    rows += [(0,) * n + tuple(row) for row in B]
    return tuple(rows)


def det(M):
    """Determinant by fraction-free Bareiss elimination (exact for ints)."""
    n = len(M)
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) else num / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(M):
    """Inverse over the rationals (Gauss-Jordan); raises ZeroDivisionError if singular."""
    n = len(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


def integral_inverse(M):
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    inv = inverse(M)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(x.numerator for x in row))
    return tuple(out)


def rank(M):
    a = [[Fraction(x) for x in row] for row in M]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == m:
            break
    return r


def inertia(M):
    """(positive, negative, zero) counts of a rational symmetric matrix.

    Congruence diagonalization: Schur-complement on a nonzero diagonal
    pivot, or on ``e_i + e_j`` when the remaining diagonal vanishes.
    """
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    active = list(range(n))
    pos = neg = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active
                         if i < j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        col = [a[i][piv] for i in active]
        for ii, i in enumerate(active):
            ci = col[ii]
            if ci == 0:
                continue
            f = ci / d
            row_i = a[i]
            row_p = a[piv]
            for k in active:
                row_i[k] -= f * row_p[k]
    return pos, neg, n - pos - neg


def signature(M):
    p, q, _ = inertia(M)
    return p - q


def hermitian_signature(X, Y):
    """Signature of the hermitian matrix ``X + iY`` (X symmetric, Y skew).

    Uses the real symmetric realification ``[[X, -Y], [Y, X]]`` whose
    inertia is twice that of the hermitian matrix.
    """
    n = len(X)
    big = []
    for i in range(n):
        big.append(tuple(X[i]) + tuple(-y for y in Y[i]))
    for i in range(n):
        big.append(tuple(Y[i]) + tuple(X[i]))
    p, q, z = inertia(big)
    return (p - q) // 2


# ---------------------------------------------------------------------------
# Integer lattices

def smith_normal_form(M):
    """Return ``(U, D, V)`` with ``U @ M @ V == D`` in Smith normal form.

    U and V are unimodular. Diagonal entries are nonnegative and each divides
    the next; zero entries (if any) come last.
    """
    m, n = shape(M)
    a = [list(row) for row in M]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for row in a:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j] != 0]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        done = False
            if not done:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
    return as_matrix(U), as_matrix(a), as_matrix(V)


def invariant_factors(M):
    _, D, _ = smith_normal_form(M)
    return tuple(D[i][i] for i in range(min(shape(D))))


def hermite_rows(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Returns the nonzero rows in echelon form; pivots are positive and the
    entries above each pivot are reduced into ``[0, pivot)``.
    """
    basis, _ = _hermite_with_transform(rows)
    return tuple(r for r in basis if any(r))


def _hermite_with_transform(rows):
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return (), ()
    n = len(a[0])
    T = [list(r) for r in identity(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [(abs(a[i][c]), i) for i in range(r, m) if a[i][c] != 0]
            if not nz:
                break
            _, i = min(nz)
            a[r], a[i] = a[i], a[r]
            T[r], T[i] = T[i], T[r]
            clean = True
            for i in range(r + 1, m):
                if a[i][c]:
                    f = a[i][c] // a[r][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                    T[i] = [x - f * y for x, y in zip(T[i], T[r])]
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if r < m and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                T[r] = [-x for x in T[r]]
            for i in range(r):
                f = a[i][c] // a[r][c]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                    T[i] = [x - f * y for x, y in zip(T[i], T[r])]
            r += 1
    return as_matrix(a), as_matrix(T)


def left_kernel(rows):
    """Basis of the integer lattice ``{c : c @ rows == 0}``."""
    basis, T = _hermite_with_transform(rows)
    return tuple(T[i] for i, r in enumerate(basis) if not any(r))


def is_direct_summand(rows):
    """True iff the rows span a saturated sublattice (all invariant factors 1)."""
    if not rows:
        return True
    d = invariant_factors(rows)
    return rank(rows) == len(rows) and all(x == 1 for x in d)


def same_lattice(rows1, rows2):
    return hermite_rows(rows1) == hermite_rows(rows2)


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g
