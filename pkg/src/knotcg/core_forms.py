"""Seifert forms and their algebra.

A Seifert form is a ``2g x 2g`` integer matrix ``A`` whose skew part
``A - A^t`` has determinant 1. From it we derive the isometric structure
``G = (A - A^t)^{-1} A``, the Alexander polynomial ``det(A - t A^t)``,
metabolizers, and the coprime splitting of metabolizers of block sums.
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd, isqrt

import numpy as np

from . import linalg
from . import polynomials as poly
from .errors import (
    HeightTooLargeForBudget,
    HypothesisViolated,
    KnotCGError,
    NonUnimodularSkewPart,
    NotCoprime,
    OddSize,
    SplitFailed,
    ZeroPolynomial,
)
from .polynomials import IntPolynomial

DEFAULT_ENUMERATION_BUDGET = 5_000_000


@dataclass(frozen=True)
class SeifertForm:
    matrix: tuple

    @property
    def size(self):
        return len(self.matrix)

    @property
    def genus(self):
        return len(self.matrix) // 2

    @property
    def transpose(self):
        return linalg.transpose(self.matrix)

    @property
    def skew(self):
        """The intersection form ``A - A^t``."""
        return linalg.matsub(self.matrix, self.transpose)

    @property
    def symmetric(self):
        return linalg.matadd(self.matrix, self.transpose)

    def is_singular(self):
        return linalg.det(self.matrix) == 0

    def to_json(self):
        return [[str(x) for x in row] for row in self.matrix]


@dataclass(frozen=True)
class IsometricStructure:
    matrix: tuple


@dataclass(frozen=True, eq=False)
class Metabolizer:
    """A rank-g sublattice given by a basis of integer row vectors.

    Equality and hashing compare the spanned lattices (via Hermite form).
    """

    basis: tuple
    eigenvalue: object = field(default=None, compare=False)

    @property
    def hnf(self):
        return linalg.hermite_rows(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Metabolizer):
            return NotImplemented
        return self.hnf == other.hnf

    def __hash__(self):
        return hash(self.hnf)

    @property
    def rank(self):
        return len(self.basis)


def validate_seifert(matrix):
    """Check the Seifert-form conditions and wrap the matrix."""
    A = linalg.int_matrix(matrix)
    n, m = linalg.shape(A)
    if n != m:
        raise KnotCGError(f"Seifert matrix must be square, got {n}x{m}")
    if n == 0 or n % 2:
        raise OddSize(f"Seifert matrix size must be even and positive, got {n}")
    K = linalg.matsub(A, linalg.transpose(A))
    d = linalg.det(K)
    if d != 1:
        raise NonUnimodularSkewPart(f"det(A - A^t) = {d}, expected 1")
    return SeifertForm(A)


def _form(F):
    return F if isinstance(F, SeifertForm) else validate_seifert(F)


def isometric_structure(F):
    F = _form(F)
    Kinv = linalg.integral_inverse(F.skew)
    G = linalg.matmul(Kinv, F.matrix)
    return IsometricStructure(G)


def alexander(F):
    """Delta(t) = det(A - t A^t), with formal degree 2g."""
    F = _form(F)
    A, At = F.matrix, F.transpose
    coeffs = poly.matrix_polynomial_det(
        lambda i, j, t: A[i][j] - t * At[i][j], F.size, F.size)
    return IntPolynomial(tuple(coeffs))


def charpoly(G):
    """det(xI - G) as integer coefficients."""
    n = len(G)
    coeffs = poly.matrix_polynomial_det(
        lambda i, j, x: (x if i == j else 0) - G[i][j], n, n)
    return IntPolynomial(tuple(coeffs))


def reversed_alexander(delta, size):
    """x^size * Delta(1 - 1/x) as an integer polynomial in x."""
    out = []
    for j, c in enumerate(delta.coeffs):
        # c * (x - 1)^j * x^(size - j)
        term = poly.pmul([0] * (size - j) + [1], poly_pow([-1, 1], j))
        out = poly.padd(out, poly.pscale(c, term))
    return IntPolynomial(tuple(out))


def poly_pow(a, e):
    out = [1]
    for _ in range(e):
        out = poly.pmul(out, a)
    return out


def charpoly_identity_check(F, G=None):
    """True iff det(xI - G) == +-x^{2g} Delta(1 - 1/x).

    ``G`` defaults to the isometric structure of ``F``; passing another
    matrix lets a caller test a perturbed structure.
    """
    F = _form(F)
    if G is None:
        G = isometric_structure(F).matrix
    elif isinstance(G, IsometricStructure):
        G = G.matrix
    lhs = charpoly(G)
    rhs = reversed_alexander(alexander(F), F.size)
    return lhs == rhs or lhs == -rhs


def block_sum(F1, F2):
    F1, F2 = _form(F1), _form(F2)
    return SeifertForm(linalg.block_diag(F1.matrix, F2.matrix))


def mirror(F):
    F = _form(F)
    return SeifertForm(linalg.scale(-1, F.transpose))


def equal_up_to_unit(p1, p2):
    """p1 == +-t^n p2 for some integer n."""
    a, _ = p1.strip_t()
    b, _ = p2.strip_t()
    return a == b or a == -b


# ---------------------------------------------------------------------------
# metabolizers

def _primitive(v):
    g = linalg.vec_gcd(v)
    v = tuple(x // g for x in v)
    last = next(x for x in reversed(v) if x)
    return v if last > 0 else tuple(-x for x in v)


def find_rank1_metabolizers(F):
    """Eigen-metabolizers of a genus-1 form, sorted by eigenvalue."""
    F = _form(F)
    if F.genus != 1:
        raise KnotCGError("find_rank1_metabolizers needs a genus-1 form")
    G = isometric_structure(F).matrix
    (a, b), (c, d) = G
    tr, det = a + d, a * d - b * c
    disc = tr * tr - 4 * det
    if disc < 0 or isqrt(disc) ** 2 != disc:
        return []
    root = isqrt(disc)
    out = []
    for lam in sorted({(tr - root) // 2, (tr + root) // 2}):
        # kernel of G - lam I
        r1 = (a - lam, b)
        r2 = (c, d - lam)
        row = r1 if any(r1) else r2
        v = _primitive((-row[1], row[0]))
        Z = Metabolizer((v,), eigenvalue=lam)
        assert is_metabolizer(F, Z)
        out.append(Z)
    return out


def _in_rational_span(rows, v):
    return linalg.rank(tuple(rows) + (tuple(v),)) == linalg.rank(rows)


def is_metabolizer(F, Z):
    """Check rank g, direct summand, G-invariance and Z = Z^perp."""
    F = _form(F)
    basis = Z.basis if isinstance(Z, Metabolizer) else linalg.as_matrix(Z)
    g = F.genus
    if len(basis) != g or linalg.rank(basis) != g:
        return False
    if not linalg.is_direct_summand(basis):
        return False
    G = isometric_structure(F).matrix
    for v in basis:
        if not _in_rational_span(basis, linalg.matvec(G, v)):
            return False
    K = F.skew
    Kv = [linalg.matvec(K, v) for v in basis]
    if any(sum(x * y for x, y in zip(u, w)) for u in basis for w in Kv):
        return False
    # Z^perp = {x : x^t K v = 0 for all v in Z}
    cols = linalg.transpose(tuple(Kv))
    perp = linalg.left_kernel(cols)
    return linalg.same_lattice(perp, basis)


def _hnf_rows(n, pivot, other_pivots, height, p_range):
    """All candidate rows with a pivot at ``pivot`` in a row-style HNF.

    ``other_pivots`` are later pivot columns, whose entries lie in [0, height).
    """
    cols = []
    for j in range(n):
        if j < pivot:
            cols.append([0])
        elif j == pivot:
            cols.append(list(p_range))
        elif j in other_pivots:
            cols.append(list(range(height)))
        else:
            cols.append(list(range(-height, height + 1)))
    return np.array(list(product(*cols)), dtype=np.int64).reshape(-1, n)


def _pattern_sizes(n, g, height):
    sizes = []
    for pivots in combinations(range(n), g):
        count = 1
        for idx, c in enumerate(pivots):
            count *= height
            for j in range(c + 1, n):
                if j in pivots[idx + 1:]:
                    count *= height
                elif j not in pivots:
                    count *= 2 * height + 1
        sizes.append(count)
    return sizes


def enumerate_metabolizers(F, height, budget=DEFAULT_ENUMERATION_BUDGET):
    """All metabolizers whose Hermite basis has entries of absolute value <= height.

    A brute-force oracle: the search space grows like height**(g(g+1)/2 + ...)
    so the candidate count is checked against ``budget`` first.
    """
    F = _form(F)
    g, n = F.genus, F.size
    if height < 1:
        raise ValueError("height must be positive")
    if g > 2:
        raise KnotCGError("enumerate_metabolizers supports genus <= 2")
    total = sum(_pattern_sizes(n, g, height))
    if total > budget:
        raise HeightTooLargeForBudget(
            f"{total} candidates exceed the budget of {budget}")
    K = np.array(F.skew, dtype=np.int64)
    G = np.array(isometric_structure(F).matrix, dtype=np.int64)
    found = []
    p_range = range(1, height + 1)
    for pivots in combinations(range(n), g):
        if g == 1:
            rows = _hnf_rows(n, pivots[0], (), height, p_range)
            cands = [(r,) for r in rows]
        else:
            c1, c2 = pivots
            R1 = _hnf_rows(n, c1, (c2,), height, p_range)
            R2 = _hnf_rows(n, c2, (), height, p_range)
            iso = R1 @ K @ R2.T
            mask = (iso == 0) & (R1[:, c2][:, None] < R2[:, c2][None, :])
            i1, i2 = np.nonzero(mask)
            if len(i1) == 0:
                continue
            A1, A2 = R1[i1], R2[i2]
            keep = np.ones(len(i1), dtype=bool)
            for B in (A1, A2):
                stacked = np.stack([A1, A2, B @ G.T], axis=1)  # (N, 3, n)
                for cols in combinations(range(n), 3):
                    minors = np.linalg.det(stacked[:, :, cols].astype(float))
                    keep &= np.abs(minors) < 0.5
            cands = list(zip(A1[keep], A2[keep]))
        for rows in cands:
            basis = tuple(tuple(int(x) for x in r) for r in rows)
            Z = Metabolizer(basis)
            if is_metabolizer(F, Z):
                found.append(Z)
    return found


# ---------------------------------------------------------------------------
# coprime splitting

def alexander_coprime(p1, p2):
    """True iff gcd(p1, p2) is a unit in Q[t, 1/t]."""
    if p1.is_zero() or p2.is_zero():
        raise ZeroPolynomial("alexander_coprime needs nonzero polynomials")
    a, _ = p1.strip_t()
    b, _ = p2.strip_t()
    return len(poly.pgcd(a.coeffs, b.coeffs)) == 1


def integer_bezout(phi1, phi2):
    """(u1, u2, c) with u1*phi1 + u2*phi2 == c, c a positive integer.

    Extended Euclid over Q followed by clearing denominators and content.
    """
    g, s, t = poly.ext_gcd(phi1.coeffs, phi2.coeffs)
    if len(g) != 1:
        raise NotCoprime("polynomials share a nonconstant factor")
    den = 1
    for x in list(s) + list(t):
        den = den * x.denominator // gcd(den, x.denominator)
    u1 = [int(x * den) for x in s]
    u2 = [int(x * den) for x in t]
    common = gcd(linalg.vec_gcd(u1 + u2), den)
    u1 = [x // common for x in u1]
    u2 = [x // common for x in u2]
    c = den // common
    U1, U2 = IntPolynomial(tuple(u1)), IntPolynomial(tuple(u2))
    check = U1 * phi1 + U2 * phi2
    assert check == IntPolynomial((c,)), "Bezout identity failed"
    return U1, U2, c


def split_metabolizer(F1, F2, Z):
    """Split a metabolizer of ``block_sum(F1, F2)`` into Z1 + Z2.

    Requires coprime Alexander polynomials and at least one nonsingular
    factor. Returns (Z1, Z2) with Zi = Z intersected with the i-th summand.
    """
    F1, F2 = _form(F1), _form(F2)
    F = block_sum(F1, F2)
    basis = Z.basis if isinstance(Z, Metabolizer) else linalg.as_matrix(Z)
    if not alexander_coprime(alexander(F1), alexander(F2)):
        raise HypothesisViolated("Alexander polynomials are not coprime")
    if F1.is_singular() and F2.is_singular():
        raise HypothesisViolated("both Seifert forms are singular")
    if not is_metabolizer(F, Metabolizer(basis)):
        raise HypothesisViolated("Z is not a metabolizer of the block sum")
    n1 = F1.size
    head = tuple(row[:n1] for row in basis)
    tail = tuple(row[n1:] for row in basis)
    Z1 = _combine(linalg.left_kernel(tail), head)
    Z2 = _combine(linalg.left_kernel(head), tail)
    M1, M2 = Metabolizer(Z1), Metabolizer(Z2)

    # Bezout projection: c * proj_1(z) = u2(G) phi2(G) z for every z in Z
    G = isometric_structure(F).matrix
    G1 = isometric_structure(F1).matrix
    G2 = isometric_structure(F2).matrix
    phi1, phi2 = charpoly(G1), charpoly(G2)
    _, u2, c = integer_bezout(phi1, phi2)
    proj = poly.poly_at_matrix((u2 * phi2).coeffs, G)
    for z in basis:
        w = linalg.matvec(proj, z)
        if w != tuple(c * x for x in z[:n1]) + (0,) * F2.size:
            raise SplitFailed("Bezout projection disagrees with coordinate projection")

    embedded = tuple(tuple(r) + (0,) * F2.size for r in Z1)
    embedded += tuple((0,) * n1 + tuple(r) for r in Z2)
    if not linalg.same_lattice(embedded, basis):
        raise SplitFailed("Z is not the direct sum of its intersections")
    if not (is_metabolizer(F1, M1) and is_metabolizer(F2, M2)):
        raise SplitFailed("intersections are not metabolizers of the factors")
    return M1, M2


def _combine(coeffs, rows):
    out = []
    for c in coeffs:
        v = [0] * len(rows[0])
        for ci, r in zip(c, rows):
            for j, x in enumerate(r):
                v[j] += ci * x
        out.append(tuple(v))
    return linalg.hermite_rows(out) if out else ()
