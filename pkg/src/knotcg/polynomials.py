"""Univariate polynomials with exact coefficients.

:class:`IntPolynomial` is the public integer type (coefficients stored
constant term first). The module-level helpers work on plain coefficient
lists of ``Fraction``/``int`` and cover division, gcd, resultants,
cyclotomic polynomials and Sturm-sequence real root isolation.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from . import linalg
from .errors import ConstantPolynomial, ZeroPolynomial


def _strip(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        c = tuple(int(x) for x in _strip(self.coeffs))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_roots_product(cls, *factors):
        out = cls((1,))
        for f in factors:
            out = out * f
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return IntPolynomial(padd(self.coeffs, _coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPolynomial(psub(self.coeffs, _coerce(other)))

    def __rsub__(self, other):
        return IntPolynomial(psub(_coerce(other), self.coeffs))

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        return IntPolynomial(pmul(self.coeffs, _coerce(other)))

    __rmul__ = __mul__

    def __pow__(self, e):
        out = IntPolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def shift(self, n):
        """Multiply by t**n (n >= 0)."""
        return IntPolynomial((0,) * n + self.coeffs) if self.coeffs else self

    def strip_t(self):
        """Divide out the largest power of t; returns (poly, power)."""
        c = self.coeffs
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        return IntPolynomial(c[k:]), k

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(x) for x in data))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def _coerce(other):
    if isinstance(other, IntPolynomial):
        return other.coeffs
    return (other,)


# ---------------------------------------------------------------------------
# coefficient-list arithmetic (works for int and Fraction entries)

def padd(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def psub(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def pscale(c, a):
    return _strip([c * x for x in a])


def peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pderiv(a):
    return _strip([i * a[i] for i in range(1, len(a))])


def pdivmod(a, b):
    """Division over the rationals: returns (quotient, remainder)."""
    b = _strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(x) for x in _strip(a)]
    q = [Fraction(0)] * max(len(r) - len(b) + 1, 1)
    lb = Fraction(b[-1])
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        f = r[-1] / lb
        q[k] = f
        for i, y in enumerate(b):
            r[i + k] -= f * y
        r = _strip(r)
    return _strip(q), r


def pmonic(a):
    a = _strip(a)
    if not a:
        return []
    lc = Fraction(a[-1])
    return [Fraction(x) / lc for x in a]


def pgcd(a, b):
    """Monic gcd over the rationals."""
    a, b = _strip(a), _strip(b)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    return pmonic(a)


def primitive(a):
    """Primitive integer polynomial proportional to a rational one (positive leading term)."""
    a = _strip(a)
    if not a:
        return []
    den = 1
    for x in a:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return ints


def squarefree(a):
    """Squarefree part (primitive integer form)."""
    g = pgcd(a, pderiv(a))
    q, r = pdivmod(a, g)
    assert not r
    return primitive(q)


def divides(d, a):
    """True iff d divides a over the rationals."""
    _, r = pdivmod(a, d)
    return not r


def ext_gcd(a, b):
    """Extended Euclid over Q: returns (g, s, t) with s*a + t*b == g monic."""
    r0, r1 = [Fraction(x) for x in _strip(a)], [Fraction(x) for x in _strip(b)]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    lc = r0[-1]
    return [x / lc for x in r0], [x / lc for x in s0], [x / lc for x in t0]


def compose_linear(a, alpha, beta):
    """Coefficients of a(alpha*x + beta)."""
    out = []
    power = [1]
    lin = [beta, alpha]
    for c in a:
        out = padd(out, pscale(c, power))
        power = pmul(power, lin)
    return out


def sylvester_matrix(f, g):
    f, g = _strip(f), _strip(g)
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [0] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(tuple(row))
    for i in range(m):
        row = [0] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(tuple(row))
    return tuple(rows)


def resultant(f, g):
    """Resultant as the Sylvester determinant; both polynomials nonconstant."""
    fc = _coerce(f) if isinstance(f, IntPolynomial) else _strip(f)
    gc = _coerce(g) if isinstance(g, IntPolynomial) else _strip(g)
    if len(fc) < 2 or len(gc) < 2:
        raise ConstantPolynomial("resultant needs two nonconstant polynomials")
    return linalg.det(sylvester_matrix(fc, gc))


@lru_cache(maxsize=None)
def cyclotomic(d):
    """Integer coefficients of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("d must be positive")
    num = [-1] + [0] * (d - 1) + [1]  # t^d - 1
    for e in range(1, d):
        if d % e == 0:
            q, r = pdivmod(num, cyclotomic(e))
            assert not r
            num = q
    return tuple(int(x) for x in num)


def euler_phi(n):
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def cyclotomic_factors(a):
    """Map d -> multiplicity for every cyclotomic factor Phi_d of ``a``."""
    a = _strip(a)
    if not a:
        raise ZeroPolynomial("zero polynomial has every factor")
    deg = len(a) - 1
    found = {}
    d = 1
    # phi(d) >= sqrt(d / 2), so d <= 2 * deg**2 bounds every candidate
    while d <= max(2 * deg * deg, 2):
        if euler_phi(d) <= deg:
            phi_d = cyclotomic(d)
            mult = 0
            rest = a
            while len(rest) - 1 >= len(phi_d) - 1:
                q, r = pdivmod(rest, phi_d)
                if r:
                    break
                rest = q
                mult += 1
            if mult:
                found[d] = mult
        d += 1
    return found


# ---------------------------------------------------------------------------
# real roots

def sturm_sequence(a):
    seq = [[Fraction(x) for x in _strip(a)]]
    d = pderiv(seq[0])
    if not d:
        return seq
    seq.append(d)
    while True:
        _, r = pdivmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return seq


def _sign_changes(seq, x):
    signs = []
    for p in seq:
        v = peval(p, x)
        if v:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots(seq, lo, hi):
    """Distinct real roots in the half-open interval (lo, hi]."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(a):
    a = _strip(a)
    lc = abs(Fraction(a[-1]))
    return 1 + max((abs(Fraction(x)) / lc for x in a[:-1]), default=Fraction(0))


def isolate_real_roots(a, lo, hi, seq=None):
    """Disjoint intervals ``(l, h]`` each holding exactly one root of ``a`` in (lo, hi].

    ``a`` should be squarefree. Intervals are returned in increasing order.
    """
    if seq is None:
        seq = sturm_sequence(a)
    lo, hi = Fraction(lo), Fraction(hi)
    out = []
    stack = [(lo, hi, count_roots(seq, lo, hi))]
    while stack:
        l, h, c = stack.pop()
        if c == 0:
            continue
        if c == 1:
            out.append((l, h))
            continue
        m = (l + h) / 2
        cl = count_roots(seq, l, m)
        stack.append((m, h, c - cl))
        stack.append((l, m, cl))
    out.sort()
    return out


def refine_root(seq, lo, hi):
    """Halve an isolating interval (lo, hi] of a single root."""
    m = (lo + hi) / 2
    if count_roots(seq, lo, m) == 1:
        return lo, m
    return m, hi


def binomial_real_part(n):
    """Coefficients (in u) of Re((1 + i u)^n)."""
    out = [0] * (n + 1)
    for k in range(0, n + 1, 2):
        out[k] = comb(n, k) * (-1) ** (k // 2)
    return _strip(out)


def interpolate(xs, ys):
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    out = []
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = pmul(basis, [-xj, 1])
                denom *= xi - xj
        out = padd(out, pscale(Fraction(yi) / denom, basis))
    return out


def integral_coeffs(coeffs):
    """Convert a rational coefficient list known to be integral into ints."""
    out = []
    for c in coeffs:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        out.append(c.numerator)
    return out


def matrix_polynomial_det(entry, size, degree):
    """det of the matrix whose (i, j) entry is ``entry(i, j, t)``, as integer coefficients.

    ``degree`` bounds the degree of the determinant in t.
    """
    xs = list(range(degree + 1))
    ys = []
    for t in xs:
        M = tuple(tuple(entry(i, j, t) for j in range(size)) for i in range(size))
        ys.append(linalg.det(M))
    return integral_coeffs(interpolate(xs, ys))


def poly_at_matrix(coeffs, M):
    """Evaluate a polynomial at a square matrix by Horner's rule."""
    n = len(M)
    acc = linalg.zeros(n, n)
    for c in reversed(_strip(coeffs)):
        acc = linalg.matadd(linalg.matmul(acc, M), linalg.scale(c, linalg.identity(n)))
    return acc
