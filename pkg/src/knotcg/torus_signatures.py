"""Signature functions of torus knots.

Two independent routes are provided for each family: a closed form
(``sigma_T2``, ``sigma_Tll1``) and a profile assembled from the jump
function ``jump_f`` (``profile_T2``, ``profile_Tll1``). The 2-strand
family also has a Seifert-matrix oracle, ``seifert_T2n``.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd

from .core_forms import validate_seifert
from .signature_profiles import JumpList, SignatureProfile, profile_from_jumps


@dataclass(frozen=True)
class TorusKnotId:
    m: int
    n: int

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise ValueError("torus knot parameters must be nonzero")
        if gcd(abs(self.m), abs(self.n)) != 1:
            raise ValueError(f"T({self.m},{self.n}) is a link, not a knot")


def _bezout(m, n):
    """(x, y) with x*m + y*n == gcd(m, n)."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    a, b = m, n
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return x0, y0


def jump_f(m, n, r):
    """Half the jump of sigma(T_{m,n}) at r, for 0 <= r <= 1/2 and m, n > 0.

    Nonzero only when s = mnr is an integer divisible by neither m nor n;
    then it is (-1)^(floor(a/n) + floor(b/m)) for any a, b with am + bn = s.
    """
    TorusKnotId(m, n)
    if m <= 0 or n <= 0:
        raise ValueError("jump_f needs positive parameters")
    r = Fraction(r)
    if not 0 <= r <= Fraction(1, 2):
        raise ValueError("jump_f is defined for 0 <= r <= 1/2")
    s = m * n * r
    if s.denominator != 1:
        return 0
    s = s.numerator
    if s % m == 0 or s % n == 0:
        return 0
    x, y = _bezout(m, n)
    a, b = x * s, y * s
    return -1 if (a // n + b // m) % 2 else 1


def torus_jumps(m, n):
    """Exact jump list of sigma(T_{m,n}) on (0, 1) for m, n > 0."""
    N = m * n
    left = []
    for s in range(1, N // 2 + 1):
        r = Fraction(s, N)
        if r == Fraction(1, 2):
            continue
        f = jump_f(m, n, r)
        if f:
            left.append((r, 2 * f))
    right = [(1 - r, -j) for r, j in reversed(left)]
    return JumpList(tuple(left + right))


def _negated(J):
    return JumpList(tuple((r, -j) for r, j in J.items))


@lru_cache(maxsize=256)
def profile_T2(k):
    """Profile of T_{2,2k+1} built from jump_f."""
    if k < 1:
        raise ValueError("profile_T2 needs k >= 1")
    return profile_from_jumps(torus_jumps(2, 2 * k + 1))


@lru_cache(maxsize=256)
def profile_Tll1(l):
    """Profile of T_{l,-l-1}, using f_{l,-l-1} = -f_{l,l+1}."""
    if l < 1:
        raise ValueError("profile_Tll1 needs l >= 1")
    if l == 1:
        return SignatureProfile.zero()
    return profile_from_jumps(_negated(torus_jumps(l, l + 1)))


def sigma_T2(k, r):
    """Closed form -2 floor(r(2k+1) + 1/2) for T_{2,2k+1}, averaged at jumps."""
    if k < 1:
        raise ValueError("sigma_T2 needs k >= 1")
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise ValueError("r must lie in [0, 1]")
    if r > Fraction(1, 2):
        r = 1 - r
    if r == Fraction(1, 2):
        return Fraction(-2 * k)
    v = r * (2 * k + 1) + Fraction(1, 2)
    if v.denominator == 1:
        return Fraction(-(2 * v.numerator - 1))
    return Fraction(-2 * floor(v))


def _tll1_count(l, s_bound, strict):
    """Signed count of jumps of T_{l,-l-1} at s/N with s < s_bound (or <= when not strict).

    Jumps are +2 for (l+1)(t-1) < s < lt and -2 for lt < s < (l+1)t.
    """
    total = 0
    for t in range(1, l + 1):
        for lo, hi, sign in (((l + 1) * (t - 1), l * t, 1), (l * t, (l + 1) * t, -1)):
            # integers s with lo < s < hi and s < s_bound (or s <= s_bound)
            cap = ceil(s_bound) - 1 if strict else floor(s_bound)
            top = min(hi - 1, cap)
            if top > lo:
                total += sign * 2 * (top - lo)
    return total


def sigma_Tll1(l, r):
    """Signature of T_{l,-l-1} by direct counting of jump positions."""
    if l < 1:
        raise ValueError("sigma_Tll1 needs l >= 1")
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise ValueError("r must lie in [0, 1]")
    if r > Fraction(1, 2):
        r = 1 - r
    if l == 1:
        return Fraction(0)
    N = l * (l + 1)
    x = r * N
    below = _tll1_count(l, x, strict=True)
    if x.denominator == 1 and x.numerator % l and x.numerator % (l + 1):
        upto = _tll1_count(l, x, strict=False)
        return Fraction(below + upto, 2)
    return Fraction(below)


def seifert_T2n(n):
    """Seifert form of T_{2,n}: -1 on the diagonal, +1 just above it."""
    if n < 3 or n % 2 == 0:
        raise ValueError("seifert_T2n needs odd n >= 3")
    size = n - 1
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = -1
        if i + 1 < size:
            rows[i][i + 1] = 1
    return validate_seifert(rows)
