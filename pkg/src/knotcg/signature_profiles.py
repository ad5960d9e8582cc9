"""Tristram-Levine signature functions as exact piecewise-constant profiles.

A profile records the breakpoints of r -> sigma_r in (0, 1) together with
the integer plateau values between them. Breakpoints are either exact
rationals or certified isolating intervals around an irrational angle.
Irrational angles keep enough data (a squarefree polynomial in
u = tan(pi r) and an isolating u-interval) to be refined on demand, so
comparisons against rationals and between breakpoints stay exact.

Signatures are computed from the identity

    A_r = 2 sin(pi r) cos(pi r) (u (A + A^t) - i (A - A^t)),  u = tan(pi r),

so for rational u the plateau value is the exact signature of a rational
hermitian matrix.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cmp_to_key
from math import gcd

import numpy as np
from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

from . import linalg
from . import polynomials as poly
from .core_forms import SeifertForm, alexander, validate_seifert
from .errors import AsymmetricJumps, KnotCGError, OutOfRange, RootIsolationFailure

MAX_REFINEMENTS = 400
DISPLAY_WIDTH = Fraction(1, 2 ** 40)


# ---------------------------------------------------------------------------
# breakpoints

def _tan_to_angle_interval(u_lo, u_hi):
    """Certified [r_lo, r_hi] containing atan(u)/pi for every u in [u_lo, u_hi]."""
    width = u_hi - u_lo
    bits = 64
    if width > 0:
        bits += max(0, -(width.numerator.bit_length() - width.denominator.bit_length()))
    bits += max(u_lo.denominator.bit_length(), u_hi.denominator.bit_length()) // 4
    ctx = MPIntervalContext()
    ctx.prec = bits
    one = ctx.mpf(1)

    def angle(u):
        x = ctx.mpf(u.numerator) / ctx.mpf(u.denominator)
        return ctx.atan2(x, one) / ctx.pi

    lo = angle(u_lo)._mpi_[0]
    hi = angle(u_hi)._mpi_[1]
    (a, b), (c, d) = libmp.to_rational(lo), libmp.to_rational(hi)
    return Fraction(int(a), int(b)), Fraction(int(c), int(d))


@dataclass(frozen=True)
class AlgebraicAngle:
    """The angle (base + shift) / scale, base = atan(u*)/pi or its mirror 1 - atan(u*)/pi.

    ``u*`` is the unique root of the squarefree polynomial ``poly`` (integer
    coefficients, constant term first) in the half-open interval (u_lo, u_hi].
    """

    poly: tuple
    u_lo: Fraction
    u_hi: Fraction
    mirrored: bool = False
    scale: int = 1
    shift: int = 0

    def base_interval(self):
        lo, hi = _tan_to_angle_interval(self.u_lo, self.u_hi)
        if self.mirrored:
            lo, hi = 1 - hi, 1 - lo
        return lo, hi

    def interval(self):
        lo, hi = self.base_interval()
        return (lo + self.shift) / self.scale, (hi + self.shift) / self.scale

    def refined(self):
        seq = poly.sturm_sequence(self.poly)
        lo, hi = poly.refine_root(seq, self.u_lo, self.u_hi)
        return replace(self, u_lo=lo, u_hi=hi)

    def same_transform(self, other):
        return (self.mirrored, self.scale, self.shift) == (other.mirrored, other.scale, other.shift)


@dataclass(frozen=True)
class Breakpoint:
    """A jump location: an exact rational (lo == hi, root None) or an interval."""

    lo: Fraction
    hi: Fraction
    root: AlgebraicAngle = field(default=None, compare=False)

    @classmethod
    def exact(cls, x):
        x = Fraction(x)
        return cls(x, x)

    @classmethod
    def algebraic(cls, root):
        lo, hi = root.interval()
        return cls(lo, hi, root)

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def value(self):
        return self.lo if self.is_exact else None

    def refined(self):
        if self.root is None:
            if self.is_exact:
                return self
            raise RootIsolationFailure("interval breakpoint carries no refinement data")
        return Breakpoint.algebraic(self.root.refined())

    def narrowed(self, width=DISPLAY_WIDTH):
        b = self
        for _ in range(MAX_REFINEMENTS):
            if b.hi - b.lo <= width or b.root is None:
                return b
            b = b.refined()
        return b

    def mirror(self):
        if self.is_exact:
            return Breakpoint.exact(1 - self.lo)
        root = None
        if self.root is not None:
            r = self.root
            # 1 - (b + j)/w = ((1 - b) + (w - 1 - j))/w
            root = replace(r, mirrored=not r.mirrored, shift=r.scale - 1 - r.shift)
        return Breakpoint(1 - self.hi, 1 - self.lo, root)

    def pullback(self, w, j):
        """The point (self + j) / w."""
        if self.is_exact:
            return Breakpoint.exact((self.lo + j) / w)
        root = None
        if self.root is not None:
            r = self.root
            root = replace(r, scale=r.scale * w, shift=r.shift + j * r.scale)
        return Breakpoint((self.lo + j) / w, (self.hi + j) / w, root)

    def to_json(self):
        if self.is_exact:
            return [self.lo.numerator, self.lo.denominator]
        out = {"interval": [[self.lo.numerator, self.lo.denominator],
                            [self.hi.numerator, self.hi.denominator]]}
        if self.root is not None:
            r = self.root
            out["algebraic"] = {
                "poly": [str(c) for c in r.poly],
                "u": [[r.u_lo.numerator, r.u_lo.denominator],
                      [r.u_hi.numerator, r.u_hi.denominator]],
                "mirrored": r.mirrored,
                "scale": r.scale,
                "shift": r.shift,
            }
        return out

    @classmethod
    def from_json(cls, data):
        if isinstance(data, list):
            return cls.exact(Fraction(int(data[0]), int(data[1])))
        (n1, d1), (n2, d2) = data["interval"]
        lo, hi = Fraction(int(n1), int(d1)), Fraction(int(n2), int(d2))
        alg = data.get("algebraic")
        if alg is None:
            return cls(lo, hi)
        (a, b), (c, d) = alg["u"]
        root = AlgebraicAngle(tuple(int(x) for x in alg["poly"]),
                              Fraction(int(a), int(b)), Fraction(int(c), int(d)),
                              bool(alg["mirrored"]), int(alg["scale"]), int(alg["shift"]))
        return cls(lo, hi, root)


def _common_root(r1, r2):
    """True iff two algebraic angles with the same transform denote the same point."""
    lo = max(r1.u_lo, r2.u_lo)
    hi = min(r1.u_hi, r2.u_hi)
    if lo >= hi:
        return False
    g = poly.pgcd(r1.poly, r2.poly)
    if len(g) < 2:
        return False
    return poly.count_roots(poly.sturm_sequence(g), lo, hi) > 0


def compare_breakpoints(b1, b2):
    """-1, 0 or 1 according to the order of the two (exact) points."""
    for _ in range(MAX_REFINEMENTS):
        if b1.hi < b2.lo:
            return -1
        if b2.hi < b1.lo:
            return 1
        if b1.is_exact and b2.is_exact:
            return 0
        if (b1.root is not None and b2.root is not None
                and b1.root.same_transform(b2.root) and _common_root(b1.root, b2.root)):
            return 0
        w1 = b1.hi - b1.lo
        w2 = b2.hi - b2.lo
        if w1 >= w2 and not b1.is_exact:
            b1 = b1.refined()
        elif not b2.is_exact:
            b2 = b2.refined()
        else:
            b1 = b1.refined()
    raise RootIsolationFailure("could not separate two breakpoints")


# ---------------------------------------------------------------------------
# profiles

@dataclass(frozen=True, eq=False)
class SignatureProfile:
    """Piecewise-constant signature function on (0, 1).

    ``plateaus[i]`` is the value between ``breakpoints[i-1]`` and
    ``breakpoints[i]``; the first and last plateaus touch 0 and 1.
    """

    breakpoints: tuple = ()
    plateaus: tuple = (0,)

    def __post_init__(self):
        bps, vals = self.breakpoints, self.plateaus
        if len(vals) != len(bps) + 1:
            raise KnotCGError("need exactly one more plateau than breakpoints")
        if vals[0] != 0:
            raise KnotCGError("the plateau next to 0 must vanish")
        if any(v % 2 for v in vals):
            raise KnotCGError("plateau values must be even")
        if tuple(reversed(vals)) != tuple(vals):
            raise AsymmetricJumps("plateaus are not symmetric under r -> 1 - r")
        for b in bps:
            if not (0 < b.lo and b.hi < 1):
                raise KnotCGError("breakpoints must lie in (0, 1)")
        for i in range(len(bps) // 2):
            if compare_breakpoints(bps[i].mirror(), bps[-1 - i]) != 0:
                raise AsymmetricJumps("breakpoints are not symmetric under r -> 1 - r")
        if len(bps) % 2:
            raise AsymmetricJumps("odd number of breakpoints")
        if any(a == b for a, b in zip(vals, vals[1:])):
            raise KnotCGError("zero jumps are not allowed; use canonical form")

    @classmethod
    def zero(cls):
        return cls((), (0,))

    def jumps(self):
        return [(b, self.plateaus[i + 1] - self.plateaus[i])
                for i, b in enumerate(self.breakpoints)]

    def eval(self, r):
        return evaluate(self, r)

    def minimum(self):
        return min(self.plateaus)

    def maximum(self):
        return max(self.plateaus)

    def is_exact(self):
        return all(b.is_exact for b in self.breakpoints)

    def __eq__(self, other):
        if not isinstance(other, SignatureProfile):
            return NotImplemented
        if self.plateaus != other.plateaus or len(self.breakpoints) != len(other.breakpoints):
            return False
        return all(compare_breakpoints(a, b) == 0
                   for a, b in zip(self.breakpoints, other.breakpoints))

    def __hash__(self):
        return hash(self.plateaus)

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return negate(self)

    def to_json(self):
        out = [{"plateau_first": self.plateaus[0]}]
        for b, v in zip(self.breakpoints, self.plateaus[1:]):
            out.append({"breakpoint": b.narrowed().to_json(), "plateau_after": v})
        return out

    @classmethod
    def from_json(cls, data):
        if not data or "plateau_first" not in data[0]:
            raise KnotCGError("profile JSON must start with plateau_first")
        bps = [Breakpoint.from_json(item["breakpoint"]) for item in data[1:]]
        vals = [int(data[0]["plateau_first"])] + [int(item["plateau_after"]) for item in data[1:]]
        return cls(tuple(bps), tuple(vals))

    def __repr__(self):
        parts = []
        for b in self.breakpoints:
            parts.append(str(b.lo) if b.is_exact else f"~{float(b.lo):.6f}")
        return f"SignatureProfile(breakpoints=[{', '.join(parts)}], plateaus={list(self.plateaus)})"


@dataclass(frozen=True)
class JumpList:
    """Exact jump data: strictly increasing rational locations with nonzero even jumps."""

    items: tuple

    def __post_init__(self):
        items = tuple((Fraction(loc), int(j)) for loc, j in self.items)
        object.__setattr__(self, "items", items)
        locs = [loc for loc, _ in items]
        if any(a >= b for a, b in zip(locs, locs[1:])):
            raise KnotCGError("jump locations must be strictly increasing")
        if any(j == 0 or j % 2 for _, j in items):
            raise KnotCGError("jumps must be nonzero even integers")
        if any(not 0 < loc < 1 for loc in locs):
            raise KnotCGError("jump locations must lie in (0, 1)")


def _profile_from_sorted_jumps(jumps):
    """Build a canonical profile from (Breakpoint, jump) pairs already sorted."""
    merged = []
    for b, j in jumps:
        if merged and compare_breakpoints(merged[-1][0], b) == 0:
            merged[-1] = (merged[-1][0], merged[-1][1] + j)
        else:
            merged.append((b, j))
    bps, vals = [], [0]
    for b, j in merged:
        if j:
            bps.append(b)
            vals.append(vals[-1] + j)
    if vals[-1] != 0:
        raise AsymmetricJumps("jumps do not sum to zero")
    return SignatureProfile(tuple(bps), tuple(vals))


def profile_from_jumps(J):
    """Cumulative-sum profile of an exact jump list."""
    if not isinstance(J, JumpList):
        J = JumpList(tuple(J))
    table = dict(J.items)
    for loc, j in J.items:
        if table.get(1 - loc) != -j:
            raise AsymmetricJumps(f"jump {j} at {loc} has no opposite jump at {1 - loc}")
    return _profile_from_sorted_jumps([(Breakpoint.exact(loc), j) for loc, j in J.items])


def _locate(P, r):
    """(index, on_breakpoint) of the rational r relative to P's breakpoints."""
    target = Breakpoint.exact(r)
    lo, hi = 0, len(P.breakpoints)
    while lo < hi:
        mid = (lo + hi) // 2
        c = compare_breakpoints(P.breakpoints[mid], target)
        if c == 0:
            return mid, True
        if c < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo, False


def evaluate(P, r):
    """sigma_r as an exact Fraction; averaged at breakpoints."""
    r = Fraction(r)
    if not 0 <= r <= 1:
        raise OutOfRange(f"r = {r} is outside [0, 1]")
    if r == 0 or r == 1:
        return Fraction(0)
    i, on = _locate(P, r)
    if on:
        return Fraction(P.plateaus[i] + P.plateaus[i + 1], 2)
    return Fraction(P.plateaus[i])


eval = evaluate  # noqa: A001  (module-level name used by the public interface)


def _merged(jump_lists):
    items = [x for jl in jump_lists for x in jl]
    items.sort(key=cmp_to_key(lambda a, b: compare_breakpoints(a[0], b[0])))
    return _profile_from_sorted_jumps(items)


def add(P1, P2):
    return _merged([P1.jumps(), P2.jumps()])


def negate(P):
    return SignatureProfile(P.breakpoints, tuple(-v for v in P.plateaus))


def sum_profiles(profiles):
    return _merged([P.jumps() for P in profiles])


def satellite_pullback(companion, w, orbit):
    """Profile of r -> companion(w r mod 1) + orbit(r)."""
    if w < 0:
        raise ValueError("winding number must be nonnegative")
    if w == 0:
        return orbit
    pulled = [(b.pullback(w, j), jump) for j in range(w) for b, jump in companion.jumps()]
    return _merged([pulled, orbit.jumps()])


def minimum(P):
    """Least value of the profile over (0, 1); averages never go below the plateaus."""
    return Fraction(P.minimum())


# ---------------------------------------------------------------------------
# profiles of Seifert forms

def _form(F):
    return F if isinstance(F, SeifertForm) else validate_seifert(F)


def _symmetric_alexander(F):
    """Coefficients c_0..c_{2g} of Delta, checked palindromic of formal degree 2g."""
    delta = alexander(F).coeffs
    n = F.size
    c = list(delta) + [0] * (n + 1 - len(delta))
    if c != c[::-1]:
        raise KnotCGError("Alexander polynomial is not palindromic")
    return c


def tangent_polynomial(coeffs):
    """P(u) with Delta(e^{2 pi i r}) = (unit) P(tan(pi r)) / (1 + u^2)^g.

    ``coeffs`` is a palindromic coefficient list of even formal degree 2g.
    """
    g = (len(coeffs) - 1) // 2
    one_plus = [1, 0, 1]
    out = poly.pscale(coeffs[g], _pow(one_plus, g))
    for j in range(1, g + 1):
        term = poly.pmul(poly.binomial_real_part(2 * j), _pow(one_plus, g - j))
        out = poly.padd(out, poly.pscale(2 * coeffs[g + j], term))
    return out


def _pow(a, e):
    out = [1]
    for _ in range(e):
        out = poly.pmul(out, a)
    return out


def plateau_signature(F, u):
    """Exact signature of A_r at u = tan(pi r) > 0 (A_r assumed nonsingular)."""
    F = _form(F)
    u = Fraction(u)
    X = linalg.scale(u, F.symmetric)
    Y = linalg.scale(-1, F.skew)
    return linalg.hermitian_signature(X, Y)


def _rational_angles(d):
    return sorted(Fraction(s, d) for s in range(1, d) if gcd(s, d) == 1 and 2 * s < d)


def _non_root_above(seq, sqf, x, limit):
    """A rational point in (x, limit) that is not a root, with no root in between."""
    step = (limit - x) / 2
    for _ in range(MAX_REFINEMENTS):
        y = x + step
        if poly.count_roots(seq, x, y) == 0:
            return y
        step /= 2
    raise RootIsolationFailure("could not step past a rational root")


def profile_from_seifert(F):
    F = _form(F)
    coeffs = _symmetric_alexander(F)
    P = tangent_polynomial(coeffs)
    sqf = poly.squarefree(P)
    seq = poly.sturm_sequence(sqf)
    bound = poly.root_bound(sqf)
    intervals = poly.isolate_real_roots(sqf, 0, bound, seq) if len(sqf) > 1 else []

    # rational angles come from cyclotomic factors of Delta
    cyc = {}
    if len(poly._strip(coeffs)) > 1:
        for d in poly.cyclotomic_factors(poly._strip(coeffs)):
            if d >= 3:
                q = tangent_polynomial(list(poly.cyclotomic(d)))
                cyc[d] = poly.sturm_sequence(poly.squarefree(q))

    points = []  # one Breakpoint per positive root of P, ascending
    for lo, hi in intervals:
        exact = None
        for d, qseq in cyc.items():
            if poly.count_roots(qseq, lo, hi) == 1:
                index = poly.count_roots(qseq, 0, lo)
                exact = _rational_angles(d)[index]
                break
        if exact is not None:
            points.append(Breakpoint.exact(exact))
        else:
            root = AlgebraicAngle(tuple(sqf), lo, hi)
            points.append(Breakpoint.algebraic(root).narrowed())

    # plateau sample points u_0 < root_0 < u_1 < ... < root_last < u_last
    samples = []
    if intervals:
        lo0, hi0 = intervals[0]
        samples.append(lo0 if lo0 > 0 else _first_sample(seq, hi0))
        for i, (lo, hi) in enumerate(intervals):
            nxt = intervals[i + 1][1] if i + 1 < len(intervals) else bound + 1
            samples.append(hi if poly.peval(sqf, hi) != 0 else _non_root_above(seq, sqf, hi, nxt))
    else:
        samples.append(Fraction(1))
    values = [plateau_signature(F, u) for u in samples]
    if values[0] != 0:
        raise KnotCGError("signature near r = 0 is nonzero; invalid Seifert form?")

    jumps = [(b, values[i + 1] - values[i]) for i, b in enumerate(points)]
    mirrored = [(b.mirror(), -j) for b, j in reversed(jumps)]
    return _profile_from_sorted_jumps(jumps + mirrored)


def _first_sample(seq, hi):
    x = hi
    for _ in range(MAX_REFINEMENTS):
        x /= 2
        if poly.count_roots(seq, 0, x) == 0:
            return x
    raise RootIsolationFailure("could not find a point below the first root")


def sigma_half(F):
    """sigma_{1/2}: the signature of A + A^t.

    A + A^t is never singular for a Seifert form (its determinant is
    +-Delta(-1), an odd number), so no averaging is needed.
    """
    F = _form(F)
    pos, neg, zero = linalg.inertia(F.symmetric)
    if zero:
        raise KnotCGError("A + A^t is singular; not a Seifert form")
    return pos - neg


def is_singular_at(F, r):
    """True iff A_r is singular at the rational r, i.e. Phi_d divides Delta."""
    F = _form(F)
    r = Fraction(r)
    if not 0 < r < 1:
        raise OutOfRange("r must lie strictly between 0 and 1")
    delta = poly._strip(alexander(F).coeffs)
    return poly.divides(poly.cyclotomic(r.denominator), delta)


def signature_numeric(F, r, tol=1e-9):
    """Floating-point signature of A_r, refused when an eigenvalue is near zero."""
    F = _form(F)
    A = np.array(F.matrix, dtype=float)
    zeta = np.exp(2j * np.pi * float(r))
    Ar = (1 - zeta) * A + (1 - np.conj(zeta)) * A.T
    eig = np.linalg.eigvalsh(Ar)
    if np.min(np.abs(eig)) < tol * max(1.0, np.max(np.abs(eig))):
        raise KnotCGError("A_r is numerically singular at this r")
    return int(np.sum(eig > 0) - np.sum(eig < 0))
