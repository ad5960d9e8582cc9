"""Twisted doubles D_k(K): Seifert data, Casson-Gordon values and verdicts.

D_k(K) has Seifert matrix [[-1, 1], [0, k]] whatever the companion K;
the companion enters only through the knot J_x carried by a band, whose
signature profile is built from K's profile and torus-knot profiles.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd, isqrt

from sympy import factorint, isprime

from . import linalg
from . import signature_profiles as sp
from .branched_covers import lucas_order
from .casson_gordon import Genus1Data, prime_power_base, s_sequence, sigma1_tau
from .core_forms import (
    Metabolizer,
    alexander,
    alexander_coprime,
    isometric_structure,
    validate_seifert,
)
from .errors import BadPrime, DuplicateTwist, NoWitness
from .torus_signatures import profile_T2, profile_Tll1, sigma_T2, sigma_Tll1

NAIK_CHANGE = ((1, 0), (2, 1))


# ---------------------------------------------------------------------------
# Seifert data

def double_seifert(k):
    return validate_seifert([[-1, 1], [0, k]])


def naik_basis_double(k):
    """The Seifert matrix in the basis x = (1, 2), y = (0, 1): [[4k+1, 2k+1], [2k, k]]."""
    P = NAIK_CHANGE
    A = linalg.matmul(linalg.matmul(linalg.transpose(P), double_seifert(k).matrix), P)
    assert A == ((4 * k + 1, 2 * k + 1), (2 * k, k))
    return validate_seifert(A)


class LevineClass(enum.Enum):
    InfiniteOrder = "InfiniteOrder"
    AlgSlice = "AlgSlice"
    Order2 = "Order2"
    Order4 = "Order4"


def levine_class(k):
    """Order of D_k(K) in the algebraic concordance group."""
    if k < 0:
        return LevineClass.InfiniteOrder
    n = 4 * k + 1
    if isqrt(n) ** 2 == n:
        return LevineClass.AlgSlice
    if all(e % 2 == 0 for p, e in factorint(n).items() if p % 4 == 3):
        return LevineClass.Order2
    return LevineClass.Order4


def eigen_metabolizers(l):
    """(v+, -l) and (v-, l+1): eigenvectors of G for D_{l(l+1)}."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    G = isometric_structure(double_seifert(l * (l + 1))).matrix
    plus, minus = (l + 1, 1), (-l, 1)
    assert linalg.matvec(G, plus) == tuple(-l * x for x in plus)
    assert linalg.matvec(G, minus) == tuple((l + 1) * x for x in minus)
    return (Metabolizer((plus,), eigenvalue=-l), Metabolizer((minus,), eigenvalue=l + 1))


def eigen_seifert(l, sign):
    """Seifert matrix of D_{l(l+1)} with the eigenvector x^+ or x^- as first basis vector.

    Both have a = 0; m^+ = -l-1 and m^- = l.
    """
    m = -l - 1 if sign > 0 else l
    return validate_seifert([[0, -m], [-(m + 1), -1]])


# ---------------------------------------------------------------------------
# J_x profiles

def jx_profile_algslice(l, companion):
    """J_x = T_{l,-l-1} # K."""
    return sp.add(profile_Tll1(l), companion)


def jx_profile_general(k, companion):
    """J_x = K(T_{2,2k+1}), the satellite with winding number 2."""
    return sp.satellite_pullback(companion, 2, profile_T2(k))


def double_profile(k):
    """Signature profile of D_k(K); independent of K."""
    return sp.profile_from_seifert(double_seifert(k))


def naik_data(k, companion):
    return Genus1Data(4 * k + 1, -(2 * k + 1), k, double_profile(k),
                      jx_profile_general(k, companion))


def algslice_data(l, companion, sign):
    m = -l - 1 if sign > 0 else l
    return Genus1Data(0, m, -1, double_profile(l * (l + 1)), jx_profile_algslice(l, companion))


@dataclass(frozen=True)
class DoubleSpec:
    k: int
    companion: sp.SignatureProfile

    @property
    def companion_min(self):
        """M = 2 min_r sigma_r(K)."""
        return 2 * sp.minimum(self.companion)


# ---------------------------------------------------------------------------
# Casson-Gordon values

def _sig2(companion, r):
    """sigma_{2r mod 1}(K)."""
    x = (2 * Fraction(r)) % 1
    return sp.evaluate(companion, x)


def cg_value_q2(k, companion, r):
    """2 sigma_{2r}(K) + 2 sigma_r(T_{2,2k+1}) + 4 r (1 - r)(4k+1) at any rational r in (0, 1)."""
    r = Fraction(r)
    return 2 * _sig2(companion, r) + 2 * sigma_T2(k, r) + 4 * r * (1 - r) * (4 * k + 1)


def cg_double_q2(k, companion, p, s):
    """sigma_1 tau(D_k(K), chi_{s/p}) for a prime p dividing 4k+1."""
    if k < 1:
        raise ValueError("cg_double_q2 needs k >= 1")
    if not isprime(p) or (4 * k + 1) % p:
        raise BadPrime(f"{p} is not a prime dividing {4 * k + 1}")
    if not 0 < s < p:
        raise ValueError("need 0 < s < p")
    return cg_value_q2(k, companion, Fraction(s, p))


def cg_double_algslice(l, companion, q, p, s, sign):
    """sum_i sigma_{s_i/p}(T_{l,-l-1}) + sigma_{s_i/p}(K), s_i from m^+ or m^-."""
    if l < 1:
        raise ValueError("l must be at least 1")
    h = (l + 1) ** q - l ** q
    if not isprime(p) or h % p:
        raise BadPrime(f"{p} is not a prime dividing (l+1)^q - l^q = {h}")
    m = -l - 1 if sign > 0 else l
    total = Fraction(0)
    for si in s_sequence(m, p, s, q):
        r = Fraction(si, p)
        total += sigma_Tll1(l, r) + sp.evaluate(companion, r)
    return total


# ---------------------------------------------------------------------------
# bound lemmas

@dataclass(frozen=True)
class MinmaxResult:
    min_value: Fraction
    argmin: Fraction
    bound_ok: bool
    argmins: tuple
    prime_power_min: Fraction
    prime_power_argmin: Fraction
    values: dict = field(compare=False, repr=False)

    def __iter__(self):
        return iter((self.min_value, self.argmin, self.bound_ok))


def minmax_bounds(k, companion):
    """Minimum of the q = 2 values over every r = s/(4k+1), 0 < s < 4k+1.

    Values with a prime-power reduced denominator are also computed through
    the general genus-one formula and must agree. The minimum over those
    alone is reported as ``prime_power_min``. ``argmins`` lists minimizers
    up to r -> 1 - r.
    """
    if k < 3:
        raise ValueError("minmax_bounds needs k >= 3")
    n = 4 * k + 1
    data = naik_data(k, companion)
    values = {}
    for s in range(1, n):
        r = Fraction(s, n)
        v = cg_value_q2(k, companion, r)
        d = r.denominator
        if prime_power_base(d) is not None:
            check = sigma1_tau(data, 2, d, r.numerator).value
            assert check == v, f"closed form {v} != general formula {check} at r = {r}"
        values[r] = v
    low = min(values.values())
    # chi and -chi give the same value; report representatives with r <= 1/2
    argmins = tuple(sorted(r for r, v in values.items() if v == low and 2 * r <= 1))
    pp = {r: v for r, v in values.items() if prime_power_base(r.denominator) is not None}
    pp_low = min(pp.values())
    pp_arg = min(r for r, v in pp.items() if v == pp_low)
    M = 2 * sp.minimum(companion)
    return MinmaxResult(low, argmins[0], low >= M - Fraction(4, n), argmins, pp_low, pp_arg, values)


def quadratic_lower_bound(k, r):
    """g(r) = -2(4k+1) r^2 + 4 k r - 1, a lower bound for sigma_r(T_{2,2k+1}) + 2r(1-r)(4k+1)."""
    r = Fraction(r)
    return -2 * (4 * k + 1) * r * r + 4 * k * r - 1


def structured_s(p):
    """s with p = 4s + 1 or p = 4s - 1."""
    if p % 4 == 1:
        return (p - 1) // 4
    if p % 4 == 3:
        return (p + 1) // 4
    raise BadPrime(f"{p} is not odd")


def find_k0(p, companion, C0, k_max=400):
    """Smallest k0 with sigma_1 tau(D_k(K), chi_{s/p}) > C0 for all swept k >= k0 (p | 4k+1).

    Returns None if the largest admissible k in range already fails.
    """
    s = structured_s(p)
    ks = [k for k in range(1, k_max + 1) if (4 * k + 1) % p == 0]
    k0 = None
    for k in reversed(ks):
        if cg_double_q2(k, companion, p, s) > C0:
            k0 = k
        else:
            break
    return k0


def estimate_b_search(l, q, p, sign, C0, exhaustive_limit=2000):
    """An s with sum_i sigma_{s_i/p}(T_{l,-l-1}) > q C0.

    Follows the coset construction: split (Z/p)^* into cosets of <a>,
    a = 1 + m*, pick a coset meeting P = [p/4, 3p/4] in at least half its
    elements, then the shift with the most orbit points in P. Falls back to
    an exhaustive search when p is small.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    m = -l - 1 if sign > 0 else l
    a = (1 + pow(m, -1, p)) % p
    if a == 0:
        raise BadPrime(f"1 + m* vanishes mod {p}")

    def achieved(s):
        return sum((sigma_Tll1(l, Fraction(si, p)) for si in s_sequence(m, p, s, q)), Fraction(0))

    def in_P(x):
        return 4 * x >= p and 4 * x <= 3 * p

    e = 1
    x = a
    while x != 1:
        x = (x * a) % p
        e += 1
    candidates = []
    if p <= exhaustive_limit * 50:
        seen = set()
        for z in range(1, p):
            if z in seen:
                continue
            coset = [(z * pow(a, i, p)) % p for i in range(e)]
            seen.update(coset)
            if 2 * sum(1 for c in coset if in_P(c)) >= e:
                best_d, best_count = 0, -1
                for d0 in range(e):
                    count = sum(1 for c in range(q) if in_P((pow(a, c + d0, p) * z) % p))
                    if count > best_count:
                        best_d, best_count = d0, count
                candidates.append((pow(a, best_d, p) * z) % p)
                break
    for s in candidates:
        value = achieved(s)
        if value > q * C0:
            return s, value
    if p <= exhaustive_limit:
        best = max(range(1, p), key=lambda s: (achieved(s), -s))
        value = achieved(best)
        if value > q * C0:
            return best, value
    raise NoWitness(f"no s found with orbit sum above {q * C0} (l={l}, q={q}, p={p})")


# ---------------------------------------------------------------------------
# verdicts

class Verdict(enum.Enum):
    InfiniteAlgebraicOrder = "InfiniteAlgebraicOrder"
    NonVanishing = "NonVanishing"
    Inconclusive = "Inconclusive"


@dataclass(frozen=True)
class CertificateEntry:
    character: str
    value: Fraction
    tag: str

    def to_json(self):
        v = self.value
        value = None if v is None else f"{v.numerator}/{v.denominator}"
        return {"character": self.character, "value": value, "tag": self.tag}


@dataclass(frozen=True)
class ObstructionReport:
    verdict: Verdict
    certificate: tuple = ()

    def __post_init__(self):
        if self.verdict is Verdict.NonVanishing:
            if not any(c.value is not None and c.value > 0 and c.tag.startswith("bound")
                       for c in self.certificate):
                raise AssertionError("NonVanishing needs a certified positive bound")

    def to_json(self):
        return {"verdict": self.verdict.value,
                "certificate": [c.to_json() for c in self.certificate]}


def _frac(x):
    return Fraction(x)


def ribbon_obstruction_verdict(n, k, companion):
    """Gilmer ribbon obstruction for n copies of D_k(K), via q = 2 characters.

    For each prime p | 4k+1 and s with p = 4s +- 1, a character in the
    metabolizer has n - n0 entries chi_{s/p} and n0 <= n/2 arbitrary
    entries chi_{s'/p}. The value is bounded below by
    (n - n0) V + n0 * floor with floor = min(0, min_{s'} value(s'/p)).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0:
        return ObstructionReport(Verdict.InfiniteAlgebraicOrder, (
            CertificateEntry(f"D_{k}", None, "levine: k < 0 has infinite algebraic order"),))
    if k == 0:
        return ObstructionReport(Verdict.Inconclusive, (
            CertificateEntry("D_0", None, "no q = 2 characters (4k+1 = 1)"),))
    cert = []
    for p in sorted(factorint(4 * k + 1)):
        s = structured_s(p)
        V = cg_double_q2(k, companion, p, s)
        floor = min([Fraction(0)] + [cg_double_q2(k, companion, p, t) for t in range(1, p)])
        worst = min((n - n0) * V + n0 * floor for n0 in range(0, n // 2 + 1))
        cert.append(CertificateEntry(f"chi_{s}/{p}", V, "value"))
        cert.append(CertificateEntry(f"chi_*/{p}", floor, "floor"))
        cert.append(CertificateEntry(f"n={n}, p={p}", worst, "bound: min over n0 <= n/2"))
        if worst > 0:
            return ObstructionReport(Verdict.NonVanishing, tuple(cert))
    return ObstructionReport(Verdict.Inconclusive, tuple(cert))


def _odd_primes(limit):
    return [q for q in range(3, limit + 1, 2) if isprime(q)]


def _prime_factors(h, trial_limit=10 ** 6):
    found = factorint(h, limit=trial_limit)
    out = []
    for p in found:
        if isprime(p):
            out.append(p)
    return sorted(out)


def _slice_candidates(l, q, p, sign, companion, C0, exhaustive_limit=2000):
    cands = set()
    try:
        s, _ = estimate_b_search(l, q, p, sign, C0, exhaustive_limit=0)
        cands.add(s)
    except NoWitness:
        pass
    cands.add(p // 2)
    # points inside positive plateaus of the companion
    P = companion
    for i, v in enumerate(P.plateaus):
        if v > 0:
            lo = P.breakpoints[i - 1].hi if i > 0 else Fraction(0)
            hi = P.breakpoints[i].lo if i < len(P.breakpoints) else Fraction(1)
            s = int((lo + hi) / 2 * p)
            if 0 < s < p:
                cands.add(s)
    if p <= exhaustive_limit:
        cands.update(range(1, p))
    return sorted(c for c in cands if 0 < c < p)


def slice_obstruction_verdict(n, l, companion, exclude_primes=(), max_q=97):
    """Gilmer slice obstruction for n copies of the algebraically slice D_{l(l+1)}(K).

    A metabolizer contains a vector whose character has e >= n/2 entries
    x^{+-} (x) s/p and n - e further entries; each orbit sum of the latter
    is at least floor = min(0, q * min_r sigma_r(K)), so the value is at
    least e S(s) + (n - e) floor. Both signs must be certified.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if l < 1:
        return ObstructionReport(Verdict.Inconclusive, (
            CertificateEntry(f"l={l}", None, "untwisted or singular double; not covered"),))
    k = l * (l + 1)
    Mmin = sp.minimum(companion)
    C0 = 2 * abs(Mmin)
    excluded = set(exclude_primes)
    cert = []
    for q in _odd_primes(max_q):
        h = (l + 1) ** q - l ** q
        assert lucas_order(k, q) == h * h
        for p in _prime_factors(h):
            if p in excluded:
                continue
            floor = min(Fraction(0), q * Mmin)
            per_sign = []
            for sign in (1, -1):
                best = None
                for s in _slice_candidates(l, q, p, sign, companion, C0):
                    S = cg_double_algslice(l, companion, q, p, s, sign)
                    lb = min(e * S + (n - e) * floor for e in (ceil(n / 2), n))
                    if best is None or lb > best[1]:
                        best = (s, lb, S)
                per_sign.append((sign, best))
            ok = all(b is not None and b[1] > 0 for _, b in per_sign)
            entries = []
            for sign, (s, lb, S) in per_sign:
                tag = "+" if sign > 0 else "-"
                entries.append(CertificateEntry(f"x{tag} (x) {s}/{p}, q={q}", S, "orbit sum"))
                entries.append(CertificateEntry(f"x{tag}, n={n}, q={q}, p={p}", lb,
                                                "bound: min over e >= n/2"))
            if ok:
                return ObstructionReport(Verdict.NonVanishing, tuple(cert + entries))
            if not cert:
                cert = entries
    return ObstructionReport(Verdict.Inconclusive, tuple(cert))


@dataclass(frozen=True)
class IndependenceReport:
    entries: tuple
    coprime_pairs: tuple
    certified: tuple
    inconclusive: tuple

    def to_json(self):
        return {
            "entries": [{"l": l, "k": k, "n": n, "nonsingular": ns, "verdict": r.verdict.value}
                        for l, k, n, ns, r in self.entries],
            "coprime_pairs": [[a, b, ok] for a, b, ok in self.coprime_pairs],
            "certified": list(self.certified),
            "inconclusive": list(self.inconclusive),
        }


def independence_certificate(entries, companion, exclude_primes=(), max_q=97):
    """Check the hypotheses that make the doubles D_{l(l+1)}(K) independent."""
    ls = [l for l, _ in entries]
    if len(set(ls)) != len(ls):
        raise DuplicateTwist("twist parameters must be distinct")
    rows = []
    for l, n in entries:
        k = l * (l + 1)
        nonsingular = linalg.det(double_seifert(k).matrix) != 0
        report = slice_obstruction_verdict(n, l, companion, exclude_primes, max_q)
        rows.append((l, k, n, nonsingular, report))
    pairs = []
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            ki, kj = rows[i][1], rows[j][1]
            pairs.append((ls[i], ls[j],
                          alexander_coprime(alexander(double_seifert(ki)),
                                            alexander(double_seifert(kj)))))
    all_coprime = all(ok for _, _, ok in pairs)
    certified, inconclusive = [], []
    for l, k, n, ns, report in rows:
        if ns and all_coprime and report.verdict is Verdict.NonVanishing:
            certified.append(l)
        else:
            inconclusive.append(l)
    return IndependenceReport(tuple(rows), tuple(pairs), tuple(certified), tuple(inconclusive))


# ---------------------------------------------------------------------------
# the q = 2 table

def q2_table(ks, companion):
    """Rows (k, s, 4k+1, value) with value = sigma_1 tau / 2 - sigma_{2r}(K), r = s/(4k+1).

    Each value is computed through the general genus-one formula with d the
    reduced denominator of r (a prime power), and cross-checked against the
    closed q = 2 expression.
    """
    rows = []
    for k in ks:
        n = 4 * k + 1
        data = naik_data(k, companion)
        for s in range(1, 2 * k + 1):
            r = Fraction(s, n)
            d = r.denominator
            if prime_power_base(d) is None:
                continue
            v = sigma1_tau(data, 2, d, r.numerator).value
            assert v == cg_value_q2(k, companion, r)
            rows.append((k, s, n, v / 2 - _sig2(companion, r)))
    return rows
