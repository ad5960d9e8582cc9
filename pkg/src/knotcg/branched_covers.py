"""First homology of cyclic branched covers and their character groups.

For a Seifert form with isometric structure G, the integer matrix
eps^q = G^q - (G - I)^q presents H_1 of the q-fold branched cover. Its
Smith normal form gives the group structure, and the kernel N^q of
eps^q acting on (Q/Z)^{2g} is read off from the column transform.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg
from . import polynomials as poly
from .core_forms import SeifertForm, isometric_structure, validate_seifert
from .errors import ConstantPolynomial, InfiniteHomology
from .polynomials import IntPolynomial

INFINITE = math.inf


def _form(F):
    return F if isinstance(F, SeifertForm) else validate_seifert(F)


def _frac_mod1(x):
    x = Fraction(x)
    return x - math.floor(x)


@dataclass(frozen=True)
class CharacterQ:
    """A vector in (Q/Z)^{2g}, coordinates normalized into [0, 1)."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_frac_mod1(x) for x in self.coords))

    @property
    def order(self):
        out = 1
        for x in self.coords:
            out = math.lcm(out, x.denominator)
        return out

    def is_zero(self):
        return all(x == 0 for x in self.coords)

    def __add__(self, other):
        return CharacterQ(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, n):
        return CharacterQ(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def to_json(self):
        return [[x.numerator, x.denominator] for x in self.coords]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(Fraction(int(n), int(d)) for n, d in data))


class CharacterGroup(NamedTuple):
    """A finite group of characters as a direct sum of cyclic groups."""

    orders: tuple
    generators: tuple

    @property
    def order(self):
        return math.prod(self.orders)


@dataclass(frozen=True)
class CoverHomology:
    q: int
    presentation: tuple
    snf_diagonal: tuple
    order: object
    left_transform: tuple
    right_transform: tuple

    @property
    def is_finite(self):
        return self.order != INFINITE

    def kernel(self):
        if not self.is_finite:
            raise InfiniteHomology(f"H_1 of the {self.q}-fold cover is infinite")
        n = len(self.presentation)
        V = self.right_transform
        orders, gens = [], []
        for i, d in enumerate(self.snf_diagonal):
            if d > 1:
                orders.append(d)
                gens.append(CharacterQ(tuple(Fraction(V[j][i], d) for j in range(n))))
        return CharacterGroup(tuple(orders), tuple(gens))

    def to_json(self):
        out = {
            "q": self.q,
            "presentation": [[str(x) for x in row] for row in self.presentation],
            "snf": [str(d) for d in self.snf_diagonal],
            "order": "infinite" if not self.is_finite else str(self.order),
        }
        if self.is_finite:
            out["generators"] = [g.to_json() for g in self.kernel().generators]
        return out


def presentation_matrix(F, q):
    """eps^q = G^q - (G - I)^q."""
    if q < 2:
        raise ValueError("q must be at least 2")
    F = _form(F)
    G = isometric_structure(F).matrix
    I = linalg.identity(len(G))
    return linalg.matsub(linalg.matpow(G, q), linalg.matpow(linalg.matsub(G, I), q))


def cover_homology(F, q):
    eps = presentation_matrix(F, q)
    U, D, V = linalg.smith_normal_form(eps)
    diag = tuple(D[i][i] for i in range(len(D)))
    order = INFINITE if 0 in diag else math.prod(diag)
    return CoverHomology(q, eps, diag, order, U, V)


def homology_order(F, q):
    """|H_1| of the q-fold branched cover, or INFINITE."""
    d = abs(linalg.det(presentation_matrix(F, q)))
    return INFINITE if d == 0 else d


def t_power_minus_one(q):
    return IntPolynomial((-1,) + (0,) * (q - 1) + (1,))


def resultant(f, g):
    """Sylvester resultant of two nonconstant integer polynomials."""
    f = f if isinstance(f, IntPolynomial) else IntPolynomial(tuple(f))
    g = g if isinstance(g, IntPolynomial) else IntPolynomial(tuple(g))
    if f.degree < 1 or g.degree < 1:
        raise ConstantPolynomial("resultant needs nonconstant polynomials")
    return poly.resultant(f, g)


def lucas_order(k, q):
    """L_q^2 for L_0 = 2, L_1 = 1, L_j = L_{j-1} + k L_{j-2}."""
    if k < 1 or q < 1 or q % 2 == 0:
        raise ValueError("lucas_order needs k >= 1 and odd q")
    prev, cur = 2, 1
    for _ in range(q - 1):
        prev, cur = cur, cur + k * prev
    return cur * cur


def kernel_Nq(F, q):
    """The character group N^q as cyclic orders and generating characters."""
    return cover_homology(F, q).kernel()


def p_primary(group, p):
    """The p-primary part of a character group."""
    orders, gens = [], []
    for d, g in zip(group.orders, group.generators):
        pe = 1
        while d % (pe * p) == 0:
            pe *= p
        if pe > 1:
            orders.append(pe)
            gens.append(g * (d // pe))
    return CharacterGroup(tuple(orders), tuple(gens))


def in_Nq(F, q, chi):
    """True iff eps^q chi is integral."""
    eps = presentation_matrix(F, q)
    coords = chi.coords if isinstance(chi, CharacterQ) else tuple(Fraction(x) for x in chi)
    image = linalg.matvec(eps, coords)
    return all(Fraction(x).denominator == 1 for x in image)


def group_elements(group):
    """Every element of a (small) character group."""
    elems = {CharacterQ(tuple(Fraction(0) for _ in group.generators[0].coords))} if group.generators else set()
    for d, g in zip(group.orders, group.generators):
        elems = {e + g * i for e in elems for i in range(d)}
    return elems
