"""Exact bivariate polynomials in the Cartan pair (h, hbar).

Everything downstream (module actions, saturation, weight functionals) is
built on C[h, hbar] with exact rational coefficients.  A polynomial is a
sparse map from exponent pairs (i, j) -- meaning h^i * hbar^j -- to
``fractions.Fraction``.  Zero coefficients are never stored, so equality of
the underlying dicts is equality of polynomials.

The degree of the zero polynomial is the dedicated marker ``NEG_INF`` which
compares strictly below every integer; it is never the integer -1.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Tuple, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

Exponent = Tuple[int, int]


class _NegInfinity:
    """Degree of the zero polynomial: below every integer, equal to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, _NegInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInfinity)

    def __neg__(self):
        raise ArithmeticError("cannot negate the minus-infinity degree marker")

    def __repr__(self):
        return "NEG_INF"


NEG_INF = _NegInfinity()


def to_rational(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or string like '3', '-7/4' to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational: {x!r}")


def format_rational(x: Fraction) -> str:
    """Serialize as 'num/den' (always with the slash, canonical lowest terms)."""
    return f"{x.numerator}/{x.denominator}"


class PolyHH:
    """A polynomial in h and hbar over Q, stored sparsely.

    Instances are treated as immutable: all operations return new objects.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Dict[Exponent, RationalLike] | None = None):
        c: Dict[Exponent, Fraction] = {}
        if coeffs:
            for (i, j), v in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in PolyHH: {(i, j)}")
                v = to_rational(v)
                if v:
                    c[(int(i), int(j))] = v
        self._c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "PolyHH":
        return PolyHH()

    @staticmethod
    def const(v: RationalLike) -> "PolyHH":
        return PolyHH({(0, 0): to_rational(v)})

    @staticmethod
    def h() -> "PolyHH":
        return PolyHH({(1, 0): 1})

    @staticmethod
    def hbar() -> "PolyHH":
        return PolyHH({(0, 1): 1})

    @staticmethod
    def term(i: int, j: int, v: RationalLike = 1) -> "PolyHH":
        return PolyHH({(i, j): to_rational(v)})

    @staticmethod
    def from_hbar_coeffs(coeffs: Iterable[RationalLike]) -> "PolyHH":
        """Univariate polynomial in hbar from its coefficient list (q_0, q_1, ...)."""
        return PolyHH({(0, j): to_rational(v) for j, v in enumerate(coeffs)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, i: int, j: int) -> Fraction:
        return self._c.get((i, j), Fraction(0))

    def terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(sorted(self._c.items()))

    def deg_h(self):
        if not self._c:
            return NEG_INF
        return max(i for (i, _) in self._c)

    def deg_hbar(self):
        if not self._c:
            return NEG_INF
        return max(j for (_, j) in self._c)

    def bidegree(self):
        return (self.deg_h(), self.deg_hbar())

    def within_bidegree(self, cap_h: int, cap_hbar: int) -> bool:
        """True when every stored exponent pair fits under (cap_h, cap_hbar)."""
        return all(i <= cap_h and j <= cap_hbar for (i, j) in self._c)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "PolyHH") -> "PolyHH":
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, Fraction(0)) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = PolyHH.__new__(PolyHH)
        out._c = c
        return out

    def __sub__(self, other: "PolyHH") -> "PolyHH":
        return self + (-other)

    def __neg__(self) -> "PolyHH":
        out = PolyHH.__new__(PolyHH)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __mul__(self, other) -> "PolyHH":
        if isinstance(other, PolyHH):
            c: Dict[Exponent, Fraction] = {}
            for (i1, j1), v1 in self._c.items():
                for (i2, j2), v2 in other._c.items():
                    e = (i1 + i2, j1 + j2)
                    w = c.get(e, Fraction(0)) + v1 * v2
                    if w:
                        c[e] = w
                    else:
                        c.pop(e, None)
            out = PolyHH.__new__(PolyHH)
            out._c = c
            return out
        return self.scale(other)

    def __rmul__(self, other) -> "PolyHH":
        return self.scale(other)

    def scale(self, v: RationalLike) -> "PolyHH":
        v = to_rational(v)
        out = PolyHH.__new__(PolyHH)
        out._c = {} if not v else {e: v * w for e, w in self._c.items()}
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyHH) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    # -- substitutions and calculus ----------------------------------------

    def shift_h(self, d: RationalLike) -> "PolyHH":
        """Return p(h + d, hbar), expanded exactly by the binomial theorem."""
        d = to_rational(d)
        if not d:
            return self
        c: Dict[Exponent, Fraction] = {}
        for (i, j), v in self._c.items():
            for k in range(i + 1):
                e = (k, j)
                w = c.get(e, Fraction(0)) + v * comb(i, k) * d ** (i - k)
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        out = PolyHH.__new__(PolyHH)
        out._c = c
        return out

    def shift_hbar(self, d: RationalLike) -> "PolyHH":
        """Return p(h, hbar + d)."""
        d = to_rational(d)
        if not d:
            return self
        c: Dict[Exponent, Fraction] = {}
        for (i, j), v in self._c.items():
            for k in range(j + 1):
                e = (i, k)
                w = c.get(e, Fraction(0)) + v * comb(j, k) * d ** (j - k)
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        out = PolyHH.__new__(PolyHH)
        out._c = c
        return out

    def dbar(self) -> "PolyHH":
        """Formal partial derivative with respect to hbar."""
        c: Dict[Exponent, Fraction] = {}
        for (i, j), v in self._c.items():
            if j > 0:
                c[(i, j - 1)] = v * j
        out = PolyHH.__new__(PolyHH)
        out._c = c
        return out

    def eval_at(self, h_val: RationalLike, hb_val: RationalLike) -> Fraction:
        h_val = to_rational(h_val)
        hb_val = to_rational(hb_val)
        total = Fraction(0)
        for (i, j), v in self._c.items():
            total += v * h_val**i * hb_val**j
        return total

    # -- text form ----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form, e.g. '3/2*h^2*hb^1 + -1*hb^0'.

        Terms are sorted descending by (deg_h, deg_hbar); zero-exponent
        factors are omitted except that the pure constant keeps the
        placeholder 'hb^0'.  The zero polynomial prints as '0'.
        """
        if not self._c:
            return "0"
        parts = []
        for (i, j) in sorted(self._c, reverse=True):
            v = self._c[(i, j)]
            factors = [str(v)]
            if i > 0:
                factors.append(f"h^{i}")
            if j > 0:
                factors.append(f"hb^{j}")
            if i == 0 and j == 0:
                factors.append("hb^0")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyHH({self.to_text()})"


# Module-level operation names used throughout the package and the CLI.

def add(p: PolyHH, q: PolyHH) -> PolyHH:
    return p + q


def mul(p: PolyHH, q: PolyHH) -> PolyHH:
    return p * q


def scale(c: RationalLike, p: PolyHH) -> PolyHH:
    return p.scale(c)


def shift_h(p: PolyHH, d: RationalLike) -> PolyHH:
    return p.shift_h(d)


def shift_hbar(p: PolyHH, d: RationalLike) -> PolyHH:
    return p.shift_hbar(d)


def dbar(p: PolyHH) -> PolyHH:
    return p.dbar()


class ShiftedExpansion:
    """Coefficients of p in the shifted basis (h - h0)^i (hbar - hb0)^j.

    ``coeffs[(i, j)]`` is the coefficient of (h - h0)^i (hbar - hb0)^j; the
    expansion is exact and ``to_poly`` reconstructs p on the nose.
    """

    __slots__ = ("center", "coeffs")

    def __init__(self, center: Tuple[Fraction, Fraction], coeffs: Dict[Exponent, Fraction]):
        self.center = (to_rational(center[0]), to_rational(center[1]))
        self.coeffs = {e: to_rational(v) for e, v in coeffs.items() if v}

    def coeff(self, i: int, j: int) -> Fraction:
        return self.coeffs.get((i, j), Fraction(0))

    def to_poly(self) -> PolyHH:
        h0, hb0 = self.center
        p = PolyHH(dict(self.coeffs))
        return p.shift_h(-h0).shift_hbar(-hb0)

    def __eq__(self, other):
        return (
            isinstance(other, ShiftedExpansion)
            and self.center == other.center
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"ShiftedExpansion(center={self.center}, coeffs={self.coeffs})"


def shifted_expand(p: PolyHH, center: Tuple[RationalLike, RationalLike]) -> ShiftedExpansion:
    """Expand p about (h0, hb0): p = sum c_ij (h - h0)^i (hbar - hb0)^j.

    Writing u = h - h0, v = hbar - hb0, the coefficients c_ij are the plain
    coefficients of p(u + h0, v + hb0), i.e. of the shifted polynomial.
    """
    h0 = to_rational(center[0])
    hb0 = to_rational(center[1])
    q = p.shift_h(h0).shift_hbar(hb0)
    return ShiftedExpansion((h0, hb0), dict(q._c))


# -- univariate helpers (coefficient tuples in hbar) -------------------------

def poly1_eval(coeffs: Tuple[Fraction, ...], x: RationalLike) -> Fraction:
    """Evaluate sum_i coeffs[i] * x^i."""
    x = to_rational(x)
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * x + c
    return total


def poly1_to_polyhh(coeffs: Iterable[RationalLike]) -> PolyHH:
    return PolyHH.from_hbar_coeffs(coeffs)


# -- parsing ------------------------------------------------------------------

def parse_poly(text: str) -> PolyHH:
    """Parse the canonical text form (and mild variants) back to a PolyHH.

    Accepts terms joined by '+' (a leading '-' inside a term negates it),
    factors joined by '*', each factor a rational, 'h', 'hb', 'h^i' or
    'hb^j'.  '0' parses to the zero polynomial.
    """
    text = text.strip()
    if not text or text == "0":
        return PolyHH.zero()
    # normalize "a - b" to "a + -b" without touching exponents like ^-1
    # (exponents of h/hb are never negative, so '-' only occurs as a sign)
    chunks = text.replace("- ", "+ -").split("+")
    total = PolyHH.zero()
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            continue
        coeff = Fraction(1)
        i = j = 0
        for factor in chunk.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in term {chunk!r}")
            if factor == "-":
                coeff = -coeff
            elif factor.startswith(("h^", "hb^")) or factor in ("h", "hb"):
                name, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if e < 0:
                    raise ValueError(f"negative exponent in {factor!r}")
                if name == "h":
                    i += e
                elif name == "hb":
                    j += e
                else:
                    raise ValueError(f"unknown variable {name!r}")
            elif factor.startswith("-h"):
                coeff = -coeff
                name, _, exp = factor[1:].partition("^")
                e = int(exp) if exp else 1
                if name == "h":
                    i += e
                elif name == "hb":
                    j += e
                else:
                    raise ValueError(f"unknown variable {name!r}")
            else:
                coeff *= Fraction(factor)
        total = total + PolyHH.term(i, j, coeff)
    return total


def random_poly(rng, max_deg_h: int = 5, max_deg_hbar: int = 5, max_terms: int = 6) -> PolyHH:
    """Random sparse polynomial: coefficients num in -9..9, den in 1..9."""
    n = rng.randint(1, max_terms)
    coeffs: Dict[Exponent, Fraction] = {}
    for _ in range(n):
        e = (rng.randint(0, max_deg_h), rng.randint(0, max_deg_hbar))
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        coeffs[e] = coeffs.get(e, Fraction(0)) + v
    return PolyHH({e: v for e, v in coeffs.items() if v})


def random_rational(rng, nonzero: bool = False) -> Fraction:
    """Random rational with num in -9..9, den in 1..9 (optionally nonzero)."""
    while True:
        v = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if v or not nonzero:
            return v
