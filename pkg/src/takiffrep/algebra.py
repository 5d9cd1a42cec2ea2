"""The Takiff algebra of sl2, its enveloping algebra, and normal forms.

Generators: e, f, h (an sl2 triple) and their barred partners eb, fb, hb,
which span an abelian ideal.  The nonzero brackets are

    [e,f] = h      [h,e] = 2e      [h,f] = -2f
    [e,fb] = hb    [eb,f] = hb     [h,eb] = 2eb    [hb,e] = 2eb
    [h,fb] = -2fb  [hb,f] = -2fb

and every bracket of two barred generators vanishes, as do [e,eb], [f,fb],
[h,hb].

Normal form in the enveloping algebra orders monomials as

    eb^n * fb^a * f^b * hb^c * h^d * e^g

obtained by bubbling adjacent out-of-order letters with the commutation
rules; each side term strictly reduces the number of unbarred letters, so
the rewriting terminates, and the result is independent of reduction order.

The localized algebra adjoins a two-sided inverse of eb (letter ``ebinv``,
printed ``eb^-1``).  It commutes with e, eb, fb, hb and satisfies

    h * ebinv = ebinv * (h - 2)
    f * ebinv = ebinv * f + ebinv^2 * hb

(both forced by [h,eb] = 2eb and [eb,f] = hb).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple, Union

from .poly import RationalLike, to_rational

GENERATORS = ("eb", "fb", "f", "hb", "h", "e")
LOCALIZED_LETTERS = GENERATORS + ("ebinv",)

# canonical slot of each letter; eb and its inverse share the first slot
_SLOT = {"eb": 0, "ebinv": 0, "fb": 1, "f": 2, "hb": 3, "h": 4, "e": 5}

# [x, y] for the fifteen unordered generator pairs, as lists of
# (coefficient, generator); pairs not listed here (and all barred pairs)
# commute.  Stored with both orders for convenience.
_BRACKET: Dict[Tuple[str, str], List[Tuple[Fraction, str]]] = {}


def _set_bracket(x: str, y: str, terms: List[Tuple[int, str]]) -> None:
    _BRACKET[(x, y)] = [(Fraction(c), g) for c, g in terms]
    _BRACKET[(y, x)] = [(Fraction(-c), g) for c, g in terms]


_set_bracket("e", "f", [(1, "h")])
_set_bracket("h", "e", [(2, "e")])
_set_bracket("h", "f", [(-2, "f")])
_set_bracket("e", "fb", [(1, "hb")])
_set_bracket("eb", "f", [(1, "hb")])
_set_bracket("h", "eb", [(2, "eb")])
_set_bracket("hb", "e", [(2, "eb")])
_set_bracket("h", "fb", [(-2, "fb")])
_set_bracket("hb", "f", [(-2, "fb")])
for _x, _y in (("e", "eb"), ("f", "fb"), ("h", "hb"), ("eb", "fb"),
               ("eb", "hb"), ("fb", "hb")):
    _set_bracket(_x, _y, [])

# rewriting side terms: for slot[x] > slot[y],  x*y = y*x + sum c * word
_COMM: Dict[Tuple[str, str], List[Tuple[Fraction, Tuple[str, ...]]]] = {}
for (_x, _y), _terms in _BRACKET.items():
    if _SLOT[_x] > _SLOT[_y]:
        _COMM[(_x, _y)] = [(c, (g,)) for c, g in _terms]
# localized rules, derived in the module docstring
_COMM[("h", "ebinv")] = [(Fraction(-2), ("ebinv",))]
_COMM[("f", "ebinv")] = [(Fraction(1), ("ebinv", "ebinv", "hb"))]
_COMM[("fb", "ebinv")] = []
_COMM[("hb", "ebinv")] = []
_COMM[("e", "ebinv")] = []


class Monomial(NamedTuple):
    """Exponents of a canonical monomial eb^n fb^a f^b hb^c h^d e^g.

    n may be negative in the localized algebra; the other exponents are
    nonnegative.
    """

    n: int
    a: int
    b: int
    c: int
    d: int
    g: int

    def to_word(self) -> Tuple[str, ...]:
        head = ("ebinv",) * (-self.n) if self.n < 0 else ("eb",) * self.n
        return (head + ("fb",) * self.a + ("f",) * self.b
                + ("hb",) * self.c + ("h",) * self.d + ("e",) * self.g)

    def to_text(self) -> str:
        return (f"eb^{self.n}*fb^{self.a}*f^{self.b}"
                f"*hb^{self.c}*h^{self.d}*e^{self.g}")

    def is_localized(self) -> bool:
        return self.n < 0

    def unbarred_length(self) -> int:
        return self.b + self.d + self.g


ONE_MONO = Monomial(0, 0, 0, 0, 0, 0)


def _word_to_monomial(word: Tuple[str, ...]) -> Monomial:
    n = a = b = c = d = g = 0
    for w in word:
        if w == "eb":
            n += 1
        elif w == "ebinv":
            n -= 1
        elif w == "fb":
            a += 1
        elif w == "f":
            b += 1
        elif w == "hb":
            c += 1
        elif w == "h":
            d += 1
        elif w == "e":
            g += 1
        else:
            raise ValueError(f"unknown letter {w!r}")
    return Monomial(n, a, b, c, d, g)


@lru_cache(maxsize=1 << 16)
def _reduce_word(word: Tuple[str, ...]) -> Tuple[Tuple[Monomial, Fraction], ...]:
    """Straighten a word into canonical monomials with coefficients."""
    acc: Dict[Monomial, Fraction] = {}
    stack: List[Tuple[Fraction, Tuple[str, ...]]] = [(Fraction(1), word)]
    while stack:
        coeff, w = stack.pop()
        # find the first adjacent out-of-order pair
        swap_at = -1
        for i in range(len(w) - 1):
            if _SLOT[w[i]] > _SLOT[w[i + 1]]:
                swap_at = i
                break
        if swap_at < 0:
            mono = _word_to_monomial(w)
            total = acc.get(mono, Fraction(0)) + coeff
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
            continue
        i = swap_at
        x, y = w[i], w[i + 1]
        stack.append((coeff, w[:i] + (y, x) + w[i + 2:]))
        for c, side in _COMM[(x, y)]:
            stack.append((coeff * c, w[:i] + side + w[i + 2:]))
    return tuple(sorted(acc.items()))


class AlgebraElement:
    """A finite rational combination of canonical monomials."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Dict[Monomial, RationalLike] | None = None):
        c: Dict[Monomial, Fraction] = {}
        if coeffs:
            for m, v in coeffs.items():
                v = to_rational(v)
                if v:
                    c[Monomial(*m)] = v
        self._c = c

    @staticmethod
    def zero() -> "AlgebraElement":
        return AlgebraElement()

    @staticmethod
    def one() -> "AlgebraElement":
        return AlgebraElement({ONE_MONO: 1})

    @staticmethod
    def gen(name: str) -> "AlgebraElement":
        if name not in LOCALIZED_LETTERS:
            raise ValueError(f"unknown generator {name!r}")
        return AlgebraElement({_word_to_monomial((name,)): 1})

    @staticmethod
    def from_word(word: Sequence[str], coeff: RationalLike = 1) -> "AlgebraElement":
        terms = _reduce_word(tuple(word))
        coeff = to_rational(coeff)
        return AlgebraElement({m: coeff * v for m, v in terms})

    def is_zero(self) -> bool:
        return not self._c

    def is_localized(self) -> bool:
        return any(m.n < 0 for m in self._c)

    def terms(self):
        return iter(sorted(self._c.items()))

    def coeff(self, mono: Monomial) -> Fraction:
        return self._c.get(Monomial(*mono), Fraction(0))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        c = dict(self._c)
        for m, v in other._c.items():
            w = c.get(m, Fraction(0)) + v
            if w:
                c[m] = w
            else:
                c.pop(m, None)
        out = AlgebraElement.__new__(AlgebraElement)
        out._c = c
        return out

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        out = AlgebraElement.__new__(AlgebraElement)
        out._c = {m: -v for m, v in self._c.items()}
        return out

    def scale(self, v: RationalLike) -> "AlgebraElement":
        v = to_rational(v)
        out = AlgebraElement.__new__(AlgebraElement)
        out._c = {} if not v else {m: v * w for m, w in self._c.items()}
        return out

    def __rmul__(self, other) -> "AlgebraElement":
        return self.scale(other)

    def __mul__(self, other) -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        acc: Dict[Monomial, Fraction] = {}
        for m1, v1 in self._c.items():
            w1 = m1.to_word()
            for m2, v2 in other._c.items():
                v = v1 * v2
                for m, w in _reduce_word(w1 + m2.to_word()):
                    total = acc.get(m, Fraction(0)) + v * w
                    if total:
                        acc[m] = total
                    else:
                        acc.pop(m, None)
        out = AlgebraElement.__new__(AlgebraElement)
        out._c = acc
        return out

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            raise ValueError("negative powers are not defined elementwise")
        out = AlgebraElement.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for m in sorted(self._c, reverse=True):
            parts.append(f"{self._c[m]}*{m.to_text()}")
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self.to_text()})"


WordLike = Union[str, Sequence[str], AlgebraElement]


def _validate_letters(word: Sequence[str], localized: bool) -> None:
    for w in word:
        if w not in LOCALIZED_LETTERS:
            raise ValueError(f"unknown letter {w!r}")
        if w == "ebinv" and not localized:
            raise ValueError("ebinv is only available in the localized algebra")


def normal_form(x: WordLike, localized: bool = False) -> AlgebraElement:
    """Canonical form of a word or element in the (localized) enveloping algebra.

    ``x`` may be a generator name, a textual expression such as
    ``"e*f - f*e"``, a sequence of generator names (a word, leftmost letter
    acting last), or an AlgebraElement.  In non-localized mode any
    occurrence of ebinv is rejected.
    """
    if isinstance(x, AlgebraElement):
        if x.is_localized() and not localized:
            raise ValueError("element lies in the localized algebra")
        acc = AlgebraElement.zero()
        for m, v in x.terms():
            acc = acc + AlgebraElement.from_word(m.to_word(), v)
        return acc
    if isinstance(x, str):
        if x in LOCALIZED_LETTERS:
            x = (x,)
        else:
            return normal_form(parse_word_expr(x, localized), localized)
    word = tuple(x)
    _validate_letters(word, localized)
    return AlgebraElement.from_word(word)


def bracket(x: str, y: str) -> AlgebraElement:
    """The Lie bracket [x, y] of two generators, as an algebra element."""
    if x not in GENERATORS or y not in GENERATORS:
        raise ValueError(f"bracket is defined on the six generators, got {x!r}, {y!r}")
    out = AlgebraElement.zero()
    for c, g in _BRACKET.get((x, y), ()):
        out = out + AlgebraElement.gen(g).scale(c)
    return out


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y - y * x


# -- the twisting substitution ------------------------------------------------

def theta(z: RationalLike, x: WordLike) -> AlgebraElement:
    """The automorphism Theta_z of the eb-localized enveloping algebra.

    Theta_z fixes e, eb, eb^-1, fb, hb and sends

        f  |->  f - z * eb^-1 * hb
        h  |->  h + 2z

    Applied to an AlgebraElement it substitutes monomial-wise.
    """
    z = to_rational(z)
    images = {
        "e": AlgebraElement.gen("e"),
        "eb": AlgebraElement.gen("eb"),
        "ebinv": AlgebraElement.gen("ebinv"),
        "fb": AlgebraElement.gen("fb"),
        "hb": AlgebraElement.gen("hb"),
        "f": AlgebraElement.gen("f")
        - AlgebraElement.from_word(("ebinv", "hb"), z),
        "h": AlgebraElement.gen("h") + AlgebraElement.one().scale(2 * z),
    }
    if isinstance(x, str):
        x = (x,)
    if isinstance(x, AlgebraElement):
        elem = x
    else:
        word = tuple(x)
        _validate_letters(word, localized=True)
        elem = AlgebraElement.from_word(word)
    out = AlgebraElement.zero()
    for m, v in elem.terms():
        piece = AlgebraElement.one().scale(v)
        for letter in m.to_word():
            piece = piece * images[letter]
        out = out + piece
    return out


def check_theta_automorphism(z: RationalLike) -> dict:
    """Verify that Theta_z respects all products of letters.

    For every ordered pair (x, y) of the seven letters, compares
    Theta_z(normal_form(x*y)) with Theta_z(x) * Theta_z(y); the pair
    (eb, ebinv) covers the localization relation eb * eb^-1 = 1.
    """
    z = to_rational(z)
    pairs = []
    ok_all = True
    for x in LOCALIZED_LETTERS:
        for y in LOCALIZED_LETTERS:
            lhs = theta(z, normal_form((x, y), localized=True))
            rhs = theta(z, x) * theta(z, y)
            ok = lhs == rhs
            ok_all = ok_all and ok
            pairs.append({"x": x, "y": y, "ok": ok})
    return {"z": z, "pairs": pairs, "ok": ok_all}


# -- parsing -------------------------------------------------------------------

_LETTER_ALIASES = {
    "e": "e", "f": "f", "h": "h",
    "eb": "eb", "fb": "fb", "hb": "hb",
    "ebar": "eb", "fbar": "fb", "hbar": "hb",
}


def parse_word_expr(text: str, localized: bool = False) -> AlgebraElement:
    """Parse expressions like 'e*f - f*e' or '2*eb^-1*hb + h^2'.

    Terms are separated by + or -; factors by '*'; a factor is a rational
    number or a letter with an optional integer exponent (negative
    exponents only for eb, and only in localized mode).
    """
    text = text.strip()
    if not text:
        raise ValueError("empty expression")
    out = AlgebraElement.zero()
    # split into signed terms without breaking exponents like eb^-1
    terms: List[Tuple[int, str]] = []
    sign, buf = 1, []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "+-" and (i == 0 or text[i - 1] != "^"):
            if "".join(buf).strip():
                terms.append((sign, "".join(buf).strip()))
            sign = 1 if ch == "+" else -1
            buf = []
        else:
            buf.append(ch)
        i += 1
    if "".join(buf).strip():
        terms.append((sign, "".join(buf).strip()))
    for sign, term in terms:
        coeff = Fraction(sign)
        word: List[str] = []
        for factor in term.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {term!r}")
            name, _, exp = factor.partition("^")
            if name in _LETTER_ALIASES:
                letter = _LETTER_ALIASES[name]
                k = int(exp) if exp else 1
                if k < 0:
                    if letter != "eb":
                        raise ValueError(f"negative power of {letter!r}")
                    letter = "ebinv"
                    k = -k
                word.extend([letter] * k)
            else:
                coeff *= Fraction(factor)
        _validate_letters(word, localized)
        out = out + AlgebraElement.from_word(tuple(word), coeff)
    return out
