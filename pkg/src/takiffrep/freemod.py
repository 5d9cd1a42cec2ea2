"""The rank-one Cartan-free module families Gamma, Theta and Omega.

Each family realizes the Takiff algebra of sl2 on C[h, hbar], with h and
hbar acting by multiplication and the remaining four generators acting by
the explicit first-order formulas below (gamma denotes the module element,
a polynomial; substitutions are exact).

Gamma(lambda, a, b), lambda != 0:

    e . g  = -2*lambda * dbar(g(h-2, hbar))
    eb . g =  lambda * g(h-2, hbar)
    fb . g = -(1/(4 lambda)) (hbar^2 + a) g(h+2, hbar)
    f . g  = -(1/(2 lambda)) ((h+2) hbar + b) g(h+2, hbar)
             - (1/(2 lambda)) (hbar^2 + a) dbar(g(h+2, hbar))

Theta(lambda, a, b) is the mirror (e <-> f, eb <-> fb, h-shifts negated):

    f . g  =  2*lambda * dbar(g(h+2, hbar))
    fb . g =  lambda * g(h+2, hbar)
    eb . g = -(1/(4 lambda)) (hbar^2 + a) g(h-2, hbar)
    e . g  = -(1/(2 lambda)) ((h-2) hbar + b) g(h-2, hbar)
             + (1/(2 lambda)) (hbar^2 + a) dbar(g(h-2, hbar))

Omega(lambda, b, beta1) carries two polynomial parameters alpha1, beta1 in
hbar linked by an upper-triangular system (``alpha_from_beta``); with that
link the compatibility residual (``e34_residual``) vanishes identically and

    e . g  = ((lambda/2) h + alpha1(hbar)) g(h-2, hbar)
             - lambda (hbar + b) dbar(g(h-2, hbar))
    f . g  = -((1/(2 lambda)) h - beta1(hbar)) g(h+2, hbar)
             - (1/lambda) (hbar - b) dbar(g(h+2, hbar))
    eb . g =  (lambda/2) (hbar + b) g(h-2, hbar)
    fb . g = -(1/(2 lambda)) (hbar - b) g(h+2, hbar)
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (GENERATORS, AlgebraElement, Monomial, bracket,
                      parse_word_expr)
from .linalg import RowBasis
from .poly import (PolyHH, RationalLike, poly1_to_polyhh, random_poly,
                   random_rational, to_rational)

GENERATOR_PAIRS: Tuple[Tuple[str, str], ...] = tuple(
    (GENERATORS[i], GENERATORS[j])
    for i in range(len(GENERATORS))
    for j in range(i + 1, len(GENERATORS))
)


@dataclass(frozen=True)
class FreeModuleSpec:
    """Parameters of one of the three free families.

    ``family`` is 'gamma', 'theta' or 'omega'.  Gamma/Theta carry (lam, a,
    b); Omega carries (lam, b, beta1) plus the derived alpha1 (kept
    explicit so deliberately inconsistent pairs can be probed).
    """

    family: str
    lam: Fraction
    b: Fraction
    a: Optional[Fraction] = None
    beta1: Optional[Tuple[Fraction, ...]] = None
    alpha1: Optional[Tuple[Fraction, ...]] = None

    def params(self) -> dict:
        out = {"family": self.family, "lambda": self.lam, "b": self.b}
        if self.family in ("gamma", "theta"):
            out["a"] = self.a
        else:
            out["beta1"] = self.beta1
            out["alpha1"] = self.alpha1
        return out


def make_gamma(lam: RationalLike, a: RationalLike, b: RationalLike) -> FreeModuleSpec:
    lam = to_rational(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    return FreeModuleSpec("gamma", lam, to_rational(b), a=to_rational(a))


def make_theta_mod(lam: RationalLike, a: RationalLike, b: RationalLike) -> FreeModuleSpec:
    lam = to_rational(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    return FreeModuleSpec("theta", lam, to_rational(b), a=to_rational(a))


def alpha_from_beta(beta1: Sequence[RationalLike], lam: RationalLike,
                    b: RationalLike) -> Tuple[Fraction, ...]:
    """Solve the triangular linkage p = lambda^2 * A * q.

    A is upper unitriangular with A[i][j] = 2 b^(j-i) for j > i, so

        p_i = lambda^2 * (q_i + sum_{j>i} 2 b^(j-i) q_j).

    Returns the coefficient tuple of alpha1 given beta1 = (q_0, ..., q_m).
    """
    lam = to_rational(lam)
    b = to_rational(b)
    q = [to_rational(x) for x in beta1]
    m = len(q)
    p = []
    for i in range(m):
        s = q[i]
        for j in range(i + 1, m):
            s += 2 * b ** (j - i) * q[j]
        p.append(lam * lam * s)
    return tuple(p)


def e34_residual(lam: RationalLike, b: RationalLike,
                 beta1: Sequence[RationalLike],
                 alpha1: Sequence[RationalLike]) -> PolyHH:
    """Compatibility residual of an (alpha1, beta1) pair for Omega.

    (1/lam) alpha1 - lam beta1 - lam (hbar+b) beta1' + (1/lam) (hbar-b) alpha1'

    Vanishes identically exactly when [e,f] = h holds on the module.
    """
    lam = to_rational(lam)
    b = to_rational(b)
    a1 = poly1_to_polyhh(alpha1)
    b1 = poly1_to_polyhh(beta1)
    hbar = PolyHH.hbar()
    bb = PolyHH.const(b)
    return (a1.scale(Fraction(1) / lam)
            - b1.scale(lam)
            - (hbar + bb) * b1.dbar() * PolyHH.const(lam)
            + (hbar - bb) * a1.dbar() * PolyHH.const(Fraction(1) / lam))


def make_omega(lam: RationalLike, b: RationalLike,
               beta1: Sequence[RationalLike],
               alpha1: Optional[Sequence[RationalLike]] = None) -> FreeModuleSpec:
    """Omega spec with alpha1 derived from beta1 unless overridden.

    Passing alpha1 explicitly skips the linkage (useful for probing how
    the axiom checker reacts to an inconsistent pair).
    """
    lam = to_rational(lam)
    if not lam:
        raise ValueError("lambda must be nonzero")
    b = to_rational(b)
    q = tuple(to_rational(x) for x in beta1)
    p = (alpha_from_beta(q, lam, b) if alpha1 is None
         else tuple(to_rational(x) for x in alpha1))
    return FreeModuleSpec("omega", lam, b, beta1=q, alpha1=p)


# -- actions -------------------------------------------------------------------

def act(spec: FreeModuleSpec, x: str, p: PolyHH) -> PolyHH:
    """Apply a generator to a polynomial in the given free module."""
    lam = spec.lam
    hbar = PolyHH.hbar()
    if x == "h":
        return PolyHH.h() * p
    if x == "hb":
        return hbar * p
    if spec.family == "gamma":
        a, b = spec.a, spec.b
        if x == "e":
            return p.shift_h(-2).dbar().scale(-2 * lam)
        if x == "eb":
            return p.shift_h(-2).scale(lam)
        if x == "fb":
            q = p.shift_h(2)
            return (hbar * hbar + PolyHH.const(a)) * q * PolyHH.const(Fraction(-1, 4) / lam)
        if x == "f":
            q = p.shift_h(2)
            lead = (PolyHH.h() + PolyHH.const(2)) * hbar + PolyHH.const(b)
            tail = (hbar * hbar + PolyHH.const(a)) * q.dbar()
            return (lead * q + tail).scale(Fraction(-1, 2) / lam)
    elif spec.family == "theta":
        a, b = spec.a, spec.b
        if x == "f":
            return p.shift_h(2).dbar().scale(2 * lam)
        if x == "fb":
            return p.shift_h(2).scale(lam)
        if x == "eb":
            q = p.shift_h(-2)
            return (hbar * hbar + PolyHH.const(a)) * q * PolyHH.const(Fraction(-1, 4) / lam)
        if x == "e":
            q = p.shift_h(-2)
            lead = (PolyHH.h() - PolyHH.const(2)) * hbar + PolyHH.const(b)
            tail = (hbar * hbar + PolyHH.const(a)) * q.dbar()
            return (lead * q).scale(Fraction(-1, 2) / lam) + tail.scale(Fraction(1, 2) / lam)
    elif spec.family == "omega":
        b = spec.b
        a1 = poly1_to_polyhh(spec.alpha1)
        b1 = poly1_to_polyhh(spec.beta1)
        if x == "e":
            q = p.shift_h(-2)
            lead = PolyHH.h().scale(lam / 2) + a1
            tail = (hbar + PolyHH.const(b)) * q.dbar()
            return lead * q - tail.scale(lam)
        if x == "f":
            q = p.shift_h(2)
            lead = PolyHH.h().scale(Fraction(1, 2) / lam) - b1
            tail = (hbar - PolyHH.const(b)) * q.dbar()
            return -(lead * q) - tail.scale(Fraction(1) / lam)
        if x == "eb":
            return (hbar + PolyHH.const(b)) * p.shift_h(-2) * PolyHH.const(lam / 2)
        if x == "fb":
            return (hbar - PolyHH.const(b)) * p.shift_h(2) * PolyHH.const(Fraction(-1, 2) / lam)
    raise ValueError(f"unknown generator {x!r} for family {spec.family!r}")


def act_word(spec: FreeModuleSpec, elem, p: PolyHH) -> PolyHH:
    """Apply a word or AlgebraElement; the rightmost letter acts first.

    Strings that are not bare generator names are parsed as expressions,
    so ``act_word(spec, "e*f - f*e", p)`` works.
    """
    if isinstance(elem, str):
        if elem in GENERATORS:
            elem = (elem,)
        else:
            elem = parse_word_expr(elem)
    if isinstance(elem, AlgebraElement):
        total = PolyHH.zero()
        for mono, coeff in elem.terms():
            if mono.n < 0:
                raise ValueError("free modules do not carry the eb-localization")
            q = p
            for letter in reversed(mono.to_word()):
                q = act(spec, letter, q)
            total = total + q.scale(coeff)
        return total
    q = p
    for letter in reversed(tuple(elem)):
        q = act(spec, letter, q)
    return q


def verify_axioms(spec: FreeModuleSpec, trials: int = 20, seed: int = 0) -> dict:
    """Check [x,y].p == x.(y.p) - y.(x.p) on random polynomials.

    Runs every one of the 15 generator pairs against ``trials`` random
    polynomials of bidegree at most (5,5); exact comparison.
    """
    rng = random.Random(seed)
    polys = [random_poly(rng) for _ in range(trials)]
    pairs = []
    ok_all = True
    for x, y in GENERATOR_PAIRS:
        br = bracket(x, y)
        ok = True
        for p in polys:
            lhs = act(spec, x, act(spec, y, p)) - act(spec, y, act(spec, x, p))
            rhs = act_word(spec, br, p)
            if lhs != rhs:
                ok = False
                break
        ok_all = ok_all and ok
        pairs.append({"x": x, "y": y, "pass": ok})
    return {"family": spec.family, "params": spec.params(), "pairs": pairs,
            "seed": seed, "trials": trials, "ok": ok_all}


# -- submodule saturation --------------------------------------------------------

@dataclass
class SaturationResult:
    """Outcome of closing a cyclic submodule under the action, degree-capped.

    ``basis`` is an exact row-reduced basis of the span found inside the
    bidegree cap; ``contains_one`` is a positive certificate only (True
    means 1 genuinely lies in the submodule); ``saturated`` is True when
    the closure ran to a fixed point without discarding any out-of-cap
    product, so the basis really spans the intersection visited.
    """

    basis: List[PolyHH]
    contains_one: bool
    saturated: bool


def submodule_saturate(spec: FreeModuleSpec, seed_poly: PolyHH,
                       cap: Tuple[int, int] = (8, 8)) -> SaturationResult:
    if seed_poly.is_zero():
        return SaturationResult([], False, True)
    cap_h, cap_hb = cap
    basis = RowBasis()
    frontier: List[PolyHH] = []
    discarded = False

    def vec_of(p: PolyHH):
        return {e: c for e, c in p.terms()}

    if not seed_poly.within_bidegree(cap_h, cap_hb):
        raise ValueError("seed polynomial exceeds the bidegree cap")
    basis.add(vec_of(seed_poly))
    frontier.append(seed_poly)
    one = {(0, 0): Fraction(1)}
    while frontier and not basis.contains(one):
        p = frontier.pop()
        for x in GENERATORS:
            q = act(spec, x, p)
            if q.is_zero():
                continue
            if not q.within_bidegree(cap_h, cap_hb):
                discarded = True
                continue
            if basis.add(vec_of(q)):
                frontier.append(q)
    contains_one = basis.contains(one)
    completed = not frontier
    rows = [PolyHH({e: c for e, c in row.items()}) for row in basis.rows()]
    return SaturationResult(rows, contains_one,
                            saturated=completed and not discarded)


@dataclass
class FreeSimplicityResult:
    simple: bool
    reason: str


def simplicity_criterion_free(spec: FreeModuleSpec) -> FreeSimplicityResult:
    """Closed-form simplicity verdicts for the free families.

    Gamma and Theta are simple for every parameter choice; Omega is simple
    exactly when b != 0 (at b = 0 the ideal hbar*Omega is proper and
    invariant).
    """
    if spec.family in ("gamma", "theta"):
        return FreeSimplicityResult(True, f"{spec.family} modules are simple "
                                          "for all parameters")
    if spec.b:
        return FreeSimplicityResult(True, "omega with b != 0 is simple")
    return FreeSimplicityResult(False, "omega with b = 0 preserves the ideal "
                                       "hbar*C[h,hbar]")


# -- the b = 0 layer structure of Omega ------------------------------------------

def omega_layer_action(spec: FreeModuleSpec, i: int, x: str, g: PolyHH) -> PolyHH:
    """Action induced on the layer hbar^i C[h] / hbar^(i+1) C[h] at b = 0.

    ``g`` must be a polynomial in h alone; the result is again a
    polynomial in h (the coefficient of hbar^i in x.(hbar^i g)).  Raises
    unless b = 0, where the hbar-adic filtration is stable.
    """
    if spec.family != "omega":
        raise ValueError("layers are an omega construction")
    if spec.b:
        raise ValueError("hbar-adic layers require b = 0")
    if isinstance(g.deg_hbar(), int) and g.deg_hbar() > 0:
        raise ValueError("layer representatives are polynomials in h alone")
    if i < 0:
        raise ValueError("layer index must be nonnegative")
    p = PolyHH.term(0, i) * g
    q = act(spec, x, p)
    out: Dict[Tuple[int, int], Fraction] = {}
    for (dh, dhb), c in q.terms():
        if dhb < i:
            raise AssertionError("hbar-adic filtration violated; "
                                 "this cannot happen at b = 0")
        if dhb == i:
            out[(dh, 0)] = c
    return PolyHH(out)


def omega_quotient_delta_params(spec: FreeModuleSpec, i: int) -> Tuple[Fraction, Fraction]:
    """Parameters (lam', a') of the sl2 layer module at b = 0.

    Layer i of Omega(lam, 0, beta1) is the polynomial sl2 module
    Delta_1(-1/lam, -lam*q0 + i) where q0 is the constant coefficient of
    beta1.
    """
    if spec.family != "omega":
        raise ValueError("layers are an omega construction")
    if spec.b:
        raise ValueError("hbar-adic layers require b = 0")
    if i < 0:
        raise ValueError("layer index must be nonnegative")
    q0 = spec.beta1[0] if spec.beta1 else Fraction(0)
    return (Fraction(-1) / spec.lam, -spec.lam * q0 + i)


def iso_invariants_free(spec: FreeModuleSpec) -> tuple:
    """Complete isomorphism invariant of a free-family module.

    Two modules within one family are isomorphic exactly when these
    tuples agree (the families are mutually non-isomorphic as well).
    """
    if spec.family in ("gamma", "theta"):
        return (spec.family, spec.lam, spec.a, spec.b)
    return (spec.family, spec.lam, spec.b, spec.beta1)


def random_free_spec(rng: random.Random, family: str,
                     beta1_deg: int = 2) -> FreeModuleSpec:
    lam = random_rational(rng, nonzero=True)
    if family == "gamma":
        return make_gamma(lam, random_rational(rng), random_rational(rng))
    if family == "theta":
        return make_theta_mod(lam, random_rational(rng), random_rational(rng))
    if family == "omega":
        deg = rng.randint(0, beta1_deg)
        beta1 = tuple(random_rational(rng) for _ in range(deg + 1))
        return make_omega(lam, random_rational(rng), beta1)
    raise ValueError(f"unknown family {family!r}")
