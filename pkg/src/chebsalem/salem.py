"""Cyclotomic stripping and Salem/Pisot root-geometry classification.

A monic integer polynomial has "Salem geometry" when exactly one real root
tau lies beyond the unit circle, its reciprocal 1/tau sits inside, and every
remaining root is exactly on the circle.  We certify that picture without
any numeric modulus tests: cyclotomic factors are removed by exact division,
and the palindromic core is pushed through the x = z + 1/z fold where
on/off-circle counting is a Sturm computation (`rootcert`).  The resulting
labels are deliberately "-Like": no irreducibility is checked, matching how
the constructions here produce Salem *polynomials* possibly times extra
cyclotomic factors.

`pisot_check` is the one numeric (advisory) routine, used to corroborate the
Pisot side of the construction; it reports rather than guesses whenever a
root is too close to the circle to call.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath

from .chebbasis import IntPoly, RatPoly
from .errors import NotApplicable, NotPalindromic, UncertifiedRoots
from .families import (
    MINUS1,
    THREEPARAM,
    TWOPARAM,
    FamilySpec,
    limit_extreme_root,
    poly_of,
)
from .palindrome import PalindromicPoly
from .rootcert import (
    DEFAULT_REFINE,
    SturmChain,
    classify_unit_circle,
    extreme_root,
    isolate_real_roots,
    root_bound,
)


@lru_cache(maxsize=None)
def totient(d: int) -> int:
    """Euler's phi by trial factorization."""
    if d < 1:
        raise ValueError("totient requires d >= 1")
    result = d
    m = d
    f = 2
    while f * f <= m:
        if m % f == 0:
            result -= result // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPoly:
    """The d-th cyclotomic polynomial, by dividing z^d - 1 down."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = IntPoly.monomial(1, d) - IntPoly.one()
    for e in range(1, d):
        if d % e == 0:
            poly = poly.exact_div(cyclotomic_poly(e))
    return poly


@dataclass(frozen=True)
class SalemAnalysis:
    """Cyclotomic part, core, and root-geometry class of a polynomial.

    ``classification`` is None straight out of :func:`strip_cyclotomic` (the
    factor/core split carries no verdict yet) and one of SalemLike /
    NegativeSalemLike / Kronecker / Other after :func:`classify_salem`.
    """

    original: IntPoly
    cyclotomic_factors: tuple  # ((d, multiplicity), ...) ascending in d
    core: IntPoly
    classification: Optional[str] = None
    tau_enclosure: Optional[tuple] = None

    def reconstruct(self) -> IntPoly:
        """core times the recorded cyclotomic powers; equals ``original``."""
        prod = self.core
        for d, mult in self.cyclotomic_factors:
            prod = prod * cyclotomic_poly(d) ** mult
        return prod

    def to_json(self) -> dict:
        tau = None
        if self.tau_enclosure is not None:
            tau = [str(Fraction(v)) for v in self.tau_enclosure]
        return {
            "cyclotomic": [[d, m] for d, m in self.cyclotomic_factors],
            "core": self.core.to_json(),
            "class": self.classification,
            "tau": tau,
        }


def strip_cyclotomic(p: IntPoly) -> SalemAnalysis:
    """Divide out every cyclotomic factor of ``p``, with multiplicity.

    Complete by degree counting: any Phi_d dividing p has phi(d) <= deg p,
    and phi(d) >= sqrt(d/2) bounds the candidate range by 2 deg^2.
    """
    if not p:
        raise ValueError("cannot strip the zero polynomial")
    core = p
    deg = len(p.coeffs) - 1
    factors = []
    for d in range(1, 2 * deg * deg + 1):
        cdeg = len(core.coeffs) - 1
        if cdeg < 1:
            break
        phi = totient(d)
        if phi > cdeg:
            continue
        cyc = cyclotomic_poly(d)
        mult = 0
        while cyc.divides(core):
            core = core.exact_div(cyc)
            mult += 1
        if mult:
            factors.append((d, mult))
    return SalemAnalysis(original=p, cyclotomic_factors=tuple(factors), core=core)


def _beyond_unit_interval(core: IntPoly, positive: bool, tol: Fraction):
    """Enclosure of the unique real root of core with |root| > 1 on one side."""
    refine = tol
    while True:
        report = isolate_real_roots(core, refine_to=refine)
        if positive:
            picks = [iv for iv in report.intervals if iv[0] > 1]
        else:
            picks = [iv for iv in report.intervals if iv[1] < -1]
        if len(picks) == 1:
            return picks[0]
        # An enclosure still straddles +-1; the root itself is strictly
        # beyond (cyclotomic stripping removed any root at +-1), so refine.
        refine /= 2**10


def classify_salem(p: IntPoly, refine_to: Fraction = DEFAULT_REFINE) -> SalemAnalysis:
    """Strip cyclotomics and classify the core's root geometry, exactly.

    Kronecker: every root of ``p`` on the unit circle.  SalemLike /
    NegativeSalemLike: palindromic core of degree >= 4 with exactly one real
    reciprocal pair off the circle (sign of the large root tau selects the
    Negative variant) and all else on it; ``tau_enclosure`` brackets tau to
    ``refine_to``.  Everything else is Other.
    """
    analysis = strip_cyclotomic(p)
    core = analysis.core
    if core.lead < 0:
        core = -core
    deg_p = len(p.coeffs) - 1
    stripped = sum(totient(d) * m for d, m in analysis.cyclotomic_factors)
    if core.degree < 1:
        label = "Kronecker" if deg_p >= 1 else "Other"
        return SalemAnalysis(p, analysis.cyclotomic_factors, core, label, None)
    try:
        pal = PalindromicPoly.detect(core)
    except NotPalindromic:
        return SalemAnalysis(p, analysis.cyclotomic_factors, core, "Other", None)
    circle = classify_unit_circle(pal)
    if circle.n_on == core.degree:
        return SalemAnalysis(p, analysis.cyclotomic_factors, core, "Kronecker", None)
    if (
        circle.n_inside == 1
        and circle.n_outside == 1
        and pal.symmetry == 1
        and core.degree >= 4
    ):
        bound = Fraction(root_bound(core) + 1)
        chain = SturmChain(core)
        if chain.count_open(Fraction(1), bound) == 1:
            tau = _beyond_unit_interval(core, True, refine_to)
            return SalemAnalysis(
                p, analysis.cyclotomic_factors, core, "SalemLike", tau
            )
        if chain.count_open(-bound, Fraction(-1)) == 1:
            tau = _beyond_unit_interval(core, False, refine_to)
            return SalemAnalysis(
                p, analysis.cyclotomic_factors, core, "NegativeSalemLike", tau
            )
    return SalemAnalysis(p, analysis.cyclotomic_factors, core, "Other", None)


def pisot_check(q, margin: float = 1e-9) -> str:
    """Advisory numeric Pisot test on root moduli.

    Returns "PisotLike" / "NegativePisotLike" when exactly one root lies
    beyond the unit circle, is real, and every other root is inside by more
    than ``margin``; an "Extended" prefix marks non-integer rational
    coefficients (the h2-even case).  Roots within ``margin`` plus the
    solver's error estimate of the circle raise UncertifiedRoots instead of
    being guessed, and anything else returns "No".
    """
    if isinstance(q, IntPoly):
        p, extended = q, False
    elif isinstance(q, RatPoly):
        p, den = q.clear_denominators()
        extended = den != 1
    else:
        raise TypeError("pisot_check expects IntPoly or RatPoly")
    if not p or len(p.coeffs) - 1 < 1:
        return "No"
    with mpmath.mp.workprec(256):
        coeffs = [mpmath.mpf(c) for c in reversed(p.coeffs)]
        roots, err = mpmath.polyroots(coeffs, maxsteps=200, extraprec=128, error=True)
        slack = mpmath.mpf(margin) + err
        near = [complex(r) for r in roots if abs(abs(r) - 1) <= slack]
        if near:
            raise UncertifiedRoots(
                "root(s) too close to the unit circle to classify", near
            )
        outside = [r for r in roots if abs(r) > 1]
        if len(outside) != 1 or abs(outside[0].imag) > slack:
            return "No"
        kind = "PisotLike" if outside[0].real > 0 else "NegativePisotLike"
    return "Extended" + kind if extended else kind


@dataclass(frozen=True)
class ConvergenceRow:
    """One row of a convergence study: extreme root vs. its limit."""

    n: int
    root_enclosure: tuple
    distance: tuple  # certified (lo, hi) bracket of |root - limit|


def _abs_difference(a, b):
    lo = max(a[0] - b[1], b[0] - a[1])
    hi = max(a[1] - b[0], b[1] - a[0])
    return (max(Fraction(0), lo), hi)


def salem_convergence_study(
    spec: FamilySpec, n_range, tol: Fraction = Fraction(1, 2**80)
):
    """Track the escaping root of a family toward its algebraic limit.

    MINUS1 follows the largest real root toward z0 + 1/z0; the two- and
    three-parameter families follow the smallest root toward the negative
    root of their limit polynomial.  Each row carries certified enclosures,
    so a strict decrease of ``distance`` across rows is machine-checkable.
    """
    if spec.variant not in (MINUS1, TWOPARAM, THREEPARAM):
        raise NotApplicable("convergence study needs minus1/two/three")
    limits = limit_extreme_root(spec, tol)
    if spec.variant == MINUS1:
        side, target = "max", limits.upper
    else:
        side, target = "min", limits.lower
    rows = []
    for n in sorted(n_range):
        member = poly_of(spec.with_n(n))
        enclosure = extreme_root(member, side, tol)
        rows.append(
            ConvergenceRow(
                n=n,
                root_enclosure=enclosure,
                distance=_abs_difference(enclosure, target.value_enclosure),
            )
        )
    return tuple(rows)
