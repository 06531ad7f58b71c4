"""Certified real-root counting, isolation, spans, and unit-circle location.

Everything here is exact: Sturm-type signed remainder chains over primitive
integer polynomials (only positive rescalings, so sign patterns are
preserved), Yun squarefree decomposition for multiplicities, and interval
bisection with rational endpoints.  The single numeric routine,
count_roots_in_disc, is advisory and clearly flags uncertified roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath

from .chebbasis import IntPoly
from .errors import TooFewRealRoots
from .palindrome import PalindromicPoly, unlift

# ---------------------------------------------------------------------------
# low-level integer-list helpers
# ---------------------------------------------------------------------------


def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def _prim(cs):
    g = 0
    for c in cs:
        g = math.gcd(g, c)
        if g == 1:
            return cs
    return [c // g for c in cs] if g > 1 else cs


def _deriv(cs):
    return [i * c for i, c in enumerate(cs) if i]


def _neg_prem(f, g):
    """-(pseudo-remainder of f by g) scaled by a positive constant, primitive."""
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    negate = False
    for k in range(len(f) - 1, dg - 1, -1):
        c = r[k]
        if c:
            if lg < 0:
                negate = not negate
            for i in range(k - dg):
                r[i] *= lg
            off = k - dg
            for i in range(dg):
                r[off + i] = r[off + i] * lg - c * g[i]
            r[k] = 0
    del r[dg:]
    r = _trim(r)
    if not negate:
        r = [-c for c in r]
    return _prim(r)


def _sign(v):
    return (v > 0) - (v < 0)


class SturmChain:
    """Generalized Sturm chain of (p, p'); counts distinct real roots of p.

    Valid for non-squarefree p as well: V(a) - V(b) equals the number of
    distinct real roots in (a, b) whenever p(a) p(b) != 0.  The last chain
    element is (a positive rescaling of) gcd(p, p').
    """

    __slots__ = ("polys", "_vcache")

    def __init__(self, p: IntPoly):
        cs = _prim(list(p.coeffs))
        if not cs:
            raise ValueError("zero polynomial has no Sturm chain")
        polys = [cs]
        if len(cs) > 1:
            polys.append(_prim(_deriv(cs)))
            while len(polys[-1]) > 1:
                r = _neg_prem(polys[-2], polys[-1])
                if not r:
                    break
                polys.append(r)
        self.polys = polys
        self._vcache = {}

    @property
    def gcd_with_derivative(self) -> IntPoly:
        """Primitive gcd(p, p') up to sign (constant 1 when p is squarefree)."""
        last = self.polys[-1]
        if len(self.polys) == 1:
            return IntPoly((1,))
        g = IntPoly(last)
        return -g if g.lead < 0 else g

    @property
    def is_squarefree(self) -> bool:
        return len(self.polys) == 1 or len(self.polys[-1]) == 1

    # -- sign variation counts ----------------------------------------

    def _signs_at(self, point):
        if point == "-inf":
            return [_sign(cs[-1]) * (-1 if (len(cs) - 1) % 2 else 1) for cs in self.polys]
        if point == "+inf":
            return [_sign(cs[-1]) for cs in self.polys]
        num, den = point.numerator, point.denominator
        signs = []
        if den == 1:
            for cs in self.polys:
                acc = 0
                for c in reversed(cs):
                    acc = acc * num + c
                signs.append(_sign(acc))
        else:
            maxd = max(len(cs) for cs in self.polys) - 1
            dp = [1] * (maxd + 1)
            for i in range(1, maxd + 1):
                dp[i] = dp[i - 1] * den
            for cs in self.polys:
                d = len(cs) - 1
                acc = cs[d]
                for j in range(d - 1, -1, -1):
                    acc = acc * num + cs[j] * dp[d - j]
                signs.append(_sign(acc))
        return signs

    def variations(self, point) -> int:
        """Sign variations at a rational point, or at the strings '-inf'/'+inf'."""
        key = point if isinstance(point, str) else (point.numerator, point.denominator)
        v = self._vcache.get(key)
        if v is None:
            signs = [s for s in self._signs_at(point) if s]
            v = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
            self._vcache[key] = v
        return v

    def count_open(self, a, b) -> int:
        """Distinct real roots in the open interval (a, b); endpoints must not be roots."""
        return self.variations(a) - self.variations(b)

    def n_real_distinct(self) -> int:
        return self.variations("-inf") - self.variations("+inf")


def root_bound(p: IntPoly) -> int:
    """Integer B with every real root of p strictly inside (-B, B) (Cauchy bound)."""
    cs = p.coeffs
    if len(cs) <= 1:
        return 1
    lc = abs(cs[-1])
    m = max(abs(c) for c in cs[:-1])
    return 1 + (m + lc - 1) // lc


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z[x], positive leading coefficient."""
    fa, fb = list(a.primitive().coeffs), list(b.primitive().coeffs)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _neg_prem(fa, fb)
    g = IntPoly(fa) if fa else IntPoly.one()
    return -g if g.lead < 0 else g


def yun_squarefree(p: IntPoly):
    """Yun's decomposition: [(g_1, 1), (g_2, 2), ...] with p ~ prod g_i^i.

    Factors are primitive, squarefree, pairwise coprime, positive leading
    coefficient; trivial (constant) factors are omitted.
    """
    if not p:
        raise ValueError("zero polynomial")
    f = p.primitive()
    if f.lead < 0:
        f = -f
    if len(f.coeffs) == 1:
        return []
    df = f.derivative()
    g = poly_gcd(f, df)
    if g.degree == 0:
        return [(f, 1)]
    c = f.exact_div(g)
    d = df.exact_div(g) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        a = poly_gcd(c, d)
        if a.degree > 0:
            out.append((a, i))
            c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# isolation and refinement (squarefree inputs)
# ---------------------------------------------------------------------------


def _sign_at(p: IntPoly, x: Fraction) -> int:
    num, den = x.numerator, x.denominator
    cs = p.coeffs
    if not cs:
        return 0
    if den == 1:
        acc = 0
        for c in reversed(cs):
            acc = acc * num + c
        return _sign(acc)
    d = len(cs) - 1
    acc = cs[d]
    bp = 1
    for j in range(d - 1, -1, -1):
        bp *= den
        acc = acc * num + cs[j] * bp
    return _sign(acc)


def _nonroot_near(p: IntPoly, a: Fraction, b: Fraction) -> Fraction:
    """A point in (a, b), near the midpoint, where p does not vanish."""
    m = (a + b) / 2
    if _sign_at(p, m):
        return m
    step = (b - a) / 4
    while True:
        for cand in (m + step, m - step):
            if a < cand < b and _sign_at(p, cand):
                return cand
        step /= 2


def _isolate_squarefree(f: IntPoly, chain: SturmChain):
    """Disjoint open intervals, each containing exactly one root of squarefree f."""
    if f.degree <= 0:
        return []
    B = Fraction(root_bound(f))
    total = chain.count_open(-B, B)
    out = []
    stack = [(-B, B, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((a, b))
            continue
        m = _nonroot_near(f, a, b)
        left = chain.count_open(a, m)
        stack.append((a, m, left))
        stack.append((m, b, cnt - left))
    out.sort()
    return out


def _refine_sign_change(f: IntPoly, a: Fraction, b: Fraction, width: Fraction):
    """Shrinks an isolating interval of squarefree f to the requested width."""
    sa = _sign_at(f, a)
    while b - a > width:
        m = (a + b) / 2
        sm = _sign_at(f, m)
        if sm == 0:
            # exact rational root: collapse
            return m, m
        if sm == sa:
            a = m
        else:
            b = m
    return a, b


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


def _rational_roots(f: IntPoly):
    """Exact rational roots of squarefree f (rational root theorem).

    Skipped (returning only a trivial zero root) when the constant or leading
    coefficient is too large to factor cheaply; isolation then proceeds with
    ordinary sign-change intervals, which stays correct, just less tidy.
    """
    cs = f.coeffs
    roots = []
    if cs and cs[0] == 0:
        roots.append(Fraction(0))
        cs = cs[1:]
        f = IntPoly(cs)
    if len(cs) <= 1:
        return roots
    c0, lead = abs(cs[0]), abs(cs[-1])
    if c0 > 10**6 or lead > 10**3:
        return roots
    seen = set()
    for num in _divisors(c0):
        for den in _divisors(lead):
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if r not in seen:
                    seen.add(r)
                    if f(r) == 0:
                        roots.append(r)
    return roots


class _FactorRoots:
    """Isolated roots of one squarefree factor, refinable on demand."""

    __slots__ = ("factor", "mult", "chain", "intervals")

    def __init__(self, factor: IntPoly, mult: int):
        self.factor = factor
        self.mult = mult
        self.chain = SturmChain(factor)
        self.intervals = _isolate_squarefree(factor, self.chain)
        # collapse exact rational roots to point intervals up front
        for r in _rational_roots(factor):
            for i, (a, b) in enumerate(self.intervals):
                if a < r < b:
                    self.intervals[i] = (r, r)
                    break

    def refine_all(self, width: Fraction):
        self.intervals = [
            _refine_sign_change(self.factor, a, b, width) for a, b in self.intervals
        ]


def _squarefree_stack(p: IntPoly):
    return [_FactorRoots(f, m) for f, m in yun_squarefree(p)]


@dataclass(frozen=True)
class RootReport:
    """Certified real-root summary of an integer polynomial."""

    degree: int
    n_real: int  # with multiplicity
    is_hyperbolic: bool
    intervals: tuple  # ((lo, hi), ...) rational enclosures, ascending, one per distinct root
    multiplicities: tuple
    span: Optional[tuple]  # (lo, hi) enclosure of max root - min root; None if no real roots
    n_in_critical: int  # roots in [-2, 2], with multiplicity

    def to_json(self) -> dict:
        def frac(x):
            return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)

        return {
            "degree": self.degree,
            "n_real": self.n_real,
            "is_hyperbolic": self.is_hyperbolic,
            "intervals": [[frac(a), frac(b)] for a, b in self.intervals],
            "multiplicities": list(self.multiplicities),
            "span": [frac(self.span[0]), frac(self.span[1])] if self.span else None,
            "n_in_critical": self.n_in_critical,
        }


DEFAULT_REFINE = Fraction(1, 2**40)


def isolate_real_roots(p: IntPoly, refine_to: Fraction = DEFAULT_REFINE) -> RootReport:
    """Isolates every distinct real root into disjoint rational intervals.

    Intervals either carry a sign change of the squarefree factor (simple-root
    certificate) or are exact rational points (lo == hi).  Multiplicities come
    from the Yun squarefree stack.
    """
    if not isinstance(p, IntPoly):
        raise TypeError("expected IntPoly")
    if not p:
        raise ValueError("zero polynomial has no root report")
    deg = len(p.coeffs) - 1
    stack = _squarefree_stack(p)
    for fr in stack:
        fr.refine_all(Fraction(refine_to))
    # merge across factors, refining until intervals are pairwise disjoint
    tagged = []
    for fr in stack:
        for iv in fr.intervals:
            tagged.append([iv, fr])
    changed = True
    while changed:
        changed = False
        tagged.sort(key=lambda t: t[0])
        for i in range(len(tagged) - 1):
            (a1, b1), f1 = tagged[i]
            (a2, b2), f2 = tagged[i + 1]
            if b1 > a2 and f1 is not f2:  # overlap between different factors
                if b1 > a1:
                    tagged[i][0] = _refine_sign_change(f1.factor, a1, b1, (b1 - a1) / 2)
                if b2 > a2:
                    tagged[i + 1][0] = _refine_sign_change(f2.factor, a2, b2, (b2 - a2) / 2)
                changed = True
    intervals = tuple(t[0] for t in tagged)
    mults = tuple(t[1].mult for t in tagged)
    n_real_w = sum(mults)
    is_hyp = n_real_w == deg if deg > 0 else True
    # span from extreme intervals
    span_iv = None
    if intervals:
        lo_iv, hi_iv = intervals[0], intervals[-1]
        span_iv = (hi_iv[0] - lo_iv[1], hi_iv[1] - lo_iv[0])
        if span_iv[0] < 0:
            span_iv = (Fraction(0), span_iv[1])
    n_crit = _count_in_critical(stack)
    return RootReport(
        degree=deg,
        n_real=n_real_w,
        is_hyperbolic=is_hyp,
        intervals=intervals,
        multiplicities=mults,
        span=span_iv,
        n_in_critical=n_crit,
    )


def _deflate_at(f: IntPoly, r: int):
    """Returns (f with any root at r removed, 1 if r was a root else 0); f squarefree."""
    if f(r) == 0:
        return f.exact_div(IntPoly((-r, 1))), 1
    return f, 0


def _count_in_critical(stack) -> int:
    total = 0
    for fr in stack:
        f = fr.factor
        if f.degree <= 0:
            continue
        at = 0
        for r in (-2, 2):
            f, hit = _deflate_at(f, r)
            at += hit
        inside = SturmChain(f).count_open(Fraction(-2), Fraction(2)) if f.degree > 0 else 0
        total += fr.mult * (at + inside)
    return total


@dataclass(frozen=True)
class RegionCounts:
    """Real roots of p split by an interval [lo, hi], with multiplicity."""

    below: int
    at_lo: int
    inside: int
    at_hi: int
    above: int
    n_complex: int  # complex roots with multiplicity (always even)

    @property
    def n_real(self) -> int:
        return self.below + self.at_lo + self.inside + self.at_hi + self.above


def real_root_regions(p: IntPoly, lo=Fraction(-2), hi=Fraction(2)) -> RegionCounts:
    """Certified multiplicity-weighted counts of real roots relative to [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    deg = len(p.coeffs) - 1
    below = at_lo = inside = at_hi = above = nreal = 0
    for f, m in yun_squarefree(p):
        g = f
        if lo.denominator == 1:
            g, hit = _deflate_at(g, int(lo))
            at_lo += m * hit
        elif f(lo) == 0:
            raise ValueError("non-integer boundary root; choose different bounds")
        if hi.denominator == 1:
            g, hit = _deflate_at(g, int(hi))
            at_hi += m * hit
        elif f(hi) == 0:
            raise ValueError("non-integer boundary root; choose different bounds")
        if g.degree > 0:
            ch = SturmChain(g)
            ins = ch.count_open(lo, hi)
            bel = ch.variations("-inf") - ch.variations(lo)
            abv = ch.variations(hi) - ch.variations("+inf")
            inside += m * ins
            below += m * bel
            above += m * abv
            nreal += m * (ins + bel + abv)
    nreal += at_lo + at_hi
    return RegionCounts(below, at_lo, inside, at_hi, above, deg - nreal)


def is_hyperbolic(p: IntPoly) -> bool:
    """True iff all roots of p are real (with multiplicity)."""
    deg = len(p.coeffs) - 1
    if deg <= 0:
        return bool(p)
    total = 0
    for f, m in yun_squarefree(p):
        n = SturmChain(f).n_real_distinct()
        if n != f.degree:
            return False
        total += m * f.degree
    return total == deg


def is_kronecker(p: IntPoly) -> bool:
    """True iff p is hyperbolic with every root in the closed interval [-2, 2]."""
    deg = len(p.coeffs) - 1
    if deg <= 0:
        return bool(p)
    total = 0
    for f, m in yun_squarefree(p):
        g = f
        at = 0
        for r in (-2, 2):
            g, hit = _deflate_at(g, r)
            at += hit
        ins = SturmChain(g).count_open(Fraction(-2), Fraction(2)) if g.degree > 0 else 0
        if at + ins != f.degree:
            return False
        total += m * f.degree
    return total == deg


# ---------------------------------------------------------------------------
# extreme roots and spans
# ---------------------------------------------------------------------------


def _factor_extreme(fr: _FactorRoots, side: str, width: Fraction):
    if not fr.intervals:
        return None
    idx = -1 if side == "max" else 0
    a, b = fr.intervals[idx]
    a, b = _refine_sign_change(fr.factor, a, b, width)
    fr.intervals[idx] = (a, b)
    return a, b


def _extreme_from_stack(stack, side: str, tol: Fraction):
    width = Fraction(tol)
    best = None
    for fr in stack:
        iv = _factor_extreme(fr, side, width)
        if iv is None:
            continue
        if best is None:
            best = (iv, fr)
            continue
        # compare, refining both on ties until disjoint or pinched
        (ba, bb), bfr = best
        a, b = iv
        while True:
            if side == "max":
                if a > bb:
                    best = ((a, b), fr)
                    break
                if b < ba:
                    break
            else:
                if b < ba:
                    best = ((a, b), fr)
                    break
                if a > bb:
                    break
            w = max(b - a, bb - ba) / 2
            if w == 0:
                break  # identical exact points (coprime factors cannot share roots)
            a, b = _refine_sign_change(fr.factor, a, b, w)
            ba, bb = _refine_sign_change(bfr.factor, ba, bb, w)
            best = ((ba, bb), bfr)
    if best is None:
        raise TooFewRealRoots("polynomial has no real roots")
    return best[0]


def extreme_root(p: IntPoly, side: str, tol: Fraction = DEFAULT_REFINE):
    """Rational enclosure of the largest ('max') or smallest ('min') real root."""
    if side not in ("min", "max"):
        raise ValueError("side must be 'min' or 'max'")
    return _extreme_from_stack(_squarefree_stack(p), side, tol)


def _span_from_stack(stack, tol: Fraction):
    half = Fraction(tol) / 2
    mx = _extreme_from_stack(stack, "max", half)
    mn = _extreme_from_stack(stack, "min", half)
    lo = mx[0] - mn[1]
    hi = mx[1] - mn[0]
    if lo < 0:
        lo = Fraction(0)
    return (lo, hi)


def span(p: IntPoly, tol: Fraction = DEFAULT_REFINE):
    """Certified enclosure (lo, hi) of span(p) = max real root - min real root.

    Raises TooFewRealRoots if p has no real roots; a single real root gives
    the exact span (0, 0).
    """
    return _span_from_stack(_squarefree_stack(p), tol)


def span_decide_less(p: IntPoly, bound: Fraction, floor: Fraction = Fraction(1, 2**160)):
    """Certified decision span(p) < bound, refining only as much as needed.

    Returns True/False; None only if the span *equals* bound deeper than the
    width floor (callers treat that as 'not less than').
    """
    bound = Fraction(bound)
    stack = _squarefree_stack(p)
    tol = Fraction(1, 2**8)
    while True:
        lo, hi = _span_from_stack(stack, tol)
        if hi < bound:
            return True
        if lo >= bound:
            return False
        if tol <= floor:
            return None
        tol /= 2**8


# ---------------------------------------------------------------------------
# unit-circle classification of palindromic polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CircleReport:
    """Exact root location counts for a palindromic polynomial, with multiplicity."""

    n_inside: int
    n_on: int
    n_outside: int
    certified: bool = True

    def to_json(self) -> dict:
        return {
            "inside": self.n_inside,
            "on": self.n_on,
            "outside": self.n_outside,
            "certified": self.certified,
        }


def classify_unit_circle(g: PalindromicPoly) -> CircleReport:
    """Counts roots inside/on/outside the unit circle, exactly.

    Strips the forced z = 1 root of (-1)-symmetric polynomials and the forced
    z = -1 root of odd-degree (+1)-symmetric ones, unlifts the remaining even
    core to the x-line, and classifies by certified real-root counts there.
    """
    if not isinstance(g, PalindromicPoly):
        g = PalindromicPoly.detect(g)
    inner = g.inner
    eps = g.symmetry
    stripped = 0
    if eps == -1:
        inner = inner.exact_div(IntPoly((-1, 1)))  # z - 1
        stripped += 1
        eps = 1
    if (len(inner.coeffs) - 1) % 2:
        inner = inner.exact_div(IntPoly((1, 1)))  # z + 1
        stripped += 1
    deg_g = len(g.coeffs) - 1
    if inner.degree <= 0:
        return CircleReport(0, stripped, 0)
    core = PalindromicPoly(inner, 1)
    f = unlift(core)
    rc = real_root_regions(f, Fraction(-2), Fraction(2))
    n_on = stripped + 2 * (rc.inside + rc.at_lo + rc.at_hi)
    n_off_side = rc.below + rc.above + rc.n_complex
    report = CircleReport(n_off_side, n_on, n_off_side)
    if report.n_inside + report.n_on + report.n_outside != deg_g:
        raise AssertionError("circle classification lost roots")
    return report


# ---------------------------------------------------------------------------
# nonnegativity certificates
# ---------------------------------------------------------------------------


def certify_nonnegative_on(p: IntPoly, lo: Fraction, hi: Fraction) -> bool:
    """Exact check that p >= 0 everywhere on [lo, hi].

    Odd-multiplicity roots strictly inside (lo, hi) defeat the certificate;
    otherwise the sign is constant away from evenly-touching roots and is
    read at the endpoints and one interior sample.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not p:
        return True
    if p(lo) < 0 or p(hi) < 0:
        return False
    for f, m in yun_squarefree(p):
        if m % 2 == 0 or f.degree <= 0:
            continue
        g = f
        for r in (lo, hi):
            if g.degree > 0 and g(r) == 0:
                g = g.exact_div(IntPoly((-r.numerator, r.denominator)))
        if g.degree > 0 and SturmChain(g).count_open(lo, hi) > 0:
            return False
    sample = _nonroot_near(p, lo, hi)
    return p(sample) > 0


# ---------------------------------------------------------------------------
# advisory numeric disc counting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscCounts:
    """Numeric (advisory) root counts relative to a circle |z| = radius."""

    inside: int
    outside: int
    uncertified: int
    roots: tuple = ()

    def to_json(self) -> dict:
        return {
            "inside": self.inside,
            "outside": self.outside,
            "uncertified": self.uncertified,
        }


def count_roots_in_disc(q, radius=1, margin=1e-9) -> DiscCounts:
    """Counts roots with |z| below/above radius via 256-bit numerics.

    Roots whose modulus is within `margin` (plus the solver's own residual
    error estimate) of the radius are reported as uncertified rather than
    guessed.  Accepts IntPoly, RatPoly, or PalindromicPoly.
    """
    if isinstance(q, PalindromicPoly):
        p = q.inner
    elif isinstance(q, IntPoly):
        p = q
    else:
        p, _ = q.clear_denominators()
    if not p or len(p.coeffs) == 1:
        return DiscCounts(0, 0, 0)
    with mpmath.mp.workprec(256):
        coeffs = [mpmath.mpf(c) for c in reversed(p.coeffs)]
        roots, err = mpmath.polyroots(coeffs, maxsteps=200, extraprec=128, error=True)
        rad = mpmath.mpf(radius.numerator) / radius.denominator \
            if isinstance(radius, Fraction) else mpmath.mpf(radius)
        slack = mpmath.mpf(margin) + err
        inside = outside = uncert = 0
        flagged = []
        for r in roots:
            d = abs(r) - rad
            if abs(d) <= slack:
                uncert += 1
                flagged.append(complex(r))
            elif d < 0:
                inside += 1
            else:
                outside += 1
    return DiscCounts(inside, outside, uncert, tuple(flagged))
