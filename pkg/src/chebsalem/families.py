"""Parametric families of integer polynomials given by Chebyshev coordinates.

Six families are provided.  Three of them (``kns``, ``an``, ``bn``) consist
of Kronecker polynomials: every root lies in [-2, 2].  The other three
(``minus1``, ``two``, ``three``) are designed so that all roots but one (or
two) stay in [-2, 2] while an extreme root escapes; under the substitution
x = z + 1/z the escaping root corresponds to a real reciprocal pair and the
bounded ones to unit-circle pairs, which is what ties these families to
Salem/Pisot numbers.

Each family admits a closed-form factorization of its palindromic lift
(`closed_form_z`), and the non-Kronecker families come with exact limit
polynomials for their extreme roots and spans (`limit_extreme_root`,
`limit_span`).  Everything here is exact integer/rational arithmetic; the
only enclosures are certified rational intervals from :mod:`.rootcert`.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chebbasis import ChebCoords, IntPoly, RatPoly, from_cheb
from .errors import IdentityFailed, InvalidParams, NotApplicable
from .palindrome import PalindromicPoly, lift_cheb, unlift
from .rootcert import (
    DEFAULT_REFINE,
    SturmChain,
    _refine_sign_change,
    extreme_root,
    isolate_real_roots,
)

KNS = "kns"
AN = "an"
BN = "bn"
MINUS1 = "minus1"
TWOPARAM = "two"
THREEPARAM = "three"

_VARIANTS = (KNS, AN, BN, MINUS1, TWOPARAM, THREEPARAM)

# Which integer parameters each variant accepts, in canonical order.
_FIELDS = {
    KNS: ("k", "n", "s"),
    AN: ("n",),
    BN: ("n",),
    MINUS1: ("k", "n"),
    TWOPARAM: ("h1", "h2", "n"),
    THREEPARAM: ("h1", "h2", "h3", "n"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family variant plus its integer parameters.

    Construct through the per-family classmethods (:meth:`kns`, :meth:`two`,
    ...) or :meth:`parse`; the constructor validates ranges either way.
    """

    variant: str
    k: Optional[int] = None
    n: Optional[int] = None
    s: Optional[int] = None
    h1: Optional[int] = None
    h2: Optional[int] = None
    h3: Optional[int] = None
    odd: bool = False  # only meaningful for BN (degree 2n+1 instead of 2n)

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise InvalidParams("unknown family variant %r" % (self.variant,))
        fields = _FIELDS[self.variant]
        for name in ("k", "n", "s", "h1", "h2", "h3"):
            value = getattr(self, name)
            if name in fields:
                if not isinstance(value, int) or isinstance(value, bool):
                    raise InvalidParams(
                        "%s requires integer %s" % (self.variant, name)
                    )
            elif value is not None:
                raise InvalidParams(
                    "%s does not take parameter %s" % (self.variant, name)
                )
        if self.odd and self.variant != BN:
            raise InvalidParams("odd flag is only meaningful for bn")
        v = self.variant
        if v == KNS:
            if self.k < 0 or self.n < 2 or self.s < 0:
                raise InvalidParams("kns requires k >= 0, n >= 2, s >= 0")
        elif v in (AN, BN):
            if self.n < 1:
                raise InvalidParams("%s requires n >= 1" % v)
        elif v == MINUS1:
            if self.k < 0 or self.n < 1:
                raise InvalidParams("minus1 requires k >= 0, n >= 1")
        elif v == TWOPARAM:
            if not (1 <= self.h1 <= self.h2) or self.n < 1:
                raise InvalidParams("two requires 1 <= h1 <= h2 and n >= 1")
        elif v == THREEPARAM:
            if not (1 <= self.h1 <= self.h2 <= self.h3) or self.n < 1:
                raise InvalidParams(
                    "three requires 1 <= h1 <= h2 <= h3 and n >= 1"
                )

    # -- constructors ------------------------------------------------

    @classmethod
    def kns(cls, k: int, n: int, s: int) -> "FamilySpec":
        return cls(KNS, k=k, n=n, s=s)

    @classmethod
    def an(cls, n: int) -> "FamilySpec":
        return cls(AN, n=n)

    @classmethod
    def bn(cls, n: int, odd: bool = False) -> "FamilySpec":
        return cls(BN, n=n, odd=odd)

    @classmethod
    def minus1(cls, k: int, n: int) -> "FamilySpec":
        return cls(MINUS1, k=k, n=n)

    @classmethod
    def two(cls, h1: int, h2: int, n: int) -> "FamilySpec":
        return cls(TWOPARAM, h1=h1, h2=h2, n=n)

    @classmethod
    def three(cls, h1: int, h2: int, h3: int, n: int) -> "FamilySpec":
        return cls(THREEPARAM, h1=h1, h2=h2, h3=h3, n=n)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``"kns:k=1,n=3,s=0"`` / ``"two:h1=1,h2=2,n=5"`` style strings.

        ``bn`` accepts an extra ``parity=odd``/``parity=even`` entry.
        """
        head, sep, rest = text.strip().partition(":")
        variant = head.strip().lower()
        if variant not in _VARIANTS:
            raise InvalidParams("unknown family variant %r" % (head,))
        kwargs = {}
        if sep:
            for item in rest.split(","):
                item = item.strip()
                if not item:
                    continue
                key, eq, value = item.partition("=")
                key = key.strip().lower()
                value = value.strip()
                if not eq:
                    raise InvalidParams("expected key=value, got %r" % (item,))
                if key == "parity":
                    if value not in ("even", "odd"):
                        raise InvalidParams("parity must be even or odd")
                    kwargs["odd"] = value == "odd"
                    continue
                if key not in ("k", "n", "s", "h1", "h2", "h3"):
                    raise InvalidParams("unknown parameter %r" % (key,))
                try:
                    kwargs[key] = int(value)
                except ValueError:
                    raise InvalidParams(
                        "parameter %s must be an integer, got %r" % (key, value)
                    ) from None
        return cls(variant, **kwargs)

    # -- misc --------------------------------------------------------

    def with_n(self, n: int) -> "FamilySpec":
        """Same family parameters with a different length ``n``."""
        kwargs = {f: getattr(self, f) for f in _FIELDS[self.variant]}
        kwargs["n"] = n
        if self.variant == BN:
            kwargs["odd"] = self.odd
        return FamilySpec(self.variant, **kwargs)

    @property
    def degree(self) -> int:
        v = self.variant
        if v == KNS:
            return (self.n - 1) * (self.k + 1) + self.s
        if v == AN:
            return self.n
        if v == BN:
            return 2 * self.n + 1 if self.odd else 2 * self.n
        if v == MINUS1:
            return 2 * self.n + self.k - 1
        if v == TWOPARAM:
            return 2 * self.n + 1
        return 6 * self.n + 1

    def __str__(self) -> str:
        parts = ["%s=%d" % (f, getattr(self, f)) for f in _FIELDS[self.variant]]
        if self.variant == BN:
            parts.append("parity=%s" % ("odd" if self.odd else "even"))
        return "%s:%s" % (self.variant, ",".join(parts))


def coords_of(spec: FamilySpec) -> ChebCoords:
    """Chebyshev coordinates [c_0..c_d] of the family member."""
    v = spec.variant
    if v == KNS:
        c = [0] * (spec.degree + 1)
        for j in range(spec.n):
            # z^e + z^-e contributes 2, not 1, when the exponent e is zero
            c[spec.s + j * (spec.k + 1)] += 1 if spec.s + j * (spec.k + 1) else 2
        return tuple(c)
    if v == AN:
        return tuple([2] * spec.n + [1])
    if v == BN:
        body = [2, 1] * spec.n + [1]
        if spec.odd:
            body = [1] + body
        return tuple(body)
    if v == MINUS1:
        c = [0] * (spec.degree + 1)
        for j in range(spec.n):
            c[2 * j] = -1
        c[spec.degree] = 1
        return tuple(c)
    if v == TWOPARAM:
        return tuple([1] + [-spec.h1, spec.h2] * spec.n + [1])
    return tuple(
        [1]
        + [-spec.h1, spec.h2, -spec.h3, spec.h1, -spec.h2, spec.h3] * spec.n
        + [1]
    )


def poly_of(spec: FamilySpec) -> IntPoly:
    """Monomial-basis polynomial of the family member."""
    return from_cheb(coords_of(spec))


def _z_pow_minus_one(n: int) -> IntPoly:
    return IntPoly.monomial(1, n) - IntPoly.one()


@dataclass(frozen=True)
class ClosedFormIdentity:
    """Both sides of a family's z-side identity, fully expanded.

    ``lhs`` is ``z^deg * P~ * multiplier`` and ``rhs`` the expanded closed
    form; ``holds`` reports exact equality.  Sides are rational polynomials
    because the two-parameter closed form has half-integer coefficients when
    h2 is even (three-parameter: when the corresponding combination is odd).
    """

    spec: FamilySpec
    multiplier: IntPoly
    lhs: RatPoly
    rhs: RatPoly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def closed_form_z(spec: FamilySpec) -> ClosedFormIdentity:
    """Expand both sides of the family's z-side closed-form identity.

    KNS has no multiplier; AN uses (z-1), BN/MINUS1/TWOPARAM use (z^2-1),
    THREEPARAM uses (z^3+1).  The right-hand sides are the product/telescope
    forms; for TWOPARAM and THREEPARAM they are the Salem-style combinations
    z^m Q(z) -+ rev(Q)(z) of :func:`q_poly`.
    """
    lifted = lift_cheb(coords_of(spec)).inner
    one = IntPoly.one()
    v = spec.variant
    if v == KNS:
        k, n, s = spec.k, spec.n, spec.s
        multiplier = one
        cyclic = _z_pow_minus_one(n * (k + 1)).exact_div(
            _z_pow_minus_one(k + 1)
        )
        rhs = (one + IntPoly.monomial(1, (n - 1) * (k + 1) + 2 * s)) * cyclic
    elif v == AN:
        multiplier = IntPoly((-1, 1))
        rhs = _z_pow_minus_one(2 * spec.n) * IntPoly((1, 1))
    elif v == BN:
        multiplier = IntPoly((-1, 0, 1))
        rhs = _z_pow_minus_one(2 * spec.degree) * IntPoly((1, 1, 1))
    elif v == MINUS1:
        multiplier = IntPoly((-1, 0, 1))
        k, n = spec.k, spec.n
        if k == 0:
            head = IntPoly((-1, -1, 1))  # z^2 - z - 1
            tail = IntPoly((-1, 1, 1))  # z^2 + z - 1
            rhs = IntPoly.monomial(1, 4 * n - 2) * head + tail
        else:
            head = _w_poly(k)
            tail = IntPoly.monomial(1, k + 1) + IntPoly((-1, 0, 1))
            rhs = IntPoly.monomial(1, 4 * n + k - 1) * head + tail
    elif v == TWOPARAM:
        multiplier = IntPoly((-1, 0, 1))
        q = q_poly(spec)
        rhs_rat = RatPoly((0,) * (2 * spec.n + 1) + (1,)) * q - q.reversal()
        return ClosedFormIdentity(
            spec, multiplier, lifted.to_rat() * multiplier.to_rat(), rhs_rat
        )
    else:
        multiplier = IntPoly((1, 0, 0, 1))
        q = q_poly(spec)
        rhs_rat = RatPoly((0,) * (6 * spec.n + 1) + (1,)) * q + q.reversal()
        return ClosedFormIdentity(
            spec, multiplier, lifted.to_rat() * multiplier.to_rat(), rhs_rat
        )
    return ClosedFormIdentity(
        spec, multiplier, (lifted * multiplier).to_rat(), rhs.to_rat()
    )


def u_poly(spec: FamilySpec) -> IntPoly:
    """Pisot-side factor U: z^2 + h2 z - (h1+1), or the cubic analogue."""
    if spec.variant == TWOPARAM:
        return IntPoly((-(spec.h1 + 1), spec.h2, 1))
    if spec.variant == THREEPARAM:
        return IntPoly((spec.h1 + 1, -spec.h2, spec.h3, 1))
    raise NotApplicable("u_poly is defined for two/three only")


def v_poly(spec: FamilySpec) -> RatPoly:
    """Low-order correction V in Q = z^m U + V (three-parameter family)."""
    if spec.variant != THREEPARAM:
        raise NotApplicable("v_poly is defined for three only")
    a = Fraction(1 - spec.h3, 2)
    b = Fraction(spec.h2 - spec.h1, 2)
    return RatPoly((a, b, b, a))


def q_poly(spec: FamilySpec) -> RatPoly:
    """The combination Q whose Pisot-ness drives the Salem construction.

    TWOPARAM: Q = z^(2n+1) U - (h2-1)/2 (z^2-1), degree 2n+3.
    THREEPARAM: Q = z^(6n+1) U + V, degree 6n+4.
    Coefficients are integers iff h2 is odd (TWOPARAM) respectively h3 odd
    and h1 = h2 (mod 2) (THREEPARAM).
    """
    if spec.variant == TWOPARAM:
        u = u_poly(spec).to_rat()
        hump = RatPoly((Fraction(spec.h2 - 1, 2), 0, -Fraction(spec.h2 - 1, 2)))
        return RatPoly((0,) * (2 * spec.n + 1) + (1,)) * u + hump
    if spec.variant == THREEPARAM:
        u = u_poly(spec).to_rat()
        return RatPoly((0,) * (6 * spec.n + 1) + (1,)) * u + v_poly(spec)
    raise NotApplicable("q_poly is defined for two/three only")


def salem_identity_check(spec: FamilySpec) -> bool:
    """Verify z^m (z^2-1) P~ = z^m Q - rev Q (TWOPARAM, m = 2n+1) or
    z^m (z^3+1) P~ = z^m Q + rev Q (THREEPARAM, m = 6n+1), exactly.

    Raises IdentityFailed carrying the difference polynomial on failure.
    """
    if spec.variant not in (TWOPARAM, THREEPARAM):
        raise NotApplicable("salem identity is defined for two/three only")
    identity = closed_form_z(spec)
    if not identity.holds:
        raise IdentityFailed(
            "salem identity failed for %s" % spec,
            difference=identity.lhs - identity.rhs,
        )
    return True


@dataclass(frozen=True)
class AlgebraicLimit:
    """A limit value given as a selected root of an integer polynomial."""

    defining_poly: IntPoly
    root_selector: str  # largest_real | smallest_real | negative_root | largest_root
    value_enclosure: tuple  # (Fraction lo, Fraction hi)

    def to_json(self) -> dict:
        lo, hi = self.value_enclosure
        return {
            "poly": self.defining_poly.to_json(),
            "selector": self.root_selector,
            "enclosure": [str(Fraction(lo)), str(Fraction(hi))],
        }


@dataclass(frozen=True)
class RootLimits:
    """Limits of the smallest (lower) and largest (upper) real root."""

    lower: AlgebraicLimit
    upper: AlgebraicLimit


def _exact_limit(value: int) -> AlgebraicLimit:
    poly = IntPoly((-value, 1))
    return AlgebraicLimit(poly, "largest_real", (Fraction(value), Fraction(value)))


def _w_poly(k: int) -> IntPoly:
    """z^(k+1) - z^(k-1) - 1 for k >= 1, z^2 - z - 1 for k = 0."""
    if k == 0:
        return IntPoly((-1, -1, 1))
    cs = [0] * (k + 2)
    cs[0] = -1
    cs[k - 1] -= 1
    cs[k + 1] += 1
    return IntPoly(cs)


def minus1_seed_poly(k: int) -> IntPoly:
    """The polynomial whose largest real root z0 gives lim x_M = z0 + 1/z0."""
    return _w_poly(k)


def _negative_root_enclosure(p: IntPoly, tol: Fraction):
    """Enclosure of the unique negative real root of ``p``."""
    report = isolate_real_roots(p, refine_to=tol)
    negative = [iv for iv in report.intervals if iv[1] < 0]
    if len(negative) != 1:
        raise InvalidParams(
            "expected exactly one negative root of %s, found %d"
            % (p, len(negative))
        )
    return negative[0]


def two_param_limit_poly(h1: int, h2: int) -> IntPoly:
    """(h1+1) x^2 + h1 h2 x - [h2^2 + (h1+2)^2]; its negative root is lim x_m."""
    return IntPoly((-(h2 * h2 + (h1 + 2) ** 2), h1 * h2, h1 + 1))


def three_param_limit_poly(h1: int, h2: int, h3: int) -> IntPoly:
    """The cubic whose negative root is lim x_m for the three-parameter family."""
    return IntPoly(
        (
            (h2 + 1) ** 2 + (h1 - h3 + 1) ** 2,
            -((h1 + 1) * (h2 + 3) + (h2 - 1) * h3),
            (h1 + 1) * h3 - h2,
            h1 + 1,
        )
    )


def two_param_span_poly(h1: int, h2: int) -> IntPoly:
    """-(h1+1) x^2 + (4(h1+1) + h1 h2) x + (h2-h1)^2; largest root = lim span."""
    return IntPoly(((h2 - h1) ** 2, 4 * (h1 + 1) + h1 * h2, -(h1 + 1)))


def three_param_span_poly(h1: int, h2: int, h3: int) -> IntPoly:
    """The cubic resultant whose largest root is lim span (three parameters)."""
    return IntPoly(
        (
            (h1 - h2 + h3 + 2) ** 2,
            -(9 * (h1 + 1) - h1 * h2 - h2 - h2 * h3 + h3 - 4 * (h2 - h1 * h3 - h3)),
            6 * (h1 + 1) - h2 + h1 * h3 + h3,
            -(h1 + 1),
        )
    )


def limit_extreme_root(
    spec: FamilySpec, tol: Fraction = DEFAULT_REFINE
) -> RootLimits:
    """Limits (n -> oo) of the smallest and largest real roots.

    Kronecker families have both limits equal to the exact constants -2/+2.
    MINUS1: x_M -> z0 + 1/z0 for the largest real root z0 of
    :func:`minus1_seed_poly`; x_m -> -2 (k even) or -x_M (k odd).
    TWOPARAM/THREEPARAM: x_m -> the negative root of the printed limit
    polynomial, x_M -> 2.
    """
    v = spec.variant
    if v in (KNS, AN, BN):
        return RootLimits(lower=_exact_limit(-2), upper=_exact_limit(2))
    if v == MINUS1:
        w = _w_poly(spec.k)
        lifted = PalindromicPoly.detect(w * w.reversal())
        folded = unlift(lifted)
        if folded.lead < 0:
            folded = -folded
        enclosure = extreme_root(folded, "max", tol)
        upper = AlgebraicLimit(folded, "largest_real", enclosure)
        if spec.k % 2 == 0:
            lower = _exact_limit(-2)
        else:
            mirror = folded.reflect()
            if mirror.lead < 0:
                mirror = -mirror
            lower = AlgebraicLimit(
                mirror, "smallest_real", (-enclosure[1], -enclosure[0])
            )
        return RootLimits(lower=lower, upper=upper)
    if v == TWOPARAM:
        poly = two_param_limit_poly(spec.h1, spec.h2)
    else:
        poly = three_param_limit_poly(spec.h1, spec.h2, spec.h3)
    enclosure = _negative_root_enclosure(poly, tol)
    return RootLimits(
        lower=AlgebraicLimit(poly, "negative_root", enclosure),
        upper=_exact_limit(2),
    )


def limit_span(spec: FamilySpec, tol: Fraction = DEFAULT_REFINE) -> AlgebraicLimit:
    """Limit of the span as the largest root of the printed resultant.

    Only TWOPARAM/THREEPARAM carry a span resultant; other variants raise
    NotApplicable (Kronecker spans tend to 4 trivially and MINUS1 has no
    printed resultant).
    """
    if spec.variant == TWOPARAM:
        poly = two_param_span_poly(spec.h1, spec.h2)
    elif spec.variant == THREEPARAM:
        poly = three_param_span_poly(spec.h1, spec.h2, spec.h3)
    else:
        raise NotApplicable("limit_span is defined for two/three only")
    enclosure = extreme_root(poly, "max", tol)
    return AlgebraicLimit(poly, "largest_root", enclosure)


# ----------------------------------------------------------------------
# Unit-circle lemmas for the two- and three-parameter families.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CircleLemmaReport:
    """Exact form of |U|^2 - |(h2-1)/2 (z^2-1)|^2 on the unit circle.

    Both sides are polynomials in a = Re z after substituting b^2 = 1 - a^2:
    ``difference`` is |U|^2 - |rest|^2 and ``certificate`` the manifestly
    nonnegative form (h1 - h2 a)^2 + (4 h1 + 2 h2 + 3)(1 - a^2).  ``holds``
    is exact equality of the two.
    """

    h1: int
    h2: int
    difference: IntPoly
    certificate: IntPoly

    @property
    def holds(self) -> bool:
        return self.difference == self.certificate


def circle_lemma_identity(h1: int, h2: int) -> CircleLemmaReport:
    """Certify |(h2-1)/2 (z^2-1)| <= |U(z)| on |z| = 1, exactly.

    With z = a + bi, a^2 + b^2 = 1: |U|^2 = (2a^2 + h2 a - h1 - 2)^2 +
    (1-a^2)(2a + h2)^2 while |(h2-1)/2 (z^2-1)|^2 = (h2-1)^2 (1-a^2).  The
    difference collapses to (h1 - h2 a)^2 + (4h1 + 2h2 + 3)(1 - a^2), a sum
    of terms that are nonnegative on [-1, 1] by inspection.
    """
    if not 1 <= h1 <= h2:
        raise InvalidParams("circle lemma requires 1 <= h1 <= h2")
    a = IntPoly.x()
    one = IntPoly.one()
    b2 = one - a * a
    re_u = IntPoly((-h1 - 2, h2, 2))
    im_u_over_b = IntPoly((h2, 2))
    lhs = re_u * re_u + b2 * im_u_over_b * im_u_over_b - (h2 - 1) ** 2 * b2
    linear = IntPoly((h1, -h2))
    rhs = linear * linear + (4 * h1 + 2 * h2 + 3) * b2
    return CircleLemmaReport(h1, h2, lhs, rhs)


@dataclass(frozen=True)
class LemmaFParts:
    """|U|^2, |V|^2 and their difference on the unit circle, in x = Re z.

    ``a`` and ``two_f`` are integer polynomials; ``b`` needs a factor 1/4 so
    it stays rational.  ``two_f = 2(a - b)`` exactly.
    """

    a: IntPoly
    b: RatPoly
    two_f: IntPoly


def lemma_f_poly(h1: int, h2: int, h3: int) -> LemmaFParts:
    """Expand |U|^2 - |V|^2 on the unit circle as a cubic in x = Re z.

    a(x) = (4x^3 - 3x + h3(2x^2 - 1) - h2 x + h1 + 1)^2
           + (1 - x^2)(4x^2 + 2 h3 x - h2 - 1)^2
    b(x) = 1/4 [((h3-1)(4x^3 - 3x + 1) + (h1-h2)(2x^2 + x - 1))^2
           + (1 - x^2)((h3-1)(4x^2 - 1) + (h1-h2)(2x + 1))^2]

    The quartic terms cancel, leaving the cubic 2f = 2(a - b) with integer
    coefficients.  Nonnegativity of 2f on [-1, 1] is the circle condition
    |V| <= |U| that keeps Q's small roots inside the unit disc.
    """
    if not 1 <= h1 <= h2 <= h3:
        raise InvalidParams("lemma requires 1 <= h1 <= h2 <= h3")
    x = IntPoly.x()
    one = IntPoly.one()
    b2 = one - x * x
    # 4x^3 - 3x + h3(2x^2 - 1) - h2 x + (h1 + 1), collected by power:
    re_u = IntPoly((h1 + 1 - h3, -3 - h2, 2 * h3, 4))
    im_u = IntPoly((-h2 - 1, 2 * h3, 4))
    a_poly = re_u * re_u + b2 * im_u * im_u

    re_v = (h3 - 1) * IntPoly((1, -3, 0, 4)) + (h1 - h2) * IntPoly((-1, 1, 2))
    im_v = (h3 - 1) * IntPoly((-1, 0, 4)) + (h1 - h2) * IntPoly((1, 2))
    b_poly = (re_v * re_v + b2 * im_v * im_v).to_rat() * Fraction(1, 4)

    two_f = (a_poly.to_rat() * 2 - b_poly * 2).to_int()
    return LemmaFParts(a=a_poly, b=b_poly, two_f=two_f)


def lemma_f_printed_cubic(h1: int, h2: int, h3: int) -> RatPoly:
    """The displayed cubic form of f(x) = a(x) - b(x) (coefficients in h)."""
    c3 = Fraction(-2 * h3 * h3 + 4 * h3 + 8 * h1 + 6)
    c2 = Fraction(2 * (h2 * (h3 - 3) + 2 * h3 + h1 * (h3 + 1)))
    c1 = Fraction(
        -h1 * h1
        - 2 * (h2 + h3 + 5) * h1
        - h2 * h2
        + 3 * h3 * h3
        - 2 * h3
        - 2 * h2 * (h3 + 3)
        - 9,
        2,
    )
    c0 = Fraction(
        h1 * h1
        + 2 * (h2 - h3 + 1) * h1
        + h2 * h2
        + h3 * h3
        - 2 * h2 * (h3 - 3)
        - 2 * h3
        + 3,
        2,
    )
    return RatPoly((c0, c1, c2, c3))


def lemma_f_decomposition(h1: int, h2: int, h3: int):
    """2f = (1-x)(h1 + h2 - (1+2x) h3)^2 + A0 + A1 h1 + A2 h2 + A3 h3.

    Returns (square_part, affine_part) as integer polynomials whose sum is
    ``lemma_f_poly(...).two_f``; the A_i are the fixed polynomials
    A0 = 3 - 9x + 12x^3, A1 = 2(1 - 5x + 2x^2 + 8x^3),
    A2 = 2(3 - 3x - 6x^2), A3 = -2(1 - x - 2x^2)(1 + 2x).
    """
    x = IntPoly.x()
    one = IntPoly.one()
    inner = IntPoly((h1 + h2 - h3, -2 * h3))
    square_part = (one - x) * inner * inner
    a0 = IntPoly((3, -9, 0, 12))
    a1 = 2 * IntPoly((1, -5, 2, 8))
    a2 = 2 * IntPoly((3, -3, -6))
    a3 = -2 * IntPoly((1, -1, -2)) * IntPoly((1, 2))
    affine_part = a0 + h1 * a1 + h2 * a2 + h3 * a3
    return square_part, affine_part


# ----------------------------------------------------------------------
# Root locations of U (the Pisot factor) for the two/three families.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class UDiscReport:
    """Where the roots of U sit relative to the unit circle.

    ``alpha_enclosure`` brackets the one real root below -1 (the opposite of
    a Pisot number); the remaining roots are strictly inside the unit disc
    except in the equal-parameter boundary case, where a cyclotomic factor
    (z - 1 for two parameters, z^2 - z + 1 for three) sits exactly on the
    circle and ``circle_factor`` records it.
    """

    u: IntPoly
    alpha_enclosure: tuple
    n_inside: int
    n_on_circle: int
    circle_factor: Optional[IntPoly]
    boundary: bool

    @property
    def strict(self) -> bool:
        return self.n_on_circle == 0


def u_disc_report(spec: FamilySpec, tol: Fraction = DEFAULT_REFINE) -> UDiscReport:
    """Certify the root layout of U for a two/three-parameter spec.

    All certification is exact: Sturm counts locate the real roots, and for
    a lone complex pair of the cubic its modulus^2 = (h1+1)/|alpha| < 1 is
    implied by the strict bound alpha < -(h1+1).  The boundary case (equal
    parameters) is detected by exact division by the cyclotomic factor.
    """
    u = u_poly(spec)
    threshold = -(spec.h1 + 1)
    if spec.variant == TWOPARAM:
        boundary = spec.h1 == spec.h2
        circle = IntPoly((-1, 1))
    else:
        boundary = spec.h1 == spec.h2 == spec.h3
        circle = IntPoly((1, -1, 1))
    if boundary:
        cofactor = u.exact_div(circle)
        # cofactor = z + (h1 + 1): alpha = -(h1+1) exactly.
        alpha = Fraction(-cofactor[0])
        assert alpha == threshold
        return UDiscReport(
            u=u,
            alpha_enclosure=(alpha, alpha),
            n_inside=0,
            n_on_circle=circle.degree,
            circle_factor=circle,
            boundary=True,
        )
    chain = SturmChain(u)
    thr = Fraction(threshold)
    if u(thr) == 0:
        raise InvalidParams("unexpected root of U at -(h1+1) off boundary")
    below = chain.variations("-inf") - chain.variations(thr)
    if below != 1:
        raise IdentityFailed(
            "expected exactly one root of U below %s" % thr, difference=u
        )
    n_real = chain.n_real_distinct()
    rest = u.degree - 1
    if n_real == u.degree:
        inside = chain.count_open(Fraction(-1), Fraction(1))
        if inside != rest or u(Fraction(-1)) == 0 or u(Fraction(1)) == 0:
            raise IdentityFailed(
                "real roots of U not strictly inside (-1, 1)", difference=u
            )
    else:
        # One real root and a conjugate pair: |pair|^2 * |alpha| = h1 + 1
        # and alpha < -(h1+1) strictly, so the pair is strictly inside.
        if n_real != 1 or rest != 2:
            raise IdentityFailed("unexpected root pattern for U", difference=u)
    report = isolate_real_roots(u, refine_to=tol)
    a, b = min(report.intervals, key=lambda iv: iv[0])
    # The Sturm count proved alpha < -(h1+1) strictly; shrink the bracket
    # until the enclosure itself certifies that.  Refinement bisects on the
    # squarefree part so a sign change is guaranteed.
    g = chain.gcd_with_derivative
    usf = u if g.degree < 1 else u.exact_div(g)
    while not b < thr:
        a, b = _refine_sign_change(usf, a, b, (b - a) / 2)
    alpha_iv = (a, b)
    return UDiscReport(
        u=u,
        alpha_enclosure=alpha_iv,
        n_inside=rest,
        n_on_circle=0,
        circle_factor=None,
        boundary=False,
    )
