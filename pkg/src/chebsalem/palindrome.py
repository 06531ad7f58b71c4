"""Palindromic lifts: x = z + 1/z conjugation between real and circle pictures.

The lift of a degree-d polynomial f(x) is g(z) = z^d * f(z + 1/z), a
self-reciprocal ("palindromic") polynomial of degree 2d.  Roots transform as
x = z + 1/z: real x in [-2, 2] come from unit-circle pairs (z, 1/z = conj z),
real |x| > 2 from real reciprocal pairs, complex x from off-circle quadruples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import mpmath

from .chebbasis import IntPoly, from_cheb, format_poly
from .errors import NotPalindromic, OddDegree


@dataclass(frozen=True, init=False)
class PalindromicPoly:
    """Integer polynomial in z with declared symmetry g(z) = eps * z^deg * g(1/z).

    eps = +1 (palindromic) or -1 (anti-palindromic); coefficients are
    validated against the declared symmetry at construction.
    """

    inner: IntPoly
    symmetry: int

    def __init__(self, inner, symmetry: int = 1):
        if not isinstance(inner, IntPoly):
            inner = IntPoly(inner)
        if symmetry not in (1, -1):
            raise ValueError("symmetry must be +1 or -1")
        cs = inner.coeffs
        if not cs:
            raise NotPalindromic("zero polynomial has no symmetry type")
        d = len(cs) - 1
        for j in range(d + 1):
            if cs[j] != symmetry * cs[d - j]:
                raise NotPalindromic(
                    f"coefficient {j} breaks declared symmetry {symmetry:+d}"
                )
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "symmetry", symmetry)

    @classmethod
    def detect(cls, inner) -> "PalindromicPoly":
        """Wraps a polynomial, inferring its symmetry sign."""
        if not isinstance(inner, IntPoly):
            inner = IntPoly(inner)
        cs = inner.coeffs
        if cs:
            d = len(cs) - 1
            for eps in (1, -1):
                if all(cs[j] == eps * cs[d - j] for j in range((d + 2) // 2)):
                    return cls(inner, eps)
        raise NotPalindromic("polynomial is not self-reciprocal with either sign")

    @property
    def coeffs(self) -> tuple:
        return self.inner.coeffs

    @property
    def degree(self):
        return self.inner.degree

    def __call__(self, value):
        return self.inner(value)

    def __mul__(self, other):
        if isinstance(other, PalindromicPoly):
            return PalindromicPoly(self.inner * other.inner, self.symmetry * other.symmetry)
        return NotImplemented

    def to_json(self) -> dict:
        return {
            "basis": "z-monomial",
            "coeffs": [str(c) for c in self.coeffs],
            "symmetry": self.symmetry,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PalindromicPoly":
        if data.get("basis") != "z-monomial":
            raise ValueError(f"expected z-monomial basis, got {data.get('basis')!r}")
        return cls(IntPoly(tuple(int(s) for s in data["coeffs"])), int(data["symmetry"]))

    def __str__(self) -> str:
        return format_poly(self.coeffs, "z")


def lift(f: IntPoly) -> PalindromicPoly:
    """z^deg(f) * f(z + 1/z), always (+1)-palindromic of degree 2*deg(f).

    >>> str(lift(IntPoly([-1, -4, 1, 1])))
    'z^6 + z^5 - z^4 + z^3 - z^2 + z + 1'
    """
    if not isinstance(f, IntPoly):
        f = IntPoly(f)
    if not f:
        raise ValueError("cannot lift the zero polynomial")
    cs = f.coeffs
    d = len(cs) - 1
    # Horner in y = z + 1/z, cleared: acc_i = z^(d-i) * sum_{k>=i} c_k y^(k-i)
    acc = IntPoly((cs[d],))
    z2p1 = IntPoly((1, 0, 1))
    for i in range(d - 1, -1, -1):
        acc = acc * z2p1 + IntPoly.monomial(cs[i], d - i)
    return PalindromicPoly(acc, 1)


def lift_cheb(coords: Sequence[int]) -> PalindromicPoly:
    """Lift straight from Chebyshev coordinates: z^d * sum c_j (z^j + z^-j).

    Equals lift(from_cheb(coords)) but assembles the z-coefficients directly
    from c_j -> positions d - j and d + j.
    """
    cs = list(coords)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("cannot lift the zero polynomial")
    d = len(cs) - 1
    out = [0] * (2 * d + 1)
    out[d] = cs[0]
    for j in range(1, d + 1):
        out[d + j] += cs[j]
        out[d - j] += cs[j]
    return PalindromicPoly(IntPoly(out), 1)


def unlift(g: PalindromicPoly) -> IntPoly:
    """Inverse of lift: recovers f with lift(f) = g.

    Requires symmetry +1 and even degree; reads Chebyshev coordinates off the
    upper coefficient half (the z^(d+j) + z^(d-j) basis is triangular).
    """
    if not isinstance(g, PalindromicPoly):
        g = PalindromicPoly.detect(g)
    if g.symmetry != 1:
        raise NotPalindromic("only (+1)-palindromic polynomials are lifts")
    two_d = len(g.coeffs) - 1
    if two_d % 2:
        raise OddDegree("lifts have even degree")
    d = two_d // 2
    coords = [g.coeffs[d]] + [g.coeffs[d + j] for j in range(1, d + 1)]
    return from_cheb(coords)


def unlift_coords(g: PalindromicPoly) -> tuple:
    """Chebyshev coordinates of unlift(g), without the basis conversion."""
    if g.symmetry != 1:
        raise NotPalindromic("only (+1)-palindromic polynomials are lifts")
    two_d = len(g.coeffs) - 1
    if two_d % 2:
        raise OddDegree("lifts have even degree")
    d = two_d // 2
    return tuple([g.coeffs[d]] + [g.coeffs[d + j] for j in range(1, d + 1)])


def reciprocal_conjugate(f: IntPoly, sign: int = 1) -> IntPoly:
    """sign * z^deg(f) * f(1/z): the reciprocal partner with equal modulus on |z| = 1.

    >>> reciprocal_conjugate(IntPoly([-1, -1, 1]), -1).coeffs   # z^2 - z - 1
    (-1, 1, 1)
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    r = f.reversal()
    return r if sign == 1 else -r


@dataclass(frozen=True)
class ModulusReport:
    """Result of sampling | |f| - |g| | on the unit circle."""

    passed: bool
    max_deviation: float
    samples: int
    exact_reciprocal: Optional[int]  # +1/-1 if g == +-z^deg f(1/z) exactly, else None


def equal_modulus_on_circle(
    f: IntPoly, g: IntPoly, samples: int = 64, tol: float = 1e-20
) -> ModulusReport:
    """Checks |f(z)| == |g(z)| on |z| = 1 numerically (128-bit), plus the exact
    reciprocal-conjugate test that explains equality when it holds.

    The deviation is relative: max over samples of ||f|-|g|| / max(1, |f|, |g|).
    """
    exact = None
    rev = f.reversal()
    if g == rev:
        exact = 1
    elif g == -rev:
        exact = -1
    worst = mpmath.mpf(0)
    with mpmath.mp.workprec(160):
        for k in range(samples):
            theta = mpmath.mpf(2 * k + 1) / (2 * samples) * 2 * mpmath.pi
            z = mpmath.e ** (1j * theta)
            fv, gv = abs(f(z)), abs(g(z))
            dev = abs(fv - gv) / max(mpmath.mpf(1), fv, gv)
            worst = max(worst, dev)
        passed = bool(worst <= tol)
    return ModulusReport(passed, float(worst), samples, exact)
