"""Dense exact polynomials and the monic-Chebyshev basis on [-2, 2].

The basis polynomials are the monic Chebyshev polynomials T_n normalised to
the interval [-2, 2]:

    T_n(z + 1/z) = z^n + z^(-n),        T_n(2 cos t) = 2 cos(n t),

so T_0 = 1, T_1 = x, T_2 = x^2 - 2, and T_n = x*T_(n-1) - T_(n-2) for n >= 3
(the n = 2 step subtracts 2*T_0).  "Chebyshev coordinates" of an integer
polynomial are its coefficients in this basis; both change-of-basis matrices
are integral and unit upper-triangular, so integer polynomials have integer
coordinates and vice versa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

#: Chebyshev coordinates: integer coefficients, ascending by basis index.
ChebCoords = tuple  # tuple[int, ...]

NEG_INF = float("-inf")


def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def _scalar_to_str(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _scalar_from_str(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True, init=False)
class IntPoly:
    """Integer polynomial with dense ascending coefficients.

    Immutable; trailing zero coefficients are trimmed so equal polynomials
    compare equal.  The zero polynomial has an empty coefficient tuple and
    degree -inf.

    >>> p = IntPoly([-1, -4, 1, 1])   # x^3 + x^2 - 4x - 1
    >>> p.degree
    3
    >>> p(2)
    3
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = tuple(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"IntPoly coefficients must be ints, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(cs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPoly":
        return cls((0,) * power + (coeff,))

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "IntPoly"):
        """Exact division over the integers; raises ValueError otherwise."""
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = len(other.coeffs) - 1, other.coeffs[-1]
        if len(rem) - 1 < db:
            return IntPoly.zero(), self
        q = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            step, r = divmod(c, lb)
            if r:
                raise ValueError("division is not exact over the integers")
            q[k - db] = step
            for i, bc in enumerate(other.coeffs):
                rem[k - db + i] -= step * bc
        return IntPoly(q), IntPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Quotient self/other, raising ValueError unless it divides exactly."""
        q, r = divmod(self, other)
        if r:
            raise ValueError("polynomial does not divide exactly")
        return q

    def divides(self, other: "IntPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    # -- evaluation and transforms --------------------------------------

    def __call__(self, value):
        """Evaluate by Horner's rule; exact for int/Fraction arguments."""
        acc = 0 * value if self.coeffs else 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i)) \
            if len(self.coeffs) > 1 else IntPoly.zero()

    def shift(self, t: int) -> "IntPoly":
        """Taylor shift: returns p(x + t), exactly."""
        cs = list(self.coeffs)
        n = len(cs)
        # repeated synthetic division by (x - (-t))
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] += t * cs[k + 1]
        return IntPoly(cs)

    def reflect(self) -> "IntPoly":
        """Returns p(-x)."""
        return IntPoly(tuple(-c if i & 1 else c for i, c in enumerate(self.coeffs)))

    def reversal(self) -> "IntPoly":
        """Coefficient reversal z^deg * p(1/z) (trailing zeros become leading and are trimmed)."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Divides out the content; sign of the leading coefficient is kept."""
        c = self.content()
        return IntPoly(tuple(v // c for v in self.coeffs)) if c > 1 else self

    def to_rat(self) -> "RatPoly":
        return RatPoly(tuple(Fraction(c) for c in self.coeffs))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"basis": "monomial", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "IntPoly":
        if data.get("basis") != "monomial":
            raise ValueError(f"expected monomial basis, got {data.get('basis')!r}")
        return cls(tuple(int(s) for s in data["coeffs"]))

    def __str__(self) -> str:
        return format_poly(self.coeffs, "x")


@dataclass(frozen=True, init=False)
class RatPoly:
    """Dense polynomial over the rationals (Fraction coefficients, lowest terms)."""

    coeffs: tuple

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = tuple(Fraction(c) for c in coeffs)
        object.__setattr__(self, "coeffs", _trim(cs))

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, IntPoly):
            return other.to_rat()
        if isinstance(other, (int, Fraction)):
            return RatPoly((Fraction(other),))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return RatPoly(tuple(f * c for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db, lb = len(o.coeffs) - 1, o.coeffs[-1]
        if len(rem) - 1 < db:
            return RatPoly.zero(), self
        q = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            step = rem[k] / lb
            q[k - db] = step
            if step:
                for i, bc in enumerate(o.coeffs):
                    rem[k - db + i] -= step * bc
        return RatPoly(q), RatPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, value):
        acc = 0 * value if self.coeffs else 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i)) \
            if len(self.coeffs) > 1 else RatPoly.zero()

    def reversal(self) -> "RatPoly":
        return RatPoly(tuple(reversed(self.coeffs)))

    def clear_denominators(self):
        """Returns (IntPoly, d) with d > 0 minimal such that d * self is integral."""
        if not self.coeffs:
            return IntPoly.zero(), 1
        d = 1
        for c in self.coeffs:
            d = d * c.denominator // math.gcd(d, c.denominator)
        return IntPoly(tuple(int(c * d) for c in self.coeffs)), d

    def to_int(self) -> IntPoly:
        p, d = self.clear_denominators()
        if d != 1:
            raise ValueError("polynomial has non-integer coefficients")
        return p

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_json(self) -> dict:
        return {"basis": "monomial", "coeffs": [_scalar_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "RatPoly":
        if data.get("basis") != "monomial":
            raise ValueError(f"expected monomial basis, got {data.get('basis')!r}")
        return cls(tuple(Fraction(s) for s in data["coeffs"]))

    def __str__(self) -> str:
        return format_poly(self.coeffs, "x")


def format_poly(coeffs: Sequence, var: str = "x") -> str:
    """Human-readable rendering, highest power first."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if i == 0:
            body = _scalar_to_str(mag)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            body = xs if mag == 1 else f"{_scalar_to_str(mag)}*{xs}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# ---------------------------------------------------------------------------
# Chebyshev basis
# ---------------------------------------------------------------------------

_T_CACHE = [(1,), (0, 1)]


def chebyshev_T(n: int) -> IntPoly:
    """Monic Chebyshev polynomial T_n on [-2, 2], satisfying T_n(z + 1/z) = z^n + z^-n.

    >>> str(chebyshev_T(2))
    'x^2 - 2'
    >>> str(chebyshev_T(8))
    'x^8 - 8*x^6 + 20*x^4 - 16*x^2 + 2'
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_T_CACHE) <= n:
        k = len(_T_CACHE)
        prev = _T_CACHE[k - 1]
        lower = (2,) if k == 2 else _T_CACHE[k - 2]
        shifted = (0,) + prev  # x * T_{k-1}
        out = list(shifted)
        for i, c in enumerate(lower):
            out[i] -= c
        _T_CACHE.append(tuple(out))
    return IntPoly(_T_CACHE[n])


def from_cheb(coords: Sequence[int]) -> IntPoly:
    """Integer polynomial with the given Chebyshev coordinates (ascending).

    >>> str(from_cheb([1, -1, 1, 1]))
    'x^3 + x^2 - 4*x - 1'
    """
    cs = list(coords)
    for c in cs:
        if not isinstance(c, int):
            raise TypeError("Chebyshev coordinates must be ints")
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return IntPoly.zero()
    out = [0] * len(cs)
    for j, cj in enumerate(cs):
        if cj:
            for r, t in enumerate(chebyshev_T(j).coeffs):
                if t:
                    out[r] += cj * t
    return IntPoly(out)


def to_cheb(p: IntPoly) -> ChebCoords:
    """Chebyshev coordinates of an integer polynomial (exact; always integral).

    >>> to_cheb(IntPoly([-1, -6, 9, 5, -6, -1, 1]))
    (1, -1, 0, 0, 0, -1, 1)
    """
    cs = p.coeffs
    if not cs:
        return ()
    d = len(cs) - 1
    out = [0] * (d + 1)
    comb = math.comb
    for j, pj in enumerate(cs):
        if not pj:
            continue
        # x^j = sum over r = j, j-2, ... of C(j, (j+r)/2) * T_r
        for r in range(j, -1, -2):
            out[r] += pj * comb(j, (j + r) // 2)
    return tuple(out)


def coords_to_json(coords: Sequence[int]) -> dict:
    return {"basis": "chebyshev", "coeffs": [str(c) for c in coords]}


def coords_from_json(data: dict) -> ChebCoords:
    if data.get("basis") != "chebyshev":
        raise ValueError(f"expected chebyshev basis, got {data.get('basis')!r}")
    return tuple(int(s) for s in data["coeffs"])


# ---------------------------------------------------------------------------
# Explicit change-of-basis matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisMatrix:
    """Upper-triangular change-of-basis matrix (entries are integers)."""

    size: int
    entries: tuple  # row-major tuple of tuples

    def entry(self, i: int, j: int) -> int:
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def mul(self, other: "BasisMatrix") -> "BasisMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        n = self.size
        cols = [other.column(j) for j in range(n)]
        rows = []
        for i in range(n):
            ri = self.entries[i]
            rows.append(tuple(sum(ri[k] * cols[j][k] for k in range(n)) for j in range(n)))
        return BasisMatrix(n, tuple(rows))

    def is_identity(self) -> bool:
        return all(
            c == (1 if i == j else 0)
            for i, row in enumerate(self.entries)
            for j, c in enumerate(row)
        )

    def apply(self, vec: Sequence[int]) -> tuple:
        if len(vec) != self.size:
            raise ValueError("vector length mismatch")
        return tuple(sum(row[j] * vec[j] for j in range(self.size)) for row in self.entries)


def _exact_scaled_comb(n: int, k: int, num: int, den: int) -> int:
    v, r = divmod(math.comb(n, k) * num, den)
    if r:
        raise ArithmeticError("change-of-basis entry is not an integer")
    return v


def matrix_m(n: int) -> BasisMatrix:
    """Matrix whose column j holds the monomial coefficients of T_j (size n+1)."""
    size = n + 1
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = 1
    for j in range(2, size, 2):
        rows[0][j] = 2 if (j // 2) % 2 == 0 else -2
    for i in range(1, (size + 1) // 2):
        for j in range(i, (size + 1) // 2):
            sign = 1 if (i + j) % 2 == 0 else -1
            rows[2 * i][2 * j] = sign * _exact_scaled_comb(i + j - 1, 2 * i - 1, j, i)
    for i in range((size) // 2):
        for j in range(i, (size) // 2):
            sign = 1 if (i + j) % 2 == 0 else -1
            rows[2 * i + 1][2 * j + 1] = sign * _exact_scaled_comb(i + j, 2 * i, 2 * j + 1, 2 * i + 1)
    return BasisMatrix(size, tuple(tuple(r) for r in rows))


def matrix_b(n: int) -> BasisMatrix:
    """Inverse change of basis: column j holds the Chebyshev coordinates of x^j (size n+1)."""
    size = n + 1
    rows = []
    for r in range(size):
        row = [0] * size
        for j in range(r, size, 2):
            row[j] = math.comb(j, (j + r) // 2)
        rows.append(tuple(row))
    return BasisMatrix(size, tuple(rows))
