"""Exact arithmetic substrate.

Rationals are stdlib ``fractions.Fraction``.  On top of those this module
provides the quadratic field Q(alpha) with alpha^2 = -3, dense univariate and
bivariate polynomials over either coefficient field, reduced rational
functions, Sylvester resultants and discriminants.  Everything is immutable
and exact; no floats appear anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Optional, Union

Rational = Fraction

Scalar = Union[int, Fraction, "QuadElement"]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational scalar: {x!r}")


def sqrt_fraction(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a rational, or None if it is not a square."""
    if x < 0:
        return None
    rn = isqrt(x.numerator)
    rd = isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


class QuadElement:
    """Element a + b*alpha of Q(alpha), alpha^2 = -3."""

    __slots__ = ("a", "b")

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, *_):
        raise AttributeError("QuadElement is immutable")

    @classmethod
    def coerce(cls, x: Scalar) -> "QuadElement":
        if isinstance(x, QuadElement):
            return x
        return cls(_as_fraction(x))

    @staticmethod
    def _scalar(other) -> bool:
        return isinstance(other, (int, Fraction, QuadElement))

    def __add__(self, other):
        if not QuadElement._scalar(other):
            return NotImplemented
        o = QuadElement.coerce(other)
        return QuadElement(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(-self.a, -self.b)

    def __sub__(self, other):
        if not QuadElement._scalar(other):
            return NotImplemented
        return self + (-QuadElement.coerce(other))

    def __rsub__(self, other):
        if not QuadElement._scalar(other):
            return NotImplemented
        return QuadElement.coerce(other) + (-self)

    def __mul__(self, other):
        if not QuadElement._scalar(other):
            return NotImplemented
        o = QuadElement.coerce(other)
        # (a + b alpha)(c + d alpha) = (ac - 3bd) + (ad + bc) alpha
        return QuadElement(self.a * o.a - 3 * self.b * o.b,
                           self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conj(self) -> "QuadElement":
        return QuadElement(self.a, -self.b)

    def norm(self) -> Fraction:
        # a^2 + 3 b^2, multiplicative over Q(alpha)
        return self.a * self.a + 3 * self.b * self.b

    def inverse(self) -> "QuadElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(alpha)")
        return QuadElement(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if not QuadElement._scalar(other):
            return NotImplemented
        return self * QuadElement.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not QuadElement._scalar(other):
            return NotImplemented
        return QuadElement.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadElement(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadElement)):
            o = QuadElement.coerce(other)
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"QuadElement({self.a!r}, {self.b!r})"

    def __str__(self):
        return format_quad(self)


ALPHA = QuadElement(0, 1)
ZERO = QuadElement(0)
ONE = QuadElement(1)


def format_quad(z: QuadElement) -> str:
    """Canonical text form: 'a', 'b*alpha' or 'a+b*alpha' with sign folded in."""
    if z.b == 0:
        return str(z.a)
    bpart = "alpha" if z.b == 1 else ("-alpha" if z.b == -1 else f"{z.b}*alpha")
    if z.a == 0:
        return bpart
    sign = "+" if z.b > 0 else ""
    return f"{z.a}{sign}{bpart}"


def parse_quad(text: str) -> QuadElement:
    """Inverse of format_quad."""
    s = text.strip().replace(" ", "")
    if "alpha" not in s:
        return QuadElement(Fraction(s))
    # split off the alpha term; the rational part, if any, comes first
    head, _, _ = s.partition("alpha")
    if head.endswith("*"):
        head = head[:-1]
    # find boundary between rational part and the b coefficient
    cut = 0
    for i in range(1, len(head)):
        if head[i] in "+-" and head[i - 1] not in "+-/*":
            cut = i
    if cut == 0:
        a_text, b_text = "0", head
    else:
        a_text, b_text = head[:cut], head[cut:]
    if b_text in ("", "+"):
        b = Fraction(1)
    elif b_text == "-":
        b = Fraction(-1)
    else:
        b = Fraction(b_text)
    return QuadElement(Fraction(a_text) if a_text not in ("", "+") else Fraction(0), b)


def exact_sqrt(z: QuadElement) -> Optional[QuadElement]:
    """Square root of z inside Q(alpha), or None when z is not a square there.

    No field extension is ever constructed: the result exists iff
    norm(z) is a rational square and the induced rational pieces are squares.
    """
    if z.is_zero():
        return ZERO
    if z.b == 0:
        r = sqrt_fraction(z.a)
        if r is not None:
            return QuadElement(r)
        # a < 0 may be a square of a pure-alpha element: (y alpha)^2 = -3 y^2
        r = sqrt_fraction(-z.a / 3)
        if r is not None:
            return QuadElement(0, r)
        return None
    n = sqrt_fraction(z.norm())
    if n is None:
        return None
    # (x + y alpha)^2 = z needs x^2 = (a +- n)/2 and y = b/(2x)
    for sign in (1, -1):
        x2 = (z.a + sign * n) / 2
        x = sqrt_fraction(x2)
        if x is None or x == 0:
            continue
        cand = QuadElement(x, z.b / (2 * x))
        if cand * cand == z:
            return cand
    return None


def _inv_coeff(c):
    # exact inverse; int and Fraction go through Fraction so no float sneaks in
    return c.inverse() if isinstance(c, QuadElement) else 1 / _as_fraction(c)


def _zero_like(c):
    return c * 0


class Poly:
    """Dense univariate polynomial over Fraction or QuadElement."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs, var: str = "x"):
        cs = list(coeffs)
        while cs and (cs[-1] == 0 if not isinstance(cs[-1], QuadElement) else cs[-1].is_zero()):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c, var: str = "x") -> "Poly":
        return cls([c], var)

    @classmethod
    def x(cls, var: str = "x") -> "Poly":
        return cls([0, 1], var)

    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check_var(self, other: "Poly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other, self.var)
        self._check_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other, self.var) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs], self.var)
        self._check_var(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] = out[i + j] + ci * cj
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(1, self.var)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.var == other.var and len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def evaluate(self, x):
        out = _zero_like(x)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def compose(self, g: "Poly") -> "Poly":
        out = Poly([], g.var)
        for c in reversed(self.coeffs):
            out = out * g + Poly.const(c, g.var)
        return out

    def content(self) -> Fraction:
        """gcd of rational coefficients (positive); rational polys only."""
        from math import gcd, lcm
        if self.is_zero():
            return Fraction(0)
        fracs = []
        for c in self.coeffs:
            if isinstance(c, QuadElement):
                raise TypeError("content is defined here for rational coefficients")
            fracs.append(_as_fraction(c))
        num = 0
        den = 1
        for f in fracs:
            num = gcd(num, f.numerator)
            den = lcm(den, f.denominator)
        return Fraction(num, den)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * _inv_coeff(self.lc())

    def divmod(self, other: "Poly"):
        self._check_var(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Poly([], self.var)
        r = self
        dinv = _inv_coeff(other.lc())
        while not r.is_zero() and r.degree() >= other.degree():
            shift = r.degree() - other.degree()
            coef = r.lc() * dinv
            term = Poly([0] * shift + [coef], self.var)
            q = q + term
            r = r - term * other
        return q, r

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def serialize(self) -> str:
        body = ",".join(format_quad(QuadElement.coerce(c)) for c in self.coeffs)
        return f"{self.var}:[{body}]"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        var, _, body = text.partition(":")
        body = body.strip()[1:-1]
        if not body:
            return cls([], var.strip())
        return cls([parse_quad(tok) for tok in body.split(",")], var.strip())

    def __repr__(self):
        return f"Poly({self.serialize()})"


class PoleValue:
    """Marker for rational-function evaluation at a pole."""

    __slots__ = ("order",)

    def __init__(self, order: int):
        object.__setattr__(self, "order", order)

    def __setattr__(self, *_):
        raise AttributeError("PoleValue is immutable")

    def __eq__(self, other):
        return isinstance(other, PoleValue) and self.order == other.order

    def __repr__(self):
        return f"PoleValue(order={self.order})"


def _root_multiplicity(p: Poly, x) -> int:
    m = 0
    while not p.is_zero():
        v = p.evaluate(x)
        if not (v.is_zero() if isinstance(v, QuadElement) else v == 0):
            break
        m += 1
        p = p.divmod(Poly([-x, 1], p.var))[0]
    return m


class RatFunc:
    """Reduced rational function; denominator monic and coprime to numerator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num._check_var(den)
        g = num.gcd(den)
        if not g.is_zero() and g.degree() > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        inv = _inv_coeff(den.lc())
        object.__setattr__(self, "num", num * inv)
        object.__setattr__(self, "den", den * inv)

    def __setattr__(self, *_):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly.const(1, p.var))

    def degree(self) -> int:
        return max(self.num.degree(), self.den.degree())

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.from_poly(Poly.const(other, self.num.var))
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.from_poly(Poly.const(other, self.num.var))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.from_poly(Poly.const(other, self.num.var))
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc.from_poly(Poly.const(other, self.num.var))
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(),
                       self.den * self.den)

    def evaluate(self, x):
        dv = self.den.evaluate(x)
        dz = dv.is_zero() if isinstance(dv, QuadElement) else dv == 0
        if dz:
            # reduced, so the numerator cannot vanish here too
            return PoleValue(_root_multiplicity(self.den, x))
        nv = self.num.evaluate(x)
        return nv / dv

    def compose(self, g: "RatFunc") -> "RatFunc":
        # f(g) via homogenization: sum a_i gn^i gd^(m-i) over gd^m
        m = max(self.num.degree(), self.den.degree(), 0)

        def lift(p: Poly) -> Poly:
            out = Poly([], g.num.var)
            for i, c in enumerate(p.coeffs):
                out = out + Poly.const(c, g.num.var) * (g.num ** i) * (g.den ** (m - i))
            return out

        return RatFunc(lift(self.num), lift(self.den))

    def __repr__(self):
        return f"RatFunc({self.num.serialize()} / {self.den.serialize()})"


class BiPoly:
    """Dense bivariate polynomial; rows indexed by the first variable's degree."""

    __slots__ = ("vars", "rows")

    def __init__(self, rows, variables=("s", "t")):
        trimmed = [list(r) for r in rows]
        for r in trimmed:
            while r and (r[-1] == 0 if not isinstance(r[-1], QuadElement) else r[-1].is_zero()):
                r.pop()
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        object.__setattr__(self, "rows", tuple(tuple(r) for r in trimmed))
        object.__setattr__(self, "vars", tuple(variables))

    def __setattr__(self, *_):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_terms(cls, terms, variables=("s", "t")) -> "BiPoly":
        """terms: mapping (i, j) -> coefficient, exponents of (vars[0], vars[1])."""
        if not terms:
            return cls([], variables)
        imax = max(i for i, _ in terms)
        jmax = max(j for _, j in terms)
        rows = [[0] * (jmax + 1) for _ in range(imax + 1)]
        for (i, j), c in terms.items():
            rows[i][j] = c
        return cls(rows, variables)

    def _check_vars(self, other: "BiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def coefficient(self, i: int, j: int):
        if i < len(self.rows) and j < len(self.rows[i]):
            return self.rows[i][j]
        return 0

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check_vars(other)
        ni = max(len(self.rows), len(other.rows))
        out = []
        for i in range(ni):
            a = self.rows[i] if i < len(self.rows) else ()
            b = other.rows[i] if i < len(other.rows) else ()
            nj = max(len(a), len(b))
            out.append([(a[j] if j < len(a) else 0) + (b[j] if j < len(b) else 0)
                        for j in range(nj)])
        return BiPoly(out, self.vars)

    def __neg__(self):
        return BiPoly([[-c for c in r] for r in self.rows], self.vars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        self._check_vars(other)
        if not self.rows or not other.rows:
            return BiPoly([], self.vars)
        ni = len(self.rows) + len(other.rows) - 1
        nj = max(len(r) for r in self.rows) + max(len(r) for r in other.rows) - 1
        out = [[0] * nj for _ in range(ni)]
        for i, ra in enumerate(self.rows):
            for j, ca in enumerate(ra):
                cz = ca == 0 if not isinstance(ca, QuadElement) else ca.is_zero()
                if cz:
                    continue
                for k, rb in enumerate(other.rows):
                    for l, cb in enumerate(rb):
                        out[i + k][j + l] = out[i + k][j + l] + ca * cb
        return BiPoly(out, self.vars)

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.vars == other.vars and self.rows == other.rows

    def is_zero(self) -> bool:
        return not self.rows

    def evaluate(self, x, y):
        out = _zero_like(x)
        for r in reversed(self.rows):
            rowval = _zero_like(y)
            for c in reversed(r):
                rowval = rowval * y + c
            out = out * x + rowval
        return out

    def __repr__(self):
        return f"BiPoly(vars={self.vars}, rows={self.rows!r})"


def _det(matrix):
    """Exact determinant by Gaussian elimination over a field."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    det = None
    for col in range(n):
        pivot = None
        for r in range(col, n):
            v = m[r][col]
            if not (v.is_zero() if isinstance(v, QuadElement) else v == 0):
                pivot = r
                break
        if pivot is None:
            return QuadElement(0) if any(isinstance(c, QuadElement) for row in matrix for c in row) else Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        pv = m[col][col]
        det = pv if det is None else det * pv
        pinv = _inv_coeff(pv)
        for r in range(col + 1, n):
            f = m[r][col] * pinv
            fz = f.is_zero() if isinstance(f, QuadElement) else f == 0
            if fz:
                continue
            m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return det * sign


def resultant(p: Poly, q: Poly):
    """Sylvester-matrix resultant; exact over the coefficient field."""
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = p.degree(), q.degree()
    if m == 0:
        return p.coeffs[0] ** n
    if n == 0:
        return q.coeffs[0] ** m
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return _det(rows)


def discriminant(p: Poly):
    """disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p)."""
    n = p.degree()
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return r * _inv_coeff(p.lc()) * sign
