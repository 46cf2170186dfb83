"""Exact integer polynomials and rational functions in one variable n."""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import PoleAtArgument, ZeroFunction


class _MinusInfinity:
    """Degree of the zero function; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _MinusInfinity)

    def __eq__(self, other):
        return isinstance(other, _MinusInfinity)

    def __hash__(self):
        return hash("MinusInfinity")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "MinusInfinity"


MINUS_INFINITY = _MinusInfinity()


def _floor_nth_root(m, d):
    if m <= 0:
        return 0
    if d == 1:
        return m
    g = 1 << (m.bit_length() // d + 1)
    while True:
        nxt = ((d - 1) * g + m // g ** (d - 1)) // d
        if nxt >= g:
            return g
        g = nxt


def _ceil_nth_root(m, d):
    """Smallest t >= 0 with t**d >= m."""
    r = _floor_nth_root(m, d)
    return r if r**d >= m else r + 1


def _as_int(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    raise TypeError(f"integer coefficient required, got {c!r}")


class IntPolynomial:
    """Polynomial with integer coefficients, stored ascending by power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cleaned = [_as_int(c) for c in coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        self.coeffs = tuple(cleaned)

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def variable(cls):
        return cls((0, 1))

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            raise ZeroFunction("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def content(self):
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __call__(self, n):
        result = 0
        for c in reversed(self.coeffs):
            result = result * n + c
        return result

    def __add__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return IntPolynomial(merged)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = IntPolynomial((1,))
        for _ in range(exponent):
            result = result * self
        return result

    def shift(self, h):
        """Return the polynomial p(n + h)."""
        base = IntPolynomial((_as_int(h), 1))
        result = IntPolynomial()
        for c in reversed(self.coeffs):
            result = result * base + IntPolynomial((c,))
        return result

    def root_bound(self):
        """Integer bound R with every complex root strictly inside |z| < R.

        Minimum of the Cauchy bound and a Fujiwara-type bound; the latter stays
        small for products of low-root factors whose expanded middle
        coefficients are enormous.
        """
        if len(self.coeffs) <= 1:
            return 0
        lead = abs(self.coeffs[-1])
        n = len(self.coeffs) - 1
        top = max(abs(c) for c in self.coeffs[:-1])
        cauchy = 1 + -(-top // lead)
        fuji = 0
        for i, c in enumerate(self.coeffs[:-1]):
            if c == 0:
                continue
            m = -(-abs(c) // lead)
            fuji = max(fuji, _ceil_nth_root(m, n - i))
        return min(cauchy, 2 * fuji + 1)

    def primitive_part(self):
        c = self.content
        if c in (0, 1):
            return self
        return IntPolynomial(k // c for k in self.coeffs)

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(int(c) for c in data)

    def __eq__(self, other):
        other = _as_polynomial(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}n" if power == 1 else f"{mag}n^{power}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _as_polynomial(v):
    if isinstance(v, IntPolynomial):
        return v
    if isinstance(v, int):
        return IntPolynomial((v,))
    if isinstance(v, Fraction) and v.denominator == 1:
        return IntPolynomial((v.numerator,))
    return NotImplemented


def _frac_divmod(num, den):
    """Quotient and remainder of Fraction coefficient lists (ascending)."""
    num = list(num)
    dd = len(den) - 1
    dlead = den[-1]
    if len(num) <= dd:
        return [], num
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / dlead
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
        num[i] = Fraction(0)
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _poly_gcd(p, q):
    """Primitive integer gcd with positive leading coefficient."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    while b:
        _, r = _frac_divmod(a, b)
        a, b = b, r
    if not a:
        return IntPolynomial()
    mult = math.lcm(*(c.denominator for c in a))
    ints = [int(c * mult) for c in a]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(ints)


def _exact_div(p, g):
    """Divide p by a known exact divisor g, staying in integer coefficients."""
    quot, rem = _frac_divmod(
        [Fraction(c) for c in p.coeffs], [Fraction(c) for c in g.coeffs]
    )
    if rem or any(c.denominator != 1 for c in quot):
        raise ArithmeticError("inexact polynomial division")
    return IntPolynomial(int(c) for c in quot)


def _as_num_den(v):
    if isinstance(v, RationalFunction):
        return v.num, v.den
    if isinstance(v, IntPolynomial):
        return v, IntPolynomial((1,))
    if isinstance(v, int):
        return IntPolynomial((v,)), IntPolynomial((1,))
    if isinstance(v, Fraction):
        return IntPolynomial((v.numerator,)), IntPolynomial((v.denominator,))
    return None


class RationalFunction:
    """Quotient of integer polynomials, kept in primitive reduced form.

    The polynomial gcd of numerator and denominator is removed, the pair is
    scaled so gcd(content(num), content(den)) = 1, and the denominator has a
    positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        top = _as_num_den(num)
        bottom = _as_num_den(den)
        if top is None or bottom is None:
            raise TypeError(f"cannot build a rational function from {num!r}/{den!r}")
        raw_num = top[0] * bottom[1]
        raw_den = top[1] * bottom[0]
        if raw_den.is_zero:
            raise ZeroFunction("division by the zero function")
        if raw_num.is_zero:
            self.num = IntPolynomial()
            self.den = IntPolynomial((1,))
            return
        g = _poly_gcd(raw_num, raw_den)
        if g.degree > 0 or g.leading_coefficient != 1:
            raw_num = _exact_div(raw_num, g)
            raw_den = _exact_div(raw_den, g)
        c = math.gcd(raw_num.content, raw_den.content)
        if c > 1:
            raw_num = IntPolynomial(k // c for k in raw_num.coeffs)
            raw_den = IntPolynomial(k // c for k in raw_den.coeffs)
        if raw_den.leading_coefficient < 0:
            raw_num = -raw_num
            raw_den = -raw_den
        self.num = raw_num
        self.den = raw_den

    @classmethod
    def variable(cls):
        return cls(IntPolynomial.variable())

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant:
            raise ValueError(f"{self!r} is not constant")
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.num.coeffs[0], self.den.coeffs[0])

    def __call__(self, n):
        bottom = self.den(n)
        if bottom == 0:
            raise PoleAtArgument(n)
        return Fraction(self.num(n), bottom) if isinstance(bottom, int) else self.num(n) / bottom

    def shift(self, h):
        """Return the rational function r(n + h)."""
        return RationalFunction(self.num.shift(h), self.den.shift(h))

    def __add__(self, other):
        parts = _as_num_den(other)
        if parts is None:
            return NotImplemented
        on, od = parts
        return RationalFunction(self.num * od + on * self.den, self.den * od)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        parts = _as_num_den(other)
        if parts is None:
            return NotImplemented
        on, od = parts
        return RationalFunction(self.num * od - on * self.den, self.den * od)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        parts = _as_num_den(other)
        if parts is None:
            return NotImplemented
        on, od = parts
        return RationalFunction(self.num * on, self.den * od)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = _as_num_den(other)
        if parts is None:
            return NotImplemented
        on, od = parts
        return RationalFunction(self.num * od, self.den * on)

    def __rtruediv__(self, other):
        parts = _as_num_den(other)
        if parts is None:
            return NotImplemented
        on, od = parts
        return RationalFunction(on * self.den, od * self.num)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("rational-function exponent must be a non-negative integer")
        return RationalFunction(self.num**exponent, self.den**exponent)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(IntPolynomial.from_json(data["num"]), IntPolynomial.from_json(data["den"]))

    def __eq__(self, other):
        parts = _as_num_den(other)
        if parts is None:
            return NotImplemented
        on, od = parts
        if not isinstance(other, RationalFunction):
            other = RationalFunction(on, od)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.degree == 0 and self.den.coeffs[0] == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"


def poly_eval(p, n):
    """Evaluate an integer polynomial at an integer argument, exactly."""
    return p(n)


def ratfn_eval(r, n):
    """Evaluate a rational function at an integer argument as a Fraction."""
    return r(n)


def degree(r):
    """Degree of a rational function (or polynomial); MINUS_INFINITY for zero."""
    if isinstance(r, IntPolynomial):
        return r.degree
    if r.is_zero:
        return MINUS_INFINITY
    return r.num.degree - r.den.degree


def leading_coefficient(r):
    """Leading coefficient of numerator over leading coefficient of denominator."""
    if isinstance(r, IntPolynomial):
        return Fraction(r.leading_coefficient)
    if r.is_zero:
        raise ZeroFunction("the zero function has no leading coefficient")
    return Fraction(r.num.leading_coefficient, r.den.leading_coefficient)


def _scan_bound(r, from_n):
    """Last integer argument that could sit at or before a root or pole."""
    return max(r.num.root_bound(), r.den.root_bound(), from_n - 1)


def eventually_positive(r, from_n):
    """Exact test of r(n) > 0 for every integer n >= from_n.

    Signs are decided by scanning up to a root bound and comparing leading
    coefficients beyond it.  Raises PoleAtArgument if any integer n >= from_n
    is a pole.
    """
    r = r if isinstance(r, RationalFunction) else RationalFunction(r)
    # a pole past the root bound is impossible, so the scan finds them all
    bound = _scan_bound(r, from_n)
    ok = True
    for n in range(from_n, bound + 1):
        if r(n) <= 0:
            ok = False
    if not ok:
        return False
    if r.is_zero:
        return False
    return r.num.leading_coefficient > 0


def eventually_nonnegative(r, from_n):
    """Exact test of r(n) >= 0 for every integer n >= from_n."""
    r = r if isinstance(r, RationalFunction) else RationalFunction(r)
    if r.is_zero:
        return True
    bound = _scan_bound(r, from_n)
    ok = True
    for n in range(from_n, bound + 1):
        if r(n) < 0:
            ok = False
    return ok and r.num.leading_coefficient > 0


def has_integer_root_at_or_after(r, from_n):
    """Exact test for an integer n >= from_n with r(n) = 0."""
    r = r if isinstance(r, RationalFunction) else RationalFunction(r)
    if r.is_zero:
        return True
    bound = _scan_bound(r, from_n)
    for n in range(from_n, bound + 1):
        try:
            if r(n) == 0:
                return True
        except PoleAtArgument:
            continue
    return False


_TERM_RE = re.compile(r"([+-]?)(\d+)?(?:\*?n(?:[\^](\d+))?)?$")


def poly_from_string(text):
    """Parse strings like "3n^2 - n + 1" into an IntPolynomial."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial string")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs = {}
    for chunk in chunks:
        m = _TERM_RE.fullmatch(chunk)
        if not m or (m.group(2) is None and "n" not in chunk):
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        if "n" not in chunk:
            power = 0
        elif m.group(3) is not None:
            power = int(m.group(3))
        else:
            power = 1
        coeffs[power] = coeffs.get(power, 0) + sign * coeff
    out = [0] * (max(coeffs) + 1)
    for power, c in coeffs.items():
        out[power] = c
    return IntPolynomial(out)


def ratfn_from_string(text):
    """Parse "p" or "p/q" (either side optionally parenthesized)."""
    s = text.replace(" ", "")
    depth = 0
    split_at = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if split_at is not None:
                raise ValueError(f"cannot parse rational function {text!r}")
            split_at = i
    if depth != 0:
        raise ValueError(f"unbalanced parentheses in {text!r}")

    def strip_parens(part):
        while part.startswith("(") and part.endswith(")"):
            inner = part[1:-1]
            if "(" in inner or ")" in inner:
                raise ValueError(f"cannot parse rational function {text!r}")
            part = inner
        return part

    if split_at is None:
        return RationalFunction(poly_from_string(strip_parens(s)))
    top = poly_from_string(strip_parens(s[:split_at]))
    bottom = poly_from_string(strip_parens(s[split_at + 1 :]))
    return RationalFunction(top, bottom)
