"""Infinite families of continued fractions with exactly known limits.

Each constructor returns a FamilyMember: a CFSpec (usually with a symbolic
tail), a claimed limit (exact rational or a named constant), and a list of
machine-checked hypotheses.  A member whose hypotheses all hold is verified;
a failed hypothesis flags the member unverified but never blocks
construction, since convergence can hold outside the certified range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cf import CFSpec, CFTail, _as_fraction, _as_ratfn
from .errors import DegenerateTerm, HypothesisViolation, PoleAtArgument
from .poly import (
    MINUS_INFINITY,
    IntPolynomial,
    RationalFunction,
    degree,
    eventually_nonnegative,
    eventually_positive,
    has_integer_root_at_or_after,
    leading_coefficient,
)
from .transforms import bernoulli_from_sequence

_X = IntPolynomial.variable()


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class NamedConstant:
    """Reference constant identified by name plus exact integer parameters.

    Known names: PiOver4, E, Zeta (k), Root (p, q, r, s meaning (p/q)^(r/s)),
    SineProduct (m, meaning m sin(pi/m)/pi), BrounckerPi (4/pi).
    """

    name: str
    params: dict = field(default_factory=dict)

    def describe(self):
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        return f"{self.name}({inner})"


@dataclass(frozen=True)
class LimitClaim:
    kind: str
    value: Fraction = None
    constant: NamedConstant = None

    @classmethod
    def exact(cls, value):
        return cls(kind="exact", value=_as_fraction(value))

    @classmethod
    def named(cls, name, **params):
        return cls(kind="named", constant=NamedConstant(name, dict(params)))

    def describe(self):
        if self.kind == "exact":
            return str(self.value)
        return self.constant.describe()

    def to_json(self):
        if self.kind == "exact":
            return {"kind": "exact", "value": str(self.value)}
        return {
            "kind": "named",
            "name": self.constant.name,
            "params": {k: str(v) for k, v in sorted(self.constant.params.items())},
        }


@dataclass(frozen=True)
class FamilyMember:
    cf: CFSpec
    limit: LimitClaim
    hypotheses: tuple = ()

    @property
    def verified(self):
        return all(h.holds for h in self.hypotheses)


def _hyp(name, check, detail):
    try:
        ok = bool(check())
    except PoleAtArgument as e:
        return Hypothesis(name, False, f"{detail}; pole at n = {e.argument}")
    return Hypothesis(name, ok, detail)


def _growth_ok(b):
    d = degree(b)
    if d is MINUS_INFINITY:
        return False
    if d > 0:
        return True
    return d == 0 and leading_coefficient(b) > 1


def pincherle_family(H, b):
    """CF with a_n = (H(n) + b(n) H(n-1)) / H(n-2) and denominators b(n).

    Under the hypotheses the limit is H(0)/H(-1) regardless of b, so one
    choice of H yields an infinite class of fractions with a common limit.
    """
    H = _as_ratfn(H)
    b = _as_ratfn(b)
    try:
        h_m1 = H(-1)
        h_0 = H(0)
    except PoleAtArgument as e:
        raise HypothesisViolation("limit_defined", f"H has a pole at n = {e.argument}")
    if h_m1 == 0:
        raise HypothesisViolation("limit_defined", "H(-1) must be nonzero")
    a = (H + b * H.shift(-1)) / H.shift(-2)
    cf = CFSpec(Fraction(0), (), CFTail(a, b, 1))
    hyps = (
        _hyp("H_positive", lambda: eventually_positive(H, -1), "H(n) > 0 for n >= -1"),
        _hyp("b_positive", lambda: eventually_positive(b, 1), "b(n) > 0 for n >= 1"),
        _hyp(
            "b_growth",
            lambda: _growth_ok(b),
            "degree(b) > 0, or b constant with value > 1",
        ),
    )
    return FamilyMember(cf, LimitClaim.exact(h_0 / h_m1), hyps)


def pincherle_poly_family(f, g, c, d):
    """Polynomial form of the same construction, with H = f/g and b = c/d.

    The limit f(0) g(-1) / (g(0) f(-1)) is independent of c and d.
    """
    f = _as_ratfn(f)
    g = _as_ratfn(g)
    c = _as_ratfn(c)
    d = _as_ratfn(d)
    try:
        denom = g(0) * f(-1)
        numer = f(0) * g(-1)
    except PoleAtArgument as e:
        raise HypothesisViolation(
            "limit_defined", f"f or g has a pole at n = {e.argument}"
        )
    if denom == 0:
        raise HypothesisViolation("limit_defined", "g(0) f(-1) must be nonzero")
    prefix = (
        (
            g(-1) * (d(1) * f(1) * g(0) + c(1) * f(0) * g(1)),
            c(1) * f(-1) * g(0) * g(1),
        ),
        (
            d(1) * f(-1) * g(0) ** 2 * (d(2) * f(2) * g(1) + c(2) * f(1) * g(2)),
            c(2) * f(0) * g(2),
        ),
    )
    tail_a = (
        d.shift(-1)
        * f.shift(-3)
        * g.shift(-2)
        * (d * f * g.shift(-1) + c * f.shift(-1) * g)
    )
    tail_b = c * f.shift(-2) * g
    cf = CFSpec(Fraction(0), prefix, CFTail(tail_a, tail_b, 3))
    hyps = (
        _hyp(
            "fg_positive",
            lambda: eventually_positive(f * g, -1),
            "f(n), g(n) nonzero with equal signs for n >= -1",
        ),
        _hyp(
            "cd_positive",
            lambda: eventually_positive(c * d, 0),
            "c(n), d(n) nonzero with equal signs for n >= 0",
        ),
        _hyp(
            "cd_growth",
            lambda: _growth_ok(c / d),
            "degree(c) > degree(d), or equal degrees with larger leading "
            "coefficient in c",
        ),
    )
    return FamilyMember(cf, LimitClaim.exact(numer / denom), hyps)


def family_pi(f):
    """Perturbed alternating-odd-reciprocal series as a CF converging to pi/4.

    The n-th approximant is sum_{k=1..n} (-1)^(k-1)/(2k-1) + (-1)^(n-1)/f(n);
    the perturbation vanishes when f grows, leaving pi/4.
    """
    f = _as_ratfn(f)
    try:
        f0 = f(0)
    except PoleAtArgument as e:
        raise HypothesisViolation("leading_term_defined", f"f has a pole at n = {e.argument}")
    if f0 == 0:
        raise HypothesisViolation("leading_term_defined", "f(0) must be nonzero")
    g = f * f.shift(-1) + IntPolynomial((-1, 2)) * (f + f.shift(-1))
    prefix = (
        (g(1), f(1) * f0),
        (f0 ** 2 * g(2), 2 * f(2) * f0 + 3 * (f(2) - f0)),
    )
    tail_a = IntPolynomial((-3, 2)) ** 2 * g.shift(-2) * g
    tail_b = 2 * f * f.shift(-2) + IntPolynomial((-1, 2)) * IntPolynomial((-3, 2)) * (
        f - f.shift(-2)
    )
    cf = CFSpec(-1 / f0, prefix, CFTail(tail_a, tail_b, 3))
    hyps = (
        _hyp("f_positive", lambda: eventually_positive(f, 1), "f(n) > 0 for n >= 1"),
        _hyp(
            "perturbation_vanishes",
            lambda: degree(f) is not MINUS_INFINITY and degree(f) >= 1,
            "degree(f) >= 1 so the perturbation 1/f(n) tends to 0",
        ),
        _hyp(
            "g_nonzero",
            lambda: not has_integer_root_at_or_after(g, 1),
            "g(n) = f(n) f(n-1) + (2n-1)(f(n) + f(n-1)) nonzero for n >= 1",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("PiOver4"), hyps)


def family_zeta(k, d):
    """Perturbed partial sums of sum 1/n^k as a CF converging to zeta(k).

    The n-th approximant is sum_{j=1..n} 1/j^k + 1/d(n).
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError("k must be an integer >= 2")
    d = _as_ratfn(d)
    try:
        d0 = d(0)
    except PoleAtArgument as e:
        raise HypothesisViolation("leading_term_defined", f"d has a pole at n = {e.argument}")
    if d0 == 0:
        raise HypothesisViolation("leading_term_defined", "d(0) must be nonzero")
    g = d * d.shift(-1) + _X ** k * (d.shift(-1) - d)
    t1 = (g(1), d0 * d(1))
    t2 = (
        -(d0 ** 2) * g(2),
        d(2) * d0 * (1 + 2 ** k) + 2 ** k * (d0 - d(2)),
    )
    if t1[0] == 0:
        raise DegenerateTerm(1)
    if t2[0] == 0:
        raise DegenerateTerm(2)
    xm1_k = IntPolynomial((-1, 1)) ** k
    tail_a = -(IntPolynomial((-1, 1)) ** (2 * k)) * g.shift(-2) * g
    tail_b = d * d.shift(-2) * (xm1_k + _X ** k) + xm1_k * _X ** k * (d.shift(-2) - d)
    cf = CFSpec(1 / d0, (t1, t2), CFTail(tail_a, tail_b, 3))
    hyps = (
        _hyp(
            "d_growth",
            lambda: degree(d) is not MINUS_INFINITY and degree(d) >= 1,
            "degree(d) >= 1 so the perturbation 1/d(n) tends to 0",
        ),
        _hyp(
            "g_nonzero",
            lambda: not has_integer_root_at_or_after(g, 1),
            "g(n) = d(n) d(n-1) + n^k (d(n-1) - d(n)) nonzero for n >= 1",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("Zeta", k=k), hyps)


def _binomial_finite(alpha, x, r):
    # terminating series: realize the perturbed partial sums directly
    n_top = int(alpha)
    s = Fraction(1)
    total = Fraction(1)
    seq = [Fraction(1) + r(0)]
    for n in range(1, n_top + 1):
        s = s * (alpha - n + 1) * x / n
        total += s
        seq.append(total + r(n) * s)
    seq.append(total)
    while len(seq) > 1 and seq[-1] == seq[-2]:
        seq.pop()
    for n in range(1, len(seq)):
        if seq[n] == seq[n - 1]:
            raise DegenerateTerm(n)
    return bernoulli_from_sequence(seq)


def family_binomial(alpha, x, r):
    """Perturbed binomial series as a CF converging to (1+x)^alpha.

    The n-th approximant is sum_{k=0..n} ff(alpha,k) x^k / k! + r(n) s_n,
    where ff is the falling factorial and s_n the n-th series term.  A
    non-negative integer alpha terminates the series and yields a finite CF
    with exact final value.
    """
    alpha = _as_fraction(alpha)
    x = _as_fraction(x)
    r = _as_ratfn(r)
    try:
        r0 = r(0)
    except PoleAtArgument as e:
        raise HypothesisViolation("leading_term_defined", f"r has a pole at n = {e.argument}")
    hyps = [
        _hyp("x_bounded", lambda: abs(x) < 1, "|x| < 1"),
    ]
    if alpha.denominator == 1 and alpha >= 0:
        cf = _binomial_finite(alpha, x, r)
        limit = LimitClaim.exact((1 + x) ** int(alpha))
        return FamilyMember(cf, limit, tuple(hyps))
    var = RationalFunction.variable()
    g = (alpha + 1 - var) * x * (1 + r) - var * r.shift(-1)
    t1 = (g(1), Fraction(1))
    t2 = (
        -alpha * x * g(2),
        alpha * x * ((alpha - 1) * x * (1 + r(2)) + 2) - 2 * r0,
    )
    if t1[0] == 0:
        raise DegenerateTerm(1)
    if t2[0] == 0:
        raise DegenerateTerm(2)
    tail_a = -x * (var - 1) * (alpha + 2 - var) * g.shift(-2) * g
    tail_b = (alpha + 2 - var) * x * ((alpha + 1 - var) * x * (1 + r) + var) - var * (
        var - 1
    ) * r.shift(-2)
    cf = CFSpec(1 + r0, (t1, t2), CFTail(tail_a, tail_b, 3))
    hyps.append(
        _hyp(
            "g_nonzero",
            lambda: not has_integer_root_at_or_after(g, 1),
            "g(n) = (alpha-n+1) x (1+r(n)) - n r(n-1) nonzero for n >= 1",
        )
    )
    if alpha.denominator == 1:
        limit = LimitClaim.exact((1 + x) ** int(alpha))
    else:
        base = 1 + x
        if base <= 0:
            raise HypothesisViolation("base_positive", "1 + x must be positive")
        limit = LimitClaim.named(
            "Root",
            p=base.numerator,
            q=base.denominator,
            r=alpha.numerator,
            s=alpha.denominator,
        )
    return FamilyMember(cf, limit, tuple(hyps))


def family_sin_product(m, A):
    """CF for the product (1 - 1/m^2)(1 - 1/(2m)^2)... = m sin(pi/m) / pi,
    built from factors 1 - 1/(mn)^2 with weights 1 + A/(n+1)."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    if not isinstance(A, int):
        raise ValueError("A must be an integer")
    m2 = m * m
    g = IntPolynomial((A + 1, m2 * A + 1))
    p = IntPolynomial((-1, 0, m2))
    h = p * p.shift(-1) * IntPolynomial((A + 1, 1)) - IntPolynomial(
        (0, 0, -(m2 * m2), 0, m2 * m2)
    ) * IntPolynomial((A - 1, 1))
    t1 = (-g(1), Fraction(2 * m2))
    t2 = (2 * m2 * (m2 - 1) * g(2), h(2))
    if t1[0] == 0:
        raise DegenerateTerm(1)
    if t2[0] == 0:
        raise DegenerateTerm(2)
    tail_a = -m2 * _X * IntPolynomial((-1, 1)) * p.shift(-1) * g.shift(-2) * g
    cf = CFSpec(Fraction(1 + A), (t1, t2), CFTail(tail_a, h, 3))
    hyps = (
        _hyp(
            "factors_positive",
            lambda: m >= 2,
            "m >= 2 so every factor 1 - 1/(mn)^2 is positive",
        ),
        _hyp(
            "weights_positive",
            lambda: A >= -1,
            "A >= -1 so every weight 1 + A/(n+1) is positive",
        ),
        _hyp(
            "g_nonzero",
            lambda: not has_integer_root_at_or_after(g, 1),
            "g(n) = (m^2 n + 1) A + n + 1 nonzero for n >= 1",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("SineProduct", m=m), hyps)


def family_e_bauer_muir(A):
    """CF for e obtained by transforming 2 + K(n+1 / n+1) against the
    modifying sequence w_n = A(n+1)."""
    if not isinstance(A, int):
        raise ValueError("A must be an integer")
    u = A * (A + 1)
    prefix = (
        (Fraction(1), Fraction(1 + A)),
        (Fraction(1 - 2 * u), Fraction(2 * (1 + A))),
        (Fraction(2 * (1 - 3 * u)), Fraction(3 - 5 * A - 6 * A * A)),
    )
    p = IntPolynomial((1, -u))
    tail_a = IntPolynomial((-1, 1)) * p * p.shift(-2)
    tail_b = IntPolynomial((A, 1 + u, -u))
    cf = CFSpec(Fraction(2), prefix, CFTail(tail_a, tail_b, 4))
    lam = IntPolynomial((1, 1)) * p
    hyps = (
        _hyp("A_nonneg", lambda: A >= 0, "A >= 0"),
        _hyp(
            "transform_exists",
            lambda: not has_integer_root_at_or_after(lam, 1),
            "(n+1)(1 - A(A+1) n) nonzero for n >= 1",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("E"), hyps)


def family_rational_limit(f, m):
    """Two-parameter family of degree-3 CFs converging to 6m + 1.

    Any f with f(n) >= 1 and any integer m >= 1 give the same shape:
    a_n = f(n)(n(n+1)(n+2)m + 1) + 2m n^2 + 6m n + 4m - 1 and
    b_n = f(n)(n(n-1)(n+1)m + 1) + 2(n^2-1)m - 2.
    """
    f = _as_ratfn(f)
    if not isinstance(m, int):
        raise ValueError("m must be an integer")
    tail_a = f * IntPolynomial((1, 2 * m, 3 * m, m)) + IntPolynomial(
        (4 * m - 1, 6 * m, 2 * m)
    )
    tail_b = f * IntPolynomial((1, -m, 0, m)) + IntPolynomial((-2 * m - 2, 0, 2 * m))
    cf = CFSpec(Fraction(0), (), CFTail(tail_a, tail_b, 1))
    hyps = (
        _hyp(
            "f_at_least_one",
            lambda: eventually_nonnegative(f - 1, 1),
            "f(n) >= 1 for n >= 1",
        ),
        _hyp("m_positive", lambda: m >= 1, "m >= 1"),
    )
    return FamilyMember(cf, LimitClaim.exact(6 * m + 1), hyps)


def ramanujan_entry13(a, b, d):
    """Arithmetic-progression CF with limit a.

    a = ab/(a+b+d) - (a+d)(b+d)/(a+b+3d) - (a+2d)(b+2d)/(a+b+5d) - ...
    Convergence holds on one of three branches: d nonzero with (a-b)/d < 0
    and b not of the form -kd for integer k >= 0; d nonzero with a = b;
    or d = 0 with |a| < |b|.
    """
    a = _as_fraction(a)
    b = _as_fraction(b)
    d = _as_fraction(d)
    prefix = ((a * b, a + b + d),)
    var = RationalFunction.variable()
    p1 = d * var + (a - d)
    p2 = d * var + (b - d)
    tail_a = -1 * p1 * p2
    tail_b = 2 * d * var + (a + b - d)
    cf = CFSpec(Fraction(0), prefix, CFTail(tail_a, tail_b, 2))
    branch = None
    if d != 0:
        q = -b / d
        excluded = q.denominator == 1 and q >= 0
        if (a - b) / d < 0 and not excluded:
            branch = "(a-b)/d < 0 with b never equal to -kd"
        elif a == b:
            branch = "a = b"
    elif abs(a) < abs(b):
        branch = "d = 0 and |a| < |b|"
    hyps = (
        Hypothesis(
            "convergence_branch",
            branch is not None,
            branch if branch is not None else "no convergence branch holds",
        ),
    )
    return FamilyMember(cf, LimitClaim.exact(a), hyps)


def _preset_brouncker(params):
    cf = CFSpec(
        Fraction(1),
        (),
        CFTail(IntPolynomial((-1, 2)) ** 2, IntPolynomial((2,)), 1),
    )
    return FamilyMember(cf, LimitClaim.named("BrounckerPi"), ())


def _preset_e(params):
    cf = CFSpec(Fraction(2), (), CFTail(_X, _X, 2))
    return FamilyMember(cf, LimitClaim.named("E"), ())


def _preset_ex22(params):
    b = params["b"]
    t1 = (3 + 2 * b(1), b(1))
    tail_a = IntPolynomial((-1, 1)) * (IntPolynomial((2, 1)) + IntPolynomial((1, 1)) * b)
    tail_b = _X * b
    cf = CFSpec(Fraction(0), (t1,), CFTail(tail_a, tail_b, 2))
    hyps = (
        _hyp(
            "b_at_least_2",
            lambda: eventually_nonnegative(b - 2, 1),
            "b(n) >= 2 for n >= 1",
        ),
    )
    return FamilyMember(cf, LimitClaim.exact(2), hyps)


def _preset_ex25(params):
    c = params["c"]
    t1 = (c(0) + c(1) ** 2, c(1) ** 2)
    tail_a = c.shift(-2) * (c.shift(-1) + c * c)
    tail_b = c * c
    cf = CFSpec(Fraction(0), (t1,), CFTail(tail_a, tail_b, 2))
    hyps = (
        _hyp(
            "c_at_least_2",
            lambda: eventually_nonnegative(c - 2, -1),
            "c(n) >= 2 for n >= -1",
        ),
    )
    return FamilyMember(cf, LimitClaim.exact(1), hyps)


def _preset_ex33(params):
    A = params["A"]
    if A == 0:
        raise HypothesisViolation("leading_term_defined", "A must be nonzero")
    t1 = (Fraction(1), Fraction(1))
    t2 = (Fraction(-(4 + A)), Fraction(4 - 2 * A))
    tail_a = (
        IntPolynomial((-3, 2))
        * IntPolynomial((-5, 2))
        * IntPolynomial((-7 * A - 12, 2 * A + 4))
        * IntPolynomial((-3 * A - 4, 2 * A + 4))
    )
    tail_b = IntPolynomial((-10 * A - 12, 4 * A + 8))
    cf = CFSpec(Fraction(1, A), (t1, t2), CFTail(tail_a, tail_b, 3))
    hyps = (
        _hyp("A_positive", lambda: A >= 1, "A is a positive integer"),
        _hyp(
            "tail_nonzero",
            lambda: not has_integer_root_at_or_after(tail_a, 3),
            "tail numerators nonzero from n = 3 on",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("PiOver4"), hyps)


def _preset_ex34(params):
    k, A = params["k"], params["A"]
    if not isinstance(k, int) or k < 2:
        raise ValueError("k must be an integer >= 2")
    if A == 0:
        raise HypothesisViolation("leading_term_defined", "A must be nonzero")
    t1 = (Fraction(2 * A - 1), Fraction(2 * A))
    t2 = (
        Fraction(-2 * A * (3 * A - 2 ** (k - 1))),
        Fraction(3 * A * (1 + 2 ** k) - 2 ** (k + 1)),
    )
    if t2[0] == 0:
        raise DegenerateTerm(2)
    xm1 = IntPolynomial((-1, 1))
    tail_a = (
        -_X
        * xm1 ** (2 * k - 1)
        * (A * xm1 - IntPolynomial((-2, 1)) ** (k - 1))
        * (A * IntPolynomial((1, 1)) - _X ** (k - 1))
    )
    tail_b = A * IntPolynomial((1, 1)) * (xm1 ** k + _X ** k) - 2 * _X ** k * xm1 ** (
        k - 1
    )
    cf = CFSpec(Fraction(1, A), (t1, t2), CFTail(tail_a, tail_b, 3))
    hyps = (
        _hyp("A_positive", lambda: A >= 1, "A is a positive integer"),
        _hyp(
            "tail_nonzero",
            lambda: not has_integer_root_at_or_after(tail_a, 3),
            "tail numerators nonzero from n = 3 on",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("Zeta", k=k), hyps)


def _preset_ex35(params):
    A = params["A"]
    t1 = (Fraction(A + 7), Fraction(7))
    if t1[0] == 0:
        raise DegenerateTerm(1)
    t2 = (Fraction(7 * (11 * A - 7)), Fraction(56 - 4 * A))
    tail_a = (
        7
        * IntPolynomial((-11, 5))
        * IntPolynomial((-2, 1))
        * IntPolynomial((-37 * A - 7, 12 * A))
        * IntPolynomial((-13 * A - 7, 12 * A))
    )
    tail_b = -2 * A * IntPolynomial((16, -31, 12)) + 14 * IntPolynomial((2, 1))
    cf = CFSpec(Fraction(0), (t1, t2), CFTail(tail_a, tail_b, 3))
    hyps = (
        _hyp(
            "tail_nonzero",
            lambda: not has_integer_root_at_or_after(tail_a, 3),
            "tail numerators nonzero from n = 3 on",
        ),
    )
    return FamilyMember(cf, LimitClaim.named("Root", p=12, q=7, r=1, s=5), hyps)


_PRESET_BUILDERS = {
    "brouncker": _preset_brouncker,
    "e": _preset_e,
    "ex1.1": lambda p: family_rational_limit(p["f"], p["m"]),
    "ex2.2": _preset_ex22,
    "ex2.4": lambda p: pincherle_poly_family(
        IntPolynomial((1, 0, 1)), IntPolynomial((1,)), p["c"], IntPolynomial((1,))
    ),
    "ex2.5": _preset_ex25,
    "ex3.3": _preset_ex33,
    "ex3.4": _preset_ex34,
    "ex3.5": _preset_ex35,
    "ex4.2": lambda p: family_sin_product(3, p["A"]),
    "ex5.6": lambda p: family_e_bauer_muir(p["A"]),
    "entry13": lambda p: ramanujan_entry13(p["a"], p["b"], p["d"]),
}

# parameter name -> (kind, default) with kinds int | rational | ratfn
PRESET_PARAMS = {
    "brouncker": {},
    "e": {},
    "ex1.1": {"f": ("ratfn", "1"), "m": ("int", "1")},
    "ex2.2": {"b": ("ratfn", "n+1")},
    "ex2.4": {"c": ("ratfn", "n+2")},
    "ex2.5": {"c": ("ratfn", "n+3")},
    "ex3.3": {"A": ("int", "1")},
    "ex3.4": {"k": ("int", "2"), "A": ("int", "1")},
    "ex3.5": {"A": ("int", "1")},
    "ex4.2": {"A": ("int", "0")},
    "ex5.6": {"A": ("int", "1")},
    "entry13": {"a": ("rational", "1"), "b": ("rational", "1"), "d": ("rational", "1")},
}


def _coerce_param(kind, value):
    from .poly import ratfn_from_string

    if kind == "int":
        if isinstance(value, int):
            return value
        return int(str(value), 10)
    if kind == "rational":
        return _as_fraction(value) if not isinstance(value, str) else Fraction(value)
    if kind == "ratfn":
        if isinstance(value, str):
            return ratfn_from_string(value)
        return _as_ratfn(value)
    raise ValueError(f"unknown parameter kind {kind!r}")


def preset_ids():
    return sorted(_PRESET_BUILDERS)


def build_preset(preset, params=None):
    """Construct a named preset member; params override the defaults."""
    if preset not in _PRESET_BUILDERS:
        raise ValueError(f"unknown preset {preset!r}")
    spec = PRESET_PARAMS[preset]
    given = dict(params or {})
    resolved = {}
    for name, (kind, default) in spec.items():
        raw = given.pop(name, default)
        resolved[name] = _coerce_param(kind, raw)
    if given:
        extra = ", ".join(sorted(given))
        raise ValueError(f"unknown parameters for {preset}: {extra}")
    return _PRESET_BUILDERS[preset](resolved)
