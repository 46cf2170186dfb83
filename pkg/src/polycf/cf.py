"""Continued-fraction model, convergent engine, and limit estimation.

A continued fraction b0 + K(a_n/b_n) is stored as an exact leading term, a
finite prefix of exact rational (a_i, b_i) pairs, and an optional symbolic
tail of rational functions.  The k-th tail term (k >= 1 past the prefix)
evaluates the tail functions at argument start_index + k - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .errors import (
    NoSuchTerm,
    PoleAtArgument,
    ZeroPartialNumerator,
    ZeroScaleFactor,
)
from .poly import (
    IntPolynomial,
    RationalFunction,
    has_integer_root_at_or_after,
    ratfn_from_string,
)

# beyond this many terms the exact backend's integers get unwieldy
_EXACT_TERM_LIMIT = 300
_FLOAT_GUARD_BITS = 32


def _as_fraction(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"exact rational required, got {v!r}")


def _as_ratfn(v):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, str):
        return ratfn_from_string(v)
    return RationalFunction(v)


class _Undefined:
    """Approximant with a zero canonical denominator."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undefined"


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class CFTail:
    a: RationalFunction
    b: RationalFunction
    start_index: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", _as_ratfn(self.a))
        object.__setattr__(self, "b", _as_ratfn(self.b))
        if not isinstance(self.start_index, int):
            raise TypeError("start_index must be an integer")


@dataclass(frozen=True)
class CFSpec:
    b0: Fraction = Fraction(0)
    prefix: tuple = ()
    tail: Optional[CFTail] = None

    def __post_init__(self):
        object.__setattr__(self, "b0", _as_fraction(self.b0))
        object.__setattr__(
            self,
            "prefix",
            tuple((_as_fraction(a), _as_fraction(b)) for a, b in self.prefix),
        )
        if self.tail is not None and not isinstance(self.tail, CFTail):
            object.__setattr__(self, "tail", CFTail(*self.tail))


@dataclass(frozen=True)
class Convergent:
    index: int
    A: Fraction
    B: Fraction

    @property
    def value(self):
        return self.A / self.B if self.B != 0 else UNDEFINED


@dataclass(frozen=True)
class ApproximantSequence:
    entries: tuple

    def values(self):
        return [value for _, value in self.entries]

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class LimitEstimate:
    value: mpmath.mpf
    error_bound: mpmath.mpf
    terms_used: int
    converged: bool


def term_at(cf, n):
    """Exact (a_n, b_n) for n >= 1; term errors are raised lazily here."""
    if n < 1:
        raise NoSuchTerm(n)
    if n <= len(cf.prefix):
        a, b = cf.prefix[n - 1]
    elif cf.tail is None:
        raise NoSuchTerm(n)
    else:
        k = n - len(cf.prefix)
        arg = cf.tail.start_index + k - 1
        try:
            a = cf.tail.a(arg)
            b = cf.tail.b(arg)
        except PoleAtArgument:
            raise
    if a == 0:
        raise ZeroPartialNumerator(n)
    return a, b


def _iter_terms(cf, N):
    for n in range(1, N + 1):
        yield n, term_at(cf, n)


def convergents(cf, N):
    """Exact canonical pairs (A_n, B_n) for n = 0..N."""
    out = [Convergent(0, cf.b0, Fraction(1))]
    A_prev, B_prev = Fraction(1), Fraction(0)
    A, B = cf.b0, Fraction(1)
    for n, (a, b) in _iter_terms(cf, N):
        A, A_prev = b * A + a * A_prev, A
        B, B_prev = b * B + a * B_prev, B
        out.append(Convergent(n, A, B))
    return out

def approximants(cf, N):
    """Approximant values A_n/B_n for n = 0..N; UNDEFINED where B_n = 0."""
    entries = []
    for conv in convergents(cf, N):
        entries.append((conv.index, conv.value))
    return ApproximantSequence(tuple(entries))


def _round_to(x, precision_bits):
    with mpmath.workprec(precision_bits):
        return +x


def _evaluate_core(cf, tol, max_terms, precision_bits, exact):
    work_prec = precision_bits + _FLOAT_GUARD_BITS
    with mpmath.workprec(work_prec):
        tol_frac = tol if isinstance(tol, Fraction) else Fraction(str(tol))
        tol_mpf = mpmath.mpf(tol_frac.numerator) / tol_frac.denominator
        if exact:
            A_prev, B_prev = Fraction(1), Fraction(0)
            A, B = cf.b0, Fraction(1)
        else:
            A_prev, B_prev = mpmath.mpf(1), mpmath.mpf(0)
            A = mpmath.mpf(cf.b0.numerator) / cf.b0.denominator
            B = mpmath.mpf(1)
        last_value = A if B != 0 else None
        last_diff = None
        prev_diff = None
        terms_used = 0
        converged = False
        finite = False
        for n in range(1, max_terms + 1):
            try:
                a, b = term_at(cf, n)
            except NoSuchTerm:
                finite = True
                break
            if not exact:
                a = mpmath.mpf(a.numerator) / a.denominator
                b = mpmath.mpf(b.numerator) / b.denominator
            A, A_prev = b * A + a * A_prev, A
            B, B_prev = b * B + a * B_prev, B
            terms_used = n
            if B == 0:
                continue
            value = A / B
            if last_value is not None:
                diff = abs(value - last_value)
                prev_diff, last_diff = last_diff, diff
            last_value = value
            if (
                prev_diff is not None
                and last_diff is not None
                and _lt_tol(last_diff, tol_frac, tol_mpf, exact)
                and _lt_tol(prev_diff, tol_frac, tol_mpf, exact)
            ):
                converged = True
                break
        if last_value is None:
            value_mpf = mpmath.mpf(0)
            error_mpf = mpmath.inf
        elif exact:
            value_mpf = mpmath.mpf(last_value.numerator) / last_value.denominator
            if finite:
                error_mpf = mpmath.mpf(0)
            elif last_diff is None:
                error_mpf = mpmath.inf
            else:
                error_mpf = mpmath.mpf(last_diff.numerator) / last_diff.denominator
        else:
            value_mpf = last_value
            if finite:
                error_mpf = mpmath.mpf(0)
            else:
                error_mpf = last_diff if last_diff is not None else mpmath.inf
        if finite:
            converged = True
        return LimitEstimate(
            value=_round_to(value_mpf, precision_bits),
            error_bound=_round_to(error_mpf, precision_bits),
            terms_used=terms_used,
            converged=converged,
        )


def _lt_tol(diff, tol_frac, tol_mpf, exact):
    if exact:
        return diff < tol_frac
    return diff < tol_mpf


def evaluate(cf, tol, max_terms, precision_bits=128, backend="auto"):
    """Estimate the limit by iterating approximants.

    Stops once two consecutive gaps between defined approximants fall below
    tol; a finite CF yields its exact final value with error bound 0.  The
    exact backend is authoritative for moderate term counts; the floating
    backend runs at precision_bits plus guard bits for large ones.  A failure
    to converge is reported through converged=False, not an exception.
    """
    tol_frac = tol if isinstance(tol, Fraction) else Fraction(str(tol))
    if tol_frac <= 0:
        raise ValueError("tol must be positive")
    if max_terms < 2:
        raise ValueError("max_terms must be at least 2")
    if backend == "auto":
        backend = "exact" if max_terms <= _EXACT_TERM_LIMIT else "float"
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    return _evaluate_core(cf, tol_frac, max_terms, precision_bits, backend == "exact")


def similarity_scale(cf, r):
    """Rescale terms by a_n' = r_n r_{n-1} a_n, b_n' = r_n b_n with r_0 = 1.

    Every approximant value is preserved exactly.  r may be a finite sequence
    of rationals (r_0..r_m, producing a prefix-only CF of m terms) or a
    rational function of the term index (scaling prefix and tail symbolically).
    """
    if isinstance(r, (RationalFunction, IntPolynomial)):
        return _similarity_symbolic(cf, _as_ratfn(r))
    return _similarity_sequence(cf, [_as_fraction(x) for x in r])


def _similarity_sequence(cf, r):
    if not r or r[0] != 1:
        raise ValueError("scale sequence must start with r_0 = 1")
    for i, x in enumerate(r):
        if x == 0:
            raise ZeroScaleFactor(i)
    prefix = []
    for n, (a, b) in _iter_terms(cf, len(r) - 1):
        prefix.append((r[n] * r[n - 1] * a, r[n] * b))
    return CFSpec(cf.b0, tuple(prefix), None)


def _similarity_symbolic(cf, r):
    if r(0) != 1:
        raise ValueError("scale function must satisfy r(0) = 1")
    m = len(cf.prefix)
    prefix = []
    for n, (a, b) in enumerate(cf.prefix, 1):
        rn = r(n)
        if rn == 0:
            raise ZeroScaleFactor(n)
        prefix.append((rn * r(n - 1) * a, rn * b))
    tail = None
    if cf.tail is not None:
        # tail argument x maps to term index x - delta
        delta = cf.tail.start_index - m - 1
        r_here = r.shift(-delta)
        r_before = r.shift(-delta - 1)
        if has_integer_root_at_or_after(r_here.num * r_before.num, cf.tail.start_index):
            raise ZeroScaleFactor(cf.tail.start_index)
        tail = CFTail(
            r_here * r_before * cf.tail.a,
            r_here * cf.tail.b,
            cf.tail.start_index,
        )
    return CFSpec(cf.b0, tuple(prefix), tail)


def _is_integer_tail(tail):
    return (
        tail.a.den.degree == 0
        and tail.a.den.coeffs[0] == 1
        and tail.b.den.degree == 0
        and tail.b.den.coeffs[0] == 1
    )


def to_integer_cf(cf, N):
    """Clear denominators from terms 1..N by a term-by-term similarity.

    An already-integer CF (including its symbolic tail, when present) is
    returned unchanged; otherwise the result is a prefix-only CF whose first
    N terms are integers and whose approximants match the input's exactly.
    """
    terms = [term for _, term in _iter_terms(cf, N)]
    integral = all(a.denominator == 1 and b.denominator == 1 for a, b in terms)
    if integral and (cf.tail is None or _is_integer_tail(cf.tail)):
        return cf
    prefix = []
    r_prev = Fraction(1)
    for a, b in terms:
        scaled_a = r_prev * a
        r_n = Fraction(math.lcm(scaled_a.denominator, b.denominator))
        prefix.append((r_n * scaled_a, r_n * b))
        r_prev = r_n
    return CFSpec(cf.b0, tuple(prefix), None)


def tail_cf(cf, k):
    """Drop the first k terms and zero the leading term."""
    if k < 0:
        raise ValueError("k must be non-negative")
    for _ in _iter_terms(cf, k):
        pass
    m = len(cf.prefix)
    if k < m:
        return CFSpec(Fraction(0), cf.prefix[k:], cf.tail)
    tail = None
    if cf.tail is not None:
        tail = CFTail(cf.tail.a, cf.tail.b, cf.tail.start_index + (k - m))
    return CFSpec(Fraction(0), (), tail)


def cf_to_json(cf):
    """CF JSON: rationals as "p/q" strings, tail functions as coeff arrays."""
    return {
        "b0": str(cf.b0),
        "prefix": [[str(a), str(b)] for a, b in cf.prefix],
        "tail": None
        if cf.tail is None
        else {
            "a": cf.tail.a.to_json(),
            "b": cf.tail.b.to_json(),
            "start_index": cf.tail.start_index,
        },
    }


def cf_from_json(data):
    tail = None
    if data.get("tail") is not None:
        t = data["tail"]
        tail = CFTail(
            RationalFunction.from_json(t["a"]),
            RationalFunction.from_json(t["b"]),
            int(t["start_index"]),
        )
    return CFSpec(
        Fraction(data["b0"]),
        tuple((Fraction(a), Fraction(b)) for a, b in data.get("prefix", [])),
        tail,
    )
