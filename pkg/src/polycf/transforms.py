"""Constructions of continued fractions from sequences, series, and products,
plus contractions and the Bauer-Muir transformation.

All constructions here are exact: every output approximant is a prescribed
rational function of the inputs (partial sums, partial products, or a fixed
combination of the source approximants), and the test suite checks those
correspondences term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .cf import CFSpec, CFTail, term_at, _as_fraction
from .errors import (
    DegenerateTerm,
    NonzeroW0,
    RepeatedValue,
    TransformDoesNotExist,
    UnitTerm,
    ZeroEvenDenominator,
    ZeroOddDenominator,
    ZeroTerm,
    ZeroW,
)
from .poly import IntPolynomial, RationalFunction


@dataclass(frozen=True)
class SeriesSpec:
    """Terms a_0, a_1, ... of a series; approximants track partial sums."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(_as_fraction(t) for t in self.terms))

    def partial_sums(self):
        out = []
        total = Fraction(0)
        for t in self.terms:
            total += t
            out.append(total)
        return out


@dataclass(frozen=True)
class ProductSpec:
    """Factors a_1, a_2, ... of a product; approximants track partial products."""

    factors: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "factors", tuple(_as_fraction(t) for t in self.factors)
        )

    def partial_products(self):
        out = []
        total = Fraction(1)
        for t in self.factors:
            total *= t
            out.append(total)
        return out


@dataclass(frozen=True)
class BauerMuirResult:
    """Transformed fraction together with the modifying sequence w and the
    existence margins lambda_n = a_n - w_{n-1} (b_n + w_n), all nonzero."""

    cf: CFSpec
    w: tuple
    existence_margin: tuple


def _as_sequence(x, attr):
    if isinstance(x, (SeriesSpec, ProductSpec)):
        x = getattr(x, attr)
    return [_as_fraction(t) for t in x]


def _euler_body(c):
    """Shared term pattern for sequence, series, and product constructions.

    Given the increments c_1..c_N, the n-th approximant of
    (c_1, 1), (-c_2, c_1 + c_2), then (-c_{n-2} c_n, c_{n-1} + c_n)
    is c_1 + c_2 + ... + c_n.
    """
    terms = []
    for n in range(1, len(c) + 1):
        cn = c[n - 1]
        if n == 1:
            terms.append((cn, Fraction(1)))
        elif n == 2:
            terms.append((-cn, c[0] + cn))
        else:
            terms.append((-c[n - 3] * cn, c[n - 2] + cn))
    return tuple(terms)


def bernoulli_from_sequence(K):
    """CF whose n-th approximant is K_n, for a sequence with K_n != K_{n-1}."""
    K = [_as_fraction(t) for t in K]
    if not K:
        raise ValueError("sequence must contain at least K_0")
    deltas = []
    for n in range(1, len(K)):
        d = K[n] - K[n - 1]
        if d == 0:
            raise RepeatedValue(n)
        deltas.append(d)
    return CFSpec(K[0], _euler_body(deltas), None)


def euler_from_series(a):
    """CF whose n-th approximant is the partial sum a_0 + ... + a_n."""
    a = _as_sequence(a, "terms")
    if not a:
        raise ValueError("series must contain at least a_0")
    for n in range(1, len(a)):
        if a[n] == 0:
            raise ZeroTerm(n)
    return CFSpec(a[0], _euler_body(a[1:]), None)


def generalized_euler(a, b):
    """CF whose n-th approximant is b_n + (a_0 + ... + a_n).

    The weight sequence b modifies each partial sum; increments
    c_n = a_n + b_n - b_{n-1} must be nonzero.
    """
    a = _as_sequence(a, "terms")
    b = [_as_fraction(t) for t in b]
    if not a or len(b) != len(a):
        raise ValueError("need weights b_0..b_N matching terms a_0..a_N")
    c = []
    for n in range(1, len(a)):
        cn = a[n] + b[n] - b[n - 1]
        if cn == 0:
            raise DegenerateTerm(n)
        c.append(cn)
    return CFSpec(a[0] + b[0], _euler_body(c), None)


def product_to_cf(a):
    """CF whose n-th approximant is the partial product a_1 ... a_n (x_0 = 1)."""
    a = _as_sequence(a, "factors")
    for n in range(1, len(a) + 1):
        v = a[n - 1]
        if v == 0:
            raise ZeroTerm(n)
        if v == 1:
            raise UnitTerm(n)
    terms = []
    for n in range(1, len(a) + 1):
        an = a[n - 1]
        if n == 1:
            terms.append((an - 1, Fraction(1)))
        elif n == 2:
            terms.append((-a[0] * (an - 1), an * a[0] - 1))
        else:
            terms.append(
                (-a[n - 2] * (a[n - 3] - 1) * (an - 1), an * a[n - 2] - 1)
            )
    return CFSpec(Fraction(1), tuple(terms), None)


def generalized_product(a, b):
    """CF whose n-th approximant is b_n * (a_1 ... a_n), with x_0 = b_0.

    Requires rho_n = a_n b_n - b_{n-1} != 0 for every n.
    """
    a = _as_sequence(a, "factors")
    b = [_as_fraction(t) for t in b]
    if len(b) != len(a) + 1:
        raise ValueError("need weights b_0..b_N matching factors a_1..a_N")
    rho = []
    for n in range(1, len(a) + 1):
        r = a[n - 1] * b[n] - b[n - 1]
        if r == 0:
            raise DegenerateTerm(n)
        rho.append(r)
    terms = []
    for n in range(1, len(a) + 1):
        if n == 1:
            terms.append((rho[0], Fraction(1)))
        elif n == 2:
            terms.append((-a[0] * rho[1], a[1] * a[0] * b[2] - b[0]))
        else:
            terms.append(
                (
                    -a[n - 2] * rho[n - 3] * rho[n - 1],
                    a[n - 1] * a[n - 2] * b[n] - b[n - 2],
                )
            )
    return CFSpec(b[0], tuple(terms), None)


def even_part(cf, N):
    """Contraction whose k-th convergent pair equals (A_{2k}, B_{2k}).

    Consumes terms 1..2N of the input; requires b_{2k} != 0 for the
    denominators that get divided through.
    """
    t = {n: term_at(cf, n) for n in range(1, 2 * N + 1)}
    a = {n: t[n][0] for n in t}
    b = {n: t[n][1] for n in t}
    terms = []
    for k in range(1, N + 1):
        if k == 1:
            c = b[2] * a[1]
            d = b[2] * b[1] + a[2]
        else:
            if b[2 * k - 2] == 0:
                raise ZeroEvenDenominator(2 * k - 2)
            ratio = b[2 * k] / b[2 * k - 2]
            c = -a[2 * k - 2] * a[2 * k - 1] * ratio
            d = a[2 * k] + b[2 * k - 1] * b[2 * k] + a[2 * k - 1] * ratio
        terms.append((c, d))
    return CFSpec(cf.b0, tuple(terms), None)


def odd_part(cf, N):
    """Contraction whose k-th convergent pair equals (A_{2k+1}, B_{2k+1}).

    The leading term becomes A_1/B_1, so equality at k = 0 holds in value
    only.  Consumes terms 1..2N+1; requires b_1 and the divided-through odd
    denominators to be nonzero.
    """
    t = {n: term_at(cf, n) for n in range(1, 2 * N + 2)}
    a = {n: t[n][0] for n in t}
    b = {n: t[n][1] for n in t}
    if b[1] == 0:
        raise ZeroOddDenominator(1)
    b0 = (cf.b0 * b[1] + a[1]) / b[1]
    terms = []
    for k in range(1, N + 1):
        if k == 1:
            c = -a[1] * a[2] * b[3] / b[1]
            d = b[1] * (a[3] + b[2] * b[3]) + a[2] * b[3]
        elif k == 2:
            if b[3] == 0:
                raise ZeroOddDenominator(3)
            c = -a[3] * a[4] * b[5] * b[1] / b[3]
            d = a[5] + b[4] * b[5] + a[4] * b[5] / b[3]
        else:
            if b[2 * k - 1] == 0:
                raise ZeroOddDenominator(2 * k - 1)
            ratio = b[2 * k + 1] / b[2 * k - 1]
            c = -a[2 * k - 1] * a[2 * k] * ratio
            d = a[2 * k + 1] + b[2 * k] * b[2 * k + 1] + a[2 * k] * ratio
        terms.append((c, d))
    return CFSpec(b0, tuple(terms), None)


def _w_values(w, count):
    if isinstance(w, (RationalFunction, IntPolynomial)):
        return [_as_fraction(w(n)) for n in range(count)]
    if callable(w):
        return [_as_fraction(w(n)) for n in range(count)]
    vals = [_as_fraction(x) for x in w]
    if len(vals) < count:
        raise ValueError(f"need w_0..w_{count - 1}, got {len(vals)} values")
    return vals[:count]


def bauer_muir(cf, w, N):
    """Bauer-Muir transform against the modifying sequence w_0..w_N.

    The result's convergent pairs satisfy C_n = A_n + w_n A_{n-1} and
    D_n = B_n + w_n B_{n-1} for all n.  Exists iff every margin
    lambda_n = a_n - w_{n-1} (b_n + w_n) is nonzero.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    wv = _w_values(w, N + 1)
    lam = []
    for n in range(1, N + 1):
        a, b = term_at(cf, n)
        l = a - wv[n - 1] * (b + wv[n])
        if l == 0:
            raise TransformDoesNotExist(n)
        lam.append(l)
    terms = []
    for n in range(1, N + 1):
        a, b = term_at(cf, n)
        if n == 1:
            terms.append((lam[0], b + wv[1]))
        else:
            a_prev, _ = term_at(cf, n - 1)
            ratio = lam[n - 1] / lam[n - 2]
            terms.append((a_prev * ratio, b + wv[n] - wv[n - 2] * ratio))
    out = CFSpec(cf.b0 + wv[0], tuple(terms), None)
    return BauerMuirResult(out, tuple(wv), tuple(lam))


def extension_bmoe(cf, w, N):
    """Interleaving extension for a modifying sequence with w_0 = 0.

    Produces 2N+1 terms whose odd-indexed approximants are the Bauer-Muir
    approximants and whose even-indexed ones are the original approximants.
    Requires w_1..w_N nonzero and every margin lambda_1..lambda_{N+1} nonzero.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    wv = _w_values(w, N + 2)
    if wv[0] != 0:
        raise NonzeroW0(wv[0])
    for j in range(1, N + 1):
        if wv[j] == 0:
            raise ZeroW(j)
    for n in range(1, N + 2):
        a, b = term_at(cf, n)
        if a - wv[n - 1] * (b + wv[n]) == 0:
            raise TransformDoesNotExist(n)
    a1, b1 = term_at(cf, 1)
    terms = [(a1, b1 + wv[1])]
    for j in range(1, N + 1):
        terms.append((-wv[j], Fraction(1)))
        a_next, b_next = term_at(cf, j + 1)
        q = a_next / wv[j]
        terms.append((q, b_next + wv[j + 1] - q))
    return CFSpec(cf.b0, tuple(terms), None)
