"""Sparse polynomials in u, v, w and truncated power series in x over them.

Coefficients are exact: ``int`` where integral, ``Fraction`` otherwise.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import DomainError, IntegralityError, ParameterError

__all__ = [
    "MPoly",
    "EgfSeries",
    "mp_add",
    "mp_mul",
    "mp_scale",
    "mp_filter_w_mod",
    "series_mul",
    "series_exp",
    "series_extract",
]

Exps = tuple[int, int, int]
VARS = ("u", "v", "w")


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MPoly:
    """Polynomial in u, v, w stored as ``{(a, b, c): coefficient}`` with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, Rational] | Iterable[tuple[Exps, Rational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, Rational] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise ParameterError(f"bad exponent triple {exps}")
            acc[exps] = acc.get(exps, 0) + c
        self._terms = {e: _norm(c) for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> MPoly:
        # Caller guarantees a zero-free dict; order is fixed here.
        p = cls.__new__(cls)
        p._terms = {e: _norm(c) for e, c in sorted(terms.items()) if c != 0}
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> MPoly:
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, a: int = 0, b: int = 0, c: int = 0, coeff=1) -> MPoly:
        return cls({(a, b, c): coeff})

    @property
    def terms(self) -> dict[Exps, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, a: int = 0, b: int = 0, c: int = 0):
        return self._terms.get((a, b, c), 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return MPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MPoly()
            return MPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        acc: dict[Exps, Rational] = {}
        for (a1, b1, c1), x in self._terms.items():
            for (a2, b2, c2), y in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                acc[e] = acc.get(e, 0) + x * y
        return MPoly._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ParameterError("negative power of a polynomial")
        out = MPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def div_int(self, d: int) -> MPoly:
        """Exact division by a nonzero integer scalar."""
        if d == 0:
            raise ZeroDivisionError("division of a polynomial by 0")
        return MPoly._raw({e: Fraction(c) / d for e, c in self._terms.items()})

    def filter_w_mod(self, s: int) -> MPoly:
        if s < 1:
            raise ParameterError(f"s must be positive, got {s}")
        return MPoly._raw({e: c for e, c in self._terms.items() if e[2] % s == 0})

    def evaluate(self, u=1, v=1, w=1):
        """Exact value at a point (integers or Fractions)."""
        return _norm(sum((c * u**a * v**b * w**cc for (a, b, cc), c in self._terms.items()), Fraction(0)))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def __repr__(self):
        return f"MPoly({str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b, c), coeff in self._terms.items():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(VARS, (a, b, c))
                if e
            )
            mag = abs(coeff)
            sign = "-" if coeff < 0 else "+"
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def mp_add(p: MPoly, q) -> MPoly:
    return p + q


def mp_mul(p: MPoly, q) -> MPoly:
    return p * q


def mp_scale(p: MPoly, c) -> MPoly:
    return p * c


def mp_filter_w_mod(p: MPoly, s: int) -> MPoly:
    """Keep the terms whose w-exponent is a multiple of ``s``."""
    return p.filter_w_mod(s)


class EgfSeries:
    """Power series in x truncated after ``x^trunc``.

    ``coeffs[n]`` is the plain coefficient ``[x^n]``; the combinatorial
    polynomial is ``n! * coeffs[n]`` (see :func:`series_extract`).
    """

    __slots__ = ("trunc", "coeffs")

    def __init__(self, coeffs: Iterable[MPoly], trunc: int | None = None):
        coeffs = [c if isinstance(c, MPoly) else MPoly.const(c) for c in coeffs]
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise ParameterError(f"truncation order must be nonnegative, got {trunc}")
        coeffs = coeffs[: trunc + 1]
        coeffs += [MPoly()] * (trunc + 1 - len(coeffs))
        self.trunc = trunc
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, trunc: int) -> EgfSeries:
        return cls([], trunc)

    @classmethod
    def one(cls, trunc: int) -> EgfSeries:
        return cls([MPoly.const(1)], trunc)

    @classmethod
    def term(cls, degree: int, poly: MPoly, trunc: int) -> EgfSeries:
        """The single term ``poly * x^degree``."""
        coeffs = [MPoly()] * (trunc + 1)
        if degree <= trunc:
            coeffs[degree] = poly
        return cls(coeffs, trunc)

    def _check(self, other: EgfSeries):
        if self.trunc != other.trunc:
            raise ParameterError(
                f"truncation mismatch: {self.trunc} vs {other.trunc}"
            )

    def __eq__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def __add__(self, other):
        if not isinstance(other, EgfSeries):
            return NotImplemented
        self._check(other)
        return EgfSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    def __neg__(self):
        return EgfSeries([-a for a in self.coeffs], self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, MPoly)):
            return EgfSeries([a * other for a in self.coeffs], self.trunc)
        return NotImplemented

    __rmul__ = __mul__

    def derivative(self) -> EgfSeries:
        """d/dx, keeping the same truncation order (top coefficient becomes 0)."""
        return EgfSeries(
            [self.coeffs[k] * k for k in range(1, self.trunc + 1)], self.trunc
        )

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"EgfSeries([{body}], trunc={self.trunc})"


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Cauchy product truncated at the common order."""
    f._check(g)
    out = []
    for n in range(f.trunc + 1):
        acc = MPoly()
        for k in range(n + 1):
            a, b = f.coeffs[k], g.coeffs[n - k]
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return EgfSeries(out, f.trunc)


def series_exp(f: EgfSeries) -> EgfSeries:
    """exp(f) for ``f`` without constant term.

    Solves ``g' = f' g`` with ``g(0) = 1``, which on coefficients reads
    ``n g_n = sum_{k=1..n} k f_k g_{n-k}``.
    """
    if f.coeffs[0]:
        raise DomainError("exp needs a series with zero constant term")
    support = [k for k in range(1, f.trunc + 1) if f.coeffs[k]]
    g = [MPoly.const(1)]
    for n in range(1, f.trunc + 1):
        acc = MPoly()
        for k in support:
            if k > n:
                break
            if g[n - k]:
                acc = acc + f.coeffs[k] * g[n - k] * k
        g.append(acc.div_int(n))
    return EgfSeries(g, f.trunc)


def series_extract(f: EgfSeries, n: int) -> MPoly:
    """``n! [x^n] f``, checked to have integer coefficients."""
    if not 0 <= n <= f.trunc:
        raise ParameterError(f"index {n} outside 0..{f.trunc}")
    p = f.coeffs[n] * math.factorial(n)
    if not p.is_integral():
        raise IntegralityError(f"non-integral coefficient at x^{n}: {p}")
    return p
