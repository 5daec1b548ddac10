"""Closed forms for the fixed point / excedance / color-sum distribution.

All generating functions here are exponential in x and are returned as
truncated :class:`EgfSeries`; ``h_poly`` and friends return the integer
polynomials ``H(u, v, w)`` themselves.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .errors import ConsistencyError, IntegralityError, ParameterError
from .polyring import EgfSeries, MPoly, series_exp, series_extract

__all__ = [
    "EulerianTable",
    "eulerian",
    "gbinom",
    "u_coeff",
    "u_coeff_expand",
    "u_coeff_alternating",
    "divisors",
    "is_prime",
    "fixed_point_weight",
    "cycle_poly",
    "h_exponent",
    "h_egf",
    "lambda_poly",
    "h_egf_prime",
    "h_poly",
    "m2_case",
    "h2_closed",
    "h2_coefficient_formula",
    "count_fix_exca",
    "count_excclr",
    "h_recurrence",
]


class EulerianTable:
    """Rows ``A[d][k]`` for ``0 <= k <= d <= D`` from the excedance recurrence.

    ``A[d][k]`` counts permutations of ``[d]`` with ``k - 1`` excedances,
    with ``A[0][0] = 1`` and ``A[d][0] = 0`` for ``d >= 1``.
    """

    def __init__(self, D: int):
        rows = [[1]]
        for d in range(1, D + 1):
            prev = rows[-1] + [0]
            row = [0] * (d + 1)
            for k in range(1, d + 1):
                row[k] = k * prev[k] + (d - k + 1) * prev[k - 1]
            rows.append(row)
        self.table = rows

    @property
    def D(self) -> int:
        return len(self.table) - 1

    def __getitem__(self, dk):
        d, k = dk
        if d < 0 or k < 0 or k > d:
            return 0
        return self.table[d][k]


_eulerian = EulerianTable(16)


def eulerian(d: int, k: int) -> int:
    global _eulerian
    if d > _eulerian.D:
        _eulerian = EulerianTable(d)
    return _eulerian[d, k]


def gbinom(n: int, k: int) -> int:
    """Binomial coefficient valid for negative ``n``; zero when ``k < 0``.

    ``gbinom(-1, 0) == 1`` matters: it is ``[x^0] (1 - x)^0``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    num = 1
    for j in range(k):
        num *= n - j
    return num // math.factorial(k)


def _poly_pow(p: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        nxt = [0] * (len(out) + len(p) - 1) if p else []
        for a, x in enumerate(out):
            if x:
                for b, y in enumerate(p):
                    nxt[a + b] += x * y
        out = nxt
    return out


@lru_cache(maxsize=None)
def _u_product(r: int, base: int, i: int) -> tuple[int, ...]:
    colored = [0] + [1] * (r - 1)  # x + ... + x^(r-1)
    anycolor = [1] * r  # 1 + x + ... + x^(r-1)
    a = _poly_pow(colored, i)
    b = _poly_pow(anycolor, base)
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for p, x in enumerate(a):
        if x:
            for q, y in enumerate(b):
                out[p + q] += x * y
    return tuple(out)


def u_coeff_expand(r: int, base: int, i: int, t: int) -> int:
    """``[x^t] (x + ... + x^(r-1))^i (1 + ... + x^(r-1))^base`` by multiplying out."""
    coeffs = _u_product(r, base, i)
    return coeffs[t] if 0 <= t < len(coeffs) else 0


def u_coeff_alternating(r: int, base: int, i: int, t: int) -> int:
    """Same coefficient via inclusion-exclusion on ``((1 - x^r) / (1 - x))^N``."""
    if t < 0:
        return 0
    total = 0
    for j in range(i + 1):
        N = base + j
        inner = 0
        ell = 0
        while ell * r <= t and ell <= N:
            inner += (-1) ** ell * gbinom(N, ell) * gbinom(N + t - ell * r - 1, t - ell * r)
            ell += 1
        total += (-1) ** (i - j) * math.comb(i, j) * inner
    return total


def u_coeff(r: int, base: int, i: int, t: int) -> int:
    if r < 1:
        raise ParameterError(f"need r >= 1, got {r}")
    a = u_coeff_expand(r, base, i, t)
    b = u_coeff_alternating(r, base, i, t)
    if a != b:
        raise ConsistencyError(
            f"U(r={r}, base={base}, i={i}, t={t}): expansion {a} != alternating sum {b}"
        )
    return a


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def fixed_point_weight(r: int, m: int) -> MPoly:
    """Sum of ``u w^t`` over colors ``0 <= t < r`` with ``r | t m``."""
    return MPoly({(1, 0, t): 1 for t in range(r) if (t * m) % r == 0})


@lru_cache(maxsize=None)
def cycle_poly(m: int, d: int, r: int) -> MPoly:
    """Weight of all colored d-cycles on ``[d]`` whose m-th power is trivial.

    A cycle with color sum ``t`` has ``d``-th power colored ``t`` everywhere,
    so its m-th power is trivial iff ``r | t * (m / d)``.
    """
    if d < 2 or m % d:
        raise ParameterError(f"need d >= 2 dividing m, got d={d}, m={m}")
    q = m // d
    terms: dict = {}
    for k in range(1, d):
        a = eulerian(d - 1, k)
        for i in range(k + 1):
            for t in range(d * (r - 1) + 1):
                if (t * q) % r:
                    continue
                c = a * math.comb(k, i) * u_coeff(r, d - k, i, t)
                if c:
                    key = (0, k - i, t)
                    terms[key] = terms.get(key, 0) + c
    return MPoly(terms)


def h_exponent(r: int, m: int, trunc: int) -> EgfSeries:
    """The exponent ``log H_{r,1}^{(m)}(x)``: a polynomial in x of degree <= m."""
    if r < 1 or m < 1:
        raise ParameterError(f"need r, m >= 1, got r={r}, m={m}")
    coeffs = [MPoly()] * (trunc + 1)
    if trunc >= 1:
        coeffs[1] = fixed_point_weight(r, m)
    for d in divisors(m):
        if d >= 2 and d <= trunc:
            coeffs[d] = cycle_poly(m, d, r).div_int(math.factorial(d))
    return EgfSeries(coeffs, trunc)


@lru_cache(maxsize=256)
def h_egf(r: int, m: int, trunc: int) -> EgfSeries:
    """EGF of ``H_{r,1,n}^{(m)}`` over ``n <= trunc``."""
    return series_exp(h_exponent(r, m, trunc))


def lambda_poly(r: int, p: int) -> MPoly:
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    if r % p:
        return MPoly.const(1)
    return MPoly({(0, 0, i * r // p): 1 for i in range(p)})


@lru_cache(maxsize=256)
def h_egf_prime(r: int, p: int, trunc: int) -> EgfSeries:
    """EGF for prime order ``p``, assembled directly from its prime-order shape.

    Built independently of :func:`cycle_poly` so the two can be compared.
    """
    lam = lambda_poly(r, p)
    coeffs = [MPoly()] * (trunc + 1)
    if trunc >= 1:
        coeffs[1] = lam * MPoly.monomial(1, 0, 0)
    if p <= trunc:
        inner: dict = {}
        for k in range(1, p):
            for i in range(k + 1):
                j = 0
                while j * r <= p * (r - 1):
                    c = eulerian(p - 1, k) * math.comb(k, i) * u_coeff_expand(r, p - k, i, j * r)
                    if c:
                        key = (0, k - i, j * r)
                        inner[key] = inner.get(key, 0) + c
                    j += 1
        coeffs[p] = MPoly(inner).div_int(math.factorial(p))
    return series_exp(EgfSeries(coeffs, trunc))


def _check_s(r: int, s: int):
    if s < 1 or r % s:
        raise ParameterError(f"s={s} does not divide r={r}")


def h_poly(r: int, s: int, m: int, n: int) -> MPoly:
    """``H_{r,s,n}^{(m)}(u, v, w)``: the theorem's EGF graded by w-exponent mod s."""
    _check_s(r, s)
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    return series_extract(h_egf(r, m, n), n).filter_w_mod(s)


def m2_case(r: int, s: int) -> str:
    """Which closed form governs m = 2: ``odd``, ``even-full`` or ``even-cosh``."""
    if r % 2:
        return "odd"
    return "even-full" if (r // 2) % s == 0 else "even-cosh"


def h2_closed(r: int, s: int, trunc: int) -> EgfSeries:
    """Involution EGF for ``G(r, s, n)``.

    When r is even and s does not divide r/2 only even powers of the
    ``u x w^(r/2)`` part survive, giving a cosh factor.
    """
    _check_s(r, s)
    X = lambda deg, p: EgfSeries.term(deg, p, trunc)  # noqa: E731
    u = MPoly.monomial(1, 0, 0)
    pairs = (MPoly.monomial(0, 1, 0) + MPoly.monomial(0, 0, r, r - 1)).div_int(2)
    case = m2_case(r, s)
    if case == "odd":
        return series_exp(X(1, u) + X(2, pairs))
    half = MPoly.monomial(1, 0, r // 2)
    if case == "even-full":
        return series_exp(X(1, u + half) + X(2, pairs))
    cosh = (series_exp(X(1, half)) + series_exp(X(1, -half))) * (MPoly.const(1).div_int(2))
    return series_exp(X(1, u) + X(2, pairs)) * cosh


def _check_cosh_regime(r: int, s: int):
    _check_s(r, s)
    if m2_case(r, s) != "even-cosh":
        raise ParameterError(
            f"formula holds only for r even with s not dividing r/2; got r={r}, s={s}"
        )


def _involution_shapes(n: int):
    # (k1, k2, k3) with k1 + 2 k2 + 2 k3 = n, weighted n! / (k1! (2k2)! k3!)
    for k3 in range(n // 2 + 1):
        for k2 in range((n - 2 * k3) // 2 + 1):
            k1 = n - 2 * k2 - 2 * k3
            mult = math.factorial(n) // (
                math.factorial(k1) * math.factorial(2 * k2) * math.factorial(k3)
            )
            yield k1, k2, k3, mult


def h2_coefficient_formula(r: int, s: int, n: int) -> MPoly:
    _check_cosh_regime(r, s)
    pairs = MPoly.monomial(0, 1, 0) + MPoly.monomial(0, 0, r, r - 1)
    total = MPoly()
    for k1, k2, k3, mult in _involution_shapes(n):
        term = MPoly.monomial(k1 + 2 * k2, 0, r * k2, mult) * pairs**k3
        total = total + term.div_int(2**k3)
    if not total.is_integral():
        raise IntegralityError(f"non-integral H for r={r}, s={s}, n={n}: {total}")
    return total


def count_fix_exca(r: int, s: int, n: int, k: int, ell: int) -> int:
    """Involutions with ``k`` absolute fixed points and ``exc_A = ell``."""
    _check_cosh_regime(r, s)
    if k < 0 or ell < 0 or (n - k) % 2 or k > n:
        return 0
    k3 = (n - k) // 2
    total = 0
    for k1, k2, kk3, mult in _involution_shapes(n):
        if kk3 == k3 and k1 + 2 * k2 == k:
            if ell <= k3:
                total += math.comb(k3, ell) * mult * (r - 1) ** (k3 - ell)
    q, rem = divmod(total, 2**k3)
    if rem:
        raise IntegralityError(f"non-integral count for r={r}, s={s}, n={n}, k={k}, l={ell}")
    return q


def count_excclr(r: int, s: int, n: int, k: int) -> int:
    """Involutions with colored excedance number ``k``.

    Each 2-cycle carries ``(v + (r-1) w^r) / 2``; under ``v -> q^r``,
    ``w -> q`` that is ``(r/2) q^r``, so the weight is ``(r/2)^k3``.
    """
    _check_cosh_regime(r, s)
    total = 0
    for k1, k2, k3, mult in _involution_shapes(n):
        if r * (k2 + k3) == k:
            total += mult * (r // 2) ** k3
    return total


def h_recurrence(r: int, m: int, n: int) -> MPoly:
    """``H_{r,1,n}^{(m)}`` by peeling off the cycle containing ``n``."""
    if n < 0:
        raise ParameterError(f"n must be nonnegative, got {n}")
    fixed = fixed_point_weight(r, m)
    cyc = {d: cycle_poly(m, d, r) for d in divisors(m) if d >= 2}
    H = [MPoly.const(1)]
    for j in range(1, n + 1):
        acc = H[j - 1] * fixed
        for d, a in cyc.items():
            if d <= j:
                acc = acc + H[j - d] * a * math.comb(j - 1, d - 1)
        H.append(acc)
    return H[n]
