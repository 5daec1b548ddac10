"""Colored permutations: elements of the wreath product Z_r wr S_n.

An element is a pair ``(z, tau)``.  ``tau`` is stored in one-line form with
values ``1..n`` and ``z[i]`` is the color carried by the image of position
``i + 1``, so position ``i`` is sent to the colored letter ``tau[i]^[z[i]]``.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass

from .errors import ParameterError

__all__ = [
    "ColoredPermutation",
    "GroupSpec",
    "StatTriple",
    "compose",
    "power",
    "order_divides",
    "order",
    "inverse",
    "csum",
    "fix_count",
    "exc_a",
    "exc_a_set",
    "exc_full",
    "exc_clr",
    "is_member",
    "cycles",
    "cycle_lengths",
    "stats",
]


@dataclass(frozen=True)
class GroupSpec:
    """Parameters ``(r, s, n, m)`` selecting {sigma in G(r,s,n) : sigma^m = 1}."""

    r: int
    s: int
    n: int
    m: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1 or self.m < 1:
            raise ParameterError(f"r, s, m must be positive: {self}")
        if self.n < 0:
            raise ParameterError(f"n must be nonnegative: {self}")
        if self.r % self.s:
            raise ParameterError(f"s={self.s} does not divide r={self.r}")

    @property
    def ambient_size(self) -> int:
        """|G(r,n)| = r^n n!."""
        return self.r**self.n * math.factorial(self.n)


@dataclass(frozen=True)
class StatTriple:
    fix: int
    exc_a: int
    csum: int


@dataclass(frozen=True)
class ColoredPermutation:
    r: int
    z: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self):
        z = tuple(int(c) for c in self.z)
        tau = tuple(int(t) for t in self.tau)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "tau", tau)
        if self.r < 1:
            raise ParameterError(f"need at least one color, got r={self.r}")
        if len(z) != len(tau):
            raise ParameterError("color vector and permutation differ in length")
        if any(not 0 <= c < self.r for c in z):
            raise ParameterError(f"colors must lie in 0..{self.r - 1}: {z}")
        if sorted(tau) != list(range(1, len(tau) + 1)):
            raise ParameterError(f"not a permutation of 1..{len(tau)}: {tau}")

    @property
    def n(self) -> int:
        return len(self.tau)

    @classmethod
    def identity(cls, r: int, n: int) -> ColoredPermutation:
        return cls(r, (0,) * n, tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, r: int) -> ColoredPermutation:
        """Read the one-line form ``"3^[1] 1^[2] 2 4^[2]"``; a bare digit has color 0."""
        z, tau = [], []
        for token in text.split():
            m = re.fullmatch(r"(\d+)(?:\^\[(\d+)\])?", token)
            if m is None:
                raise ParameterError(f"cannot parse letter {token!r}")
            tau.append(int(m.group(1)))
            z.append(int(m.group(2) or 0))
        return cls(r, tuple(z), tuple(tau))

    def is_identity(self) -> bool:
        return not any(self.z) and all(t == i for i, t in enumerate(self.tau, 1))

    def __str__(self):
        return " ".join(
            str(t) if c == 0 else f"{t}^[{c}]" for c, t in zip(self.z, self.tau)
        )

    def __mul__(self, other):
        if not isinstance(other, ColoredPermutation):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, m: int):
        return power(self, m)

    def image(self, digit: int, color: int = 0) -> tuple[int, int]:
        """Image of the letter ``digit^[color]`` as a ``(digit, color)`` pair."""
        return self.tau[digit - 1], (self.z[digit - 1] + color) % self.r


def compose(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    """The wreath product ``a . b``.

    Colors combine as ``z_i = a.z_i + b.z_{a.tau^-1(i)}`` (mod r) and the
    permutations compose as ``a.tau o b.tau``.
    """
    if a.r != b.r or a.n != b.n:
        raise ParameterError(
            f"cannot compose elements of G({a.r},{a.n}) and G({b.r},{b.n})"
        )
    n, r = a.n, a.r
    a_inv = [0] * n
    for i, t in enumerate(a.tau):
        a_inv[t - 1] = i
    z = tuple((a.z[i] + b.z[a_inv[i]]) % r for i in range(n))
    tau = tuple(a.tau[b.tau[i] - 1] for i in range(n))
    return ColoredPermutation(r, z, tau)


def power(a: ColoredPermutation, m: int) -> ColoredPermutation:
    if m < 0:
        raise ParameterError(f"negative exponent {m}")
    result = ColoredPermutation.identity(a.r, a.n)
    for _ in range(m):
        result = compose(result, a)
    return result


def order_divides(a: ColoredPermutation, m: int) -> bool:
    """True iff ``a**m`` is the identity."""
    if m < 1:
        raise ParameterError(f"m must be positive, got {m}")
    return power(a, m).is_identity()


def order(a: ColoredPermutation) -> int:
    p, k = a, 1
    while not p.is_identity():
        p = compose(p, a)
        k += 1
    return k


def inverse(a: ColoredPermutation) -> ColoredPermutation:
    return power(a, order(a) - 1)


def csum(a: ColoredPermutation) -> int:
    return sum(a.z)


def fix_count(a: ColoredPermutation) -> int:
    return sum(1 for i, t in enumerate(a.tau, 1) if t == i)


def exc_a_set(a: ColoredPermutation) -> set[int]:
    # A colored image lies below every uncolored digit in the color order.
    return {i for i in range(1, a.n) if a.z[i - 1] == 0 and a.tau[i - 1] > i}


def exc_a(a: ColoredPermutation) -> int:
    return len(exc_a_set(a))


def _color_key(digit: int, color: int) -> tuple[int, int]:
    # Higher colors come first; digits ascend within a color.
    return (-color, digit)


def exc_full(a: ColoredPermutation) -> int:
    """Excedance number of ``a`` acting on all ``r*n`` colored letters."""
    count = 0
    for color in range(a.r):
        for digit in range(1, a.n + 1):
            if _color_key(*a.image(digit, color)) > _color_key(digit, color):
                count += 1
    return count


def exc_clr(a: ColoredPermutation) -> int:
    return a.r * exc_a(a) + csum(a)


def is_member(a: ColoredPermutation, s: int) -> bool:
    """Membership of ``a`` in the complex reflection group G(r, s, n)."""
    if s < 1 or a.r % s:
        raise ParameterError(f"s={s} does not divide r={a.r}")
    return csum(a) % s == 0


def cycles(a: ColoredPermutation) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, a.n + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = a.tau[i - 1]
        out.append(tuple(cyc))
    return out


def cycle_lengths(a: ColoredPermutation) -> Counter:
    """Cycle type of the underlying permutation, as a multiset of lengths."""
    return Counter(len(c) for c in cycles(a))


def stats(a: ColoredPermutation) -> StatTriple:
    return StatTriple(fix_count(a), exc_a(a), csum(a))
