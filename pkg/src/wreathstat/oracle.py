"""Exhaustive ground truth by enumerating G(r, n)."""
from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Callable, Iterator

from . import _tally
from .errors import EnumerationTooLarge, ParameterError
from .perm import ColoredPermutation, GroupSpec, StatTriple, is_member, order_divides
from .polyring import MPoly

__all__ = [
    "DEFAULT_CAP",
    "EnumerationPlan",
    "enumerate_group",
    "tally_stats",
    "brute_h",
    "brute_cyclic_exc",
    "brute_count",
]

DEFAULT_CAP = 5_000_000


@dataclass(frozen=True)
class EnumerationPlan:
    spec: GroupSpec
    element_cap: int = DEFAULT_CAP

    @property
    def size(self) -> int:
        return self.spec.ambient_size

    def check(self):
        if self.size > self.element_cap:
            raise EnumerationTooLarge(self.size, self.element_cap)


def enumerate_group(spec: GroupSpec, cap: int = DEFAULT_CAP) -> Iterator[ColoredPermutation]:
    """Yield each sigma in G(r, s, n) with sigma^m = 1, once.

    Order: tau in lexicographic one-line order, then colors as an odometer.
    """
    EnumerationPlan(spec, cap).check()
    r, n = spec.r, spec.n
    for tau in permutations(range(1, n + 1)):
        for z in product(range(r), repeat=n):
            sigma = ColoredPermutation(r, z, tau)
            if is_member(sigma, spec.s) and order_divides(sigma, spec.m):
                yield sigma


def _tally_worker(args):
    return _tally.tally(*args)


def tally_stats(spec: GroupSpec, cap: int = DEFAULT_CAP, workers: int = 1) -> Counter:
    """Counts of ``(fix, exc_A, csum)`` over the selected elements.

    With ``workers > 1`` the enumeration is split by ``tau(1)`` across
    processes; the merged counts do not depend on the split.
    """
    EnumerationPlan(spec, cap).check()
    r, s, n, m = spec.r, spec.s, spec.n, spec.m
    if workers > 1 and n > 1:
        jobs = [(r, n, s, (m,), first) for first in range(1, n + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = [res[0] for res in pool.map(_tally_worker, jobs)]
    else:
        parts = _tally.tally(r, n, s, (m,))
    total = Counter()
    for part in parts:
        total.update(part)
    return total


def brute_h(spec: GroupSpec, cap: int = DEFAULT_CAP, workers: int = 1) -> MPoly:
    """Sum of ``u^fix v^exc_A w^csum`` over the selected elements."""
    return MPoly(tally_stats(spec, cap, workers))


def brute_cyclic_exc(d: int) -> dict[int, int]:
    """Distribution of classical excedances over the d-cycles of S_d."""
    if not 1 <= d <= 8:
        raise ParameterError(f"cyclic excedance enumeration supports 1 <= d <= 8, got {d}")
    dist: Counter = Counter()
    for tau in permutations(range(1, d + 1)):
        cyc = ColoredPermutation(1, (0,) * d, tau)
        # a d-cycle is exactly one whose orbit of 1 has length d
        i, length = tau[0], 1
        while i != 1:
            i = tau[i - 1]
            length += 1
        if length == d:
            dist[sum(1 for j, t in enumerate(cyc.tau, 1) if t > j)] += 1
    return dict(sorted(dist.items()))


def brute_count(
    spec: GroupSpec,
    predicate: Callable[[StatTriple, int], bool],
    cap: int = DEFAULT_CAP,
) -> int:
    """Number of selected elements whose stats and ``exc^Clr`` satisfy ``predicate``."""
    total = 0
    for (fix, exc, cs), count in tally_stats(spec, cap).items():
        if predicate(StatTriple(fix, exc, cs), spec.r * exc + cs):
            total += count
    return total
