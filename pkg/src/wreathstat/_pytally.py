"""Pure-Python brute-force tally over G(r, n); reference twin of ``_ctally``."""
from itertools import permutations, product


def tally(r, n, s, ms, first=0):
    """Count elements of G(r, s, n) with sigma^m = 1 by (fix, exc_A, csum).

    Returns one ``{(fix, exc_a, csum): count}`` dict per entry of ``ms``.
    ``first`` restricts to permutations with ``tau(1) == first`` (0 = all),
    which lets callers split the enumeration across workers.
    """
    ms = list(ms)
    top = max(ms)
    out = [dict() for _ in ms]
    ident = tuple(range(1, n + 1))
    for tau in permutations(ident):
        if first and tau[0] != first:
            continue
        # sigma^k = sigma^(k-1) . sigma; its permutation part and the inverse
        # of the previous permutation part do not depend on the colors.
        taus = [ident]
        invs = []
        for k in range(1, top + 1):
            prev = taus[-1]
            inv = [0] * n
            for i, t in enumerate(prev):
                inv[t - 1] = i
            invs.append(inv)
            taus.append(tuple(prev[tau[i] - 1] for i in range(n)))
        fix = sum(1 for i, t in enumerate(tau, 1) if t == i)
        up = [i for i, t in enumerate(tau, 1) if t > i]
        for z in product(range(r), repeat=n):
            cs = sum(z)
            if cs % s:
                continue
            key = (fix, sum(1 for i in up if z[i - 1] == 0), cs)
            acc = [0] * n
            for k in range(1, top + 1):
                inv = invs[k - 1]
                acc = [(acc[i] + z[inv[i]]) % r for i in range(n)]
                if taus[k] == ident and not any(acc):
                    for idx, m in enumerate(ms):
                        if m == k:
                            out[idx][key] = out[idx].get(key, 0) + 1
    return out
