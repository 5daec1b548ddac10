# cython: language_level=3
"""Compiled brute-force tally over G(r, n); same contract as ``_pytally.tally``."""
from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 16
    MAXM = 64


cdef bint _next_perm(int *a, int n):
    cdef int i = n - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


def tally(int r, int n, int s, ms, int first=0):
    cdef list mlist = [int(m) for m in ms]
    cdef int nm = len(mlist)
    cdef int top = max(mlist)
    if n > MAXN or top > MAXM:
        raise ValueError(f"compiled kernel supports n <= {MAXN}, m <= {MAXM}")
    cdef int want[MAXM + 1]
    cdef int k, i, idx, cs, fix, exc, t
    for k in range(MAXM + 1):
        want[k] = 0
    for m in mlist:
        want[<int>m] = 1

    cdef int maxcs = n * (r - 1)
    cdef int dim_c = maxcs + 1
    cdef int dim_e = n + 1
    cdef int dim_f = n + 1
    cdef int block = dim_f * dim_e * dim_c
    # counts[k][fix][exc][cs] for k = 1..top
    cdef long long *counts = <long long *> calloc((top + 1) * block, sizeof(long long))
    if counts == NULL:
        raise MemoryError()

    cdef int tau[MAXN]
    cdef int taus[MAXM + 1][MAXN]
    cdef int invs[MAXM + 1][MAXN]
    cdef bint tau_id[MAXM + 1]
    cdef int z[MAXN]
    cdef int acc[MAXN]
    cdef int up[MAXN]
    cdef int nup
    cdef bint ok

    try:
        for i in range(n):
            tau[i] = i + 1
        while True:
            if first == 0 or (n > 0 and tau[0] == first):
                for i in range(n):
                    taus[0][i] = i + 1
                for k in range(1, top + 1):
                    for i in range(n):
                        invs[k - 1][taus[k - 1][i] - 1] = i
                    ok = True
                    for i in range(n):
                        taus[k][i] = taus[k - 1][tau[i] - 1]
                        if taus[k][i] != i + 1:
                            ok = False
                    tau_id[k] = ok
                fix = 0
                nup = 0
                for i in range(n):
                    if tau[i] == i + 1:
                        fix += 1
                    elif tau[i] > i + 1:
                        up[nup] = i
                        nup += 1
                for i in range(n):
                    z[i] = 0
                cs = 0
                while True:
                    if cs % s == 0:
                        exc = 0
                        for t in range(nup):
                            if z[up[t]] == 0:
                                exc += 1
                        for i in range(n):
                            acc[i] = 0
                        for k in range(1, top + 1):
                            ok = tau_id[k]
                            for i in range(n):
                                acc[i] = (acc[i] + z[invs[k - 1][i]]) % r
                                if acc[i] != 0:
                                    ok = False
                            if ok and want[k]:
                                counts[k * block + (fix * dim_e + exc) * dim_c + cs] += 1
                    # odometer over colors
                    i = n - 1
                    while i >= 0 and z[i] == r - 1:
                        cs -= z[i]
                        z[i] = 0
                        i -= 1
                    if i < 0:
                        break
                    z[i] += 1
                    cs += 1
            if not _next_perm(tau, n):
                break

        out = []
        for m in mlist:
            d = {}
            base = <int>m * block
            for fix in range(dim_f):
                for exc in range(dim_e):
                    for cs in range(dim_c):
                        c = counts[base + (fix * dim_e + exc) * dim_c + cs]
                        if c:
                            d[(fix, exc, cs)] = c
            out.append(d)
        return out
    finally:
        free(counts)
