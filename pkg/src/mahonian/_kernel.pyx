# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Walks every element of S_n, B_n, D_n, Delta_n or DeltaLess_n with a C-level
next-permutation loop times a sign-mask loop and accumulates a signed
histogram of one statistic. Codes match ``_pykernel``.
"""

from libc.stdlib cimport calloc, free

cdef enum:
    MAXN = 20

# statistic codes
cdef enum:
    INV_NAT = 0
    INV_SPEC = 1
    DES_NAT = 2
    DES_SPEC = 3
    MAJ_NAT = 4
    MAJ_SPEC = 5
    NEG = 6
    LEN_A = 7
    LEN_B = 8
    LEN_D = 9
    FMAJ = 10
    DMAJ = 11
    MAJ_A = 12


cdef inline int skey(int x, int n) nogil:
    return x if x >= 0 else -(n + 1) - x


cdef inline int key(int x, int n, bint special) nogil:
    return skey(x, n) if special else x


cdef int inv(int* w, int n, bint special) nogil:
    cdef int i, j, c = 0
    for i in range(n):
        for j in range(i + 1, n):
            if key(w[i], n, special) > key(w[j], n, special):
                c += 1
    return c


cdef int maj(int* w, int n, bint special) nogil:
    cdef int i, c = 0
    for i in range(1, n):
        if key(w[i - 1], n, special) > key(w[i], n, special):
            c += i
    return c


cdef int des(int* w, int n, bint special, int boundary) nogil:
    cdef int i, c = 0
    for i in range(1, n):
        if key(w[i - 1], n, special) > key(w[i], n, special):
            c += 1
    if boundary == 1 and n >= 1:
        if 0 > key(w[0], n, special):
            c += 1
    elif boundary == 2 and n >= 2:
        if key(-w[1], n, special) > key(w[0], n, special):
            c += 1
    return c


cdef int neg(int* w, int n) nogil:
    cdef int i, c = 0
    for i in range(n):
        if w[i] < 0:
            c += 1
    return c


cdef int neg_sum(int* w, int n) nogil:
    cdef int i, c = 0
    for i in range(n):
        if w[i] < 0:
            c += w[i]
    return c


cdef int length(int* w, int n, int kind) nogil:
    # kind: 0 = A, 1 = B, 2 = D
    cdef int lb = inv(w, n, False)
    if kind == 0:
        return lb
    lb -= neg_sum(w, n)
    if kind == 1:
        return lb
    return lb - neg(w, n)


cdef int fmaj(int* w, int n) nogil:
    return 2 * maj(w, n, True) + neg(w, n)


cdef int stat_value(int* w, int n, int stat, int boundary) nogil:
    cdef int last, v
    if stat == INV_NAT or stat == LEN_A:
        return inv(w, n, False)
    if stat == INV_SPEC:
        return inv(w, n, True)
    if stat == DES_NAT:
        return des(w, n, False, boundary)
    if stat == DES_SPEC:
        return des(w, n, True, boundary)
    if stat == MAJ_NAT or stat == MAJ_A:
        return maj(w, n, False)
    if stat == MAJ_SPEC:
        return maj(w, n, True)
    if stat == NEG:
        return neg(w, n)
    if stat == LEN_B:
        return length(w, n, 1)
    if stat == LEN_D:
        return length(w, n, 2)
    if stat == FMAJ:
        return fmaj(w, n)
    # DMAJ
    last = w[n - 1]
    if last < 0:
        w[n - 1] = -last
    v = fmaj(w, n)
    w[n - 1] = last
    return v


cdef bint next_permutation(int* p, int n) nogil:
    cdef int i = n - 2, j, t
    while i >= 0 and p[i] >= p[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while p[j] <= p[i]:
        j -= 1
    t = p[i]; p[i] = p[j]; p[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1
        j -= 1
    return True


cdef int max_stat(int n, int stat):
    # loose upper bounds on each statistic
    if stat == NEG or stat == DES_NAT or stat == DES_SPEC:
        return n + 1
    return 2 * n * n + 2 * n + 2


def histogram(int n, int family, int stat, int sign, int restrict,
              int boundary=0, int first=0):
    """Signed histogram ``[c_0, c_1, ...]`` of ``stat`` over one family.

    family: 0 S, 1 B, 2 D, 3 Delta, 4 DeltaLess. sign: 0 none, 1/2/3 parity
    of the A/B/D length. restrict: 0 all, 1 derangements, 2 derangements of
    even natural length. ``first`` != 0 keeps only words starting with it.
    """
    if n < 1 or n > MAXN:
        raise ValueError(f"n must lie in 1..{MAXN}")
    if boundary == 2 and n < 2 and (stat == DES_NAT or stat == DES_SPEC):
        raise ValueError("type D boundary needs n >= 2")
    cdef int p[MAXN]
    cdef int w[MAXN]
    cdef int i, e, s, negs, lt, top = -1
    cdef long nmasks = 1 if family == 0 else (1L << n)
    cdef long mask
    cdef bint ok
    cdef int size = max_stat(n, stat)
    cdef long long* counts = <long long*> calloc(size, sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    # natural length parity used by the "even" restriction
    lt = 0 if family == 0 else (2 if family == 2 else 1)
    try:
        with nogil:
            for i in range(n):
                p[i] = i + 1
            while True:
                for mask in range(nmasks):
                    negs = 0
                    for i in range(n):
                        if (mask >> i) & 1:
                            w[i] = -p[i]
                            negs += 1
                        else:
                            w[i] = p[i]
                    if first != 0 and w[0] != first:
                        continue
                    if family == 2 and (negs & 1):
                        continue
                    if family == 3 and w[n - 1] < 0:
                        continue
                    if family == 4 and not (0 < w[n - 1] < n):
                        continue
                    if restrict:
                        ok = True
                        for i in range(n):
                            if w[i] == i + 1:
                                ok = False
                                break
                        if not ok:
                            continue
                        if restrict == 2 and (length(w, n, lt) & 1):
                            continue
                    e = stat_value(w, n, stat, boundary)
                    s = 1
                    if sign and (length(w, n, sign - 1) & 1):
                        s = -1
                    counts[e] += s
                    if e > top:
                        top = e
                if not next_permutation(p, n):
                    break
        return [counts[i] for i in range(top + 1)]
    finally:
        free(counts)
