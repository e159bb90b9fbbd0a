# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels; API mirrors ``_kernels_py``."""

from libc.stdlib cimport malloc, free

DEF MAXN = 16


cdef int _cycles(const int* p, int n) noexcept nogil:
    cdef char seen[MAXN]
    cdef int i, j, count = 0
    for i in range(n):
        seen[i] = 0
    for i in range(n):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
    return count


cdef void _labels(const int* p, int n, int* lab) noexcept nogil:
    cdef int i, j, c = 0
    for i in range(n):
        lab[i] = -1
    for i in range(n):
        if lab[i] < 0:
            j = i
            while lab[j] < 0:
                lab[j] = c
                j = p[j]
            c += 1


cdef bint _next_perm(int* a, int n) noexcept nogil:
    # lexicographic successor; False once the last permutation is passed
    cdef int i = n - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = n - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


cdef int _load(object seq, int* out) except -1:
    cdef int n = len(seq)
    cdef int i
    if n > MAXN:
        raise ValueError(f"permutation size {n} exceeds kernel limit {MAXN}")
    for i in range(n):
        out[i] = seq[i]
    return n


def cycle_count(p):
    cdef int buf[MAXN]
    cdef int n = _load(p, buf)
    return _cycles(buf, n)


def cycle_labels(p):
    cdef int buf[MAXN]
    cdef int lab[MAXN]
    cdef int n = _load(p, buf)
    _labels(buf, n, lab)
    return [lab[i] for i in range(n)]


def compose(a, b):
    return [a[x] for x in b]


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def kappa_pair_counts(pi):
    cdef int P[MAXN]
    cdef int s1[MAXN]
    cdef int inv1[MAXN]
    cdef int s2[MAXN]
    cdef int n = _load(pi, P)
    cdef int i, a, b
    cdef long* table = <long*> malloc((n + 2) * (n + 2) * sizeof(long))
    if table == NULL:
        raise MemoryError()
    try:
        for i in range((n + 2) * (n + 2)):
            table[i] = 0
        for i in range(n):
            s1[i] = i
        while True:
            for i in range(n):
                inv1[s1[i]] = i
            for i in range(n):
                s2[i] = inv1[P[i]]
            a = _cycles(s1, n)
            b = _cycles(s2, n)
            table[a * (n + 2) + b] += 1
            if not _next_perm(s1, n):
                break
        out = {}
        for a in range(n + 2):
            for b in range(n + 2):
                if table[a * (n + 2) + b]:
                    out[(a, b)] = table[a * (n + 2) + b]
        return out
    finally:
        free(table)


cdef void _nf_reduce(int* s1, int* s2, int n) noexcept nogil:
    cdef int l1[MAXN]
    cdef int l2[MAXN]
    cdef int a, b, x, t, found
    while True:
        _labels(s1, n, l1)
        _labels(s2, n, l2)
        found = 0
        for a in range(n):
            for b in range(a + 1, n):
                if l1[a] == l1[b] and l2[a] != l2[b]:
                    found = 1
                    break
            if found:
                break
        if not found:
            return
        t = s1[a]; s1[a] = s1[b]; s1[b] = t
        for x in range(n):
            if s2[x] == a:
                s2[x] = b
            elif s2[x] == b:
                s2[x] = a


def nf_reduce(s1, s2):
    cdef int A[MAXN]
    cdef int B[MAXN]
    cdef int n = _load(s1, A)
    if _load(s2, B) != n:
        raise ValueError("size mismatch")
    _nf_reduce(A, B, n)
    return [A[i] for i in range(n)], [B[i] for i in range(n)]


cdef bint _nf_ok(const int* s1, const int* s2, int n) noexcept nogil:
    cdef int r1[MAXN]
    cdef int r2[MAXN]
    cdef int pi[MAXN]
    cdef int inv2[MAXN]
    cdef int tmp[MAXN]
    cdef int lab[MAXN]
    cdef int x, len1, len2, rl1, rl2
    for x in range(n):
        r1[x] = s1[x]
        r2[x] = s2[x]
        pi[x] = s1[s2[x]]
        inv2[s2[x]] = x
    _nf_reduce(r1, r2, n)
    for x in range(n):
        if r1[r2[x]] != pi[x]:
            return False
    len1 = n - _cycles(s1, n)
    len2 = n - _cycles(s2, n)
    rl1 = n - _cycles(r1, n)
    rl2 = n - _cycles(r2, n)
    if rl1 + rl2 != len1 + len2:
        return False
    for x in range(n):
        tmp[x] = r2[inv2[x]]
    if rl2 != (n - _cycles(tmp, n)) + len2:
        return False
    _labels(r2, n, lab)
    for x in range(n):
        if lab[x] != lab[r1[x]]:
            return False
    return _cycles(r2, n) <= _cycles(pi, n)


def nf_check(s1, s2):
    cdef int A[MAXN]
    cdef int B[MAXN]
    cdef int n = _load(s1, A)
    if _load(s2, B) != n:
        raise ValueError("size mismatch")
    return bool(_nf_ok(A, B, n))


def normal_form_sweep(int n):
    cdef int s1[MAXN]
    cdef int s2[MAXN]
    cdef long checked = 0, bad = 0
    cdef int i
    if n > MAXN:
        raise ValueError("size above kernel limit")
    with nogil:
        for i in range(n):
            s1[i] = i
        while True:
            for i in range(n):
                s2[i] = i
            while True:
                checked += 1
                if not _nf_ok(s1, s2, n):
                    bad += 1
                if not _next_perm(s2, n):
                    break
            if not _next_perm(s1, n):
                break
    return checked, bad


def cycle_product_counts(omega):
    cdef int W[MAXN]
    cdef int order[MAXN]
    cdef int c[MAXN]
    cdef int prod[MAXN]
    cdef int n = _load(omega, W)
    cdef int i
    counts = [0] * (n + 1)
    if n == 0:
        return counts
    if n == 1:
        counts[1] = 1
        return counts
    cdef long* acc = <long*> malloc((n + 1) * sizeof(long))
    if acc == NULL:
        raise MemoryError()
    try:
        for i in range(n + 1):
            acc[i] = 0
        for i in range(n):
            order[i] = i
        with nogil:
            while True:
                for i in range(n):
                    c[order[i]] = order[(i + 1) % n]
                for i in range(n):
                    prod[i] = c[W[i]]
                acc[_cycles(prod, n)] += 1
                # permute positions 1..n-1 only, keeping 0 first
                if not _next_perm(order + 1, n - 1):
                    break
        for i in range(n + 1):
            counts[i] = acc[i]
        return counts
    finally:
        free(acc)


def length_distribution(int n):
    cdef int p[MAXN]
    cdef int i
    if n > MAXN:
        raise ValueError("size above kernel limit")
    cdef long* acc = <long*> malloc((n + 1) * sizeof(long))
    if acc == NULL:
        raise MemoryError()
    try:
        for i in range(n + 1):
            acc[i] = 0
        for i in range(n):
            p[i] = i
        with nogil:
            while True:
                acc[n - _cycles(p, n)] += 1
                if not _next_perm(p, n):
                    break
        return [acc[i] for i in range(max(n, 1))]
    finally:
        free(acc)
