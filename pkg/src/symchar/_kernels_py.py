"""Pure-Python permutation kernels.

Same API as the compiled ``_kernels`` extension.  Permutations are 0-based
sequences of images; composition ``(a*b)[x] = a[b[x]]`` (right factor first).
"""

from itertools import permutations


def cycle_count(p):
    n = len(p)
    seen = [False] * n
    count = 0
    for i in range(n):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return count


def cycle_labels(p):
    n = len(p)
    lab = [-1] * n
    c = 0
    for i in range(n):
        if lab[i] < 0:
            j = i
            while lab[j] < 0:
                lab[j] = c
                j = p[j]
            c += 1
    return lab


def compose(a, b):
    return [a[x] for x in b]


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return inv


def kappa_pair_counts(pi):
    """``{(kappa(s1), kappa(s2)): count}`` over all ``s1 * s2 = pi``."""
    n = len(pi)
    out = {}
    for s1 in permutations(range(n)):
        inv1 = [0] * n
        for i, x in enumerate(s1):
            inv1[x] = i
        s2 = [inv1[x] for x in pi]
        key = (cycle_count(s1), cycle_count(s2))
        out[key] = out.get(key, 0) + 1
    return out


def nf_reduce(s1, s2):
    """Move transpositions from ``s1`` to ``s2`` until s1-cycles sit inside s2-cycles."""
    s1 = list(s1)
    s2 = list(s2)
    n = len(s1)
    while True:
        l1 = cycle_labels(s1)
        l2 = cycle_labels(s2)
        pair = None
        for a in range(n):
            for b in range(a + 1, n):
                if l1[a] == l1[b] and l2[a] != l2[b]:
                    pair = (a, b)
                    break
            if pair:
                break
        if pair is None:
            return s1, s2
        a, b = pair
        s1[a], s1[b] = s1[b], s1[a]
        for x in range(n):
            if s2[x] == a:
                s2[x] = b
            elif s2[x] == b:
                s2[x] = a


def nf_check(s1, s2):
    """True iff the reduced pair satisfies every normal-form postcondition."""
    n = len(s1)
    pi = compose(s1, s2)
    r1, r2 = nf_reduce(s1, s2)
    if compose(r1, r2) != pi:
        return False
    len1, len2 = n - cycle_count(s1), n - cycle_count(s2)
    rl1, rl2 = n - cycle_count(r1), n - cycle_count(r2)
    if rl1 + rl2 != len1 + len2:
        return False
    if rl2 != (n - cycle_count(compose(r2, inverse(s2)))) + len2:
        return False
    lab = cycle_labels(r2)
    if any(lab[x] != lab[r1[x]] for x in range(n)):
        return False
    return cycle_count(r2) <= cycle_count(pi)


def normal_form_sweep(n):
    """Check the normal form for every factorization of every ``pi`` in ``S_n``.

    Returns ``(pairs_checked, violations)``.
    """
    checked = 0
    bad = 0
    for s1 in permutations(range(n)):
        for s2 in permutations(range(n)):
            checked += 1
            if not nf_check(s1, s2):
                bad += 1
    return checked, bad


def cycle_product_counts(omega):
    """``counts[b]`` = number of full cycles ``c`` with ``kappa(c * omega) == b``."""
    n = len(omega)
    counts = [0] * (n + 1)
    if n == 0:
        return counts
    if n == 1:
        counts[1] = 1
        return counts
    c = [0] * n
    for rest in permutations(range(1, n)):
        order = (0,) + rest
        for i in range(n):
            c[order[i]] = order[(i + 1) % n]
        counts[cycle_count([c[x] for x in omega])] += 1
    return counts


def length_distribution(n):
    """``counts[i]`` = number of permutations of ``S_n`` with ``n - kappa == i``."""
    counts = [0] * max(n, 1)
    for p in permutations(range(n)):
        counts[n - cycle_count(p)] += 1
    return counts
