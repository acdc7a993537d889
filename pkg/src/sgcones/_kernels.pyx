# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled table-scan kernels, semantics identical to _kernels_py."""


def first_nonassociative(int n, int[::1] flat):
    """First triple (a, b, c) with (ab)c != a(bc), scanning lexicographically."""
    cdef int a, b, c, ab
    for a in range(n):
        for b in range(n):
            ab = flat[a * n + b]
            for c in range(n):
                if flat[ab * n + c] != flat[a * n + flat[b * n + c]]:
                    return (a, b, c)
    return None


def left_ideal_masks(int n, int[::1] flat):
    """Bit masks of Sa = {x*a : x in S} for every a."""
    cdef int a, x
    bits = [1 << v for v in range(n)]
    masks = []
    for a in range(n):
        mask = 0
        for x in range(n):
            mask |= bits[flat[x * n + a]]
        masks.append(mask)
    return masks


def right_ideal_masks(int n, int[::1] flat):
    """Bit masks of aS = {a*x : x in S} for every a."""
    cdef int a, x
    bits = [1 << v for v in range(n)]
    masks = []
    for a in range(n):
        mask = 0
        for x in range(n):
            mask |= bits[flat[a * n + x]]
        masks.append(mask)
    return masks


def regularity_witnesses(int n, int[::1] flat):
    """For each a, the least x with a*x*a = a, or -1 if none exists."""
    cdef int a, x, w
    out = []
    for a in range(n):
        w = -1
        for x in range(n):
            if flat[flat[a * n + x] * n + a] == a:
                w = x
                break
        out.append(w)
    return out


def centrality_violation(int n, int[::1] flat):
    """First pair (e, x) with e idempotent and e*x != x*e, or None."""
    cdef int e, x
    for e in range(n):
        if flat[e * n + e] != e:
            continue
        for x in range(n):
            if flat[e * n + x] != flat[x * n + e]:
                return (e, x)
    return None
