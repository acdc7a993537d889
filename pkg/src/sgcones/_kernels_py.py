"""Pure Python table-scan kernels.

Every function here has a compiled twin in _kernels.pyx with identical
semantics; tables arrive as a row-major flat buffer of length n*n.
"""


def first_nonassociative(n, flat):
    """First triple (a, b, c) with (ab)c != a(bc), scanning lexicographically."""
    for a in range(n):
        an = a * n
        for b in range(n):
            ab = flat[an + b]
            abn = ab * n
            bn = b * n
            for c in range(n):
                if flat[abn + c] != flat[an + flat[bn + c]]:
                    return (a, b, c)
    return None


def left_ideal_masks(n, flat):
    """Bit masks of Sa = {x*a : x in S} for every a."""
    bits = [1 << v for v in range(n)]
    masks = []
    for a in range(n):
        mask = 0
        for x in range(n):
            mask |= bits[flat[x * n + a]]
        masks.append(mask)
    return masks


def right_ideal_masks(n, flat):
    """Bit masks of aS = {a*x : x in S} for every a."""
    bits = [1 << v for v in range(n)]
    masks = []
    for a in range(n):
        an = a * n
        mask = 0
        for x in range(n):
            mask |= bits[flat[an + x]]
        masks.append(mask)
    return masks


def regularity_witnesses(n, flat):
    """For each a, the least x with a*x*a = a, or -1 if none exists."""
    out = []
    for a in range(n):
        an = a * n
        w = -1
        for x in range(n):
            if flat[flat[an + x] * n + a] == a:
                w = x
                break
        out.append(w)
    return out


def centrality_violation(n, flat):
    """First pair (e, x) with e idempotent and e*x != x*e, or None."""
    for e in range(n):
        en = e * n
        if flat[en + e] != e:
            continue
        for x in range(n):
            if flat[en + x] != flat[x * n + e]:
                return (e, x)
    return None
