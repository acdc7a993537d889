"""Finite semigroups as multiplication tables.

Elements are the dense indices 0..n-1; labels, when present, are purely
presentational.  Green's relations are computed from principal ideals held
as bit masks, and the structural predicates (regular, inverse, Clifford)
sit on top of the same caches.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Optional, Sequence

from . import kernels
from .errors import (
    BadLabels,
    NotAssociative,
    NotClosed,
    SearchBudgetExceeded,
    ValidationError,
)

DEFAULT_SEARCH_BUDGET = 10_000_000


class FiniteSemigroup:
    """An order-n semigroup given by an n by n product table over 0..n-1."""

    def __init__(self, table, labels=None, *, validate=True):
        rows = tuple(tuple(int(v) for v in row) for row in table)
        n = len(rows)
        if n == 0:
            raise ValidationError("empty table")
        for a, row in enumerate(rows):
            if len(row) != n:
                raise NotClosed(f"row {a} has length {len(row)}, expected {n}")
            for b, v in enumerate(row):
                if not 0 <= v < n:
                    raise NotClosed(f"entry [{a}][{b}] = {v} is outside [0, {n})")
        self.order = n
        self.table = rows
        self.labels = _check_labels(labels, n)
        self._flat = array("i", [v for row in rows for v in row])
        if validate:
            bad = kernels.first_nonassociative(n, self._flat)
            if bad is not None:
                a, b, c = bad
                left = rows[rows[a][b]][c]
                right = rows[a][rows[b][c]]
                raise NotAssociative(a, b, c, left, right)

    def mul(self, a, b):
        return self.table[a][b]

    def label(self, a):
        return self.labels[a] if self.labels else str(a)

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"


def _check_labels(labels, n):
    if labels is None:
        return None
    labels = tuple(str(x) for x in labels)
    if len(labels) != n:
        raise BadLabels(f"{len(labels)} labels for {n} elements")
    for i, lab in enumerate(labels):
        if not lab or any(ch.isspace() for ch in lab):
            raise BadLabels(f"label {i} ({lab!r}) is empty or contains whitespace")
    return labels


def from_table(table, labels=None) -> FiniteSemigroup:
    """Validate a multiplication table (closure, associativity) and wrap it."""
    return FiniteSemigroup(table, labels, validate=True)


@dataclass(frozen=True)
class GreenStructure:
    """Green's relations of a finite semigroup.

    lclass/rclass/hclass/dclass map each element to its class id; class ids
    are assigned by the least member.  lorder holds the pairs (i, j) with
    the principal left ideal of class i contained in that of class j, and
    the ideal caches hold Sa and aS as bit masks, without the element
    itself adjoined.
    """

    lclass: tuple
    rclass: tuple
    hclass: tuple
    dclass: tuple
    lclasses: tuple
    rclasses: tuple
    hclasses: tuple
    dclasses: tuple
    lorder: frozenset
    left_ideals: tuple
    right_ideals: tuple

    def l_leq(self, i, j):
        """Whether L-class i sits below L-class j in the ideal order."""
        return (i, j) in self.lorder


def _partition_by(keys):
    ids = {}
    classes = []
    assignment = []
    for a, k in enumerate(keys):
        if k not in ids:
            ids[k] = len(classes)
            classes.append([])
        i = ids[k]
        classes[i].append(a)
        assignment.append(i)
    return tuple(assignment), tuple(tuple(c) for c in classes)


def green(S: FiniteSemigroup) -> GreenStructure:
    """Compute (and cache) Green's relations for S."""
    cached = getattr(S, "_green", None)
    if cached is not None:
        return cached
    n = S.order
    left = kernels.left_ideal_masks(n, S._flat)
    right = kernels.right_ideal_masks(n, S._flat)
    bits = [1 << a for a in range(n)]
    l1 = [left[a] | bits[a] for a in range(n)]
    r1 = [right[a] | bits[a] for a in range(n)]
    lclass, lclasses = _partition_by(l1)
    rclass, rclasses = _partition_by(r1)
    hclass, hclasses = _partition_by(list(zip(l1, r1)))

    # D is the join of L and R, computed by uniting both partitions.
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for cls in lclasses:
        for m in cls[1:]:
            union(cls[0], m)
    for cls in rclasses:
        for m in cls[1:]:
            union(cls[0], m)
    dclass, dclasses = _partition_by([find(a) for a in range(n)])

    reps = [cls[0] for cls in lclasses]
    lorder = frozenset(
        (i, j)
        for i, a in enumerate(reps)
        for j, b in enumerate(reps)
        if l1[a] | l1[b] == l1[b]
    )
    out = GreenStructure(
        lclass=lclass,
        rclass=rclass,
        hclass=hclass,
        dclass=dclass,
        lclasses=lclasses,
        rclasses=rclasses,
        hclasses=hclasses,
        dclasses=dclasses,
        lorder=lorder,
        left_ideals=tuple(left),
        right_ideals=tuple(right),
    )
    S._green = out
    return out


def idempotents(S: FiniteSemigroup) -> frozenset:
    """The set of elements with e*e = e."""
    cached = getattr(S, "_idem", None)
    if cached is None:
        cached = frozenset(a for a in range(S.order) if S.table[a][a] == a)
        S._idem = cached
    return cached


def principal_left_ideal(S: FiniteSemigroup, a: int) -> frozenset:
    """Sa = {x*a : x in S}."""
    mask = green(S).left_ideals[a]
    return frozenset(v for v in range(S.order) if mask >> v & 1)


def principal_right_ideal(S: FiniteSemigroup, a: int) -> frozenset:
    """aS = {a*x : x in S}."""
    mask = green(S).right_ideals[a]
    return frozenset(v for v in range(S.order) if mask >> v & 1)


def is_regular(S: FiniteSemigroup) -> bool:
    """Every a has some x with a*x*a = a."""
    cached = getattr(S, "_regular", None)
    if cached is None:
        cached = all(w >= 0 for w in kernels.regularity_witnesses(S.order, S._flat))
        S._regular = cached
    return cached


def clifford_violation(S: FiniteSemigroup) -> Optional[tuple]:
    """First (e, x) with e idempotent but not central, or None."""
    return kernels.centrality_violation(S.order, S._flat)


def is_clifford(S: FiniteSemigroup) -> bool:
    """Regular with every idempotent central."""
    return is_regular(S) and clifford_violation(S) is None


def is_inverse(S: FiniteSemigroup) -> bool:
    """Regular with commuting idempotents."""
    if not is_regular(S):
        return False
    E = sorted(idempotents(S))
    T = S.table
    return all(T[e][f] == T[f][e] for e in E for f in E)


def is_clifford_by_dclasses(S: FiniteSemigroup) -> bool:
    """Cross-check: regular and every D-class holds exactly one idempotent."""
    if not is_regular(S):
        return False
    E = idempotents(S)
    return all(sum(1 for m in cls if m in E) == 1 for cls in green(S).dclasses)


def is_commutative(S: FiniteSemigroup) -> bool:
    T = S.table
    n = S.order
    return all(T[a][b] == T[b][a] for a in range(n) for b in range(a + 1, n))


def is_semilattice(S: FiniteSemigroup) -> bool:
    """Commutative with every element idempotent."""
    return len(idempotents(S)) == S.order and is_commutative(S)


def opposite(S: FiniteSemigroup) -> FiniteSemigroup:
    """The same elements under the reversed product (transposed table)."""
    cached = getattr(S, "_opposite", None)
    if cached is None:
        transposed = tuple(map(tuple, zip(*S.table)))
        # associativity transfers, so validation is skipped here
        cached = FiniteSemigroup(transposed, S.labels, validate=False)
        cached._opposite = S
        S._opposite = cached
    return cached


def element_order(S: FiniteSemigroup, a: int) -> tuple:
    """Index and period of the cyclic subsemigroup generated by a."""
    seen = {a: 1}
    x = a
    k = 1
    while True:
        x = S.table[x][a]
        k += 1
        if x in seen:
            return (seen[x], k - seen[x])
        seen[x] = k


def _profiles(S):
    g = green(S)
    E = idempotents(S)
    n = S.order
    bits = [1 << a for a in range(n)]
    out = []
    for a in range(n):
        lc, rc = g.lclass[a], g.rclass[a]
        out.append(
            (
                a in E,
                element_order(S, a),
                (g.left_ideals[a] | bits[a]).bit_count(),
                (g.right_ideals[a] | bits[a]).bit_count(),
                len(g.lclasses[lc]),
                len(g.rclasses[rc]),
                len(g.hclasses[g.hclass[a]]),
                len(g.dclasses[g.dclass[a]]),
                sum(1 for m in g.lclasses[lc] if m in E),
                sum(1 for m in g.rclasses[rc] if m in E),
            )
        )
    return out


def verify_morphism(S, T, mapping, anti: bool = False) -> bool:
    """Check that mapping carries products of S to (reversed) products of T."""
    n = S.order
    if len(mapping) != n or any(not 0 <= v < T.order for v in mapping):
        return False
    ts = T.table
    ss = S.table
    for a in range(n):
        fa = mapping[a]
        for b in range(n):
            fb = mapping[b]
            image = ts[fb][fa] if anti else ts[fa][fb]
            if mapping[ss[a][b]] != image:
                return False
    return True


def find_isomorphism(
    S: FiniteSemigroup,
    T: FiniteSemigroup,
    *,
    anti: bool = False,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> Optional[list]:
    """Backtracking search for an isomorphism S -> T.

    With anti=True the search targets opposite(T), which makes the returned
    map an anti-isomorphism onto T itself.  Candidates are pruned by
    invariant profiles (idempotency, element order, ideal and class sizes).
    Elements are assigned in ascending index order with ascending
    candidates, so the first witness found is the lexicographically least.
    Raises SearchBudgetExceeded when the node budget runs out.
    """
    if anti:
        T = opposite(T)
    n = S.order
    if n != T.order:
        return None
    sprof = _profiles(S)
    tprof = _profiles(T)
    by_profile = {}
    for v, p in enumerate(tprof):
        by_profile.setdefault(p, []).append(v)
    if sorted(sprof) != sorted(tprof):
        return None

    ss, ts = S.table, T.table
    phi = [-1] * n
    used = [False] * n
    nodes = 0

    def consistent(k):
        for a in range(k + 1):
            for x, y in ((a, k), (k, a)):
                p = ss[x][y]
                if p <= k and ts[phi[x]][phi[y]] != phi[p]:
                    return False
        for a in range(k):
            for b in range(k):
                if ss[a][b] == k and ts[phi[a]][phi[b]] != phi[k]:
                    return False
        return True

    def extend(k):
        nonlocal nodes
        if k == n:
            return True
        for v in by_profile.get(sprof[k], ()):
            if used[v]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(
                    f"isomorphism search exceeded {budget} nodes"
                )
            phi[k] = v
            used[v] = True
            if consistent(k) and extend(k + 1):
                return True
            phi[k] = -1
            used[v] = False
        return False

    if extend(0):
        return list(phi)
    return None


def to_table_text(S: FiniteSemigroup) -> str:
    """Serialize to the plain text table format (round-trips exactly)."""
    lines = [str(S.order)]
    lines.extend(" ".join(map(str, row)) for row in S.table)
    if S.labels:
        lines.append("#labels " + " ".join(S.labels))
    return "\n".join(lines) + "\n"


def from_table_text(text: str) -> FiniteSemigroup:
    """Parse the plain text table format: order line, n rows, optional labels."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValidationError("empty table text")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ValidationError(f"first line must be the order, got {lines[0]!r}")
    if len(lines) < n + 1:
        raise ValidationError(f"expected {n} table rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1 : n + 1]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ValidationError(f"bad table row {ln!r}")
        if len(row) != n:
            raise ValidationError(f"row {ln!r} has {len(row)} entries, expected {n}")
        rows.append(row)
    labels = None
    rest = lines[n + 1 :]
    if rest:
        if len(rest) > 1 or not rest[0].startswith("#labels"):
            raise ValidationError("unexpected trailing content after table rows")
        labels = rest[0].split()[1:]
    return from_table(rows, labels)
