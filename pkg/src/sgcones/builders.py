"""Constructors for the semigroup families used across the corpus.

Chains and the diamond are semilattices under meet, cyclic groups and the
six-element symmetric group cover the group cases, and the strong
semilattice-of-groups constructor glues groups along a semilattice with
connecting homomorphisms.  The five-element Brandt semigroup serves as the
standard non-Clifford control.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    BadHom,
    BadSemilattice,
    IncoherentHoms,
    MissingHom,
    NotAGroup,
    ValidationError,
)
from .semigroup import FiniteSemigroup, from_table, is_semilattice


def chain(n: int) -> FiniteSemigroup:
    """The n-element chain semilattice 0 > 1 > ... > n-1 under meet (max)."""
    if n < 1:
        raise ValidationError("chain needs at least one element")
    return from_table([[max(i, j) for j in range(n)] for i in range(n)])


def diamond() -> FiniteSemigroup:
    """The four-element semilattice with top 0, incomparable 1 and 2, bottom 3."""
    table = [
        [0, 1, 2, 3],
        [1, 1, 3, 3],
        [2, 3, 2, 3],
        [3, 3, 3, 3],
    ]
    return from_table(table)


def cyclic_group(n: int) -> FiniteSemigroup:
    """The cyclic group of order n under addition mod n."""
    if n < 1:
        raise ValidationError("cyclic group needs at least one element")
    return from_table([[(i + j) % n for j in range(n)] for i in range(n)])


def symmetric_group3() -> FiniteSemigroup:
    """The symmetric group on three points; element i*j applies i then j."""
    perms = list(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(q[p[x]] for x in range(3))] for q in perms] for p in perms
    ]
    labels = ["".join(map(str, p)) for p in perms]
    return from_table(table, labels)


def left_zero(n: int) -> FiniteSemigroup:
    """The n-element left zero semigroup, x*y = x."""
    if n < 1:
        raise ValidationError("left zero semigroup needs at least one element")
    return from_table([[i] * n for i in range(n)])


def brandt_b2() -> FiniteSemigroup:
    """The five-element Brandt semigroup.

    Element 0 is the zero and 1..4 stand for the pairs (1,1), (1,2), (2,1),
    (2,2) with (i,j)(k,l) = (i,l) when j = k and 0 otherwise.
    """
    pairs = {1: (1, 1), 2: (1, 2), 3: (2, 1), 4: (2, 2)}
    index = {v: k for k, v in pairs.items()}
    table = [[0] * 5 for _ in range(5)]
    for a, (i, j) in pairs.items():
        for b, (k, l) in pairs.items():
            if j == k:
                table[a][b] = index[(i, l)]
    labels = ["0", "(1,1)", "(1,2)", "(2,1)", "(2,2)"]
    return from_table(table, labels)


def _group_identity(G: FiniteSemigroup, path: str) -> int:
    n = G.order
    for e in range(n):
        if all(G.table[e][x] == x and G.table[x][e] == x for x in range(n)):
            return e
    raise NotAGroup(f"{path}: no identity element")


def _check_group(G: FiniteSemigroup, path: str) -> int:
    e = _group_identity(G, path)
    for x in range(G.order):
        if not any(
            G.table[x][y] == e and G.table[y][x] == e for y in range(G.order)
        ):
            raise NotAGroup(f"{path}: element {x} has no inverse")
    return e


@dataclass
class SLGSpec:
    """A strong semilattice of groups: base semilattice, one group per
    vertex, and a connecting homomorphism for every comparable pair.

    homs maps (alpha, beta) with alpha above beta to the image list of
    G_alpha in G_beta.  Self maps default to the identity and, when given,
    must be the identity.  hom_paths optionally carries source locations
    for error messages (set when parsed from JSON).
    """

    semilattice: FiniteSemigroup
    groups: tuple
    homs: dict
    hom_paths: dict = field(default_factory=dict)

    def __post_init__(self):
        self.groups = tuple(self.groups)
        self.homs = {
            (int(a), int(b)): tuple(int(v) for v in m)
            for (a, b), m in self.homs.items()
        }

    def _path(self, pair) -> str:
        return self.hom_paths.get(pair, f"hom ({pair[0]}, {pair[1]})")

    def validate(self) -> None:
        """Raise the first structural violation, if any."""
        Y = self.semilattice
        k = Y.order
        if not is_semilattice(Y):
            raise BadSemilattice(
                "semilattice: table is not a commutative idempotent semigroup"
            )
        if len(self.groups) != k:
            raise ValidationError(
                f"groups: expected {k} group tables, got {len(self.groups)}"
            )
        for v, G in enumerate(self.groups):
            _check_group(G, f"groups[{v}]")

        comparable = [
            (a, b) for a in range(k) for b in range(k) if Y.table[a][b] == b
        ]
        strict = [(a, b) for (a, b) in comparable if a != b]
        for pair in self.homs:
            a, b = pair
            if not (0 <= a < k and 0 <= b < k):
                raise BadHom(f"{self._path(pair)}: vertex out of range")
            if Y.table[a][b] != b:
                raise BadHom(
                    f"{self._path(pair)}: vertex {a} is not above vertex {b}"
                )
        for pair in strict:
            if pair not in self.homs:
                raise MissingHom(
                    f"homs: missing connecting map for pair ({pair[0]}, {pair[1]})"
                )
        # self maps, when present, must be identities; fill in the rest
        for v in range(k):
            pair = (v, v)
            ident = tuple(range(self.groups[v].order))
            if pair in self.homs:
                if self.homs[pair] != ident:
                    raise BadHom(
                        f"{self._path(pair)}: self map at vertex {v} "
                        "is not the identity"
                    )
            else:
                self.homs[pair] = ident
        for pair in comparable:
            a, b = pair
            Ga, Gb = self.groups[a], self.groups[b]
            m = self.homs[pair]
            if len(m) != Ga.order:
                raise BadHom(
                    f"{self._path(pair)}: map has {len(m)} entries, "
                    f"expected {Ga.order}"
                )
            if any(not 0 <= v < Gb.order for v in m):
                raise BadHom(f"{self._path(pair)}: image out of range")
            for x in range(Ga.order):
                for y in range(Ga.order):
                    if m[Ga.table[x][y]] != Gb.table[m[x]][m[y]]:
                        raise BadHom(
                            f"{self._path(pair)}: not a homomorphism at "
                            f"({x}, {y})"
                        )
        for a, b in comparable:
            for c in range(k):
                if Y.table[b][c] != c:
                    continue
                mab = self.homs[(a, b)]
                mbc = self.homs[(b, c)]
                mac = self.homs[(a, c)]
                for x in range(self.groups[a].order):
                    if mbc[mab[x]] != mac[x]:
                        raise IncoherentHoms(
                            f"homs: maps for ({a}, {b}), ({b}, {c}) do not "
                            f"compose to the map for ({a}, {c}) at element {x}"
                        )

    def to_json_dict(self) -> dict:
        return {
            "semilattice": [list(r) for r in self.semilattice.table],
            "groups": [[list(r) for r in G.table] for G in self.groups],
            "homs": [
                {"from": a, "to": b, "map": list(self.homs[(a, b)])}
                for (a, b) in sorted(self.homs)
                if a != b
            ],
        }

    @staticmethod
    def from_json_dict(data: dict) -> "SLGSpec":
        if not isinstance(data, dict):
            raise ValidationError("top level: expected an object")
        for key in ("semilattice", "groups", "homs"):
            if key not in data:
                raise ValidationError(f"{key}: missing")
        try:
            Y = from_table(data["semilattice"])
        except ValidationError as exc:
            raise type(exc)(f"semilattice: {exc}")
        except (TypeError, ValueError):
            raise ValidationError("semilattice: expected a table (list of rows)")
        if not isinstance(data["groups"], list):
            raise ValidationError("groups: expected a list")
        groups = []
        for i, tbl in enumerate(data["groups"]):
            try:
                groups.append(from_table(tbl))
            except ValidationError as exc:
                raise type(exc)(f"groups[{i}]: {exc}")
            except (TypeError, ValueError):
                raise ValidationError(f"groups[{i}]: expected a table (list of rows)")
        homs = {}
        paths = {}
        if not isinstance(data["homs"], list):
            raise ValidationError("homs: expected a list")
        for i, entry in enumerate(data["homs"]):
            if not isinstance(entry, dict) or not {"from", "to", "map"} <= set(entry):
                raise ValidationError(
                    f"homs[{i}]: expected an object with from, to, map"
                )
            try:
                pair = (int(entry["from"]), int(entry["to"]))
                image = tuple(int(v) for v in entry["map"])
            except (TypeError, ValueError):
                raise ValidationError(
                    f"homs[{i}]: expected an object with from, to, map"
                )
            if pair in homs:
                raise BadHom(f"homs[{i}]: duplicate map for pair {pair}")
            homs[pair] = image
            paths[pair] = f"homs[{i}].map"
        return SLGSpec(semilattice=Y, groups=tuple(groups), homs=homs, hom_paths=paths)


def trivial_homs(semilattice: FiniteSemigroup, groups) -> dict:
    """Connecting maps sending everything to the target identity."""
    homs = {}
    k = semilattice.order
    for a in range(k):
        for b in range(k):
            if a != b and semilattice.table[a][b] == b:
                e = _group_identity(groups[b], f"groups[{b}]")
                homs[(a, b)] = tuple([e] * groups[a].order)
    return homs


def strong_semilattice_of_groups(spec: SLGSpec) -> FiniteSemigroup:
    """Glue the vertex groups along the semilattice.

    The carrier is the disjoint union of the groups in vertex order; the
    product of a in G_alpha and b in G_beta maps both down to the meet
    vertex and multiplies there.
    """
    spec.validate()
    Y = spec.semilattice
    offsets = []
    total = 0
    for G in spec.groups:
        offsets.append(total)
        total += G.order
    vertex = []
    local = []
    for v, G in enumerate(spec.groups):
        vertex.extend([v] * G.order)
        local.extend(range(G.order))
    table = [[0] * total for _ in range(total)]
    for a in range(total):
        va, xa = vertex[a], local[a]
        for b in range(total):
            vb, xb = vertex[b], local[b]
            m = Y.table[va][vb]
            xm = spec.groups[m].table[spec.homs[(va, m)][xa]][
                spec.homs[(vb, m)][xb]
            ]
            table[a][b] = offsets[m] + xm
    labels = [f"v{vertex[a]}g{local[a]}" for a in range(total)]
    return from_table(table, labels)


_GROUP_BUILDERS = {
    "z1": lambda: cyclic_group(1),
    "z2": lambda: cyclic_group(2),
    "z3": lambda: cyclic_group(3),
    "s3": symmetric_group3,
}


def _slg_pair(top: str, bottom: str, hom: Optional[tuple] = None) -> FiniteSemigroup:
    """Two-vertex strong semilattice of groups over the two-element chain."""
    Y = chain(2)
    groups = (_GROUP_BUILDERS[top](), _GROUP_BUILDERS[bottom]())
    homs = trivial_homs(Y, groups) if hom is None else {(0, 1): tuple(hom)}
    return strong_semilattice_of_groups(SLGSpec(Y, groups, homs))


def clifford5() -> FiniteSemigroup:
    """The five-element Clifford semigroup: z2 over z3 with the trivial map."""
    return _slg_pair("z2", "z3")


def _make_fixtures() -> dict:
    fixtures = {
        "chain1": lambda: chain(1),
        "chain2": lambda: chain(2),
        "c2": lambda: chain(2),
        "chain3": lambda: chain(3),
        "chain4": lambda: chain(4),
        "diamond": diamond,
        "z1": lambda: cyclic_group(1),
        "z2": lambda: cyclic_group(2),
        "z3": lambda: cyclic_group(3),
        "s3": symmetric_group3,
        "cl5": clifford5,
        "b2": brandt_b2,
        "lz2": lambda: left_zero(2),
    }
    for top in _GROUP_BUILDERS:
        for bottom in _GROUP_BUILDERS:
            name = f"slg-{top}-{bottom}"
            fixtures[name] = (
                lambda t=top, b=bottom: _slg_pair(t, b)
            )
    fixtures["slg-z2-z2-id"] = lambda: _slg_pair("z2", "z2", hom=(0, 1))
    fixtures["slg-z3-z3-inv"] = lambda: _slg_pair("z3", "z3", hom=(0, 2, 1))
    fixtures["slg-s3-z2-sgn"] = lambda: _slg_pair("s3", "z2", hom=(0, 1, 1, 0, 0, 1))
    fixtures["slg-s3-s3-id"] = lambda: _slg_pair("s3", "s3", hom=(0, 1, 2, 3, 4, 5))
    return fixtures


FIXTURES = _make_fixtures()


def fixture(name: str) -> FiniteSemigroup:
    """Build a named corpus member; raises with the known names on a miss."""
    try:
        build = FIXTURES[name]
    except KeyError:
        known = ", ".join(FIXTURES)
        raise ValidationError(f"unknown fixture {name!r}; known: {known}")
    return build()
