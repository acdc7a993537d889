"""The category of principal left ideals of a finite regular semigroup.

Objects are canonical idempotents, the least idempotent of each L-class,
standing for their ideals.  A morphism (e, u, f) with u in eSf acts on
S*e by right translation x -> x*u; composition chains translations, so
(e, u, f) followed by (f, v, g) is (e, u*v, g).  The right-ideal category
of S is realized as the left-ideal category of the opposite semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotComposable,
    NotInDomain,
    NotInHom,
    NotIncluded,
    NotRegular,
)
from .semigroup import FiniteSemigroup, green, idempotents, is_regular, opposite


@dataclass(frozen=True)
class Morphism:
    """A canonical triple (src, u, dst) between ideal objects."""

    src: int
    u: int
    dst: int

    def triple(self):
        return (self.src, self.u, self.dst)


class NormalCategory:
    """Left-ideal category data for one semigroup; build with build_L/build_R."""

    def __init__(self, base: FiniteSemigroup, side: str):
        if not is_regular(base):
            raise NotRegular("the base semigroup is not regular")
        self.base = base
        self.side = side
        g = green(base)
        E = idempotents(base)
        n = base.order
        T = base.table

        canon = {}
        for cls in g.lclasses:
            cands = [e for e in cls if e in E]
            # regular semigroups have an idempotent in every L-class
            canon[cls[0]] = min(cands)
        self.lcanon = tuple(canon[g.lclasses[g.lclass[a]][0]] for a in range(n))
        self.objects = tuple(sorted(set(self.lcanon)))
        self.obj_pos = {e: i for i, e in enumerate(self.objects)}
        self.object_of = {e: self.lcanon[e] for e in sorted(E)}

        bits = [1 << a for a in range(n)]
        self._ideal_mask = {
            e: g.left_ideals[e] | bits[e] for e in self.objects
        }
        self._leq = frozenset(
            (e, f)
            for e in self.objects
            for f in self.objects
            if self._ideal_mask[e] | self._ideal_mask[f] == self._ideal_mask[f]
        )
        self.strict_pairs = tuple(
            (e, f) for (e, f) in sorted(self._leq) if e != f
        )

        homs = {}
        for e in self.objects:
            for f in self.objects:
                homs[(e, f)] = tuple(
                    sorted({T[T[e][s]][f] for s in range(n)})
                )
        self._homs = homs
        self._hom_sets = {k: frozenset(v) for k, v in homs.items()}
        self._iso_cache = {}

    def ideal_size(self, e: int) -> int:
        return self._ideal_mask[e].bit_count()

    def object_leq(self, e: int, f: int) -> bool:
        """Whether the ideal of e is contained in the ideal of f."""
        return (e, f) in self._leq

    def hom(self, e: int, f: int) -> tuple:
        """The elements u of eSf, each standing for the morphism (e, u, f)."""
        return self._homs[(e, f)]

    def hom_morphisms(self, e: int, f: int) -> tuple:
        return tuple(Morphism(e, u, f) for u in self._homs[(e, f)])

    def all_morphisms(self) -> tuple:
        out = []
        for e in self.objects:
            for f in self.objects:
                out.extend(self.hom_morphisms(e, f))
        return tuple(out)

    def identity(self, e: int) -> Morphism:
        if e not in self.obj_pos:
            raise NotInHom(f"{e} is not an object")
        return Morphism(e, e, e)

    def canonicalize(self, e: int, u: int, f: int) -> Morphism:
        """Normalize a raw triple with idempotent endpoints to object form."""
        T = self.base.table
        if T[e][e] != e:
            raise NotInHom(f"left endpoint {e} is not idempotent")
        if T[f][f] != f:
            raise NotInHom(f"right endpoint {f} is not idempotent")
        if T[T[e][u]][f] != u:
            raise NotInHom(f"{u} is not in {e}S{f}")
        e0 = self.object_of[e]
        f0 = self.object_of[f]
        return Morphism(e0, T[e0][u], f0)

    def compose(self, m1: Morphism, m2: Morphism) -> Morphism:
        if m1.dst != m2.src:
            raise NotComposable(
                f"cannot follow {m1.triple()} with {m2.triple()}"
            )
        return Morphism(m1.src, self.base.table[m1.u][m2.u], m2.dst)

    def inclusion(self, f: int, g: int) -> Morphism:
        """The inclusion morphism of the ideal of f into the ideal of g."""
        if f not in self.obj_pos or g not in self.obj_pos:
            raise NotIncluded(f"{f} or {g} is not an object")
        if (f, g) not in self._leq:
            raise NotIncluded(f"ideal of {f} is not contained in ideal of {g}")
        return Morphism(f, f, g)

    def apply(self, m: Morphism, x: int) -> int:
        """Evaluate the right translation of m at x."""
        if not self._ideal_mask[m.src] >> x & 1:
            raise NotInDomain(f"{x} is not in the ideal of {m.src}")
        return self.base.table[x][m.u]

    def is_iso(self, m: Morphism) -> bool:
        """Invertibility, decided by inverse search over the opposite hom-set."""
        key = m.triple()
        hit = self._iso_cache.get(key)
        if hit is None:
            T = self.base.table
            hit = any(
                T[m.u][v] == m.src and T[v][m.u] == m.dst
                for v in self._homs[(m.dst, m.src)]
            )
            self._iso_cache[key] = hit
        return hit

    def objects_isomorphic(self, e: int, f: int) -> bool:
        return any(self.is_iso(Morphism(e, u, f)) for u in self._homs[(e, f)])

    def epimorphic_part(self, m: Morphism) -> tuple:
        """Split m into a surjective part followed by an inclusion."""
        h0 = self.lcanon[m.u]
        return (Morphism(m.src, m.u, h0), Morphism(h0, h0, m.dst))

    def to_json_dict(self) -> dict:
        return {
            "side": self.side,
            "order": self.base.order,
            "objects": list(self.objects),
            "inclusions": [list(p) for p in self.strict_pairs],
            "homs": [
                {"src": e, "dst": f, "elements": list(self.hom(e, f))}
                for e in self.objects
                for f in self.objects
            ],
        }

    def to_dot(self) -> str:
        """Graphviz rendering: objects as nodes, morphisms as labeled edges,
        inclusions dashed."""
        name = "left_ideal_category" if self.side == "left" else "right_ideal_category"
        fmt = "S*{e}" if self.side == "left" else "{e}*S"
        lines = [f"digraph {name} {{", "  rankdir=LR;"]
        for e in self.objects:
            ideal = fmt.format(e=e)
            lines.append(f'  "{e}" [label="{ideal} ({self.ideal_size(e)})"];')
        for e in self.objects:
            for f in self.objects:
                for u in self.hom(e, f):
                    style = ""
                    if u == e and e != f:
                        style = ", style=dashed"
                    lines.append(f'  "{e}" -> "{f}" [label="{u}"{style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_L(S: FiniteSemigroup) -> NormalCategory:
    """The category of principal left ideals of S."""
    return NormalCategory(S, side="left")


def build_R(S: FiniteSemigroup) -> NormalCategory:
    """The category of principal right ideals of S, realized over opposite(S)."""
    return NormalCategory(opposite(S), side="right")


def check_prop2(C: NormalCategory) -> dict:
    """Isomorphic objects are identical (holds over a Clifford base)."""
    witness = None
    for e in C.objects:
        for f in C.objects:
            if e != f and C.objects_isomorphic(e, f):
                witness = [e, f]
                break
        if witness:
            break
    return {
        "name": "prop2",
        "passed": witness is None,
        "objects": len(C.objects),
        "witness": witness,
    }


def check_prop3(C: NormalCategory) -> dict:
    """Distinct raw triples with idempotent endpoints stay distinct after
    canonicalization (holds over a Clifford base)."""
    E = sorted(idempotents(C.base))
    T = C.base.table
    seen = {}
    total = 0
    collision = None
    for e in E:
        for f in E:
            hom_raw = sorted({T[T[e][s]][f] for s in range(C.base.order)})
            for u in hom_raw:
                total += 1
                m = C.canonicalize(e, u, f)
                prev = seen.get(m)
                if prev is not None and prev != (e, u, f):
                    collision = [list(prev), [e, u, f]]
                    break
                seen[m] = (e, u, f)
            if collision:
                break
        if collision:
            break
    return {
        "name": "prop3",
        "passed": collision is None,
        "triples": total,
        "witness": collision,
    }
