"""Normal cones over the left-ideal category and the semigroup they form.

A normal cone with apex S*d picks one morphism into the apex from every
object, consistently with ideal inclusions, and is isomorphism-bearing on
at least one component.  Right translation by any element a gives the
principal cone of a; cones multiply by composing with the surjective part
of the second cone's component at the first cone's apex, and the resulting
semigroup is the target of the canonical embedding a -> principal cone
of a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Union

from .category import Morphism, NormalCategory, build_L
from .errors import EnumerationBudgetExceeded, MixedApex, SgconesError
from .kernels import first_nonassociative, regularity_witnesses
from .semigroup import FiniteSemigroup, is_regular

DEFAULT_ENUM_BUDGET = 10_000_000


@dataclass(frozen=True)
class NormalCone:
    """Apex object plus one component morphism per object, in object order."""

    apex: int
    components: tuple

    def key(self):
        return (self.apex, tuple(m.u for m in self.components))

    def component_map(self, C: NormalCategory) -> dict:
        return dict(zip(C.objects, self.components))


@dataclass(frozen=True)
class ConeCheck:
    """Validation outcome; condition and witness name the first violation."""

    ok: bool
    condition: Optional[str]
    witness: Optional[tuple]
    message: str

    def __bool__(self):
        return self.ok


def validate_cone(
    C: NormalCategory, candidate: Union[NormalCone, Mapping]
) -> ConeCheck:
    """Check a component assignment against the cone conditions.

    The three conditions are reported in order: totality (a well-formed
    component at every object), compatibility with every ideal inclusion,
    and the existence of an isomorphism component.  Components that
    disagree on their destination raise MixedApex.
    """
    if isinstance(candidate, NormalCone):
        comp = dict(zip(C.objects, candidate.components))
    else:
        comp = dict(candidate)
    apexes = {m.dst for m in comp.values()}
    if len(apexes) > 1:
        raise MixedApex(f"components name several apexes: {sorted(apexes)}")

    for e in C.objects:
        m = comp.get(e)
        if m is None:
            return ConeCheck(False, "totality", (e,), f"no component at {e}")
        if m.src != e:
            return ConeCheck(
                False, "totality", (e,), f"component at {e} starts at {m.src}"
            )
        if m.u not in C._hom_sets[(e, m.dst)]:
            return ConeCheck(
                False,
                "totality",
                (e,),
                f"component at {e} is not a morphism into {m.dst}",
            )

    T = C.base.table
    for f, g in C.strict_pairs:
        if T[f][comp[g].u] != comp[f].u:
            return ConeCheck(
                False,
                "compatibility",
                (f, g),
                f"restricting the component at {g} to {f} misses the "
                f"component at {f}",
            )

    if not any(C.is_iso(m) for m in comp.values()):
        return ConeCheck(
            False, "isomorphism", None, "no component is an isomorphism"
        )
    return ConeCheck(True, None, None, "ok")


def principal_cone(C: NormalCategory, a: int) -> NormalCone:
    """The cone of right translation by a; its apex is the ideal of a."""
    T = C.base.table
    apex = C.lcanon[a]
    comps = tuple(Morphism(e, T[e][a], apex) for e in C.objects)
    return NormalCone(apex, comps)


def enumerate_cones(
    C: NormalCategory, budget: int = DEFAULT_ENUM_BUDGET
) -> tuple:
    """All normal cones, grouped by apex and sorted within each group.

    Backtracks over component choices one apex at a time, visiting objects
    with larger ideals first so that choices force the components at every
    strictly smaller object; branches die as soon as the forced values
    conflict or no isomorphism component remains possible.  Raises
    EnumerationBudgetExceeded after `budget` attempted assignments for a
    single apex.
    """
    out = []
    for d in C.objects:
        out.extend(_cones_with_apex(C, d, budget))
    return tuple(out)


def _cones_with_apex(C: NormalCategory, d: int, budget: int):
    objs = C.objects
    T = C.base.table
    cand = {e: C.hom(e, d) for e in objs}
    iso = {
        e: frozenset(u for u in cand[e] if C.is_iso(Morphism(e, u, d)))
        for e in objs
    }
    iso_objs = tuple(e for e in objs if iso[e])
    if not iso_objs:
        return []

    seq = sorted(objs, key=lambda e: (-C.ideal_size(e), e))
    below = {
        g: tuple(e for e in objs if e != g and C.object_leq(e, g)) for g in objs
    }
    assigned = {}
    found = []
    visited = 0

    def alive():
        for e in iso_objs:
            u = assigned.get(e)
            if u is None or u in iso[e]:
                return True
        return False

    def rec(i):
        nonlocal visited
        if not alive():
            return
        if i == len(seq):
            found.append(dict(assigned))
            return
        g = seq[i]
        if g in assigned:
            rec(i + 1)
            return
        for u in cand[g]:
            visited += 1
            if visited > budget:
                raise EnumerationBudgetExceeded(
                    f"apex {d}: more than {budget} assignments visited"
                )
            news = [g]
            assigned[g] = u
            ok = True
            for e in below[g]:
                forced = T[e][u]
                prev = assigned.get(e)
                if prev is None:
                    assigned[e] = forced
                    news.append(e)
                elif prev != forced:
                    ok = False
                    break
            if ok:
                rec(i + 1)
            for e in news:
                del assigned[e]

    rec(0)
    cones = [
        NormalCone(d, tuple(Morphism(e, comp[e], d) for e in objs))
        for comp in found
    ]
    cones.sort(key=lambda c: c.key())
    return cones


def cone_product(C: NormalCategory, gamma: NormalCone, delta: NormalCone) -> NormalCone:
    """Compose every component of gamma with the surjective part of delta's
    component at gamma's apex."""
    at_apex = delta.components[C.obj_pos[gamma.apex]]
    epi, _ = C.epimorphic_part(at_apex)
    comps = tuple(C.compose(m, epi) for m in gamma.components)
    return NormalCone(epi.dst, comps)


@dataclass(frozen=True)
class TLSemigroup:
    """The semigroup of all normal cones over one category.

    cones fixes the element order, semigroup is the validated product
    table over cone indices, and principal_index maps each base element a
    to the index of its principal cone.
    """

    category: NormalCategory
    cones: tuple
    semigroup: FiniteSemigroup
    principal_index: tuple


def build_TL(C: NormalCategory, budget: int = DEFAULT_ENUM_BUDGET) -> TLSemigroup:
    """Enumerate the cones and realize their product table as a semigroup."""
    cones = enumerate_cones(C, budget)
    index = {c.key(): i for i, c in enumerate(cones)}
    rows = []
    for g in cones:
        row = []
        for d in cones:
            p = cone_product(C, g, d)
            j = index.get(p.key())
            if j is None:
                raise SgconesError(
                    "cone product escaped the enumerated set, enumeration bug"
                )
            row.append(j)
        rows.append(row)
    sg = FiniteSemigroup(rows, validate=True)
    if not is_regular(sg):
        raise SgconesError("cone semigroup is not regular, construction bug")
    principal = []
    for a in range(C.base.order):
        j = index.get(principal_cone(C, a).key())
        if j is None:
            raise SgconesError(
                f"principal cone of {a} missing from enumeration, bug"
            )
        principal.append(j)
    return TLSemigroup(
        category=C, cones=cones, semigroup=sg, principal_index=tuple(principal)
    )


def principal_witness(C: NormalCategory, cone: NormalCone) -> Optional[int]:
    """The least a whose principal cone equals the given cone, if any."""
    key = cone.key()
    for a in range(C.base.order):
        if principal_cone(C, a).key() == key:
            return a
    return None


def check_principal_homomorphism(C: NormalCategory) -> dict:
    """Products of principal cones track products in the base, exhaustively."""
    n = C.base.order
    T = C.base.table
    witness = None
    for a in range(n):
        pa = principal_cone(C, a)
        for b in range(n):
            lhs = cone_product(C, pa, principal_cone(C, b))
            rhs = principal_cone(C, T[a][b])
            if lhs.key() != rhs.key():
                witness = [a, b]
                break
        if witness:
            break
    return {"name": "cone-hom-law", "passed": witness is None, "pairs": n * n,
            "witness": witness}


def verify_prop4(C: NormalCategory, budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """Every normal cone is principal (holds over a Clifford base)."""
    cones = enumerate_cones(C, budget)
    principal_keys = {
        principal_cone(C, a).key() for a in range(C.base.order)
    }
    nonprincipal = [c for c in cones if c.key() not in principal_keys]
    return {
        "name": "prop4",
        "passed": not nonprincipal,
        "cones": len(cones),
        "principal": len(principal_keys),
        "nonprincipal": [cone_json(C, c) for c in nonprincipal],
    }


def verify_prop5(C: NormalCategory) -> dict:
    """Distinct elements give distinct principal cones (Clifford base)."""
    groups = {}
    for a in range(C.base.order):
        groups.setdefault(principal_cone(C, a).key(), []).append(a)
    collisions = sorted(v for v in groups.values() if len(v) > 1)
    return {
        "name": "prop5",
        "passed": not collisions,
        "collisions": collisions,
    }


def verify_theorem6(S: FiniteSemigroup, budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """The principal-cone map is an isomorphism onto the cone semigroup
    (holds exactly over a Clifford base)."""
    C = build_L(S)
    tl = build_TL(C, budget)
    n = S.order
    pi = tl.principal_index
    T = tl.semigroup.table
    hom_witness = None
    for a in range(n):
        for b in range(n):
            if T[pi[a]][pi[b]] != pi[S.table[a][b]]:
                hom_witness = [a, b]
                break
        if hom_witness:
            break
    injective = len(set(pi)) == n
    surjective = set(pi) == set(range(len(tl.cones)))
    passed = hom_witness is None and injective and surjective
    return {
        "name": "theorem6",
        "passed": passed,
        "isomorphism": passed,
        "homomorphism": hom_witness is None,
        "injective": injective,
        "surjective": surjective,
        "order": n,
        "tl_order": len(tl.cones),
        "witness": hom_witness,
    }


def verify_tl_wellformed(C: NormalCategory, budget: int = DEFAULT_ENUM_BUDGET) -> dict:
    """The cone product table is associative and regular, re-checked
    explicitly rather than trusted from construction."""
    tl = build_TL(C, budget)
    T = tl.semigroup
    bad = first_nonassociative(T.order, T._flat)
    witnesses = regularity_witnesses(T.order, T._flat)
    regular = all(w >= 0 for w in witnesses)
    return {
        "name": "tl-wellformed",
        "passed": bad is None and regular,
        "tl_order": T.order,
        "associative": bad is None,
        "regular": regular,
        "witness": list(bad) if bad is not None else None,
    }


def cone_json(C: NormalCategory, cone: NormalCone) -> dict:
    return {
        "apex": cone.apex,
        "components": [list(m.triple()) for m in cone.components],
        "principal": principal_witness(C, cone) is not None,
        "witness": principal_witness(C, cone),
    }


def cones_to_json(C: NormalCategory, cones) -> dict:
    return {
        "side": C.side,
        "order": C.base.order,
        "objects": list(C.objects),
        "cones": [cone_json(C, c) for c in cones],
    }
