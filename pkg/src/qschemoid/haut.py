"""Endomorphism monoids, their quotient by homotopy, and the group of self-homotopy equivalences."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .catalog import cyclic_group, dihedral_group, klein_four_group, symmetric_group
from .constructors import is_isomorphism
from .errors import NotAutomorphism, SearchCapExceeded
from .fincat import FinGroup, Functor, validate_functor, validate_group
from .homotopy import HomotopyGraph, enumerate_morphisms, thin_homotopy_criterion
from .schemoid import QSchemoid, SchemoidMorphism, identity_morphism, thin_morphism
from .search import DEFAULT_LIMITS, SearchLimits

# haut groups are ordinary finite groups given by a table
FiniteGroup = FinGroup


@dataclass(frozen=True)
class FiniteMonoid:
    elements: tuple
    table: tuple[tuple[int, ...], ...]
    identity: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def is_associative(self) -> bool:
        n, t = self.order, self.table
        return all(t[t[i][j]][k] == t[i][t[j][k]]
                   for i in range(n) for j in range(n) for k in range(n))

    def units(self) -> list[int]:
        """Elements with a two-sided inverse (one-sided inverses do not count)."""
        e, t = self.identity, self.table
        return [i for i in range(self.order)
                if any(t[i][j] == e and t[j][i] == e for j in range(self.order))]


def endo_monoid(a: QSchemoid, limits: SearchLimits = DEFAULT_LIMITS) -> FiniteMonoid:
    """All schemoid endomorphisms of ``a`` under composition; ``table[i][j]`` is ``e_i o e_j``."""
    elements = enumerate_morphisms(a, a, limits)
    pos = {e.key: i for i, e in enumerate(elements)}
    table = tuple(tuple(pos[_compose_key(f, g)] for g in elements) for f in elements)
    return FiniteMonoid(tuple(elements), table, pos[identity_morphism(a).key])


def _compose_key(f: SchemoidMorphism, g: SchemoidMorphism):
    return (tuple(f.obj_map[x] for x in g.obj_map), tuple(f.mor_map[m] for m in g.mor_map))


@dataclass(frozen=True)
class HautResult:
    """``haut(a)`` together with the data it was computed from.

    ``quotient`` is the full endomorphism monoid modulo homotopy, including
    classes that are not invertible. Group element ``k`` corresponds to the
    class ``classes[unit_classes[k]]``; element 0 is the identity class.
    """

    group: FinGroup
    quotient: FiniteMonoid
    classes: tuple[tuple[SchemoidMorphism, ...], ...]
    unit_classes: tuple[int, ...]
    monoid: FiniteMonoid

    def class_of(self, f: SchemoidMorphism) -> int:
        for i, cls in enumerate(self.classes):
            if f in cls:
                return i
        raise KeyError("morphism is not an endomorphism of this schemoid")

    def representatives(self) -> list[SchemoidMorphism]:
        return [cls[0] for cls in self.classes]

    def equivalences(self) -> list[SchemoidMorphism]:
        """Every self-homotopy equivalence (members of the unit classes)."""
        return [f for i in self.unit_classes for f in self.classes[i]]

    def quotient_well_defined(self) -> bool:
        """Check that the class of ``f o g`` depends only on the classes of ``f`` and ``g``."""
        member = {}
        for i, cls in enumerate(self.classes):
            for f in cls:
                member[f.key] = i
        for i, ci in enumerate(self.classes):
            for j, cj in enumerate(self.classes):
                expected = self.quotient.table[i][j]
                for f in ci:
                    for g in cj:
                        if member[_compose_key(f, g)] != expected:
                            return False
        return True


def haut_group(a: QSchemoid, limits: SearchLimits = DEFAULT_LIMITS,
               threads: int = 1) -> HautResult:
    monoid = endo_monoid(a, limits)
    graph = HomotopyGraph(monoid.elements)
    comps = graph.components(threads)
    class_of = [0] * monoid.order
    for c, members in enumerate(comps):
        for i in members:
            class_of[i] = c
    reps = [members[0] for members in comps]
    qtable = tuple(tuple(class_of[monoid.table[r][s]] for s in reps) for r in reps)
    quotient = FiniteMonoid(tuple(reps), qtable, class_of[monoid.identity])

    units = quotient.units()
    units.remove(quotient.identity)
    units = [quotient.identity] + units
    pos = {c: k for k, c in enumerate(units)}
    gtable = [[pos[qtable[c][d]] for d in units] for c in units]
    group = validate_group(gtable)
    classes = tuple(tuple(monoid.elements[i] for i in members) for members in comps)
    return HautResult(group, quotient, classes, tuple(units), monoid)


# -- plain finite groups ---------------------------------------------------------

def group_automorphisms(g: FinGroup, limits: SearchLimits = DEFAULT_LIMITS
                        ) -> list[tuple[int, ...]]:
    """Every automorphism of ``g`` as a permutation tuple, in lexicographic order."""
    gens = _generators(g)
    out = []
    for images in _candidate_images(g, g, gens):
        phi = _extend(g, g, gens, images)
        if phi is not None:
            out.append(phi)
            if len(out) > limits.max_universe:
                raise SearchCapExceeded("too many automorphisms", cap=limits.max_universe)
    out.sort()
    return out


def aut_of_group(g: FinGroup, limits: SearchLimits = DEFAULT_LIMITS) -> FinGroup:
    """``Aut(g)`` with ``table[i][j]`` the composite "apply ``j``, then ``i``"."""
    perms = group_automorphisms(g, limits)
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(g.order))] for q in perms] for p in perms]
    return validate_group(table, names=[" ".join(map(str, p)) for p in perms])


def _generators(g: FinGroup) -> list[int]:
    """Greedy generating set: repeatedly add the least element outside the generated subgroup."""
    gens: list[int] = []
    span = {0}
    for x in range(g.order):
        if x in span:
            continue
        gens.append(x)
        span = _closure(g, gens)
        if len(span) == g.order:
            break
    return gens


def _closure(g: FinGroup, gens: list[int]) -> set[int]:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = g.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _candidate_images(g: FinGroup, h: FinGroup, gens: list[int]):
    choices = [[y for y in range(h.order) if h.element_order(y) == g.element_order(s)]
               for s in gens]

    def rec(k, acc):
        if k == len(gens):
            yield tuple(acc)
            return
        for y in choices[k]:
            acc.append(y)
            yield from rec(k + 1, acc)
            acc.pop()

    yield from rec(0, [])


def _extend(g: FinGroup, h: FinGroup, gens: list[int], images: tuple[int, ...]
            ) -> tuple[int, ...] | None:
    """Extend generator images to a bijective homomorphism, or return ``None``."""
    phi = {0: 0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, images):
            y, fy = g.mul(x, s), h.mul(phi[x], t)
            if y in phi:
                if phi[y] != fy:
                    return None
            else:
                phi[y] = fy
                queue.append(y)
    if len(phi) != g.order or len(set(phi.values())) != h.order:
        return None
    result = tuple(phi[x] for x in range(g.order))
    for a in range(g.order):
        for b in range(g.order):
            if result[g.mul(a, b)] != h.mul(result[a], result[b]):
                return None
    return result


def find_group_isomorphism(g1: FinGroup, g2: FinGroup) -> tuple[int, ...] | None:
    if g1.order != g2.order or g1.order_profile != g2.order_profile:
        return None
    gens = _generators(g1)
    for images in _candidate_images(g1, g2, gens):
        phi = _extend(g1, g2, gens, images)
        if phi is not None:
            return phi
    return None


def group_isomorphic(g1: FinGroup, g2: FinGroup) -> bool:
    return find_group_isomorphism(g1, g2) is not None


_FACTORIALS = {1: 1, 2: 2, 6: 3, 24: 4, 120: 5}


@lru_cache(maxsize=None)
def _reference(kind: str, k: int) -> FinGroup:
    return {"Z": cyclic_group, "Sym": symmetric_group, "D": dihedral_group}[kind](k)


def identify_group(g: FinGroup) -> str:
    """Name ``g`` when it matches a trivial, cyclic, symmetric, Klein or dihedral table."""
    n = g.order
    if n == 1:
        return "trivial"
    if max(g.order_profile) == n:
        return f"Z/{n}"
    if n in _FACTORIALS and n > 2 and group_isomorphic(g, _reference("Sym", _FACTORIALS[n])):
        return f"Sym({_FACTORIALS[n]})"
    if n == 4 and group_isomorphic(g, klein_four_group()):
        return "Z/2 x Z/2"
    if n % 2 == 0 and n >= 6 and group_isomorphic(g, _reference("D", n // 2)):
        return f"D_{n // 2}"
    return "unidentified"


# -- groupoid automorphisms acting on S~ ---------------------------------------------

def groupoid_automorphism(a: QSchemoid, obj_map, mor_map) -> Functor:
    """Validate an automorphism of the groupoid behind a stilde schemoid."""
    if a.groupoid is None:
        raise NotAutomorphism("schemoid was not built from a groupoid")
    hc = a.groupoid.cat
    u = validate_functor(hc, hc, obj_map, mor_map)
    if not u.is_bijective():
        raise NotAutomorphism("functor is not bijective")
    return u


def stilde_of_automorphism(u: Functor, a: QSchemoid) -> SchemoidMorphism:
    """``S~(u)``: object ``i`` (a groupoid morphism) goes to ``u(i)``."""
    if a.groupoid is None or u.src_cat != a.groupoid.cat or u.tgt_cat != a.groupoid.cat:
        raise NotAutomorphism("u is not an automorphism of the underlying groupoid")
    if not u.is_bijective():
        raise NotAutomorphism("functor is not bijective")
    return thin_morphism(a, a, u.mor_map)


def induced_haut_map(u: Functor, a: QSchemoid, haut: HautResult | None = None) -> int:
    """Index (into ``haut.classes``) of the homotopy class of ``S~(u)``."""
    f = stilde_of_automorphism(u, a)
    if haut is None:
        haut = haut_group(a)
    return haut.class_of(f)


def normalize_groupoid_automorphism(u: SchemoidMorphism) -> SchemoidMorphism:
    """Replace ``u`` by ``u'(i) = u(i) u(1_{s(i)})^-1``, which fixes the identity objects.

    The result is checked to be a schemoid automorphism homotopic to ``u``.
    """
    a = u.source
    if a.groupoid is None or u.target != a:
        raise NotAutomorphism("u must be an endomorphism of a stilde schemoid")
    if not is_isomorphism(u):
        raise NotAutomorphism("u is not invertible")
    h = a.groupoid
    hc = h.cat
    obj_map = []
    for i in range(hc.n_morphisms):
        ui = u.obj_map[i]
        base = u.obj_map[hc.identity[hc.src[i]]]
        if hc.src[ui] != hc.src[base]:
            raise NotAutomorphism(f"u({i}) and u(1_s({i})) do not share a source", object=i)
        obj_map.append(h.compose(ui, h.inv(base)))
    v = thin_morphism(a, a, obj_map)
    if not is_isomorphism(v):
        raise NotAutomorphism("normalised map is not an automorphism")
    if not thin_homotopy_criterion(u, v):
        raise NotAutomorphism("normalised map is not homotopic to u")
    return v


def preserves_base_points(u: SchemoidMorphism) -> bool:
    hc = u.source.groupoid.cat
    ids = hc.identity_set
    return all(u.obj_map[e] in ids for e in hc.identity)
