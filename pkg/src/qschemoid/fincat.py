"""Finite categories, groups and groupoids with dense integer indexing.

Composition convention used throughout the package: ``comp[(g, f)]`` is the
composite ``g o f`` (apply ``f`` first, then ``g``), defined exactly when
``src[g] == tgt[f]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    AssociativityViolation,
    CategoryError,
    DanglingIndex,
    IdentityViolation,
    InverseMissing,
    MissingComposite,
    NotFunctor,
    SourceTargetMismatch,
    SrcTgtViolation,
    UniverseTooLarge,
)
from .search import DEFAULT_LIMITS, SearchLimits, bfs_path, index_of


@dataclass(frozen=True, eq=False)
class FinCat:
    """A validated finite category. Build instances with :func:`validate_category`."""

    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    identity: tuple[int, ...]
    comp: Mapping[tuple[int, int], int]
    object_names: tuple[str, ...] | None = field(default=None, repr=False)
    morphism_names: tuple[str, ...] | None = field(default=None, repr=False)

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @cached_property
    def _key(self):
        return (self.n_objects, self.src, self.tgt, self.identity,
                tuple(sorted(self.comp.items())))

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @cached_property
    def identity_set(self) -> frozenset[int]:
        return frozenset(self.identity)

    def is_identity(self, m: int) -> bool:
        return m in self.identity_set

    @cached_property
    def homs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        table: dict[tuple[int, int], list[int]] = {}
        for m in range(self.n_morphisms):
            table.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {k: tuple(v) for k, v in table.items()}

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        """Morphisms ``x -> y`` in increasing index order."""
        return self.homs.get((x, y), ())

    def compose(self, g: int, f: int) -> int:
        return self.comp[(g, f)]

    @cached_property
    def is_thin(self) -> bool:
        return all(len(ms) <= 1 for ms in self.homs.values())

    def object_name(self, x: int) -> str:
        return self.object_names[x] if self.object_names else str(x)

    def morphism_name(self, m: int) -> str:
        return self.morphism_names[m] if self.morphism_names else str(m)


def validate_category(n_objects: int,
                      morphisms: Sequence[tuple[int, int]],
                      identity: Sequence[int],
                      comp: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]],
                      object_names: Sequence[str] | None = None,
                      morphism_names: Sequence[str] | None = None) -> FinCat:
    """Check the category axioms and return a :class:`FinCat`.

    ``morphisms`` lists ``(src, tgt)`` per morphism index. ``comp`` maps
    ``(g, f)`` to the index of ``g o f`` (or is an iterable of ``(g, f, gf)``
    triples). Composites with an identity factor may be omitted; they are
    filled in. Every other composable pair must be present.
    """
    n = int(n_objects)
    if n < 0:
        raise CategoryError("negative object count", n_objects=n)
    m = len(morphisms)
    src = tuple(int(s) for s, _ in morphisms)
    tgt = tuple(int(t) for _, t in morphisms)
    for i in range(m):
        for end in (src[i], tgt[i]):
            if not 0 <= end < n:
                raise DanglingIndex(f"morphism {i} refers to object {end}",
                                    morphism=i, object=end)
    identity = tuple(int(i) for i in identity)
    if len(identity) != n:
        raise IdentityViolation(f"expected {n} identities, got {len(identity)}")
    for x, e in enumerate(identity):
        if not 0 <= e < m:
            raise DanglingIndex(f"identity of object {x} is morphism {e}, out of range",
                                object=x, morphism=e)
        if src[e] != x or tgt[e] != x:
            raise IdentityViolation(f"identity {e} of object {x} is not an endomorphism of {x}",
                                    object=x, morphism=e)
    if len(set(identity)) != n:
        raise IdentityViolation("two objects share an identity morphism")

    entries = comp.items() if isinstance(comp, Mapping) else (((g, f), h) for g, f, h in comp)
    table: dict[tuple[int, int], int] = {}
    for (g, f), h in entries:
        g, f, h = int(g), int(f), int(h)
        for idx in (g, f, h):
            if not 0 <= idx < m:
                raise DanglingIndex(f"composite ({g}, {f}) -> {h} refers to morphism {idx}",
                                    morphism=idx)
        if src[g] != tgt[f]:
            raise SrcTgtViolation(f"({g}, {f}) is not composable: src({g}) != tgt({f})",
                                  g=g, f=f, composite=h)
        if src[h] != src[f] or tgt[h] != tgt[g]:
            raise SrcTgtViolation(
                f"composite {g} o {f} = {h} has wrong endpoints "
                f"({src[h]}->{tgt[h]}, expected {src[f]}->{tgt[g]})",
                g=g, f=f, composite=h)
        if table.get((g, f), h) != h:
            raise CategoryError(f"composite ({g}, {f}) given twice with different values",
                                g=g, f=f)
        table[(g, f)] = h

    identity_set = set(identity)
    for (g, f), h in table.items():
        if g in identity_set and h != f:
            raise IdentityViolation(f"{g} o {f} = {h}, but {g} is an identity",
                                    g=g, f=f, composite=h)
        if f in identity_set and h != g:
            raise IdentityViolation(f"{g} o {f} = {h}, but {f} is an identity",
                                    g=g, f=f, composite=h)
    for f in range(m):
        table.setdefault((identity[tgt[f]], f), f)
        table.setdefault((f, identity[src[f]]), f)

    by_tgt: dict[int, list[int]] = {}
    for f in range(m):
        by_tgt.setdefault(tgt[f], []).append(f)
    by_src: dict[int, list[int]] = {}
    for g in range(m):
        by_src.setdefault(src[g], []).append(g)
    for g in range(m):
        for f in by_tgt.get(src[g], ()):
            if (g, f) not in table:
                raise MissingComposite(f"composite of {g} o {f} is not defined", g=g, f=f)

    for (g, f), gf in table.items():
        for h in by_src.get(tgt[g], ()):
            left = table[(h, gf)]
            right = table[(table[(h, g)], f)]
            if left != right:
                raise AssociativityViolation(
                    f"({h} o {g}) o {f} = {right} but {h} o ({g} o {f}) = {left}",
                    h=h, g=g, f=f)

    return FinCat(n, src, tgt, identity, table,
                  tuple(object_names) if object_names is not None else None,
                  tuple(morphism_names) if morphism_names is not None else None)


def terminal_category() -> FinCat:
    """The one-object, one-morphism category."""
    return validate_category(1, [(0, 0)], [0], {}, object_names=["*"], morphism_names=["1_*"])


def arrow_category() -> FinCat:
    """``[1]``: objects 0, 1; morphisms ``1_0, 1_1, u: 0 -> 1`` in that order."""
    return validate_category(2, [(0, 0), (1, 1), (0, 1)], [0, 1], {},
                             object_names=["0", "1"], morphism_names=["1_0", "1_1", "u"])


def discrete_category(n: int) -> FinCat:
    return validate_category(n, [(x, x) for x in range(n)], list(range(n)), {})


def thin_category(n: int, relation: Iterable[tuple[int, int]] | None = None) -> FinCat:
    """Thin category on ``n`` objects; morphism ``(x, y)`` goes ``y -> x``.

    With no ``relation`` every ordered pair is present (the indiscrete
    category), indexed ``x * n + y``. Otherwise ``relation`` must be a
    reflexive, transitive set of pairs and morphisms are indexed in sorted
    pair order.
    """
    pairs = sorted(product(range(n), repeat=2)) if relation is None else sorted(set(relation))
    index = index_of(pairs)
    morphisms = [(y, x) for x, y in pairs]
    identity = []
    for x in range(n):
        if (x, x) not in index:
            raise IdentityViolation(f"relation is not reflexive at {x}", object=x)
        identity.append(index[(x, x)])
    comp = {}
    for (z, x1) in pairs:
        for (x2, y) in pairs:
            if x1 == x2:
                if (z, y) not in index:
                    raise MissingComposite(f"relation is not transitive at ({z}, {x1}, {y})",
                                           g=index[(z, x1)], f=index[(x2, y)])
                comp[(index[(z, x1)], index[(x2, y)])] = index[(z, y)]
    names = [f"({x},{y})" for x, y in pairs]
    return validate_category(n, morphisms, identity, comp, morphism_names=names)


def product_category(c1: FinCat, c2: FinCat) -> FinCat:
    """Componentwise product; object ``(a, b)`` is ``a * |ob c2| + b`` and morphisms likewise."""
    n2, m2 = c2.n_objects, c2.n_morphisms
    morphisms = [(c1.src[f] * n2 + c2.src[g], c1.tgt[f] * n2 + c2.tgt[g])
                 for f in range(c1.n_morphisms) for g in range(m2)]
    identity = [c1.identity[a] * m2 + c2.identity[b]
                for a in range(c1.n_objects) for b in range(n2)]
    comp = {}
    for (g1, f1), h1 in c1.comp.items():
        for (g2, f2), h2 in c2.comp.items():
            comp[(g1 * m2 + g2, f1 * m2 + f2)] = h1 * m2 + h2
    obj_names = [f"({c1.object_name(a)},{c2.object_name(b)})"
                 for a in range(c1.n_objects) for b in range(n2)]
    mor_names = [f"({c1.morphism_name(f)},{c2.morphism_name(g)})"
                 for f in range(c1.n_morphisms) for g in range(m2)]
    return validate_category(c1.n_objects * n2, morphisms, identity, comp,
                             object_names=obj_names, morphism_names=mor_names)


# -- groups and groupoids ----------------------------------------------------

@dataclass(frozen=True)
class FinGroup:
    """A group given by its Cayley table; element 0 is the identity."""

    order: int
    cayley: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        return tuple(next(b for b in range(self.order) if self.cayley[a][b] == 0)
                     for a in range(self.order))

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.cayley[x][a]
            k += 1
        return k

    @cached_property
    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)


def validate_group(cayley: Sequence[Sequence[int]],
                   names: Sequence[str] | None = None) -> FinGroup:
    n = len(cayley)
    table = tuple(tuple(int(v) for v in row) for row in cayley)
    if n == 0:
        raise CategoryError("a group needs at least one element")
    for a, row in enumerate(table):
        if len(row) != n:
            raise CategoryError(f"row {a} has {len(row)} entries, expected {n}", row=a)
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise DanglingIndex(f"entry ({a}, {b}) = {v} out of range", a=a, b=b)
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise IdentityViolation(f"element 0 is not an identity: fails at {a}", element=a)
    for a in range(n):
        if not any(table[a][b] == 0 and table[b][a] == 0 for b in range(n)):
            raise InverseMissing(f"element {a} has no two-sided inverse", element=a)
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rb = table[b]
            for c in range(n):
                if table[ab][c] != ra[rb[c]]:
                    raise AssociativityViolation(
                        f"({a}{b}){c} != {a}({b}{c})", a=a, b=b, c=c)
    return FinGroup(n, table, tuple(names) if names is not None else None)


@dataclass(frozen=True)
class FinGroupoid:
    """A finite category together with its inverse table."""

    cat: FinCat
    inverse: tuple[int, ...]

    def inv(self, m: int) -> int:
        return self.inverse[m]

    def compose(self, g: int, f: int) -> int:
        return self.cat.comp[(g, f)]


def validate_groupoid(cat: FinCat, inverse: Sequence[int] | None = None) -> FinGroupoid:
    """Check that every morphism of ``cat`` is invertible; derive the inverse table if absent."""
    m = cat.n_morphisms
    if inverse is None:
        found = []
        for f in range(m):
            cands = [g for g in cat.hom(cat.tgt[f], cat.src[f])
                     if cat.comp[(g, f)] == cat.identity[cat.src[f]]
                     and cat.comp[(f, g)] == cat.identity[cat.tgt[f]]]
            if not cands:
                raise InverseMissing(f"morphism {f} has no inverse", morphism=f)
            found.append(cands[0])
        inverse = found
    inverse = tuple(int(g) for g in inverse)
    if len(inverse) != m:
        raise InverseMissing("inverse table has the wrong length")
    for f, g in enumerate(inverse):
        if not 0 <= g < m:
            raise DanglingIndex(f"inverse of {f} is {g}, out of range", morphism=f)
        if (cat.src[g] != cat.tgt[f] or cat.tgt[g] != cat.src[f]
                or cat.comp[(f, g)] != cat.identity[cat.tgt[f]]
                or cat.comp[(g, f)] != cat.identity[cat.src[f]]):
            raise InverseMissing(f"{g} is not an inverse of {f}", morphism=f, candidate=g)
    return FinGroupoid(cat, inverse)


# -- functors ----------------------------------------------------------------

@dataclass(frozen=True)
class Functor:
    """A functor given extensionally; equality compares the two maps (and the categories)."""

    src_cat: FinCat
    tgt_cat: FinCat
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def __hash__(self):
        return hash((self.obj_map, self.mor_map))

    def compose(self, inner: "Functor") -> "Functor":
        """``self o inner``."""
        if inner.tgt_cat != self.src_cat:
            raise SourceTargetMismatch("functors are not composable")
        return Functor(inner.src_cat, self.tgt_cat,
                       tuple(self.obj_map[x] for x in inner.obj_map),
                       tuple(self.mor_map[m] for m in inner.mor_map))

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.obj_map, self.mor_map)

    def is_bijective(self) -> bool:
        return (len(set(self.obj_map)) == self.tgt_cat.n_objects == self.src_cat.n_objects
                and len(set(self.mor_map)) == self.tgt_cat.n_morphisms == self.src_cat.n_morphisms)


def validate_functor(src: FinCat, tgt: FinCat, obj_map: Sequence[int],
                     mor_map: Sequence[int]) -> Functor:
    obj_map = tuple(int(y) for y in obj_map)
    mor_map = tuple(int(y) for y in mor_map)
    if len(obj_map) != src.n_objects or len(mor_map) != src.n_morphisms:
        raise NotFunctor("map lengths do not match the source category")
    for y in obj_map:
        if not 0 <= y < tgt.n_objects:
            raise DanglingIndex(f"object image {y} out of range", object=y)
    for m, fm in enumerate(mor_map):
        if not 0 <= fm < tgt.n_morphisms:
            raise DanglingIndex(f"morphism image {fm} out of range", morphism=fm)
        if tgt.src[fm] != obj_map[src.src[m]] or tgt.tgt[fm] != obj_map[src.tgt[m]]:
            raise NotFunctor(f"image of morphism {m} has the wrong endpoints", morphism=m)
    for x in range(src.n_objects):
        if mor_map[src.identity[x]] != tgt.identity[obj_map[x]]:
            raise NotFunctor(f"identity of object {x} is not preserved", object=x)
    for (g, f), h in src.comp.items():
        if tgt.comp[(mor_map[g], mor_map[f])] != mor_map[h]:
            raise NotFunctor(f"composite {g} o {f} is not preserved", g=g, f=f)
    return Functor(src, tgt, obj_map, mor_map)


def identity_functor(c: FinCat) -> Functor:
    return Functor(c, c, tuple(range(c.n_objects)), tuple(range(c.n_morphisms)))


def constant_functor(src: FinCat, tgt: FinCat, y: int) -> Functor:
    return Functor(src, tgt, (y,) * src.n_objects, (tgt.identity[y],) * src.n_morphisms)


def projection_functors(c1: FinCat, c2: FinCat, prod: FinCat | None = None
                        ) -> tuple[Functor, Functor]:
    prod = product_category(c1, c2) if prod is None else prod
    n2, m2 = c2.n_objects, c2.n_morphisms
    p1 = Functor(prod, c1, tuple(x // n2 for x in range(prod.n_objects)),
                 tuple(m // m2 for m in range(prod.n_morphisms)))
    p2 = Functor(prod, c2, tuple(x % n2 for x in range(prod.n_objects)),
                 tuple(m % m2 for m in range(prod.n_morphisms)))
    return p1, p2


def iter_functor_maps(src: FinCat, tgt: FinCat, *,
                      src_colors: Sequence[int] | None = None,
                      tgt_colors: Sequence[int] | None = None,
                      injective: bool = False,
                      obj_allowed=None,
                      color_allowed=None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Backtracking enumeration of functors ``src -> tgt`` as ``(obj_map, mor_map)``.

    Objects are assigned in increasing order; right after object ``x`` every
    non-identity morphism whose endpoints are both assigned (and one of them
    is ``x``) is assigned, in index order, so composition constraints prune
    early. Optional colour maps force every source colour class to land in a
    single target colour (the partition-preservation condition). With
    ``injective`` the object and morphism maps must be injective and distinct
    source colours must go to distinct target colours. ``obj_allowed(x, y)``
    and ``color_allowed(c, d)`` are optional pruning predicates.
    """
    n, m = src.n_objects, src.n_morphisms
    identity_set = src.identity_set

    # step list: ("obj", x) followed by the morphisms it unlocks
    steps: list[tuple[str, int]] = []
    assigned_at: dict[int, int] = {}
    for x in range(n):
        steps.append(("obj", x))
        assigned_at[src.identity[x]] = len(steps) - 1
        for f in range(m):
            if f in identity_set:
                continue
            if max(src.src[f], src.tgt[f]) == x:
                steps.append(("mor", f))
                assigned_at[f] = len(steps) - 1

    # composition triples to check at the step that completes them
    checks: list[list[tuple[int, int, int]]] = [[] for _ in steps]
    for (g, f), h in src.comp.items():
        if g in identity_set or f in identity_set:
            continue
        checks[max(assigned_at[g], assigned_at[f], assigned_at[h])].append((g, f, h))

    obj_img = [-1] * n
    mor_img = [-1] * m
    used_obj: set[int] = set()
    used_mor: set[int] = set()
    color_img: dict[int, int] = {}
    color_count: dict[int, int] = {}
    used_colors: set[int] = set()

    def bind_color(f: int, image: int) -> bool:
        if src_colors is None:
            return True
        c, d = src_colors[f], tgt_colors[image]
        if c in color_img:
            if color_img[c] != d:
                return False
            color_count[c] += 1
            return True
        if injective and d in used_colors:
            return False
        if color_allowed is not None and not color_allowed(c, d):
            return False
        color_img[c] = d
        color_count[c] = 1
        used_colors.add(d)
        return True

    def unbind_color(f: int) -> None:
        if src_colors is None:
            return
        c = src_colors[f]
        color_count[c] -= 1
        if color_count[c] == 0:
            used_colors.discard(color_img.pop(c))
            del color_count[c]

    def consistent(step: int) -> bool:
        tcomp = tgt.comp
        for g, f, h in checks[step]:
            if tcomp[(mor_img[g], mor_img[f])] != mor_img[h]:
                return False
        return True

    def rec(step: int):
        if step == len(steps):
            yield tuple(obj_img), tuple(mor_img)
            return
        kind, idx = steps[step]
        if kind == "obj":
            e = src.identity[idx]
            for y in range(tgt.n_objects):
                if injective and y in used_obj:
                    continue
                if obj_allowed is not None and not obj_allowed(idx, y):
                    continue
                ey = tgt.identity[y]
                if not bind_color(e, ey):
                    continue
                obj_img[idx] = y
                mor_img[e] = ey
                used_obj.add(y)
                used_mor.add(ey)
                if consistent(step):
                    yield from rec(step + 1)
                used_obj.discard(y)
                used_mor.discard(ey)
                obj_img[idx] = -1
                mor_img[e] = -1
                unbind_color(e)
        else:
            for fm in tgt.hom(obj_img[src.src[idx]], obj_img[src.tgt[idx]]):
                if injective and fm in used_mor:
                    continue
                if not bind_color(idx, fm):
                    continue
                mor_img[idx] = fm
                used_mor.add(fm)
                if consistent(step):
                    yield from rec(step + 1)
                used_mor.discard(fm)
                mor_img[idx] = -1
                unbind_color(idx)

    yield from rec(0)


def enumerate_functors(src: FinCat, tgt: FinCat,
                       limits: SearchLimits = DEFAULT_LIMITS) -> list[Functor]:
    """Every functor ``src -> tgt``, sorted by ``(obj_map, mor_map)``."""
    out = []
    for obj_map, mor_map in iter_functor_maps(src, tgt):
        out.append(Functor(src, tgt, obj_map, mor_map))
        if len(out) > limits.max_universe:
            raise UniverseTooLarge(
                f"more than {limits.max_universe} functors", cap=limits.max_universe)
    out.sort(key=lambda F: F.key)
    return out


def _check_parallel(f: Functor, g: Functor) -> None:
    if f.src_cat != g.src_cat or f.tgt_cat != g.tgt_cat:
        raise SourceTargetMismatch("functors do not share source and target")


def natural_transformation_exists(f: Functor, g: Functor
                                  ) -> tuple[bool, tuple[int, ...] | None]:
    """Search for ``eta: f => g``; returns ``(found, components)``.

    Components are chosen object by object in increasing order from the Hom
    sets in increasing index order; the first complete family is returned.
    """
    _check_parallel(f, g)
    c, d = f.src_cat, f.tgt_cat
    n = c.n_objects
    # naturality squares checked once both endpoints are fixed
    squares: list[list[int]] = [[] for _ in range(n)]
    for m in range(c.n_morphisms):
        if not c.is_identity(m):
            squares[max(c.src[m], c.tgt[m])].append(m)
    eta = [-1] * n

    def rec(x: int) -> bool:
        if x == n:
            return True
        for cand in d.hom(f.obj_map[x], g.obj_map[x]):
            eta[x] = cand
            if all(d.comp[(g.mor_map[m], eta[c.src[m]])] == d.comp[(eta[c.tgt[m]], f.mor_map[m])]
                   for m in squares[x]):
                if rec(x + 1):
                    return True
        eta[x] = -1
        return False

    if rec(0):
        return True, tuple(eta)
    return False, None


def cat_strong_homotopic(f: Functor, g: Functor, universe: Sequence[Functor] | None = None,
                         limits: SearchLimits = DEFAULT_LIMITS) -> bool:
    """Strong homotopy in Cat: connected by natural transformations in either direction."""
    _check_parallel(f, g)
    if f == g:
        return True
    if natural_transformation_exists(f, g)[0] or natural_transformation_exists(g, f)[0]:
        return True
    if universe is None:
        universe = enumerate_functors(f.src_cat, f.tgt_cat, limits)
    elif len(universe) > limits.max_universe:
        raise UniverseTooLarge(f"universe of {len(universe)} functors exceeds the cap",
                               cap=limits.max_universe)
    pos = index_of(universe)
    if f not in pos or g not in pos:
        raise SourceTargetMismatch("functor missing from the supplied universe")

    def adjacent(u: int, v: int) -> bool:
        a, b = universe[u], universe[v]
        return natural_transformation_exists(a, b)[0] or natural_transformation_exists(b, a)[0]

    return bfs_path(pos[f], pos[g], len(universe), adjacent) is not None
