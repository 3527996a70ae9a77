"""The constructions K, U, jmath, S, S~, iota, products and the cylinder, plus isomorphism search."""

from __future__ import annotations

from .errors import SourceTargetMismatch
from .fincat import (
    FinCat,
    FinGroup,
    FinGroupoid,
    Functor,
    arrow_category,
    iter_functor_maps,
    product_category,
    thin_category,
    validate_category,
    validate_groupoid,
)
from .schemoid import (
    AssocScheme,
    QSchemoid,
    SchemoidMorphism,
    make_partition,
    validate_morphism,
    validate_scheme,
    validate_schemoid,
)
from .search import DEFAULT_LIMITS, SearchLimits


def discrete_k(c: FinCat) -> QSchemoid:
    """``K(C)``: every morphism in its own block."""
    part = make_partition(c.n_morphisms, [[m] for m in range(c.n_morphisms)],
                          names=[c.morphism_name(m) for m in range(c.n_morphisms)])
    return validate_schemoid(c, part)


def forget_u(q: QSchemoid) -> FinCat:
    return q.cat


def interval() -> QSchemoid:
    """``I = K([1])``."""
    return discrete_k(arrow_category())


def trivial_schemoid() -> QSchemoid:
    """``K(*)``."""
    return discrete_k(validate_category(1, [(0, 0)], [0], {}, object_names=["*"],
                                        morphism_names=["1_*"]))


def jmath(a: AssocScheme) -> QSchemoid:
    """Thin category on the points with morphism ``(x, y): y -> x`` at index ``x * n + y``.

    Block ``e`` is relation ``e`` of the scheme.
    """
    n = a.n_points
    cat = thin_category(n)
    blocks = [[] for _ in range(a.n_relations)]
    for x in range(n):
        for y in range(n):
            blocks[a.relation[x][y]].append(x * n + y)
    part = make_partition(cat.n_morphisms, blocks, names=[f"R{e}" for e in range(a.n_relations)])
    return validate_schemoid(cat, part)


def scheme_of_group(g: FinGroup) -> AssocScheme:
    """``S(G)``: the pair ``(k, l)`` lies in relation ``k^-1 l``."""
    return validate_scheme([[g.mul(g.inv(k), l) for l in range(g.order)]
                            for k in range(g.order)])


def iota(g: FinGroup) -> FinGroupoid:
    """The one-object groupoid whose morphisms are the elements of ``g``."""
    comp = {(a, b): g.mul(a, b) for a in range(g.order) for b in range(g.order)}
    cat = validate_category(1, [(0, 0)] * g.order, [0], comp, object_names=["*"],
                            morphism_names=[g.name(a) for a in range(g.order)])
    return validate_groupoid(cat, g.inverse)


def stilde(h: FinGroupoid) -> QSchemoid:
    """``S~(H)``: objects are the morphisms of ``H``; ``(k, l): l -> k`` exists iff ``t(k) == t(l)``.

    Morphisms are indexed in lexicographic order of ``(k, l)``. Block ``f``
    collects the pairs with ``k^-1 l == f``.
    """
    hc = h.cat
    pairs = [(k, l) for k in range(hc.n_morphisms) for l in range(hc.n_morphisms)
             if hc.tgt[k] == hc.tgt[l]]
    index = {p: i for i, p in enumerate(pairs)}
    morphisms = [(l, k) for k, l in pairs]
    identity = [index[(k, k)] for k in range(hc.n_morphisms)]
    comp = {}
    for (m, k1) in pairs:
        for (k2, l) in pairs:
            if k1 == k2:
                comp[(index[(m, k1)], index[(k2, l)])] = index[(m, l)]
    cat = validate_category(hc.n_morphisms, morphisms, identity, comp,
                            object_names=[hc.morphism_name(k) for k in range(hc.n_morphisms)],
                            morphism_names=[f"({hc.morphism_name(k)},{hc.morphism_name(l)})"
                                            for k, l in pairs])
    blocks = [[] for _ in range(hc.n_morphisms)]
    for i, (k, l) in enumerate(pairs):
        blocks[h.compose(h.inv(k), l)].append(i)
    part = make_partition(cat.n_morphisms, blocks,
                          names=[f"G_{hc.morphism_name(f)}" for f in range(hc.n_morphisms)])
    return validate_schemoid(cat, part, groupoid=h)


def product_schemoid(a: QSchemoid, b: QSchemoid) -> QSchemoid:
    """Block ``sigma x tau`` has index ``sigma * |S_b| + tau``."""
    cat = product_category(a.cat, b.cat)
    nb = b.n_blocks
    m2 = b.cat.n_morphisms
    blocks = [[] for _ in range(a.n_blocks * nb)]
    for m in range(cat.n_morphisms):
        blocks[a.block_of(m // m2) * nb + b.block_of(m % m2)].append(m)
    names = [f"{a.partition.name(s)}x{b.partition.name(t)}"
             for s in range(a.n_blocks) for t in range(nb)]
    return validate_schemoid(cat, make_partition(cat.n_morphisms, blocks, names=names))


def end_inclusion(a: QSchemoid, cyl: QSchemoid, end: int) -> SchemoidMorphism:
    """``eps_end``: ``x -> (x, end)`` and ``f -> (f, 1_end)``."""
    f = Functor(a.cat, cyl.cat, tuple(x * 2 + end for x in range(a.cat.n_objects)),
                tuple(m * 3 + end for m in range(a.cat.n_morphisms)))
    return validate_morphism(f, a, cyl)


def cylinder(a: QSchemoid) -> tuple[QSchemoid, SchemoidMorphism, SchemoidMorphism]:
    """``a x I`` with its two end inclusions."""
    cyl = product_schemoid(a, interval())
    return cyl, end_inclusion(a, cyl, 0), end_inclusion(a, cyl, 1)


def projection(a: QSchemoid, b: QSchemoid, prod: QSchemoid, which: int = 0) -> SchemoidMorphism:
    """Projection ``a x b -> a`` (``which=0``) or ``-> b`` (``which=1``)."""
    n2, m2 = b.cat.n_objects, b.cat.n_morphisms
    if which == 0:
        f = Functor(prod.cat, a.cat, tuple(x // n2 for x in range(prod.cat.n_objects)),
                    tuple(m // m2 for m in range(prod.cat.n_morphisms)))
        return validate_morphism(f, prod, a)
    f = Functor(prod.cat, b.cat, tuple(x % n2 for x in range(prod.cat.n_objects)),
                tuple(m % m2 for m in range(prod.cat.n_morphisms)))
    return validate_morphism(f, prod, b)


# -- isomorphism ---------------------------------------------------------------

def _object_signature(c: FinCat, x: int) -> tuple[int, int, int]:
    out_deg = sum(1 for m in range(c.n_morphisms) if c.src[m] == x)
    in_deg = sum(1 for m in range(c.n_morphisms) if c.tgt[m] == x)
    return (len(c.hom(x, x)), out_deg, in_deg)


def _block_signature(q: QSchemoid, s: int) -> tuple[int, int, int]:
    members = q.partition.blocks[s]
    n_ident = sum(1 for m in members if q.cat.is_identity(m))
    return (len(members), n_ident, q.p(s, s, s))


def find_isomorphism(a: QSchemoid, b: QSchemoid, limits: SearchLimits = DEFAULT_LIMITS
                     ) -> tuple[SchemoidMorphism, SchemoidMorphism] | None:
    """An isomorphism ``a -> b`` and its inverse, or ``None``.

    Objects and blocks are only matched when their invariant signatures
    agree. The witness is the first one met by the deterministic search.
    """
    limits.check_objects(a.cat.n_objects)
    limits.check_objects(b.cat.n_objects)
    if (a.cat.n_objects, a.cat.n_morphisms, a.n_blocks) != \
            (b.cat.n_objects, b.cat.n_morphisms, b.n_blocks):
        return None
    osig_a = [_object_signature(a.cat, x) for x in range(a.cat.n_objects)]
    osig_b = [_object_signature(b.cat, y) for y in range(b.cat.n_objects)]
    bsig_a = [_block_signature(a, s) for s in range(a.n_blocks)]
    bsig_b = [_block_signature(b, t) for t in range(b.n_blocks)]
    if sorted(osig_a) != sorted(osig_b) or sorted(bsig_a) != sorted(bsig_b):
        return None
    for obj_map, mor_map in iter_functor_maps(
            a.cat, b.cat,
            src_colors=a.partition.block_of, tgt_colors=b.partition.block_of,
            injective=True,
            obj_allowed=lambda x, y: osig_a[x] == osig_b[y],
            color_allowed=lambda s, t: bsig_a[s] == bsig_b[t]):
        forward = validate_morphism(Functor(a.cat, b.cat, obj_map, mor_map), a, b)
        inv_obj = [0] * len(obj_map)
        for x, y in enumerate(obj_map):
            inv_obj[y] = x
        inv_mor = [0] * len(mor_map)
        for m, fm in enumerate(mor_map):
            inv_mor[fm] = m
        backward = validate_morphism(Functor(b.cat, a.cat, tuple(inv_obj), tuple(inv_mor)), b, a)
        return forward, backward
    return None


def is_isomorphism(f: SchemoidMorphism) -> bool:
    if not f.is_bijective():
        return False
    if len(set(f.block_image)) != f.source.n_blocks or f.source.n_blocks != f.target.n_blocks:
        return False
    return True


def check_same_ends(f: SchemoidMorphism, g: SchemoidMorphism) -> None:
    if f.source != g.source or f.target != g.target:
        raise SourceTargetMismatch("morphisms do not share source and target")
