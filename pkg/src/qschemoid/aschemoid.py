"""Association schemoids: quasi-schemoids with a contravariant involution ``T``.

Only the conditions the rigidity argument needs are enforced: ``T`` is a
contravariant functor, ``T o T`` is the identity, and ``T`` maps every block
into a single block. Homotopies use the cylinder ``A x I~`` where
``I~ = ([1], t)`` swaps the two ends.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .constructors import interval, product_schemoid
from .errors import (
    BlockSplitUnderT,
    NotContravariant,
    NotEquivariant,
    NotInvolutive,
    SearchCapExceeded,
    SourceTargetMismatch,
)
from .homotopy import Homotopy, enumerate_morphisms, iter_homotopies
from .schemoid import QSchemoid, SchemoidMorphism
from .search import DEFAULT_LIMITS


@dataclass(frozen=True)
class ASchemoid:
    base: QSchemoid
    t_obj: tuple[int, ...]
    t_mor: tuple[int, ...]

    @property
    def moves_objects(self) -> bool:
        """True when ``T`` is not the identity on objects."""
        return any(self.t_obj[x] != x for x in range(len(self.t_obj)))


def validate_aschemoid(base: QSchemoid, t_obj: Sequence[int], t_mor: Sequence[int]) -> ASchemoid:
    cat = base.cat
    t_obj = tuple(int(v) for v in t_obj)
    t_mor = tuple(int(v) for v in t_mor)
    if len(t_obj) != cat.n_objects or len(t_mor) != cat.n_morphisms:
        raise NotContravariant("involution maps have the wrong length")
    if any(not 0 <= v < cat.n_objects for v in t_obj) or \
            any(not 0 <= v < cat.n_morphisms for v in t_mor):
        raise NotContravariant("involution maps contain out-of-range indices")
    for m, tm in enumerate(t_mor):
        if cat.src[tm] != t_obj[cat.tgt[m]] or cat.tgt[tm] != t_obj[cat.src[m]]:
            raise NotContravariant(f"T({m}) does not reverse the endpoints of {m}", morphism=m)
    for x in range(cat.n_objects):
        if t_mor[cat.identity[x]] != cat.identity[t_obj[x]]:
            raise NotContravariant(f"T does not send 1_{x} to an identity", object=x)
    for (g, f), h in cat.comp.items():
        if cat.comp[(t_mor[f], t_mor[g])] != t_mor[h]:
            raise NotContravariant(f"T({g} o {f}) != T({f}) o T({g})", g=g, f=f)
    for x in range(cat.n_objects):
        if t_obj[t_obj[x]] != x:
            raise NotInvolutive(f"T(T({x})) != {x}", object=x)
    for m in range(cat.n_morphisms):
        if t_mor[t_mor[m]] != m:
            raise NotInvolutive(f"T(T({m})) != {m}", morphism=m)
    for sigma, members in enumerate(base.partition.blocks):
        tau = base.block_of(t_mor[members[0]])
        for m in members[1:]:
            if base.block_of(t_mor[m]) != tau:
                raise BlockSplitUnderT(f"T splits block {sigma}: {members[0]} and {m}",
                                       sigma=sigma, m1=members[0], m2=m)
    return ASchemoid(base, t_obj, t_mor)


def transpose_involution(q: QSchemoid) -> ASchemoid:
    """On a thin schemoid over points (``jmath`` output): ``T(x) = x``, ``T((x, y)) = (y, x)``."""
    cat = q.cat
    t_mor = []
    for m in range(cat.n_morphisms):
        back = cat.hom(cat.tgt[m], cat.src[m])
        t_mor.append(back[0] if back else -1)
    return validate_aschemoid(q, range(cat.n_objects), t_mor)


def tilde_interval() -> ASchemoid:
    """``I~``: ``K([1])`` with ``t(0) = 1``, ``t(1) = 0``, ``t(u) = u``."""
    return validate_aschemoid(interval(), (1, 0), (1, 0, 2))


def product_aschemoid(a: ASchemoid, b: ASchemoid) -> ASchemoid:
    base = product_schemoid(a.base, b.base)
    n2, m2 = b.base.cat.n_objects, b.base.cat.n_morphisms
    t_obj = [a.t_obj[x // n2] * n2 + b.t_obj[x % n2] for x in range(base.cat.n_objects)]
    t_mor = [a.t_mor[m // m2] * m2 + b.t_mor[m % m2] for m in range(base.cat.n_morphisms)]
    return validate_aschemoid(base, t_obj, t_mor)


def tilde_cylinder(a: ASchemoid) -> ASchemoid:
    """``a x I~`` with involution ``T x t``; the ends ``(x, 0)`` and ``(x, 1)`` are swapped."""
    return product_aschemoid(a, tilde_interval())


@dataclass(frozen=True)
class ASchemoidMorphism:
    morphism: SchemoidMorphism
    source: ASchemoid
    target: ASchemoid


def validate_amorphism(f: SchemoidMorphism, a: ASchemoid, b: ASchemoid) -> ASchemoidMorphism:
    """Check ``F o T == T' o F`` on objects and morphisms."""
    if f.source != a.base or f.target != b.base:
        raise SourceTargetMismatch("morphism does not run between the given association schemoids")
    for x in range(len(a.t_obj)):
        if f.obj_map[a.t_obj[x]] != b.t_obj[f.obj_map[x]]:
            raise NotEquivariant(f"F(T({x})) != T'(F({x}))", object=x)
    for m in range(len(a.t_mor)):
        if f.mor_map[a.t_mor[m]] != b.t_mor[f.mor_map[m]]:
            raise NotEquivariant(f"F(T({m})) != T'(F({m}))", morphism=m)
    return ASchemoidMorphism(f, a, b)


def enumerate_amorphisms(a: ASchemoid, b: ASchemoid, universe=None, limits=None
                         ) -> list[ASchemoidMorphism]:
    if universe is None:
        universe = enumerate_morphisms(a.base, b.base, limits or DEFAULT_LIMITS)
    out = []
    for f in universe:
        try:
            out.append(validate_amorphism(f, a, b))
        except NotEquivariant:
            continue
    return out


def _is_equivariant(h: Homotopy, a: ASchemoid, b: ASchemoid) -> bool:
    """``H o (T x t) == T' o H`` on the cylinder ``a x I~``.

    On objects and on the end morphisms this reads ``G T = T' F`` and
    ``F T = T' G``; on the ``u``-morphisms it reads
    ``H(T m, u) == T'(H(m, u))``.
    """
    f, g = h.f, h.g
    cat = a.base.cat
    for x in range(cat.n_objects):
        if g.obj_map[a.t_obj[x]] != b.t_obj[f.obj_map[x]]:
            return False
        if f.obj_map[a.t_obj[x]] != b.t_obj[g.obj_map[x]]:
            return False
    for m in range(cat.n_morphisms):
        if g.mor_map[a.t_mor[m]] != b.t_mor[f.mor_map[m]]:
            return False
        if f.mor_map[a.t_mor[m]] != b.t_mor[g.mor_map[m]]:
            return False
        if h.diagonal(a.t_mor[m]) != b.t_mor[h.diagonal(m)]:
            return False
    return True


def asmd_elementary_homotopy(f: ASchemoidMorphism, g: ASchemoidMorphism) -> Homotopy | None:
    """First homotopy ``f => g`` whose cylinder morphism is also equivariant, or ``None``."""
    if f.source != g.source or f.target != g.target:
        raise SourceTargetMismatch("morphisms do not share source and target")
    for h in iter_homotopies(f.morphism, g.morphism):
        if _is_equivariant(h, f.source, f.target):
            return h
    return None


def proof_identity_holds(h: Homotopy, a: ASchemoid, b: ASchemoid) -> bool:
    """``T' F(m) == G T(m)`` for every morphism ``m``."""
    return all(b.t_mor[h.f.mor_map[m]] == h.g.mor_map[a.t_mor[m]]
               for m in range(a.base.cat.n_morphisms))


def all_involutions(q: QSchemoid, max_candidates: int = 10 ** 6) -> list[ASchemoid]:
    """Exhaustively try every pair of maps (objects, morphisms) and keep the valid involutions."""
    n, m = q.cat.n_objects, q.cat.n_morphisms
    if n ** n * m ** m > max_candidates:
        raise SearchCapExceeded("too many candidate maps for an exhaustive search",
                                size=n ** n * m ** m, cap=max_candidates)
    found = []
    for t_obj in product(range(n), repeat=n):
        for t_mor in product(range(m), repeat=m):
            try:
                found.append(validate_aschemoid(q, t_obj, t_mor))
            except (NotContravariant, NotInvolutive, BlockSplitUnderT):
                continue
    return found
