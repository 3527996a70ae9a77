"""Partitions of morphism sets, quasi-schemoids, association schemes and their morphisms.

Structure constants are stored as ``constants[sigma, tau, mu]``: the number of
pairs ``(f, g)`` with ``f`` in ``sigma``, ``g`` in ``tau`` and ``f o g`` equal to a
fixed morphism of ``mu``. ``f`` is the outer (left) factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import (
    BlockSplit,
    DiagonalNotSingleRelation,
    NonConstantCount,
    PartitionError,
    RegularityViolation,
    SchemeError,
    SourceTargetMismatch,
    TransposeMissing,
)
from .fincat import FinCat, FinGroupoid, Functor, validate_functor


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.blocks)

    def name(self, b: int) -> str:
        return self.names[b] if self.names else str(b)


def make_partition(n_morphisms: int, blocks: Sequence[Sequence[int]],
                   names: Sequence[str] | None = None) -> Partition:
    """Validate a list of blocks over ``range(n_morphisms)``; block order is kept."""
    block_of = [-1] * n_morphisms
    clean = []
    for b, block in enumerate(blocks):
        members = sorted(int(m) for m in block)
        if not members:
            raise PartitionError(f"block {b} is empty", block=b)
        for m in members:
            if not 0 <= m < n_morphisms:
                raise PartitionError(f"block {b} contains unknown morphism {m}",
                                     block=b, morphism=m)
            if block_of[m] != -1:
                raise PartitionError(f"morphism {m} lies in blocks {block_of[m]} and {b}",
                                     morphism=m, blocks=(block_of[m], b))
            block_of[m] = b
        clean.append(tuple(members))
    missing = [m for m in range(n_morphisms) if block_of[m] == -1]
    if missing:
        raise PartitionError(f"morphism {missing[0]} is in no block", morphism=missing[0])
    if names is not None and len(names) != len(clean):
        raise PartitionError("one name per block is required")
    return Partition(tuple(clean), tuple(block_of), tuple(names) if names is not None else None)


def partition_from_labels(labels: Sequence[int]) -> Partition:
    """Blocks indexed by label value; labels must be dense ``0..k-1``."""
    k = max(labels) + 1 if labels else 0
    blocks: list[list[int]] = [[] for _ in range(k)]
    for m, lab in enumerate(labels):
        blocks[lab].append(m)
    return make_partition(len(labels), blocks)


@dataclass(frozen=True, eq=False)
class QSchemoid:
    """A finite category with a regular partition of its morphisms."""

    cat: FinCat
    partition: Partition
    constants: np.ndarray = field(repr=False)
    # stilde() records the groupoid it was built from
    groupoid: FinGroupoid | None = field(default=None, repr=False)

    @property
    def n_blocks(self) -> int:
        return len(self.partition.blocks)

    def block_of(self, m: int) -> int:
        return self.partition.block_of[m]

    def p(self, sigma: int, tau: int, mu: int) -> int:
        return int(self.constants[sigma, tau, mu])

    @cached_property
    def _key(self):
        return (self.cat, self.partition.blocks)

    def __eq__(self, other):
        if not isinstance(other, QSchemoid):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @cached_property
    def identity_blocks(self) -> frozenset[int]:
        return frozenset(self.partition.block_of[e] for e in self.cat.identity)

    def describe(self) -> str:
        return (f"{self.cat.n_objects} objects, {self.cat.n_morphisms} morphisms, "
                f"{self.n_blocks} blocks")


def _fiber_counts(cat: FinCat, partition: Partition) -> np.ndarray:
    nb = len(partition.blocks)
    counts = np.zeros((nb, nb, cat.n_morphisms), dtype=np.int64)
    bo = partition.block_of
    for (outer, inner), h in cat.comp.items():
        counts[bo[outer], bo[inner], h] += 1
    return counts


def validate_schemoid(cat: FinCat, partition: Partition,
                      groupoid: FinGroupoid | None = None) -> QSchemoid:
    """Check that concatenation fibres have constant size over every block.

    Raises :class:`RegularityViolation` for the first ``(sigma, tau, mu)`` in
    lexicographic order whose fibres over two morphisms of ``mu`` differ.
    """
    if len(partition.block_of) != cat.n_morphisms:
        raise PartitionError("partition does not cover the morphisms of the category")
    counts = _fiber_counts(cat, partition)
    nb = len(partition.blocks)
    constants = np.zeros((nb, nb, nb), dtype=np.int64)
    for mu, members in enumerate(partition.blocks):
        sub = counts[:, :, list(members)]
        first = sub[:, :, :1]
        bad = np.argwhere(sub != first)
        if bad.size:
            sigma, tau, j = (int(v) for v in bad[0])
            f, g = members[0], members[j]
            raise RegularityViolation(
                f"blocks ({sigma}, {tau}) over block {mu}: fibre over {f} has "
                f"{int(first[sigma, tau, 0])} elements, over {g} has {int(sub[sigma, tau, j])}",
                sigma=sigma, tau=tau, mu=mu, f=f, g=g,
                size_f=int(first[sigma, tau, 0]), size_g=int(sub[sigma, tau, j]))
        constants[:, :, mu] = first[:, :, 0]
    constants.setflags(write=False)
    return QSchemoid(cat, partition, constants, groupoid)


def structure_constants(q: QSchemoid) -> np.ndarray:
    """Read-only table ``[sigma, tau, mu] -> p^mu_{sigma tau}``."""
    return q.constants


# -- association schemes -----------------------------------------------------

@dataclass(frozen=True, eq=False)
class AssocScheme:
    n_points: int
    relation: tuple[tuple[int, ...], ...]
    n_relations: int
    transpose: tuple[int, ...]
    constants: np.ndarray = field(repr=False)

    def p(self, e: int, f: int, g: int) -> int:
        return int(self.constants[e, f, g])

    def __eq__(self, other):
        if not isinstance(other, AssocScheme):
            return NotImplemented
        return self.relation == other.relation

    def __hash__(self):
        return hash(self.relation)

    def relation_size(self, e: int) -> int:
        return sum(row.count(e) for row in self.relation)


def validate_scheme(matrix: Sequence[Sequence[int]]) -> AssocScheme:
    """Check the association scheme axioms on a relation matrix ``(x, y) -> relation``."""
    n = len(matrix)
    rel = tuple(tuple(int(v) for v in row) for row in matrix)
    if n == 0:
        raise SchemeError("a scheme needs at least one point")
    for x, row in enumerate(rel):
        if len(row) != n:
            raise SchemeError(f"row {x} has {len(row)} entries, expected {n}", row=x)
        if min(row) < 0:
            raise SchemeError(f"row {x} has a negative relation index", row=x)
    d = max(max(row) for row in rel) + 1
    present = {v for row in rel for v in row}
    if present != set(range(d)):
        missing = min(set(range(d)) - present)
        raise SchemeError(f"relation indices are not dense: {missing} is unused", relation=missing)
    for x in range(n):
        if rel[x][x] != 0:
            raise DiagonalNotSingleRelation(f"entry ({x}, {x}) is {rel[x][x]}, expected 0",
                                            point=x)
        for y in range(n):
            if x != y and rel[x][y] == 0:
                raise DiagonalNotSingleRelation(
                    f"off-diagonal entry ({x}, {y}) uses relation 0", pair=(x, y))

    arr = np.array(rel, dtype=np.int64)
    adj = np.stack([(arr == e).astype(np.int64) for e in range(d)])
    transpose = []
    for e in range(d):
        t = adj[e].T
        y0, x0 = np.argwhere(adj[e])[0]
        candidate = int(arr[x0, y0])
        if not np.array_equal(adj[candidate], t):
            raise TransposeMissing(f"transpose of relation {e} is not a relation", relation=e)
        transpose.append(candidate)

    constants = np.zeros((d, d, d), dtype=np.int64)
    for e in range(d):
        for f in range(d):
            prod = adj[e] @ adj[f]
            for g in range(d):
                vals = prod[adj[g] == 1]
                if np.any(vals != vals[0]):
                    where = np.argwhere(adj[g] == 1)
                    j = int(np.argmax(vals != vals[0]))
                    raise NonConstantCount(
                        f"p_({e},{f})^{g} is {int(vals[0])} at {tuple(int(v) for v in where[0])} "
                        f"but {int(vals[j])} at {tuple(int(v) for v in where[j])}",
                        e=e, f=f, g=g,
                        witnesses=(tuple(int(v) for v in where[0]), tuple(int(v) for v in where[j])))
                constants[e, f, g] = vals[0]
    constants.setflags(write=False)
    return AssocScheme(n, rel, d, tuple(transpose), constants)


def trivial_scheme(n: int) -> AssocScheme:
    """Diagonal is relation 0, everything else relation 1 (one relation when ``n == 1``)."""
    return validate_scheme([[0 if x == y else 1 for y in range(n)] for x in range(n)])


# -- schemoid morphisms --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SchemoidMorphism:
    source: QSchemoid
    target: QSchemoid
    functor: Functor
    block_image: tuple[int, ...]

    @property
    def obj_map(self) -> tuple[int, ...]:
        return self.functor.obj_map

    @property
    def mor_map(self) -> tuple[int, ...]:
        return self.functor.mor_map

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.functor.key

    def __eq__(self, other):
        if not isinstance(other, SchemoidMorphism):
            return NotImplemented
        return (self.functor.key == other.functor.key
                and self.source == other.source and self.target == other.target)

    def __hash__(self):
        return hash(self.functor.key)

    def __repr__(self):
        return f"SchemoidMorphism(obj_map={self.obj_map}, mor_map={self.mor_map})"

    def compose(self, inner: "SchemoidMorphism") -> "SchemoidMorphism":
        """``self o inner``."""
        if inner.target != self.source:
            raise SourceTargetMismatch("schemoid morphisms are not composable")
        return SchemoidMorphism(inner.source, self.target, self.functor.compose(inner.functor),
                                tuple(self.block_image[b] for b in inner.block_image))

    def is_bijective(self) -> bool:
        return self.functor.is_bijective()


def validate_morphism(f: Functor, a: QSchemoid, b: QSchemoid) -> SchemoidMorphism:
    """Check that ``f`` is a functor ``U(a) -> U(b)`` mapping each block into one block."""
    if f.src_cat != a.cat or f.tgt_cat != b.cat:
        raise SourceTargetMismatch("functor does not run between the given schemoids")
    validate_functor(a.cat, b.cat, f.obj_map, f.mor_map)
    image = []
    for sigma, members in enumerate(a.partition.blocks):
        m1 = members[0]
        tau = b.block_of(f.mor_map[m1])
        for m2 in members[1:]:
            if b.block_of(f.mor_map[m2]) != tau:
                raise BlockSplit(
                    f"block {sigma}: {m1} and {m2} map into different blocks",
                    sigma=sigma, m1=m1, m2=m2)
        image.append(tau)
    return SchemoidMorphism(a, b, f, tuple(image))


def schemoid_morphism(a: QSchemoid, b: QSchemoid, obj_map: Sequence[int],
                      mor_map: Sequence[int]) -> SchemoidMorphism:
    return validate_morphism(Functor(a.cat, b.cat, tuple(obj_map), tuple(mor_map)), a, b)


def thin_morphism(a: QSchemoid, b: QSchemoid, obj_map: Sequence[int]) -> SchemoidMorphism:
    """Extend an object map to a functor into a thin target, then validate."""
    if not b.cat.is_thin:
        raise SourceTargetMismatch("thin_morphism needs a thin target category")
    mor_map = []
    for m in range(a.cat.n_morphisms):
        hom = b.cat.hom(obj_map[a.cat.src[m]], obj_map[a.cat.tgt[m]])
        if not hom:
            raise BlockSplit(f"no morphism available for the image of {m}", m1=m, m2=m)
        mor_map.append(hom[0])
    return schemoid_morphism(a, b, obj_map, mor_map)


def identity_morphism(a: QSchemoid) -> SchemoidMorphism:
    return SchemoidMorphism(a, a, Functor(a.cat, a.cat, tuple(range(a.cat.n_objects)),
                                          tuple(range(a.cat.n_morphisms))),
                            tuple(range(a.n_blocks)))


def constant_morphism(a: QSchemoid, b: QSchemoid, y: int) -> SchemoidMorphism:
    e = b.cat.identity[y]
    return SchemoidMorphism(a, b, Functor(a.cat, b.cat, (y,) * a.cat.n_objects,
                                          (e,) * a.cat.n_morphisms),
                            (b.block_of(e),) * a.n_blocks)
