"""Elementary homotopies, the relation they generate, and 2-cell composition.

An elementary homotopy ``H: F => G`` between schemoid morphisms ``A -> B`` is
stored by its diagonal family ``diag[x]: F(x) -> G(x)``. The full cylinder
morphism ``A x I -> B`` is ``H(m, 1_0) = F(m)``, ``H(m, 1_1) = G(m)`` and
``H(m, u) = G(m) o diag[src m]``; it is a schemoid morphism exactly when

* every square commutes: ``G(m) o diag[src m] == diag[tgt m] o F(m)``, and
* for each block of ``A`` the diagonals ``H(m, u)`` of its members share a
  block of ``B``. Identity morphisms count here too: ``H(1_x, u)`` is
  ``diag[x]`` itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .constructors import check_same_ends, cylinder
from .errors import (
    BoundaryMismatch,
    EndpointMismatch,
    NotThinSchemoid,
    UniverseMismatch,
)
from .fincat import Functor, iter_functor_maps
from .schemoid import (
    QSchemoid,
    SchemoidMorphism,
    constant_morphism,
    identity_morphism,
    validate_morphism,
)
from .search import (
    DEFAULT_LIMITS,
    SearchLimits,
    bfs_path,
    check_universe,
    connected_components,
)


@dataclass(frozen=True)
class Homotopy:
    f: SchemoidMorphism
    g: SchemoidMorphism
    diag: tuple[int, ...]

    @property
    def source(self) -> QSchemoid:
        return self.f.source

    @property
    def target(self) -> QSchemoid:
        return self.f.target

    def diagonal(self, m: int) -> int:
        """``H(m, u)``."""
        a = self.source.cat
        return self.target.cat.comp[(self.g.mor_map[m], self.diag[a.src[m]])]

    def cylinder_morphism(self) -> SchemoidMorphism:
        """Rebuild ``H: A x I -> B`` and validate it as a schemoid morphism."""
        a, b = self.source, self.target
        cyl, _, _ = cylinder(a)
        obj_map = []
        for x in range(a.cat.n_objects):
            obj_map += [self.f.obj_map[x], self.g.obj_map[x]]
        mor_map = []
        for m in range(a.cat.n_morphisms):
            mor_map += [self.f.mor_map[m], self.g.mor_map[m], self.diagonal(m)]
        return validate_morphism(Functor(cyl.cat, b.cat, tuple(obj_map), tuple(mor_map)), cyl, b)


def is_homotopy(f: SchemoidMorphism, g: SchemoidMorphism, diag: Sequence[int]) -> bool:
    """Direct check of the square and block conditions for a proposed diagonal family."""
    a, b = f.source, f.target
    ac, bc = a.cat, b.cat
    for x, d in enumerate(diag):
        if bc.src[d] != f.obj_map[x] or bc.tgt[d] != g.obj_map[x]:
            return False
    seen: dict[int, int] = {}
    for m in range(ac.n_morphisms):
        top = bc.comp[(g.mor_map[m], diag[ac.src[m]])]
        if top != bc.comp[(diag[ac.tgt[m]], f.mor_map[m])]:
            return False
        blk = b.block_of(top)
        if seen.setdefault(a.block_of(m), blk) != blk:
            return False
    return True


def iter_homotopies(f: SchemoidMorphism, g: SchemoidMorphism) -> Iterator[Homotopy]:
    """Every elementary homotopy ``f => g``, in lexicographic order of the diagonal family.

    Diagonal components are chosen for objects ``0, 1, ...`` from the Hom
    sets in increasing index order. Squares are checked as soon as both
    endpoints are fixed; block coherence as soon as a source is fixed.
    """
    check_same_ends(f, g)
    a, b = f.source, f.target
    ac, bc = a.cat, b.cat
    n = ac.n_objects
    bcomp = bc.comp
    fm, gm = f.mor_map, g.mor_map
    a_block, b_block = a.partition.block_of, b.partition.block_of

    outgoing: list[list[int]] = [[] for _ in range(n)]
    for m in range(ac.n_morphisms):
        outgoing[ac.src[m]].append(m)
    squares: list[list[int]] = [[] for _ in range(n)]
    for m in range(ac.n_morphisms):
        if not ac.is_identity(m):
            squares[max(ac.src[m], ac.tgt[m])].append(m)

    diag = [-1] * n
    color: dict[int, int] = {}
    count: dict[int, int] = {}

    def rec(x: int):
        if x == n:
            yield Homotopy(f, g, tuple(diag))
            return
        for d in bc.hom(f.obj_map[x], g.obj_map[x]):
            diag[x] = d
            ok = True
            for m in squares[x]:
                if bcomp[(gm[m], diag[ac.src[m]])] != bcomp[(diag[ac.tgt[m]], fm[m])]:
                    ok = False
                    break
            bound = []
            if ok:
                for m in outgoing[x]:
                    s, t = a_block[m], b_block[bcomp[(gm[m], d)]]
                    prev = color.get(s)
                    if prev is None:
                        color[s] = t
                        count[s] = 1
                    elif prev == t:
                        count[s] += 1
                    else:
                        ok = False
                        break
                    bound.append(s)
            if ok:
                yield from rec(x + 1)
            for s in bound:
                count[s] -= 1
                if count[s] == 0:
                    del color[s], count[s]
        diag[x] = -1

    yield from rec(0)


def elementary_homotopy(f: SchemoidMorphism, g: SchemoidMorphism) -> Homotopy | None:
    """The lexicographically least certificate for ``f => g``, or ``None``."""
    return next(iter_homotopies(f, g), None)


def self_homotopy(f: SchemoidMorphism) -> Homotopy:
    """The homotopy ``f => f`` with identity diagonals."""
    return Homotopy(f, f, tuple(f.target.cat.identity[y] for y in f.obj_map))


# -- chains --------------------------------------------------------------------

@dataclass(frozen=True)
class ChainStep:
    homotopy: Homotopy
    forward: bool  # True: morphisms[k] => morphisms[k+1]


@dataclass(frozen=True)
class HomotopyChain:
    morphisms: tuple[SchemoidMorphism, ...]
    steps: tuple[ChainStep, ...]

    def __post_init__(self):
        if len(self.morphisms) != len(self.steps) + 1:
            raise EndpointMismatch("a chain has one more morphism than steps")
        for k, step in enumerate(self.steps):
            h = step.homotopy
            lo, hi = (h.f, h.g) if step.forward else (h.g, h.f)
            if lo != self.morphisms[k] or hi != self.morphisms[k + 1]:
                raise EndpointMismatch(f"step {k} does not join consecutive morphisms", step=k)

    @classmethod
    def trivial(cls, f: SchemoidMorphism) -> "HomotopyChain":
        return cls((f,), ())

    @classmethod
    def single(cls, h: Homotopy, forward: bool = True) -> "HomotopyChain":
        ends = (h.f, h.g) if forward else (h.g, h.f)
        return cls(ends, (ChainStep(h, forward),))

    @property
    def start(self) -> SchemoidMorphism:
        return self.morphisms[0]

    @property
    def end(self) -> SchemoidMorphism:
        return self.morphisms[-1]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def is_directed(self) -> bool:
        return all(s.forward for s in self.steps)

    def composite_transformation(self) -> tuple[int, ...]:
        """Componentwise composite of the diagonals of a directed chain."""
        if not self.is_directed:
            raise EndpointMismatch("only directed chains compose to a single transformation")
        bc = self.start.target.cat
        total = [bc.identity[y] for y in self.start.obj_map]
        for step in self.steps:
            total = [bc.comp[(d, t)] for d, t in zip(step.homotopy.diag, total)]
        return tuple(total)

    def is_valid(self) -> bool:
        return all(is_homotopy(s.homotopy.f, s.homotopy.g, s.homotopy.diag) for s in self.steps)


def vertical_compose(h1: HomotopyChain, h2: HomotopyChain) -> HomotopyChain:
    """``h2 o h1``: first ``h1``, then ``h2``; lengths add."""
    if h1.end != h2.start:
        raise EndpointMismatch("end of the first chain is not the start of the second")
    return HomotopyChain(h1.morphisms + h2.morphisms[1:], h1.steps + h2.steps)


def whisker_left(g: SchemoidMorphism, chain: HomotopyChain) -> HomotopyChain:
    """``g chain``: post-compose every stage with ``g``; diagonals become ``g(diag)``."""
    if chain.start.target != g.source:
        raise BoundaryMismatch("whiskering morphism does not start where the chain ends")
    steps = []
    for s in chain.steps:
        h = s.homotopy
        steps.append(ChainStep(Homotopy(g.compose(h.f), g.compose(h.g),
                                        tuple(g.mor_map[d] for d in h.diag)), s.forward))
    return HomotopyChain(tuple(g.compose(m) for m in chain.morphisms), tuple(steps))


def whisker_right(chain: HomotopyChain, f: SchemoidMorphism) -> HomotopyChain:
    """``chain f``: pre-compose every stage with ``f``; diagonals become ``diag[f(x)]``."""
    if chain.start.source != f.target:
        raise BoundaryMismatch("whiskering morphism does not end where the chain starts")
    steps = []
    for s in chain.steps:
        h = s.homotopy
        steps.append(ChainStep(Homotopy(h.f.compose(f), h.g.compose(f),
                                        tuple(h.diag[y] for y in f.obj_map)), s.forward))
    return HomotopyChain(tuple(m.compose(f) for m in chain.morphisms), tuple(steps))


def horizontal_compose(nu: HomotopyChain, kappa: HomotopyChain,
                       left_first: bool = True) -> HomotopyChain:
    """``nu * kappa`` for ``nu: G1 => G2`` over ``D -> E`` and ``kappa: F1 => F2`` over ``C -> D``.

    With ``left_first`` the result is ``(nu F2) o (G1 kappa)``; otherwise
    ``(G2 kappa) o (nu F1)``. Both run from ``G1 F1`` to ``G2 F2``.
    """
    if nu.start.source != kappa.start.target:
        raise BoundaryMismatch("2-cells are not horizontally composable")
    if left_first:
        return vertical_compose(whisker_left(nu.start, kappa), whisker_right(nu, kappa.end))
    return vertical_compose(whisker_right(nu, kappa.start), whisker_left(nu.end, kappa))


# -- the relation generated by elementary homotopies ------------------------------

def enumerate_morphisms(a: QSchemoid, b: QSchemoid,
                        limits: SearchLimits = DEFAULT_LIMITS) -> list[SchemoidMorphism]:
    """All schemoid morphisms ``a -> b``, sorted by ``(obj_map, mor_map)``."""
    limits.check_objects(a.cat.n_objects, "source")
    limits.check_objects(b.cat.n_objects, "target")
    out = []
    for obj_map, mor_map in iter_functor_maps(a.cat, b.cat, src_colors=a.partition.block_of,
                                              tgt_colors=b.partition.block_of):
        blocks = tuple(b.block_of(mor_map[members[0]]) for members in a.partition.blocks)
        out.append(SchemoidMorphism(a, b, Functor(a.cat, b.cat, obj_map, mor_map), blocks))
        check_universe(len(out), limits)
    out.sort(key=lambda F: F.key)
    return out


class HomotopyGraph:
    """Elementary-homotopy edges over a fixed universe of morphisms, computed lazily and cached."""

    def __init__(self, universe: Sequence[SchemoidMorphism]):
        self.universe = list(universe)
        self.position = {m: i for i, m in enumerate(self.universe)}
        self._cache: dict[tuple[int, int], Homotopy | None] = {}

    def __len__(self) -> int:
        return len(self.universe)

    def homotopy(self, u: int, v: int) -> Homotopy | None:
        key = (u, v)
        if key not in self._cache:
            self._cache[key] = elementary_homotopy(self.universe[u], self.universe[v])
        return self._cache[key]

    def edge(self, u: int, v: int) -> ChainStep | None:
        h = self.homotopy(u, v)
        if h is not None:
            return ChainStep(h, True)
        h = self.homotopy(v, u)
        if h is not None:
            return ChainStep(h, False)
        return None

    def index(self, f: SchemoidMorphism) -> int:
        try:
            return self.position[f]
        except KeyError:
            raise UniverseMismatch("morphism is not in the universe", morphism=f) from None

    def chain(self, f: SchemoidMorphism, g: SchemoidMorphism) -> HomotopyChain | None:
        u, v = self.index(f), self.index(g)
        path = bfs_path(u, v, len(self), self.edge)
        if path is None:
            return None
        morphisms = [self.universe[u]] + [self.universe[node] for node, _ in path]
        return HomotopyChain(tuple(morphisms), tuple(step for _, step in path))

    def components(self, threads: int = 1) -> list[list[int]]:
        return connected_components(len(self), lambda u, v: self.edge(u, v) is not None,
                                    threads=threads)


def homotopic(f: SchemoidMorphism, g: SchemoidMorphism,
              universe: Sequence[SchemoidMorphism] | HomotopyGraph | None = None,
              limits: SearchLimits = DEFAULT_LIMITS) -> tuple[bool, HomotopyChain | None]:
    """Decide ``f ~= g``; returns ``(answer, shortest chain)``.

    ``universe`` defaults to every morphism between the common endpoints;
    because it is exhaustive the closure is exact.
    """
    check_same_ends(f, g)
    if isinstance(universe, HomotopyGraph):
        graph = universe
    else:
        if universe is None:
            universe = enumerate_morphisms(f.source, f.target, limits)
        graph = HomotopyGraph(universe)
    graph.index(f)
    graph.index(g)
    chain = graph.chain(f, g)
    return chain is not None, chain


def homotopy_classes(a: QSchemoid, b: QSchemoid,
                     universe: Sequence[SchemoidMorphism] | None = None,
                     limits: SearchLimits = DEFAULT_LIMITS,
                     threads: int = 1) -> list[list[SchemoidMorphism]]:
    """Homotopy classes of morphisms ``a -> b``; each class sorted, classes ordered by representative."""
    if universe is None:
        universe = enumerate_morphisms(a, b, limits)
    graph = HomotopyGraph(universe)
    return [[graph.universe[i] for i in comp] for comp in graph.components(threads)]


def contraction(a: QSchemoid, limits: SearchLimits = DEFAULT_LIMITS
                ) -> tuple[int, HomotopyChain] | None:
    """An object ``x0`` and a chain from the identity to the constant morphism at ``x0``."""
    ident = identity_morphism(a)
    consts = [constant_morphism(a, a, x0) for x0 in range(a.cat.n_objects)]
    for x0, c in enumerate(consts):
        h = elementary_homotopy(ident, c)
        if h is not None:
            return x0, HomotopyChain.single(h, True)
        h = elementary_homotopy(c, ident)
        if h is not None:
            return x0, HomotopyChain.single(h, False)
    graph = HomotopyGraph(enumerate_morphisms(a, a, limits))
    for x0, c in enumerate(consts):
        chain = graph.chain(ident, c)
        if chain is not None:
            return x0, chain
    return None


def is_contractible(a: QSchemoid, limits: SearchLimits = DEFAULT_LIMITS) -> bool:
    """Homotopy equivalent to ``K(*)``: some constant endomorphism is homotopic to the identity."""
    return contraction(a, limits) is not None


def collapse_obstruction(q: QSchemoid) -> tuple[bool, tuple[int, int] | None]:
    """Look for blocks ``sigma, tau`` with ``tau`` holding a non-identity and
    ``p^sigma_{sigma tau} != 0`` or ``p^sigma_{tau sigma} != 0``.

    Returns ``(found, (sigma, tau))`` for the first such pair.
    """
    ident = q.cat.identity_set
    for sigma in range(q.n_blocks):
        for tau, members in enumerate(q.partition.blocks):
            if all(m in ident for m in members):
                continue
            if q.p(sigma, tau, sigma) or q.p(tau, sigma, sigma):
                return True, (sigma, tau)
    return False, None


def thin_homotopy_criterion(phi: SchemoidMorphism, psi: SchemoidMorphism) -> bool:
    """Homotopy test between morphisms of groupoid-built schemoids by a groupoid identity.

    ``phi => psi`` exists iff ``psi(j)^-1 phi(i)`` is defined and depends only
    on the block of the source morphism ``(j, i): i -> j``.
    """
    check_same_ends(phi, psi)
    a, b = phi.source, phi.target
    if a.groupoid is None or b.groupoid is None:
        raise NotThinSchemoid("both schemoids must be built by stilde()")
    h = b.groupoid
    hc = h.cat
    value: dict[int, int] = {}
    for m in range(a.cat.n_morphisms):
        i, j = a.cat.src[m], a.cat.tgt[m]
        pj, fi = psi.obj_map[j], phi.obj_map[i]
        if hc.tgt[pj] != hc.tgt[fi]:
            return False
        v = h.compose(h.inv(pj), fi)
        if value.setdefault(a.block_of(m), v) != v:
            return False
    return True

