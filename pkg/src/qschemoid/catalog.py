"""Named small groups and categories used by the tests, fixtures and CLI."""

from __future__ import annotations

from itertools import permutations, product

from .fincat import FinCat, FinGroup, validate_category, validate_group
from .schemoid import QSchemoid, make_partition, validate_schemoid


def cyclic_group(n: int) -> FinGroup:
    return validate_group([[(a + b) % n for b in range(n)] for a in range(n)],
                          names=[str(a) for a in range(n)])


def direct_product_group(g: FinGroup, h: FinGroup) -> FinGroup:
    """Element ``(a, b)`` has index ``a * |h| + b``."""
    n = h.order
    table = [[g.mul(a1, a2) * n + h.mul(b1, b2)
              for a2 in range(g.order) for b2 in range(n)]
             for a1 in range(g.order) for b1 in range(n)]
    names = [f"({g.name(a)},{h.name(b)})" for a in range(g.order) for b in range(n)]
    return validate_group(table, names=names)


def klein_four_group() -> FinGroup:
    return direct_product_group(cyclic_group(2), cyclic_group(2))


def symmetric_group(n: int) -> FinGroup:
    """Permutations of ``range(n)`` in lexicographic order (identity first).

    The product ``ab`` is the composite "apply ``b``, then ``a``".
    """
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    return validate_group(table, names=["".join(map(str, p)) for p in perms])


def dihedral_group(k: int) -> FinGroup:
    """Symmetries of a regular ``k``-gon, order ``2k``: ``r^i`` is ``i``, ``r^i s`` is ``k + i``."""
    def decode(x):
        return (x % k, x // k)  # (rotation, reflection flag)

    def mul(x, y):
        i, a = decode(x)
        j, b = decode(y)
        rot = (i + (-j if a else j)) % k
        return rot + k * (a ^ b)

    return validate_group([[mul(x, y) for y in range(2 * k)] for x in range(2 * k)])


def idempotent_pairs_category(n: int) -> FinCat:
    """Objects ``0..n-1``, identities, and one more morphism ``phi_ij: i -> j`` per ordered pair.

    ``phi_jk o phi_ij = phi_ik``; in particular each ``phi_ii`` is a
    non-identity idempotent. Identities come first (index ``i``), then
    ``phi_ij`` at index ``n + i * n + j``.
    """
    morphisms = [(i, i) for i in range(n)] + [(i, j) for i, j in product(range(n), repeat=2)]

    def phi(i, j):
        return n + i * n + j

    comp = {}
    for i, j, k in product(range(n), repeat=3):
        comp[(phi(j, k), phi(i, j))] = phi(i, k)
    names = [f"1_{i}" for i in range(n)] + [f"phi_{i}{j}" for i, j in product(range(n), repeat=2)]
    return validate_category(n, morphisms, list(range(n)), comp, morphism_names=names)


def idempotent_pairs_schemoid(n: int) -> QSchemoid:
    """A contractible schemoid: blocks ``sigma`` (all ``phi_ij``) and ``1`` (all identities)."""
    cat = idempotent_pairs_category(n)
    part = make_partition(cat.n_morphisms, [range(n, n + n * n), range(n)], names=["sigma", "1"])
    return validate_schemoid(cat, part)


def commuting_square_category() -> FinCat:
    """Objects x, a, b, y; ``beta alpha = epsilon = delta gamma``."""
    morphisms = [(0, 0), (1, 1), (2, 2), (3, 3),  # identities
                 (0, 1), (1, 3), (0, 2), (2, 3), (0, 3)]  # alpha beta gamma delta epsilon
    comp = {(5, 4): 8, (7, 6): 8}
    return validate_category(4, morphisms, [0, 1, 2, 3], comp,
                             object_names=["x", "a", "b", "y"],
                             morphism_names=["1_x", "1_a", "1_b", "1_y",
                                             "alpha", "beta", "gamma", "delta", "epsilon"])


def commuting_square_schemoid() -> QSchemoid:
    cat = commuting_square_category()
    part = make_partition(9, [[4, 6], [5, 7], [8], [0, 1, 2, 3]],
                          names=["sigma1", "sigma2", "sigma3", "1"])
    return validate_schemoid(cat, part)
