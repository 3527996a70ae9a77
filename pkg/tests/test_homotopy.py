import pytest

from helpers import brute_classes, brute_elementary, brute_morphisms

from qschemoid.catalog import commuting_square_schemoid, cyclic_group, idempotent_pairs_schemoid
from qschemoid.constructors import interval, iota, jmath, stilde, trivial_schemoid
from qschemoid.errors import EndpointMismatch, NotThinSchemoid, UniverseMismatch
from qschemoid.homotopy import (
    HomotopyChain,
    collapse_obstruction,
    contraction,
    elementary_homotopy,
    enumerate_morphisms,
    homotopic,
    homotopy_classes,
    horizontal_compose,
    is_contractible,
    is_homotopy,
    self_homotopy,
    thin_homotopy_criterion,
    vertical_compose,
    whisker_left,
)
from qschemoid.schemoid import identity_morphism, thin_morphism, trivial_scheme

J2 = jmath(trivial_scheme(2))
J3 = jmath(trivial_scheme(3))


def test_self_homotopy_is_valid():
    for a in (J3, idempotent_pairs_schemoid(2), commuting_square_schemoid()):
        for f in enumerate_morphisms(a, a):
            h = self_homotopy(f)
            assert is_homotopy(f, f, h.diag)
            h.cylinder_morphism()


def test_identity_to_swap_on_two_points():
    ident, swap = identity_morphism(J2), thin_morphism(J2, J2, (1, 0))
    h = elementary_homotopy(ident, swap)
    # diag(0): 0 -> 1 is (1, 0), diag(1): 1 -> 0 is (0, 1)
    assert h.diag == (2, 1)
    assert h.cylinder_morphism().target == J2


def test_no_homotopy_between_permutations_on_three_points():
    ident = identity_morphism(J3)
    for f in enumerate_morphisms(J3, J3):
        if f.is_bijective() and f != ident:
            assert elementary_homotopy(ident, f) is None
            assert elementary_homotopy(f, ident) is None


def test_universe_sizes():
    assert len(enumerate_morphisms(J3, J3)) == 9
    assert len(enumerate_morphisms(trivial_schemoid(), J2)) == 2
    assert len(enumerate_morphisms(J3, trivial_schemoid())) == 1


@pytest.mark.parametrize("a,b", [(J2, J2), (J3, J3), (interval(), J2), (idempotent_pairs_schemoid(2), J2),
                                 (commuting_square_schemoid(), interval())], ids=str)
def test_universe_matches_brute_force(a, b):
    assert [f.key for f in enumerate_morphisms(a, b)] == brute_morphisms(a, b)


@pytest.mark.parametrize("a,b", [(J2, J2), (interval(), interval()), (idempotent_pairs_schemoid(2), J2),
                                 (interval(), J3)], ids=str)
def test_elementary_matches_brute_force(a, b):
    univ = enumerate_morphisms(a, b)
    for f in univ:
        for g in univ:
            assert (elementary_homotopy(f, g) is not None) == brute_elementary(f, g)


def test_classes():
    classes = homotopy_classes(J2, J2)
    ident, swap = identity_morphism(J2), thin_morphism(J2, J2, (1, 0))
    assert any(ident in c and swap in c for c in classes)
    univ = enumerate_morphisms(J2, J2)
    assert sorted(sorted(univ.index(f) for f in c) for c in classes) == brute_classes(univ)
    classes3 = homotopy_classes(J3, J3)
    for c in classes3:
        if any(f.is_bijective() for f in c):
            assert len(c) == 1
    assert len(homotopy_classes(trivial_schemoid(), trivial_schemoid())) == 1


def test_homotopic_reflexive_and_chain():
    ident = identity_morphism(J2)
    ok, chain = homotopic(ident, ident)
    assert ok and len(chain) == 0
    ok, chain = homotopic(ident, thin_morphism(J2, J2, (1, 0)))
    assert ok and chain.is_valid()
    with pytest.raises(UniverseMismatch):
        homotopic(ident, ident, universe=[])


def test_contractibility():
    a = idempotent_pairs_schemoid(3)
    x0, chain = contraction(a)
    assert x0 == 0 and len(chain) == 1
    # diag(k) = phi_{k0}
    assert chain.steps[0].homotopy.diag == tuple(3 + k * 3 for k in range(3))
    assert not is_contractible(commuting_square_schemoid())
    assert is_contractible(trivial_schemoid())


def test_collapse_obstruction():
    assert collapse_obstruction(commuting_square_schemoid()) == (False, None)
    assert collapse_obstruction(idempotent_pairs_schemoid(3))[0]
    assert collapse_obstruction(interval()) == (False, None)


def test_thin_criterion():
    a = stilde(iota(cyclic_group(3)))
    ident = identity_morphism(a)
    assert thin_homotopy_criterion(ident, ident)
    inv = thin_morphism(a, a, (0, 2, 1))
    assert not thin_homotopy_criterion(ident, inv)
    with pytest.raises(NotThinSchemoid):
        thin_homotopy_criterion(identity_morphism(J2), identity_morphism(J2))


def test_thin_criterion_agrees_on_z2():
    a = stilde(iota(cyclic_group(2)))
    univ = enumerate_morphisms(a, a)
    for f in univ:
        for g in univ:
            assert thin_homotopy_criterion(f, g) == (elementary_homotopy(f, g) is not None)


def test_vertical_composition():
    ident, swap = identity_morphism(J2), thin_morphism(J2, J2, (1, 0))
    there = HomotopyChain.single(elementary_homotopy(ident, swap))
    back = HomotopyChain.single(elementary_homotopy(swap, ident))
    loop = vertical_compose(there, back)
    assert len(loop) == 2 and loop.start == loop.end == ident
    assert vertical_compose(HomotopyChain.trivial(ident), there) == there
    with pytest.raises(EndpointMismatch):
        vertical_compose(there, there)


def test_horizontal_composition():
    ident, swap = identity_morphism(J2), thin_morphism(J2, J2, (1, 0))
    nu = HomotopyChain.single(elementary_homotopy(ident, swap))
    empty = HomotopyChain.trivial(ident)
    assert len(horizontal_compose(empty, empty)) == 0
    assert horizontal_compose(empty, nu) == whisker_left(ident, nu)
    a = horizontal_compose(nu, nu, left_first=True)
    b = horizontal_compose(nu, nu, left_first=False)
    assert a.start == b.start and a.end == b.end
    assert a.composite_transformation() == b.composite_transformation()
