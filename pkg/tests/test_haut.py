import pytest

from helpers import brute_aut_order

from qschemoid.catalog import cyclic_group, klein_four_group, symmetric_group
from qschemoid.constructors import iota, jmath, scheme_of_group, stilde, trivial_schemoid
from qschemoid.errors import NotAutomorphism
from qschemoid.fincat import validate_functor
from qschemoid.haut import (
    aut_of_group,
    endo_monoid,
    group_automorphisms,
    group_isomorphic,
    haut_group,
    identify_group,
    induced_haut_map,
    normalize_groupoid_automorphism,
    preserves_base_points,
    stilde_of_automorphism,
)
from qschemoid.homotopy import thin_homotopy_criterion
from qschemoid.schemoid import identity_morphism, thin_morphism, trivial_scheme


def test_endo_monoid_orders():
    assert endo_monoid(jmath(trivial_scheme(3))).order == 9
    assert endo_monoid(jmath(trivial_scheme(2))).order == 4
    m = endo_monoid(trivial_schemoid())
    assert m.order == 1 and m.is_associative()


def test_haut_trivial_schemes():
    r3 = haut_group(jmath(trivial_scheme(3)))
    assert r3.group.order == 6
    assert group_isomorphic(r3.group, symmetric_group(3))
    assert identify_group(r3.group) == "Sym(3)"
    assert r3.quotient_well_defined()
    assert haut_group(jmath(trivial_scheme(2))).group.order == 1


def test_haut_of_s_z3():
    assert haut_group(jmath(scheme_of_group(cyclic_group(3)))).group.order == 2


@pytest.mark.parametrize("g,order", [(cyclic_group(2), 1), (cyclic_group(3), 2),
                                     (klein_four_group(), 6), (cyclic_group(5), 4)], ids=str)
def test_aut_orders(g, order):
    assert aut_of_group(g).order == order == brute_aut_order(g)


def test_group_isomorphism():
    assert not group_isomorphic(cyclic_group(4), klein_four_group())
    for g in (cyclic_group(4), symmetric_group(3)):
        assert group_isomorphic(g, g)
    assert identify_group(klein_four_group()) == "Z/2 x Z/2"
    assert identify_group(cyclic_group(4)) == "Z/4"


def _autos(g):
    h = iota(g)
    return [validate_functor(h.cat, h.cat, (0,), p) for p in group_automorphisms(g)]


def test_induced_map_injective_on_z3():
    a = stilde(iota(cyclic_group(3)))
    res = haut_group(a)
    us = _autos(cyclic_group(3))
    assert induced_haut_map(us[0], a, res) == res.class_of(identity_morphism(a))
    assert len({induced_haut_map(u, a, res) for u in us}) == len(us)


@pytest.mark.parametrize("g", [cyclic_group(2), cyclic_group(3), klein_four_group()], ids=str)
def test_every_class_hit_by_an_automorphism(g):
    a = stilde(iota(g))
    res = haut_group(a)
    hit = {induced_haut_map(u, a, res) for u in _autos(g)}
    assert hit == set(res.unit_classes)


def test_normalisation():
    a = stilde(iota(cyclic_group(3)))
    ident = identity_morphism(a)
    assert normalize_groupoid_automorphism(ident) == ident
    # translation i -> i + 2 moves the identity object
    shifted = thin_morphism(a, a, (2, 0, 1))
    assert not preserves_base_points(shifted)
    v = normalize_groupoid_automorphism(shifted)
    assert preserves_base_points(v)
    with pytest.raises(NotAutomorphism):
        normalize_groupoid_automorphism(thin_morphism(a, a, (0, 0, 0)))


def test_normalisation_homotopic_on_z2():
    a = stilde(iota(cyclic_group(2)))
    for u in haut_group(a).equivalences():
        v = normalize_groupoid_automorphism(u)
        assert thin_homotopy_criterion(u, v)


def test_stilde_of_automorphism_is_bijective():
    a = stilde(iota(cyclic_group(3)))
    for u in _autos(cyclic_group(3)):
        assert stilde_of_automorphism(u, a).is_bijective()
