import pytest

from qschemoid.catalog import cyclic_group
from qschemoid.errors import (
    AssociativityViolation,
    DanglingIndex,
    IdentityViolation,
    InverseMissing,
    MissingComposite,
    SrcTgtViolation,
)
from qschemoid.fincat import (
    arrow_category,
    cat_strong_homotopic,
    constant_functor,
    discrete_category,
    enumerate_functors,
    identity_functor,
    natural_transformation_exists,
    product_category,
    projection_functors,
    terminal_category,
    thin_category,
    validate_category,
    validate_functor,
    validate_group,
    validate_groupoid,
)


def test_arrow_category():
    c = arrow_category()
    assert (c.n_objects, c.n_morphisms) == (2, 3)
    assert c.comp[(2, 0)] == 2 and c.comp[(1, 2)] == 2


def test_bad_composite_target():
    with pytest.raises(SrcTgtViolation):
        validate_category(2, [(0, 0), (1, 1), (0, 1)], [0, 1], {(2, 0): 1})


def test_dangling_and_missing():
    with pytest.raises(DanglingIndex):
        validate_category(1, [(0, 3)], [0], {})
    # two loops at one object, composites not given
    with pytest.raises(MissingComposite):
        validate_category(1, [(0, 0), (0, 0)], [0], {})


def test_identity_violation():
    with pytest.raises(IdentityViolation):
        validate_category(1, [(0, 0), (0, 0)], [0], {(1, 0): 0, (0, 1): 1, (1, 1): 1})


def test_associativity_violation():
    # End(*) = {1, a, b} with aa = b, ab = a, ba = b, bb = b: (aa)a = b but a(aa) = a
    comp = {(1, 1): 2, (1, 2): 1, (2, 1): 2, (2, 2): 2}
    with pytest.raises(AssociativityViolation):
        validate_category(1, [(0, 0)] * 3, [0], comp)


def test_thin_three():
    c = thin_category(3)
    assert c.n_morphisms == 9
    assert c.is_thin
    # (z, x) o (x, y) = (z, y)
    for z in range(3):
        for x in range(3):
            for y in range(3):
                assert c.comp[(z * 3 + x, x * 3 + y)] == z * 3 + y


def test_products():
    a = arrow_category()
    p = product_category(a, a)
    assert (p.n_objects, p.n_morphisms) == (4, 9)
    q = product_category(thin_category(3), a)
    assert (q.n_objects, q.n_morphisms) == (6, 27)


def test_product_with_terminal_projects_isomorphically():
    c = thin_category(3)
    p = product_category(c, terminal_category())
    p1, _ = projection_functors(c, terminal_category(), p)
    validate_functor(p, c, p1.obj_map, p1.mor_map)
    assert p1.is_bijective()


def test_groups():
    g = validate_group(cyclic_group(3).cayley)
    assert g.order == 3
    bad = [list(r) for r in cyclic_group(4).cayley]
    bad[1][1] = 3
    with pytest.raises((AssociativityViolation, InverseMissing)):
        validate_group(bad)


def test_two_object_groupoid():
    c = validate_category(2, [(0, 0), (1, 1), (0, 1), (1, 0)], [0, 1],
                          {(3, 2): 0, (2, 3): 1})
    h = validate_groupoid(c)
    assert h.cat.n_morphisms == 4
    assert h.inv(2) == 3


def test_natural_transformations():
    c = thin_category(3)
    f = identity_functor(c)
    assert natural_transformation_exists(f, f) == (True, tuple(c.identity))
    for g in enumerate_functors(c, c):
        assert natural_transformation_exists(f, g)[0]
    d = discrete_category(2)
    swap = validate_functor(d, d, (1, 0), (1, 0))
    assert natural_transformation_exists(identity_functor(d), swap) == (False, None)


def test_cat_strong_homotopy():
    c = thin_category(3)
    assert cat_strong_homotopic(identity_functor(c), constant_functor(c, c, 0))
    d = discrete_category(2)
    swap = validate_functor(d, d, (1, 0), (1, 0))
    assert not cat_strong_homotopic(identity_functor(d), swap)
    assert cat_strong_homotopic(swap, swap)


def test_functor_count_arrow():
    # functors [1] -> [1]: const 0, const 1, identity
    assert len(enumerate_functors(arrow_category(), arrow_category())) == 3
