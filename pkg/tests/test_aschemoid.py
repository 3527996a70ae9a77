import pytest

from qschemoid.aschemoid import (
    all_involutions,
    asmd_elementary_homotopy,
    enumerate_amorphisms,
    proof_identity_holds,
    tilde_cylinder,
    tilde_interval,
    transpose_involution,
    validate_aschemoid,
)
from qschemoid.catalog import cyclic_group
from qschemoid.constructors import cylinder, interval, jmath, scheme_of_group
from qschemoid.errors import BlockSplitUnderT, NotContravariant, NotInvolutive
from qschemoid.homotopy import elementary_homotopy
from qschemoid.schemoid import trivial_scheme


def test_tilde_interval():
    t = tilde_interval()
    assert t.t_obj == (1, 0) and t.t_mor == (1, 0, 2)
    assert t.moves_objects


def test_transpose_on_jmath():
    a = transpose_involution(jmath(trivial_scheme(3)))
    assert not a.moves_objects
    assert a.t_mor[1] == 3  # (0, 1) <-> (1, 0)


def _twisted_transpose(q, sigma):
    """On a thin schemoid over points: x -> sigma(x), (x, y) -> (sigma(y), sigma(x))."""
    n = q.cat.n_objects
    t_mor = [sigma[m % n] * n + sigma[m // n] for m in range(n * n)]
    return tuple(sigma), t_mor


def test_invalid_involutions():
    with pytest.raises(NotContravariant):
        validate_aschemoid(interval(), (0, 1), (0, 1, 2))
    j = jmath(trivial_scheme(3))
    # a 3-cycle on the points gives a contravariant T with T o T != id
    with pytest.raises(NotInvolutive):
        validate_aschemoid(j, *_twisted_transpose(j, (1, 2, 0)))


def test_block_split_under_t():
    # on S(Z/4), swapping points 0 and 1 sends (0, 1) to relation 1 but (1, 2) to relation 2
    q = jmath(scheme_of_group(cyclic_group(4)))
    with pytest.raises(BlockSplitUnderT):
        validate_aschemoid(q, *_twisted_transpose(q, (1, 0, 2, 3)))


def test_cylinder_of_tilde_interval():
    c = tilde_cylinder(tilde_interval())
    assert c.base.cat.n_objects == 4
    t = tilde_interval()
    base = tilde_cylinder(t)
    _, e0, e1 = cylinder(t.base)
    for x in range(2):
        assert base.t_obj[e0.obj_map[x]] == e1.obj_map[t.t_obj[x]]


def test_unique_involution_on_interval():
    found = all_involutions(interval())
    assert len(found) == 1
    assert found[0] == tilde_interval()


def test_assertion_on_two_points():
    a = transpose_involution(jmath(trivial_scheme(2)))
    ms = enumerate_amorphisms(a, a)
    assert len(ms) == 4
    for f in ms:
        for g in ms:
            h = asmd_elementary_homotopy(f, g)
            assert (h is not None) == (f.morphism == g.morphism)
            if h is not None:
                assert proof_identity_holds(h, a, a)
    ident = next(f for f in ms if f.morphism.obj_map == (0, 1))
    swap = next(f for f in ms if f.morphism.obj_map == (1, 0))
    assert asmd_elementary_homotopy(ident, swap) is None
    assert elementary_homotopy(ident.morphism, swap.morphism) is not None
