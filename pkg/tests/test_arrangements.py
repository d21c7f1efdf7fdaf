from functools import reduce
from math import comb

import pytest

from dimfermat import arrangements as arr
from dimfermat.cyclotomic import ambient_field, make_field
from dimfermat.multipoly import XYZ, MultiPoly


def test_grid_sizes():
    F = make_field(6)
    assert arr.fermat_grid(1, F).points == (arr.proj_point(F, 1, 1, 1),)
    assert len(arr.fermat_grid(6, F)) == 36
    W3 = arr.fermat_grid(3, F)
    x, y, z = MultiPoly.gens(F, XYZ)
    assert len(W3) == 9
    assert arr.vanishes_on(x ** 3 - y ** 3, W3) and arr.vanishes_on(x ** 3 - z ** 3, W3)


def test_grid_needs_roots_of_unity():
    with pytest.raises(ValueError):
        arr.fermat_grid(4, make_field(6))


def test_coordinate_points():
    F = make_field(6)
    X = arr.coordinate_points(F)
    assert len(X) == 3
    assert not set(X) & set(arr.fermat_grid(3, F))
    scene = arr.inflection_scene(F)
    assert scene.lines[6].contains(arr.proj_point(F, 1, 0, 0))


@pytest.mark.parametrize("m", range(1, 7))
def test_diminished_set_size_and_disjointness(m):
    F = ambient_field(m)
    Y = arr.grid_difference(m, F)
    X = arr.coordinate_points(F)
    W = arr.fermat_grid(m, F)
    Z = arr.diminished_set(m, F)
    assert len(Y) == 3 * m * m
    assert len(Z) == 3 * m * m + 3 == len(Y) + len(X)
    assert not set(Y) & set(W)
    assert not set(Y) & set(X)


def test_points_are_normalized():
    F = make_field(6)
    p = arr.proj_point(F, 0, 3, -6)
    assert p.coords[1] == 1 and p.coords[2] == -2
    with pytest.raises(ValueError):
        arr.proj_point(F, 0, 0, 0)


def test_inflection_scene():
    s = arr.inflection_scene()
    eps = s.field.primitive_root(3)
    assert s.points[4] == arr.ProjPoint((s.field.one, s.field.zero, -eps))
    for p in s.points:
        assert s.fermat.evaluate(p.coords).is_zero()
        assert s.hessian.evaluate(p.coords).is_zero()
    assert reduce(lambda a, b: a * b, [l.poly for l in s.lines]) == s.g3
    assert s.lines[3].contains(s.points[3])


def test_tangency():
    s = arr.inflection_scene()
    assert arr.verify_tangency(s.fermat, s.lines[0], s.points[0])
    assert arr.contact_order(s.fermat, s.lines[0], s.points[0]) == 3
    assert arr.verify_tangency(s.fermat, s.lines[8], s.points[8])
    with pytest.raises(ValueError):
        arr.verify_tangency(s.fermat, s.lines[0], s.points[3])


def test_non_inflectional_line_has_simple_contact():
    F = make_field(6)
    x, y, z = MultiPoly.gens(F, XYZ)
    fermat = x ** 3 + y ** 3 + z ** 3
    # the line y = 0 meets F transversally at A_1? no, A_1 has y = -1; use x + y + 0z through A_1
    # and a generic line through A_1 = (1 : -1 : 0): x + y + z
    line = arr.LineForm(x + y + z, 0)
    assert arr.contact_order(fermat, line, arr.proj_point(F, 1, -1, 0)) == 1


def test_double_points_crosscheck():
    s = arr.inflection_scene()
    res = arr.double_points_crosscheck(s.lines)
    assert res["ok"]
    assert res["double_points"] == 27 and res["triple_points"] == 3
    assert res["triples_are_coordinate_points"]
    # pairs: all C(9, 2) minus the three pairs at each triple point
    assert comb(9, 2) - 3 * comb(3, 2) == res["double_points"]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_generators_Y(m):
    F = ambient_field(m)
    f1, f2, f3 = arr.generators_Y(m, F)
    Y, W = arr.grid_difference(m, F), arr.fermat_grid(m, F)
    assert all(arr.vanishes_on(f, Y) for f in (f1, f2, f3))
    assert all(not f3.evaluate(p.coords).is_zero() for p in W)


def test_generators_Y_examples():
    F = make_field(6)
    f1, _, f3 = arr.generators_Y(3, F)
    tau = F.primitive_root(6)
    assert f1.evaluate([F.one, tau, tau * tau]).is_zero()
    assert f3.evaluate([1, 1, 1]) == 4


@pytest.mark.parametrize("m", [1, 2, 3, 4, 6])
def test_generators_Z_vanish(m):
    F = ambient_field(m)
    Z = arr.diminished_set(m, F)
    hs = arr.generators_Z(m, F)
    assert all(arr.vanishes_on(h, Z) for h in hs)
    assert all(h.degree() == 2 * m + 1 and h.is_homogeneous() for h in hs)


def test_generators_Z_m3_literal(h3, F6):
    x, y, z = MultiPoly.gens(F6, XYZ)
    assert h3[0] == x * (y ** 6 - z ** 6)
    assert h3[2] == z * (x ** 3 + y ** 3) * (y ** 3 + z ** 3)
    assert h3[2].evaluate([0, 0, 1]).is_zero()


def test_point_list_serialization_sorted(Z3):
    lines = Z3.serialize().splitlines()
    assert len(lines) == 30 and lines == sorted(lines)
    assert lines[0].startswith("(cyclo(6)")
