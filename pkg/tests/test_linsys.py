from math import comb

import pytest

from dimfermat import arrangements as arr
from dimfermat.cyclotomic import ambient_field, make_field
from dimfermat.linsys import (ContainmentError, Echelon, ExactMatrix, fat_point_rows, generation_check,
                              generator_span_dim, hilbert_dim, ideal_piece, interpolation_matrix,
                              kernel_basis, kernel_vectors, random_point, rank, solve_in_span,
                              unexpectedness_check)
from dimfermat.multipoly import XYZ, MultiPoly

from oracles import cyclotomic_rank, rational_rank


def _coeff_rows(M):
    return [[list(e.coeffs) for e in row] for row in M.rows]


def test_interpolation_matrix_shapes(Z3):
    assert interpolation_matrix(Z3, 7).shape == (30, 36)
    F = Z3.field
    M = interpolation_matrix([], 4, F)
    assert M.shape == (0, 15)
    assert kernel_basis(M).dim == 15
    X = arr.coordinate_points(F)
    assert kernel_basis(interpolation_matrix(X, 1)).dim == 0


def test_kernel_dimension_and_certificate(Z3):
    piece = ideal_piece(Z3, 7)
    assert piece.dim == 6
    for b in piece.basis:
        assert b.degree() == 7
        assert arr.vanishes_on(b, Z3)


def test_kernel_basis_is_rational_for_galois_stable_set(Z3):
    # the reduced echelon basis is unique, hence fixed by Galois
    assert all(b.is_rational() for b in ideal_piece(Z3, 8).basis)


def test_trivial_kernels():
    F = make_field(6)
    full = ExactMatrix.from_rows(F, [[1, 2], [3, 4]])
    assert kernel_basis(full).dim == 0
    zero = ExactMatrix.from_rows(F, [[0] * 5])
    assert kernel_basis(zero).dim == 5


def test_rank_nullity_and_oracle():
    F = make_field(12)
    z = F.zeta()
    rows = [[1, z, z ** 2, z ** 3], [z, z ** 2, z ** 3, z ** 4], [1, 1, 0, z ** 5], [2, z + 1, z ** 2, 0]]
    M = ExactMatrix.from_rows(F, rows)
    r = rank(M)
    assert r == cyclotomic_rank(_coeff_rows(M), 12)
    assert r + len(kernel_vectors(M)) == 4


def test_rref_kernel_vectors_annihilate():
    F = make_field(12)
    z = F.zeta()
    M = ExactMatrix.from_rows(F, [[1, z, z + 1, 2, 0], [z ** 3, 1, 0, z, 1]])
    for v in kernel_vectors(M):
        for row in M.rows:
            assert sum((a * b for a, b in zip(row, v)), F.zero).is_zero()


def test_hilbert_values(Z3):
    F = Z3.field
    assert hilbert_dim(Z3, 7) == 6
    # frozen from the sympy rank oracle (see test_hilbert_oracle)
    assert hilbert_dim(Z3, 6) == 0
    assert hilbert_dim(arr.coordinate_points(F), 2) == 3


def test_hilbert_oracle(Z3):
    for d in (6, 7):
        M = interpolation_matrix(Z3, d)
        assert hilbert_dim(Z3, d) == len(M.columns) - cyclotomic_rank(_coeff_rows(M), Z3.field.n)


def test_hilbert_monotone_as_points_are_added(Z3):
    dims = []
    pts = list(Z3.points)
    for k in range(0, len(pts) + 1, 3):
        sub = arr.make_configuration("Z", 3, pts[:k], Z3.field)
        dims.append(hilbert_dim(sub, 7))
    assert dims == sorted(dims, reverse=True)
    assert dims[0] == 36 and dims[-1] == 6


def test_generator_span(h3, F6):
    dim, piece = generator_span_dim(h3, 7)
    assert dim == 6 == piece.dim
    rows = [[c.as_rational() for c in h.coefficient_vector(interpolation_matrix([], 7, F6).columns)]
            for h in h3]
    assert rational_rank(rows) == 6
    x, y, z = MultiPoly.gens(F6, XYZ)
    assert generator_span_dim([x], 2)[0] == 3
    assert generator_span_dim([x, y], 1)[0] == 2


def test_generation_checks(h3, Z3):
    F = Z3.field
    assert generation_check(h3, Z3, 7, 14).passed
    Y = arr.grid_difference(3, F)
    fs = arr.generators_Y(3, F)
    assert generation_check(fs, Y, 6, 12).passed
    lone = generation_check(fs[:1], Y, 6, 6)
    assert lone.status == "fail"
    assert lone.witness["degrees"][0] == {"degree": 6, "span_dim": 1, "ideal_dim": 3}


def test_generation_containment_error(Z3, F6):
    x, y, z = MultiPoly.gens(F6, XYZ)
    with pytest.raises(ContainmentError):
        generation_check([x ** 7], Z3, 7, 7)


def test_generator_multiples_vanish_on_sample(h3, Z3):
    x, y, z = MultiPoly.gens(Z3.field, XYZ)
    for h in h3:
        assert arr.vanishes_on(h * (x ** 2 - y * z * 3), Z3.points[::5])


@pytest.mark.parametrize("mult, rows", [(1, 1), (2, 3), (3, 6)])
def test_fat_point_row_count(Z3, mult, rows):
    piece = ideal_piece(Z3, 7)
    M = fat_point_rows(piece, random_point(Z3.field, 0), mult)
    assert M.shape == (rows, 6)
    assert rows == comb(mult + 1, 2)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_fat_point_rank_oracle(Z3, seed):
    piece = ideal_piece(Z3, 7)
    M = fat_point_rows(piece, random_point(Z3.field, seed), 3)
    assert rank(M) == 5 == rational_rank([[e.as_rational() for e in r] for r in M.rows])


def test_unexpectedness_m3():
    rep = unexpectedness_check(3, 7, 3)
    assert (rep.dim_IZ_d, rep.expected, rep.dim_actual) == (6, 0, 1)
    assert rep.unexpected and not rep.inconclusive
    assert len(rep.trials) == 3 and all(1 <= c <= 10 ** 6 for t in rep.trials for c in t["point"])
    assert rep.certificate().status == "pass"


def test_unexpectedness_baseline_simple_point():
    rep = unexpectedness_check(3, 7, 1)
    assert rep.expected == 5 and rep.dim_actual == 5
    assert not rep.unexpected


def test_unexpectedness_m4():
    assert unexpectedness_check(4, 9, 3).unexpected


def test_small_m_reported_without_claim():
    # not covered by the theorem; just pin what the computation says
    rep = unexpectedness_check(2)
    assert rep.dim_IZ_d >= 0 and rep.dim_actual >= rep.expected


def test_solve_in_span(h3):
    target = h3[0] * 2 - h3[4] * 3
    sol = solve_in_span(list(h3), target)
    assert [c.as_rational() for c in sol] == [2, 0, 0, 0, -3, 0]
    x = MultiPoly.var(h3[0].field, XYZ, "x")
    assert solve_in_span(list(h3), x ** 7) is None


def test_echelon_is_deterministic():
    F = ambient_field(4)
    Z = arr.diminished_set(4, F)
    M = interpolation_matrix(Z, 9)
    a = kernel_vectors(M)
    b = kernel_vectors(M)
    assert a == b


def test_echelon_reduces_to_zero():
    F = make_field(12)
    ech = Echelon(F)
    z = F.zeta()
    ech.insert({0: z, 1: F.one})
    assert ech.reduces_to_zero({0: z * z, 1: z})
    assert not ech.reduces_to_zero({0: z, 1: z})
