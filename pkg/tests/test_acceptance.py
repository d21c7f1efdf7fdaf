"""Exit criteria.  Every equality is exact; each test also enforces its time budget.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion lines
as they happen; a summary is printed at the end of any pytest run.
"""

import time
from functools import reduce

import pytest

from dimfermat import arrangements as arr
from dimfermat.cyclotomic import ambient_field
from dimfermat.linsys import generation_check, hilbert_dim, unexpectedness_check
from dimfermat.multipoly import ABC, XYZABC, MultiPoly
from dimfermat.unexpected import (BiCurve, bpf_case_analysis_m3, bpf_check, default_n_max,
                                  dual_expansion_check, gamma, lambda_system, mult_certificate)

RESULTS = []


@pytest.fixture
def criterion(request):
    state = {}

    def start(number, title, budget):
        state.update(number=number, title=title, budget=budget, t0=time.perf_counter())

    yield start
    elapsed = time.perf_counter() - state["t0"]
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    ok = not failed and elapsed < state["budget"]
    line = (f"criterion {state['number']:>2}: {'PASS' if ok else 'FAIL'}  "
            f"{state['title']}  ({elapsed:.2f}s / {state['budget']}s)")
    RESULTS.append(line)
    print("\n" + line)
    assert elapsed < state["budget"], f"over time budget: {elapsed:.1f}s"


def test_c01_configuration_counts(criterion):
    criterion(1, "configuration counts", 1.0)
    F = ambient_field(3)
    assert len(arr.fermat_grid(6, F)) == 36
    assert len(arr.grid_difference(3, F)) == 27
    assert len(arr.diminished_set(3, F)) == 30
    for m in range(1, 7):
        assert len(arr.diminished_set(m)) == 3 * m * m + 3


def test_c02_generators_of_Y(criterion):
    criterion(2, "f_1, f_2, f_3 vanish on Y_m, f_3 nonzero on W_m (m = 3, 4, 5)", 5.0)
    for m in (3, 4, 5):
        F = ambient_field(m)
        fs = arr.generators_Y(m, F)
        Y, W = arr.grid_difference(m, F), arr.fermat_grid(m, F)
        assert all(arr.vanishes_on(f, Y) for f in fs)
        assert all(not fs[2].evaluate(p.coords).is_zero() for p in W)


def test_c03_independent_conditions(criterion):
    criterion(3, "dim [I(Z_3)]_7 = 36 - 30 = 6", 5.0)
    Z = arr.diminished_set(3)
    assert hilbert_dim(Z, 7) == 36 - 30 == 6


def test_c04_generation(criterion):
    criterion(4, "generation of I(Z_m), m = 3, 4, and of I(Y_3)", 120.0)
    for m in (3, 4):
        F = ambient_field(m)
        Z = arr.diminished_set(m, F)
        cert = generation_check(arr.generators_Z(m, F), Z, 2 * m + 1, 2 * (2 * m + 1))
        assert cert.passed, cert.witness
    F = ambient_field(3)
    cert = generation_check(arr.generators_Y(3, F), arr.grid_difference(3, F), 6, 12)
    assert cert.passed, cert.witness


def test_c05_unexpected(criterion):
    criterion(5, "U(2m+1, 3) for m = 3, 4, 5 with 3 agreeing trials", 60.0)
    for m, d in ((3, 7), (4, 9), (5, 11)):
        rep = unexpectedness_check(m, d, 3, trials=3, seed=0)
        assert not rep.inconclusive
        assert len({t["dim"] for t in rep.trials}) == 1 and len(rep.trials) == 3
        assert rep.unexpected and rep.dim_actual >= 1 > rep.expected


def test_c06_multiplicity_certificates(criterion):
    criterion(6, "order <= 2 residues vanish, an order 3 one does not, both sides, m = 3..6", 60.0)
    for m in range(3, 7):
        curve = gamma(m)
        for side in ("xyz", "abc"):
            cert = mult_certificate(curve, side)
            assert cert.passed and len(cert.derivative_residues) == 10
            assert all(r == "0" for r in cert.derivative_residues.values())
            assert cert.witness_order3 is not None and cert.exact_multiplicity == 3


def test_c07_dual_display(criterion):
    criterion(7, "dual display reproduced at m = 3 and m = 4", 10.0)
    for m in (3, 4):
        cert = dual_expansion_check(m)
        assert cert.passed, cert.witness["mismatches"]
        assert cert.witness["monomials_checked"] == cert.witness["monomials_in_gamma"] == 9


def test_c08_base_point_free(criterion):
    criterion(8, "Lambda_m base point free for m = 3, 4, 5; case analysis at m = 3", 60.0)
    for m in (3, 4, 5):
        cert = bpf_check(lambda_system(m), default_n_max(m))
        assert cert.passed
        assert cert.witness["saturating_degree"] <= 3 * (2 * m - 2) + 1
    assert bpf_case_analysis_m3(lambda_system(3)).passed


def test_c09_tangent_line_crosscheck(criterion):
    criterion(9, "27 double points equal W_6 minus W_3; inflectional tangency", 5.0)
    scene = arr.inflection_scene()
    res = arr.double_points_crosscheck(scene.lines)
    assert res["ok"] and res["double_points"] == 27
    for line, point in zip(scene.lines, scene.points):
        assert arr.contact_order(scene.fermat, line, point) == 3
    assert reduce(lambda p, q: p * q, [l.poly for l in scene.lines]) == scene.g3


def test_c10_negative_controls(criterion):
    criterion(10, "negative controls", 60.0)
    h1 = arr.generators_Z(3)[0]
    assert not mult_certificate(BiCurve(h1.embed(XYZABC), (7, 0)), "xyz").passed
    a, b, _ = MultiPoly.gens(ambient_field(3), ABC)
    assert bpf_check([a ** 2, b ** 2], 10).status == "inconclusive"
    assert not unexpectedness_check(3, 7, 1).unexpected
