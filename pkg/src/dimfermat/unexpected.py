"""The unexpected curves gamma_m, their dual reading, and the system Lambda_m.

gamma_m lives in the six-variable ring Q(zeta)[x, y, z, a, b, c].  Read in
(x, y, z) it is a curve of degree 2m+1 through Z_m with a triple point at
(a : b : c); read in (a, b, c) it is a curve of degree 2m-1 with a triple
point at (x : y : z).  Which triple plays "coordinates" is only a label.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence

from .arrangements import diminished_set, generators_Z
from .certificate import Certificate
from .cyclotomic import CycloField, ambient_field
from .linsys import generator_span_dim, ideal_piece, random_coordinates, solve_in_span
from .multipoly import ABC, XYZ, XYZABC, MultiPoly, bidegree_of, format_poly, monomials_of_degree

SIDES = {"xyz": XYZ, "abc": ABC}


@dataclass(frozen=True)
class BiCurve:
    poly: MultiPoly
    bidegree: Optional[tuple]
    role: str = "xyz"   # which triple is read as coordinates

    def dual(self) -> "BiCurve":
        return BiCurve(self.poly, self.bidegree, "abc" if self.role == "xyz" else "xyz")


@dataclass
class CoeffSystem:
    m: int
    members: List[MultiPoly]   # forms in (a, b, c)

    @property
    def degree(self) -> int:
        return self.members[0].degree()


def _abc(field):
    return MultiPoly.gens(field, ABC)


def lambda_system(m: int, field: Optional[CycloField] = None) -> CoeffSystem:
    """u_1..u_6, the coefficients of h_1..h_6 in gamma_m."""
    field = field or ambient_field(m)
    a, b, c = _abc(field)
    k = 2 * m - 1
    am, bm, cm = a ** m, b ** m, c ** m
    a1, b1, c1 = a ** (m - 1), b ** (m - 1), c ** (m - 1)
    members = [
        a1 * (cm * k - am),
        b1 * (bm - cm * k),
        c1 * (cm - am * k),
        c1 * (bm * k - cm),
        b1 * (am - cm) * k,
        a1 * (cm - bm) * k,
    ]
    return CoeffSystem(m, members)


def gamma(m: int, field: Optional[CycloField] = None) -> BiCurve:
    field = field or ambient_field(m)
    hs = [h.embed(XYZABC) for h in generators_Z(m, field)]
    us = [u.embed(XYZABC) for u in lambda_system(m, field).members]
    poly = MultiPoly(field, XYZABC)
    for u, h in zip(us, hs):
        poly = poly + u * h
    return BiCurve(poly, bidegree_of(poly), "xyz")


def specialize(curve: BiCurve, side: str, values: Sequence) -> MultiPoly:
    """Fix the parameter triple (the one opposite ``side``) at ``values``."""
    params = ABC if side == "xyz" else XYZ
    assignment = dict(zip(params, values))
    return curve.poly.substitute(assignment).restrict(SIDES[side])


# -- multiplicity certificate ---------------------------------------------------------

@dataclass
class MultCertificate:
    target: BiCurve
    side: str
    vars_differentiated: tuple
    order_checked: int
    derivative_residues: Dict[str, str]    # monomial label -> residue text
    failures: List[str]
    witness_order3: Optional[tuple]        # (label, residue text)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exact_multiplicity(self) -> Optional[int]:
        if not self.passed:
            return None
        return 3 if self.witness_order3 is not None else None

    def certificate(self, m: Optional[int] = None) -> Certificate:
        params = {"side": self.side}
        if m is not None:
            params = {"m": m, "side": self.side}
        witness = {
            "order_checked": self.order_checked,
            "residues_checked": len(self.derivative_residues),
            "nonzero_residues": {k: self.derivative_residues[k] for k in self.failures},
            "order3_witness": None if self.witness_order3 is None else
            {"partial": self.witness_order3[0], "residue": self.witness_order3[1]},
            "exact_multiplicity": self.exact_multiplicity,
        }
        status = "pass" if self.passed and self.witness_order3 is not None else "fail"
        return Certificate("mult-cert", params, status, witness)


def _partial_label(names, orders) -> str:
    parts = [f"d{v}^{k}" if k > 1 else f"d{v}" for v, k in zip(names, orders) if k]
    return " ".join(parts) or "id"


def _swap_assignment(poly: MultiPoly, side: str):
    src, dst = SIDES[side], (ABC if side == "xyz" else XYZ)
    return {s: MultiPoly.var(poly.field, poly.vars, d) for s, d in zip(src, dst)}


def mult_certificate(curve: BiCurve, side: str = "xyz") -> MultCertificate:
    """All partials of order <= 2 in ``side`` vanish after swapping the triples.

    Also records the first order-3 partial (graded-lex) whose residue is not
    zero, which pins the multiplicity at exactly 3.
    """
    if side not in SIDES:
        raise ValueError(f"side must be 'xyz' or 'abc', got {side!r}")
    names = SIDES[side]
    poly = curve.poly
    swap = _swap_assignment(poly, side)
    residues, failures = {}, []
    for order in range(3):
        for orders in monomials_of_degree(3, order):
            label = _partial_label(names, orders)
            res = poly.diff_multi(dict(zip(names, orders))).substitute(swap)
            residues[label] = format_poly(res)
            if not res.is_zero():
                failures.append(label)
    witness = None
    if not failures:
        for orders in monomials_of_degree(3, 3):
            res = poly.diff_multi(dict(zip(names, orders))).substitute(swap)
            if not res.is_zero():
                witness = (_partial_label(names, orders), format_poly(res))
                break
    return MultCertificate(curve, side, names, 2, residues, failures, witness)


# -- the dual display -----------------------------------------------------------------

def dual_display(m: int, field: Optional[CycloField] = None) -> Dict[tuple, MultiPoly]:
    """gamma_m read as a form in (a, b, c): monomial exponent -> (x, y, z) coefficient.

    Written out term by term, independently of :func:`gamma`.
    """
    field = field or ambient_field(m)
    x, y, z = MultiPoly.gens(field, XYZABC)[:3]
    xm, ym, zm = x ** m, y ** m, z ** m
    k = e = 2 * m - 1
    display = [
        ((e, 0, 0), x * (zm * zm - ym * ym)),
        ((0, e, 0), y * (xm * xm - zm * zm)),
        ((0, 0, e), z * (ym * ym - xm * xm)),
        ((m, m - 1, 0), y * (xm + zm) * (ym + zm) * k),
        ((m - 1, m, 0), -(x * (xm + zm) * (ym + zm) * k)),
        ((m, 0, m - 1), -(z * (xm + ym) * (zm + ym) * k)),
        ((m - 1, 0, m), x * (xm + ym) * (zm + ym) * k),
        ((0, m, m - 1), z * (xm + ym) * (xm + zm) * k),
        ((0, m - 1, m), -(y * (xm + ym) * (xm + zm) * k)),
    ]
    # for m = 1 some monomials coincide; their coefficients add up
    table: Dict[tuple, MultiPoly] = {}
    for mono, coeff in display:
        table[mono] = table[mono] + coeff if mono in table else coeff
    return {mono: c for mono, c in table.items() if not c.is_zero()}


def dual_expansion_check(m: int, curve: Optional[BiCurve] = None) -> Certificate:
    curve = curve or gamma(m)
    table = dual_display(m, curve.poly.field)
    actual = curve.poly.coefficients_in(ABC)
    mismatches = []
    for mono in sorted(set(table) | set(actual), reverse=True):
        want = table.get(mono, curve.poly.zero_like())
        got = actual.get(mono, curve.poly.zero_like())
        if want != got:
            mismatches.append({"monomial": "a^%d b^%d c^%d" % mono,
                               "expected": format_poly(want), "actual": format_poly(got)})
    return Certificate(
        "dual-expansion", {"m": m},
        "pass" if not mismatches else "fail",
        {"monomials_checked": len(table), "monomials_in_gamma": len(actual),
         "mismatches": mismatches},
    )


def extract_coefficient_system(curve: BiCurve, m: int) -> List[MultiPoly]:
    """Recover u_1..u_6 from gamma_m by solving, monomial by monomial in (a, b, c),
    for the combination of h_1..h_6 that gives the (x, y, z) coefficient."""
    field = curve.poly.field
    hs = [h.embed(XYZABC) for h in generators_Z(m, field)]
    us = [MultiPoly(field, ABC) for _ in hs]
    for mono, coeff in curve.poly.coefficients_in(ABC).items():
        sol = solve_in_span(hs, coeff)
        if sol is None:
            raise ValueError(f"coefficient of {mono} is not in the span of h_1..h_6")
        for i, c in enumerate(sol):
            if not c.is_zero():
                us[i] = us[i] + MultiPoly(field, ABC, {mono: c})
    return us


def gamma_membership(m: int, trials: int = 3, seed: int = 0) -> Certificate:
    """gamma_m at random rational (a, b, c) lies in the span of [I(Z_m)]_(2m+1)."""
    Z = diminished_set(m)
    curve = gamma(m, Z.field)
    piece = ideal_piece(Z, 2 * m + 1)
    records, ok = [], True
    for t in range(trials):
        coords = random_coordinates(seed + t)
        spec = specialize(curve, "xyz", coords)
        inside = not spec.is_zero() and solve_in_span(piece.basis, spec) is not None
        ok = ok and inside
        records.append({"seed": seed + t, "point": list(coords),
                        "in_span": inside})
    return Certificate("gamma-membership", {"m": m, "degree": 2 * m + 1},
                       "pass" if ok else "fail",
                       {"ideal_dim": piece.dim, "bidegree": list(curve.bidegree or ()),
                        "trials": records})


# -- base point freeness --------------------------------------------------------------

def default_n_max(m: int) -> int:
    return 3 * (2 * m - 2) + 1


def bpf_check(system, n_max: int, claim: str = "bpf") -> Certificate:
    """Find N with (members)_N equal to every form of degree N.

    A hit proves there is no common zero over the algebraic closure.  No hit
    up to ``n_max`` is reported as inconclusive, never as a base point.
    """
    members = system.members if isinstance(system, CoeffSystem) else list(system)
    degs = {u.degree() for u in members}
    if len(degs) != 1 or not all(u.is_homogeneous() for u in members):
        raise ValueError("members must be forms of one common degree")
    e = degs.pop()
    nvars = len(members[0].vars)
    dims = []
    saturating = None
    for N in range(e, n_max + 1):
        full = comb(N + nvars - 1, nvars - 1)
        span, _ = generator_span_dim(members, N, with_basis=False)
        dims.append({"degree": N, "span_dim": span, "full_dim": full})
        if span == full:
            saturating = N
            break
    params = {"degree": e, "n_max": n_max}
    if isinstance(system, CoeffSystem):
        params = {"m": system.m, "degree": e, "n_max": n_max}
    return Certificate(claim, params, "pass" if saturating is not None else "inconclusive",
                       {"saturating_degree": saturating, "dims": dims})


def _single_power(p: MultiPoly):
    """(variable index, exponent) if p is a nonzero constant times one power."""
    if len(p.terms) != 1:
        return None
    (exp,) = p.terms
    nz = [i for i, k in enumerate(exp) if k]
    if len(nz) != 1:
        return None
    return nz[0], exp[nz[0]]


def _cascade(members: List[MultiPoly], assignment: Dict[str, MultiPoly], trace: list) -> bool:
    """Force coordinates to zero one at a time; True iff all three get forced.

    ``assignment`` maps some of a, b, c to forms in the remaining variables.
    At each step a member that restricts to a nonzero constant times a single
    power v^k forces v = 0.
    """
    field = members[0].field
    zero = MultiPoly(field, ABC)
    while True:
        zeros = [v for v in ABC if v in assignment and assignment[v].is_zero()]
        if len(zeros) == 3:
            trace.append("a = b = c = 0: contradiction")
            return True
        forced = None
        for i, u in enumerate(members):
            r = u.substitute(assignment)
            sp = _single_power(r)
            if sp is not None:
                forced = (i, ABC[sp[0]], r)
                break
        if forced is None:
            trace.append("no member forces a further coordinate to vanish")
            return False
        i, v, r = forced
        trace.append(f"u_{i + 1} restricts to {format_poly(r)}, so {v} = 0")
        assignment = {k: val.substitute({v: 0}) for k, val in assignment.items()}
        assignment[v] = zero


def bpf_case_analysis_m3(system: CoeffSystem) -> Certificate:
    """Replay the hand argument that Lambda_3 has no base point.

    u_6 = 5a^2(c^3 - b^3) factors as 5 a^2 (c - b)(c - eps b)(c - eps^2 b), so
    any common zero has a = 0 or c = eps^k b.  Each branch must force all
    three coordinates to vanish.
    """
    if system.m != 3:
        raise ValueError("the case analysis is specific to m = 3")
    members = system.members
    field = members[0].field
    a, b, c = _abc(field)
    eps = field.primitive_root(3)
    factored = a * a * 5
    for k in range(3):
        factored = factored * (c - b * eps ** k)
    branches = []
    ok = factored == members[5]
    branches.append({"branch": "u_6 factorization", "ok": ok,
                     "trace": [f"u_6 == {format_poly(factored)}: {ok}"]})
    cases = [("a = 0", {"a": MultiPoly(field, ABC)})]
    for k in range(3):
        cases.append((f"c = eps^{k} b", {"c": b * eps ** k}))
    for name, assignment in cases:
        trace: list = []
        reached = _cascade(members, dict(assignment), trace)
        ok = ok and reached
        branches.append({"branch": name, "ok": reached, "trace": trace})
    return Certificate("bpf-case-analysis", {"m": 3}, "pass" if ok else "fail",
                       {"branches": branches})
