"""Exact linear algebra on graded pieces of ideals of plane point sets.

All elimination is done over the cyclotomic field of the inputs.  Internally
rows are stored as integer coefficient vectors (numerators) so the inner
loop never touches ``Fraction``; pivot rows are kept monic up to a rational
integer scale.  Pivots are always the leftmost nonzero column and rows are
consumed in input order, so echelon forms and kernel bases are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, List, Optional, Sequence

from .arrangements import Configuration, ProjPoint, vanishes_on
from .certificate import Certificate
from .cyclotomic import CycloElem, CycloField
from .multipoly import XYZ, MultiPoly, VarSet, monomials_of_degree


class ContainmentError(ValueError):
    """A generator does not vanish on the point set it is supposed to cut out."""


# -- matrices -----------------------------------------------------------------------

@dataclass
class ExactMatrix:
    """Rows of cyclotomic numbers; columns are labelled by monomials."""

    field: CycloField
    rows: List[List[CycloElem]]
    columns: List[tuple]
    vars: VarSet = dc_field(default_factory=lambda: VarSet(XYZ))

    def __post_init__(self):
        for r in self.rows:
            if len(r) != len(self.columns):
                raise ValueError("ragged matrix")

    @classmethod
    def from_rows(cls, field, rows) -> "ExactMatrix":
        """Plain matrix; column j is labelled by the linear monomial v_j."""
        rows = [[field(v) for v in r] for r in rows]
        ncols = len(rows[0]) if rows else 0
        names = VarSet(f"v{j}" for j in range(ncols))
        cols = [tuple(int(i == j) for i in range(ncols)) for j in range(ncols)]
        return cls(field, rows, cols, names)

    @property
    def shape(self):
        return (len(self.rows), len(self.columns))

    def transpose_rows(self):
        return [list(col) for col in zip(*self.rows)] if self.rows else []


# -- the elimination engine ---------------------------------------------------------

def _vec_content(nums: dict, rational: bool) -> int:
    if rational:
        return gcd(*nums.values())
    flat = [c for v in nums.values() for c in v]
    return gcd(*flat)


class Echelon:
    """Incremental echelon form over Q(zeta_n) with leftmost pivots.

    ``insert`` takes a sparse row {column: CycloElem}; rows that reduce to
    zero are discarded.  Pivot rows are stored as integer numerator vectors
    together with a positive integer ``den`` equal to the numerator of the
    pivot entry, i.e. every pivot row has value 1 in its pivot column.
    """

    def __init__(self, field: CycloField, rational: bool = False):
        self.field = field
        self.rational = rational or field.phi == 1
        self.pivots: Dict[int, tuple] = {}
        self._zero = 0 if self.rational else (0,) * field.phi

    def __len__(self):
        return len(self.pivots)

    # conversions
    def _to_int_row(self, row: Dict[int, CycloElem]) -> Dict[int, object]:
        den = 1
        for v in row.values():
            for q in v.coeffs:
                if q.denominator != 1:
                    den = lcm(den, q.denominator)
        out = {}
        for j, v in row.items():
            if v.is_zero():
                continue
            if self.rational:
                out[j] = int(v.coeffs[0] * den)
            else:
                out[j] = tuple(int(q * den) for q in v.coeffs)
        return out

    def _to_elem(self, num, den: int) -> CycloElem:
        if self.rational:
            return self.field.rational(Fraction(num, den))
        return CycloElem(self.field, tuple(Fraction(c, den) for c in num))

    # reduction
    def _reduce(self, nums: dict) -> dict:
        pivots = self.pivots
        rational = self.rational
        imul = self.field.imul
        while nums:
            c = min(nums)
            piv = pivots.get(c)
            if piv is None:
                return nums
            pnums, pden = piv
            rc = nums[c]
            new = {}
            if rational:
                if pden == 1:
                    new = dict(nums)
                else:
                    for j, v in nums.items():
                        new[j] = pden * v
                for j, v in pnums.items():
                    s = new.get(j, 0) - rc * v
                    if s:
                        new[j] = s
                    else:
                        new.pop(j, None)
            else:
                if pden == 1:
                    new = dict(nums)
                else:
                    for j, v in nums.items():
                        new[j] = tuple(pden * a for a in v)
                zero = self._zero
                for j, v in pnums.items():
                    prod = imul(rc, v)
                    s = tuple(a - b for a, b in zip(new.get(j, zero), prod))
                    if any(s):
                        new[j] = s
                    else:
                        new.pop(j, None)
            if new:
                g = _vec_content(new, rational)
                if g > 1:
                    if rational:
                        new = {j: v // g for j, v in new.items()}
                    else:
                        new = {j: tuple(a // g for a in v) for j, v in new.items()}
            nums = new
        return nums

    def _make_monic(self, nums: dict):
        c = min(nums)
        lead = nums[c]
        if self.rational:
            if lead < 0:
                nums = {j: -v for j, v in nums.items()}
            return nums, abs(lead)
        lead_elem = CycloElem(self.field, tuple(Fraction(a) for a in lead))
        inv = lead_elem.inv()
        den = 1
        for q in inv.coeffs:
            den = lcm(den, q.denominator)
        s = tuple(int(q * den) for q in inv.coeffs)
        imul = self.field.imul
        out = {j: imul(s, v) for j, v in nums.items()}
        # lead * s = den exactly, a rational integer
        g = gcd(den, _vec_content(out, False))
        if g > 1:
            out = {j: tuple(a // g for a in v) for j, v in out.items()}
            den //= g
        return out, den

    def insert_int(self, nums: dict) -> bool:
        nums = self._reduce(nums)
        if not nums:
            return False
        c = min(nums)
        self.pivots[c] = self._make_monic(nums)
        return True

    def insert(self, row: Dict[int, CycloElem]) -> bool:
        return self.insert_int(self._to_int_row(row))

    def reduces_to_zero(self, row: Dict[int, CycloElem]) -> bool:
        return not self._reduce(self._to_int_row(row))

    def pivot_columns(self) -> List[int]:
        return sorted(self.pivots)

    def rref(self) -> Dict[int, Dict[int, CycloElem]]:
        """Reduced rows keyed by pivot column (pivot entry 1, zeros at other pivots)."""
        cols = sorted(self.pivots, reverse=True)
        done: Dict[int, tuple] = {}
        imul = self.field.imul
        rational = self.rational
        for c in cols:
            nums, den = dict(self.pivots[c][0]), self.pivots[c][1]
            for c2 in sorted(j for j in nums if j != c and j in done):
                if c2 not in nums:
                    continue
                pnums, pden = done[c2]
                rc = nums[c2]
                if rational:
                    new = {j: pden * v for j, v in nums.items()}
                    for j, v in pnums.items():
                        s = new.get(j, 0) - rc * v
                        if s:
                            new[j] = s
                        else:
                            new.pop(j, None)
                else:
                    new = {j: tuple(pden * a for a in v) for j, v in nums.items()}
                    for j, v in pnums.items():
                        prod = imul(rc, v)
                        old = new.get(j, self._zero)
                        s = tuple(a - b for a, b in zip(old, prod))
                        if any(s):
                            new[j] = s
                        else:
                            new.pop(j, None)
                den *= pden
                g = gcd(den, _vec_content(new, rational))
                if g > 1:
                    if rational:
                        new = {j: v // g for j, v in new.items()}
                    else:
                        new = {j: tuple(a // g for a in v) for j, v in new.items()}
                    den //= g
                nums = new
            done[c] = (nums, den)
        return {c: {j: self._to_elem(v, den) for j, v in nums.items()}
                for c, (nums, den) in sorted(done.items())}


def _is_rational_rows(rows) -> bool:
    return all(v.is_rational() for r in rows for v in r)


def _sparse(row) -> Dict[int, CycloElem]:
    return {j: v for j, v in enumerate(row) if not v.is_zero()}


def rank(M: ExactMatrix) -> int:
    """Rank, eliminating along the shorter dimension with early exit."""
    nrows, ncols = M.shape
    if nrows == 0 or ncols == 0:
        return 0
    vectors = M.rows if ncols <= nrows else M.transpose_rows()
    bound = min(nrows, ncols)
    ech = Echelon(M.field, rational=_is_rational_rows(M.rows))
    for v in vectors:
        ech.insert(_sparse(v))
        if len(ech) == bound:
            break
    return len(ech)


# -- graded pieces ------------------------------------------------------------------

@dataclass
class GradedPiece:
    degree: int
    basis: List[MultiPoly]
    source: str
    vars: VarSet = dc_field(default_factory=lambda: VarSet(XYZ))

    @property
    def dim(self) -> int:
        return len(self.basis)


def kernel_vectors(M: ExactMatrix) -> List[List[CycloElem]]:
    """Right kernel basis read off the reduced row echelon form.

    One vector per free column, in increasing column order, with a 1 in that
    column.
    """
    ncols = len(M.columns)
    ech = Echelon(M.field, rational=_is_rational_rows(M.rows))
    for r in M.rows:
        ech.insert(_sparse(r))
        if len(ech) == ncols:
            break
    reduced = ech.rref()
    zero, one = M.field.zero, M.field.one
    out = []
    for f in range(ncols):
        if f in reduced:
            continue
        vec = [zero] * ncols
        vec[f] = one
        for c, row in reduced.items():
            v = row.get(f)
            if v is not None:
                vec[c] = -v
        out.append(vec)
    return out


def kernel_basis(M: ExactMatrix, degree: Optional[int] = None) -> GradedPiece:
    vecs = kernel_vectors(M)
    basis = [MultiPoly(M.field, M.vars, {e: v for e, v in zip(M.columns, vec)}) for vec in vecs]
    if degree is None:
        degree = sum(M.columns[0]) if M.columns else 0
    return GradedPiece(degree, basis, "kernel of interpolation", M.vars)


def _coordinate_powers(point: ProjPoint, d: int):
    out = []
    for c in point.coords:
        pw = [c.field.one]
        for _ in range(d):
            pw.append(pw[-1] * c)
        out.append(pw)
    return out


def interpolation_matrix(points, d: int, field: Optional[CycloField] = None) -> ExactMatrix:
    """One row per point: the values of all degree-d monomials there."""
    if field is None and isinstance(points, Configuration):
        field = points.field
    points = list(points)
    if field is None:
        if points:
            field = points[0].field
        else:
            raise ValueError("field required for an empty point set")
    cols = monomials_of_degree(3, d)
    rows = []
    for p in points:
        pw = _coordinate_powers(p, d)
        rows.append([pw[0][i] * pw[1][j] * pw[2][k] for i, j, k in cols])
    return ExactMatrix(field, rows, cols)


def hilbert_dim(points: Configuration, d: int) -> int:
    """dim of the degree-d forms vanishing on the configuration."""
    M = interpolation_matrix(points, d, points.field)
    return len(M.columns) - rank(M)


def ideal_piece(points: Configuration, d: int) -> GradedPiece:
    M = interpolation_matrix(points, d, points.field)
    return kernel_basis(M, d)


def _multiple_rows(gens: Sequence[MultiPoly], d: int):
    """Coefficient rows of monomial * generator in degree d, as sparse dicts."""
    if not gens:
        return [], []
    vars = gens[0].vars
    cols = monomials_of_degree(len(vars), d)
    index = {e: j for j, e in enumerate(cols)}
    rows = []
    for g in gens:
        e = g.degree()
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        if e > d or g.is_zero():
            continue
        for mono in monomials_of_degree(len(vars), d - e):
            row = {}
            for exp, c in g.terms.items():
                row[index[tuple(a + b for a, b in zip(exp, mono))]] = c
            rows.append(row)
    return rows, cols


def generator_span_dim(gens: Sequence[MultiPoly], d: int, with_basis: bool = True):
    """dim of the degree-d piece of the ideal generated by ``gens``.

    Returns ``(dim, piece)``; the piece's basis is the reduced echelon basis
    of the span of all monomial multiples (``None`` if ``with_basis`` is off).
    """
    if not gens:
        return 0, None
    field, vars = gens[0].field, gens[0].vars
    rows, cols = _multiple_rows(gens, d)
    ech = Echelon(field, rational=all(g.is_rational() for g in gens))
    for r in rows:
        ech.insert(r)
        if len(ech) == len(cols):
            break
    if not with_basis:
        return len(ech), None
    reduced = ech.rref()
    basis = [MultiPoly(field, vars, {cols[j]: v for j, v in row.items()})
             for _, row in sorted(reduced.items())]
    return len(ech), GradedPiece(d, basis, "span of generator multiples", vars)


def generation_check(gens: Sequence[MultiPoly], points: Configuration, d_min: int, d_max: int,
                     claim: str = "ideal-generation") -> Certificate:
    """Compare dim J_d with dim I(points)_d for every d in [d_min, d_max]."""
    for i, g in enumerate(gens):
        if not vanishes_on(g, points):
            raise ContainmentError(f"generator {i + 1} does not vanish on {points.name}_{points.m}")
    rows = []
    ok = True
    for d in range(d_min, d_max + 1):
        span, _ = generator_span_dim(gens, d, with_basis=False)
        full = hilbert_dim(points, d)
        rows.append({"degree": d, "span_dim": span, "ideal_dim": full})
        ok = ok and span == full
    return Certificate(
        claim,
        {"m": points.m, "set": points.name, "points": len(points), "generators": len(gens),
         "d_min": d_min, "d_max": d_max},
        "pass" if ok else "fail",
        {"degrees": rows},
    )


# -- fat points and unexpectedness ---------------------------------------------------

def fat_point_rows(basis: GradedPiece, point: ProjPoint, mult: int) -> ExactMatrix:
    """Conditions for a point of multiplicity ``mult`` on the span of ``basis``.

    Uses all partials of order exactly mult - 1; for forms these vanish at a
    point iff every partial of lower order does (Euler), giving C(mult+1, 2)
    rows.  Columns are the basis members.
    """
    if mult < 1:
        raise ValueError("multiplicity must be at least 1")
    field = point.field
    rows = []
    for orders in monomials_of_degree(len(basis.vars), mult - 1):
        spec = dict(zip(basis.vars, orders))
        rows.append([b.diff_multi(spec).evaluate(point.coords) for b in basis.basis])
    cols = [tuple(int(i == j) for i in range(basis.dim)) for j in range(basis.dim)]
    names = VarSet(f"v{j}" for j in range(basis.dim))
    return ExactMatrix(field, rows, cols, names)


def random_coordinates(seed: int, bound: int = 10 ** 6) -> tuple:
    """Integer triple in [1, bound]^3 drawn from a generator seeded with ``seed``."""
    rng = random.Random(seed)
    return tuple(rng.randint(1, bound) for _ in range(3))


def random_point(field: CycloField, seed: int, bound: int = 10 ** 6) -> ProjPoint:
    return ProjPoint(tuple(field(c) for c in random_coordinates(seed, bound)))


@dataclass
class UnexpectednessReport:
    m: int
    d: int
    mult: int
    dim_IZ_d: int
    fatpoint_conditions_expected: int
    dim_actual: int
    expected: int
    unexpected: bool
    trials: list
    inconclusive: bool = False

    def certificate(self, claim: str = "theorem-unexpected") -> Certificate:
        if self.inconclusive:
            status = "inconclusive"
        else:
            status = "pass" if self.unexpected else "fail"
        return Certificate(
            claim,
            {"m": self.m, "degree": self.d, "mult": self.mult,
             "seeds": [t["seed"] for t in self.trials]},
            status,
            {"dim_IZ_d": self.dim_IZ_d,
             "fatpoint_conditions_expected": self.fatpoint_conditions_expected,
             "expected": self.expected, "dim_actual": self.dim_actual,
             "unexpected": self.unexpected, "trials": self.trials},
        )


def unexpectedness_check(m: int, d: Optional[int] = None, mult: int = 3, trials: int = 3,
                         seed: int = 0, points: Optional[Configuration] = None) -> UnexpectednessReport:
    """Impose a random fat point on [I(Z_m)]_d and compare with the naive count."""
    from .arrangements import diminished_set

    if trials < 1:
        raise ValueError("need at least one trial")
    d = 2 * m + 1 if d is None else d
    Z = points if points is not None else diminished_set(m)
    piece = ideal_piece(Z, d)
    conditions = comb(mult + 1, 2)
    expected = max(0, piece.dim - conditions)
    records = []
    for t in range(trials):
        s = seed + t
        coords = random_coordinates(s)
        P = ProjPoint(tuple(Z.field(c) for c in coords))
        r = rank(fat_point_rows(piece, P, mult)) if piece.dim else 0
        records.append({"seed": s, "point": list(coords),
                        "dim": piece.dim - r})
    dims = {rec["dim"] for rec in records}
    actual = min(dims)
    return UnexpectednessReport(m, d, mult, piece.dim, conditions, actual, expected,
                                actual > expected, records, inconclusive=len(dims) > 1)


# -- span membership -------------------------------------------------------------------

def solve_in_span(basis: Sequence[MultiPoly], target: MultiPoly) -> Optional[List[CycloElem]]:
    """Coefficients c with sum c_i basis_i == target, or None if not in the span.

    ``basis`` must be linearly independent.
    """
    if not basis:
        return [] if target.is_zero() else None
    field = target.field
    monos = sorted({e for b in basis for e in b.terms} | set(target.terms), reverse=True)
    k = len(basis)
    # columns: basis members then the target; rows: monomials
    rows = []
    for e in monos:
        row = [b.terms.get(e, field.zero) for b in basis]
        row.append(target.terms.get(e, field.zero))
        rows.append(row)
    ech = Echelon(field, rational=_is_rational_rows(rows))
    for r in rows:
        ech.insert(_sparse(r))
    reduced = ech.rref()
    if k in reduced:
        return None
    if len(reduced) != k:
        raise ValueError("basis is not linearly independent")
    coeffs = [reduced[i].get(k, field.zero) for i in range(k)]
    check = target.zero_like()
    for c, b in zip(coeffs, basis):
        check = check + b.scale(c)
    assert check == target
    return coeffs
