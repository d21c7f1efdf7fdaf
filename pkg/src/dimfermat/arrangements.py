"""Point configurations and polynomials built from Fermat line arrangements.

W_m is the grid cut out by x^m - y^m and x^m - z^m, X the three coordinate
points, Y_m = W_{2m} minus W_m and Z_m = Y_m together with X.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterable, Sequence

from .cyclotomic import CycloElem, CycloField, ambient_field, serialize
from .multipoly import XYZ, MultiPoly


@dataclass(frozen=True)
class ProjPoint:
    """Point of the projective plane, scaled so the first nonzero coordinate is 1."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != 3:
            raise ValueError("plane points have three coordinates")
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a projective point")
        if not lead.is_one():
            inv = lead.inv()
            coords = tuple(c * inv for c in coords)
        object.__setattr__(self, "coords", coords)

    @property
    def field(self) -> CycloField:
        return self.coords[0].field

    def has_zero_coordinate(self) -> bool:
        return any(c.is_zero() for c in self.coords)

    def __str__(self):
        return "(" + " : ".join(serialize(c) for c in self.coords) + ")"

    def sort_key(self):
        return str(self)


def proj_point(field: CycloField, *coords) -> ProjPoint:
    return ProjPoint(tuple(field(c) for c in coords))


@dataclass(frozen=True)
class Configuration:
    name: str
    m: int
    points: tuple
    field: CycloField = dc_field(compare=False)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.points))

    def __contains__(self, p):
        return p in self._members

    def serialize(self) -> str:
        return "\n".join(str(p) for p in self.points)


def make_configuration(name: str, m: int, points: Iterable[ProjPoint], field: CycloField) -> Configuration:
    pts = sorted(set(points), key=ProjPoint.sort_key)
    return Configuration(name, m, tuple(pts), field)


@dataclass(frozen=True)
class LineForm:
    poly: MultiPoly
    label: int

    def __post_init__(self):
        if self.poly.degree() != 1 or not self.poly.is_homogeneous():
            raise ValueError("a line form must be linear and homogeneous")

    def coefficients(self) -> tuple:
        """(alpha, beta, gamma) with the form alpha x + beta y + gamma z."""
        return tuple(self.poly.terms.get(e, self.poly.field.zero)
                     for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def contains(self, p: ProjPoint) -> bool:
        return self.poly.evaluate(p.coords).is_zero()


# -- configurations -------------------------------------------------------------

def fermat_grid(m: int, field: CycloField) -> Configuration:
    """W_m: the m^2 points (1 : w^i : w^j) with w a primitive m-th root of unity."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if field.n % m:
        raise ValueError(f"{field} does not contain the {m}-th roots of unity")
    w = field.primitive_root(m)
    pts = [ProjPoint((field.one, w ** i, w ** j))
           for i in range(1, m + 1) for j in range(1, m + 1)]
    return make_configuration("W", m, pts, field)


def coordinate_points(field: CycloField) -> Configuration:
    pts = [proj_point(field, 1, 0, 0), proj_point(field, 0, 1, 0), proj_point(field, 0, 0, 1)]
    return make_configuration("X", 0, pts, field)


def singular_points(m: int, field: CycloField) -> Configuration:
    """S_m = W_m with the coordinate points."""
    pts = list(fermat_grid(m, field).points) + list(coordinate_points(field).points)
    return make_configuration("S", m, pts, field)


def grid_difference(m: int, field: CycloField) -> Configuration:
    """Y_m = W_{2m} minus W_m."""
    big = fermat_grid(2 * m, field)
    small = fermat_grid(m, field)
    return make_configuration("Y", m, [p for p in big.points if p not in small], field)


def diminished_set(m: int, field: CycloField | None = None) -> Configuration:
    """Z_m = (W_{2m} minus W_m) with the coordinate points; 3m^2 + 3 points."""
    field = field or ambient_field(m)
    y = grid_difference(m, field)
    x = coordinate_points(field)
    return make_configuration("Z", m, list(y.points) + list(x.points), field)


# -- generators -------------------------------------------------------------------

def _xyz(field):
    return MultiPoly.gens(field, XYZ)


def generators_Y(m: int, field: CycloField | None = None) -> tuple:
    """(f_1, f_2, f_3) = (x^2m - y^2m, x^2m - z^2m, (x^m + z^m)(y^m + z^m))."""
    field = field or ambient_field(m)
    x, y, z = _xyz(field)
    return (x ** (2 * m) - y ** (2 * m),
            x ** (2 * m) - z ** (2 * m),
            (x ** m + z ** m) * (y ** m + z ** m))


def generators_Z(m: int, field: CycloField | None = None) -> tuple:
    field = field or ambient_field(m)
    x, y, z = _xyz(field)
    xm, ym, zm = x ** m, y ** m, z ** m
    return (
        x * (ym * ym - zm * zm),
        y * (xm * xm - zm * zm),
        z * (xm + ym) * (ym + zm),
        z * (xm + ym) * (xm + zm),
        y * (xm + zm) * (ym + zm),
        x * (xm + zm) * (ym + zm),
    )


def vanishes_on(poly: MultiPoly, points: Iterable[ProjPoint]) -> bool:
    return all(poly.evaluate(p.coords).is_zero() for p in points)


# -- the Fermat cubic and its nine inflection tangents ------------------------------

@dataclass
class InflectionScene:
    field: CycloField
    fermat: MultiPoly
    hessian: MultiPoly
    points: list          # A_1..A_9
    lines: list           # l_1..l_9, l_i tangent at A_i
    g3: MultiPoly


def inflection_scene(field: CycloField | None = None) -> InflectionScene:
    field = field or ambient_field(3)
    if field.n % 3:
        raise ValueError(f"{field} has no primitive cube root of unity")
    eps = field.primitive_root(3)
    eps2 = eps * eps
    x, y, z = _xyz(field)
    fermat = x ** 3 + y ** 3 + z ** 3
    hessian = x * y * z
    one, zero = field.one, field.zero
    points = [
        ProjPoint((one, -one, zero)), ProjPoint((one, -eps, zero)), ProjPoint((one, -eps2, zero)),
        ProjPoint((one, zero, -one)), ProjPoint((one, zero, -eps)), ProjPoint((one, zero, -eps2)),
        ProjPoint((zero, one, -one)), ProjPoint((zero, one, -eps)), ProjPoint((zero, one, -eps2)),
    ]
    forms = [x + y, x + y * eps2, x + y * eps,
             x + z, x + z * eps2, x + z * eps,
             y + z, y + z * eps2, y + z * eps]
    lines = [LineForm(f, i + 1) for i, f in enumerate(forms)]
    g3 = (x ** 3 + y ** 3) * (y ** 3 + z ** 3) * (z ** 3 + x ** 3)
    return InflectionScene(field, fermat, hessian, points, lines, g3)


def _cross(u: Sequence[CycloElem], v: Sequence[CycloElem]) -> tuple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _proportional(u, v) -> bool:
    return all(c.is_zero() for c in _cross(u, v))


def contact_order(curve: MultiPoly, line: LineForm, point: ProjPoint) -> int:
    """Multiplicity of ``point`` as a root of ``curve`` restricted to ``line``.

    The line is parametrized as point + t * other; the answer is the lowest
    power of t in curve(point + t * other).  Returns -1 if the line is a
    component of the curve.
    """
    if not line.contains(point):
        raise ValueError(f"{point} does not lie on line {line.label}")
    field = curve.field
    coeffs = line.coefficients()
    other = None
    for basis in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        cand = _cross(coeffs, [field(b) for b in basis])
        if any(not c.is_zero() for c in cand) and not _proportional(cand, point.coords):
            other = cand
            break
    assert other is not None
    t = MultiPoly.var(field, ("t",), "t")
    param = {v: t * o + p for v, p, o in zip(curve.vars, point.coords, other)}
    restricted = curve.substitute(param, ("t",))
    if restricted.is_zero():
        return -1
    return min(e[0] for e in restricted.terms)


def verify_tangency(curve: MultiPoly, line: LineForm, point: ProjPoint) -> bool:
    """True iff the line meets the curve at ``point`` with contact order >= 3."""
    if not curve.evaluate(point.coords).is_zero():
        raise ValueError(f"{point} is not on the curve")
    order = contact_order(curve, line, point)
    return order == -1 or order >= 3


def intersection_point(l1: LineForm, l2: LineForm) -> ProjPoint:
    return ProjPoint(_cross(l1.coefficients(), l2.coefficients()))


def line_incidences(lines: Sequence[LineForm]) -> dict:
    """Map each pairwise intersection point to the number of lines through it."""
    counts = {}
    for l1, l2 in combinations(lines, 2):
        p = intersection_point(l1, l2)
        if p not in counts:
            counts[p] = sum(1 for l in lines if l.contains(p))
    return counts


def double_points_crosscheck(lines: Sequence[LineForm], field: CycloField | None = None) -> dict:
    """Compare the double points of the arrangement with W_6 minus W_3.

    Returns a summary dict whose ``ok`` entry is the verdict.
    """
    field = field or lines[0].poly.field
    counts = line_incidences(lines)
    doubles = {p for p, k in counts.items() if k == 2}
    triples = {p for p, k in counts.items() if k >= 3}
    expected = set(grid_difference(3, field).points)
    return {
        "ok": doubles == expected and len(triples) == 3,
        "double_points": len(doubles),
        "triple_points": len(triples),
        "triples_are_coordinate_points": triples == set(coordinate_points(field).points),
    }
