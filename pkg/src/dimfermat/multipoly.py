"""Sparse multivariate polynomials over a cyclotomic field."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from .cyclotomic import CycloElem, CycloField, parse as parse_cyclo, serialize

Exponent = Tuple[int, ...]

XYZ = ("x", "y", "z")
ABC = ("a", "b", "c")
XYZABC = XYZ + ABC


class VarSet(tuple):
    """Ordered tuple of distinct variable names."""

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        return super().__new__(cls, names)

    def index(self, name):  # noqa: D102 - tuple.index with a clearer error
        try:
            return super().index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r} (have {tuple(self)})") from None


def graded_lex_key(exp: Exponent):
    return (sum(exp), exp)


def monomials_of_degree(nvars: int, d: int) -> list[Exponent]:
    """Exponent tuples of total degree d, lexicographically descending."""
    if d < 0:
        return []
    if nvars == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


class MultiPoly:
    """Polynomial as a map exponent tuple -> nonzero coefficient.

    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field: CycloField, vars: Sequence[str], terms: Optional[Mapping] = None):
        self.field = field
        self.vars = vars if isinstance(vars, VarSet) else VarSet(vars)
        clean: Dict[Exponent, CycloElem] = {}
        if terms:
            k = len(self.vars)
            for exp, c in terms.items():
                if len(exp) != k:
                    raise ValueError(f"exponent {exp} does not match {k} variables")
                c = field(c)
                if not c.is_zero():
                    clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, field, vars, terms):
        p = cls.__new__(cls)
        p.field, p.vars, p.terms = field, vars, terms
        return p

    # -- constructors ---------------------------------------------------------
    @classmethod
    def constant(cls, field, vars, c) -> "MultiPoly":
        vars = VarSet(vars)
        return cls(field, vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, field, vars, name: str) -> "MultiPoly":
        vars = VarSet(vars)
        exp = [0] * len(vars)
        exp[vars.index(name)] = 1
        return cls(field, vars, {tuple(exp): 1})

    @classmethod
    def gens(cls, field, vars) -> list["MultiPoly"]:
        vars = VarSet(vars)
        return [cls.var(field, vars, v) for v in vars]

    def zero_like(self) -> "MultiPoly":
        return MultiPoly._raw(self.field, self.vars, {})

    # -- ring operations -------------------------------------------------------
    def _check(self, other: "MultiPoly"):
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        if tuple(other.vars) != tuple(self.vars):
            raise ValueError(f"variable mismatch: {tuple(self.vars)} vs {tuple(other.vars)}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, CycloElem)):
            return MultiPoly.constant(self.field, self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return MultiPoly._raw(self.field, self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.field, self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "MultiPoly":
        c = self.field(c)
        if c.is_zero():
            return self.zero_like()
        return MultiPoly._raw(self.field, self.vars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, CycloElem] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = terms.get(e)
                terms[e] = prod if s is None else s + prod
        return MultiPoly._raw(self.field, self.vars,
                              {e: c for e, c in terms.items() if not c.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.field, self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            other = MultiPoly.constant(self.field, self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.field == other.field and tuple(self.vars) == tuple(other.vars)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((tuple(self.vars), frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # -- structure -------------------------------------------------------------
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def partial_degree(self, names: Sequence[str]) -> Optional[int]:
        """Common degree in the given variables, or None if terms disagree."""
        idx = [self.vars.index(v) for v in names]
        degs = {sum(e[i] for i in idx) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self, names: Optional[Sequence[str]] = None) -> bool:
        if not self.terms:
            return True
        return self.partial_degree(names or self.vars) is not None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: graded_lex_key(t[0]), reverse=True)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.terms.values())

    # -- calculus / evaluation -------------------------------------------------
    def diff(self, name: str, order: int = 1) -> "MultiPoly":
        i = self.vars.index(name)
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k < order:
                continue
            factor = 1
            for j in range(order):
                factor *= k - j
            ne = e[:i] + (k - order,) + e[i + 1:]
            terms[ne] = c * factor
        return MultiPoly._raw(self.field, self.vars, terms)

    def diff_multi(self, orders: Mapping[str, int]) -> "MultiPoly":
        p = self
        for name, k in orders.items():
            if k:
                p = p.diff(name, k)
        return p

    def evaluate(self, values: Sequence) -> CycloElem:
        """Value at a full assignment given in variable order."""
        if len(values) != len(self.vars):
            raise ValueError(f"need {len(self.vars)} values, got {len(values)}")
        vals = [self.field(v) for v in values]
        cache: Dict[Tuple[int, int], CycloElem] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = vals[i] ** k
            return cache[key]

        total = self.field.zero
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            total = total + t
        return total

    def substitute(self, assignment: Mapping[str, object],
                   target_vars: Optional[Sequence[str]] = None) -> "MultiPoly":
        """Replace variables by polynomials or scalars.

        Polynomial values must live in ``target_vars`` (default: the same
        variable set).  Unassigned variables are kept and must also be present
        in ``target_vars``.
        """
        tv = VarSet(target_vars) if target_vars is not None else self.vars
        images = []
        for name in self.vars:
            if name in assignment:
                val = assignment[name]
                if isinstance(val, MultiPoly):
                    if val.field != self.field:
                        raise ValueError(f"field mismatch: {self.field} vs {val.field}")
                    if tuple(val.vars) != tuple(tv):
                        raise ValueError(f"substituted value lives in {tuple(val.vars)}, expected {tuple(tv)}")
                    images.append(val)
                else:
                    images.append(MultiPoly.constant(self.field, tv, self.field(val)))
            else:
                images.append(MultiPoly.var(self.field, tv, name))
        for key in assignment:
            self.vars.index(key)
        power_cache: Dict[Tuple[int, int], MultiPoly] = {}

        def power(i, k):
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = images[i] ** k
            return power_cache[key]

        result = MultiPoly._raw(self.field, tv, {})
        for e, c in self.terms.items():
            t = MultiPoly.constant(self.field, tv, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            result = result + t
        return result

    def embed(self, target_vars: Sequence[str]) -> "MultiPoly":
        """Same polynomial viewed in a larger variable set."""
        tv = VarSet(target_vars)
        pos = [tv.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(tv)
            for i, k in zip(pos, e):
                ne[i] = k
            terms[tuple(ne)] = c
        return MultiPoly._raw(self.field, tv, terms)

    def restrict(self, target_vars: Sequence[str]) -> "MultiPoly":
        """Drop variables that do not occur; inverse of :meth:`embed`."""
        tv = VarSet(target_vars)
        keep = [self.vars.index(v) for v in tv]
        dropped = [i for i in range(len(self.vars)) if i not in keep]
        terms = {}
        for e, c in self.terms.items():
            if any(e[i] for i in dropped):
                raise ValueError(f"polynomial involves variables outside {tuple(tv)}")
            terms[tuple(e[i] for i in keep)] = c
        return MultiPoly._raw(self.field, tv, terms)

    def coefficients_in(self, names: Sequence[str]) -> Dict[Exponent, "MultiPoly"]:
        """Split by monomials in ``names``; coefficients keep the full variable set."""
        idx = [self.vars.index(v) for v in names]
        out: Dict[Exponent, Dict[Exponent, CycloElem]] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in idx)
            rest = tuple(0 if i in idx else k for i, k in enumerate(e))
            out.setdefault(key, {})[rest] = c
        return {k: MultiPoly._raw(self.field, self.vars, t) for k, t in out.items()}

    def coefficient_vector(self, monomials: Sequence[Exponent]) -> list[CycloElem]:
        zero = self.field.zero
        return [self.terms.get(e, zero) for e in monomials]

    # -- text ------------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)})"


def bidegree_of(p: MultiPoly, first=XYZ, second=ABC):
    """(deg in first triple, deg in second triple), or None if not bihomogeneous."""
    if p.is_zero():
        return None
    d1 = p.partial_degree(first)
    d2 = p.partial_degree(second)
    if d1 is None or d2 is None:
        return None
    return (d1, d2)


def partial_derivative(p: MultiPoly, v: str) -> MultiPoly:
    return p.diff(v)


def substitute(p: MultiPoly, assignment, target_vars=None) -> MultiPoly:
    return p.substitute(assignment, target_vars)


def format_monomial(vars, exp) -> str:
    return " ".join(f"{v}^{k}" for v, k in zip(vars, exp) if k)


def format_poly(p: MultiPoly) -> str:
    """Terms in graded-lex order, ``coeff * x^i y^j`` joined by `` + ``."""
    if not p.terms:
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = format_monomial(p.vars, e)
        parts.append(f"{serialize(c)} * {mono}" if mono else serialize(c))
    return " + ".join(parts)


_TERM_RE = re.compile(r"^(cyclo\(\d+\)\[[^\]]*\])(?:\s*\*\s*(.*))?$")


def parse_poly(text: str, vars: Sequence[str]) -> MultiPoly:
    """Inverse of :func:`format_poly`."""
    vars = VarSet(vars)
    text = text.strip()
    terms = {}
    field = None
    if text == "0":
        raise ValueError("cannot infer the field of the zero polynomial from text")
    for chunk in re.split(r"\s\+\s(?=cyclo)", text):
        match = _TERM_RE.match(chunk.strip())
        if not match:
            raise ValueError(f"bad term {chunk!r}")
        c = parse_cyclo(match.group(1))
        field = c.field
        exp = [0] * len(vars)
        if match.group(2):
            for factor in match.group(2).split():
                name, _, k = factor.partition("^")
                exp[vars.index(name)] += int(k)
        terms[tuple(exp)] = c
    return MultiPoly(field, vars, terms)
