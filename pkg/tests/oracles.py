"""Independent reference computations used to pin expected values.

Everything here goes through sympy and never touches the elimination engine
or the polynomial arithmetic of the package.
"""

import sympy as sp

T = sp.Symbol("t")


def sympy_cyclotomic(n):
    return sp.Poly(sp.cyclotomic_poly(n, T), T)


def exact_quotient(num_coeffs, den_coeffs):
    """Polynomial division with zero remainder enforced; lowest degree first."""
    num = sp.Poly(list(reversed(num_coeffs)), T)
    den = sp.Poly(list(reversed(den_coeffs)), T)
    q, r = sp.div(num, den)
    assert r.is_zero
    return [int(c) for c in reversed(q.all_coeffs())]


def regular_representation(elem_coeffs, n):
    """phi x phi rational matrix of multiplication by the element in Q(zeta_n)."""
    phi_poly = sympy_cyclotomic(n)
    phi = phi_poly.degree()
    alpha = sp.Poly(sum(sp.Rational(c) * T ** i for i, c in enumerate(elem_coeffs)), T)
    cols = []
    for j in range(phi):
        prod = sp.rem(alpha * sp.Poly(T ** j, T), phi_poly)
        coeffs = list(reversed(prod.all_coeffs()))
        coeffs += [0] * (phi - len(coeffs))
        cols.append(coeffs[:phi])
    return sp.Matrix(phi, phi, lambda i, j: cols[j][i])


def cyclotomic_rank(rows, n):
    """Rank over Q(zeta_n) of a matrix of coefficient vectors, via Q-rank / phi."""
    phi = sympy_cyclotomic(n).degree()
    if not rows:
        return 0
    blocks = [[regular_representation(e, n) for e in row] for row in rows]
    big = sp.BlockMatrix(blocks).as_explicit()
    r = big.rank()
    assert r % phi == 0
    return r // phi


def rational_rank(rows):
    return sp.Matrix(rows).rank() if rows else 0


def expand_count(expr_text):
    x, y, z = sp.symbols("x y z")
    e = sp.expand(sp.sympify(expr_text, locals={"x": x, "y": y, "z": z}))
    return sp.Poly(e, x, y, z)
