"""Matrix builders for the graded multiplication maps used everywhere.

All matrices are assembled column by column, columns indexed slot-major in
monomial_basis order, so pivoting and fixtures are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .linalg import ExactMatrix
from .polynomials import Polynomial, monomial_basis


def s_dim(d: int) -> int:
    """dim of the space of homogeneous degree-d polynomials in x, y, z."""
    if d < 0:
        return 0
    return (d + 1) * (d + 2) // 2


def integer_scaled(p: Polynomial) -> dict[tuple[int, int, int], int]:
    """Term map of p scaled to coprime integer coefficients."""
    if p.is_zero():
        return {}
    lcm = 1
    for c in p.terms.values():
        d = c.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = {m: int(c * lcm) for m, c in p.terms.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = {m: v // g for m, v in ints.items()}
    return ints


@lru_cache(maxsize=None)
def _basis_index(d: int) -> dict[tuple[int, int, int], int]:
    return {m: i for i, m in enumerate(monomial_basis(d))}


def _shift_column(gen: dict, u: tuple[int, int, int], index: dict, nrows: int) -> list[int]:
    col = [0] * nrows
    for m, c in gen.items():
        col[index[(m[0] + u[0], m[1] + u[1], m[2] + u[2])]] = c
    return col


def multiplication_matrix(
    gens: list[Polynomial], m: int, scale_generators: bool = True
) -> ExactMatrix:
    """Matrix of S_m^len(gens) -> S_{m+d}, (a_i) -> sum a_i * gens[i].

    All generators must be homogeneous of one degree d.  With
    scale_generators each generator is rescaled to primitive integers (a
    column scaling: rank-preserving but kernel-distorting); pass False when
    the kernel itself is wanted.
    """
    degs = {g.degree() for g in gens if not g.is_zero()}
    if len(degs) != 1:
        raise ValueError("generators must share one degree")
    d = degs.pop()
    if m < 0:
        return ExactMatrix([], ncols=0)
    target = m + d
    nrows = s_dim(target)
    index = _basis_index(target)
    domain = monomial_basis(m)
    cols = []
    for g in gens:
        gi = integer_scaled(g) if scale_generators else dict(g.terms)
        for u in domain:
            cols.append(_shift_column(gi, u, index, nrows))
    return ExactMatrix.from_columns(cols, nrows, assume_int=scale_generators)


def jacobian_partials(f: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    return (
        f.partial_derivative("x"),
        f.partial_derivative("y"),
        f.partial_derivative("z"),
    )


def _integer_partials(f: Polynomial) -> list[dict]:
    """Integer term maps of the partials of a single integer rescaling of f.

    One global scale factor keeps every column of the d0/d1 matrices uniformly
    scaled (per-partial scaling would mix factors within a column).
    """
    fi = Polynomial({m: Fraction(c) for m, c in integer_scaled(f).items()})
    return [{m: int(c) for m, c in p.terms.items()} for p in jacobian_partials(fi)]


def jacobian_matrix(f: Polynomial, m: int, scale_generators: bool = True) -> ExactMatrix:
    """Matrix of S_m^3 -> S_{m+N-1}, (a,b,c) -> a f_x + b f_y + c f_z."""
    return multiplication_matrix(list(jacobian_partials(f)), m, scale_generators)


def cross_matrix(f: Polynomial, m: int) -> ExactMatrix:
    """Matrix of S_m^3 -> S_{m+N-1}^3, v -> grad(f) x v (wedge with df on 1-forms)."""
    if m < 0:
        return ExactMatrix([], ncols=0)
    fx, fy, fz = _integer_partials(f)
    N = f.degree()
    target = m + N - 1
    block = s_dim(target)
    index = _basis_index(target)
    domain = monomial_basis(m)
    zero: dict = {}
    # (a,0,0) -> (0, a f_z, -a f_y); (0,b,0) -> (-b f_z, 0, b f_x);
    # (0,0,c) -> (c f_y, -c f_x, 0)   [components on dy^dz, dz^dx, dx^dy]
    neg = lambda g: {k: -v for k, v in g.items()}
    slot_images = [
        (zero, fz, neg(fy)),
        (neg(fz), zero, fx),
        (fy, neg(fx), zero),
    ]
    cols = []
    for images in slot_images:
        for u in domain:
            col = []
            for g in images:
                col.extend(_shift_column(g, u, index, block))
            cols.append(col)
    return ExactMatrix.from_columns(cols, 3 * block, assume_int=True)


def gradient_column_matrix(f: Polynomial, m: int) -> ExactMatrix:
    """Matrix of S_m -> S_{m+N-1}^3, g -> g * (f_x, f_y, f_z)."""
    if m < 0:
        return ExactMatrix([], ncols=0)
    parts = _integer_partials(f)
    N = f.degree()
    target = m + N - 1
    block = s_dim(target)
    index = _basis_index(target)
    cols = []
    for u in monomial_basis(m):
        col = []
        for g in parts:
            col.extend(_shift_column(g, u, index, block))
        cols.append(col)
    return ExactMatrix.from_columns(cols, 3 * block, assume_int=True)
