"""Graded Koszul cohomology of (f_x, f_y, f_z), essential syzygies, and the
first-page spectral table.

H^m at internal degree k is computed directly from the two adjacent wedge-df
maps of the strand, never from the Milnor-algebra difference formula (that
formula is a cross-check, exercised in the tests).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .gradedmaps import (
    cross_matrix,
    gradient_column_matrix,
    jacobian_matrix,
    jacobian_partials,
    s_dim,
)
from .linalg import EchelonAccumulator, kernel_basis
from .milnor import RATIONAL, RankMode, jacobian_rank, milnor_dim, tau
from .polynomials import Monomial, Polynomial, monomial_basis


def omega_dim(m: int, k: int) -> int:
    """dim of the degree-k piece of the polynomial m-forms on C^3."""
    if m < 0 or m > 3:
        return 0
    return comb(3, m) * s_dim(k - m)


@lru_cache(maxsize=None)
def cross_rank(f: Polynomial, m: int, mode: RankMode = RATIONAL) -> int:
    """Rank of S_m^3 -> S_{m+N-1}^3, v -> grad(f) x v."""
    if m < 0:
        return 0
    return mode.rank(cross_matrix(f, m))


@lru_cache(maxsize=None)
def gradient_rank(f: Polynomial, m: int, mode: RankMode = RATIONAL) -> int:
    """Rank of S_m -> S_{m+N-1}^3, g -> g * grad(f)."""
    if m < 0:
        return 0
    return mode.rank(gradient_column_matrix(f, m))


def _outgoing_rank(f: Polynomial, m: int, k: int, mode: RankMode) -> int:
    """Rank of wedge-df on the degree-k piece of Omega^m."""
    if m == 0:
        return gradient_rank(f, k, mode)
    if m == 1:
        return cross_rank(f, k - 1, mode)
    if m == 2:
        return jacobian_rank(f, k - 2, mode)
    return 0


def koszul_h_dim(f: Polynomial, m: int, k: int, mode: RankMode = RATIONAL) -> int:
    """dim H^m(K^*(f))_k: strand kernel minus incoming rank."""
    if m < 0 or m > 3:
        return 0
    dim = omega_dim(m, k)
    if dim == 0:
        return 0
    incoming = _outgoing_rank(f, m - 1, k - f.degree(), mode) if m > 0 else 0
    return dim - _outgoing_rank(f, m, k, mode) - incoming


def er_dim(f: Polynomial, m: int, mode: RankMode = RATIONAL) -> int:
    """dim of degree-m essential relations: H^2 of the strand at degree m+2."""
    if m < 0:
        return 0
    return koszul_h_dim(f, 2, m + 2, mode)


def trivial_syzygy_dim(f: Polynomial, m: int) -> int:
    """dim of the degree-m trivial (Koszul) syzygies: 3 dim S_{m-N+1} - dim S_{m-2N+2}.

    Closed form for the image of v -> v x grad(f); valid for reduced f, where
    the kernel of that map is exactly the multiples of grad(f).
    """
    N = f.degree()
    return 3 * s_dim(m - N + 1) - s_dim(m - 2 * N + 2)


@dataclass(frozen=True)
class SyzygyClass:
    """A nontrivial relation a f_x + b f_y + c f_z = 0 in one degree."""

    a: Polynomial
    b: Polynomial
    c: Polynomial
    degree: int

    def is_syzygy_of(self, f: Polynomial) -> bool:
        fx, fy, fz = jacobian_partials(f)
        return (self.a * fx + self.b * fy + self.c * fz).is_zero()

    def __str__(self) -> str:
        return f"({self.a})·fx + ({self.b})·fy + ({self.c})·fz = 0"


def _vector_to_triple(vec: list[Fraction], basis: list[Monomial]) -> tuple[Polynomial, ...]:
    n = len(basis)
    polys = []
    for slot in range(3):
        terms = {}
        for i, mon in enumerate(basis):
            c = vec[slot * n + i]
            if c != 0:
                terms[mon] = Fraction(c)
        polys.append(Polynomial(terms))
    return tuple(polys)


def syzygy_basis(f: Polynomial, m: int, mode: RankMode = RATIONAL) -> list[SyzygyClass]:
    """Deterministic basis of a complement of the trivial syzygies in degree m.

    Kernel vectors of the Jacobian multiplication map are reduced against a
    column-echelon span of the trivial syzygies; each residue that enlarges
    the span yields one essential class.
    """
    if m < 0:
        return []
    N = f.degree()
    basis = monomial_basis(m)
    ncols = 3 * len(basis)
    kernel = kernel_basis(jacobian_matrix(f, m, scale_generators=False))
    fx, fy, fz = jacobian_partials(f)
    acc = EchelonAccumulator(ncols)
    idx = {mon: i for i, mon in enumerate(basis)}
    koszul_gens = [(fy, -fx, Polynomial.zero()), (fz, Polynomial.zero(), -fx),
                   (Polynomial.zero(), fz, -fy)]
    for u in monomial_basis(m - N + 1):
        for gen in koszul_gens:
            vec = [Fraction(0)] * ncols
            for slot, g in enumerate(gen):
                for mon, c in g.terms.items():
                    vec[slot * len(basis) + idx[(mon[0] + u[0], mon[1] + u[1], mon[2] + u[2])]] = c
            acc.add(vec)
    classes = []
    for vec in kernel:
        res = acc.reduce(vec)
        lead = next((i for i, v in enumerate(res) if v != 0), None)
        if lead is None:
            continue
        pv = res[lead]
        res = [v / pv for v in res]
        acc.rows.append(res)
        acc.pivots.append(lead)
        a, b, c = _vector_to_triple(res, basis)
        cls = SyzygyClass(a=a, b=b, c=c, degree=m)
        if not cls.is_syzygy_of(f):
            raise AssertionError("kernel vector is not a syzygy")
        classes.append(cls)
    expected = er_dim(f, m, mode)
    if len(classes) != expected:
        raise AssertionError(
            f"essential basis size {len(classes)} != H^2 dimension {expected}"
        )
    return classes


@dataclass(frozen=True)
class SpectralTable:
    """E_1 dimensions on the two nonzero lines p+q=2, p+q=3 and dim E_2^{2,1}."""

    entries: tuple[tuple[int, int, int], ...]
    e2_21: int

    def to_json(self) -> list[dict]:
        return [{"p": p, "q": q, "dim": d} for p, q, d in self.entries]


def spectral_table(f: Polynomial, mode: RankMode = RATIONAL) -> SpectralTable:
    """E_1^{p,q} dims at q = 0..2 plus the degenerate E_2^{2,1} dimension."""
    N = f.degree()
    entries = []
    for q in range(3):
        entries.append((2 - q, q, koszul_h_dim(f, 2, (q + 1) * N, mode)))
    for q in range(3):
        entries.append((3 - q, q, milnor_dim(f, (q + 1) * N - 3, mode)))
    e2 = milnor_dim(f, 2 * N - 3, mode) - tau(f, mode)
    return SpectralTable(entries=tuple(entries), e2_21=e2)
