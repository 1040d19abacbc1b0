"""Exact rank and kernel computations for graded linear maps.

Default mode is exact integer elimination (fraction-free, with per-row content
stripping) over Q; rational input is cleared to integers row by row, which
leaves the rank unchanged.  Modular mode reduces mod word-sized primes and is
cross-checked against the rational result on any disagreement.

Pivoting is "first nonzero in column order" throughout, for determinism.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np


class LinalgError(RuntimeError):
    """Internal inconsistency, e.g. persistent modular/rational disagreement."""


def _row_to_int(row: Sequence) -> list[int]:
    """Scale a row of rationals to coprime integers (rank-preserving)."""
    fracs = [Fraction(v) for v in row]
    lcm = 1
    for v in fracs:
        d = v.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(v * lcm) for v in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        ints = [v // g for v in ints]
    return ints


class ExactMatrix:
    """Dense matrix with integer entries (rationals are cleared on input)."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(
        self,
        rows: Iterable[Sequence],
        ncols: Optional[int] = None,
        assume_int: bool = False,
    ):
        cleaned = []
        for row in rows:
            row = list(row)
            if assume_int or all(type(v) is int for v in row):
                cleaned.append(row)
            elif any(isinstance(v, Fraction) and v.denominator != 1 for v in row):
                cleaned.append(_row_to_int(row))
            else:
                cleaned.append([int(v) for v in row])
        self.rows = cleaned
        if cleaned:
            widths = {len(r) for r in cleaned}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            self.ncols = widths.pop()
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols mismatch")
        else:
            self.ncols = 0 if ncols is None else ncols
        self.nrows = len(cleaned)

    @staticmethod
    def from_columns(
        columns: Sequence[Sequence], nrows: int, assume_int: bool = False
    ) -> "ExactMatrix":
        rows = [[col[i] for col in columns] for i in range(nrows)]
        return ExactMatrix(rows, ncols=len(columns), assume_int=assume_int)

    def transpose(self) -> "ExactMatrix":
        rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return ExactMatrix(rows, ncols=self.nrows)

    def rank(self) -> int:
        return rank(self)

    def kernel_dim(self) -> int:
        return kernel_dim(self)


def _strip_content(arr: np.ndarray) -> np.ndarray:
    g = 0
    for v in arr:
        if v:
            g = gcd(g, v)
            if g == 1:
                return arr
    if g > 1:
        return arr // g
    return arr


def _rank_integer(rows: list[list[int]], ncols: int) -> int:
    """Fraction-free elimination with content stripping; exact over Q.

    The pivot in each column is the remaining row with the smallest nonzero
    absolute value (ties broken by row order): deterministic, and it keeps
    coefficient growth far below what first-nonzero pivoting produces.
    """
    work = [np.array(r, dtype=object) for r in rows if any(r)]
    nrows = len(work)
    rank = 0
    for col in range(ncols):
        piv_idx = None
        piv_abs = None
        for i in range(rank, nrows):
            v = work[i][col]
            if v:
                a = -v if v < 0 else v
                if piv_abs is None or a < piv_abs:
                    piv_idx, piv_abs = i, a
                    if a == 1:
                        break
        if piv_idx is None:
            continue
        work[rank], work[piv_idx] = work[piv_idx], work[rank]
        piv = work[rank]
        pv = piv[col]
        for i in range(rank + 1, nrows):
            rv = work[i][col]
            if rv:
                work[i] = _strip_content(work[i] * pv - piv * rv)
        rank += 1
        if rank == min(nrows, ncols):
            break
    return rank


def rank(m: ExactMatrix) -> int:
    """Exact rank over Q."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return _rank_integer(m.rows, m.ncols)


def kernel_dim(m: ExactMatrix) -> int:
    return m.ncols - rank(m)


_FLOAT_SAFE = float(1 << 52)


def _rank_mod_p_float(rows: list[list[int]], ncols: int, p: int) -> int:
    """GF(p) rank for small p (< 2^21) via float64 with lazy reduction.

    Products stay below 2^42 so many outer-product updates can accumulate
    exactly in float64 before a single fmod sweep; this is the fast path the
    property suites lean on.
    """
    mat = np.array([[v % p for v in row] for row in rows], dtype=np.float64)
    nrows = mat.shape[0]
    r = 0
    slack = float(p) * p
    budget = _FLOAT_SAFE
    for col in range(ncols):
        if r == nrows:
            break
        colv = np.fmod(mat[r:, col], p)
        mat[r:, col] = colv
        nz = np.nonzero(colv)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        mat[r, col:] = np.fmod(mat[r, col:], p)
        inv = pow(int(mat[r, col]) % p, -1, p)
        mat[r, col:] = np.fmod(mat[r, col:] * inv, p)
        below = mat[r + 1 :, col]
        sel = np.nonzero(below)[0]
        if sel.size:
            mat[r + 1 + sel, col:] -= np.outer(below[sel], mat[r, col:])
        r += 1
        budget -= slack
        if budget < slack:
            mat[r:, col:] = np.fmod(mat[r:, col:], p)
            budget = _FLOAT_SAFE
    return r


def _rank_mod_p(rows: list[list[int]], ncols: int, p: int) -> int:
    """Row reduction over GF(p); p must fit products in int64 (p < 2^31)."""
    if p >= 1 << 31:
        raise ValueError("prime too large for the int64 kernel")
    if p < 1 << 21:
        return _rank_mod_p_float(rows, ncols, p)
    mat = np.array([[v % p for v in row] for row in rows], dtype=np.int64)
    nrows = mat.shape[0]
    r = 0
    for col in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(mat[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        inv = pow(int(mat[r, col]), -1, p)
        mat[r, col:] = (mat[r, col:] * inv) % p
        below = mat[r + 1 :, col]
        sel = np.nonzero(below)[0]
        if sel.size:
            mat[r + 1 + sel, col:] = (
                mat[r + 1 + sel, col:] - np.outer(below[sel], mat[r, col:])
            ) % p
        r += 1
    return r


def modular_rank_with_check(m: ExactMatrix, primes: Sequence[int]) -> int:
    """Rank computed mod each prime, reconciled against the rational rank.

    A prime where the rank drops is unlucky; on disagreement between primes
    the rational rank is recomputed and must confirm the maximum.
    """
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    if any(p <= (1 << 20) for p in primes):
        raise ValueError("primes must exceed 2^20")
    if m.nrows == 0 or m.ncols == 0:
        return 0
    ranks = [_rank_mod_p(m.rows, m.ncols, p) for p in primes]
    best = max(ranks)
    if all(r == best for r in ranks):
        return best
    exact = rank(m)
    if exact == best:
        return best
    raise LinalgError(
        f"modular ranks {ranks} disagree and rational rank {exact} does not "
        f"confirm the maximum"
    )


def rref_fraction(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rref rows, pivot columns)."""
    work = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv_idx = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                piv_idx = i
                break
        if piv_idx is None:
            continue
        work[r], work[piv_idx] = work[piv_idx], work[r]
        pv = work[r][col]
        work[r] = [v / pv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                c = work[i][col]
                work[i] = [a - c * b for a, b in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
    return work[:r], pivots


def kernel_basis(m: ExactMatrix) -> list[list[Fraction]]:
    """Exact basis of the right kernel, one vector per free column.

    Deterministic: free columns in increasing order, each basis vector has a 1
    in its free coordinate.
    """
    if m.ncols == 0:
        return []
    if m.nrows == 0:
        basis = []
        for j in range(m.ncols):
            v = [Fraction(0)] * m.ncols
            v[j] = Fraction(1)
            basis.append(v)
        return basis
    rref, pivots = rref_fraction([[Fraction(v) for v in row] for row in m.rows], m.ncols)
    pivot_set = set(pivots)
    basis = []
    for j in range(m.ncols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * m.ncols
        v[j] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][j]
        basis.append(v)
    return basis


class EchelonAccumulator:
    """Incremental row-space accumulator over Q, for quotient-space work.

    Feeds vectors one at a time; `reduce` returns the residue of a vector
    modulo the current span, `add` inserts the residue if nonzero.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for row, pc in zip(self.rows, self.pivots):
            if v[pc] != 0:
                c = v[pc]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert vec's residue; True if it enlarged the span."""
        v = self.reduce(vec)
        for col in range(self.ncols):
            if v[col] != 0:
                pv = v[col]
                v = [a / pv for a in v]
                self.rows.append(v)
                self.pivots.append(col)
                return True
        return False

    @property
    def dim(self) -> int:
        return len(self.rows)
