"""Graded Milnor algebra dimensions, Hilbert series and thresholds.

dim M(f)_k is computed degree by degree as dim S_k minus the rank of the
multiplication map S_{k-N+1}^3 -> S_k by the partial derivatives; the rank
backend is exact rational by default, optionally modular with a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

from .gradedmaps import jacobian_matrix, s_dim
from .linalg import ExactMatrix, modular_rank_with_check, rank
from .polynomials import Polynomial


class NonStabilizationError(RuntimeError):
    """The Hilbert function failed to stabilize by degree 3N-3.

    Signals a non-reduced curve or non-isolated singularities.
    """


@dataclass(frozen=True)
class RankMode:
    """How ranks are computed: exact rational, or modular with cross-check."""

    kind: str = "rational"
    primes: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("rational", "modular"):
            raise ValueError(f"unknown rank mode {self.kind!r}")
        if self.kind == "modular" and not self.primes:
            raise ValueError("modular mode needs at least one prime")

    def rank(self, m: ExactMatrix) -> int:
        if self.kind == "modular":
            return modular_rank_with_check(m, self.primes)
        return rank(m)


RATIONAL = RankMode()


@lru_cache(maxsize=None)
def jacobian_rank(f: Polynomial, m: int, mode: RankMode = RATIONAL) -> int:
    """Rank of S_m^3 -> S_{m+N-1}, (a,b,c) -> a f_x + b f_y + c f_z."""
    if m < 0:
        return 0
    return mode.rank(jacobian_matrix(f, m))


def milnor_dim(f: Polynomial, k: int, mode: RankMode = RATIONAL) -> int:
    """dim M(f)_k for homogeneous f of degree N >= 1."""
    if k < 0:
        return 0
    N = f.degree()
    return s_dim(k) - jacobian_rank(f, k - N + 1, mode)


def smooth_reference_dim(N: int, k: int) -> int:
    """dim M(f_s)_k for a smooth degree-N curve: [t^k]((1-t^{N-1})/(1-t))^3."""
    if k < 0 or k > 3 * (N - 2):
        return 0
    total = 0
    for j in range(4):
        e = k - j * (N - 1)
        if e >= 0:
            total += (-1) ** j * comb(3, j) * comb(e + 2, 2)
    return total


@dataclass(frozen=True)
class HilbertFunction:
    """The sequence k -> dim M(f)_k with its stable value and thresholds.

    ct and mdr are None for a smooth curve (the series never leaves the
    smooth reference, so there is no finite coincidence threshold).
    """

    dims: tuple[int, ...]
    N: int
    stable_value: int
    st: int
    ct: Optional[int]
    mdr: Optional[int]

    def series_str(self) -> str:
        """Print as '1+3t+6t^2+...+tau(t^st+...)'."""
        parts = []
        for k, d in enumerate(self.dims[: self.st]):
            if d == 0:
                continue
            coef = "" if d == 1 and k > 0 else str(d)
            if k == 0:
                parts.append(str(d))
            elif k == 1:
                parts.append(f"{coef}t")
            else:
                parts.append(f"{coef}t^{k}")
        if self.stable_value != 0:
            tail = f"t^{self.st}" if self.st > 1 else ("t" if self.st == 1 else "1")
            parts.append(f"{self.stable_value}({tail}+...)")
        return "+".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "N": self.N,
            "tau": self.stable_value,
            "st": self.st,
            "ct": self.ct,
            "mdr": self.mdr,
        }


def hilbert_series(
    f: Polynomial, k_max: Optional[int] = None, mode: RankMode = RATIONAL
) -> HilbertFunction:
    """Dimensions dim M(f)_k for k = 0..k_max with tau, ct, st, mdr.

    Stabilization is asserted on the three degrees 3N-5, 3N-4, 3N-3; failure
    raises NonStabilizationError.
    """
    N = f.degree()
    if N < 3 or not f.is_homogeneous():
        raise ValueError("need a homogeneous curve of degree >= 3")
    top = 3 * N - 3
    k_report = top if k_max is None else k_max
    k_all = max(k_report, top)
    dims = [milnor_dim(f, k, mode) for k in range(k_all + 1)]
    if not (dims[top] == dims[top - 1] == dims[top - 2]):
        raise NonStabilizationError(
            f"dim M(f)_k not stable on degrees {top-2}..{top}: "
            f"{dims[top-2:top+1]}; f is likely non-reduced"
        )
    tau_val = dims[top]
    st = top
    while st > 0 and dims[st - 1] == tau_val:
        st -= 1
    ct: Optional[int] = None
    for k in range(k_all + 1):
        if dims[k] != smooth_reference_dim(N, k):
            ct = k - 1
            break
    mdr = None if ct is None else ct - N + 2
    return HilbertFunction(
        dims=tuple(dims[: k_report + 1]),
        N=N,
        stable_value=tau_val,
        st=st,
        ct=ct,
        mdr=mdr,
    )


def tau(f: Polynomial, mode: RankMode = RATIONAL) -> int:
    """Total Tjurina number: the stable value of the Hilbert function."""
    return hilbert_series(f, mode=mode).stable_value
