"""
Roots of unity and twiddle diagonals.

Every diagonal stores integer exponents over one common denominator d, the
entry being omega_d^e = exp(-2*pi*i*e/d). Values are computed directly from
the exponent reduced mod d; quarter turns are exact.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Tuple

import numpy as np

from apps.common.exceptions import DomainError
from apps.indexing.numbering import RadixLike, as_radix_tuple

_QUARTER_TURNS = np.array([1.0 + 0.0j, -1.0j, -1.0 + 0.0j, 1.0j])


def unit_roots(exponents, denominator: int) -> np.ndarray:
    """omega_denominator ** exponents, element-wise."""
    if denominator < 1:
        raise DomainError(f"root order must be >= 1, got {denominator}")
    reduced = np.mod(np.asarray(exponents, dtype=np.int64), denominator)
    values = np.exp(-2j * np.pi * reduced / denominator)
    quarter = (4 * reduced) % denominator == 0
    if np.any(quarter):
        values[quarter] = _QUARTER_TURNS[(4 * reduced[quarter]) // denominator]
    return values


def omega(n: int) -> complex:
    """omega_n = exp(-2*pi*i/n)."""
    if n < 1:
        raise DomainError(f"root order must be >= 1, got {n}")
    return complex(unit_roots(np.array([1]), n)[0])


@dataclass(frozen=True, eq=False)
class TwiddleDiagonal:
    """Diagonal with entries omega_denominator ** exponents[i]."""

    exponents: np.ndarray = field(repr=False)
    denominator: int = 1

    def __post_init__(self):
        if self.denominator < 1:
            raise DomainError(f"denominator must be >= 1, got {self.denominator}")
        exponents = np.mod(np.asarray(self.exponents, dtype=np.int64), self.denominator)
        if exponents.ndim != 1 or exponents.size == 0:
            raise DomainError("a diagonal needs a non-empty 1-D exponent array")
        exponents = np.ascontiguousarray(exponents)
        exponents.setflags(write=False)
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def identity(cls, size: int) -> "TwiddleDiagonal":
        if size < 1:
            raise DomainError(f"diagonal size must be >= 1, got {size}")
        return cls(np.zeros(size, dtype=np.int64), 1)

    @property
    def size(self) -> int:
        return int(self.exponents.size)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"TwiddleDiagonal(size={self.size}, denominator={self.denominator})"

    @cached_property
    def values(self) -> np.ndarray:
        values = unit_roots(self.exponents, self.denominator)
        values.setflags(write=False)
        return values

    @cached_property
    def is_identity(self) -> bool:
        return not np.any(self.exponents)

    def pairs(self) -> List[Tuple[int, int]]:
        """(numerator, denominator) per entry, exact."""
        return [(e, self.denominator) for e in self.exponents.tolist()]

    def kron_identity(self, copies: int) -> "TwiddleDiagonal":
        """I_copies (x) self."""
        if copies < 1:
            raise DomainError(f"copies must be >= 1, got {copies}")
        return TwiddleDiagonal(np.tile(self.exponents, copies), self.denominator)

    def equivalent(self, other: "TwiddleDiagonal") -> bool:
        """Exact equality of the represented diagonals."""
        if self.size != other.size:
            return False
        d1, d2 = self.denominator, other.denominator
        lhs = self.exponents * d2 - other.exponents * d1
        return bool(np.all(np.mod(lhs, d1 * d2) == 0))

    def prepare_inplace(self) -> "TwiddleDiagonal":
        _ = self.values, self.is_identity
        return self


def twiddle_W(n: int, m: int) -> TwiddleDiagonal:
    """W^n_m: entry at i*m + j is omega_n^(i*j), 0 <= i < n/m, 0 <= j < m."""
    if n < 1 or m < 1 or n % m:
        raise DomainError(f"{m} does not divide {n}")
    i, j = np.divmod(np.arange(n, dtype=np.int64), m)
    return TwiddleDiagonal(i * j, n)


def twiddle_V(k: int, m: int, n: int) -> TwiddleDiagonal:
    """
    V_{k,m,n}: entry at (i*m + j)*n + l is omega_{kmn}^(i*(l*m + j)),
    for 0 <= i < k, 0 <= j < m, 0 <= l < n.
    """
    if min(k, m, n) < 1:
        raise DomainError(f"V sizes must be >= 1, got ({k}, {m}, {n})")
    total = k * m * n
    index = np.arange(total, dtype=np.int64)
    i = index // (m * n)
    j = (index // n) % m
    l = index % n
    return TwiddleDiagonal(i * (l * m + j), total)


def stage_twiddle_dit(alpha: RadixLike, k: int) -> TwiddleDiagonal:
    """W^_k = I_{N/N_k} (x) W^{N_k}_{n_k}."""
    alpha = as_radix_tuple(alpha)
    alpha.check_stage(k)
    block = alpha.prefix_size(k)
    return twiddle_W(block, alpha.radix(k)).kron_identity(alpha.size // block)


def stage_twiddle_dif(beta: RadixLike, k: int) -> TwiddleDiagonal:
    """W~_k = I_{N/M_k} (x) W^{M_k}_{m_k}."""
    beta = as_radix_tuple(beta)
    beta.check_stage(k)
    block = beta.suffix_size(k)
    return twiddle_W(block, beta.radix(k)).kron_identity(beta.size // block)


def stage_twiddle_difw(beta: RadixLike, k: int) -> TwiddleDiagonal:
    """
    X~_k = I_{N/M_k} (x) V_{m_k, M_{k+2}, m_{k+1}}, with m_{K+1} = M_{K+1} =
    M_{K+2} = 1.

    This is the diagonal with B_{k+1} B_k^{-1} W~_k = X~_k B_{k+1} B_k^{-1};
    it multiplies the operands of the stage-(k+1) butterflies.
    """
    beta = as_radix_tuple(beta)
    beta.check_stage(k)
    tile = twiddle_V(beta.radix(k), beta.suffix_size(k + 2), beta.radix(k + 1))
    if tile.size != beta.suffix_size(k):
        raise DomainError(f"twiddle tile of size {tile.size} does not span stage {k} of {beta}")
    return tile.kron_identity(beta.size // tile.size)


def max_modulus_defect(diagonal: TwiddleDiagonal) -> float:
    """max | |d_i| - 1 |."""
    return float(np.max(np.abs(np.abs(diagonal.values) - 1.0)))


def conjugate_by_permutation(diagonal: TwiddleDiagonal, perm) -> TwiddleDiagonal:
    """S_perm diag(d) S_perm^-1: entry d[n] moves to position perm(n)."""
    if perm.size != diagonal.size:
        raise DomainError(f"permutation of size {perm.size} on diagonal of size {diagonal.size}")
    exponents = np.empty_like(diagonal.exponents)
    exponents[perm.forward] = diagonal.exponents
    return TwiddleDiagonal(exponents, diagonal.denominator)
