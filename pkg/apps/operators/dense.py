"""
Dense complex matrices for oracle checks.

Nothing on the execution path builds one of these; they realize the
factorization operators entry by entry so identities can be compared.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from apps.common.exceptions import DomainError
from apps.indexing.permutations import IndexPermutation
from apps.operators.twiddles import TwiddleDiagonal, unit_roots


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Row-major complex matrix with finite entries."""

    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.ndim != 2 or 0 in entries.shape:
            raise DomainError(f"a dense matrix needs a non-empty 2-D array, got {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise DomainError("dense matrix has non-finite entries")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def rows(self) -> int:
        return int(self.entries.shape[0])

    @property
    def cols(self) -> int:
        return int(self.entries.shape[1])

    @property
    def shape(self):
        return self.entries.shape

    def __repr__(self) -> str:
        return f"DenseMatrix({self.rows}x{self.cols})"

    def __matmul__(self, other):
        if isinstance(other, DenseMatrix):
            return matmul(self, other)
        return matvec(self, other)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(self.entries.T)

    def conj(self) -> "DenseMatrix":
        return DenseMatrix(self.entries.conj())

    def max_abs_diff(self, other: "DenseMatrix") -> float:
        if self.shape != other.shape:
            raise DomainError(f"cannot compare {self.shape} with {other.shape}")
        return float(np.max(np.abs(self.entries - other.entries)))

    def allclose(self, other: "DenseMatrix", atol: float) -> bool:
        return self.max_abs_diff(other) <= atol

    def permute_rows(self, perm: IndexPermutation) -> "DenseMatrix":
        """S_perm . self, without forming S_perm."""
        if perm.size != self.rows:
            raise DomainError(f"permutation of size {perm.size} on {self.rows} rows")
        out = np.empty_like(self.entries)
        out[perm.forward] = self.entries
        return DenseMatrix(out)

    def scale_rows(self, diagonal: TwiddleDiagonal) -> "DenseMatrix":
        """diag(d) . self."""
        if diagonal.size != self.rows:
            raise DomainError(f"diagonal of size {diagonal.size} on {self.rows} rows")
        return DenseMatrix(diagonal.values[:, None] * self.entries)

    def blockwise(self, block: "DenseMatrix") -> "DenseMatrix":
        """(I (x) block) . self, for a square block dividing the row count."""
        r = block.rows
        if block.cols != r or self.rows % r:
            raise DomainError(f"block {block.shape} does not tile {self.rows} rows")
        stacked = self.entries.reshape(self.rows // r, r, self.cols)
        return DenseMatrix(np.matmul(block.entries, stacked).reshape(self.shape))


def identity_matrix(n: int) -> DenseMatrix:
    if n < 1:
        raise DomainError(f"matrix size must be >= 1, got {n}")
    return DenseMatrix(np.eye(n, dtype=np.complex128))


@lru_cache(maxsize=64)
def dft_matrix(n: int) -> DenseMatrix:
    """F_n = [omega_n^(k*l)]."""
    if n < 1:
        raise DomainError(f"DFT size must be >= 1, got {n}")
    index = np.arange(n, dtype=np.int64)
    exponents = np.outer(index, index) % n
    roots = unit_roots(np.arange(n), n)
    return DenseMatrix(roots[exponents])


def dense_of_permutation(perm: IndexPermutation) -> DenseMatrix:
    """0/1 matrix with column n holding its single 1 in row forward(n)."""
    entries = np.zeros((perm.size, perm.size), dtype=np.complex128)
    entries[perm.forward, np.arange(perm.size)] = 1.0
    return DenseMatrix(entries)


def dense_of_diagonal(diagonal: TwiddleDiagonal) -> DenseMatrix:
    return DenseMatrix(np.diag(diagonal.values))


def kron(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    return DenseMatrix(np.kron(a.entries, b.entries))


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.cols != b.rows:
        raise DomainError(f"cannot multiply {a.shape} by {b.shape}")
    return DenseMatrix(a.entries @ b.entries)


def matmul_all(factors: Sequence[DenseMatrix]) -> DenseMatrix:
    """Left-to-right product factors[0] . factors[1] . ..."""
    if not factors:
        raise DomainError("nothing to multiply")
    result = factors[0]
    for factor in factors[1:]:
        result = matmul(result, factor)
    return result


def matvec(a: DenseMatrix, v) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1 or v.size != a.cols:
        raise DomainError(f"cannot apply {a.shape} matrix to vector of shape {v.shape}")
    return a.entries @ v
