"""
Index permutations of 0..N-1 and the permutation operators of the
factorization: stride permutations L^n_k, digit reversal P_alpha and the
stage transpositions A_k (DIT) and B_k (DIF).

A permutation P acts on basis vectors as S e_n = e_{P(n)}; applied to a
vector x it yields y with y[P(n)] = x[n].
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Tuple

import numpy as np

from apps.common.exceptions import DomainError
from apps.indexing.numbering import RadixLike, as_radix_tuple


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array, dtype=np.int64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class IndexPermutation:
    """A bijection of 0..N-1 materialized as its forward image array."""

    forward: np.ndarray = field(repr=False)

    def __post_init__(self):
        forward = _frozen(self.forward)
        if forward.ndim != 1 or forward.size == 0:
            raise DomainError("a permutation needs a non-empty 1-D image array")
        if not np.array_equal(np.sort(forward), np.arange(forward.size)):
            raise DomainError("image array is not a permutation of 0..N-1")
        object.__setattr__(self, "forward", forward)

    @classmethod
    def identity(cls, size: int) -> "IndexPermutation":
        if size < 1:
            raise DomainError(f"permutation size must be >= 1, got {size}")
        return cls(np.arange(size))

    @property
    def size(self) -> int:
        return int(self.forward.size)

    def __len__(self) -> int:
        return self.size

    def __call__(self, n: int) -> int:
        if not 0 <= n < self.size:
            raise DomainError(f"index {n} outside 0..{self.size - 1}")
        return int(self.forward[n])

    def __eq__(self, other) -> bool:
        if not isinstance(other, IndexPermutation):
            return NotImplemented
        return np.array_equal(self.forward, other.forward)

    def __hash__(self) -> int:
        return hash(self.forward.tobytes())

    def __repr__(self) -> str:
        preview = self.forward[:8].tolist()
        suffix = ", ..." if self.size > 8 else ""
        return f"IndexPermutation(size={self.size}, forward={preview}{suffix})"

    def tolist(self):
        return self.forward.tolist()

    def inverse(self) -> "IndexPermutation":
        inverse = np.empty_like(self.forward)
        inverse[self.forward] = np.arange(self.size)
        return IndexPermutation(inverse)

    def compose(self, other: "IndexPermutation") -> "IndexPermutation":
        """Matrix product S_self . S_other: ``other`` acts first."""
        if other.size != self.size:
            raise DomainError(f"cannot compose sizes {self.size} and {other.size}")
        return IndexPermutation(self.forward[other.forward])

    def kron_identity(self, copies: int) -> "IndexPermutation":
        """I_copies (x) S_self: the permutation repeated on consecutive blocks."""
        if copies < 1:
            raise DomainError(f"copies must be >= 1, got {copies}")
        offsets = np.arange(copies, dtype=np.int64)[:, None] * self.size
        return IndexPermutation((offsets + self.forward[None, :]).ravel())

    @cached_property
    def is_identity(self) -> bool:
        return bool(np.array_equal(self.forward, np.arange(self.size)))

    @cached_property
    def image_list(self) -> Tuple[int, ...]:
        """Forward map as plain ints, for element-wise traversal."""
        return tuple(self.forward.tolist())

    @cached_property
    def cycle_leaders(self) -> Tuple[int, ...]:
        """Smallest element of every non-trivial cycle."""
        seen = np.zeros(self.size, dtype=bool)
        leaders = []
        image = self.image_list
        for start in range(self.size):
            if seen[start]:
                continue
            seen[start] = True
            n = image[start]
            if n == start:
                continue
            leaders.append(start)
            while n != start:
                seen[n] = True
                n = image[n]
        return tuple(leaders)

    def prepare_inplace(self) -> "IndexPermutation":
        """Precompute everything in-place application needs."""
        _ = self.is_identity, self.image_list, self.cycle_leaders
        return self


def stride_perm(n: int, k: int) -> IndexPermutation:
    """L^n_k: i*m + j -> j*k + i for 0 <= i < k, 0 <= j < m = n/k."""
    if n < 1 or k < 1 or n % k:
        raise DomainError(f"stride {k} does not divide size {n}")
    m = n // k
    i, j = np.divmod(np.arange(n, dtype=np.int64), m)
    return IndexPermutation(j * k + i)


def digit_reverse_perm(alpha: RadixLike) -> IndexPermutation:
    """P_alpha n = ((n_{alpha*})*)^alpha."""
    alpha = as_radix_tuple(alpha)
    indices = np.arange(alpha.size, dtype=np.int64)
    # digits of every index in alpha*, in written order (p_0, ..., p_K)
    digits = np.unravel_index(indices, alpha.star().radices)
    return IndexPermutation(np.ravel_multi_index(tuple(reversed(digits)), alpha.radices))


def stage_perm_A(alpha: RadixLike, k: int) -> IndexPermutation:
    """A_k = I_{N/N_k} (x) L^{N_k}_{n_k}."""
    alpha = as_radix_tuple(alpha)
    alpha.check_stage(k)
    block = alpha.prefix_size(k)
    return stride_perm(block, alpha.radix(k)).kron_identity(alpha.size // block)


def stage_perm_B(beta: RadixLike, k: int) -> IndexPermutation:
    """B_k = I_{N/M_k} (x) L^{M_k}_{m_k}."""
    beta = as_radix_tuple(beta)
    beta.check_stage(k)
    block = beta.suffix_size(k)
    return stride_perm(block, beta.radix(k)).kron_identity(beta.size // block)
