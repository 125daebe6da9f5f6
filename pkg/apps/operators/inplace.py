"""
In-place application of stage descriptors to a sample vector.

Neither function allocates anything proportional to the vector: diagonals
multiply through ``out=`` and permutations are followed cycle by cycle
from the leaders precomputed on the descriptor.
"""

import numpy as np

from apps.common.exceptions import DomainError
from apps.indexing.permutations import IndexPermutation
from apps.operators.twiddles import TwiddleDiagonal


def _check_vector(v: np.ndarray, size: int) -> None:
    if not isinstance(v, np.ndarray) or v.ndim != 1:
        raise DomainError("in-place operators need a 1-D numpy array")
    if v.size != size:
        raise DomainError(f"vector of length {v.size} does not match operator size {size}")


def apply_diagonal_inplace(v: np.ndarray, diagonal: TwiddleDiagonal) -> None:
    """v <- diag(d) v."""
    _check_vector(v, diagonal.size)
    if diagonal.is_identity:
        return
    np.multiply(v, diagonal.values, out=v)


def apply_permutation_inplace(v: np.ndarray, perm: IndexPermutation) -> None:
    """v <- S_perm v, i.e. the new v[perm(n)] is the old v[n]."""
    _check_vector(v, perm.size)
    if perm.is_identity:
        return
    image = perm.image_list
    for leader in perm.cycle_leaders:
        carry = v[leader]
        n = image[leader]
        while n != leader:
            carry, v[n] = v[n], carry
            n = image[n]
        v[leader] = carry
