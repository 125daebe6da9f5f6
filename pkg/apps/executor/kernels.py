"""
Radix-r butterflies.

A batch is a (b, r) view into the sample buffer whose rows are independent
butterflies; kernels overwrite it with F_r applied to every row. Radices 2,
3 and 4 have hand-written kernels, everything else multiplies by F_r.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from apps.common.exceptions import DomainError
from apps.operators.dense import DenseMatrix, dft_matrix

_HALF_SQRT3 = math.sqrt(3.0) / 2.0


def _radix2(batch: np.ndarray) -> None:
    odd = batch[:, 1].copy()
    np.subtract(batch[:, 0], odd, out=batch[:, 1])
    batch[:, 0] += odd


def _radix3(batch: np.ndarray) -> None:
    x0 = batch[:, 0].copy()
    total = batch[:, 1] + batch[:, 2]
    # -i*sqrt(3)/2 * (x1 - x2)
    rotated = (batch[:, 1] - batch[:, 2]) * (-1j * _HALF_SQRT3)
    batch[:, 0] += total
    np.multiply(total, -0.5, out=total)
    total += x0
    np.add(total, rotated, out=batch[:, 1])
    np.subtract(total, rotated, out=batch[:, 2])


def _radix4(batch: np.ndarray) -> None:
    s02 = batch[:, 0] + batch[:, 2]
    d02 = batch[:, 0] - batch[:, 2]
    s13 = batch[:, 1] + batch[:, 3]
    # -i * (x1 - x3)
    d13 = (batch[:, 1] - batch[:, 3]) * -1j
    np.add(s02, s13, out=batch[:, 0])
    np.add(d02, d13, out=batch[:, 1])
    np.subtract(s02, s13, out=batch[:, 2])
    np.subtract(d02, d13, out=batch[:, 3])


_SPECIALIZED = {2: _radix2, 3: _radix3, 4: _radix4}


@dataclass(frozen=True)
class ButterflyKernel:
    radix: int
    matrix: DenseMatrix = field(repr=False)

    def __post_init__(self):
        if self.matrix.shape != (self.radix, self.radix):
            raise DomainError(f"kernel matrix {self.matrix.shape} does not fit radix {self.radix}")

    @property
    def specialized(self) -> bool:
        return self.radix in _SPECIALIZED

    def apply_batch(self, batch: np.ndarray) -> None:
        """Overwrite every row of ``batch`` with F_r . row."""
        if batch.ndim != 2 or batch.shape[1] != self.radix:
            raise DomainError(f"batch of shape {batch.shape} does not fit radix {self.radix}")
        if self.radix == 1:
            return
        kernel = _SPECIALIZED.get(self.radix)
        if kernel is not None:
            kernel(batch)
            return
        # F_r is symmetric, so row . F_r == F_r . row
        batch[:] = batch @ self.matrix.entries


@lru_cache(maxsize=None)
def get_kernel(radix: int) -> ButterflyKernel:
    if radix < 1:
        raise DomainError(f"radix must be >= 1, got {radix}")
    return ButterflyKernel(radix, dft_matrix(radix))


def butterfly_apply(kernel: ButterflyKernel, block) -> np.ndarray:
    """F_r . block for a single butterfly; returns a new array."""
    block = np.array(block, dtype=np.complex128)
    if block.shape != (kernel.radix,):
        raise DomainError(f"block of length {block.size} does not fit radix {kernel.radix}")
    batch = block.reshape(1, kernel.radix)
    kernel.apply_batch(batch)
    return block


def apply_butterflies(v: np.ndarray, radix: int, batch_size: int) -> None:
    """I_{N/r} (x) F_r applied in place, ``batch_size`` butterflies at a time."""
    if v.size % radix:
        raise DomainError(f"radix {radix} does not divide length {v.size}")
    if radix == 1:
        return
    kernel = get_kernel(radix)
    blocks = v.reshape(-1, radix)
    for start in range(0, blocks.shape[0], batch_size):
        kernel.apply_batch(blocks[start : start + batch_size])
