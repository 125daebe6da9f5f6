"""
Direct O(N^2) DFT with compensated summation.
"""

import math

import numpy as np

from apps.common.exceptions import DomainError
from apps.operators.twiddles import unit_roots

ROW_CHUNK = 64


def dft_oracle(x) -> np.ndarray:
    """y_k = sum_l omega_N^(k*l) x_l, each sum accumulated with math.fsum."""
    x = np.asarray(x, dtype=np.complex128).ravel()
    n = x.size
    if n == 0:
        raise DomainError("the DFT of an empty vector is undefined")
    roots = unit_roots(np.arange(n), n)
    columns = np.arange(n, dtype=np.int64)
    y = np.empty(n, dtype=np.complex128)
    for start in range(0, n, ROW_CHUNK):
        rows = np.arange(start, min(start + ROW_CHUNK, n), dtype=np.int64)
        terms = roots[np.outer(rows, columns) % n] * x[None, :]
        for offset, row in enumerate(terms):
            y[start + offset] = complex(math.fsum(row.real.tolist()), math.fsum(row.imag.tolist()))
    return y
