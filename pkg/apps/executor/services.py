"""
In-place plan execution.

Beyond the caller's buffer and the plan itself, a transform only touches
scratch for one batch of butterflies (FFT_BUTTERFLY_BATCH rows of r
samples); permutations are followed cycle by cycle.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from django.conf import settings

from apps.common.exceptions import DomainError
from apps.common.metrics import RADIXFFT_TRANSFORM_DURATION_SECONDS, RADIXFFT_TRANSFORMS_TOTAL
from apps.executor.kernels import apply_butterflies
from apps.operators.inplace import apply_diagonal_inplace, apply_permutation_inplace
from apps.planner.plans import FftPlan, IOPosition, PlanKind, StagePlan, TwiddlePosition
from apps.planner.services import build_plan

logger = logging.getLogger(__name__)


@dataclass
class SampleBuffer:
    """A contiguous complex128 vector transformed in place."""

    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        data = self.data
        if not isinstance(data, np.ndarray) or data.dtype != np.complex128 or data.ndim != 1:
            raise DomainError("sample buffers hold 1-D complex128 arrays; use SampleBuffer.from_values")
        if not data.flags.c_contiguous or not data.flags.writeable:
            raise DomainError("sample buffer must be contiguous and writeable")

    @classmethod
    def from_values(cls, values) -> "SampleBuffer":
        data = np.array(values, dtype=np.complex128).ravel()
        if data.size == 0:
            raise DomainError("sample buffer must not be empty")
        return cls(data)

    @classmethod
    def random(cls, n: int, seed: Optional[int] = None) -> "SampleBuffer":
        """Standard complex normal samples, reproducible from ``seed``."""
        if n < 1:
            raise DomainError(f"buffer length must be >= 1, got {n}")
        if seed is None:
            seed = getattr(settings, "FFT_DEFAULT_SEED", 20240607)
        rng = np.random.default_rng(seed)
        return cls(rng.standard_normal(n) + 1j * rng.standard_normal(n))

    def __len__(self) -> int:
        return int(self.data.size)

    def copy(self) -> "SampleBuffer":
        return SampleBuffer(self.data.copy())


def _batch_size() -> int:
    return max(1, int(getattr(settings, "FFT_BUTTERFLY_BATCH", 64)))


def execute_stage(stage: StagePlan, buf: SampleBuffer) -> None:
    """pre_perm, [twiddle], butterflies, [twiddle], post_perm."""
    v = buf.data
    if v.size != stage.size:
        raise DomainError(f"buffer of length {v.size} does not match stage size {stage.size}")
    apply_permutation_inplace(v, stage.pre_perm)
    if stage.twiddle_position == TwiddlePosition.BEFORE_BUTTERFLY:
        apply_diagonal_inplace(v, stage.twiddle)
    apply_butterflies(v, stage.radix, _batch_size())
    if stage.twiddle_position == TwiddlePosition.AFTER_BUTTERFLY:
        apply_diagonal_inplace(v, stage.twiddle)
    apply_permutation_inplace(v, stage.post_perm)


def execute(plan: FftPlan, buf: SampleBuffer) -> None:
    """
    Overwrite ``buf`` with F_N applied to its contents.

    Raises:
        DomainError: the buffer length differs from plan.n.
    """
    if len(buf) != plan.n:
        raise DomainError(f"buffer of length {len(buf)} does not match plan N={plan.n}")
    started = time.perf_counter()
    if plan.io_perm_position == IOPosition.INPUT_SIDE:
        apply_permutation_inplace(buf.data, plan.io_perm)
    for stage in plan.stages:
        execute_stage(stage, buf)
    if plan.io_perm_position == IOPosition.OUTPUT_SIDE:
        apply_permutation_inplace(buf.data, plan.io_perm)
    elapsed = time.perf_counter() - started
    RADIXFFT_TRANSFORMS_TOTAL.labels(kind=plan.kind.value).inc()
    RADIXFFT_TRANSFORM_DURATION_SECONDS.labels(kind=plan.kind.value).observe(elapsed)
    logger.debug(f"Executed {plan} in {elapsed * 1e3:.3f} ms")


def transform(
    values,
    kind: Union[PlanKind, str] = PlanKind.DIT,
    radices: Optional[Sequence[int]] = None,
) -> np.ndarray:
    """F_N . values as a new array, planning on the fly."""
    buf = SampleBuffer.from_values(values)
    execute(build_plan(len(buf), kind, radices), buf)
    return buf.data


def relative_linf_error(actual, expected) -> float:
    """max |actual - expected| / max |expected| (absolute when expected is zero)."""
    actual = np.asarray(actual, dtype=np.complex128)
    expected = np.asarray(expected, dtype=np.complex128)
    if actual.shape != expected.shape:
        raise DomainError(f"cannot compare shapes {actual.shape} and {expected.shape}")
    error = float(np.max(np.abs(actual - expected)))
    scale = float(np.max(np.abs(expected)))
    return error / scale if scale > 0 else error
