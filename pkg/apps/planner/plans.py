"""
Compiled FFT plans.

A plan is an immutable list of stages in application order plus the
digit-reversal permutation that sits on the input side (DIT) or the output
side (DIF, DIF_W). Stage k applies

    post_perm . [twiddle] . (I (x) F_r) . [twiddle] . pre_perm

with the twiddle on the side given by ``twiddle_position``.
"""

from dataclasses import dataclass
from typing import Tuple

from django.db import models

from apps.common.exceptions import DomainError
from apps.indexing.numbering import RadixTuple
from apps.indexing.permutations import IndexPermutation
from apps.operators.twiddles import TwiddleDiagonal


class PlanKind(models.TextChoices):
    DIT = "dit", "Decimation in time"
    DIF = "dif", "Decimation in frequency"
    DIF_W = "difw", "Decimation in frequency, twiddle before butterfly"


class TwiddlePosition(models.TextChoices):
    BEFORE_BUTTERFLY = "before_butterfly", "Before butterfly"
    AFTER_BUTTERFLY = "after_butterfly", "After butterfly"


class IOPosition(models.TextChoices):
    INPUT_SIDE = "input_side", "Input side"
    OUTPUT_SIDE = "output_side", "Output side"


class FactorizationPolicy(models.TextChoices):
    GREEDY_ASC_PRIMES = "greedy_asc_primes", "Prime factors, smallest first"
    USER = "user", "User supplied radices"


@dataclass(frozen=True)
class StagePlan:
    stage_index: int
    radix: int
    pre_perm: IndexPermutation
    post_perm: IndexPermutation
    twiddle: TwiddleDiagonal
    twiddle_position: TwiddlePosition

    def __post_init__(self):
        size = self.pre_perm.size
        if self.radix < 1 or size % self.radix:
            raise DomainError(f"radix {self.radix} does not divide stage size {size}")
        if self.post_perm.size != size or self.twiddle.size != size:
            raise DomainError("stage operators disagree on size")
        if not self.post_perm.compose(self.pre_perm).is_identity:
            raise DomainError(f"stage {self.stage_index}: post_perm is not the inverse of pre_perm")

    @property
    def size(self) -> int:
        return self.pre_perm.size

    @property
    def butterfly_count(self) -> int:
        return self.size // self.radix

    @property
    def is_trivial(self) -> bool:
        """Radix 1 with identity operators: the stage does nothing."""
        return self.radix == 1 and self.pre_perm.is_identity and self.twiddle.is_identity

    def prepare_inplace(self) -> "StagePlan":
        self.pre_perm.prepare_inplace()
        self.post_perm.prepare_inplace()
        self.twiddle.prepare_inplace()
        return self


@dataclass(frozen=True)
class FftPlan:
    n: int
    kind: PlanKind
    radices: RadixTuple
    stages: Tuple[StagePlan, ...]
    io_perm: IndexPermutation
    io_perm_position: IOPosition

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if not self.stages:
            raise DomainError("a plan needs at least one stage")
        if self.radices.size != self.n or self.io_perm.size != self.n:
            raise DomainError(f"plan components disagree with N={self.n}")
        product = 1
        for stage in self.stages:
            if stage.size != self.n:
                raise DomainError(f"stage {stage.stage_index} has size {stage.size}, expected {self.n}")
            product *= stage.radix
        if product != self.n:
            raise DomainError(f"stage radices multiply to {product}, expected {self.n}")
        expected_position = IOPosition.INPUT_SIDE if self.kind == PlanKind.DIT else IOPosition.OUTPUT_SIDE
        if self.io_perm_position != expected_position:
            raise DomainError(f"{self.kind.label} plans keep io_perm on the {expected_position.label.lower()}")
        expected_twiddle = (
            TwiddlePosition.AFTER_BUTTERFLY if self.kind == PlanKind.DIF else TwiddlePosition.BEFORE_BUTTERFLY
        )
        for stage in self.stages:
            if stage.twiddle_position != expected_twiddle:
                raise DomainError(f"stage {stage.stage_index} twiddle position does not fit a {self.kind} plan")

    @property
    def max_radix(self) -> int:
        return max(stage.radix for stage in self.stages)

    def __str__(self) -> str:
        return f"{self.kind.value} plan N={self.n} radices={self.radices} stages={len(self.stages)}"
