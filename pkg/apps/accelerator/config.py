"""
Accelerator configuration.
"""

from dataclasses import dataclass

from django.db import models

from apps.common.exceptions import ConfigError


class MemoryKind(models.TextChoices):
    RAM_1R1W = "ram_1r1w", "One read port and one write port per bank"


@dataclass(frozen=True)
class AccelConfig:
    """
    R banks feeding one radix-R processing unit with ``pipeline_depth``
    clocks of latency. With ``overlap`` the reads of one butterfly and the
    writes of an earlier one share a clock; without it every issue takes two.
    """

    radix: int
    pipeline_depth: int = 0
    memory_kind: MemoryKind = MemoryKind.RAM_1R1W
    overlap: bool = True

    def __post_init__(self):
        if self.radix < 2:
            raise ConfigError(f"accelerator radix must be >= 2, got {self.radix}")
        if self.pipeline_depth < 0:
            raise ConfigError(f"pipeline depth must be >= 0, got {self.pipeline_depth}")
        object.__setattr__(self, "memory_kind", MemoryKind(self.memory_kind))

    @property
    def issue_clocks(self) -> int:
        return 1 if self.overlap else 2


def pure_radix_exponent(n: int, radix: int) -> int:
    """q with n == radix**q, q >= 1."""
    if radix < 2:
        raise ConfigError(f"radix must be >= 2, got {radix}")
    q, rest = 0, n
    while rest > 1 and rest % radix == 0:
        rest //= radix
        q += 1
    if rest != 1 or q == 0:
        raise ConfigError(f"N={n} is not a positive power of R={radix}")
    return q
