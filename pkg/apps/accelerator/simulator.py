"""
Clocked model of a memory-based radix-R FFT accelerator.

Every stage issues N/R butterflies, one per clock. Butterfly b of stage k
reads the R words whose stage-local positions form the b-th consecutive
block after pre_perm, i.e. post_perm(b*R + w), and writes its results back
to the same words. An issue whose R reads (or writes) do not hit R distinct
banks is a conflict and costs one stall clock. The digit-reversal io_perm
is the load/store order of the sample stream and is not scheduled.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import numpy as np

from apps.accelerator.config import AccelConfig, pure_radix_exponent
from apps.accelerator.mappings import BankMapping
from apps.common.exceptions import ConfigError, DomainError, UnsupportedConfigError
from apps.common.metrics import RADIXFFT_SIM_BUTTERFLIES_TOTAL, RADIXFFT_SIM_CONFLICTS_TOTAL
from apps.planner.plans import FftPlan

logger = logging.getLogger(__name__)


def _stage_blocks(plan: FftPlan, k: int) -> np.ndarray:
    """(N/r, r) array: row b holds the addresses of butterfly b of stage k."""
    if not 0 <= k < len(plan.stages):
        raise DomainError(f"plan has no stage {k}")
    stage = plan.stages[k]
    return stage.post_perm.forward.reshape(-1, stage.radix)


def stage_addresses(plan: FftPlan, k: int, b: int, radix: Optional[int] = None) -> Tuple[List[int], List[int]]:
    """
    Read and write addresses of butterfly ``b`` in stage ``k``.

    Raises:
        ConfigError: the stage radix differs from ``radix``.
        DomainError: k or b out of range.
    """
    blocks = _stage_blocks(plan, k)
    stage = plan.stages[k]
    if radix is not None and stage.radix != radix:
        raise ConfigError(f"stage {k} has radix {stage.radix}, accelerator radix is {radix}")
    if not 0 <= b < stage.butterfly_count:
        raise DomainError(f"butterfly {b} outside 0..{stage.butterfly_count - 1}")
    reads = blocks[b].tolist()
    return reads, list(reads)


@dataclass(frozen=True)
class AccessRecord:
    clock: int
    stage: int
    butterfly: int
    reads: Tuple[int, ...]
    writes: Tuple[int, ...]
    read_banks: Tuple[int, ...]
    write_banks: Tuple[int, ...]
    read_rows: Tuple[int, ...]
    write_rows: Tuple[int, ...]
    stall: bool

    @property
    def conflicting_banks(self) -> List[int]:
        repeated = set()
        for banks in (self.read_banks, self.write_banks):
            seen = set()
            for bank in banks:
                (repeated if bank in seen else seen).add(bank)
        return sorted(repeated)


@dataclass(frozen=True)
class AccessTrace:
    n: int
    radix: int
    records: Tuple[AccessRecord, ...] = field(repr=False)

    def __iter__(self) -> Iterator[AccessRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def validate(self) -> None:
        """R reads and R writes per issue, writes == reads, and per-stage partition of 0..N-1."""
        per_stage = {}
        for record in self.records:
            if len(record.reads) != self.radix or len(record.writes) != self.radix:
                raise ConfigError(f"clock {record.clock}: expected {self.radix} reads and writes")
            if record.reads != record.writes:
                raise ConfigError(f"clock {record.clock}: butterfly does not write where it read")
            per_stage.setdefault(record.stage, []).extend(record.reads)
        for stage, addresses in per_stage.items():
            if sorted(addresses) != list(range(self.n)):
                raise ConfigError(f"stage {stage}: reads do not partition 0..{self.n - 1}")


@dataclass(frozen=True)
class SimulationReport:
    n: int
    radix: int
    stages: int
    kind: str
    mapping: str
    pipeline_depth: int
    overlap: bool
    issues: int
    conflicts: int
    stall_cycles: int
    cycles: int
    predicted_cycles: int
    first_conflict: Optional[AccessRecord] = None

    @property
    def conflict_free(self) -> bool:
        return self.conflicts == 0


def _check_pure_radix(plan: FftPlan, cfg: AccelConfig) -> int:
    radices = {stage.radix for stage in plan.stages}
    if radices != {cfg.radix}:
        raise UnsupportedConfigError(
            f"only pure radix-{cfg.radix} plans are scheduled; plan radices are {plan.radices}"
        )
    return pure_radix_exponent(plan.n, cfg.radix)


def _conflict_rows(banks: np.ndarray) -> np.ndarray:
    """Boolean per row: some bank appears twice."""
    ordered = np.sort(banks, axis=1)
    return np.any(ordered[:, 1:] == ordered[:, :-1], axis=1)


def _stage_records(plan, k, mapping, start_clock, issue_clocks):
    blocks = _stage_blocks(plan, k)
    banks = mapping.banks(blocks, plan.n)
    rows = mapping.rows(blocks)
    stalls = _conflict_rows(banks)
    clock = start_clock
    records = []
    for b in range(blocks.shape[0]):
        addresses = tuple(blocks[b].tolist())
        bank_ids = tuple(banks[b].tolist())
        row_ids = tuple(rows[b].tolist())
        records.append(
            AccessRecord(
                clock=clock,
                stage=k,
                butterfly=b,
                reads=addresses,
                writes=addresses,
                read_banks=bank_ids,
                write_banks=bank_ids,
                read_rows=row_ids,
                write_rows=row_ids,
                stall=bool(stalls[b]),
            )
        )
        clock += issue_clocks + int(stalls[b])
    return records, clock


def simulate(plan: FftPlan, cfg: AccelConfig, mapping: BankMapping) -> Tuple[AccessTrace, SimulationReport]:
    """
    Schedule every butterfly of a pure radix-R plan and count clocks.

    Cycles are issues * (1, or 2 without overlap) + one stall per conflicting
    issue + the pipeline depth. The predicted figure is N/R * log_R(N) + C_p.

    Raises:
        UnsupportedConfigError: the plan mixes radices or uses one other than R.
        ConfigError: N is not a power of R.
    """
    q = _check_pure_radix(plan, cfg)
    if mapping.radix != cfg.radix:
        raise ConfigError(f"mapping {mapping.name} has {mapping.radix} banks, accelerator has {cfg.radix}")

    records: List[AccessRecord] = []
    clock = 0
    for k in range(len(plan.stages)):
        stage_records, clock = _stage_records(plan, k, mapping, clock, cfg.issue_clocks)
        records.extend(stage_records)
    trace = AccessTrace(plan.n, cfg.radix, tuple(records))

    conflicts = [record for record in records if record.stall]
    issues = len(records)
    report = SimulationReport(
        n=plan.n,
        radix=cfg.radix,
        stages=q,
        kind=plan.kind.value,
        mapping=mapping.name,
        pipeline_depth=cfg.pipeline_depth,
        overlap=cfg.overlap,
        issues=issues,
        conflicts=len(conflicts),
        stall_cycles=len(conflicts),
        cycles=issues * cfg.issue_clocks + len(conflicts) + cfg.pipeline_depth,
        predicted_cycles=(plan.n // cfg.radix) * q + cfg.pipeline_depth,
        first_conflict=conflicts[0] if conflicts else None,
    )

    RADIXFFT_SIM_BUTTERFLIES_TOTAL.labels(kind=report.kind).inc(issues)
    if conflicts:
        RADIXFFT_SIM_CONFLICTS_TOTAL.labels(mapping=mapping.name).inc(len(conflicts))
        first = conflicts[0]
        logger.warning(
            f"{len(conflicts)} bank conflict(s) under {mapping.name}; first at stage {first.stage} "
            f"butterfly {first.butterfly}, banks {list(first.read_banks)}"
        )
    logger.info(
        f"Simulated {plan}: {report.cycles} cycles, {report.conflicts} conflicts, "
        f"predicted {report.predicted_cycles}"
    )
    return trace, report


def check_conflict_free(plan: FftPlan, cfg: AccelConfig, mapping: BankMapping) -> Tuple[bool, Optional[AccessRecord]]:
    """True iff every butterfly reads and writes R distinct banks; else the first offender."""
    _check_pure_radix(plan, cfg)
    if mapping.radix != cfg.radix:
        raise ConfigError(f"mapping {mapping.name} has {mapping.radix} banks, accelerator has {cfg.radix}")
    clock = 0
    for k in range(len(plan.stages)):
        blocks = _stage_blocks(plan, k)
        stalls = _conflict_rows(mapping.banks(blocks, plan.n))
        if np.any(stalls):
            b = int(np.argmax(stalls))
            records, _ = _stage_records(plan, k, mapping, clock, cfg.issue_clocks)
            return False, records[b]
        clock += blocks.shape[0] * cfg.issue_clocks
    return True, None
