"""
Verification suite runner.

Runs the named identity checks on a thread pool and collects one
CheckResult per check, ordered by name.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Union

from django.conf import settings

from apps.common.exceptions import ConfigError
from apps.common.metrics import RADIXFFT_VERIFY_CHECKS_TOTAL
from apps.planner.plans import PlanKind
from apps.verification.identities import CHECKS, CheckContext, CheckResult

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    max_n: int
    seed: int
    kinds: List[str]
    results: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def to_dict(self) -> Dict:
        return {
            "schema": 1,
            "max_n": self.max_n,
            "seed": self.seed,
            "kinds": self.kinds,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
            "checks": [result.to_dict() for result in self.results],
        }


def parse_kinds(kinds: Optional[Iterable[Union[PlanKind, str]]]) -> tuple:
    """
    Normalise a kind list, keeping first occurrences in order.

    Raises:
        ConfigError: an entry is not a plan kind.
    """
    if not kinds:
        return tuple(PlanKind)
    parsed = []
    for kind in kinds:
        try:
            kind = PlanKind(kind)
        except ValueError as e:
            raise ConfigError(f"unknown plan kind {kind!r}") from e
        if kind not in parsed:
            parsed.append(kind)
    return tuple(parsed)


def run_check(name: str, ctx: CheckContext) -> CheckResult:
    """
    Run a single named check.

    Raises:
        ConfigError: no check has that name.
    """
    try:
        check = CHECKS[name]
    except KeyError as e:
        raise ConfigError(f"unknown check {name!r}") from e
    started = time.perf_counter()
    result = check(ctx)
    status = "passed" if result.passed else "failed"
    RADIXFFT_VERIFY_CHECKS_TOTAL.labels(status=status).inc()
    logger.debug(f"Check {name} {status}: {result.cases} cases in {time.perf_counter() - started:.3f} s")
    return result


def run_suite(
    max_n: int,
    kinds: Optional[Sequence[Union[PlanKind, str]]] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    inject_fault: bool = False,
    names: Optional[Sequence[str]] = None,
) -> SuiteReport:
    """
    Run every named check (or ``names``) for sizes up to ``max_n``.

    Args:
        max_n: Largest transform size any check visits.
        kinds: Plan kinds to cover; all kinds when empty.
        seed: Seed for the randomised checks; FFT_DEFAULT_SEED when None.
        workers: Thread pool size; FFT_VERIFY_WORKERS when None.
        inject_fault: Corrupt one twiddle of every plan the checks build.
        names: Restrict the run to these checks.

    Returns:
        SuiteReport with results sorted by check name.

    Raises:
        ConfigError: bad max_n, kind or check name.
    """
    if max_n < 1:
        raise ConfigError(f"max_n must be >= 1, got {max_n}")
    seed = int(settings.FFT_DEFAULT_SEED if seed is None else seed)
    workers = max(1, int(settings.FFT_VERIFY_WORKERS if workers is None else workers))
    ctx = CheckContext(max_n=max_n, kinds=parse_kinds(kinds), seed=seed, inject_fault=inject_fault)
    selected = sorted(names) if names else sorted(CHECKS)
    for name in selected:
        if name not in CHECKS:
            raise ConfigError(f"unknown check {name!r}")

    started = time.perf_counter()
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda name: run_check(name, ctx), selected))

    report = SuiteReport(
        max_n=max_n,
        seed=seed,
        kinds=[kind.value for kind in ctx.kinds],
        results=results,
        elapsed=time.perf_counter() - started,
    )
    if report.passed:
        logger.info(f"Verification passed: {len(results)} checks up to N={max_n} in {report.elapsed:.2f} s")
    else:
        names_failed = ", ".join(result.name for result in report.failures)
        logger.error(f"Verification failed up to N={max_n}: {names_failed}")
    return report
