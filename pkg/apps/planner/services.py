"""
Plan compilation.

DIT follows F_N = D_K ... D_1 D_0 S_alpha with
D_k = A_k^-1 (I (x) F_{n_k}) W^_k A_k. DIF follows F_N = S_beta E_K ... E_0
with E_k = B_k^-1 W~_k (I (x) F_{m_k}) B_k. DIF_W moves each W~_k across
B_{k+1} B_k^-1, where it becomes X~_k and multiplies the operands of the
stage-(k+1) butterflies; stage 0 has no twiddle.
"""

import dataclasses
import logging
from typing import List, Optional, Sequence, Union

from django.conf import settings

from apps.common.exceptions import ConfigError, DomainError, ResourceError
from apps.common.metrics import RADIXFFT_PLANS_BUILT_TOTAL
from apps.indexing.numbering import RadixLike, RadixTuple, as_radix_tuple
from apps.indexing.permutations import digit_reverse_perm, stage_perm_A, stage_perm_B
from apps.operators.dense import (
    DenseMatrix,
    dense_of_diagonal,
    dense_of_permutation,
    dft_matrix,
    identity_matrix,
    kron,
    matmul_all,
)
from apps.operators.twiddles import (
    TwiddleDiagonal,
    stage_twiddle_dif,
    stage_twiddle_difw,
    stage_twiddle_dit,
)
from apps.planner.plans import (
    FactorizationPolicy,
    FftPlan,
    IOPosition,
    PlanKind,
    StagePlan,
    TwiddlePosition,
)

logger = logging.getLogger(__name__)


def prime_factors(n: int) -> List[int]:
    factors = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors.append(p)
            n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def factorize(
    n: int,
    policy: Union[FactorizationPolicy, str] = FactorizationPolicy.GREEDY_ASC_PRIMES,
    radices: Optional[Sequence[int]] = None,
) -> RadixTuple:
    """
    Choose stage radices for a length-n transform.

    Args:
        n: Transform length.
        policy: GREEDY_ASC_PRIMES assigns prime factors to n_0, n_1, ...
            smallest first; USER takes ``radices`` as written (n_K first).
        radices: The user list, required for USER.

    Returns:
        The radix tuple in written order (n_K, ..., n_0).
    """
    if n < 1:
        raise DomainError(f"transform length must be >= 1, got {n}")
    policy = FactorizationPolicy(policy)
    if policy == FactorizationPolicy.USER:
        if not radices:
            raise ConfigError("USER factorization needs a radix list")
        try:
            alpha = RadixTuple(tuple(radices))
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
        if alpha.size != n:
            raise ConfigError(f"radices {alpha} multiply to {alpha.size}, not {n}")
        return alpha
    if n == 1:
        return RadixTuple.of(1)
    return RadixTuple(tuple(reversed(prime_factors(n))))


def _finish(plan: FftPlan) -> FftPlan:
    for stage in plan.stages:
        stage.prepare_inplace()
    plan.io_perm.prepare_inplace()
    RADIXFFT_PLANS_BUILT_TOTAL.labels(kind=plan.kind.value).inc()
    logger.debug(f"Built {plan}")
    return plan


def plan_dit(alpha: RadixLike) -> FftPlan:
    alpha = as_radix_tuple(alpha)
    stages = []
    for k in range(alpha.top + 1):
        pre = stage_perm_A(alpha, k)
        stages.append(
            StagePlan(
                stage_index=k,
                radix=alpha.radix(k),
                pre_perm=pre,
                post_perm=pre.inverse(),
                twiddle=stage_twiddle_dit(alpha, k),
                twiddle_position=TwiddlePosition.BEFORE_BUTTERFLY,
            )
        )
    return _finish(
        FftPlan(
            n=alpha.size,
            kind=PlanKind.DIT,
            radices=alpha,
            stages=tuple(stages),
            io_perm=digit_reverse_perm(alpha),
            io_perm_position=IOPosition.INPUT_SIDE,
        )
    )


def plan_dif(beta: RadixLike) -> FftPlan:
    beta = as_radix_tuple(beta)
    stages = []
    for k in range(beta.top + 1):
        pre = stage_perm_B(beta, k)
        stages.append(
            StagePlan(
                stage_index=k,
                radix=beta.radix(k),
                pre_perm=pre,
                post_perm=pre.inverse(),
                twiddle=stage_twiddle_dif(beta, k),
                twiddle_position=TwiddlePosition.AFTER_BUTTERFLY,
            )
        )
    return _finish(
        FftPlan(
            n=beta.size,
            kind=PlanKind.DIF,
            radices=beta,
            stages=tuple(stages),
            io_perm=digit_reverse_perm(beta),
            io_perm_position=IOPosition.OUTPUT_SIDE,
        )
    )


def plan_dif_w(beta: RadixLike) -> FftPlan:
    beta = as_radix_tuple(beta)
    stages = []
    for k in range(beta.top + 1):
        pre = stage_perm_B(beta, k)
        if k == 0:
            twiddle = TwiddleDiagonal.identity(beta.size)
        else:
            twiddle = stage_twiddle_difw(beta, k - 1)
        stages.append(
            StagePlan(
                stage_index=k,
                radix=beta.radix(k),
                pre_perm=pre,
                post_perm=pre.inverse(),
                twiddle=twiddle,
                twiddle_position=TwiddlePosition.BEFORE_BUTTERFLY,
            )
        )
    return _finish(
        FftPlan(
            n=beta.size,
            kind=PlanKind.DIF_W,
            radices=beta,
            stages=tuple(stages),
            io_perm=digit_reverse_perm(beta),
            io_perm_position=IOPosition.OUTPUT_SIDE,
        )
    )


PLAN_BUILDERS = {
    PlanKind.DIT: plan_dit,
    PlanKind.DIF: plan_dif,
    PlanKind.DIF_W: plan_dif_w,
}


def build_plan(
    n: int,
    kind: Union[PlanKind, str] = PlanKind.DIT,
    radices: Optional[Sequence[int]] = None,
) -> FftPlan:
    """Factorize n (greedily unless radices are given) and compile a plan."""
    try:
        kind = PlanKind(kind)
    except ValueError as exc:
        raise ConfigError(f"unknown plan kind {kind!r}") from exc
    policy = FactorizationPolicy.USER if radices else FactorizationPolicy.GREEDY_ASC_PRIMES
    return PLAN_BUILDERS[kind](factorize(n, policy, radices))


def drop_trivial_stages(plan: FftPlan) -> FftPlan:
    """Remove radix-1 stages whose operators are all identities."""
    kept = tuple(stage for stage in plan.stages if not stage.is_trivial)
    if not kept:
        kept = plan.stages[:1]
    if len(kept) == len(plan.stages):
        return plan
    logger.debug(f"Dropped {len(plan.stages) - len(kept)} trivial stage(s) from {plan}")
    return dataclasses.replace(plan, stages=kept)


def _check_dense_cap(n: int) -> None:
    cap = getattr(settings, "FFT_DENSE_ASSEMBLY_MAX_N", 256)
    if n > cap:
        raise ResourceError(f"dense assembly of N={n} exceeds FFT_DENSE_ASSEMBLY_MAX_N={cap}")


def stage_dense(plan: FftPlan, stage: Union[StagePlan, int]) -> DenseMatrix:
    """The literal N x N matrix of one stage, built factor by factor."""
    _check_dense_cap(plan.n)
    if isinstance(stage, int):
        try:
            stage = plan.stages[stage]
        except IndexError:
            raise DomainError(f"plan has no stage at position {stage}")
    butterflies = kron(identity_matrix(stage.butterfly_count), dft_matrix(stage.radix))
    twiddle = dense_of_diagonal(stage.twiddle)
    if stage.twiddle_position == TwiddlePosition.BEFORE_BUTTERFLY:
        middle = [butterflies, twiddle]
    else:
        middle = [twiddle, butterflies]
    return matmul_all(
        [dense_of_permutation(stage.post_perm), *middle, dense_of_permutation(stage.pre_perm)]
    )


def apply_stage_rows(matrix: DenseMatrix, stage: StagePlan) -> DenseMatrix:
    """stage . matrix, using row operations only."""
    matrix = matrix.permute_rows(stage.pre_perm)
    if stage.twiddle_position == TwiddlePosition.BEFORE_BUTTERFLY:
        matrix = matrix.scale_rows(stage.twiddle)
    matrix = matrix.blockwise(dft_matrix(stage.radix))
    if stage.twiddle_position == TwiddlePosition.AFTER_BUTTERFLY:
        matrix = matrix.scale_rows(stage.twiddle)
    return matrix.permute_rows(stage.post_perm)


def assemble_dense(plan: FftPlan) -> DenseMatrix:
    """
    Multiply out io_perm and every stage in application order.

    Raises:
        ResourceError: N exceeds FFT_DENSE_ASSEMBLY_MAX_N.
    """
    _check_dense_cap(plan.n)
    matrix = identity_matrix(plan.n)
    if plan.io_perm_position == IOPosition.INPUT_SIDE:
        matrix = matrix.permute_rows(plan.io_perm)
    for stage in plan.stages:
        matrix = apply_stage_rows(matrix, stage)
    if plan.io_perm_position == IOPosition.OUTPUT_SIDE:
        matrix = matrix.permute_rows(plan.io_perm)
    return matrix
