"""
Named identity checks.

Each check walks every case up to its size cap, keeps the largest error it
sees and stops at the first failure, recording the case as a counterexample.
Plans are always obtained through ``CheckContext.build`` so fault injection
reaches every check that uses one.
"""

import dataclasses
import logging
import zlib
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
from django.conf import settings

from apps.executor.oracle import dft_oracle
from apps.executor.services import SampleBuffer, execute, relative_linf_error
from apps.indexing.numbering import (
    RadixTuple,
    digit_rotation_address,
    enumerate_radix_tuples,
)
from apps.indexing.permutations import (
    digit_reverse_perm,
    stage_perm_A,
    stage_perm_B,
    stride_perm,
)
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
    conjugate_by_permutation,
    max_modulus_defect,
    stage_twiddle_dif,
    stage_twiddle_difw,
    stage_twiddle_dit,
    twiddle_W,
)
from apps.planner.plans import FftPlan, PlanKind
from apps.planner.services import PLAN_BUILDERS, assemble_dense, factorize

logger = logging.getLogger(__name__)

PLAN_RADICES = (2, 3, 4, 5, 8)
RECURSION_RADICES = (2, 3, 4, 5)
ORACLE_SIZES = (6, 12, 16, 30, 36, 48, 60, 64, 90, 100, 120, 128, 210, 243, 256, 360, 500, 512, 1000, 1024)
ORACLE_TRIALS = 10


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    max_error: float = 0.0
    cases: int = 0
    counterexample: Optional[Dict] = None

    def observe(self, error: float, tolerance: float, **case) -> bool:
        """Record one case; returns False once the check has failed."""
        self.cases += 1
        self.max_error = max(self.max_error, float(error))
        if error > tolerance:
            self.passed = False
            self.counterexample = {"error": float(error), **case}
            return False
        return True

    def to_dict(self) -> Dict:
        return dataclasses.asdict(self)


@dataclass
class CheckContext:
    max_n: int
    kinds: Tuple[PlanKind, ...] = (PlanKind.DIT, PlanKind.DIF, PlanKind.DIF_W)
    seed: int = 20240607
    inject_fault: bool = False

    def cap(self, setting: str, default: int) -> int:
        return min(self.max_n, int(getattr(settings, setting, default)))

    @property
    def abs_tolerance(self) -> float:
        return float(getattr(settings, "FFT_ABS_TOLERANCE", 1e-12))

    @property
    def rel_tolerance(self) -> float:
        return float(getattr(settings, "FFT_REL_TOLERANCE", 1e-9))

    def rng(self, name: str) -> np.random.Generator:
        return np.random.default_rng([self.seed, zlib.crc32(name.encode())])

    def build(self, kind: PlanKind, radices: RadixTuple) -> FftPlan:
        plan = PLAN_BUILDERS[PlanKind(kind)](radices)
        if self.inject_fault:
            plan = corrupt_plan(plan)
        return plan

    def locate_stage(self, plan: FftPlan) -> Optional[int]:
        """First stage whose twiddle differs from a freshly compiled plan."""
        reference = PLAN_BUILDERS[plan.kind](plan.radices)
        for ours, theirs in zip(plan.stages, reference.stages):
            if not ours.twiddle.equivalent(theirs.twiddle):
                return ours.stage_index
        return None


def corrupt_plan(plan: FftPlan) -> FftPlan:
    """Conjugate one entry of the last non-identity stage twiddle."""
    for position in range(len(plan.stages) - 1, -1, -1):
        stage = plan.stages[position]
        if stage.twiddle.is_identity:
            continue
        exponents = stage.twiddle.exponents.copy()
        target = int(np.flatnonzero(exponents)[-1])
        exponents[target] = -exponents[target]
        twiddle = dataclasses.replace(stage.twiddle, exponents=exponents)
        if twiddle.equivalent(stage.twiddle):
            continue
        stages = list(plan.stages)
        stages[position] = dataclasses.replace(stage, twiddle=twiddle.prepare_inplace())
        logger.debug(f"Injected fault into {plan}: stage {stage.stage_index}, entry {target}")
        return dataclasses.replace(plan, stages=tuple(stages))
    return plan


def factor_pairs(n: int) -> Iterable[Tuple[int, int]]:
    return ((k, n // k) for k in range(1, n + 1) if n % k == 0)


def paired_factorization(alpha: RadixTuple) -> RadixTuple:
    """Merge neighbouring radices pairwise, starting from n_0: (3, 2, 2) -> (3, 4)."""
    ascending = list(reversed(alpha.radices))
    merged = [ascending[i] * ascending[i + 1] for i in range(0, len(ascending) - 1, 2)]
    if len(ascending) % 2:
        merged.append(ascending[-1])
    return RadixTuple(tuple(reversed(merged)))


def oracle_factorizations(n: int) -> List[RadixTuple]:
    """The greedy factorization of n and, when it differs, its paired variant."""
    greedy = factorize(n)
    paired = paired_factorization(greedy)
    return [greedy] if paired == greedy else [greedy, paired]


def _L(n: int, k: int) -> DenseMatrix:
    return dense_of_permutation(stride_perm(n, k))


def _W(n: int, m: int) -> DenseMatrix:
    return dense_of_diagonal(twiddle_W(n, m))


def check_stride_permutations(ctx: CheckContext) -> CheckResult:
    """L^n_k = (L^n_m)^T = (L^n_m)^-1."""
    result = CheckResult("stride_permutation_inverse")
    for n in range(1, ctx.cap("FFT_DENSE_IDENTITY_MAX_N", 64) + 1):
        for k, m in factor_pairs(n):
            lkn, lmn = _L(n, k), _L(n, m)
            error = max(lkn.max_abs_diff(lmn.transpose()), (lkn @ lmn).max_abs_diff(identity_matrix(n)))
            if not result.observe(error, 0.0, n=n, k=k):
                return result
    return result


def check_twiddle_conjugation(ctx: CheckContext) -> CheckResult:
    """W^n_m = L^n_m W^n_k L^n_k."""
    result = CheckResult("twiddle_conjugation")
    for n in range(1, ctx.cap("FFT_DENSE_IDENTITY_MAX_N", 64) + 1):
        for k, m in factor_pairs(n):
            error = _W(n, m).max_abs_diff(_L(n, m) @ _W(n, k) @ _L(n, k))
            if not result.observe(error, ctx.abs_tolerance, n=n, k=k):
                return result
    return result


def check_kronecker_commutation(ctx: CheckContext) -> CheckResult:
    """L^n_k (I_k (x) F_m) L^n_m = F_m (x) I_k."""
    result = CheckResult("kronecker_commutation")
    for n in range(1, ctx.cap("FFT_DENSE_IDENTITY_MAX_N", 64) + 1):
        for k, m in factor_pairs(n):
            lhs = _L(n, k) @ kron(identity_matrix(k), dft_matrix(m)) @ _L(n, m)
            error = lhs.max_abs_diff(kron(dft_matrix(m), identity_matrix(k)))
            if not result.observe(error, ctx.abs_tolerance, n=n, k=k):
                return result
    return result


def check_splitting_rule(ctx: CheckContext) -> CheckResult:
    """F_n = L^n_k (I_k (x) F_m) W^n_m (F_k (x) I_m)."""
    result = CheckResult("splitting_rule")
    for n in range(1, ctx.cap("FFT_DENSE_IDENTITY_MAX_N", 64) + 1):
        for k, m in factor_pairs(n):
            rhs = matmul_all(
                [_L(n, k), kron(identity_matrix(k), dft_matrix(m)), _W(n, m), kron(dft_matrix(k), identity_matrix(m))]
            )
            if not result.observe(rhs.max_abs_diff(dft_matrix(n)), ctx.abs_tolerance, n=n, k=k):
                return result
    return result


def check_splitting_with_strides(ctx: CheckContext) -> CheckResult:
    """F_n = L^n_k (I_k (x) F_m) W^n_m L^n_m (I_m (x) F_k) L^n_k."""
    result = CheckResult("splitting_rule_strided")
    for n in range(1, ctx.cap("FFT_DENSE_IDENTITY_MAX_N", 64) + 1):
        for k, m in factor_pairs(n):
            rhs = matmul_all(
                [
                    _L(n, k),
                    kron(identity_matrix(k), dft_matrix(m)),
                    _W(n, m),
                    _L(n, m),
                    kron(identity_matrix(m), dft_matrix(k)),
                    _L(n, k),
                ]
            )
            if not result.observe(rhs.max_abs_diff(dft_matrix(n)), ctx.abs_tolerance, n=n, k=k):
                return result
    return result


def check_digit_reversal_recursion(ctx: CheckContext) -> CheckResult:
    """S_(M,alpha) = (I_M (x) S_alpha) L^{NM}_N and S_(alpha,M) = L^{NM}_M (I_M (x) S_alpha)."""
    result = CheckResult("digit_reversal_recursion")
    cap = ctx.cap("FFT_DENSE_ASSEMBLY_MAX_N", 256)
    for alpha in enumerate_radix_tuples(cap, RECURSION_RADICES):
        s_alpha = digit_reverse_perm(alpha)
        for extra in RECURSION_RADICES:
            total = alpha.size * extra
            if total > cap:
                break
            blocked = s_alpha.kron_identity(extra)
            outer = digit_reverse_perm((extra,) + alpha.radices)
            inner = digit_reverse_perm(alpha.radices + (extra,))
            mismatches = int(outer != blocked.compose(stride_perm(total, alpha.size)))
            mismatches += int(inner != stride_perm(total, extra).compose(blocked))
            if not result.observe(mismatches, 0, radices=list(alpha.radices), extra=extra):
                return result
    return result


def check_digit_rotation(ctx: CheckContext) -> CheckResult:
    """A_k moves digit p_k to the low end (exhaustive over random tuples)."""
    result = CheckResult("stage_transposition_digits")
    cap = min(ctx.cap("FFT_INDEX_CHECK_MAX_N", 4096), 1024)
    rng = ctx.rng(result.name)
    tuples = list(enumerate_radix_tuples(cap, RECURSION_RADICES))
    if not tuples:
        return result
    picks = rng.choice(len(tuples), size=min(40, len(tuples)), replace=False)
    for index in sorted(picks.tolist()):
        alpha = tuples[index]
        for k in range(alpha.top + 1):
            perm = stage_perm_A(alpha, k)
            wrong = sum(perm(n) != digit_rotation_address(alpha, k, n) for n in range(alpha.size))
            if not result.observe(wrong, 0, radices=list(alpha.radices), stage=k):
                return result
    return result


def check_digit_reversal_involution(ctx: CheckContext) -> CheckResult:
    """S_{alpha*} S_alpha = I."""
    result = CheckResult("digit_reversal_involution")
    for alpha in enumerate_radix_tuples(ctx.cap("FFT_INDEX_CHECK_MAX_N", 4096), PLAN_RADICES, max_len=4):
        product = digit_reverse_perm(alpha.star()).compose(digit_reverse_perm(alpha))
        if not result.observe(0 if product.is_identity else 1, 0, radices=list(alpha.radices)):
            return result
    return result


def check_dft_unitarity(ctx: CheckContext) -> CheckResult:
    """F_n conj(F_n) = n I."""
    result = CheckResult("dft_unitarity")
    for n in range(1, ctx.cap("FFT_DENSE_IDENTITY_MAX_N", 64) + 1):
        f = dft_matrix(n)
        error = (f @ f.conj()).max_abs_diff(DenseMatrix(n * np.eye(n))) / n
        if not result.observe(error, ctx.abs_tolerance, n=n):
            return result
    return result


def check_twiddle_modulus(ctx: CheckContext) -> CheckResult:
    result = CheckResult("twiddle_unit_modulus")
    builders = (stage_twiddle_dit, stage_twiddle_dif, stage_twiddle_difw)
    for alpha in enumerate_radix_tuples(ctx.cap("FFT_DENSE_ASSEMBLY_MAX_N", 256), PLAN_RADICES):
        for k in range(alpha.top + 1):
            for builder in builders:
                diagonal = builder(alpha, k)
                error = max_modulus_defect(diagonal)
                error = error if np.isfinite(error) else np.inf
                case = {"radices": list(alpha.radices), "stage": k, "builder": builder.__name__}
                if not result.observe(error, ctx.abs_tolerance, **case):
                    return result
    return result


def _factorization_check(ctx: CheckContext, name: str, kind: PlanKind) -> CheckResult:
    result = CheckResult(name)
    if kind not in ctx.kinds:
        return result
    for alpha in enumerate_radix_tuples(ctx.cap("FFT_DENSE_ASSEMBLY_MAX_N", 256), PLAN_RADICES):
        plan = ctx.build(kind, alpha)
        error = assemble_dense(plan).max_abs_diff(dft_matrix(plan.n))
        if not result.observe(error, ctx.abs_tolerance, kind=kind.value, radices=list(alpha.radices)):
            result.counterexample["stage"] = ctx.locate_stage(plan)
            return result
    return result


def check_dit_factorization(ctx: CheckContext) -> CheckResult:
    return _factorization_check(ctx, "dit_factorization", PlanKind.DIT)


def check_dif_factorization(ctx: CheckContext) -> CheckResult:
    return _factorization_check(ctx, "dif_factorization", PlanKind.DIF)


def check_difw_factorization(ctx: CheckContext) -> CheckResult:
    return _factorization_check(ctx, "difw_factorization", PlanKind.DIF_W)


def check_transposed_dit(ctx: CheckContext) -> CheckResult:
    """F_N = S_alpha^-1 D_0^T D_1^T ... D_K^T, read off the DIT plan."""
    result = CheckResult("transposed_dit_factorization")
    if PlanKind.DIT not in ctx.kinds:
        return result
    for alpha in enumerate_radix_tuples(ctx.cap("FFT_DENSE_ASSEMBLY_MAX_N", 256), PLAN_RADICES):
        plan = ctx.build(PlanKind.DIT, alpha)
        matrix = identity_matrix(plan.n)
        for stage in reversed(plan.stages):
            # D_k^T = A_k^-1 W^_k (I (x) F) A_k
            matrix = matrix.permute_rows(stage.pre_perm)
            matrix = matrix.blockwise(dft_matrix(stage.radix))
            matrix = matrix.scale_rows(stage.twiddle)
            matrix = matrix.permute_rows(stage.post_perm)
        matrix = matrix.permute_rows(plan.io_perm.inverse())
        error = matrix.max_abs_diff(dft_matrix(plan.n))
        if not result.observe(error, ctx.abs_tolerance, kind="dit", radices=list(alpha.radices)):
            result.counterexample["stage"] = ctx.locate_stage(plan)
            return result
    return result


def check_rearrangement(ctx: CheckContext) -> CheckResult:
    """B_{k+1} B_k^-1 W~_k = X~_k B_{k+1} B_k^-1, densely and on exponents."""
    result = CheckResult("twiddle_rearrangement")
    if PlanKind.DIF_W not in ctx.kinds:
        return result
    for beta in enumerate_radix_tuples(ctx.cap("FFT_DENSE_ASSEMBLY_MAX_N", 256), PLAN_RADICES):
        for k in range(beta.top):
            back = stage_perm_B(beta, k).inverse()
            forward = stage_perm_B(beta, k + 1)
            w_k, x_k = stage_twiddle_dif(beta, k), stage_twiddle_difw(beta, k)
            start = identity_matrix(beta.size)
            lhs = start.scale_rows(w_k).permute_rows(back).permute_rows(forward)
            rhs = start.permute_rows(back).permute_rows(forward).scale_rows(x_k)
            error = lhs.max_abs_diff(rhs)
            if not conjugate_by_permutation(w_k, forward.compose(back)).equivalent(x_k):
                error = max(error, 1.0)
            if not result.observe(error, ctx.abs_tolerance, radices=list(beta.radices), stage=k):
                return result
    return result


def check_plan_duality(ctx: CheckContext) -> CheckResult:
    """DIF stage k of beta mirrors DIT stage K-k of beta*."""
    result = CheckResult("dif_dit_duality")
    if PlanKind.DIF not in ctx.kinds or PlanKind.DIT not in ctx.kinds:
        return result
    for beta in enumerate_radix_tuples(ctx.cap("FFT_DENSE_ASSEMBLY_MAX_N", 256), PLAN_RADICES):
        dif = PLAN_BUILDERS[PlanKind.DIF](beta)
        dit = PLAN_BUILDERS[PlanKind.DIT](beta.star())
        for k, stage in enumerate(dif.stages):
            twin = dit.stages[beta.top - k]
            same = stage.pre_perm == twin.pre_perm and stage.twiddle.equivalent(twin.twiddle)
            if not result.observe(0 if same else 1, 0, radices=list(beta.radices), stage=k):
                return result
    return result


def check_executor_oracle(ctx: CheckContext) -> CheckResult:
    """execute against the compensated direct DFT, two factorizations per size."""
    result = CheckResult("executor_oracle")
    rng = ctx.rng(result.name)
    sizes = [n for n in ORACLE_SIZES if n <= ctx.max_n]
    for n in sizes:
        plans = [ctx.build(kind, alpha) for alpha in oracle_factorizations(n) for kind in ctx.kinds]
        for trial in range(ORACLE_TRIALS):
            x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
            expected = dft_oracle(x)
            for plan in plans:
                buf = SampleBuffer(x.copy())
                execute(plan, buf)
                error = relative_linf_error(buf.data, expected)
                case = {"kind": plan.kind.value, "radices": list(plan.radices), "trial": trial}
                if not result.observe(error, ctx.rel_tolerance, **case):
                    result.counterexample["stage"] = ctx.locate_stage(plan)
                    return result
    return result


CHECKS: Dict[str, Callable[[CheckContext], CheckResult]] = {
    "stride_permutation_inverse": check_stride_permutations,
    "twiddle_conjugation": check_twiddle_conjugation,
    "kronecker_commutation": check_kronecker_commutation,
    "splitting_rule": check_splitting_rule,
    "splitting_rule_strided": check_splitting_with_strides,
    "digit_reversal_recursion": check_digit_reversal_recursion,
    "stage_transposition_digits": check_digit_rotation,
    "digit_reversal_involution": check_digit_reversal_involution,
    "dft_unitarity": check_dft_unitarity,
    "twiddle_unit_modulus": check_twiddle_modulus,
    "dit_factorization": check_dit_factorization,
    "transposed_dit_factorization": check_transposed_dit,
    "dif_factorization": check_dif_factorization,
    "difw_factorization": check_difw_factorization,
    "twiddle_rearrangement": check_rearrangement,
    "dif_dit_duality": check_plan_duality,
    "executor_oracle": check_executor_oracle,
}


def check_names() -> List[str]:
    return sorted(CHECKS)
