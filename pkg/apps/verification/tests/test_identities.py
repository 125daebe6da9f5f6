import unittest

import numpy as np

from apps.indexing.numbering import RadixTuple
from apps.planner.plans import PlanKind
from apps.planner.services import plan_dif, plan_dit
from apps.verification.identities import (
    CHECKS,
    CheckContext,
    corrupt_plan,
    oracle_factorizations,
    paired_factorization,
)


class TestChecksPass(unittest.TestCase):
    def test_every_check_passes(self):
        ctx = CheckContext(max_n=32)
        for name, check in CHECKS.items():
            with self.subTest(check=name):
                result = check(ctx)
                self.assertEqual(result.name, name)
                self.assertTrue(result.passed, result.counterexample)
                self.assertGreater(result.cases, 0)
                self.assertIsNone(result.counterexample)

    def test_trivial_bound(self):
        ctx = CheckContext(max_n=1)
        for name, check in CHECKS.items():
            with self.subTest(check=name):
                self.assertTrue(check(ctx).passed)

    def test_unitarity_visits_every_size(self):
        self.assertEqual(CHECKS["dft_unitarity"](CheckContext(max_n=20)).cases, 20)

    def test_kind_filter(self):
        ctx = CheckContext(max_n=16, kinds=(PlanKind.DIF,))
        self.assertEqual(CHECKS["dit_factorization"](ctx).cases, 0)
        self.assertGreater(CHECKS["dif_factorization"](ctx).cases, 0)

    def test_cross_kind_checks_need_their_kinds(self):
        only_dit = CheckContext(max_n=16, kinds=(PlanKind.DIT,))
        self.assertEqual(CHECKS["twiddle_rearrangement"](only_dit).cases, 0)
        self.assertEqual(CHECKS["dif_dit_duality"](only_dit).cases, 0)
        both = CheckContext(max_n=16, kinds=(PlanKind.DIT, PlanKind.DIF))
        self.assertGreater(CHECKS["dif_dit_duality"](both).cases, 0)
        self.assertEqual(CHECKS["twiddle_rearrangement"](both).cases, 0)
        self.assertGreater(CHECKS["twiddle_rearrangement"](CheckContext(max_n=16, kinds=(PlanKind.DIF_W,))).cases, 0)


class TestExecutorOracle(unittest.TestCase):
    def test_paired_factorization(self):
        self.assertEqual(paired_factorization(RadixTuple.of(3, 2, 2)), RadixTuple.of(3, 4))
        self.assertEqual(paired_factorization(RadixTuple.of(5, 5, 5, 2, 2, 2)), RadixTuple.of(25, 10, 4))
        self.assertEqual(paired_factorization(RadixTuple.of(7)), RadixTuple.of(7))

    def test_two_factorizations_per_size(self):
        for n in (6, 12, 16, 360, 1000):
            with self.subTest(n=n):
                alphas = oracle_factorizations(n)
                self.assertEqual(len(alphas), 2)
                self.assertNotEqual(alphas[0], alphas[1])
                self.assertTrue(all(alpha.size == n for alpha in alphas))

    def test_ten_trials_per_plan(self):
        # sizes 6, 12, 16; two factorizations and three kinds each
        result = CHECKS["executor_oracle"](CheckContext(max_n=16))
        self.assertTrue(result.passed, result.counterexample)
        self.assertEqual(result.cases, 3 * 2 * 3 * 10)

    def test_counterexample_names_the_plan(self):
        result = CHECKS["executor_oracle"](CheckContext(max_n=6, kinds=(PlanKind.DIT,), inject_fault=True))
        self.assertFalse(result.passed)
        self.assertEqual(result.counterexample["kind"], "dit")
        self.assertEqual(result.counterexample["radices"], [3, 2])
        self.assertEqual(result.counterexample["trial"], 0)


class TestFaultInjection(unittest.TestCase):
    def test_corrupt_plan_changes_one_stage(self):
        plan = plan_dit((2, 2))
        bad = corrupt_plan(plan)
        self.assertFalse(bad.stages[1].twiddle.equivalent(plan.stages[1].twiddle))
        self.assertTrue(bad.stages[0].twiddle.equivalent(plan.stages[0].twiddle))
        self.assertEqual(CheckContext(max_n=4).locate_stage(bad), 1)

    def test_nothing_to_corrupt(self):
        plan = plan_dit((5,))
        self.assertIs(corrupt_plan(plan), plan)

    def test_dif_fault_lands_on_first_stage(self):
        self.assertEqual(CheckContext(max_n=4).locate_stage(corrupt_plan(plan_dif((2, 2)))), 0)

    def test_factorization_counterexample(self):
        ctx = CheckContext(max_n=16, inject_fault=True)
        for name, kind, stage in (
            ("dit_factorization", "dit", 1),
            ("dif_factorization", "dif", 0),
            ("difw_factorization", "difw", 1),
        ):
            with self.subTest(check=name):
                result = CHECKS[name](ctx)
                self.assertFalse(result.passed)
                self.assertEqual(result.counterexample["kind"], kind)
                self.assertEqual(result.counterexample["radices"], [2, 2])
                self.assertEqual(result.counterexample["stage"], stage)
                self.assertGreater(result.counterexample["error"], 1e-3)

    def test_executor_check_catches_fault(self):
        result = CHECKS["executor_oracle"](CheckContext(max_n=16, inject_fault=True))
        self.assertFalse(result.passed)
        self.assertIsNotNone(result.counterexample["stage"])

    def test_index_checks_ignore_fault(self):
        ctx = CheckContext(max_n=16, inject_fault=True)
        for name in ("digit_reversal_recursion", "splitting_rule", "twiddle_rearrangement"):
            self.assertTrue(CHECKS[name](ctx).passed)


class TestContext(unittest.TestCase):
    def test_rng_per_name(self):
        ctx = CheckContext(max_n=8, seed=7)
        first = ctx.rng("executor_oracle").standard_normal(4)
        np.testing.assert_array_equal(first, ctx.rng("executor_oracle").standard_normal(4))
        self.assertFalse(np.array_equal(first, ctx.rng("other").standard_normal(4)))

    def test_build_without_fault(self):
        plan = CheckContext(max_n=8).build("dit", RadixTuple.of(2, 2, 2))
        self.assertIsNone(CheckContext(max_n=8).locate_stage(plan))
