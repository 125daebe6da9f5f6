import itertools
import unittest

import numpy as np
from django.test import override_settings

from apps.common.exceptions import ConfigError, DomainError, ResourceError
from apps.indexing.numbering import RadixTuple, enumerate_radix_tuples
from apps.indexing.permutations import stage_perm_B, stride_perm
from apps.operators.dense import dft_matrix
from apps.operators.twiddles import (
    conjugate_by_permutation,
    stage_twiddle_dif,
    stage_twiddle_difw,
    twiddle_V,
)
from apps.planner.plans import FactorizationPolicy, IOPosition, PlanKind, TwiddlePosition
from apps.planner.services import (
    assemble_dense,
    build_plan,
    drop_trivial_stages,
    factorize,
    plan_dif,
    plan_dif_w,
    plan_dit,
    stage_dense,
)

ATOL = 1e-12
W4 = [1, 1, 1, -1j]


class TestFactorize(unittest.TestCase):
    def test_greedy(self):
        self.assertEqual(factorize(12).radices, (3, 2, 2))
        self.assertEqual(factorize(1).radices, (1,))
        self.assertEqual(factorize(360).radices, (5, 3, 3, 2, 2, 2))
        self.assertEqual(factorize(97).radices, (97,))

    def test_user(self):
        self.assertEqual(factorize(8, FactorizationPolicy.USER, [4, 2]).radices, (4, 2))
        with self.assertRaises(ConfigError):
            factorize(8, FactorizationPolicy.USER, [3, 2])
        with self.assertRaises(ConfigError):
            factorize(8, FactorizationPolicy.USER, [])

    def test_zero(self):
        with self.assertRaises(DomainError):
            factorize(0)


class TestPlanExamples(unittest.TestCase):
    def test_dit_two_by_two(self):
        plan = plan_dit((2, 2))
        self.assertEqual(len(plan.stages), 2)
        first, second = plan.stages
        self.assertTrue(first.pre_perm.is_identity and first.twiddle.is_identity)
        self.assertEqual(second.pre_perm.tolist(), [0, 2, 1, 3])
        np.testing.assert_array_equal(second.twiddle.values, W4)
        self.assertEqual(plan.io_perm_position, IOPosition.INPUT_SIDE)
        self.assertEqual(first.twiddle_position, TwiddlePosition.BEFORE_BUTTERFLY)

    def test_dif_two_by_two(self):
        plan = plan_dif((2, 2))
        first, second = plan.stages
        self.assertEqual(first.pre_perm, stride_perm(4, 2))
        np.testing.assert_array_equal(first.twiddle.values, W4)
        self.assertEqual(first.twiddle_position, TwiddlePosition.AFTER_BUTTERFLY)
        self.assertTrue(second.pre_perm.is_identity and second.twiddle.is_identity)
        self.assertEqual(plan.io_perm_position, IOPosition.OUTPUT_SIDE)

    def test_difw_two_by_two(self):
        plan = plan_dif_w((2, 2))
        first, second = plan.stages
        self.assertTrue(first.twiddle.is_identity)
        np.testing.assert_array_equal(second.twiddle.values, W4)
        self.assertEqual(second.twiddle_position, TwiddlePosition.BEFORE_BUTTERFLY)

    def test_difw_three_stages(self):
        plan = plan_dif_w((2, 2, 2))
        self.assertEqual(len(plan.stages), 3)
        self.assertTrue(plan.stages[1].twiddle.equivalent(twiddle_V(2, 2, 2)))

    def test_singleton(self):
        for builder in (plan_dit, plan_dif, plan_dif_w):
            plan = builder((5,))
            self.assertEqual(len(plan.stages), 1)
            self.assertTrue(plan.io_perm.is_identity)
            self.assertEqual(assemble_dense(plan).max_abs_diff(dft_matrix(5)), 0.0)

    def test_build_plan(self):
        plan = build_plan(12, "dit")
        self.assertEqual(plan.radices.radices, (3, 2, 2))
        self.assertEqual(len(plan.stages), 3)
        self.assertEqual(build_plan(8, "difw", [4, 2]).kind, PlanKind.DIF_W)
        self.assertEqual(len(build_plan(1, "dif").stages), 1)
        with self.assertRaises(ConfigError):
            build_plan(8, "fast")

    def test_stage_invariants(self):
        plan = plan_dif((5, 4, 3))
        for stage in plan.stages:
            self.assertTrue(stage.post_perm.compose(stage.pre_perm).is_identity)
            self.assertEqual(stage.butterfly_count * stage.radix, plan.n)


class TestFactorizationOracle(unittest.TestCase):
    """Every plan multiplies out to F_N."""

    def assertPlanIsDft(self, plan):
        error = assemble_dense(plan).max_abs_diff(dft_matrix(plan.n))
        self.assertLess(error, ATOL, f"{plan} off by {error}")

    def test_all_tuples_up_to_256(self):
        for alpha in enumerate_radix_tuples(256, (2, 3, 4, 5, 8)):
            for builder in (plan_dit, plan_dif, plan_dif_w):
                self.assertPlanIsDft(builder(alpha))

    def test_radix_one_stages(self):
        for builder in (plan_dit, plan_dif, plan_dif_w):
            self.assertPlanIsDft(builder((3, 1, 2)))
            self.assertPlanIsDft(builder((1, 4, 1)))

    def test_stage_dense_matches_row_assembly(self):
        plan = plan_dif_w((3, 2, 4))
        product = np.eye(24, dtype=complex)
        for index in range(len(plan.stages)):
            product = stage_dense(plan, index).entries @ product
        dense = np.zeros((24, 24), dtype=complex)
        dense[plan.io_perm.forward, np.arange(24)] = 1
        np.testing.assert_allclose(dense @ product, dft_matrix(24).entries, atol=ATOL)


class TestStructure(unittest.TestCase):
    def test_rearrangement_identity(self):
        """B_{k+1} B_k^-1 W~_k == X~_k B_{k+1} B_k^-1, exactly."""
        for beta in enumerate_radix_tuples(256, (2, 3, 4, 5, 8)):
            for k in range(beta.top):
                move = stage_perm_B(beta, k + 1).compose(stage_perm_B(beta, k).inverse())
                moved = conjugate_by_permutation(stage_twiddle_dif(beta, k), move)
                self.assertTrue(moved.equivalent(stage_twiddle_difw(beta, k)), f"{beta} k={k}")

    def test_dif_is_dual_of_dit(self):
        for radices in itertools.product((2, 3, 4), repeat=3):
            beta = RadixTuple(radices)
            dif, dit = plan_dif(beta), plan_dit(beta.star())
            for k, stage in enumerate(dif.stages):
                twin = dit.stages[beta.top - k]
                self.assertEqual(stage.pre_perm, twin.pre_perm)
                self.assertTrue(stage.twiddle.equivalent(twin.twiddle))

    def test_drop_trivial_stages(self):
        plan = plan_dit((3, 1, 2))
        trimmed = drop_trivial_stages(plan)
        self.assertEqual([s.radix for s in trimmed.stages], [2, 3])
        self.assertLess(assemble_dense(trimmed).max_abs_diff(dft_matrix(6)), ATOL)
        untouched = plan_dit((3, 2))
        self.assertIs(drop_trivial_stages(untouched), untouched)
        self.assertEqual(len(drop_trivial_stages(plan_dit((1, 1))).stages), 1)


class TestResourceCap(unittest.TestCase):
    @override_settings(FFT_DENSE_ASSEMBLY_MAX_N=16)
    def test_over_cap(self):
        with self.assertRaises(ResourceError):
            assemble_dense(plan_dit((4, 8)))
        with self.assertRaises(ResourceError):
            stage_dense(plan_dit((4, 8)), 0)
