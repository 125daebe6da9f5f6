import itertools
import random
import unittest

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from apps.common.exceptions import DomainError
from apps.indexing.numbering import RadixTuple, digit_rotation_address
from apps.indexing.permutations import (
    IndexPermutation,
    digit_reverse_perm,
    stage_perm_A,
    stage_perm_B,
    stride_perm,
)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class TestIndexPermutation(unittest.TestCase):
    def test_rejects_non_bijection(self):
        with self.assertRaises(DomainError):
            IndexPermutation(np.array([0, 0, 1]))
        with self.assertRaises(DomainError):
            IndexPermutation(np.array([1, 2, 3]))
        with self.assertRaises(DomainError):
            IndexPermutation(np.array([], dtype=np.int64))

    def test_forward_is_read_only(self):
        perm = stride_perm(6, 2)
        with self.assertRaises(ValueError):
            perm.forward[0] = 1

    def test_inverse_and_compose(self):
        perm = IndexPermutation(np.array([2, 0, 3, 1]))
        self.assertTrue(perm.compose(perm.inverse()).is_identity)
        self.assertTrue(perm.inverse().compose(perm).is_identity)
        for n in range(4):
            self.assertEqual(perm.inverse()(perm(n)), n)

    def test_compose_applies_argument_first(self):
        p = IndexPermutation(np.array([1, 2, 0]))
        q = IndexPermutation(np.array([0, 2, 1]))
        self.assertEqual(p.compose(q).tolist(), [p(q(n)) for n in range(3)])

    def test_kron_identity(self):
        perm = IndexPermutation(np.array([1, 0]))
        self.assertEqual(perm.kron_identity(3).tolist(), [1, 0, 3, 2, 5, 4])

    def test_cycle_leaders(self):
        perm = IndexPermutation(np.array([1, 2, 0, 3, 5, 4]))
        self.assertEqual(perm.cycle_leaders, (0, 4))
        self.assertEqual(IndexPermutation.identity(5).cycle_leaders, ())

    def test_call_out_of_range(self):
        with self.assertRaises(DomainError):
            IndexPermutation.identity(3)(3)


class TestStridePerm(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(stride_perm(6, 2).tolist(), [0, 2, 4, 1, 3, 5])
        self.assertEqual(stride_perm(6, 2)(4), 3)
        self.assertTrue(stride_perm(7, 7).is_identity)
        self.assertTrue(stride_perm(7, 1).is_identity)

    def test_non_divisor(self):
        with self.assertRaises(DomainError):
            stride_perm(6, 4)

    def test_inverse_is_complementary_stride(self):
        for n in range(1, 257):
            for k in divisors(n):
                self.assertEqual(stride_perm(n, k).inverse(), stride_perm(n, n // k))


class TestDigitReversal(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(digit_reverse_perm((2, 2)).tolist(), [0, 2, 1, 3])
        self.assertTrue(digit_reverse_perm((7,)).is_identity)
        self.assertEqual(digit_reverse_perm((2, 3))(1), 3)

    def test_pair_is_stride(self):
        for m, n in itertools.product(range(1, 9), repeat=2):
            self.assertEqual(digit_reverse_perm((m, n)), stride_perm(m * n, n))

    @given(st.lists(st.sampled_from([1, 2, 3, 4, 5, 8]), min_size=1, max_size=4))
    def test_star_pair_is_inverse(self, radices):
        alpha = RadixTuple(tuple(radices))
        product = digit_reverse_perm(alpha.star()).compose(digit_reverse_perm(alpha))
        self.assertTrue(product.is_identity)


class TestStagePerms(unittest.TestCase):
    def test_A_examples(self):
        self.assertTrue(stage_perm_A((2, 2), 0).is_identity)
        self.assertEqual(stage_perm_A((2, 2), 1).tolist(), [0, 2, 1, 3])

    def test_B_examples(self):
        self.assertTrue(stage_perm_B((2, 2), 1).is_identity)
        self.assertEqual(stage_perm_B((2, 2), 0), stride_perm(4, 2))

    def test_stage_out_of_range(self):
        with self.assertRaises(DomainError):
            stage_perm_A((2, 2), 2)
        with self.assertRaises(DomainError):
            stage_perm_B((2, 2), -1)

    def test_B_is_A_of_reversed_tuple(self):
        for radices in itertools.product((1, 2, 3, 5), repeat=3):
            beta = RadixTuple(radices)
            for k in range(3):
                self.assertEqual(stage_perm_B(beta, k), stage_perm_A(beta.star(), 2 - k))

    def test_A_matches_digit_rotation(self):
        rng = random.Random(5)
        for _ in range(25):
            radices = []
            while True:
                candidate = radices + [rng.choice([2, 3, 4, 5])]
                if np.prod(candidate) > 1024:
                    break
                radices = candidate
            alpha = RadixTuple(tuple(radices))
            for k in range(alpha.top + 1):
                perm = stage_perm_A(alpha, k)
                for n in range(alpha.size):
                    self.assertEqual(perm(n), digit_rotation_address(alpha, k, n))
