import itertools
import math
import unittest

from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from apps.common.exceptions import DomainError
from apps.indexing.numbering import (
    DigitVector,
    RadixTuple,
    digit_decode,
    digit_encode,
    digit_reverse_digits,
    digit_rotation_address,
    radix_star,
    rotated_radices,
)

radix_tuples = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4).map(
    lambda radices: RadixTuple(tuple(radices))
)


class TestRadixTuple(unittest.TestCase):
    def test_sizes(self):
        alpha = RadixTuple.of(5, 3, 2)
        self.assertEqual(alpha.size, 30)
        self.assertEqual(alpha.top, 2)
        self.assertEqual(alpha.radix(0), 2)
        self.assertEqual(alpha.radix(2), 5)
        self.assertEqual(alpha.radix(3), 1)
        self.assertEqual([alpha.prefix_size(k) for k in range(3)], [2, 6, 30])
        self.assertEqual([alpha.suffix_size(k) for k in range(5)], [30, 15, 5, 1, 1])

    def test_rejects_bad_radices(self):
        with self.assertRaises(DomainError):
            RadixTuple(())
        with self.assertRaises(DomainError):
            RadixTuple.of(2, 0)
        with self.assertRaises(DomainError):
            RadixTuple.of(2**40, 2**40)

    def test_radix_one_allowed(self):
        self.assertEqual(RadixTuple.of(1).size, 1)
        self.assertEqual(RadixTuple.of(3, 1, 2).size, 6)

    def test_stage_out_of_range(self):
        with self.assertRaises(DomainError):
            RadixTuple.of(2, 2).prefix_size(2)

    @given(radix_tuples)
    def test_star_is_involution(self, alpha):
        self.assertEqual(alpha.star().star(), alpha)
        self.assertEqual(radix_star(alpha).radices, tuple(reversed(alpha.radices)))


class TestDigits(unittest.TestCase):
    def test_decode_examples(self):
        self.assertEqual(digit_decode(5, (3, 2)).digits, (2, 1))
        self.assertEqual(digit_decode(0, (4, 3, 2)).digits, (0, 0, 0))
        self.assertEqual(digit_decode(7, (2, 2, 2)).digits, (1, 1, 1))

    def test_encode_examples(self):
        self.assertEqual(digit_encode((2, 1), (3, 2)), 5)
        self.assertEqual(digit_encode((0, 0, 0), (5, 3, 2)), 0)

    def test_decode_out_of_range(self):
        with self.assertRaises(DomainError):
            digit_decode(6, (3, 2))
        with self.assertRaises(DomainError):
            digit_decode(-1, (3, 2))

    def test_encode_digit_out_of_range(self):
        with self.assertRaises(DomainError):
            digit_encode((3, 0), (3, 2))

    def test_digit_accessor(self):
        p = DigitVector((2, 1), RadixTuple.of(3, 2))
        self.assertEqual(p.digit(0), 1)
        self.assertEqual(p.digit(1), 2)
        self.assertEqual(digit_reverse_digits(p).digits, (1, 2))
        self.assertEqual(digit_reverse_digits(p).alpha, RadixTuple.of(2, 3))

    def test_encode_rejects_mismatched_tuple(self):
        p = digit_decode(3, (2, 2))
        with self.assertRaises(DomainError):
            digit_encode(p, (4,))

    @given(radix_tuples, st.data())
    def test_round_trip(self, alpha, data):
        n = data.draw(st.integers(min_value=0, max_value=alpha.size - 1))
        self.assertEqual(digit_encode(digit_decode(n, alpha)), n)

    @given(radix_tuples)
    def test_positional_formula(self, alpha):
        for n in range(alpha.size):
            p = digit_decode(n, alpha)
            value = 0
            for k in range(alpha.top, -1, -1):
                value = p.digit(k) + alpha.radix(k) * value
            self.assertEqual(value, n)


class TestDigitRotation(unittest.TestCase):
    def test_rotated_radices(self):
        alpha = RadixTuple.of(5, 4, 3, 2)
        self.assertEqual(rotated_radices(alpha, 0), alpha)
        self.assertEqual(rotated_radices(alpha, 1).radices, (5, 4, 2, 3))
        self.assertEqual(rotated_radices(alpha, 3).radices, (2, 3, 4, 5))

    def test_stage_zero_is_identity(self):
        for n in range(6):
            self.assertEqual(digit_rotation_address((3, 2), 0, n), n)

    def test_two_by_two(self):
        images = [digit_rotation_address((2, 2), 1, n) for n in range(4)]
        self.assertEqual(images, [0, 2, 1, 3])

    def test_is_bijection(self):
        for radices in itertools.product((2, 3, 4), repeat=3):
            alpha = RadixTuple(radices)
            for k in range(len(radices)):
                images = sorted(digit_rotation_address(alpha, k, n) for n in range(alpha.size))
                self.assertEqual(images, list(range(math.prod(radices))))
