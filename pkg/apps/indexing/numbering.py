"""
Mixed-radix numbering systems.

A RadixTuple stores its radices in written order (n_K, ..., n_0): the first
entry is the most significant radix. DigitVectors use the same order, so
``digits[i]`` is the digit of radix ``radices[i]`` and p_0 is the last entry.
The value of p in the system generated by alpha is

    n = p_0 + n_0 (p_1 + n_1 (p_2 + ... + n_{K-1} p_K)).
"""

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple, Union

from apps.common.exceptions import DomainError

INDEX_LIMIT = 2**63


@dataclass(frozen=True)
class RadixTuple:
    """Ordered radices (n_K, ..., n_0) generating a numbering system."""

    radices: Tuple[int, ...]

    def __post_init__(self):
        radices = tuple(int(r) for r in self.radices)
        if not radices:
            raise DomainError("a radix tuple needs at least one radix")
        if any(r < 1 for r in radices):
            raise DomainError(f"radices must be >= 1, got {radices}")
        if math.prod(radices) >= INDEX_LIMIT:
            raise DomainError("radix product exceeds the 64-bit index range")
        object.__setattr__(self, "radices", radices)

    @classmethod
    def of(cls, *radices: int) -> "RadixTuple":
        return cls(tuple(radices))

    def __iter__(self):
        return iter(self.radices)

    def __len__(self) -> int:
        return len(self.radices)

    def __str__(self) -> str:
        return "(" + ",".join(str(r) for r in self.radices) + ")"

    @property
    def size(self) -> int:
        """N = |alpha|."""
        return math.prod(self.radices)

    @property
    def top(self) -> int:
        """K, the index of the most significant radix."""
        return len(self.radices) - 1

    def radix(self, k: int) -> int:
        """n_k; positions above K read as radix 1."""
        if k < 0:
            raise DomainError(f"radix position must be >= 0, got {k}")
        if k > self.top:
            return 1
        return self.radices[self.top - k]

    def prefix_size(self, k: int) -> int:
        """N_k = n_0 * ... * n_k."""
        self.check_stage(k)
        return math.prod(self.radices[self.top - k :])

    def suffix_size(self, k: int) -> int:
        """M_k = m_k * ... * m_K; M_k = 1 for k > K."""
        if k < 0:
            raise DomainError(f"radix position must be >= 0, got {k}")
        if k > self.top:
            return 1
        return math.prod(self.radices[: self.top - k + 1])

    def check_stage(self, k: int) -> None:
        if not 0 <= k <= self.top:
            raise DomainError(f"stage {k} outside 0..{self.top} for {self}")

    def star(self) -> "RadixTuple":
        """alpha* = (n_0, ..., n_K)."""
        return RadixTuple(tuple(reversed(self.radices)))


@dataclass(frozen=True)
class DigitVector:
    """Digits (p_K, ..., p_0) matched with ``alpha``."""

    digits: Tuple[int, ...]
    alpha: RadixTuple

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        if len(digits) != len(self.alpha):
            raise DomainError(
                f"{len(digits)} digits do not match radix tuple {self.alpha}"
            )
        for digit, radix in zip(digits, self.alpha.radices):
            if not 0 <= digit < radix:
                raise DomainError(
                    f"digit {digit} out of range for radix {radix} in {self.alpha}"
                )
        object.__setattr__(self, "digits", digits)

    def digit(self, k: int) -> int:
        """p_k."""
        self.alpha.check_stage(k)
        return self.digits[self.alpha.top - k]

    def star(self) -> "DigitVector":
        """p* = (p_0, ..., p_K), matched with alpha*."""
        return DigitVector(tuple(reversed(self.digits)), self.alpha.star())


RadixLike = Union[RadixTuple, Sequence[int]]


def as_radix_tuple(alpha: RadixLike) -> RadixTuple:
    if isinstance(alpha, RadixTuple):
        return alpha
    return RadixTuple(tuple(alpha))


def radix_star(alpha: RadixLike) -> RadixTuple:
    return as_radix_tuple(alpha).star()


def digit_decode(n: int, alpha: RadixLike) -> DigitVector:
    alpha = as_radix_tuple(alpha)
    if not 0 <= n < alpha.size:
        raise DomainError(f"index {n} outside 0..{alpha.size - 1} for {alpha}")
    digits = []
    for radix in reversed(alpha.radices):
        n, digit = divmod(n, radix)
        digits.append(digit)
    return DigitVector(tuple(reversed(digits)), alpha)


def digit_encode(p: Union[DigitVector, Iterable[int]], alpha: RadixLike = None) -> int:
    if isinstance(p, DigitVector):
        if alpha is not None and as_radix_tuple(alpha) != p.alpha:
            raise DomainError(f"digits are matched with {p.alpha}, not {alpha}")
        vector = p
    else:
        if alpha is None:
            raise DomainError("a radix tuple is required to encode raw digits")
        vector = DigitVector(tuple(p), as_radix_tuple(alpha))
    value = 0
    for digit, radix in zip(vector.digits, vector.alpha.radices):
        value = value * radix + digit
    return value


def digit_reverse_digits(p: DigitVector) -> DigitVector:
    return p.star()


def rotated_radices(alpha: RadixLike, k: int) -> RadixTuple:
    """beta_k = (n_K, ..., n_{k+1}, n_0, n_1, ..., n_k)."""
    alpha = as_radix_tuple(alpha)
    alpha.check_stage(k)
    split = alpha.top - k
    head, low = alpha.radices[:split], alpha.radices[split:]
    return RadixTuple(head + tuple(reversed(low)))


def digit_rotation_address(alpha: RadixLike, k: int, n: int) -> int:
    """
    Image of n under the stage-k transposition A_k, computed on digits.

    n is read in the system beta_{k-1}, digit p_k is moved to the least
    significant end, and the result is read back in beta_k.
    """
    alpha = as_radix_tuple(alpha)
    alpha.check_stage(k)
    if k == 0:
        if not 0 <= n < alpha.size:
            raise DomainError(f"index {n} outside 0..{alpha.size - 1} for {alpha}")
        return n
    source = rotated_radices(alpha, k - 1)
    target = rotated_radices(alpha, k)
    digits = digit_decode(n, source).digits
    pos = alpha.top - k
    moved = digits[:pos] + digits[pos + 1 :] + (digits[pos],)
    return digit_encode(moved, target)


def enumerate_radix_tuples(max_n: int, choices: Sequence[int], max_len: int = None) -> Iterator[RadixTuple]:
    """Every ordered tuple over ``choices`` (all > 1) with product <= max_n."""
    choices = sorted(set(int(c) for c in choices))
    if not choices or choices[0] < 2:
        raise DomainError("radix choices must all be >= 2")

    def extend(prefix, size):
        for radix in choices:
            if size * radix > max_n:
                break
            candidate = prefix + (radix,)
            yield RadixTuple(candidate)
            if max_len is None or len(candidate) < max_len:
                yield from extend(candidate, size * radix)

    yield from extend((), 1)
