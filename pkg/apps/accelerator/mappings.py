"""
Data-to-bank assignments.

A mapping turns word addresses 0..N-1 into bank ids 0..R-1. The bank-local
row of an address is address // R in every shipped layout.
"""

from dataclasses import dataclass
from typing import Callable, Dict

import numpy as np

from apps.accelerator.config import pure_radix_exponent
from apps.common.exceptions import ConfigError, DomainError

BankFunction = Callable[[np.ndarray, int], np.ndarray]


@dataclass(frozen=True)
class BankMapping:
    name: str
    radix: int
    function: BankFunction
    requires_pure_radix: bool = False

    def banks(self, addresses, n: int) -> np.ndarray:
        addresses = np.asarray(addresses, dtype=np.int64)
        if addresses.size and (addresses.min() < 0 or addresses.max() >= n):
            raise DomainError(f"addresses outside 0..{n - 1}")
        if self.requires_pure_radix:
            pure_radix_exponent(n, self.radix)
        banks = np.asarray(self.function(addresses, n), dtype=np.int64)
        if banks.size and (banks.min() < 0 or banks.max() >= self.radix):
            raise ConfigError(f"mapping {self.name} produced a bank outside 0..{self.radix - 1}")
        return banks

    def rows(self, addresses) -> np.ndarray:
        return np.asarray(addresses, dtype=np.int64) // self.radix


def digit_sum_mapping(radix: int) -> BankMapping:
    """bank(a) = (sum of the base-R digits of a) mod R; needs N = R^q."""
    if radix < 2:
        raise ConfigError(f"bank count must be >= 2, got {radix}")

    def digit_sum(addresses: np.ndarray, n: int) -> np.ndarray:
        rest = addresses.copy()
        total = np.zeros_like(rest)
        while np.any(rest):
            total += rest % radix
            rest //= radix
        return total % radix

    return BankMapping("digit-sum", radix, digit_sum, requires_pure_radix=True)


def address_mod_mapping(radix: int) -> BankMapping:
    """bank(a) = a mod R."""
    if radix < 2:
        raise ConfigError(f"bank count must be >= 2, got {radix}")
    return BankMapping("mod", radix, lambda addresses, n: addresses % radix)


MAPPINGS: Dict[str, Callable[[int], BankMapping]] = {
    "digit-sum": digit_sum_mapping,
    "mod": address_mod_mapping,
}


def get_mapping(name: str, radix: int) -> BankMapping:
    try:
        factory = MAPPINGS[name]
    except KeyError:
        raise ConfigError(f"unknown bank mapping {name!r}; choose from {', '.join(sorted(MAPPINGS))}")
    return factory(radix)
