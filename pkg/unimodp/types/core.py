# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

# pylint: disable=too-few-public-methods

"""
Validated scalars and shared constants
"""

from typing import Tuple, Union

import galois


class InternalDefect(AssertionError):
    """A computed invariant that cannot fail for valid input did fail"""


class Format:
    JSON = "json"
    CSV = "csv"
    MD = "md"

    ALL: Tuple[str, ...] = (JSON, CSV, MD)


class Variant:
    U = "U"
    SU = "SU"
    GU = "GU"
    U1 = "U1"

    ALL: Tuple[str, ...] = (U, SU, GU, U1)


class HalfTwist:
    STANDARD = "standard"
    ALTERNATE = "alternate"

    ALL: Tuple[str, ...] = (STANDARD, ALTERNATE)


class Int(int):
    _MIN = 0
    _MAX = 2 ** 31 - 1

    def __new__(cls, value: Union[str, int]):
        if isinstance(value, str):
            value = int(value)
        if value < cls._MIN:
            raise ValueError(f"{cls.__name__} {value!r} < {cls._MIN}")
        if value > cls._MAX:
            raise ValueError(f"{cls.__name__} {value!r} > {cls._MAX}")
        return int.__new__(cls, value)  # type: ignore

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({super().__repr__()})"


class PositiveInt(Int):
    _MIN = 1


class Prime(Int):
    """An odd prime"""

    _MIN = 3

    def __new__(cls, value: Union[str, int]):
        value = int(value)
        if value % 2 == 0 or not galois.is_prime(value):
            raise ValueError(f"{cls.__name__} {value!r} is not an odd prime")
        return super().__new__(cls, value)


def prime_power(q: int) -> Tuple[Prime, int]:
    """Split q = p^f with p an odd prime"""
    if q < 3 or not galois.is_prime_power(q):
        raise ValueError(f"q={q!r} is not a prime power")
    primes, exponents = galois.factors(q)
    return Prime(primes[0]), int(exponents[0])
