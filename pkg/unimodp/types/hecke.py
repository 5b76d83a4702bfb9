# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

# pylint: disable=too-few-public-methods

"""
Hecke module records
"""

from stringcase import snakecase

from .base import Datatype


class IdempotentIndex(Datatype):
    """r mod q−1, naming χ_r(diag(a, a^{-1})) = a^r"""

    r: int
    q: int

    def __post_init__(self) -> None:
        if not 0 <= self.r <= self.q - 2:
            raise ValueError(f"idempotent index {self.r} outside [0, {self.q - 2}]")


class HeckeModule1D(Datatype, keys=snakecase):
    """
    One-dimensional module of the pro-p Iwahori Hecke algebra: e_r acts by 1,
    T_{n_s} by a_s and T_{n_s'} by a_s_prime (scalars of F_p, as integers).
    """

    module: str
    r: int
    a_s: int
    a_s_prime: int

    @property
    def label(self) -> int:
        return int(self.module.split("_", 1)[1])

    def __str__(self) -> str:
        return f"{self.module}(e_{self.r}; {self.a_s}, {self.a_s_prime})"
