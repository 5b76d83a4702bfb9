# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

# pylint: disable=too-few-public-methods

"""
Character data records
"""

from ..ffield import FFElem
from .base import Datatype


class MultChar(Datatype):
    """μ_λ ω_n^r: a tame character of Q_{p^n}^× or of its Galois group"""

    n: int
    lambda_: FFElem
    r: int

    def __str__(self) -> str:
        return f"μ[{self.lambda_}]·ω{self.n}^{self.r}"

    @property
    def sort_key(self) -> tuple:
        return (self.n, self.r, self.lambda_.sort_key)


class U1Char(Datatype):
    """ω^k on the norm-one group U(1)"""

    k: int

    def __str__(self) -> str:
        return f"ω^{self.k}"
