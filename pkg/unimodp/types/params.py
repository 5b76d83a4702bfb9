# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

# pylint: disable=too-few-public-methods

"""
Langlands parameter records for U(1), U(1)×U(1) and U(1,1), in the L-group
and the C-group
"""

from typing import Optional, Tuple

from ..ffield import FFElem, Mat2
from .base import Datatype
from .chars import MultChar

TAG_ORDER = ("u1", "j", "endo", "torus", "c_endo", "c_torus")


class Group:
    U1 = "U(1)"
    J = "U(1)×U(1)"
    G = "U(1,1)"


class ParamBase(Datatype):
    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        lam = getattr(self, "lambda_", None)
        return (
            TAG_ORDER.index(self._tag or ""),
            getattr(self, "k", getattr(self, "r", -1)),
            getattr(self, "l", -1),
            -1 if lam is None else lam.sort_key,
        )


class LParam(ParamBase, union=True):
    group = ""


class U1Param(LParam, tag="u1"):
    """η_k"""

    group = Group.U1
    k: int

    def __str__(self) -> str:
        return f"η[{self.k}]"


class JParam(LParam, tag="j"):
    """η_{k,ℓ}"""

    group = Group.J
    k: int
    l: int

    def __str__(self) -> str:
        return f"η[{self.k},{self.l}]"


class EndoParam(LParam, tag="endo"):
    """φ_{k,ℓ}, through the endoscopic embedding"""

    group = Group.G
    k: int
    l: int

    @property
    def is_regular(self) -> bool:
        return self.k != self.l

    def __str__(self) -> str:
        return f"φ[{self.k},{self.l}]"


class TorusParam(LParam, tag="torus"):
    """ψ_{r,λ}, through the maximal torus"""

    group = Group.G
    r: int
    lambda_: FFElem

    def __str__(self) -> str:
        return f"ψ[{self.r},{self.lambda_}]"


class CParam(ParamBase, union=True):
    group = Group.G


class CEndoParam(CParam, tag="c_endo"):
    k: int
    l: int

    def __str__(self) -> str:
        return f"Cφ[{self.k},{self.l}]"


class CTorusParam(CParam, tag="c_torus"):
    r: int
    lambda_: FFElem

    def __str__(self) -> str:
        return f"Cψ[{self.r},{self.lambda_}]"


class ParamData(Datatype):
    """
    Finite data of a parameter: the dual group element paired with Fr_p, the
    characters on the diagonal of its restriction to the Galois group of
    Q_{p²}, and for C-parameters the central coordinate.
    """

    frobenius: Optional[Mat2]
    restriction: Tuple[MultChar, ...]
    central: Optional[MultChar] = None
