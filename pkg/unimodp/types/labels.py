# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

# pylint: disable=too-few-public-methods

"""
Labels for irreducible representations of U(1,1), SU(1,1) and GL₂
"""

from typing import Any, Iterable, Tuple

from ..ffield import FFElem
from .base import Datatype, decode, encode

TAG_ORDER = ("char", "steinberg", "principal_series", "supercuspidal")


class IrrepLabel(Datatype, union=True):
    """Isomorphism class of an irreducible representation of U(1,1)(Q_{p²}/Q_p)"""

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        lam = getattr(self, "lambda_", None)
        return (
            TAG_ORDER.index(self._tag or ""),
            getattr(self, "k", -1),
            getattr(self, "r", -1),
            -1 if lam is None else lam.sort_key,
        )

    @property
    def is_supercuspidal(self) -> bool:
        return False


class CharLabel(IrrepLabel, tag="char"):
    """ω^k ∘ det"""

    k: int

    def __str__(self) -> str:
        return f"Char({self.k})"


class SteinbergLabel(IrrepLabel, tag="steinberg"):
    """(ω^k ∘ det) ⊗ St"""

    k: int

    def __str__(self) -> str:
        return f"St({self.k})"


class PrincipalSeriesLabel(IrrepLabel, tag="principal_series"):
    """ind_B^G(μ_λ ω^r)"""

    r: int
    lambda_: FFElem

    def __str__(self) -> str:
        return f"PS({self.r}, {self.lambda_})"


class SupercuspidalLabel(IrrepLabel, tag="supercuspidal"):
    """(ω^k ∘ det) ⊗ π_r"""

    k: int
    r: int

    def __str__(self) -> str:
        return f"Sc({self.k}, {self.r})"

    @property
    def is_supercuspidal(self) -> bool:
        return True


class SLLabel(Datatype, union=True):
    """Isomorphism class of an irreducible representation of SU(1,1)"""


class SLTrivial(SLLabel, tag="trivial"):
    def __str__(self) -> str:
        return "1"


class SLSteinberg(SLLabel, tag="steinberg"):
    def __str__(self) -> str:
        return "St"


class SLPrincipalSeries(SLLabel, tag="principal_series"):
    r: int
    lambda_: FFElem

    def __str__(self) -> str:
        return f"PS_S({self.r}, {self.lambda_})"


class SLCusp(SLLabel, tag="cusp"):
    """π_r = π_{r,∞} ≅ π_{p−1−r,0}"""

    r: int

    def __str__(self) -> str:
        return f"π_{self.r}"


class GL2Label(Datatype):
    """π(r, 0, μ_ν ω^a) in normal form"""

    r: int
    nu: FFElem
    a: int

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return (self.r, self.nu.sort_key, self.a)

    def __str__(self) -> str:
        return f"π({self.r}, 0, μ[{self.nu}]ω^{self.a})"


class LPacket(Datatype):
    """A multiset of labels, kept sorted"""

    members: Tuple[IrrepLabel, ...]

    @classmethod
    def of(cls, labels: Iterable[IrrepLabel]) -> "LPacket":
        return cls(members=tuple(sorted(labels, key=lambda x: x.sort_key)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __add__(self, other: "LPacket") -> "LPacket":
        return LPacket.of(self.members + other.members)

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in self.members) + "}"

    @property
    def sort_key(self) -> tuple:
        return tuple(x.sort_key for x in self.members)

    def to_json_value(self) -> Any:
        return [encode(x) for x in self.members]

    @classmethod
    def from_json_value(cls, value: Any) -> "LPacket":
        return cls.of(decode(x, IrrepLabel) for x in value)
