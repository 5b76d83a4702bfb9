# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Exact arithmetic in the tower F_p ⊂ F_q ⊂ F_{q²} ⊂ F_{p^{2k}}

Elements are kept in discrete-log form against one primitive element g of the
ambient field, so multiplication is exponent addition and addition goes
through a Zech logarithm table.  The ambient field itself is a `galois` field
built on its Conway polynomial, which also provides the coefficient-vector
form used for linear algebra.
"""

import logging
import re
from functools import cached_property
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence

import galois
import numpy as np

from .types.core import InternalDefect, PositiveInt, Prime

LOG = logging.getLogger(__name__)

ELEM_RE = re.compile(r"g\^(\d+)")


class FFElem(NamedTuple):
    """Field element as a power of the ambient generator; zero has no log"""

    log: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.log is None

    @property
    def sort_key(self) -> int:
        return -1 if self.log is None else self.log

    def __str__(self) -> str:
        if self.log is None:
            return "0"
        if self.log == 0:
            return "1"
        return f"g^{self.log}"

    def __repr__(self) -> str:
        return f"FFElem({self})"

    def to_json_value(self) -> str:
        return str(self)

    @classmethod
    def from_json_value(cls, value: Any) -> "FFElem":
        if isinstance(value, FFElem):
            return value
        text = str(value).strip()
        if text == "0":
            return cls(None)
        if text == "1":
            return cls(0)
        match = ELEM_RE.fullmatch(text)
        if not match:
            raise ValueError(f"invalid field element {value!r}")
        return cls(int(match.group(1)))


class Mat2(NamedTuple):
    """2×2 matrix [[a, b], [c, d]] over the tower"""

    a: FFElem
    b: FFElem
    c: FFElem
    d: FFElem

    @property
    def sort_key(self) -> tuple:
        return tuple(x.sort_key for x in self)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    def to_json_value(self) -> List[List[str]]:
        return [[str(self.a), str(self.b)], [str(self.c), str(self.d)]]

    @classmethod
    def from_json_value(cls, value: Any) -> "Mat2":
        (a, b), (c, d) = value
        return cls(*(FFElem.from_json_value(x) for x in (a, b, c, d)))


ZERO = FFElem(None)
ONE = FFElem(0)


class FieldTower:
    """
    The tower F_p ⊂ F_q ⊂ F_{q²} ⊂ F_{p^{2k}} with q = p^f and f | k.

    Immutable after construction.
    """

    def __init__(self, p: int, f: int = 1, k: int = 1) -> None:
        self.p = Prime(p)
        self.f = int(PositiveInt(f))
        self.k = int(PositiveInt(k))
        if self.k % self.f:
            raise ValueError(f"F_{{q²}} is not a subfield of F_{{p^{2 * k}}}: f={f}")

        self.q = self.p ** self.f
        self.degree = 2 * self.k
        self.order = self.p ** self.degree
        self.modulus = self.order - 1

        LOG.debug("building GF(%d^%d)", self.p, self.degree)
        self.GF = galois.GF(self.p ** self.degree)
        alpha = self.GF.primitive_element
        self.exp: List[int] = []
        x = self.GF(1)
        for _ in range(self.modulus):
            self.exp.append(int(x))
            x = x * alpha
        self.logs: Dict[int, int] = {v: i for i, v in enumerate(self.exp)}
        sums = self.GF(np.array(self.exp)) + self.GF(1)
        self.zech: List[Optional[int]] = [
            self.logs[int(v)] if int(v) else None for v in sums
        ]
        self._verify()

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, f={self.f}, k={self.k})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.f, self.k) == (other.p, other.f, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.k))

    def _verify(self) -> None:
        if len(self.logs) != self.modulus:
            raise InternalDefect(f"{self.GF.name} generator is not primitive")
        for d in self.layers:
            order = self.p ** d - 1
            gen = self.gen(d)
            if self.pow(gen, order) != ONE:
                raise InternalDefect(
                    f"layer {d} generator order does not divide {order}"
                )
            for ell in galois.factors(order)[0]:
                if self.pow(gen, order // int(ell)) == ONE:
                    raise InternalDefect(f"layer {d} generator has order < {order}")
        LOG.debug("%r verified layers %s", self, self.layers)

    @property
    def layers(self) -> List[int]:
        return [d for d in range(1, self.degree + 1) if self.degree % d == 0]

    @cached_property
    def polynomial(self) -> List[int]:
        """Ambient modulus coefficients, highest degree first"""
        return [int(c) for c in self.GF.irreducible_poly.coeffs]

    def layer_polynomial(self, d: int) -> List[int]:
        """Minimal polynomial of the layer generator, highest degree first"""
        poly = self.GF(self.to_int(self.gen(d))).minimal_poly()
        return [int(c) for c in poly.coeffs]

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "f": self.f, "k": self.k, "polynomial": self.polynomial}

    # layers

    def layer_index(self, d: int) -> int:
        if d < 1 or self.degree % d:
            raise ValueError(f"F_{{{self.p}^{d}}} is not a layer of {self!r}")
        return self.modulus // (self.p ** d - 1)

    def gen(self, d: Optional[int] = None) -> FFElem:
        return FFElem(self.layer_index(d or self.degree))

    def in_layer(self, x: FFElem, d: int) -> bool:
        return x.log is None or x.log % self.layer_index(d) == 0

    def layer_of(self, x: FFElem) -> int:
        return next(d for d in self.layers if self.in_layer(x, d))

    def layer_log(self, x: FFElem, d: int) -> int:
        if x.log is None:
            raise ValueError("zero has no discrete log")
        if not self.in_layer(x, d):
            raise ValueError(f"{x} is not in F_{{{self.p}^{d}}}")
        return x.log // self.layer_index(d)

    def layer_elements(self, d: int, nonzero: bool = False) -> List[FFElem]:
        """Layer elements in generator-power order, zero first"""
        index = self.layer_index(d)
        units = [FFElem(i * index) for i in range(self.p ** d - 1)]
        return units if nonzero else [ZERO] + units

    def check(self, x: FFElem, d: int, what: str = "element") -> FFElem:
        if not self.in_layer(x, d):
            raise ValueError(f"{what} {x} is not in F_{{{self.p}^{d}}}")
        return x

    # conversions

    def element(self, value: int) -> FFElem:
        """Element from the integer (polynomial basis) representation"""
        value = int(value)
        if value == 0:
            return ZERO
        if value not in self.logs:
            raise ValueError(f"{value!r} is not an element of {self.GF.name}")
        return FFElem(self.logs[value])

    def to_int(self, x: FFElem) -> int:
        return 0 if x.log is None else self.exp[x.log % self.modulus]

    def to_vector(self, x: FFElem) -> List[int]:
        return [int(c) for c in self.GF(self.to_int(x)).vector()]

    def from_vector(self, coeffs: Sequence[int]) -> FFElem:
        return self.element(int(self.GF.Vector(list(coeffs))))

    def array(self, values: Iterable[FFElem]) -> galois.FieldArray:
        return self.GF([self.to_int(x) for x in values])

    def from_array(self, values: Iterable[Any]) -> List[FFElem]:
        return [self.element(int(v)) for v in values]

    def parse(self, value: Any) -> FFElem:
        if isinstance(value, int):
            return self.element(value)
        x = FFElem.from_json_value(value)
        if x.log is not None and x.log >= self.modulus:
            raise ValueError(f"{value!r} exceeds the order of {self.GF.name}")
        return x

    # arithmetic

    @property
    def zero(self) -> FFElem:
        return ZERO

    @property
    def one(self) -> FFElem:
        return ONE

    @property
    def minus_one(self) -> FFElem:
        return FFElem(self.modulus // 2)

    def mul(self, x: FFElem, y: FFElem) -> FFElem:
        if x.log is None or y.log is None:
            return ZERO
        return FFElem((x.log + y.log) % self.modulus)

    def add(self, x: FFElem, y: FFElem) -> FFElem:
        if x.log is None:
            return y
        if y.log is None:
            return x
        z = self.zech[(y.log - x.log) % self.modulus]
        if z is None:
            return ZERO
        return FFElem((x.log + z) % self.modulus)

    def neg(self, x: FFElem) -> FFElem:
        return self.mul(x, self.minus_one)

    def sub(self, x: FFElem, y: FFElem) -> FFElem:
        return self.add(x, self.neg(y))

    def inv(self, x: FFElem) -> FFElem:
        if x.log is None:
            raise ZeroDivisionError("zero has no inverse")
        return FFElem(-x.log % self.modulus)

    def div(self, x: FFElem, y: FFElem) -> FFElem:
        return self.mul(x, self.inv(y))

    def pow(self, x: FFElem, e: int) -> FFElem:
        if x.log is None:
            if e < 0:
                raise ZeroDivisionError("zero has no inverse")
            return ONE if e == 0 else ZERO
        return FFElem(x.log * e % self.modulus)

    def sum(self, values: Iterable[FFElem]) -> FFElem:
        total = ZERO
        for x in values:
            total = self.add(total, x)
        return total

    def integer(self, n: int) -> FFElem:
        """Image of the integer n under Z → F_p"""
        n %= self.p
        return ZERO if n == 0 else self.element(n)

    def frob(self, x: FFElem, e: int = 1) -> FFElem:
        return self.pow(x, self.p ** e)

    def conj(self, x: FFElem) -> FFElem:
        """x ↦ x^q, the nontrivial automorphism of F_{q²}/F_q"""
        self.check(x, 2 * self.f, "conj of")
        return self.pow(x, self.q)

    def norm(self, x: FFElem) -> FFElem:
        """x ↦ x·x̄ from F_{q²}^× onto F_q^×"""
        if x.log is None:
            raise ValueError("norm of zero")
        self.check(x, 2 * self.f, "norm of")
        return self.pow(x, self.q + 1)

    def trace(self, x: FFElem) -> FFElem:
        return self.add(x, self.conj(x))

    def is_square(self, x: FFElem, d: Optional[int] = None) -> bool:
        """Whether x is a square in F_{p^d} (default the ambient field)"""
        if x.log is None:
            return True
        return self.layer_log(x, d or self.degree) % 2 == 0

    def sqrt(self, x: FFElem) -> FFElem:
        """The square root with the smaller discrete log"""
        if x.log is None:
            return ZERO
        if x.log % 2:
            raise ValueError(f"{x} is not a square in {self.GF.name}")
        return FFElem(x.log // 2)

    @cached_property
    def epsilon(self) -> FFElem:
        """First nonsquare of F_q^× in generator-power order"""
        return next(
            x
            for x in self.layer_elements(self.f, nonzero=True)
            if not self.is_square(x, self.f)
        )

    @cached_property
    def sqrt_epsilon(self) -> FFElem:
        root = self.sqrt(self.epsilon)
        return self.check(root, 2 * self.f, "square root of ε")

    # 2×2 matrices

    def mat(self, a: FFElem, b: FFElem, c: FFElem, d: FFElem) -> Mat2:
        return Mat2(a, b, c, d)

    @property
    def identity(self) -> Mat2:
        return Mat2(ONE, ZERO, ZERO, ONE)

    def diag(self, a: FFElem, d: FFElem) -> Mat2:
        return Mat2(a, ZERO, ZERO, d)

    def antidiag(self, b: FFElem, c: FFElem) -> Mat2:
        return Mat2(ZERO, b, c, ZERO)

    def mat_mul(self, x: Mat2, y: Mat2) -> Mat2:
        add, mul = self.add, self.mul
        return Mat2(
            add(mul(x.a, y.a), mul(x.b, y.c)),
            add(mul(x.a, y.b), mul(x.b, y.d)),
            add(mul(x.c, y.a), mul(x.d, y.c)),
            add(mul(x.c, y.b), mul(x.d, y.d)),
        )

    def mat_prod(self, *mats: Mat2) -> Mat2:
        result = self.identity
        for m in mats:
            result = self.mat_mul(result, m)
        return result

    def mat_det(self, x: Mat2) -> FFElem:
        return self.sub(self.mul(x.a, x.d), self.mul(x.b, x.c))

    def mat_adj(self, x: Mat2) -> Mat2:
        return Mat2(x.d, self.neg(x.b), self.neg(x.c), x.a)

    def mat_scale(self, s: FFElem, x: Mat2) -> Mat2:
        return Mat2(*(self.mul(s, v) for v in x))

    def mat_inv(self, x: Mat2) -> Mat2:
        det = self.mat_det(x)
        if det.log is None:
            raise ValueError(f"singular matrix {x}")
        return self.mat_scale(self.inv(det), self.mat_adj(x))

    def mat_star(self, x: Mat2) -> Mat2:
        """Conjugate transpose over F_{q²}/F_q"""
        return Mat2(self.conj(x.a), self.conj(x.c), self.conj(x.b), self.conj(x.d))

    def mat_trace(self, x: Mat2) -> FFElem:
        return self.add(x.a, x.d)


def field_make(p: int, f: int = 1, k: int = 1) -> FieldTower:
    """Build and verify the tower for q = p^f inside F_{p^{2k}}"""
    return FieldTower(p, f, k)


def conj(tower: FieldTower, x: FFElem) -> FFElem:
    return tower.conj(x)


def norm(tower: FieldTower, x: FFElem) -> FFElem:
    return tower.norm(x)
