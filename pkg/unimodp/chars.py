# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
The (λ, r) calculus of tame characters

A character μ_λ ω_n^r of Q_{p^n}^× is stored as `MultChar(n, λ, r)` with r
reduced mod p^n − 1.  The same record stands for the Galois character under
reciprocity; the λ ↔ λ^{-1} flip between the two sides happens only in
`unimodp.langlands`.
"""

from typing import Optional

from .ffield import FFElem, FieldTower
from .types.chars import MultChar, U1Char

__all__ = [
    "MultChar",
    "U1Char",
    "bracket",
    "char_inverse",
    "char_mul",
    "char_pow",
    "extends_to_G",
    "extension",
    "frobenius_twist",
    "mult_char",
    "omega",
    "omega1",
    "restrict_E_to_F",
    "u1_char",
]


def mult_char(
    tower: FieldTower, n: int, lam: Optional[FFElem] = None, r: int = 0
) -> MultChar:
    if n not in (1, 2):
        raise ValueError(f"characters of Q_{{p^{n}}} are not supported")
    lam = tower.one if lam is None else lam
    if lam.is_zero:
        raise ValueError("unramified part must be a unit")
    return MultChar(n=n, lambda_=lam, r=r % (tower.p ** n - 1))


def omega(tower: FieldTower, n: int, r: int = 1) -> MultChar:
    return mult_char(tower, n, tower.one, r)


def omega1(tower: FieldTower) -> MultChar:
    """The mod-p cyclotomic character restricted to the Galois group of Q_{p²}"""
    return omega(tower, 2, tower.p + 1)


def u1_char(tower: FieldTower, k: int) -> U1Char:
    return U1Char(k=k % (tower.p + 1))


def char_mul(tower: FieldTower, a: MultChar, b: MultChar) -> MultChar:
    if a.n != b.n:
        raise ValueError(f"cannot multiply characters of degree {a.n} and {b.n}")
    return mult_char(tower, a.n, tower.mul(a.lambda_, b.lambda_), a.r + b.r)


def char_pow(tower: FieldTower, a: MultChar, e: int) -> MultChar:
    return mult_char(tower, a.n, tower.pow(a.lambda_, e), a.r * e)


def char_inverse(tower: FieldTower, a: MultChar) -> MultChar:
    return char_pow(tower, a, -1)


def frobenius_twist(tower: FieldTower, a: MultChar) -> MultChar:
    """Conjugation by Frobenius raises the tame part to the p-th power"""
    return mult_char(tower, a.n, a.lambda_, tower.p * a.r)


def restrict_E_to_F(tower: FieldTower, a: MultChar) -> MultChar:
    if a.n != 2:
        raise ValueError(f"expected a character of Q_{{p²}}^×, got degree {a.n}")
    return mult_char(tower, 1, a.lambda_, a.r)


def extends_to_G(tower: FieldTower, a: MultChar) -> bool:
    """Whether μ_λ ω^r on the diagonal torus comes from a character of U(1)"""
    if a.n != 2:
        raise ValueError(f"expected a character of Q_{{p²}}^×, got degree {a.n}")
    return a.lambda_ == tower.one and a.r % (tower.p - 1) == 0


def extension(tower: FieldTower, a: MultChar) -> U1Char:
    if not extends_to_G(tower, a):
        raise ValueError(f"{a} does not extend to U(1,1)")
    return u1_char(tower, a.r // (tower.p - 1))


def bracket(m: int, p: int) -> int:
    """The representative of m mod p+1 in [0, p−1]"""
    value = m % (p + 1)
    if value == p:
        raise ValueError(f"bracket undefined: {m} ≡ {p} (mod {p + 1})")
    return value
