# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
C-group parameters for U(1,1)

The C-group is (GL₂ × F̄_p^×)/⟨(−id, −1)⟩ ⋊ Galois.  A parameter carries
the GL₂ data of an L-parameter twisted by a square root of ω₁, plus the central
coordinate, which is that square root.  Conjugation fixes the central
coordinate, and d = (central)² must be ω₁.
"""

import logging
from typing import Dict, List, Tuple, Union

from .chars import mult_char, omega1
from .ffield import FFElem, FieldTower, Mat2
from .langlands import (
    correspond,
    endo,
    intertwines,
    load_param,
    param_classes,
    param_orbit,
    torus,
)
from .types.chars import MultChar
from .types.core import HalfTwist
from .types.labels import LPacket
from .types.params import CEndoParam, CParam, CTorusParam, LParam, ParamData
from .types.reports import Check, Report

LOG = logging.getLogger(__name__)


def half_exponent(tower: FieldTower, half: str = HalfTwist.STANDARD) -> int:
    """Exponent h with ω₂^h a square root of ω₁ = ω₂^{p+1}"""
    p = tower.p
    if half == HalfTwist.STANDARD:
        return (p + 1) // 2
    if half == HalfTwist.ALTERNATE:
        return (p + 1) // 2 + (p * p - 1) // 2
    raise ValueError(f"unknown half twist {half!r}, expected one of {HalfTwist.ALL}")


def c_endo(tower: FieldTower, k: int, l: int) -> CEndoParam:
    return CEndoParam(k=k % (tower.p + 1), l=l % (tower.p + 1))


def c_torus(tower: FieldTower, r: int, lam: FFElem) -> CTorusParam:
    if lam.is_zero:
        raise ValueError("λ must be a unit")
    return CTorusParam(r=r % (tower.p ** 2 - 1), lambda_=lam)


def c_param(tower: FieldTower, variant: str, *indices: Union[int, FFElem]) -> CParam:
    """c_param(tower, "c_endo", k, l) or c_param(tower, "c_torus", r, λ)"""
    if variant == "c_endo" and len(indices) == 2:
        k, l = indices
        return c_endo(tower, int(k), int(l))  # type: ignore
    if variant == "c_torus" and len(indices) == 2:
        r, lam = indices
        if isinstance(lam, int):
            lam = tower.element(lam)
        return c_torus(tower, int(r), lam)  # type: ignore
    raise ValueError(f"cannot build a C-parameter from {variant!r} {indices!r}")


def c_normalize(tower: FieldTower, a: CParam) -> CParam:
    if isinstance(a, CEndoParam):
        return c_endo(tower, a.k, a.l)
    if isinstance(a, CTorusParam):
        return c_torus(tower, a.r, a.lambda_)
    raise TypeError(f"not a C-parameter: {a!r}")


def parse_c_param(tower: FieldTower, text: str) -> CParam:
    return c_normalize(tower, load_param(tower, text, CParam))


def c_frobenius_image(tower: FieldTower, a: CParam) -> Mat2:
    if isinstance(a, CEndoParam):
        return tower.antidiag(tower.minus_one, tower.one)
    if isinstance(a, CTorusParam):
        return tower.diag(tower.one, a.lambda_)
    raise TypeError(f"not a C-parameter: {a!r}")


def c_central(tower: FieldTower, half: str = HalfTwist.STANDARD) -> MultChar:
    return mult_char(tower, 2, tower.one, half_exponent(tower, half))


def c_restriction(
    tower: FieldTower, a: CParam, half: str = HalfTwist.STANDARD
) -> Tuple[MultChar, MultChar]:
    """GL₂ part of the restriction to the Galois group of Q_{p²}"""
    p = tower.p
    h = half_exponent(tower, half)
    if isinstance(a, CEndoParam):
        return (
            mult_char(tower, 2, tower.minus_one, -1 + (1 - p) * a.k + h),
            mult_char(tower, 2, tower.minus_one, -1 + (1 - p) * a.l + h),
        )
    if isinstance(a, CTorusParam):
        return (
            mult_char(tower, 2, tower.inv(a.lambda_), a.r + h),
            mult_char(tower, 2, a.lambda_, -p * a.r - (p + 1) + h),
        )
    raise TypeError(f"not a C-parameter: {a!r}")


def c_param_data(
    tower: FieldTower, a: CParam, half: str = HalfTwist.STANDARD
) -> ParamData:
    return ParamData(
        frobenius=c_frobenius_image(tower, a),
        restriction=c_restriction(tower, a, half),
        central=c_central(tower, half),
    )


def c_d(tower: FieldTower, a: CParam, half: str = HalfTwist.STANDARD) -> MultChar:
    """Character data of d∘φ, the square of the central coordinate"""
    central = c_param_data(tower, a, half).central
    assert central is not None
    square = tower.mul(central.lambda_, central.lambda_)
    return mult_char(tower, 2, square, 2 * central.r)


def c_equiv(tower: FieldTower, a: CParam, b: CParam) -> bool:
    """Closed-form equivalence, the L-group rules shifted by the central twist"""
    a, b = c_normalize(tower, a), c_normalize(tower, b)
    p = tower.p
    if isinstance(a, CTorusParam) and isinstance(b, CEndoParam):
        a, b = b, a
    if isinstance(a, CEndoParam) and isinstance(b, CEndoParam):
        return {a.k, a.l} == {b.k, b.l}
    if isinstance(a, CTorusParam) and isinstance(b, CTorusParam):
        if a == b:
            return True
        return (
            b.r == (-p * a.r - (p + 1)) % (p * p - 1)
            and b.lambda_ == tower.inv(a.lambda_)
        )
    if isinstance(a, CEndoParam) and isinstance(b, CTorusParam):
        return (
            a.k == a.l
            and b.r == (-1 + (1 - p) * a.k) % (p * p - 1)
            and b.lambda_ == tower.minus_one
        )
    raise TypeError(f"cannot compare {a!r} with {b!r}")


def c_intertwiner_oracle(
    tower: FieldTower, a: CParam, b: CParam, half: str = HalfTwist.STANDARD
) -> bool:
    """Central coordinates agree and the GL₂ data are intertwined"""
    x, y = c_param_data(tower, a, half), c_param_data(tower, b, half)
    if x.central != y.central:
        return False
    assert x.frobenius is not None and y.frobenius is not None
    return intertwines(tower, x.frobenius, x.restriction, y.frobenius, y.restriction)


def to_l_param(tower: FieldTower, a: CParam) -> LParam:
    """The L-parameter with the same packet: CTorus(r, λ) ↦ ψ_{r+1,λ}"""
    if isinstance(a, CEndoParam):
        return endo(tower, a.k, a.l)
    if isinstance(a, CTorusParam):
        return torus(tower, a.r + 1, a.lambda_)
    raise TypeError(f"not a C-parameter: {a!r}")


def c_correspond(tower: FieldTower, a: CParam) -> LPacket:
    return correspond(tower, to_l_param(tower, c_normalize(tower, a)))


def c_orbit(tower: FieldTower, a: CParam) -> List[CParam]:
    p = tower.p
    a = c_normalize(tower, a)
    if isinstance(a, CEndoParam):
        orbit: List[CParam] = [a, c_endo(tower, a.l, a.k)]
        if a.k == a.l:
            singular = c_torus(tower, -1 + (1 - p) * a.k, tower.minus_one)
            orbit.extend(c_orbit(tower, singular))
    elif isinstance(a, CTorusParam):
        orbit = [a, c_torus(tower, -p * a.r - (p + 1), tower.inv(a.lambda_))]
        if a.lambda_ == tower.minus_one:
            for k in range(p + 1):
                if (-1 + (1 - p) * k - a.r) % (p * p - 1) == 0:
                    orbit.append(c_endo(tower, k, k))
    else:
        raise TypeError(f"not a C-parameter: {a!r}")
    return sorted(set(orbit), key=lambda x: x.sort_key)


def c_params(tower: FieldTower, degree: int = 2) -> List[CParam]:
    p = tower.p
    params: List[CParam] = [
        c_endo(tower, k, l) for k in range(p + 1) for l in range(p + 1)
    ]
    params.extend(
        c_torus(tower, r, lam)
        for lam in tower.layer_elements(degree, nonzero=True)
        for r in range(p * p - 1)
    )
    return params


def c_param_classes(
    tower: FieldTower, degree: int = 2
) -> List[Tuple[CParam, Tuple[CParam, ...]]]:
    classes: Dict[CParam, Tuple[CParam, ...]] = {}
    for a in c_params(tower, degree):
        orbit = tuple(c_orbit(tower, a))
        classes.setdefault(orbit[0], orbit)
    return sorted(classes.items(), key=lambda item: item[0].sort_key)


def c_sweep(
    tower: FieldTower, degree: int = 2, half: str = HalfTwist.STANDARD
) -> Report:
    """d-map values, oracle agreement and class matching against the L-layer"""
    p = tower.p
    params = c_params(tower, degree)
    checks: List[Check] = []

    target = omega1(tower)
    bad_d = [a for a in params if c_d(tower, a, half) != target]
    checks.append(
        Check(
            name="d∘φ = ω₁",
            passed=not bad_d,
            detail=f"{len(params)} parameters, {half} square root"
            + (f", first failure {bad_d[0]}" if bad_d else ""),
        )
    )

    disagreements = [
        (a, b)
        for a in params
        for b in params
        if c_intertwiner_oracle(tower, a, b, half) != c_equiv(tower, a, b)
    ]
    detail = f"{len(params) ** 2} pairs"
    if disagreements:
        a, b = disagreements[0]
        detail += f", {len(disagreements)} disagree, first {a} vs {b}"
    checks.append(
        Check(name="C-oracle agreement", passed=not disagreements, detail=detail)
    )

    c_classes = c_param_classes(tower, degree)
    l_orbits = {orbit for _, orbit in param_classes(tower, degree)}
    shifted = {
        tuple(param_orbit(tower, to_l_param(tower, rep))) for rep, _ in c_classes
    }
    checks.append(
        Check(
            name="C-classes match L-classes under r ↦ r+1",
            passed=len(c_classes) == len(l_orbits) and shifted == l_orbits,
            detail=f"{len(c_classes)} C-classes, {len(l_orbits)} L-classes",
        )
    )

    mismatched = [
        rep
        for rep, orbit in c_classes
        if any(c_correspond(tower, x) != c_correspond(tower, rep) for x in orbit)
    ]
    checks.append(
        Check(
            name="c_correspond is constant on classes",
            passed=not mismatched,
            detail=f"{len(c_classes)} classes"
            + (f", first failure {mismatched[0]}" if mismatched else ""),
        )
    )
    LOG.info("p=%d: C-layer sweep over %d parameters", p, len(params))
    return Report(title=f"C-group, p={p}", checks=tuple(checks))
