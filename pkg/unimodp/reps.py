# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Label calculus for irreducible mod-p representations of U(1,1)(Q_{p²}/Q_p)

Representations are handled only through their isomorphism-class labels:
characters ω^k∘det, Steinberg twists, principal series ind(μ_λ ω^r), and
supercuspidals (ω^k∘det)⊗π_r.  Everything here works with q = p.
"""

import logging
from typing import Iterable, List, Optional, Set

from .ffield import FFElem, FieldTower
from .types.labels import (
    CharLabel,
    GL2Label,
    IrrepLabel,
    LPacket,
    PrincipalSeriesLabel,
    SLCusp,
    SLLabel,
    SLPrincipalSeries,
    SLSteinberg,
    SLTrivial,
    SteinbergLabel,
    SupercuspidalLabel,
)

LOG = logging.getLogger(__name__)


def char(tower: FieldTower, k: int) -> CharLabel:
    return CharLabel(k=k % (tower.p + 1))


def steinberg(tower: FieldTower, k: int) -> SteinbergLabel:
    return SteinbergLabel(k=k % (tower.p + 1))


def supercuspidal(tower: FieldTower, k: int, r: int) -> SupercuspidalLabel:
    if not 0 <= r <= tower.p - 1:
        raise ValueError(f"π_r needs 0 ≤ r ≤ {tower.p - 1}, got {r}")
    return SupercuspidalLabel(k=k % (tower.p + 1), r=r)


def principal_series(tower: FieldTower, r: int, lam: FFElem) -> PrincipalSeriesLabel:
    p = tower.p
    r %= p * p - 1
    if lam.is_zero:
        raise ValueError("λ must be a unit")
    if lam == tower.one and r % (p - 1) == 0:
        raise ValueError(f"ind(μ_1 ω^{r}) is reducible")
    return PrincipalSeriesLabel(r=r, lambda_=lam)


def classify(tower: FieldTower, degree: int = 1) -> List[IrrepLabel]:
    """All labels, with λ ranging over F_{p^degree}^×"""
    p = tower.p
    labels: List[IrrepLabel] = []
    for k in range(p + 1):
        labels.append(char(tower, k))
        labels.append(steinberg(tower, k))
        labels.extend(supercuspidal(tower, k, r) for r in range(p))
    for lam in tower.layer_elements(degree, nonzero=True):
        for r in range(p * p - 1):
            if lam == tower.one and r % (p - 1) == 0:
                continue
            labels.append(PrincipalSeriesLabel(r=r, lambda_=lam))
    labels.sort(key=lambda x: x.sort_key)
    LOG.debug("p=%d, λ ∈ F_%d^×: %d labels", p, p ** degree, len(labels))
    return labels


def twist_label(tower: FieldTower, x: IrrepLabel, j: int) -> IrrepLabel:
    """x ⊗ (ω^j ∘ det)"""
    if isinstance(x, CharLabel):
        return char(tower, x.k + j)
    if isinstance(x, SteinbergLabel):
        return steinberg(tower, x.k + j)
    if isinstance(x, SupercuspidalLabel):
        return supercuspidal(tower, x.k + j, x.r)
    if isinstance(x, PrincipalSeriesLabel):
        # det restricts to a^{1−p} on the diagonal torus
        return principal_series(tower, x.r + (1 - tower.p) * j, x.lambda_)
    raise TypeError(f"not a U(1,1) label: {x!r}")


def twist_packet(tower: FieldTower, packet: LPacket, j: int) -> LPacket:
    return LPacket.of(twist_label(tower, x, j) for x in packet)


def packet_of(tower: FieldTower, x: IrrepLabel) -> LPacket:
    """The GU(1,1)-orbit containing x"""
    if isinstance(x, SupercuspidalLabel):
        p = tower.p
        partner = supercuspidal(tower, x.k + x.r + 1, p - 1 - x.r)
        return LPacket.of([x, partner])
    return LPacket.of([x])


def packets(tower: FieldTower, degree: int = 1) -> List[LPacket]:
    seen: Set[LPacket] = set()
    result = []
    for x in classify(tower, degree):
        packet = packet_of(tower, x)
        if packet not in seen:
            seen.add(packet)
            result.append(packet)
    result.sort(key=lambda x: x.sort_key)
    return result


def pi_ss(tower: FieldTower, r: int, lam: FFElem) -> LPacket:
    """Semisimplification of π(r, λ) as a multiset of labels"""
    p = tower.p
    if not 0 <= r <= p - 1:
        raise ValueError(f"π(r, λ) needs 0 ≤ r ≤ {p - 1}, got {r}")
    if lam == tower.one and r == 0:
        return LPacket.of([char(tower, 0), steinberg(tower, 0)])
    if lam == tower.one and r == p - 1:
        return LPacket.of([char(tower, p), steinberg(tower, p)])
    return LPacket.of([principal_series(tower, -p * r, tower.inv(lam))])


def restrict_to_su(tower: FieldTower, x: IrrepLabel) -> SLLabel:
    if isinstance(x, CharLabel):
        return SLTrivial()
    if isinstance(x, SteinbergLabel):
        return SLSteinberg()
    if isinstance(x, PrincipalSeriesLabel):
        return SLPrincipalSeries(r=x.r % (tower.p - 1), lambda_=x.lambda_)
    if isinstance(x, SupercuspidalLabel):
        return SLCusp(r=x.r)
    raise TypeError(f"not a U(1,1) label: {x!r}")


def sl_cusp(p: int, r: int, at: str = "inf") -> SLCusp:
    """π_{r,∞} is π_r, and π_{r,0} ≅ π_{p−1−r,∞}"""
    if not 0 <= r <= p - 1:
        raise ValueError(f"r={r} outside [0, {p - 1}]")
    if at == "inf":
        return SLCusp(r=r)
    if at == "zero":
        return SLCusp(r=p - 1 - r)
    raise ValueError(f"unknown cusp {at!r}")


def gl2_label(
    tower: FieldTower, r: int, nu: Optional[FFElem] = None, a: int = 0
) -> GL2Label:
    if not 0 <= r <= tower.p - 1:
        raise ValueError(f"π(r, 0, χ) needs 0 ≤ r ≤ {tower.p - 1}, got {r}")
    nu = tower.one if nu is None else nu
    if nu.is_zero:
        raise ValueError("ν must be a unit")
    return GL2Label(r=r, nu=nu, a=a % (tower.p - 1))


def gl2_orbit(
    tower: FieldTower, r: int, nu: Optional[FFElem] = None, a: int = 0
) -> Set[GL2Label]:
    """
    {π(r,0,χ), π(r,0,χμ_{−1}), π(p−1−r,0,χω^r), π(p−1−r,0,χμ_{−1}ω^r)}
    """
    x = gl2_label(tower, r, nu, a)
    orbit = set()
    for flip in (False, True):
        shifted = gl2_label(tower, tower.p - 1 - x.r, x.nu, x.a + x.r) if flip else x
        orbit.add(shifted)
        orbit.add(gl2_label(tower, shifted.r, tower.neg(shifted.nu), shifted.a))
    return orbit


def gl2_normalize(
    tower: FieldTower, r: int, nu: Optional[FFElem] = None, a: int = 0
) -> GL2Label:
    return min(gl2_orbit(tower, r, nu, a), key=lambda x: x.sort_key)


def is_packet_partition(tower: FieldTower, labels: Iterable[IrrepLabel]) -> bool:
    """Every label lies in exactly one of the packets generated from the list"""
    labels = list(labels)
    members: List[IrrepLabel] = []
    for packet in {packet_of(tower, x) for x in labels}:
        members.extend(packet)
    return sorted(members, key=lambda x: x.sort_key) == sorted(
        labels, key=lambda x: x.sort_key
    )
