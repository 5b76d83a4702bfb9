# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Mod-p Langlands parameters for U(1), U(1)×U(1) and U(1,1)

A parameter is kept as finite data: the dual group element paired with Fr_p
and the diagonal characters of its restriction to the Galois group of Q_{p²}.
Frobenius acts on GL₂ through the pinned automorphism
Θ(g) = Φ₂(gᵀ)^{-1}Φ₂^{-1} = g / det g, so conjugating A·Fr_p by g gives
g·A·adj(g).
"""

import json
import logging
from collections import Counter
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Type, TypeVar

from .chars import bracket, frobenius_twist, mult_char, u1_char
from .ffield import FFElem, FieldTower, Mat2
from .reps import packets, pi_ss, supercuspidal, twist_packet
from .types.base import decode
from .types.chars import MultChar, U1Char
from .types.core import InternalDefect
from .types.labels import LPacket
from .types.params import (
    EndoParam,
    Group,
    JParam,
    LParam,
    ParamData,
    TorusParam,
    U1Param,
)
from .types.reports import Check, Report

LOG = logging.getLogger(__name__)

T = TypeVar("T")


def u1(tower: FieldTower, k: int) -> U1Param:
    return U1Param(k=k % (tower.p + 1))


def j_param(tower: FieldTower, k: int, l: int) -> JParam:
    return JParam(k=k % (tower.p + 1), l=l % (tower.p + 1))


def endo(tower: FieldTower, k: int, l: int) -> EndoParam:
    return EndoParam(k=k % (tower.p + 1), l=l % (tower.p + 1))


def torus(tower: FieldTower, r: int, lam: FFElem) -> TorusParam:
    if lam.is_zero:
        raise ValueError("λ must be a unit")
    return TorusParam(r=r % (tower.p ** 2 - 1), lambda_=lam)


def normalize(tower: FieldTower, a: LParam) -> LParam:
    if isinstance(a, U1Param):
        return u1(tower, a.k)
    if isinstance(a, JParam):
        return j_param(tower, a.k, a.l)
    if isinstance(a, EndoParam):
        return endo(tower, a.k, a.l)
    if isinstance(a, TorusParam):
        return torus(tower, a.r, a.lambda_)
    raise TypeError(f"not a Langlands parameter: {a!r}")


def load_param(tower: FieldTower, text: str, root: Type[T]) -> T:
    """Decode a tagged parameter, accepting λ as "g^e" or as an integer"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"parameter is not valid json: {e}") from None
    if not isinstance(data, dict):
        raise ValueError(f"parameter must be a json object, got {text!r}")
    if isinstance(data.get("lambda"), int):
        data["lambda"] = str(tower.element(data["lambda"]))
    elif "lambda" in data:
        data["lambda"] = str(tower.parse(data["lambda"]))
    return decode(data, root)


def parse_param(tower: FieldTower, text: str) -> LParam:
    return normalize(tower, load_param(tower, text, LParam))


def require_g(a: LParam) -> LParam:
    if a.group != Group.G:
        raise ValueError(f"{a} is not a parameter for U(1,1)")
    return a


def theta(tower: FieldTower, g: Mat2) -> Mat2:
    """Frobenius action on the dual group: g ↦ g / det g"""
    return tower.mat_scale(tower.inv(tower.mat_det(g)), g)


def frobenius_image(tower: FieldTower, a: LParam) -> Mat2:
    require_g(a)
    if isinstance(a, EndoParam):
        return tower.antidiag(tower.minus_one, tower.one)
    if isinstance(a, TorusParam):
        return tower.diag(tower.one, a.lambda_)
    raise TypeError(f"not a Langlands parameter: {a!r}")


def restriction(tower: FieldTower, a: LParam) -> Tuple[MultChar, ...]:
    """Diagonal characters of the restriction to the Galois group of Q_{p²}"""
    p = tower.p
    if isinstance(a, U1Param):
        return (mult_char(tower, 2, tower.one, (1 - p) * a.k),)
    if isinstance(a, JParam):
        return (
            mult_char(tower, 2, tower.one, (1 - p) * a.k),
            mult_char(tower, 2, tower.one, (1 - p) * a.l),
        )
    if isinstance(a, EndoParam):
        return (
            mult_char(tower, 2, tower.minus_one, (1 - p) * a.k),
            mult_char(tower, 2, tower.minus_one, (1 - p) * a.l),
        )
    if isinstance(a, TorusParam):
        return (
            mult_char(tower, 2, tower.inv(a.lambda_), a.r),
            mult_char(tower, 2, a.lambda_, -p * a.r),
        )
    raise TypeError(f"not a Langlands parameter: {a!r}")


def param_data(tower: FieldTower, a: LParam) -> ParamData:
    frobenius = frobenius_image(tower, a) if a.group == Group.G else None
    return ParamData(frobenius=frobenius, restriction=restriction(tower, a))


def is_admissible(tower: FieldTower, a: LParam) -> bool:
    """
    The finite data glue to a homomorphism: Fr_p² maps to A·Θ(A), whose
    eigenvalues are the unramified parts of the restriction, and conjugating
    the restriction by Fr_p matches the twisted restriction.
    """
    chars = restriction(tower, a)
    if a.group != Group.G:
        # Fr_p acts on GL₁ by inversion, so Fr_p² maps to 1
        return all(u1_admissible(tower, chi) for chi in chars)

    A = frobenius_image(tower, a)
    square = tower.mat_mul(A, theta(tower, A))
    first, second = chars
    if square != tower.diag(first.lambda_, second.lambda_):
        return False

    # A·Θ(diag(x, y))·A^{-1} for the two possible shapes of A
    twisted = (frobenius_twist(tower, first), frobenius_twist(tower, second))
    if A.b.is_zero:
        expected = (inverse_tame(tower, second), inverse_tame(tower, first))
    else:
        expected = (inverse_tame(tower, first), inverse_tame(tower, second))
    return tame(twisted) == tame(expected)


def inverse_tame(tower: FieldTower, chi: MultChar) -> MultChar:
    return mult_char(tower, chi.n, chi.lambda_, -chi.r)


def tame(chars: Iterable[MultChar]) -> Tuple[int, ...]:
    return tuple(chi.r for chi in chars)


def u1_admissible(tower: FieldTower, chi: MultChar) -> bool:
    """Data (λ, r) of a parameter into the L-group of U(1)"""
    return chi.lambda_ == tower.one and (tower.p + 1) * chi.r % (tower.p ** 2 - 1) == 0


def u1_parameters(tower: FieldTower, degree: int = 2) -> List[U1Param]:
    """Sweep (λ, r) over F_{p^degree}^× × Z/(p²−1) for admissible U(1) data"""
    p = tower.p
    by_r = {(1 - p) * k % (p * p - 1): k for k in range(p + 1)}
    found = []
    for lam in tower.layer_elements(degree, nonzero=True):
        for r in range(p * p - 1):
            if u1_admissible(tower, mult_char(tower, 2, lam, r)):
                if r not in by_r:
                    raise InternalDefect(
                        f"admissible U(1) data {r} is not ω₂^((1−p)k)"
                    )
                found.append(u1(tower, by_r[r]))
    return found


def u1_llc(tower: FieldTower, a: U1Param) -> U1Char:
    return u1_char(tower, a.k)


def j_llc(tower: FieldTower, a: JParam) -> Tuple[U1Char, U1Char]:
    return u1_char(tower, a.k), u1_char(tower, a.l)


def xi_embed(tower: FieldTower, a: JParam) -> EndoParam:
    """Compose η_{k,ℓ} with the embedding of L-groups, inserting μ_{2,−1}"""
    if not isinstance(a, JParam):
        raise TypeError(f"xi_embed needs a J-parameter, got {a!r}")
    return endo(tower, a.k, a.l)


def param_equiv(tower: FieldTower, a: LParam, b: LParam) -> bool:
    """Closed-form equivalence of parameters into the same L-group"""
    if a.group != b.group:
        raise ValueError(f"cannot compare {a} ({a.group}) with {b} ({b.group})")
    a, b = normalize(tower, a), normalize(tower, b)
    if a.group != Group.G:
        return a == b

    p = tower.p
    if isinstance(a, TorusParam) and isinstance(b, EndoParam):
        a, b = b, a
    if isinstance(a, EndoParam) and isinstance(b, EndoParam):
        return {a.k, a.l} == {b.k, b.l}
    if isinstance(a, TorusParam) and isinstance(b, TorusParam):
        if a == b:
            return True
        return b.r == -p * a.r % (p * p - 1) and b.lambda_ == tower.inv(a.lambda_)
    if isinstance(a, EndoParam) and isinstance(b, TorusParam):
        return (
            a.k == a.l
            and b.r == (1 - p) * a.k % (p * p - 1)
            and b.lambda_ == tower.minus_one
        )
    raise TypeError(f"cannot compare {a!r} with {b!r}")


def param_orbit(tower: FieldTower, a: LParam) -> List[LParam]:
    """Everything param_equiv relates to a, by the same closed forms"""
    p = tower.p
    a = normalize(tower, a)
    if isinstance(a, EndoParam):
        orbit: List[LParam] = [a, endo(tower, a.l, a.k)]
        if a.k == a.l:
            singular = torus(tower, (1 - p) * a.k, tower.minus_one)
            orbit.extend(param_orbit(tower, singular))
    elif isinstance(a, TorusParam):
        orbit = [a, torus(tower, -p * a.r, tower.inv(a.lambda_))]
        if a.lambda_ == tower.minus_one:
            for k in range(p + 1):
                if (1 - p) * k % (p * p - 1) == a.r:
                    orbit.append(endo(tower, k, k))
    else:
        orbit = [a]
    return sorted(set(orbit), key=lambda x: x.sort_key)


def param_classes(
    tower: FieldTower, degree: int = 2
) -> List[Tuple[LParam, Tuple[LParam, ...]]]:
    """Equivalence classes of φ_{k,ℓ} and ψ_{r,λ} with λ ∈ F_{p^degree}^×"""
    p = tower.p
    params: List[LParam] = [
        endo(tower, k, l) for k in range(p + 1) for l in range(p + 1)
    ]
    params.extend(
        torus(tower, r, lam)
        for lam in tower.layer_elements(degree, nonzero=True)
        for r in range(p * p - 1)
    )
    classes: Dict[LParam, Tuple[LParam, ...]] = {}
    for a in params:
        orbit = tuple(param_orbit(tower, a))
        classes.setdefault(orbit[0], orbit)
    return sorted(classes.items(), key=lambda item: item[0].sort_key)


def twist_param(tower: FieldTower, a: LParam, j: int) -> LParam:
    """a ⊗ ω₂^{(1−p)j}"""
    require_g(a)
    if isinstance(a, EndoParam):
        return endo(tower, a.k + j, a.l + j)
    if isinstance(a, TorusParam):
        return torus(tower, a.r + (1 - tower.p) * j, a.lambda_)
    raise TypeError(f"not a Langlands parameter: {a!r}")


def induce_restrict(
    tower: FieldTower, m: int, lam: FFElem
) -> Tuple[MultChar, MultChar]:
    """Restriction of Ind(μ_{2,λ} ω₂^m) to the Galois group of Q_{p²}"""
    chi = mult_char(tower, 2, lam, m)
    return chi, frobenius_twist(tower, chi)


def intertwines(
    tower: FieldTower,
    A: Mat2,
    chars: Sequence[MultChar],
    B: Mat2,
    others: Sequence[MultChar],
) -> bool:
    """
    Whether some g ∈ GL₂(F̄_p) conjugates diag(chars) to diag(others) and
    satisfies g·A·adj(g) = B.
    """
    if len(chars) != 2 or len(others) != 2:
        raise ValueError("restriction is not a pair of diagonal characters")
    if Counter(chars) != Counter(others):
        return False

    if chars[0] != chars[1]:
        if chars[0] == others[0]:
            # g = diag(x, y)
            pattern = ((A.a, "xy"), (A.b, "xx"), (A.c, "yy"), (A.d, "xy"))
        else:
            # g = antidiag(x, y)
            neg = tower.neg
            pattern = (
                (neg(A.d), "xy"),
                (neg(A.c), "xx"),
                (neg(A.b), "yy"),
                (neg(A.a), "xy"),
            )
        return solve_monomials(tower, pattern, B)

    return solve_scalar_case(tower, A, B)


def solve_monomials(
    tower: FieldTower, pattern: Sequence[Tuple[FFElem, str]], B: Mat2
) -> bool:
    """Find x, y ≠ 0 with coefficient·monomial(x, y) = B entrywise"""
    values: Dict[str, FFElem] = {}
    for (coeff, mono), target in zip(pattern, B):
        if coeff.is_zero:
            if not target.is_zero:
                return False
            continue
        value = tower.div(target, coeff)
        if value.is_zero or values.setdefault(mono, value) != value:
            return False
    if len(values) == 3:
        # (xy)² = x²·y²
        square = tower.mul(values["xy"], values["xy"])
        return square == tower.mul(values["xx"], values["yy"])
    return True


def solve_scalar_case(tower: FieldTower, A: Mat2, B: Mat2) -> bool:
    """
    g·A·adj(g) = B ⇔ c·g·A = B·g with c = det g.  Similarity forces
    c·tr A = tr B and c²·det A = det B; for each candidate c the solutions g
    form a linear space, which must contain an invertible matrix.
    """
    tr_a, tr_b = tower.mat_trace(A), tower.mat_trace(B)
    det_a, det_b = tower.mat_det(A), tower.mat_det(B)
    if not tr_a.is_zero:
        candidates = [tower.div(tr_b, tr_a)]
    elif not tr_b.is_zero:
        return False
    else:
        ratio = tower.div(det_b, det_a)
        if not tower.is_square(ratio):
            raise ValueError(f"det ratio {ratio} is not a square in {tower.GF.name}")
        root = tower.sqrt(ratio)
        candidates = [root, tower.neg(root)]

    for c in candidates:
        if c.is_zero or tower.mul(tower.mul(c, c), det_a) != det_b:
            continue
        if has_invertible_solution(tower, tower.mat_scale(c, A), B):
            return True
    return False


def has_invertible_solution(tower: FieldTower, A: Mat2, B: Mat2) -> bool:
    """Some invertible g with g·A = B·g"""
    a, b = ((A.a, A.b), (A.c, A.d)), ((B.a, B.b), (B.c, B.d))
    rows = []
    for i in range(2):
        for j in range(2):
            row = []
            for u in range(2):
                for v in range(2):
                    coeff = tower.zero
                    if u == i:
                        coeff = tower.add(coeff, a[v][j])
                    if v == j:
                        coeff = tower.sub(coeff, b[i][u])
                    row.append(coeff)
            rows.append([tower.to_int(x) for x in row])
    kernel = tower.GF(rows).null_space()
    basis = [Mat2(*tower.from_array(vector)) for vector in kernel]

    det = tower.mat_det
    for i, x in enumerate(basis):
        if not det(x).is_zero:
            return True
        for y in basis[i + 1 :]:
            summed = Mat2(*(tower.add(s, t) for s, t in zip(x, y)))
            cross = tower.sub(tower.sub(det(summed), det(x)), det(y))
            if not cross.is_zero:
                return True
    return False


def intertwiner_oracle(tower: FieldTower, a: LParam, b: LParam) -> bool:
    """Decide equivalence by solving for the conjugating matrix"""
    a, b = require_g(a), require_g(b)
    return intertwines(
        tower,
        frobenius_image(tower, a),
        restriction(tower, a),
        frobenius_image(tower, b),
        restriction(tower, b),
    )


def torus_decompositions(tower: FieldTower, r_total: int) -> List[Tuple[int, int]]:
    """All (r, k) with 0 ≤ r ≤ p−1, 0 ≤ k ≤ p and r + (1−p)k ≡ r_total"""
    p = tower.p
    n = p * p - 1
    return [
        (r, k)
        for k in range(p + 1)
        for r in range(p)
        if (r + (1 - p) * k - r_total) % n == 0
    ]


def correspond(tower: FieldTower, a: LParam) -> LPacket:
    """The semisimple mod-p correspondence"""
    a = normalize(tower, require_g(a))
    p = tower.p

    if isinstance(a, EndoParam):
        if a.k == a.l:
            return correspond(tower, torus(tower, (1 - p) * a.k, tower.minus_one))
        return LPacket.of(
            [
                supercuspidal(tower, a.l, bracket(a.k - a.l - 1, p)),
                supercuspidal(tower, a.k, bracket(a.l - a.k - 1, p)),
            ]
        )

    if isinstance(a, TorusParam):
        solutions = torus_decompositions(tower, a.r)
        if not solutions:
            raise InternalDefect(f"no decomposition of {a.r} as r + (1−p)k")
        packets = set()
        for r, k in solutions:
            first = twist_packet(tower, pi_ss(tower, r, a.lambda_), k)
            second = twist_packet(
                tower, pi_ss(tower, p - 1 - r, tower.inv(a.lambda_)), k + r + 1
            )
            packets.add(first + second)
        if len(packets) != 1:
            raise InternalDefect(f"{a} corresponds to {len(packets)} different packets")
        return packets.pop()

    raise TypeError(f"not a Langlands parameter: {a!r}")


def transfer(tower: FieldTower, k: int, l: int) -> LPacket:
    """Endoscopic transfer of ω^k ⊗ ω^ℓ from U(1)×U(1)"""
    p = tower.p
    k, l = k % (p + 1), l % (p + 1)
    if k != l:
        return correspond(tower, endo(tower, k, l))
    packet = correspond(tower, torus(tower, (1 - p) * k, tower.minus_one))
    return packet


def no_stable_sweep(tower: FieldTower, degree: int = 2) -> Report:
    """Every induced parameter restricts to a pair of characters"""
    p = tower.p
    total = bad = 0
    for lam in tower.layer_elements(degree, nonzero=True):
        for m in range(p * p - 1):
            total += 1
            chars = induce_restrict(tower, m, lam)
            twisted = Counter(frobenius_twist(tower, chi) for chi in chars)
            stable = twisted == Counter(chars)
            if len(chars) != 2 or not stable:
                bad += 1
    return Report(
        title=f"no stable parameters, p={p}",
        checks=(
            Check(
                name="induce_restrict splits into two characters",
                passed=bad == 0,
                detail=f"{total - bad} of {total} (m, λ) pairs",
            ),
        ),
    )


def oracle_sweep(tower: FieldTower, degree: int = 2) -> Report:
    """intertwiner_oracle against param_equiv on all pairs"""
    p = tower.p
    endos = [endo(tower, k, l) for k in range(p + 1) for l in range(p + 1)]
    tori = [
        torus(tower, r, lam)
        for lam in tower.layer_elements(degree, nonzero=True)
        for r in range(p * p - 1)
    ]
    checks = []
    for name, left, right in (
        ("EndoG × EndoG", endos, endos),
        ("TorusG × TorusG", tori, tori),
        ("EndoG × TorusG", endos, tori),
    ):
        disagreements = [
            (a, b)
            for a in left
            for b in right
            if intertwiner_oracle(tower, a, b) != param_equiv(tower, a, b)
        ]
        detail = f"{len(left) * len(right)} pairs"
        if disagreements:
            a, b = disagreements[0]
            detail += f", {len(disagreements)} disagree, first {a} vs {b}"
        checks.append(
            Check(
                name=f"oracle agreement {name}",
                passed=not disagreements,
                detail=detail,
            )
        )
    LOG.info("p=%d: oracle sweep over %d parameters", p, len(endos) + len(tori))
    return Report(title=f"intertwiner oracle, p={p}", checks=tuple(checks))


def correspondence_checks(tower: FieldTower, degree: int = 2) -> Report:
    """Bijection count, twist equivariance and singular consistency"""
    p = tower.p
    checks: List[Check] = []

    regular = [
        cls
        for cls, _ in param_classes(tower, degree)
        if isinstance(cls, EndoParam) and cls.is_regular
    ]
    images = {correspond(tower, a) for a in regular}
    sc_packets = {x for x in packets(tower) if x.members[0].is_supercuspidal}
    checks.append(
        Check(
            name="regular φ_{k,ℓ} classes ↔ supercuspidal packets",
            passed=len(regular) == p * (p + 1) // 2 and images == sc_packets,
            detail=(
                f"{len(regular)} classes, {len(images)} images, "
                f"{len(sc_packets)} packets"
            ),
        )
    )

    failures = []
    endos = (endo(tower, k, l) for k in range(p + 1) for l in range(p + 1))
    sweep: List[LParam] = [a for a in endos if a.is_regular]
    sweep.extend(
        torus(tower, r, lam)
        for lam in tower.layer_elements(degree, nonzero=True)
        for r in range(p * p - 1)
    )
    for a in sweep:
        base = correspond(tower, a)
        for j in range(p + 1):
            twisted = correspond(tower, twist_param(tower, a, j))
            if twisted != twist_packet(tower, base, j):
                failures.append(f"{a} by {j}")
    checks.append(
        Check(
            name="twist equivariance",
            passed=not failures,
            detail=f"{len(sweep)} parameters"
            + (f", first failure {failures[0]}" if failures else ""),
        )
    )

    singular = [
        k
        for k in range(p + 1)
        if correspond(tower, endo(tower, k, k))
        != correspond(tower, torus(tower, (1 - p) * k, tower.minus_one))
    ]
    checks.append(
        Check(
            name="singular φ_{k,k} consistency",
            passed=not singular,
            detail=f"{singular}",
        )
    )

    admissible = [a for a in sweep if not is_admissible(tower, a)]
    checks.append(
        Check(
            name="constructed parameters are admissible",
            passed=not admissible,
            detail=f"{len(sweep)} parameters",
        )
    )
    return Report(title=f"correspondence, p={p}", checks=tuple(checks))


def describe(tower: FieldTower, a: LParam) -> Dict[str, Any]:
    result: Dict[str, Any] = a.to_dict()
    result["data"] = param_data(tower, a).to_dict()
    return result
