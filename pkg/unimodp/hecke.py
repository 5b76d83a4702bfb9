# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Idempotents, supersingular modules, and their consistency with the finite
convolution algebra H(SU(1,1)(F_q), U)
"""

import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .ffield import FFElem, FieldTower
from .finituni import (
    CosetFunction,
    DEFAULT_BOUND,
    enumerate_group,
    HeckeAlgebra,
    n_s,
)
from .types.core import InternalDefect, prime_power, Variant
from .types.hecke import HeckeModule1D, IdempotentIndex
from .types.reports import Check, Report

LOG = logging.getLogger(__name__)


class QuadraticRelation(NamedTuple):
    """
    T_{n_s}² = Σ_a c_a T_{n_s h(a)} + Σ_a d_a T_{h(a)} with h(a) = diag(a, a^{-1})
    """

    reflected: Dict[FFElem, FFElem]
    torus: Dict[FFElem, FFElem]

    def describe(self) -> str:
        terms = [f"{c}·T[n_s·h({a})]" for a, c in sorted(self.reflected.items())]
        terms += [f"{c}·T[h({a})]" for a, c in sorted(self.torus.items())]
        return "T[n_s]² = " + (" + ".join(terms) or "0")


def hecke_algebra(tower: FieldTower, bound: int = DEFAULT_BOUND) -> HeckeAlgebra:
    return HeckeAlgebra(enumerate_group(tower, Variant.SU, bound=bound))


def torus_index(algebra: HeckeAlgebra, a: FFElem) -> int:
    tower = algebra.tower
    return algebra.table.index_of(tower.diag(a, tower.inv(a)))


def make_idempotent(
    index: Union[IdempotentIndex, int], algebra: HeckeAlgebra
) -> CosetFunction:
    """e_r = |H_S|^{-1} Σ_h χ_r(h) T_h"""
    tower = algebra.tower
    if isinstance(index, int):
        index = IdempotentIndex(r=index, q=tower.q)
    if index.q != tower.q:
        raise ValueError(f"idempotent for q={index.q} used with q={tower.q}")

    scale = tower.inv(tower.integer(tower.q - 1))
    terms = [
        algebra.scale(
            tower.mul(scale, tower.pow(a, index.r)), algebra.T(torus_index(algebra, a))
        )
        for a in tower.layer_elements(tower.f, nonzero=True)
    ]
    return algebra.add(*terms)


def supersingular_table(q: int) -> List[HeckeModule1D]:
    """M_0, M_r for 0 < r < q−1, and M_{q−1}, ordered by label"""
    p, _ = prime_power(q)
    minus_one = p - 1
    modules = []
    for label in range(q):
        if label == 0:
            a_s, a_s_prime = 0, minus_one
        elif label == q - 1:
            a_s, a_s_prime = minus_one, 0
        else:
            a_s, a_s_prime = 0, 0
        modules.append(
            HeckeModule1D(
                module=f"M_{label}", r=label % (q - 1), a_s=a_s, a_s_prime=a_s_prime
            )
        )
    return modules


def cusp_module(r: int, p: int) -> HeckeModule1D:
    """I_S(1)-invariants of π_r, as a supersingular module"""
    if not 0 <= r <= p - 1:
        raise ValueError(f"r={r} outside [0, {p - 1}]")
    return supersingular_table(p)[r]


def quadratic_closed_form(tower: FieldTower) -> QuadraticRelation:
    """T_{n_s}² = Σ_{a ∈ F_q^×} T_{n_s h(a)}; the q·T_{n_s²} term vanishes mod p"""
    units = tower.layer_elements(tower.f, nonzero=True)
    return QuadraticRelation(reflected={a: tower.one for a in units}, torus={})


def quadratic_relation(algebra: HeckeAlgebra) -> QuadraticRelation:
    """Expand T_{n_s} ∗ T_{n_s} by brute convolution"""
    tower, table = algebra.tower, algebra.table
    reflection = table.index_of(n_s(tower))
    positions: Dict[int, Tuple[str, FFElem]] = {}
    for a in tower.layer_elements(tower.f, nonzero=True):
        h = torus_index(algebra, a)
        positions[algebra.double_coset[h]] = ("torus", a)
        positions[algebra.double_coset[table.mul(reflection, h)]] = ("reflected", a)

    square = algebra.convolve(algebra.T(reflection), algebra.T(reflection))
    relation = QuadraticRelation(reflected={}, torus={})
    for rep, coeff in square.items():
        if rep not in positions:
            raise InternalDefect(f"T[n_s]² has support off N(T): element {rep}")
        kind, a = positions[rep]
        getattr(relation, kind)[a] = coeff
    LOG.debug("q=%d: %s", tower.q, relation.describe())
    return relation


def module_sides(
    tower: FieldTower,
    relation: QuadraticRelation,
    module: HeckeModule1D,
    prime: bool = False,
) -> Tuple[FFElem, FFElem]:
    """
    Both sides of the quadratic relation evaluated on a module.  T_h acts by
    χ_r(h)^{-1}; the relation for n_{s'} is the one for n_s with h ↦ h^{-1}.
    """
    scalar = tower.integer(module.a_s_prime if prime else module.a_s)
    sign = 1 if prime else -1

    def act(a: FFElem) -> FFElem:
        return tower.pow(a, sign * module.r)

    linear = tower.sum(tower.mul(c, act(a)) for a, c in relation.reflected.items())
    constant = tower.sum(tower.mul(d, act(a)) for a, d in relation.torus.items())
    lhs = tower.mul(scalar, scalar)
    rhs = tower.add(tower.mul(scalar, linear), constant)
    return lhs, rhs


def validate_relations(
    q: int,
    modules: Optional[Sequence[HeckeModule1D]] = None,
    bound: int = DEFAULT_BOUND,
) -> Report:
    """Idempotent laws and the module table against the convolution oracle"""
    p, f = prime_power(q)
    tower = FieldTower(p, f, f)
    algebra = hecke_algebra(tower, bound=bound)
    modules = supersingular_table(q) if modules is None else list(modules)
    report = Report(title=f"Hecke relations, q={q}")

    idempotents = [make_idempotent(r, algebra) for r in range(q - 1)]
    for r, e in enumerate(idempotents):
        square = algebra.convolve(e, e)
        report = report.extend(
            Check(
                name=f"e_{r} ∗ e_{r} = e_{r}",
                passed=square == e,
                detail="" if square == e else f"got {square}, expected {e}",
            )
        )
        for s in range(q - 1):
            if s == r:
                continue
            product = algebra.convolve(e, idempotents[s])
            report = report.extend(
                Check(
                    name=f"e_{r} ∗ e_{s} = 0",
                    passed=not product,
                    detail="" if not product else f"got {product}",
                )
            )

    total = algebra.add(*idempotents)
    report = report.extend(
        Check(
            name="Σ e_r = T_1",
            passed=total == algebra.unit,
            detail="" if total == algebra.unit else f"got {total}",
        )
    )

    reflection = algebra.T(algebra.table.index_of(n_s(tower)))
    for r, e in enumerate(idempotents):
        s = -r % (q - 1)
        lhs = algebra.convolve(reflection, e)
        rhs = algebra.convolve(idempotents[s], reflection)
        report = report.extend(
            Check(name=f"T[n_s] ∗ e_{r} = e_{s} ∗ T[n_s]", passed=lhs == rhs)
        )

    relation = quadratic_relation(algebra)
    expected = quadratic_closed_form(tower)
    report = report.extend(
        Check(
            name="T[n_s]² = Σ_a T[n_s·h(a)]",
            passed=relation == expected,
            detail=relation.describe(),
        )
    )

    seen = {(m.r, m.a_s, m.a_s_prime) for m in modules}
    report = report.extend(
        Check(
            name="supersingular modules pairwise distinct",
            passed=len(seen) == len(modules),
            detail=f"{len(seen)} distinct of {len(modules)}",
        )
    )
    for module in modules:
        for prime, gen in ((False, "n_s"), (True, "n_s'")):
            lhs, rhs = module_sides(tower, relation, module, prime=prime)
            report = report.extend(
                Check(
                    name=f"{module.module}: quadratic relation of T[{gen}]",
                    passed=lhs == rhs,
                    detail=f"a² = {lhs}, relation gives {rhs}",
                )
            )

    LOG.info(
        "%s: %d checks, %d failed",
        report.title,
        len(report.checks),
        len(report.failures),
    )
    return report
