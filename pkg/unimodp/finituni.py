# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Finite unitary groups U(1,1)(F_{q²}/F_q) and their Hecke algebras

Groups are enumerated exhaustively as explicit 2×2 matrices preserving the
hermitian form s = antidiag(1, 1), then indexed so that multiplication,
inversion and the coset bookkeeping of the finite Hecke algebra H(Γ, U) all
work on integer indices.
"""

import logging
from math import comb
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

import galois
import numpy as np

from .ffield import FFElem, FieldTower, Mat2
from .types.base import Datatype
from .types.core import InternalDefect, prime_power, Variant
from .types.reports import Check, Report

LOG = logging.getLogger(__name__)

DEFAULT_BOUND = 9

# Group elements are plain 2×2 matrices over F_{q²}
UMat = Mat2

# Finite Hecke algebra elements: double coset representative → coefficient
CosetFunction = Dict[int, FFElem]


class BruhatCell:
    B = "B"
    BSB = "BsB"


class BruhatWitness(Datatype):
    cell: str
    factors: Tuple[Mat2, ...]


class SymInvariants(Datatype):
    r: int
    dimension: int
    basis: Tuple[Tuple[int, ...], ...]

    @property
    def monomials(self) -> List[str]:
        """Basis vectors written in the monomials x^{r−i} y^i"""
        names = []
        for vector in self.basis:
            terms = []
            for i, coeff in enumerate(vector):
                if not coeff:
                    continue
                mono = "·".join(
                    part
                    for part in (power("x", self.r - i), power("y", i))
                    if part
                ) or "1"
                terms.append(mono if coeff == 1 else f"{coeff}{mono}")
            names.append(" + ".join(terms))
        return names


def power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def n_s(tower: FieldTower) -> Mat2:
    """antidiag(−√ε^{-1}, √ε), the reflection of the Bruhat decomposition"""
    root = tower.sqrt_epsilon
    return tower.antidiag(tower.neg(tower.inv(root)), root)


def unipotent(tower: FieldTower, x: FFElem) -> Mat2:
    return tower.mat(tower.one, x, tower.zero, tower.one)


def torus_element(tower: FieldTower, a: FFElem) -> Mat2:
    """h(a) = diag(a, ā^{-1})"""
    return tower.diag(a, tower.inv(tower.conj(a)))


def similitude(tower: FieldTower, g: Mat2) -> FFElem:
    """κ with g* s g = κ s, read off the (1, 2) entry"""
    return tower.add(
        tower.mul(tower.conj(g.a), g.d), tower.mul(tower.conj(g.c), g.b)
    )


def is_unitary(tower: FieldTower, g: Mat2, kappa: Optional[FFElem] = None) -> bool:
    kappa = tower.one if kappa is None else kappa
    s = tower.antidiag(tower.one, tower.one)
    lhs = tower.mat_prod(tower.mat_star(g), s, g)
    return lhs == tower.mat_scale(kappa, s)


def to_sl2(tower: FieldTower, g: Mat2) -> Mat2:
    """SU(1,1) → SL₂(F_q) by conjugation with diag(√ε, 1)"""
    root = tower.sqrt_epsilon
    image = tower.mat(g.a, tower.mul(root, g.b), tower.div(g.c, root), g.d)
    for x in image:
        tower.check(x, tower.f, "SL₂ entry")
    return image


class GroupTable:
    """An enumerated finite group with indexed multiplication"""

    def __init__(self, tower: FieldTower, variant: str, elements: Sequence[Mat2]):
        self.tower = tower
        self.variant = variant
        self.elements: Tuple[Mat2, ...] = tuple(elements)
        self.index: Dict[Mat2, int] = {g: i for i, g in enumerate(self.elements)}
        if tower.identity not in self.index:
            raise InternalDefect(f"{variant} table lacks the identity")
        self.identity = self.index[tower.identity]
        self._inverse: List[Optional[int]] = [None] * len(self.elements)

        zero, one = tower.zero, tower.one
        self.borel: FrozenSet[int] = frozenset(
            i for i, g in enumerate(self.elements) if g.c == zero
        )
        self.unipotent: FrozenSet[int] = frozenset(
            i
            for i in self.borel
            if self.elements[i].a == one and self.elements[i].d == one
        )
        self.torus: FrozenSet[int] = frozenset(
            i for i in self.borel if self.elements[i].b == zero
        )
        self.center: FrozenSet[int] = frozenset(
            i for i in self.torus if self.elements[i].a == self.elements[i].d
        )

    def __repr__(self) -> str:
        return f"GroupTable({self.variant}, q={self.tower.q}, order={len(self)})"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Mat2]:
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self.index

    def index_of(self, g: Mat2) -> int:
        try:
            return self.index[g]
        except KeyError:
            raise ValueError(f"{g} is not in {self!r}") from None

    def mul(self, i: int, j: int) -> int:
        return self.index_of(self.tower.mat_mul(self.elements[i], self.elements[j]))

    def inverse(self, i: int) -> int:
        inv = self._inverse[i]
        if inv is None:
            inv = self.index_of(self.tower.mat_inv(self.elements[i]))
            self._inverse[i] = inv
        return inv

    def to_dict(self) -> Dict[str, object]:
        result: Dict[str, object] = {
            "variant": self.variant,
            "q": self.tower.q,
            "tower": self.tower.to_dict(),
            "order": len(self),
            "elements": [g.to_json_value() for g in self.elements],
            "borel": sorted(self.borel),
            "unipotent": sorted(self.unipotent),
            "torus": sorted(self.torus),
            "center": sorted(self.center),
        }
        if self.variant != Variant.U1:
            result["cells"] = bruhat_cells(self)
        return result


def enumerate_group(
    tower: FieldTower, variant: str = Variant.U, bound: int = DEFAULT_BOUND
) -> GroupTable:
    """All matrices over F_{q²} in the given variant, in entry-log order"""
    if variant not in Variant.ALL:
        raise ValueError(f"unknown group variant {variant!r}")
    if tower.q > bound:
        raise ValueError(f"q={tower.q} exceeds the enumeration bound {bound}")

    layer = tower.layer_elements(2 * tower.f)
    zero, one = tower.zero, tower.one
    elements: List[Mat2] = []

    if variant == Variant.U1:
        elements = [
            tower.diag(z, z) for z in layer if not z.is_zero and tower.norm(z) == one
        ]
    else:
        if variant == Variant.GU:
            kappas = tower.layer_elements(tower.f, nonzero=True)
        else:
            kappas = [one]

        for kappa in kappas:
            for a in layer:
                abar = tower.conj(a)
                for c in layer:
                    if a == zero and c == zero:
                        continue
                    if tower.trace(tower.mul(abar, c)) != zero:
                        continue
                    cbar = tower.conj(c)
                    if a != zero:
                        for b in layer:
                            d = tower.div(tower.sub(kappa, tower.mul(cbar, b)), abar)
                            if tower.trace(tower.mul(tower.conj(b), d)) == zero:
                                elements.append(Mat2(a, b, c, d))
                    else:
                        b = tower.div(kappa, cbar)
                        bbar = tower.conj(b)
                        for d in layer:
                            if tower.trace(tower.mul(bbar, d)) == zero:
                                elements.append(Mat2(a, b, c, d))

        if variant == Variant.SU:
            elements = [g for g in elements if tower.mat_det(g) == one]

    elements.sort(key=lambda g: g.sort_key)
    table = GroupTable(tower, variant, elements)
    LOG.debug("enumerated %r", table)
    return table


def bruhat_decompose(table: GroupTable, g: Mat2) -> BruhatWitness:
    """Γ = B ⊔ B n_s B with an explicit factorization"""
    tower = table.tower
    if table.variant == Variant.U1:
        raise ValueError("U(1) has no Bruhat decomposition")
    table.index_of(g)

    if g.c.is_zero:
        return BruhatWitness(cell=BruhatCell.B, factors=(g,))

    reflection = n_s(tower)
    b1 = unipotent(tower, tower.div(g.a, g.c))
    b2 = tower.mat_prod(tower.mat_inv(reflection), tower.mat_inv(b1), g)
    if not b2.c.is_zero or b1 not in table or b2 not in table:
        raise InternalDefect(f"bad Bruhat factorization of {g}")
    return BruhatWitness(cell=BruhatCell.BSB, factors=(b1, reflection, b2))


def bruhat_cells(table: GroupTable) -> Dict[str, int]:
    cells = {BruhatCell.B: 0, BruhatCell.BSB: 0}
    for g in table:
        cells[bruhat_decompose(table, g).cell] += 1
    return cells


def det_norm_index(table: GroupTable) -> int:
    """Index of the kernel of det: U(1,1) → U(1)"""
    if table.variant != Variant.U:
        raise ValueError(f"det_norm_index needs the U(1,1) table, not {table.variant}")
    tower = table.tower
    dets = [tower.mat_det(g) for g in table]
    if any(tower.norm(d) != tower.one for d in dets):
        raise InternalDefect("determinant outside the norm-one group")
    kernel = sum(1 for d in dets if d == tower.one)
    index, rem = divmod(len(table), kernel)
    if rem or index != len(set(dets)):
        raise InternalDefect(f"kernel of order {kernel} in {table!r}")
    return index


def sym_weight_invariants(
    tower: FieldTower, r: int, table: Optional[GroupTable] = None
) -> SymInvariants:
    """U-fixed vectors of Sym^r over F_p, in the basis x^{r−i} y^i"""
    if tower.f != 1:
        raise ValueError(f"Sym^r invariants need q = p, got q={tower.q}")
    if not 0 <= r <= tower.p - 1:
        raise ValueError(f"r={r} outside [0, {tower.p - 1}]")
    if table is None:
        table = enumerate_group(tower, Variant.SU)

    p = tower.p
    GFp = galois.GF(p)
    blocks = []
    for i in sorted(table.unipotent):
        t = tower.to_int(to_sl2(tower, table.elements[i]).b)
        # u(t): x^{r−i} y^i ↦ x^{r−i} (t x + y)^i
        m = np.zeros((r + 1, r + 1), dtype=int)
        for col in range(r + 1):
            for row in range(col + 1):
                m[row, col] = comb(col, row) * pow(t, col - row, p) % p
        blocks.append((m - np.eye(r + 1, dtype=int)) % p)

    kernel = GFp(np.vstack(blocks)).null_space()
    basis = []
    for vector in kernel:
        lead = next(int(v) for v in vector if int(v))
        scaled = vector / GFp(lead)
        basis.append(tuple(int(v) for v in scaled))
    basis.sort(reverse=True)
    return SymInvariants(r=r, dimension=len(basis), basis=tuple(basis))


class HeckeAlgebra:
    """
    H(Γ, U) for the unipotent radical U of the Borel subgroup.

    Elements are U-biinvariant functions stored on canonical double coset
    representatives (the smallest index in each double coset), with
    coefficients in F_q.
    """

    def __init__(self, table: GroupTable):
        if table.variant == Variant.U1:
            raise ValueError("U(1) has no Hecke algebra")
        self.table = table
        self.tower = table.tower
        units = sorted(table.unipotent)
        self.units = units

        self.coset_reps: List[int] = []
        seen = set()
        for g in range(len(table)):
            if g in seen:
                continue
            self.coset_reps.append(g)
            seen.update(table.mul(g, u) for u in units)

        self.double_coset: List[int] = [-1] * len(table)
        self.reps: List[int] = []
        for g in range(len(table)):
            if self.double_coset[g] >= 0:
                continue
            self.reps.append(g)
            for u in units:
                left = table.mul(u, g)
                for v in units:
                    self.double_coset[table.mul(left, v)] = g

        LOG.debug(
            "%r: %d cosets, %d double cosets",
            table,
            len(self.coset_reps),
            len(self.reps),
        )

    def __repr__(self) -> str:
        return f"HeckeAlgebra({self.table!r})"

    def normalize(self, values: Mapping[int, FFElem]) -> CosetFunction:
        result: CosetFunction = {}
        for rep, coeff in values.items():
            if self.double_coset[rep] != rep:
                raise ValueError(f"{rep} is not a double coset representative")
            self.tower.check(coeff, self.tower.f, "coefficient")
            if not coeff.is_zero:
                result[rep] = coeff
        return result

    def function(self, values: Mapping[int, FFElem]) -> CosetFunction:
        """Compress a function on Γ, rejecting one that is not U-biinvariant"""
        zero = self.tower.zero
        compressed: CosetFunction = {}
        for g in range(len(self.table)):
            rep = self.double_coset[g]
            value = values.get(g, zero)
            expected = compressed.setdefault(rep, values.get(rep, zero))
            if value != expected:
                raise ValueError(f"function is not U-biinvariant at element {g}")
        return self.normalize(compressed)

    def expand(self, f: CosetFunction) -> Dict[int, FFElem]:
        return {
            g: f[rep]
            for g, rep in enumerate(self.double_coset)
            if rep in f
        }

    def T(self, g: int) -> CosetFunction:
        """Characteristic function of U g U"""
        return {self.double_coset[g]: self.tower.one}

    @property
    def unit(self) -> CosetFunction:
        return self.T(self.table.identity)

    def add(self, *fs: CosetFunction) -> CosetFunction:
        total: Dict[int, FFElem] = {}
        for f in fs:
            for rep, coeff in f.items():
                total[rep] = self.tower.add(total.get(rep, self.tower.zero), coeff)
        return {rep: c for rep, c in total.items() if not c.is_zero}

    def scale(self, c: FFElem, f: CosetFunction) -> CosetFunction:
        if c.is_zero:
            return {}
        return {rep: self.tower.mul(c, coeff) for rep, coeff in f.items()}

    def convolve(self, f1: CosetFunction, f2: CosetFunction) -> CosetFunction:
        """(f1 ∗ f2)(g) = Σ_{x ∈ Γ/U} f1(x) f2(x^{-1} g)"""
        tower, table = self.tower, self.table
        f1 = self.normalize(f1)
        f2 = self.normalize(f2)
        support = [x for x in self.coset_reps if self.double_coset[x] in f1]

        result: CosetFunction = {}
        for g in self.reps:
            total = tower.zero
            for x in support:
                y = self.double_coset[table.mul(table.inverse(x), g)]
                if y in f2:
                    total = tower.add(
                        total, tower.mul(f1[self.double_coset[x]], f2[y])
                    )
            if not total.is_zero:
                result[g] = total
        return result


def convolve(
    f1: CosetFunction, f2: CosetFunction, algebra: HeckeAlgebra
) -> CosetFunction:
    return algebra.convolve(f1, f2)


def validate_groups(q: int, bound: int = DEFAULT_BOUND) -> Report:
    """Orders, det index, Bruhat cells and Sym^r invariants against known counts"""
    p, f = prime_power(q)
    tower = FieldTower(p, f, f)
    report = Report(title=f"finite unitary groups, q={q}")

    expected = {
        Variant.U: (q + 1) * q * (q * q - 1),
        Variant.SU: q * (q * q - 1),
        Variant.U1: q + 1,
        Variant.GU: (q - 1) * (q + 1) * q * (q * q - 1),
    }
    tables = {v: enumerate_group(tower, v, bound=bound) for v in Variant.ALL}
    for variant, order in expected.items():
        actual = len(tables[variant])
        report = report.extend(
            Check(
                name=f"|{variant}| = {order}",
                passed=actual == order,
                detail=f"enumerated {actual}",
            )
        )

    index = det_norm_index(tables[Variant.U])
    report = report.extend(
        Check(name=f"det index = {q + 1}", passed=index == q + 1, detail=f"got {index}")
    )

    cells = bruhat_cells(tables[Variant.U])
    borel = q * (q * q - 1)
    report = report.extend(
        Check(
            name="Bruhat partition",
            passed=cells == {BruhatCell.B: borel, BruhatCell.BSB: q * borel},
            detail=", ".join(f"|{cell}| = {n}" for cell, n in cells.items()),
        )
    )

    if f == 1:
        for r in range(p):
            inv = sym_weight_invariants(tower, r, tables[Variant.SU])
            report = report.extend(
                Check(
                    name=f"Sym^{r} U-invariants = ⟨x^{r}⟩",
                    passed=inv.dimension == 1 and inv.basis == ((1,) + (0,) * r,),
                    detail=f"dimension {inv.dimension}, basis {inv.monomials}",
                )
            )

    LOG.info(
        "%s: %d checks, %d failed",
        report.title,
        len(report.checks),
        len(report.failures),
    )
    return report
