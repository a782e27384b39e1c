"""Assembly of the Hodge spectrum from lattice data.

For each eigenvalue index k (1 <= k <= d, d the total degree) there is a
tuple of residues, one per hyperplane, and from them one integer shift
per building-set element.  Each candidate exponent alpha = k/d + p with
0 <= p < n (excluding exactly k = d, p = n - 1) gets the multiplicity

    (-1)^(n-1-p) * [ ch(dual (n-1-p)-th exterior power) * exp(shifts) * Todd ]

evaluated against the class of a point.  Nonzero multiplicities form the
spectrum; every candidate is an exact integer, which is asserted.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .arrangement import (
    Arrangement,
    IntersectionLattice,
    StructureError,
    build_lattice,
)
from .chern import CharClasses, char_classes
from .nested import BuildingSet, building_from_closures, maximal_building
from .ring import GradedPoly, IdealPresentation, ideal_generators, reduce_top


@dataclass(frozen=True)
class EigenData:
    """Residues of one monodromy eigenvalue: index k and one value per hyperplane."""

    k: int
    residues: tuple[Fraction, ...]


def beta(arrangement: Arrangement, k: int) -> EigenData:
    """Residue data for the k-th eigenvalue, 1 <= k <= degree."""
    d = arrangement.degree
    if not 1 <= k <= d:
        raise ValueError(f"eigenvalue index {k} out of range 1..{d}")
    res = tuple(Fraction(-k * h.mult, d) % 1 for h in arrangement.hyperplanes)
    if sum(res).denominator != 1:
        raise StructureError("eigenvalue residues do not sum to an integer")
    return EigenData(k, res)


def s_value(bs: BuildingSet, elem: int, eig: EigenData) -> Fraction:
    """Sum of residues over all hyperplanes containing the element."""
    if elem == 0:
        return sum(eig.residues, Fraction(0))
    return sum((eig.residues[i] for i in bs.closures[elem]), Fraction(0))


def a_coeff(bs: BuildingSet, elem: int, eig: EigenData) -> int:
    """Integer twist coefficient of one boundary divisor."""
    bump = 1 if elem == 0 else 0
    return bs.codims[elem] - floor(s_value(bs, elem, eig)) - 1 + bump


def twist_exp(bs: BuildingSet, eig: EigenData) -> GradedPoly:
    """exp of the divisor with the integer twist coefficients."""
    nv, trunc = bs.size, bs.n - 1
    lin = GradedPoly.zero(nv, trunc)
    for v in range(nv):
        a = a_coeff(bs, v, eig)
        if a:
            lin = lin + GradedPoly.variable(v, nv, trunc) * a
    return lin.exp()


def r_alpha(classes: CharClasses, eig: EigenData, p: int) -> GradedPoly:
    """Integrand class for the exponent k/d + p, before the Todd factor."""
    n = classes.building.n
    if not 0 <= p <= n - 1:
        raise ValueError(f"integer part {p} out of range 0..{n - 1}")
    return classes.dual_ch[n - 1 - p] * twist_exp(classes.building, eig)


@dataclass
class SpectrumSetup:
    """Everything derived from the arrangement that the formula consumes."""

    arrangement: Arrangement
    lattice: IntersectionLattice
    building: BuildingSet
    ideal: IdealPresentation
    classes: CharClasses

    @property
    def n(self) -> int:
        return self.arrangement.n

    @property
    def degree(self) -> int:
        return self.arrangement.degree


def prepare(arrangement: Arrangement, building_closures=None) -> SpectrumSetup:
    lattice = build_lattice(arrangement)
    if building_closures is None:
        bs = maximal_building(lattice)
    else:
        bs = building_from_closures(lattice, building_closures)
    ideal = ideal_generators(bs)
    classes = char_classes(bs)
    return SpectrumSetup(arrangement, lattice, bs, ideal, classes)


def multiplicity(setup: SpectrumSetup, k: int, p: int) -> int:
    """Spectrum multiplicity of the exponent k/d + p.  Exact integer."""
    n, d = setup.n, setup.degree
    if k == d and p == n - 1:
        raise ValueError("the exponent n is excluded from the spectrum")
    eig = beta(setup.arrangement, k)
    integrand = r_alpha(setup.classes, eig, p) * setup.classes.todd
    value = reduce_top(integrand, setup.ideal) * (-1) ** (n - 1 - p)
    if value.denominator != 1:
        raise StructureError(
            f"non-integral multiplicity {value} at k={k}, p={p}"
        )
    return int(value)


@dataclass(frozen=True)
class SpectralPoint:
    """One spectrum entry: exponent, multiplicity, and its (k, p) provenance."""

    alpha: Fraction
    mult: int
    k: int
    p: int


@dataclass(frozen=True)
class SpectrumResult:
    degree: int
    points: tuple[SpectralPoint, ...]
    warnings: tuple[str, ...]

    def multiplicity_of(self, alpha) -> int:
        alpha = Fraction(alpha)
        for pt in self.points:
            if pt.alpha == alpha:
                return pt.mult
        return 0

    def as_pairs(self) -> list[tuple[Fraction, int]]:
        return [(pt.alpha, pt.mult) for pt in self.points]


def spectrum_from_setup(setup: SpectrumSetup, jobs: int = 1) -> SpectrumResult:
    n, d = setup.n, setup.degree
    cells = [
        (k, p)
        for k in range(1, d + 1)
        for p in range(n)
        if not (k == d and p == n - 1)
    ]

    def cell(kp: tuple[int, int]) -> int:
        return multiplicity(setup, kp[0], kp[1])

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(cell, cells))
    else:
        values = [cell(kp) for kp in cells]

    points = [
        SpectralPoint(Fraction(k, d) + p, m, k, p)
        for (k, p), m in zip(cells, values)
        if m
    ]
    points.sort(key=lambda pt: pt.alpha)

    warnings = []
    if not setup.lattice.is_essential:
        warnings.append(
            "non-essential arrangement: computed from the formula as written, "
            "but not validated against known examples"
        )
    if not setup.building.is_maximal:
        warnings.append("custom building set: output not validated")
    return SpectrumResult(d, tuple(points), tuple(warnings))


def spectrum(arrangement: Arrangement, building_closures=None, jobs: int = 1) -> SpectrumResult:
    """Hodge spectrum of the arrangement, sorted by exponent."""
    return spectrum_from_setup(prepare(arrangement, building_closures), jobs=jobs)
