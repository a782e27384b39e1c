"""Truncated polynomial calculus for the cohomology of the log resolution.

`GradedPoly` is a sparse polynomial with rational coefficients in one
variable per building-set element, with every term of total degree above
the truncation bound (ambient dimension minus one) discarded.  Dropping
those terms is harmless: the relation ideal is homogeneous and the
quotient vanishes above the bound, and all reductions happen degree by
degree.

`IdealPresentation` stores, for each degree, a reduced echelon basis of
the degree slice of the relation ideal.  There are two families of
generators:

* products of variables over pairwise-incomparable element sets whose
  subspace intersection again belongs to the building set;
* for every nested subset H and every element W strictly below all of H,
  the product of the H variables times the (dimension-drop)-th power of
  the sum of the variables at or below W.

Reduction against the top-degree slice turns any polynomial of top degree
into a rational multiple of the class of a point; that multiple is what
`reduce_top` returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import factorial

from .arrangement import StructureError
from .linalg import EchelonBasis, SparseVec
from .nested import BuildingSet, d_value, enumerate_nested

_ZERO = Fraction(0)
_ONE = Fraction(1)

Monomial = tuple[int, ...]


class GradedPoly:
    """Sparse truncated polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "trunc", "terms")

    def __init__(self, nvars: int, trunc: int, terms=None) -> None:
        self.nvars = nvars
        self.trunc = trunc
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if c and sum(mono) <= trunc:
                clean[mono] = c
        self.terms = clean

    # construction helpers

    @classmethod
    def zero(cls, nvars: int, trunc: int) -> "GradedPoly":
        return cls(nvars, trunc)

    @classmethod
    def constant(cls, value, nvars: int, trunc: int) -> "GradedPoly":
        return cls(nvars, trunc, {(0,) * nvars: Fraction(value)})

    @classmethod
    def variable(cls, i: int, nvars: int, trunc: int) -> "GradedPoly":
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, trunc, {mono: _ONE})

    def _like(self, terms: dict[Monomial, Fraction]) -> "GradedPoly":
        p = GradedPoly.__new__(GradedPoly)
        p.nvars, p.trunc, p.terms = self.nvars, self.trunc, terms
        return p

    def _compat(self, other: "GradedPoly") -> None:
        if self.nvars != other.nvars or self.trunc != other.trunc:
            raise ValueError("polynomials live in different rings")

    # ring operations

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPoly.constant(other, self.nvars, self.trunc)
        self._compat(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            nv = out.get(mono, _ZERO) + c
            if nv:
                out[mono] = nv
            else:
                out.pop(mono, None)
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, GradedPoly) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + Fraction(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return GradedPoly.zero(self.nvars, self.trunc)
            return self._like({m: v * c for m, v in self.terms.items()})
        self._compat(other)
        trunc = self.trunc
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            da = sum(ma)
            for mb, cb in other.terms.items():
                if da + sum(mb) > trunc:
                    continue
                mono = tuple(x + y for x, y in zip(ma, mb))
                nv = out.get(mono, _ZERO) + ca * cb
                if nv:
                    out[mono] = nv
                else:
                    out.pop(mono, None)
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GradedPoly":
        if not isinstance(k, int):
            raise ValueError("exponent must be an integer")
        if k < 0:
            return self.geom_inv() ** (-k)
        result = GradedPoly.constant(1, self.nvars, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPoly)
            and self.nvars == other.nvars
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    __hash__ = None

    # series operations

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, _ZERO)

    def geom_inv(self) -> "GradedPoly":
        """Multiplicative inverse, by geometric series on the non-constant part."""
        a = self.constant_term
        if not a:
            raise ValueError("constant term has no rational inverse")
        rest = self - a  # strictly positive degrees
        step = rest * (-1 / a)
        out = GradedPoly.constant(1 / a, self.nvars, self.trunc)
        power = GradedPoly.constant(1 / a, self.nvars, self.trunc)
        for _ in range(self.trunc):
            power = power * step
            if not power.terms:
                break
            out = out + power
        return out

    def exp(self) -> "GradedPoly":
        """Truncated exponential; requires zero constant term."""
        if self.constant_term:
            raise ValueError("exp needs a zero constant term")
        out = GradedPoly.constant(1, self.nvars, self.trunc)
        power = GradedPoly.constant(1, self.nvars, self.trunc)
        for k in range(1, self.trunc + 1):
            power = power * self
            if not power.terms:
                break
            out = out + power * Fraction(1, factorial(k))
        return out

    # graded structure

    def graded_part(self, j: int) -> "GradedPoly":
        return self._like({m: c for m, c in self.terms.items() if sum(m) == j})

    def graded_parts(self) -> list["GradedPoly"]:
        return [self.graded_part(j) for j in range(self.trunc + 1)]

    def alternate_signs(self) -> "GradedPoly":
        """Flip the sign of every odd-degree term."""
        return self._like({m: (-c if sum(m) % 2 else c) for m, c in self.terms.items()})

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (sum(m), tuple(-e for e in m))):
            c = self.terms[mono]
            factors = [
                f"c{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(mono) if e
            ]
            body = "*".join(factors)
            if not body:
                bits.append(str(c))
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        out = " + ".join(bits).replace("+ -", "- ")
        return out


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """Degree-`degree` monomials, lexicographically largest first."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        mono = [0] * nvars
        for i in combo:
            mono[i] += 1
        out.append(tuple(mono))
    out.sort(reverse=True)
    return out


@dataclass
class IdealPresentation:
    """Per-degree echelon bases of the relation ideal of the resolution ring."""

    building: BuildingSet
    generators: list[GradedPoly]
    spans: list[EchelonBasis]
    monomials: list[list[Monomial]]
    _top_unit: SparseVec | None = None

    @property
    def trunc(self) -> int:
        return self.building.n - 1

    @property
    def quotient_ranks(self) -> list[int]:
        return [len(ms) - sp.rank for ms, sp in zip(self.monomials, self.spans)]

    def _vector(self, poly: GradedPoly, degree: int) -> SparseVec:
        index = {m: i for i, m in enumerate(self.monomials[degree])}
        return {index[m]: c for m, c in poly.graded_part(degree).terms.items()}

    def reduce_degree(self, poly: GradedPoly, degree: int) -> SparseVec:
        return self.spans[degree].reduce(self._vector(poly, degree))

    def top_unit_residue(self) -> SparseVec:
        """Residue of (-c_0)^(n-1), the class of a point."""
        if self._top_unit is None:
            top = self.trunc
            nv = self.building.size
            point = GradedPoly(
                nv, top, {(top,) + (0,) * (nv - 1): Fraction(-1) ** top}
            )
            res = self.reduce_degree(point, top)
            if not res:
                raise StructureError("the class of a point reduces to zero")
            self._top_unit = res
        return self._top_unit


def _antichain(bs: BuildingSet, elems) -> bool:
    return not any(bs.leq(a, b) or bs.leq(b, a) for a, b in combinations(elems, 2))


def ideal_generators(bs: BuildingSet) -> IdealPresentation:
    """Relation ideal of the building set, presented degree by degree.

    Only generators of total degree up to the truncation bound are
    emitted; higher ones vanish in the truncated ring and cannot affect
    any degree slice kept here.
    """
    nv = bs.size
    trunc = bs.n - 1
    gens: list[GradedPoly] = []

    def var(i: int) -> GradedPoly:
        return GradedPoly.variable(i, nv, trunc)

    for size in range(2, trunc + 1):
        for elems in combinations(range(1, nv), size):
            if not _antichain(bs, elems):
                continue
            if bs.intersection_element(elems) is None:
                continue
            mono = tuple(1 if i in elems else 0 for i in range(nv))
            gens.append(GradedPoly(nv, trunc, {mono: _ONE}))

    for subset in enumerate_nested(bs, trunc):
        elems = sorted(subset)
        base = GradedPoly.constant(1, nv, trunc)
        for e in elems:
            base = base * var(e)
        for w in range(nv):
            if not all(bs.lt(w, v) for v in elems):
                continue
            drop = d_value(bs, elems, w)
            if len(elems) + drop > trunc:
                continue
            inner = GradedPoly.zero(nv, trunc)
            for wp in range(nv):
                if bs.leq(wp, w):
                    inner = inner + var(wp)
            gens.append(base * inner**drop)

    monomials = [monomials_of_degree(nv, j) for j in range(trunc + 1)]
    spans = [EchelonBasis() for _ in range(trunc + 1)]
    for j in range(trunc + 1):
        index = {m: i for i, m in enumerate(monomials[j])}
        for g in gens:
            dg = g.degree()
            if dg > j or not g.terms:
                continue
            for mono in monomials[j - dg]:
                shifted = {
                    index[tuple(a + b for a, b in zip(mono, m))]: c
                    for m, c in g.terms.items()
                }
                spans[j].insert(shifted)

    ideal = IdealPresentation(bs, gens, spans, monomials)
    if ideal.quotient_ranks[trunc] != 1:
        raise StructureError(
            f"top cohomology not rank 1 (got {ideal.quotient_ranks[trunc]})"
        )
    return ideal


def reduce_top(poly: GradedPoly, ideal: IdealPresentation) -> Fraction:
    """Coefficient of the point class in the top-degree part of `poly`."""
    bs = ideal.building
    if poly.nvars != bs.size or poly.trunc != ideal.trunc:
        raise ValueError("polynomial does not match the ideal's ring")
    unit = ideal.top_unit_residue()
    res = ideal.reduce_degree(poly, ideal.trunc)
    if not res:
        return _ZERO
    key = next(iter(unit))
    lam = res.get(key, _ZERO) / unit[key]
    # rank one in the top degree forces proportionality; verify anyway
    if any(res.get(c, _ZERO) != lam * v for c, v in unit.items()) or any(
        c not in unit for c in res
    ):
        raise StructureError("top residue is not a multiple of the point class")
    return lam


def ideal_membership(poly: GradedPoly, ideal: IdealPresentation) -> bool:
    """Whether every graded part of `poly` reduces to zero."""
    if poly.nvars != ideal.building.size or poly.trunc != ideal.trunc:
        raise ValueError("polynomial does not match the ideal's ring")
    return all(
        not ideal.reduce_degree(poly, j) for j in range(ideal.trunc + 1)
    )
