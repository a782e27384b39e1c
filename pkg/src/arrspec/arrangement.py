"""Central hyperplane arrangements and their intersection lattices.

An arrangement is a finite set of linear hyperplanes through the origin of
C^n, each carrying a positive integer multiplicity; it stands for the
product of the corresponding linear forms raised to those multiplicities.
Everything downstream is computed from the intersection lattice alone.

All linear algebra is exact (`fractions.Fraction`), and a flat is
canonically identified by its *closure*: the sorted tuple of indices of
every hyperplane that contains it.  Two flats are then equal iff their
closures are equal, and flat V is contained in flat W (as subspaces) iff
closure(W) is a subset of closure(V).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import EchelonBasis


class ValidationError(ValueError):
    """Rejected user input: bad arrangement data or a malformed document."""


class StructureError(RuntimeError):
    """A computed object violates an invariant it is supposed to satisfy."""


Vector = tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise ValidationError(f"expected a rational number, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse {x!r} as a rational number") from exc
    raise ValidationError(f"expected a rational number, got {type(x).__name__}")


def _proportional(u: Vector, v: Vector) -> bool:
    # u, v nonzero: proportional iff all 2x2 minors vanish
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u)))


@dataclass(frozen=True)
class Hyperplane:
    """A linear hyperplane given by its normal vector, with multiplicity."""

    normal: Vector
    mult: int = 1


@dataclass(frozen=True)
class Flat:
    """A subspace arising as an intersection of hyperplanes.

    `closure` lists every hyperplane index containing the subspace, so it
    determines the flat; `dim` and `codim` are its dimension and
    codimension in the ambient space.
    """

    closure: tuple[int, ...]
    dim: int
    codim: int


class Arrangement:
    """A central arrangement with multiplicities in C^n, n >= 2."""

    __slots__ = ("n", "hyperplanes")

    def __init__(self, n: int, hyperplanes) -> None:
        if not isinstance(n, int) or n < 2:
            raise ValidationError(f"ambient dimension must be an integer >= 2, got {n!r}")
        hps = []
        for idx, h in enumerate(hyperplanes):
            if not isinstance(h, Hyperplane):
                raise ValidationError(f"hyperplanes[{idx}] is not a Hyperplane")
            if len(h.normal) != n:
                raise ValidationError(
                    f"hyperplanes[{idx}]: normal has {len(h.normal)} coordinates, expected {n}"
                )
            normal = tuple(as_fraction(c) for c in h.normal)
            if not any(normal):
                raise ValidationError(f"hyperplanes[{idx}]: normal vector is zero")
            if not isinstance(h.mult, int) or h.mult < 1:
                raise ValidationError(
                    f"hyperplanes[{idx}]: multiplicity must be a positive integer, got {h.mult!r}"
                )
            hps.append(Hyperplane(normal, h.mult))
        if not hps:
            raise ValidationError("an arrangement needs at least one hyperplane")
        for i in range(len(hps)):
            for j in range(i + 1, len(hps)):
                if _proportional(hps[i].normal, hps[j].normal):
                    raise ValidationError(
                        f"hyperplanes {i} and {j} have proportional normals: "
                        "merge them into a single hyperplane with the summed multiplicity"
                    )
        self.n = n
        self.hyperplanes = tuple(hps)

    @classmethod
    def from_normals(cls, n: int, normals, mults=None) -> "Arrangement":
        rows = [tuple(as_fraction(c) for c in row) for row in normals]
        if mults is None:
            mults = [1] * len(rows)
        if len(mults) != len(rows):
            raise ValidationError("multiplicity list does not match the number of normals")
        return cls(n, [Hyperplane(r, m) for r, m in zip(rows, mults)])

    @property
    def degree(self) -> int:
        """Total degree of the defining polynomial: the sum of multiplicities."""
        return sum(h.mult for h in self.hyperplanes)

    @property
    def size(self) -> int:
        return len(self.hyperplanes)

    def permuted(self, perm) -> "Arrangement":
        """The same arrangement with hyperplanes listed in a new order."""
        perm = list(perm)
        if sorted(perm) != list(range(self.size)):
            raise ValidationError("not a permutation of the hyperplane indices")
        return Arrangement(self.n, [self.hyperplanes[i] for i in perm])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Arrangement)
            and self.n == other.n
            and self.hyperplanes == other.hyperplanes
        )

    def __repr__(self) -> str:
        return f"Arrangement(n={self.n}, {self.size} hyperplanes, degree {self.degree})"


class IntersectionLattice:
    """All intersections of hyperplanes of an arrangement, ordered by inclusion.

    Flats are listed by ascending codimension (ties broken lexicographically
    on closures), starting with the ambient space itself.  `mobius[i]` is the
    Mobius value of the interval from the ambient space down to `flats[i]`.
    """

    __slots__ = ("arrangement", "flats", "mobius", "_index", "_sets", "_closure_cache")

    def __init__(self, arrangement: Arrangement, flats, mobius) -> None:
        self.arrangement = arrangement
        self.flats: tuple[Flat, ...] = tuple(flats)
        self.mobius: tuple[int, ...] = tuple(mobius)
        self._index = {f.closure: i for i, f in enumerate(self.flats)}
        self._sets = [frozenset(f.closure) for f in self.flats]
        self._closure_cache: dict[frozenset, tuple[tuple[int, ...], int]] = {}

    @property
    def n(self) -> int:
        return self.arrangement.n

    def flat_index(self, closure) -> int | None:
        return self._index.get(tuple(sorted(closure)))

    def flat_by_closure(self, closure) -> Flat | None:
        i = self.flat_index(closure)
        return None if i is None else self.flats[i]

    def leq(self, a: Flat, b: Flat) -> bool:
        """Subspace containment: a <= b."""
        return set(b.closure) <= set(a.closure)

    def closure_of(self, indices) -> tuple[tuple[int, ...], int]:
        """Closure and rank of the span of the given hyperplanes' normals."""
        key = frozenset(indices)
        hit = self._closure_cache.get(key)
        if hit is not None:
            return hit
        normals = [h.normal for h in self.arrangement.hyperplanes]
        basis = EchelonBasis()
        for i in key:
            basis.insert({j: c for j, c in enumerate(normals[i]) if c})
        closure = tuple(
            j
            for j in range(len(normals))
            if basis.contains({k: c for k, c in enumerate(normals[j]) if c})
        )
        result = (closure, basis.rank)
        self._closure_cache[key] = result
        return result

    @property
    def is_essential(self) -> bool:
        """True when the normals span the whole space (some flat is the origin)."""
        return any(f.dim == 0 for f in self.flats)

    def hyperplane_flats(self) -> list[Flat]:
        return [f for f in self.flats if f.codim == 1]

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (i, j) of flat indices where flats[i] covers flats[j]."""
        out = []
        m = len(self.flats)
        for i in range(m):
            for j in range(m):
                if i == j or not self._sets[i] < self._sets[j]:
                    continue
                # cover: nothing strictly between
                strict = any(
                    self._sets[i] < self._sets[k] < self._sets[j] for k in range(m)
                )
                if not strict:
                    out.append((i, j))
        return out

    def __repr__(self) -> str:
        return f"IntersectionLattice({len(self.flats)} flats of {self.arrangement!r})"


def build_lattice(arrangement: Arrangement) -> IntersectionLattice:
    """Enumerate all flats of the arrangement and their Mobius values."""
    normals = [h.normal for h in arrangement.hyperplanes]
    m = len(normals)

    lat = IntersectionLattice.__new__(IntersectionLattice)
    lat.arrangement = arrangement
    lat._closure_cache = {}

    found: dict[tuple[int, ...], int] = {(): 0}
    frontier = [()]
    while frontier:
        nxt = []
        for cl in frontier:
            have = set(cl)
            for i in range(m):
                if i in have:
                    continue
                closure, rank = lat.closure_of(have | {i})
                if closure not in found:
                    found[closure] = rank
                    nxt.append(closure)
        frontier = nxt

    n = arrangement.n
    flats = [Flat(cl, n - r, r) for cl, r in found.items()]
    flats.sort(key=lambda f: (f.codim, f.closure))
    sets = [frozenset(f.closure) for f in flats]

    # Mobius values mu(ambient, V), top-down by codimension
    mobius = [0] * len(flats)
    for i, f in enumerate(flats):
        if f.codim == 0:
            mobius[i] = 1
        else:
            mobius[i] = -sum(mobius[j] for j in range(len(flats)) if sets[j] < sets[i])

    lat.flats = tuple(flats)
    lat.mobius = tuple(mobius)
    lat._index = {f.closure: i for i, f in enumerate(flats)}
    lat._sets = sets
    return lat


def euler_projective_complement(lattice: IntersectionLattice) -> int:
    """Euler characteristic of the projectivized complement.

    The characteristic polynomial sum over flats of mu(V) * (-t)^codim(V)
    always has (1 + t) as an exact factor for a nonempty central
    arrangement; the value of the cofactor at t = -1 is returned.
    """
    top = max(f.codim for f in lattice.flats)
    coeffs = [0] * (top + 1)
    for f, mu in zip(lattice.flats, lattice.mobius):
        coeffs[f.codim] += mu * (-1) ** f.codim
    # exact division by (1 + t), highest coefficient first
    quot = [0] * top
    carry = 0
    for k in range(top, 0, -1):
        quot[k - 1] = coeffs[k] - carry
        carry = quot[k - 1]
    if coeffs[0] - carry != 0:
        raise StructureError("characteristic polynomial not divisible by 1 + t")
    return sum(c * (-1) ** k for k, c in enumerate(quot))
