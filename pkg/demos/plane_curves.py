"""Cross-check against the classical formula for plane curve singularities.

A reduced arrangement of d distinct lines through the origin of C^2 is,
up to coordinates, the homogeneous curve singularity x^d - y^d.  Its
spectrum has been known in closed form for decades:

    Sp = sum over 1 <= i, j <= d-1 of t^((i+j)/d).

This script recomputes d = 2..8 from the intersection lattice alone and
compares multisets.
"""

from fractions import Fraction

from arrspec import prepare, spectrum_from_setup
from arrspec.fixtures import resolve_fixture

for d in range(2, 9):
    result = spectrum_from_setup(prepare(resolve_fixture(f"lines:{d}")))
    got = {pt.alpha: pt.mult for pt in result.points}

    classical = {}
    for i in range(1, d):
        for j in range(1, d):
            alpha = Fraction(i + j, d)
            classical[alpha] = classical.get(alpha, 0) + 1

    assert got == classical, d
    row = ", ".join("{}:{}".format(a, m) for a, m in sorted(got.items()))
    print("d={}  mu={:>2}   {}".format(d, sum(got.values()), row))

print("\nall spectra match the classical formula")
