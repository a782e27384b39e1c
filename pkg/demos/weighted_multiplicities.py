"""Raising a multiplicity moves the spectrum without changing the lattice.

The input is a product of powers of linear forms, not just a set of
hyperplanes.  Squaring one factor of xy(x+y) keeps the intersection
lattice but changes the degree to 4, so the candidate exponents k/d + p
shift and the multiplicities redistribute.
"""

from arrspec import Arrangement, spectrum

normals = [(1, 0), (0, 1), (1, 1)]

for mults in [(1, 1, 1), (2, 1, 1), (3, 1, 1), (2, 2, 1)]:
    arr = Arrangement.from_normals(2, normals, mults=mults)
    result = spectrum(arr)
    row = " + ".join(
        ("" if pt.mult == 1 else "{}*".format(pt.mult)) + "t^({})".format(pt.alpha)
        for pt in result.points
    )
    print("x^{} y^{} (x+y)^{}:  degree {}".format(*mults, arr.degree))
    print("   Sp =", row)

    # the sum over each eigenvalue class k != d is the same Euler number
    per_k = {}
    for pt in result.points:
        if pt.k != arr.degree:
            per_k[pt.k] = per_k.get(pt.k, 0) + pt.mult
    print("   per-eigenvalue sums:", sorted(per_k.items()))
