"""Smallest interesting example: three concurrent lines in the plane.

f = xy(x+y) has degree 3 and an isolated singularity at the origin, so
its spectrum is classical and can be checked by hand.  This script walks
the whole pipeline on it and prints every intermediate object.
"""

from arrspec import Arrangement, euler_projective_complement, prepare, spectrum_from_setup

arr = Arrangement.from_normals(2, [(1, 0), (0, 1), (1, 1)])
setup = prepare(arr)

print("arrangement: 3 lines through the origin of C^2, degree", setup.degree)

lat = setup.lattice
print("\nintersection lattice ({} flats):".format(len(lat.flats)))
for i, flat in enumerate(lat.flats):
    print(
        "  [{}] dim {}  closure {}  mobius {:+d}".format(
            i, flat.dim, set(flat.closure) or "{}", lat.mobius[i]
        )
    )

# the projectivized complement is P^1 minus 3 points
print("\neuler characteristic of projectivized complement:", euler_projective_complement(lat))

bs = setup.building
print("\nbuilding set ({} elements):".format(bs.size))
for i in range(bs.size):
    print("  c{} = {}".format(i, bs.label(i)))

print("\nideal generators:")
for g in setup.ideal.generators:
    print("  ", g)
print("graded ranks of the quotient ring:", setup.ideal.quotient_ranks)

cl = setup.classes
print("\ncharacteristic classes in the quotient:")
print("  total chern      :", cl.total)
print("  todd             :", cl.todd)
print("  log one-forms    :", cl.log_chern)

result = spectrum_from_setup(setup)
print("\nspectrum:")
for pt in result.points:
    print("  multiplicity {:>2} at t^{}   (k={}, p={})".format(pt.mult, pt.alpha, pt.k, pt.p))

# hand check: mu = (d-1)^n = 4 spectral numbers, symmetric about n/2 = 1
assert sum(pt.mult for pt in result.points) == 4
print("\ntotal multiplicity (d-1)^n =", sum(pt.mult for pt in result.points))
