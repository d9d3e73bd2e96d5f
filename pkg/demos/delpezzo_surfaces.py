"""The cubic Veronese surface, three of its projections, and P1 x P1 in bidegree (2,2).

Each surface comes with a small matrix of coordinates whose 2 x 2 minors
vanish on the surface and whose 3 x 3 minors vanish on its secant variety.
"""

from __future__ import annotations

from secantvar.delpezzo import SURFACES, build_surface, delpezzo_degrees, secant_checks, symbolic_minor_vanishing

for name in SURFACES:
    spec = build_surface(name)
    coords = spec.coordinate_names()
    print(f"\n{name} in P^{spec.ambient_dim}, matrix {spec.matrix.shape[0]} x {spec.matrix.shape[1]}")
    for row in spec.matrix:
        print("   " + "  ".join(f"{coords[int(v)]:>6}" for v in row))
    print(f"  2x2 minors vanish identically on the parametrization: {symbolic_minor_vanishing(spec, 2)}")
    for s in (2, 3):
        chk = secant_checks(spec, s)
        print(f"  sigma_{s}: expected {chk.expected_dim}, actual {chk.oracle_dim}, minors vanish: {chk.minors_vanish}")

print("\nDegrees of sigma_2:")
for row in delpezzo_degrees():
    print(f"  {row['surface']}: {row['degree']} ({row['source']}{', ' + ', '.join(row['flags']) if row['flags'] else ''})")
