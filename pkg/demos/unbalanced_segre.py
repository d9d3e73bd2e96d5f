"""When one factor is much larger than the others.

For P^1 x P^1 x P^n with n >= 3, grouping the two small factors turns the
Segre product into a subvariety of P^3 x P^n.  From s = 2 on the secant
varieties of the two coincide, so they are cut out by minors of a 4 x (n+1)
matrix and s = 3 is defective.
"""

from __future__ import annotations

from secantvar import classify
from secantvar.coords import FactorProfile
from secantvar.secant import secant_report

for n in (3, 5, 7):
    X = FactorProfile.segre([1, 1, n])
    print(f"\nP1 x P1 x P{n} in P^{X.ambient_dim}")
    for s in range(1, 5):
        r = secant_report(X, s)
        case = f"case {r.unbalanced_case}" if r.unbalanced_case else ""
        print(f"  s={s}: expected {r.expected_dim:3d}  actual {r.oracle_dim:3d}  defect {r.defect}  {case}")

# The two closed forms for P1 x Pm x Pn in the defective range, next to the oracle.
print("\nP1 x P2 x P6, s = 4")
pc = classify.p1_segre_classify(2, 6, 4)
print(f"  computed defect {pc.definitional_defect}, s^2-s(m+1) = {pc.unbalanced_defect}, s^2-s(m+2) = {pc.shifted_defect}")
print(f"  flags: {pc.flags}")
