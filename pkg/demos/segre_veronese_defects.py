"""Defective secants of products embedded in higher degree.

A square catalecticant-style flattening has full rank at a general point of
the ambient space.  When it stays singular on sigma_s although sigma_s was
expected to fill the space, the secant variety is defective.
"""

from __future__ import annotations

from secantvar import classify
from secantvar.coords import FactorProfile, parse_profile
from secantvar.flatten import build_flattening
from secantvar.numeric import rank_mod_p
from secantvar.secant import DEFAULT_CONFIG, sample_secant_point, terracini_dim


def report(X, split, svals):
    F = build_flattening(X, split)
    print(f"\n{X}: ambient P^{X.ambient_dim}, flattening {F.shape[0]} x {F.shape[1]}")
    for s in svals:
        dim = terracini_dim(X, s).projective_dim
        image = sample_secant_point(X, s, DEFAULT_CONFIG).image
        rank = rank_mod_p(F.evaluate(image), DEFAULT_CONFIG.p)
        expected = classify.expected_secant_dim(X, s)
        print(f"  s={s:2d}: expected {expected}, actual {dim}, flattening rank {rank}")


report(parse_profile("P(2,2)xP(2,2)"), (1, 1), range(6, 10))
report(parse_profile("P(3,2)xP(3,2)"), (1, 1), range(13, 17))

for k, m in [(1, 1), (1, 2), (2, 1), (2, 2)]:
    s0, s_max = classify.sv_defect_range(k, m)
    report(FactorProfile(((1, 2 * k), (m, 2))), (k, 1), range(s0, s_max + 1))
