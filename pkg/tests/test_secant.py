import pytest

from secantvar import classify
from secantvar.coords import FactorProfile, parse_profile
from secantvar.flatten import emit_minors, build_flattening
from secantvar.numeric import FieldConfig
from secantvar.poly import SparsePoly
from secantvar.secant import (
    equal_secants_check,
    independent_count,
    sample_secant_point,
    secant_report,
    terracini_dim,
    two_factor_grouping,
    verify_rank_bound,
    verify_vanishing,
)


def dim(text, s, config=None):
    return terracini_dim(parse_profile(text), s, config or FieldConfig()).projective_dim


@pytest.mark.parametrize("text,s,expected", [
    ("P(1)xP(1)xP(1)", 1, 3),
    ("P(1)xP(1)xP(1)", 2, 7),
    ("P(2)xP(2)", 2, 7),
    ("P(2,2)", 2, 4),        # Veronese surface: defective secant
    ("P(1)x4", 3, 13),
    ("P(1)xP(1)xP(2)xP(2)", 5, 33),
])
def test_known_dimensions(text, s, expected):
    assert dim(text, s) == expected


def test_p2_p2_degree_22_sequence():
    got = [dim("P(2,2)xP(2,2)", s) for s in range(1, 10)]
    assert got == [4, 9, 14, 19, 24, 29, 32, 34, 35]


@pytest.mark.parametrize("text", ["P(1)xP(2)xP(3)", "P(2,2)xP(1)", "P(1,4)"])
def test_monotone_and_saturates(text):
    profile = parse_profile(text)
    dims = [dim(text, s) for s in range(1, 12)]
    assert dims == sorted(dims)
    assert dims[-1] == profile.ambient_dim
    assert all(d <= classify.expected_secant_dim(profile, s) for s, d in enumerate(dims, 1))


def test_two_factor_grid():
    for a in range(1, 7):
        for b in range(a, 7):
            for s in range(1, 8):
                assert dim(f"P({a})xP({b})", s) == classify.two_factor_secant_dim(a, b, s), (a, b, s)


def test_seed_independence(seeded_cfg):
    assert terracini_dim(parse_profile("P(1)xP(1)xP(5)"), 3, seeded_cfg).projective_dim == 20


def test_rank_bound_on_secant():
    profile = FactorProfile.segre([1, 1, 4])
    rb = verify_rank_bound(profile, (1, 1, 0), 2)
    assert rb.holds and rb.max_rank == 2 and rb.constrained and rb.shape == (4, 5)
    rb = verify_rank_bound(profile, (1, 1, 0), 4)
    assert rb.holds and not rb.constrained


def test_generic_point_has_full_rank():
    profile = FactorProfile.segre([1, 1, 4])
    rb = verify_rank_bound(profile, (1, 1, 0), 3)
    assert rb.max_rank == 3


def test_vanishing_of_minors():
    profile = FactorProfile.segre([1, 1, 3])
    M = build_flattening(profile, (1, 1, 0))
    _, stream = emit_minors(M, 3)
    polys = [f for _, _, f in stream]
    assert verify_vanishing(polys, profile, 2)
    assert not verify_vanishing(polys, profile, 3)


def x1_quartics():
    # 4x4 determinants of (P^1)^4 under the three pairings of the factors
    profile = FactorProfile.segre([1, 1, 1, 1])
    a = build_flattening(profile, (1, 1, 0, 0))
    b = build_flattening(profile, (1, 0, 1, 0))
    c = build_flattening(profile, (1, 0, 0, 1))
    det = lambda F: next(emit_minors(F, 4)[1])[2]
    return profile, [det(a), det(b), det(c)]


def test_independent_count():
    profile, (f, g, h) = x1_quartics()
    assert independent_count([f, g], profile) == 2
    assert independent_count([f, g, h], profile) == 2
    assert independent_count([f, f], profile) == 1
    assert verify_vanishing([f, g, h], profile, 3)


def test_independent_count_mixed_degree():
    with pytest.raises(ValueError):
        independent_count([SparsePoly.variable(0), SparsePoly({(0, 1): 1}, 2)], parse_profile("P(1)xP(1)"))


def test_grouping():
    assert two_factor_grouping(FactorProfile.segre([1, 1, 5])) == (3, 5)
    assert two_factor_grouping(FactorProfile.segre([1, 2, 7])) == (5, 7)


@pytest.mark.parametrize("s,expected", [(2, True), (3, True), (1, False)])
def test_equal_secants(s, expected):
    X = FactorProfile.segre([1, 1, 3])
    Y = FactorProfile.segre([3, 3])
    assert equal_secants_check(X, Y, s) is expected


def test_equal_secants_rejects_wrong_grouping():
    with pytest.raises(ValueError):
        equal_secants_check(FactorProfile.segre([1, 1, 3]), FactorProfile.segre([2, 3]), 2)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_defect_in_unbalanced_range(n):
    # P^1 x P^1 x P^n: c = 1, s = 3 is case 3 when n >= 3, defect 3^2 - 3*2 = 3
    report = secant_report(FactorProfile.segre([1, 1, n]), 3)
    assert report.unbalanced_case == 3
    assert report.defect == report.closed_form_defect == 3
    assert classify.FORMULA_ORACLE_MISMATCH not in report.flags


def test_report_expected_range():
    report = secant_report(FactorProfile.segre([1, 1, 5]), 2)
    assert report.unbalanced_case == 2 and report.defect == 0
    assert report.oracle_dim == 15


def test_report_two_factor():
    report = secant_report(FactorProfile.segre([2, 4]), 2)
    assert report.oracle_dim == classify.two_factor_secant_dim(2, 4, 2)
    assert report.flags == []


def test_secant_sample_is_combination():
    profile = parse_profile("P(1)xP(2)")
    cfg = FieldConfig()
    sample = sample_secant_point(profile, 2, cfg)
    acc = sum(int(l) * pt.image for l, pt in zip(sample.combo, sample.points)) % cfg.p
    assert (acc == sample.image).all()
