"""Randomized secant dimension oracle and equation checks.

The tangent space to the cone over ``sigma_s(X)`` at a general point of the
span of ``s`` general points is the span of the tangent spaces to the cone
over ``X`` at those points.  Stacking parametrization Jacobians at ``s``
random points and taking the rank over ``GF(p)`` therefore gives
``dim sigma_s(X) + 1``.  A random specialization can only lose rank, so
every value returned is a lower bound, and the maximum over independent
trials is exact with high probability.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import classify
from .coords import FactorProfile
from .flatten import build_flattening
from .numeric import (
    ConePoint,
    FieldConfig,
    ParamLike,
    as_parametrization,
    eval_poly,
    jacobian_rows,
    rank_mod_p,
    sample_cone_point,
)
from .poly import SparsePoly

log = logging.getLogger(__name__)

DEFAULT_CONFIG = FieldConfig()


@dataclass(frozen=True)
class DimEstimate:
    s: int
    affine_rank: int
    trials: int

    @property
    def projective_dim(self) -> int:
        return self.affine_rank - 1


@dataclass(frozen=True, eq=False)
class SecantSample:
    points: tuple[ConePoint, ...]
    combo: np.ndarray
    image: np.ndarray


@dataclass(frozen=True)
class RankBound:
    holds: bool
    max_rank: int
    constrained: bool
    shape: tuple[int, int]


def terracini_dim(param: ParamLike, s: int, config: FieldConfig = DEFAULT_CONFIG) -> DimEstimate:
    """Dimension of ``sigma_s`` from stacked Jacobians at ``s`` random points."""
    if s < 1:
        raise ValueError("s must be at least 1")
    P = as_parametrization(param)
    best = 0
    for trial in range(config.trials):
        rng = config.rng(trial, f"terracini:{s}")
        blocks = [jacobian_rows(P, sample_cone_point(P, config, rng), config.p) for _ in range(s)]
        best = max(best, rank_mod_p(np.vstack(blocks), config.p))
        if best == P.num_coords:
            break
    return DimEstimate(s, best, config.trials)


def sample_secant_point(param: ParamLike, s: int, config: FieldConfig = DEFAULT_CONFIG, trial: int = 0) -> SecantSample:
    """``sum(lambda_i * v_i)`` for ``s`` fresh cone points ``v_i`` and nonzero ``lambda_i``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    P = as_parametrization(param)
    p = config.p
    rng = config.rng(trial, f"secant-point:{s}")
    for _ in range(16):
        points = tuple(sample_cone_point(P, config, rng) for _ in range(s))
        combo = rng.integers(1, p, size=s, dtype=np.int64)
        image = np.zeros(P.num_coords, dtype=np.int64)
        for lam, pt in zip(combo, points):
            image = (image + int(lam) * pt.image) % p
        if image.any():
            return SecantSample(points, combo, image)
    raise RuntimeError("could not sample a nonzero secant point")


def verify_rank_bound(profile: FactorProfile, split: Sequence[int], s: int, config: FieldConfig = DEFAULT_CONFIG) -> RankBound:
    """Check that the flattening has rank ``<= s`` at points of ``sigma_s``."""
    F = build_flattening(profile, split)
    constrained = s < min(F.shape)
    max_rank = 0
    for trial in range(config.trials):
        sample = sample_secant_point(profile, s, config, trial)
        max_rank = max(max_rank, rank_mod_p(F.evaluate(sample.image), config.p))
    return RankBound(max_rank <= s, max_rank, constrained, F.shape)


def verify_vanishing(polys: Sequence[SparsePoly], param: ParamLike, s: int, config: FieldConfig = DEFAULT_CONFIG) -> bool:
    """True iff every polynomial vanishes at every sampled point of ``sigma_s``."""
    for trial in range(config.trials):
        image = sample_secant_point(param, s, config, trial).image
        for f in polys:
            if eval_poly(f, image, config.p) != 0:
                return False
    return True


def independent_count(polys: Sequence[SparsePoly], param: ParamLike, config: FieldConfig = DEFAULT_CONFIG) -> int:
    """Dimension of the span of ``polys`` (high probability), via evaluation at ``2 * len(polys)`` random points."""
    polys = [f for f in polys]
    if not polys:
        return 0
    degrees = {f.degree for f in polys if not f.is_zero()}
    if len(degrees) > 1:
        raise ValueError(f"mixed degrees {sorted(degrees)}")
    P = as_parametrization(param)
    best = 0
    for trial in range(config.trials):
        rng = config.rng(trial, "independent-count")
        pts = rng.integers(0, config.p, size=(2 * len(polys), P.num_coords), dtype=np.int64)
        evals = np.array([[eval_poly(f, pt, config.p) for pt in pts] for f in polys], dtype=np.int64)
        best = max(best, rank_mod_p(evals, config.p))
    return best


def two_factor_grouping(X: FactorProfile) -> tuple[int, int]:
    """``(N, n)`` for the grouping of all but the last factor against the last."""
    if not X.is_segre or len(X.factors) < 2:
        raise ValueError("grouping needs a Segre profile with at least two factors")
    N = 1
    for n in X.ns[:-1]:
        N *= n + 1
    return N - 1, X.ns[-1]


def equal_secants_check(X: FactorProfile, Y: FactorProfile, s: int, config: FieldConfig = DEFAULT_CONFIG) -> bool:
    """Compare the oracle dimension of ``sigma_s(X)`` with the two-factor dimension of ``sigma_s(Y)``.

    Since ``X`` sits inside ``Y``, equal dimensions mean equal secant varieties.
    """
    if not Y.is_segre or len(Y.factors) != 2:
        raise ValueError("Y must be a two-factor Segre profile")
    grouping = two_factor_grouping(X)
    if sorted(grouping) != sorted(Y.ns):
        raise ValueError(f"Y = {Y} is not the grouping {grouping} of X = {X}")
    a, b = Y.ns
    return terracini_dim(X, s, config).projective_dim == classify.two_factor_secant_dim(a, b, s)


def secant_report(profile: FactorProfile, s: int, config: FieldConfig = DEFAULT_CONFIG) -> classify.SecantReport:
    """Oracle dimension plus every closed form that applies to ``profile``."""
    N = profile.ambient_dim
    expected = classify.expected_secant_dim(profile, s)
    oracle = terracini_dim(profile, s, config).projective_dim
    report = classify.SecantReport(s=s, ambient=N, expected_dim=expected, oracle_dim=oracle)
    predicted = None
    if profile.is_segre and len(profile.factors) == 2:
        a, b = profile.ns
        predicted = classify.two_factor_secant_dim(a, b, s)
    elif profile.is_segre and len(profile.factors) >= 3 and s >= 2:
        ns = sorted(profile.ns)
        uc = classify.unbalanced_classify(ns[:-1], ns[-1], s)
        if classify.HYPOTHESIS_NOT_MET not in uc.flags:
            report.unbalanced_case = uc.case
            report.closed_form_defect = uc.closed_form_defect
            report.flags.extend(uc.flags)
            if uc.case > 1:
                a, b = two_factor_grouping(FactorProfile.segre(ns))
                predicted = min(expected, classify.two_factor_secant_dim(a, b, s))
            else:
                predicted = expected
        if len(ns) == 3 and ns[0] == 1:
            pc = classify.p1_segre_classify(ns[1], ns[2], s)
            if pc.shifted_defect is not None and classify.SHIFTED_DEFECT_MISMATCH in pc.flags:
                report.flags.append(classify.SHIFTED_DEFECT_MISMATCH)
    if predicted is not None and predicted != oracle:
        log.warning("oracle dim %d disagrees with closed form %d for %s, s=%d", oracle, predicted, profile, s)
        report.flags.append(classify.FORMULA_ORACLE_MISMATCH)
    return report
