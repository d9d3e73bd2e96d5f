"""Del Pezzo surfaces S9, S8, S7, S6 and D8 with their catalecticant-type matrices.

S9 is the cubic Veronese surface in P^9 with the 3 x 6 catalecticant A0.
S8, S7, S6 are its successive projections from the coordinate points
(0:0:1), (0:1:0), (1:0:0) of P^2: the cubic monomials x2^3, x1^3, x0^3 are
dropped in turn, and A1, A2, A3 are obtained from A0 by deleting the
column holding the dropped coordinate.  D8 is P^1 x P^1 in bidegree (2, 2)
with the 4 x 4 matrix B.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import classify
from .coords import FactorProfile, enumerate_monomials
from .flatten import build_flattening, colex_combinations, factor_catalecticant, minor_poly
from .numeric import FieldConfig, Parametrization, eval_poly
from .poly import SparsePoly
from .secant import DEFAULT_CONFIG, sample_secant_point, terracini_dim

SURFACES = ("S9", "S8", "S7", "S6", "D8")

# 0-based columns of A0 deleted in order to get A1, A2, A3 (last, fourth, first)
DELETIONS = (5, 3, 0)
DROPPED_MONOMIALS = ((0, 0, 3), (0, 3, 0), (3, 0, 0))

S9_PROFILE = FactorProfile(((2, 3),))
D8_PROFILE = FactorProfile(((1, 2), (1, 2)))


@dataclass(frozen=True, eq=False)
class SurfaceSpec:
    name: str
    parametrization: Parametrization
    matrix: np.ndarray  # entries are indices into the surface's own coordinate list
    base_coords: tuple[int, ...]  # position of each surface coordinate in the unprojected ambient space
    deleted_columns: tuple[int, ...] = ()

    @property
    def ambient_dim(self) -> int:
        return self.parametrization.ambient_dim

    @property
    def monomials(self) -> np.ndarray:
        return self.parametrization.exponents

    def matrix_variables(self) -> set[int]:
        return set(np.unique(self.matrix).tolist())

    def coordinate_names(self) -> list[str]:
        out = []
        for row in self.monomials:
            if self.name == "D8":
                s, t = row[:2], row[2:]
                idx = "0" * s[0] + "1" * s[1] + "0" * t[0] + "1" * t[1]
            else:
                idx = "".join(str(v) * e for v, e in enumerate(row))
            out.append(f"y{idx}")
        return out


def deleted_column_matrix(k: int) -> tuple[np.ndarray, tuple[int, ...]]:
    """``A_k`` as a matrix of P^9 coordinate indices, with the deleted columns of ``A0``."""
    A = factor_catalecticant(2, 3, 1).entries
    keep = list(range(A.shape[1]))
    deleted = []
    for col in DELETIONS[:k]:
        deleted.append(col)
        keep.remove(col)
    return A[:, keep], tuple(deleted)


def build_surface(name: str) -> SurfaceSpec:
    if name == "D8":
        B = build_flattening(D8_PROFILE, (1, 1)).entries
        param = Parametrization.from_profile(D8_PROFILE)
        return SurfaceSpec("D8", param, np.array(B), tuple(range(param.num_coords)))
    if name not in SURFACES:
        raise ValueError(f"unknown surface {name!r}; choose from {', '.join(SURFACES)}")
    k = 9 - int(name[1:])
    cubics = enumerate_monomials(2, 3)
    dropped = set(DROPPED_MONOMIALS[:k])
    base = tuple(i for i, e in enumerate(cubics) if e not in dropped)
    A, deleted = deleted_column_matrix(k)
    renumber = {old: new for new, old in enumerate(base)}
    try:
        matrix = np.vectorize(renumber.__getitem__)(A)
    except KeyError as exc:  # pragma: no cover - guarded by the column-deletion law
        raise AssertionError(f"{name}: matrix still uses a dropped coordinate") from exc
    exps = np.array([cubics[i] for i in base], dtype=np.int64)
    return SurfaceSpec(name, Parametrization((3,), exps), matrix.astype(np.int64), base, deleted)


def substitute(poly: SparsePoly, monomials: np.ndarray) -> dict[tuple[int, ...], int]:
    """Replace each coordinate by its parametrizing monomial; returns the collected polynomial in the parameters."""
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for mono, c in poly.terms.items():
        e = np.zeros(monomials.shape[1], dtype=np.int64)
        for v in mono:
            e += monomials[v]
        acc[tuple(e.tolist())] += c
    return {e: c for e, c in acc.items() if c}


def minors_of(spec: SurfaceSpec, k: int):
    nr, nc = spec.matrix.shape
    for R in colex_combinations(nr, k):
        for C in colex_combinations(nc, k):
            yield R, C, minor_poly(spec.matrix, R, C)


def symbolic_minor_vanishing(spec: SurfaceSpec, k: int) -> bool:
    """True iff every ``k x k`` minor is identically zero after substituting the parametrization."""
    if k > min(spec.matrix.shape):
        raise ValueError(f"no {k}x{k} minors in a {spec.matrix.shape} matrix")
    return all(not substitute(f, spec.monomials) for _, _, f in minors_of(spec, k))


@dataclass
class SecantCheck:
    name: str
    s: int
    ambient: int
    expected_dim: int
    oracle_dim: int
    minors_checked: int
    minors_vanish: Optional[bool]
    flags: list[str] = field(default_factory=list)

    @property
    def defect(self) -> int:
        return self.expected_dim - self.oracle_dim


def secant_checks(spec: SurfaceSpec, s: int, config: FieldConfig = DEFAULT_CONFIG) -> SecantCheck:
    """Numeric vanishing of the ``(s+1)``-minors on ``sigma_s`` plus the oracle dimension."""
    if s < 2:
        raise ValueError("s must be at least 2")
    param = spec.parametrization
    N = param.ambient_dim
    expected = classify.expected_secant_dim(param.dim, s, N)
    oracle = terracini_dim(param, s, config).projective_dim
    flags = []
    vanish = None
    count = 0
    if s + 1 <= min(spec.matrix.shape):
        polys = [f for _, _, f in minors_of(spec, s + 1)]
        count = len(polys)
        vanish = True
        for trial in range(config.trials):
            image = sample_secant_point(param, s, config, trial).image
            if any(eval_poly(f, image, config.p) for f in polys):
                vanish = False
                break
    else:
        flags.append("no-constraint")
    return SecantCheck(spec.name, s, N, expected, oracle, count, vanish, flags)


def delpezzo_degrees() -> list[dict]:
    """Degrees of sigma_2 of the surfaces.

    Where the 3 x 3 minors cut out sigma_2 with generic height the degree
    comes from the determinantal formula; D8's value is a literature figure
    carried as reported-only since B lacks generic height.
    """
    rows = []
    for name, (r, c) in (("S9", (3, 6)), ("S8", (3, 5)), ("S7", (3, 4)), ("S6", (3, 3))):
        rows.append(
            {
                "surface": name,
                "secant": 2,
                "matrix_shape": [r, c],
                "degree": classify.giambelli_degree(r - 1, c - 1, 2),
                "source": "determinantal",
                "flags": [],
            }
        )
    rows.append(
        {
            "surface": "D8",
            "secant": 2,
            "matrix_shape": [4, 4],
            "degree": 10,
            "source": "literature",
            "flags": [classify.REPORTED_ONLY],
        }
    )
    return rows


# Smaller Del Pezzo surfaces are listed without computation.
SMALL_SURFACE_NOTES = (
    {"surface": "S5", "sigma2": "fills P^5", "ideal": "three quadrics (reported, not computed)"},
    {"surface": "S4", "sigma2": "fills P^4", "ideal": "two quadrics (reported, not computed)"},
    {"surface": "S3", "sigma2": "fills P^3", "ideal": "one cubic (reported, not computed)"},
)


def delpezzo_report(config: FieldConfig = DEFAULT_CONFIG) -> dict:
    """Full table: dimensions, vanishing verdicts, degrees and annotations."""
    checks = []
    for name in SURFACES:
        spec = build_surface(name)
        sym2 = symbolic_minor_vanishing(spec, 2)
        for s in (2, 3):
            chk = secant_checks(spec, s, config)
            checks.append(
                {
                    "surface": name,
                    "s": s,
                    "ambient": chk.ambient,
                    "expected_dim": chk.expected_dim,
                    "oracle_dim": chk.oracle_dim,
                    "defect": chk.defect,
                    "matrix_shape": list(spec.matrix.shape),
                    "ideal_2x2_vanishes_symbolically": sym2,
                    "minors_checked": chk.minors_checked,
                    "minors_vanish": chk.minors_vanish,
                    "flags": chk.flags,
                }
            )
    return {"secants": checks, "degrees": delpezzo_degrees(), "notes": list(SMALL_SURFACE_NOTES)}
