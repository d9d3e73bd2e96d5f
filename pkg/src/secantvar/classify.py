"""Closed-form dimension, defect and degree formulas for secant varieties.

Conventions: ``sigma_s(X)`` is the closure of the union of spans of ``s``
general points of ``X``; dimensions are projective.  The defect is always
the expected dimension minus the actual one.  Where a closed-form defect is
available it is kept next to the definitional value, and disagreements are
flagged rather than resolved.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, prod
from typing import Optional, Sequence

from .coords import FactorProfile

# flag names
AMBIENT_BOUND = "ambient-bound"
CLOSED_FORM_MISMATCH = "closed-form-defect-mismatch"
SHIFTED_DEFECT_MISMATCH = "shifted-defect-mismatch"
FORMULA_ORACLE_MISMATCH = "formula-oracle-mismatch"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
REPORTED_ONLY = "reported-only"

# flags that make the command line exit with status 2
DISCREPANCY_FLAGS = frozenset({CLOSED_FORM_MISMATCH, SHIFTED_DEFECT_MISMATCH, FORMULA_ORACLE_MISMATCH})


def expected_secant_dim(profile: FactorProfile | int, s: int, ambient: Optional[int] = None) -> int:
    """``min(N, s*dim X + s - 1)``.

    Accepts a profile, or a bare variety dimension together with ``ambient``.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    if isinstance(profile, FactorProfile):
        dim, N = profile.dim, profile.ambient_dim
    else:
        if ambient is None:
            raise ValueError("ambient dimension required with a bare variety dimension")
        dim, N = int(profile), int(ambient)
    return min(N, s * dim + s - 1)


def two_factor_secant_dim(a: int, b: int, s: int) -> int:
    """Dimension of the rank-``<= s`` locus in ``P((a+1)(b+1) - 1)``."""
    if a < 1 or b < 1 or s < 1:
        raise ValueError("need a, b, s >= 1")
    if s >= min(a, b) + 1:
        return (a + 1) * (b + 1) - 1
    return s * (a + b + 2 - s) - 1


def two_factor_codim(a: int, b: int, s: int) -> int:
    """Height of the ideal of ``(s+1)``-minors of a generic ``(a+1) x (b+1)`` matrix."""
    return max(a + 1 - s, 0) * max(b + 1 - s, 0)


def critical_s(n_list: Sequence[int]) -> int:
    """``N - sum(n_i) + 1`` with ``N = prod(n_i + 1) - 1``."""
    if not n_list:
        raise ValueError("need at least one factor")
    N = prod(n + 1 for n in n_list) - 1
    return N - sum(n_list) + 1


@dataclass
class SecantReport:
    """One row of a secant-dimension report."""

    s: int
    ambient: int
    expected_dim: int
    oracle_dim: Optional[int] = None
    defect: Optional[int] = None
    unbalanced_case: Optional[int] = None
    closed_form_defect: Optional[int] = None
    flags: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.oracle_dim is not None and self.defect is None:
            self.defect = self.expected_dim - self.oracle_dim

    @property
    def fills(self) -> bool:
        return self.oracle_dim is not None and self.oracle_dim == self.ambient

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> SecantReport:
        return cls(**{k: data[k] for k in cls.__dataclass_fields__ if k in data})


@dataclass
class UnbalancedCase:
    """Where ``s`` falls for ``P^{n_1} x ... x P^{n_t} x P^n`` against ``P^N x P^n``."""

    case: int
    ambient: int
    expected_dim: int
    closed_form_defect: int
    definitional_defect: Optional[int]
    equals_two_factor: bool
    fills: bool
    flags: list[str] = field(default_factory=list)

    def predicted_dim(self) -> int:
        """Dimension implied by the classification."""
        if self.definitional_defect is None:
            return self.expected_dim
        return self.expected_dim - self.definitional_defect


def unbalanced_classify(n_list: Sequence[int], n: int, s: int) -> UnbalancedCase:
    """Place ``s`` in one of the four ranges of the unbalanced Segre classification.

    With ``c = N - sum(n_i)``: case 1 is ``2 <= s <= c`` (expected dimension,
    different from the two-factor secant); case 2 is ``s = c + 1``; case 3 is
    ``c + 1 < s <= min(n, N)`` (defective); case 4 is ``s > min(n, N)``
    (fills).  In cases 2-4 the secant coincides with that of ``P^N x P^n``,
    so the definitional defect is computed from the two-factor dimension.
    """
    if s < 2:
        raise ValueError("classification starts at s = 2")
    n_list = list(n_list)
    N = prod(m + 1 for m in n_list) - 1
    c = N - sum(n_list)
    M = (N + 1) * (n + 1) - 1
    dim_x = sum(n_list) + n
    expected = min(M, s * dim_x + s - 1)
    flags = []
    if n < c + 1:
        flags.append(HYPOTHESIS_NOT_MET)
    if s <= c:
        case, closed, definitional = 1, 0, None
    elif s == c + 1:
        case, closed = 2, 0
    elif s <= min(n, N):
        case, closed = 3, s * s - s * (c + 1)
    else:
        case, closed = 4, 0
    if case > 1:
        definitional = expected - two_factor_secant_dim(N, n, s)
        if definitional != closed:
            flags.append(CLOSED_FORM_MISMATCH)
            if s * dim_x + s - 1 > M:
                flags.append(AMBIENT_BOUND)
    return UnbalancedCase(
        case=case,
        ambient=M,
        expected_dim=expected,
        closed_form_defect=closed,
        definitional_defect=definitional,
        equals_two_factor=case > 1,
        fills=case == 4,
        flags=flags,
    )


def giambelli_degree(a: int, b: int, s: int) -> int:
    """Degree of the rank-``<= s`` locus of ``(a+1) x (b+1)`` matrices, ``1 <= s <= min(a, b)``.

    Product over ``i = 0 .. a - s`` of ``C(b+1+i, s) / C(s+i, s)`` (with
    ``a <= b``), evaluated in exact rationals.
    """
    if a > b:
        a, b = b, a
    if not 1 <= s <= a:
        raise ValueError(f"s = {s} outside [1, {a}]")
    value = Fraction(1)
    for i in range(a - s + 1):
        value *= Fraction(comb(b + 1 + i, s), comb(s + i, s))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral degree {value} for ({a}, {b}, {s})")
    return value.numerator


@dataclass
class P1SegreClass:
    """Classification of ``sigma_s`` for ``P^1 x P^m x P^n``, ``m <= n``."""

    m: int
    n: int
    s: int
    regime: str  # "n=m", "n=m+1", "n>m+1"
    verdict: str  # "expected", "defective", "fills"
    shifted_defect: Optional[int]
    unbalanced_defect: Optional[int]
    definitional_defect: Optional[int]
    flags: list[str] = field(default_factory=list)


def p1_segre_classify(m: int, n: int, s: int) -> P1SegreClass:
    """Three-regime classification for ``P^1 x P^m x P^n``.

    In the defective range ``m+2 <= s <= min(2m+1, n)`` (only when
    ``n > m+1``) two closed forms circulate for the defect:
    ``s^2 - s(m+2)`` (the shifted one) and ``s^2 - s(m+1)`` (the unbalanced
    classification with ``N = 2m+1``).  Both are returned next to the
    definitional defect from the two-factor dimension; the shifted form is
    flagged whenever it disagrees with either of the other two.
    """
    if m > n:
        m, n = n, m
    if s < 2:
        raise ValueError("classification starts at s = 2")
    M = 2 * (m + 1) * (n + 1) - 1
    if n == m:
        regime = "n=m"
    elif n == m + 1:
        regime = "n=m+1"
    else:
        regime = "n>m+1"
    if regime == "n>m+1" and m + 2 <= s <= min(2 * m + 1, n):
        verdict = "defective"
    elif regime == "n>m+1" and s > min(2 * m + 1, n):
        verdict = "fills"
    else:
        verdict = "fills" if expected_secant_dim(m + n + 1, s, M) == M else "expected"
    shifted = unbalanced = None
    if verdict == "defective":
        shifted = s * s - s * (m + 2)
        unbalanced = s * s - s * (m + 1)
    definitional = None
    flags = []
    if n >= m + 1:
        uc = unbalanced_classify([1, m], n, s)
        definitional = uc.definitional_defect if uc.definitional_defect is not None else 0
        if shifted is not None and (shifted != definitional or shifted != unbalanced):
            flags.append(SHIFTED_DEFECT_MISMATCH)
        flags.extend(f for f in uc.flags if f not in flags)
    return P1SegreClass(m, n, s, regime, verdict, shifted, unbalanced, definitional, flags)


def grassmann_expected_dim(n: int, N: int, k: int, s: int) -> int:
    """``min(s*n + (k+1)(s-k-1), (k+1)(N-k))`` for ``k``-planes in spans of ``s`` points of an ``n``-fold in ``P^N``."""
    if not 0 <= k <= s - 1 <= N - 1:
        raise ValueError(f"need 0 <= k <= s-1 <= N-1, got k={k}, s={s}, N={N}")
    return min(s * n + (k + 1) * (s - k - 1), (k + 1) * (N - k))


@dataclass
class GrassmannReport:
    k: int
    s: int
    n: int
    expected_dim: int
    defective: bool
    shifted_defect: Optional[int]
    unbalanced_defect: Optional[int]
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


def grassmann_classify(m: int, n: int, s: int) -> GrassmannReport:
    """``(m, s-1)``-Grassmann defectivity of the Segre ``P^1 x P^n``.

    Defective exactly when ``n > m+1`` and ``m+2 <= s <= min(2m+1, n)``.  The
    defect equals the ``(s-1)``-defect of ``P^1 x P^n x P^m``, so
    both closed forms are carried as in :func:`p1_segre_classify`.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    N = 2 * n + 1
    expected = grassmann_expected_dim(n + 1, N, m, s) if m <= s - 1 <= N - 1 else None
    defective = n > m + 1 and m + 2 <= s <= min(2 * m + 1, n)
    shifted = unbalanced = None
    flags = []
    if defective:
        shifted = s * s - s * (m + 2)
        unbalanced = s * s - s * (m + 1)
        if shifted != unbalanced:
            flags.append(SHIFTED_DEFECT_MISMATCH)
    return GrassmannReport(m, s, n, expected, defective, shifted, unbalanced, flags)


def sv_defect_range(k: int, m: int) -> tuple[int, int]:
    """``(s0, s_max)`` for ``P^1 x P^m`` embedded in bidegree ``(2k, 2)``.

    ``s0 = km + k + ceil((m+1)/2)`` is the first ``s`` expected to fill the
    ambient space; ``s_max = km + k + m`` is the largest ``s`` on which the
    square ``(k+1)(m+1)`` Kronecker catalecticant is still singular.
    """
    if k < 1 or m < 1:
        raise ValueError("need k, m >= 1")
    return k * m + k + -(-(m + 1) // 2), k * m + k + m
