"""Coordinate bookkeeping for Segre-Veronese embeddings.

A profile ``[(n_1, d_1), ..., (n_t, d_t)]`` describes the embedding of
``P^{n_1} x ... x P^{n_t}`` by multidegree ``(d_1, ..., d_t)``.  Ambient
coordinates are indexed by tuples ``(e_1, ..., e_t)`` where ``e_i`` is an
exponent vector of degree ``d_i`` in ``n_i + 1`` variables.

Monomials of one factor are ordered graded-lexicographically with variable 0
heaviest, so for ``P^2`` in degree 2 the order is::

    x0^2, x0*x1, x0*x2, x1^2, x1*x2, x2^2

Tuples are linearized in mixed radix with the first factor most significant.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

Exponent = tuple[int, ...]

INT64_MAX = 2**63 - 1


def checked_comb(n: int, k: int) -> int:
    value = comb(n, k)
    if value > INT64_MAX:
        raise OverflowError(f"C({n},{k}) does not fit in 64 bits")
    return value


def checked_prod(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out *= v
        if out > INT64_MAX:
            raise OverflowError("product does not fit in 64 bits")
    return out


@lru_cache(maxsize=None)
def enumerate_monomials(n: int, d: int) -> tuple[Exponent, ...]:
    """All exponent vectors of degree ``d`` in ``n + 1`` variables.

    The list is in graded-lex order with variable 0 heaviest, i.e. strictly
    decreasing as tuples.  ``d = 0`` gives the single zero vector.
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")

    def rec(nvars: int, deg: int) -> list[Exponent]:
        if nvars == 1:
            return [(deg,)]
        out = []
        for first in range(deg, -1, -1):
            out.extend((first,) + rest for rest in rec(nvars - 1, deg - first))
        return out

    return tuple(rec(n + 1, d))


@lru_cache(maxsize=None)
def _monomial_lookup(n: int, d: int) -> dict[Exponent, int]:
    return {e: i for i, e in enumerate(enumerate_monomials(n, d))}


def monomial_index(n: int, d: int, e: Sequence[int]) -> int:
    e = tuple(e)
    if len(e) != n + 1:
        raise ValueError(f"exponent {e} has length {len(e)}, expected {n + 1}")
    if any(x < 0 for x in e) or sum(e) != d:
        raise ValueError(f"exponent {e} is not a degree-{d} monomial")
    return _monomial_lookup(n, d)[e]


@dataclass(frozen=True)
class FactorProfile:
    """Ordered list of ``(n, d)`` pairs, one per factor."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        factors = tuple((int(n), int(d)) for n, d in self.factors)
        if not factors:
            raise ValueError("a profile needs at least one factor")
        for n, d in factors:
            if n < 1 or d < 1:
                raise ValueError(f"invalid factor P({n},{d}): need n >= 1 and d >= 1")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def segre(cls, dims: Iterable[int]) -> FactorProfile:
        return cls(tuple((n, 1) for n in dims))

    @classmethod
    def parse(cls, text: str) -> FactorProfile:
        return parse_profile(text)

    @property
    def ns(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.factors)

    @property
    def ds(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.factors)

    @property
    def is_segre(self) -> bool:
        return all(d == 1 for d in self.ds)

    @property
    def dim(self) -> int:
        """Dimension of the variety, ``sum(n_i)``."""
        return sum(self.ns)

    @cached_property
    def factor_sizes(self) -> tuple[int, ...]:
        return tuple(checked_comb(n + d, n) for n, d in self.factors)

    @property
    def ambient_dim(self) -> int:
        return ambient_dim(self)

    @property
    def num_coords(self) -> int:
        return checked_prod(self.factor_sizes)

    @cached_property
    def strides(self) -> tuple[int, ...]:
        out = []
        acc = 1
        for size in reversed(self.factor_sizes):
            out.append(acc)
            acc *= size
        return tuple(reversed(out))

    @cached_property
    def exponent_table(self) -> np.ndarray:
        """``(N+1, sum(n_i+1))`` array; row ``c`` is the concatenated exponent tuple of coordinate ``c``."""
        blocks = [np.array(enumerate_monomials(n, d), dtype=np.int64) for n, d in self.factors]
        table = blocks[0]
        for b in blocks[1:]:
            table = np.hstack([np.repeat(table, len(b), axis=0), np.tile(b, (len(table), 1))])
        return table

    def __str__(self) -> str:
        return format_profile(self)


def ambient_dim(profile: FactorProfile) -> int:
    """``N = prod C(n_i + d_i, n_i) - 1``; raises ``OverflowError`` past 64 bits."""
    return checked_prod(profile.factor_sizes) - 1


def coord_index(profile: FactorProfile, monomials: Sequence[Sequence[int]]) -> int:
    if len(monomials) != len(profile.factors):
        raise ValueError("need one exponent vector per factor")
    idx = 0
    for (n, d), size, e in zip(profile.factors, profile.factor_sizes, monomials):
        idx = idx * size + monomial_index(n, d, e)
    return idx


def coord_monomials(profile: FactorProfile, index: int) -> tuple[Exponent, ...]:
    if not 0 <= index <= profile.ambient_dim:
        raise ValueError(f"coordinate index {index} outside [0, {profile.ambient_dim}]")
    out = []
    for (n, d), stride in zip(profile.factors, profile.strides):
        local, index = divmod(index, stride)
        out.append(enumerate_monomials(n, d)[local])
    return tuple(out)


_FACTOR_RE = re.compile(r"P\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)")


def parse_profile(text: str) -> FactorProfile:
    """Parse ``P(n1,d1)xP(n2,d2)x...``.

    ``P(n)`` is short for ``P(n,1)``; a bare integer ``k`` after a factor
    repeats it so that it occurs ``k`` times (``P(1)x5`` is five copies).
    """
    tokens = [t.strip() for t in text.strip().split("x")]
    if not tokens or any(not t for t in tokens):
        raise ValueError(f"cannot parse profile {text!r}")
    factors: list[tuple[int, int]] = []
    for tok in tokens:
        m = _FACTOR_RE.fullmatch(tok)
        if m:
            factors.append((int(m.group(1)), int(m.group(2) or 1)))
        elif tok.isdigit() and factors:
            k = int(tok)
            if k < 1:
                raise ValueError(f"repeat count must be positive in {text!r}")
            factors.extend([factors[-1]] * (k - 1))
        else:
            raise ValueError(f"cannot parse factor {tok!r} in profile {text!r}")
    return FactorProfile(tuple(factors))


def format_profile(profile: FactorProfile) -> str:
    return "x".join(f"P({n})" if d == 1 else f"P({n},{d})" for n, d in profile.factors)


def format_coord(profile: FactorProfile, index: int) -> str:
    blocks = coord_monomials(profile, index)
    return "y[" + ";".join(",".join(str(x) for x in e) for e in blocks) + "]"


def parse_coord(profile: FactorProfile, text: str) -> int:
    text = text.strip()
    if not (text.startswith("y[") and text.endswith("]")):
        raise ValueError(f"bad variable {text!r}")
    blocks = text[2:-1].split(";")
    try:
        monos = [tuple(int(x) for x in b.split(",")) for b in blocks]
    except ValueError as exc:
        raise ValueError(f"bad variable {text!r}") from exc
    return coord_index(profile, monos)
