"""Flattenings of Segre-Veronese coordinate tensors and their minors.

A split assigns each factor a row-side degree ``a_i`` with ``0 <= a_i <= d_i``.
Rows are indexed by tuples of degree-``a_i`` monomials, columns by tuples of
degree-``(d_i - a_i)`` monomials, and the entry at ``(r, c)`` is the ambient
coordinate of the factor-wise product.  For a Segre factor (``d_i = 1``),
``a_i`` just says which side of the partition the factor joins; for one
factor of degree ``d`` the construction is the usual catalecticant.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import comb, prod
from typing import Iterator, Sequence

import numpy as np

from .coords import Exponent, FactorProfile, coord_index, enumerate_monomials
from .poly import SparsePoly

Split = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Flattening:
    profile: FactorProfile
    split: Split
    rows: tuple[tuple[Exponent, ...], ...]
    cols: tuple[tuple[Exponent, ...], ...]
    entries: np.ndarray  # (len(rows), len(cols)) coordinate indices

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def entry(self, r: int, c: int) -> int:
        return int(self.entries[r, c])

    def evaluate(self, image: np.ndarray) -> np.ndarray:
        """Substitute an ambient vector for the coordinates."""
        return np.asarray(image)[self.entries]

    def variables(self) -> set[int]:
        return set(np.unique(self.entries).tolist())

    def __eq__(self, other):
        if not isinstance(other, Flattening):
            return NotImplemented
        return (
            self.profile == other.profile
            and self.split == other.split
            and np.array_equal(self.entries, other.entries)
        )

    __hash__ = None


def check_split(profile: FactorProfile, split: Sequence[int], allow_degenerate: bool = False) -> Split:
    split = tuple(int(a) for a in split)
    if len(split) != len(profile.factors):
        raise ValueError(f"split {split} has {len(split)} entries, profile has {len(profile.factors)} factors")
    for a, d in zip(split, profile.ds):
        if not 0 <= a <= d:
            raise ValueError(f"split entry {a} outside [0, {d}]")
    if not allow_degenerate:
        if all(a == 0 for a in split) or all(a == d for a, d in zip(split, profile.ds)):
            raise ValueError(f"split {split} is degenerate (one side is a single entry)")
    return split


def flattening_shape(profile: FactorProfile, split: Sequence[int]) -> tuple[int, int]:
    rows = prod(comb(n + a, n) for (n, _), a in zip(profile.factors, split))
    cols = prod(comb(n + d - a, n) for (n, d), a in zip(profile.factors, split))
    return rows, cols


def build_flattening(profile: FactorProfile, split: Sequence[int], allow_degenerate: bool = False) -> Flattening:
    split = check_split(profile, split, allow_degenerate)
    row_sets = [enumerate_monomials(n, a) for (n, _), a in zip(profile.factors, split)]
    col_sets = [enumerate_monomials(n, d - a) for (n, d), a in zip(profile.factors, split)]
    rows = tuple(itertools.product(*row_sets))
    cols = tuple(itertools.product(*col_sets))
    entries = np.empty((len(rows), len(cols)), dtype=np.int64)
    for i, r in enumerate(rows):
        for j, c in enumerate(cols):
            summed = [tuple(x + y for x, y in zip(er, ec)) for er, ec in zip(r, c)]
            entries[i, j] = coord_index(profile, summed)
    entries.setflags(write=False)
    return Flattening(profile, split, rows, cols, entries)


def factor_catalecticant(n: int, d: int, a: int) -> Flattening:
    """Single-factor flattening: degree-``a`` rows against degree-``(d-a)`` columns."""
    return build_flattening(FactorProfile(((n, d),)), (a,), allow_degenerate=True)


def kronecker_entries(profile: FactorProfile, split: Sequence[int]) -> np.ndarray:
    """Coordinate-index matrix assembled as a Kronecker combination of per-factor catalecticants.

    Entry indices add across factors with mixed-radix strides, so the
    combination is a Kronecker *sum* of stride-scaled local index tables.
    """
    out = np.zeros((1, 1), dtype=np.int64)
    for (n, d), a, stride in zip(profile.factors, split, profile.strides):
        local = factor_catalecticant(n, d, a).entries
        out = np.kron(out, np.ones_like(local)) + np.kron(np.ones_like(out), local * stride)
    return out


def enumerate_splits(profile: FactorProfile) -> list[Split]:
    """Proper splits up to the global transpose ``a -> d - a``.

    Of each transpose pair the representative has rows <= columns (ties
    broken by the lexicographically smaller split).
    """
    seen = set()
    out = []
    for split in itertools.product(*(range(d + 1) for d in profile.ds)):
        if all(a == 0 for a in split) or split == profile.ds:
            continue
        twin = tuple(d - a for a, d in zip(split, profile.ds))
        if split in seen or twin in seen:
            continue
        r, c = flattening_shape(profile, split)
        rep = split if (r, split) <= (c, twin) else twin
        seen.update((split, twin))
        out.append(rep)
    return out


def split_census(profile: FactorProfile) -> Counter:
    """Count of proper splits by matrix shape."""
    return Counter(flattening_shape(profile, s) for s in enumerate_splits(profile))


def minor_poly(F: Flattening | np.ndarray, rows: Sequence[int], cols: Sequence[int]) -> SparsePoly:
    """Exact expansion of the minor on ``rows`` x ``cols``, like terms collected.

    ``F`` may also be a bare matrix of coordinate indices.
    """
    entries = F.entries if isinstance(F, Flattening) else np.asarray(F)
    rows, cols = list(rows), list(cols)
    k = len(rows)
    if k != len(cols) or k == 0:
        raise ValueError("a minor needs equally many rows and columns, at least one")
    nr, nc = entries.shape
    if any(not 0 <= r < nr for r in rows) or any(not 0 <= c < nc for c in cols):
        raise ValueError("minor indices out of range")
    sub = entries[np.ix_(rows, cols)].tolist()
    # layer[mask]: determinant of the first popcount(mask) rows on columns in mask
    layer: dict[int, dict[tuple[int, ...], int]] = {0: {(): 1}}
    for i in range(k):
        nxt: dict[int, dict[tuple[int, ...], int]] = defaultdict(lambda: defaultdict(int))
        for mask, terms in layer.items():
            for j in range(k):
                bit = 1 << j
                if mask & bit:
                    continue
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                var = sub[i][j]
                target = nxt[mask | bit]
                for mono, c in terms.items():
                    target[tuple(sorted(mono + (var,)))] += sign * c
        layer = nxt
    (terms,) = layer.values()
    return SparsePoly.collect(terms.items(), k)


def colex_combinations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """``k``-subsets of ``range(n)`` in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, n):
        for rest in colex_combinations(top, k - 1):
            yield rest + (top,)


def count_minors(F: Flattening, k: int) -> int:
    nr, nc = F.shape
    return comb(nr, k) * comb(nc, k)


def emit_minors(F: Flattening, k: int, cap: int | None = None) -> tuple[int, Iterator[tuple[tuple[int, ...], tuple[int, ...], SparsePoly]]]:
    """Return ``(total, stream)`` of ``k x k`` minors.

    The stream runs over row sets in colex order and, for each row set, over
    column sets in colex order; it stops after ``cap`` items while ``total``
    is always the exact count.
    """
    nr, nc = F.shape
    if k < 1 or k > min(nr, nc):
        raise ValueError(f"no {k}x{k} minors in a {nr}x{nc} matrix")
    total = count_minors(F, k)

    def stream():
        produced = 0
        for R in colex_combinations(nr, k):
            for C in colex_combinations(nc, k):
                if cap is not None and produced >= cap:
                    return
                yield R, C, minor_poly(F, R, C)
                produced += 1

    return total, stream()


def full_determinant(F: Flattening) -> SparsePoly:
    nr, nc = F.shape
    if nr != nc:
        raise ValueError("determinant needs a square flattening")
    return minor_poly(F, range(nr), range(nc))
