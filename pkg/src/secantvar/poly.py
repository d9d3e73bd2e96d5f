"""Sparse homogeneous polynomials in ambient coordinates, and their text form.

A monomial is a sorted tuple of coordinate indices (a multiset), so
``y3 * y3 * y7`` is ``(3, 3, 7)``.  Coefficients are Python ints.

Text format, one polynomial per line::

    y[3,0;0,1]*y[1,2;1,0] - y[2,1;0,1]*y[2,1;1,0]

Terms are written in ascending monomial order joined by `` + `` or `` - ``.
A coefficient other than 1 is written as ``c*`` before the variables.  If
the first term is negative it carries a leading ``-``; the zero polynomial
is written ``0``.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .coords import FactorProfile, format_coord, parse_coord

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class SparsePoly:
    terms: Mapping[Monomial, int] = field(default_factory=dict)
    degree: int = 0

    def __post_init__(self):
        clean: dict[Monomial, int] = {}
        for mono, c in sorted((tuple(sorted(m)), int(c)) for m, c in self.terms.items()):
            if c == 0:
                continue
            if len(mono) != self.degree:
                raise ValueError(f"term {mono} is not of degree {self.degree}")
            if mono in clean:
                raise ValueError(f"duplicate monomial {mono}")
            clean[mono] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def collect(cls, pairs: Iterable[tuple[Monomial, int]], degree: int) -> SparsePoly:
        """Build from possibly repeated ``(monomial, coeff)`` pairs, summing like terms."""
        acc: dict[Monomial, int] = defaultdict(int)
        for mono, c in pairs:
            acc[tuple(sorted(mono))] += c
        return cls(acc, degree)

    @classmethod
    def variable(cls, index: int) -> SparsePoly:
        return cls({(index,): 1}, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[int]:
        return {v for mono in self.terms for v in mono}

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def __neg__(self) -> SparsePoly:
        return SparsePoly({m: -c for m, c in self.terms.items()}, self.degree)

    def __add__(self, other: SparsePoly) -> SparsePoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise ValueError("cannot add polynomials of different degree")
        return SparsePoly.collect(list(self.terms.items()) + list(other.terms.items()), self.degree)

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def times_variable(self, index: int, coeff: int = 1) -> SparsePoly:
        return SparsePoly({m + (index,): coeff * c for m, c in self.terms.items()}, self.degree + 1)

    def to_text(self, profile: FactorProfile) -> str:
        if self.is_zero():
            return "0"
        names: dict[int, str] = {}

        def name(v):
            if v not in names:
                names[v] = format_coord(profile, v)
            return names[v]

        parts = []
        for i, (mono, c) in enumerate(self.terms.items()):
            body = "*".join(name(v) for v in mono)
            mag = abs(c)
            term = body if mag == 1 else f"{mag}*{body}"
            if i == 0:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    @classmethod
    def from_text(cls, profile: FactorProfile, text: str) -> SparsePoly:
        return parse_poly(profile, text)


_TERM_SPLIT = re.compile(r" ([+-]) ")


def parse_poly(profile: FactorProfile, text: str) -> SparsePoly:
    text = text.strip()
    if text == "0":
        return SparsePoly()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    pieces = _TERM_SPLIT.split(text)
    signs = [sign] + [1 if s == "+" else -1 for s in pieces[1::2]]
    pairs = []
    degree = None
    for sgn, term in zip(signs, pieces[0::2]):
        factors = term.split("*")
        coeff = 1
        if factors and not factors[0].startswith("y["):
            try:
                coeff = int(factors[0])
            except ValueError as exc:
                raise ValueError(f"bad coefficient in term {term!r}") from exc
            factors = factors[1:]
        if not factors:
            raise ValueError(f"term {term!r} has no variables")
        mono = tuple(parse_coord(profile, f) for f in factors)
        if degree is None:
            degree = len(mono)
        elif degree != len(mono):
            raise ValueError(f"inhomogeneous polynomial: {text!r}")
        pairs.append((mono, sgn * coeff))
    return SparsePoly.collect(pairs, degree or 0)
