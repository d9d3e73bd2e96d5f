"""Prime-field linear algebra and evaluation of monomial parametrizations.

Everything here works over ``GF(p)`` with ``p < 2**31.5`` so that products of
two reduced residues fit in ``int64``.  Random points stand in for general
points; ranks computed at them are lower bounds that are exact with high
probability.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np
import sympy

from .coords import FactorProfile
from .poly import SparsePoly

DEFAULT_PRIME = 2**31 - 1
# largest p with (p - 1)**2 < 2**63
MAX_PRIME = 3037000499
MAX_SAMPLE_ATTEMPTS = 16


@lru_cache(maxsize=64)
def _is_prime(p: int) -> bool:
    return bool(sympy.isprime(p))


def check_prime(p: int) -> int:
    p = int(p)
    if p > MAX_PRIME:
        raise ValueError(f"modulus {p} too large for int64 elimination (max {MAX_PRIME})")
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


@dataclass(frozen=True)
class FieldConfig:
    p: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3

    def __post_init__(self):
        check_prime(self.p)
        if self.p <= 10**6:
            raise ValueError(f"prime {self.p} too small; need p > 10^6")
        if self.trials < 1:
            raise ValueError("need at least one trial")

    def rng(self, trial: int, tag: str) -> np.random.Generator:
        """Independent stream for ``(seed, trial, tag)``."""
        ss = np.random.SeedSequence([self.seed & 0xFFFFFFFFFFFFFFFF, trial, zlib.crc32(tag.encode())])
        return np.random.default_rng(ss)


@dataclass(frozen=True, eq=False)
class Parametrization:
    """A monomial map ``x -> (x^E[c])_c`` on a product of affine spaces.

    ``block_sizes`` gives the number of variables of each factor and
    ``exponents`` has one row per ambient coordinate and one column per
    variable (blocks concatenated).
    """

    block_sizes: tuple[int, ...]
    exponents: np.ndarray

    @classmethod
    def from_profile(cls, profile: FactorProfile) -> Parametrization:
        return cls(tuple(n + 1 for n in profile.ns), profile.exponent_table)

    @property
    def num_vars(self) -> int:
        return sum(self.block_sizes)

    @property
    def num_coords(self) -> int:
        return self.exponents.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.num_coords - 1

    @property
    def dim(self) -> int:
        """Dimension of the image variety when the map is generically finite on each projective factor."""
        return sum(b - 1 for b in self.block_sizes)

    def block_degrees(self) -> list[np.ndarray]:
        out, start = [], 0
        for b in self.block_sizes:
            out.append(self.exponents[:, start:start + b].sum(axis=1))
            start += b
        return out


ParamLike = Union[FactorProfile, Parametrization]


def as_parametrization(obj) -> Parametrization:
    if isinstance(obj, Parametrization):
        return obj
    if isinstance(obj, FactorProfile):
        return _profile_param(obj)
    param = getattr(obj, "parametrization", None)
    if isinstance(param, Parametrization):
        return param
    raise TypeError(f"cannot interpret {type(obj).__name__} as a parametrization")


@lru_cache(maxsize=256)
def _profile_param(profile: FactorProfile) -> Parametrization:
    return Parametrization.from_profile(profile)


@dataclass(frozen=True, eq=False)
class ConePoint:
    params: tuple[np.ndarray, ...]
    image: np.ndarray

    @property
    def x(self) -> np.ndarray:
        return np.concatenate(self.params)


def rank_mod_p(matrix, p: int = DEFAULT_PRIME) -> int:
    """Rank over ``GF(p)`` by Gaussian elimination with modular inverses."""
    p = check_prime(p)
    M = np.array(matrix, dtype=np.int64, copy=True)
    if M.ndim != 2:
        raise ValueError("rank_mod_p expects a 2-d matrix")
    M %= p
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r, c:] = M[r, c:] * inv % p
        below = M[r + 1:, c]
        hit = np.flatnonzero(below)
        if hit.size:
            idx = r + 1 + hit
            M[idx, c:] = (M[idx, c:] - np.outer(M[idx, c], M[r, c:]) % p) % p
        r += 1
    return r


def _power_table(x: np.ndarray, maxdeg: int, p: int) -> np.ndarray:
    pw = np.ones((x.size, maxdeg + 1), dtype=np.int64)
    for k in range(1, maxdeg + 1):
        pw[:, k] = pw[:, k - 1] * x % p
    return pw


def eval_monomials(param: ParamLike, x: np.ndarray, p: int = DEFAULT_PRIME) -> np.ndarray:
    param = as_parametrization(param)
    E = param.exponents
    x = np.asarray(x, dtype=np.int64) % p
    pw = _power_table(x, int(E.max(initial=0)), p)
    vals = np.ones(E.shape[0], dtype=np.int64)
    for j in range(E.shape[1]):
        vals = vals * pw[j, E[:, j]] % p
    return vals


def _nonzero_vector(rng: np.random.Generator, size: int, p: int) -> np.ndarray:
    while True:
        v = rng.integers(0, p, size=size, dtype=np.int64)
        if v.any():
            return v


def sample_cone_point(param: ParamLike, config: FieldConfig, rng: np.random.Generator) -> ConePoint:
    """Uniform nonzero parameters per factor, mapped to the affine cone."""
    param = as_parametrization(param)
    p = config.p
    for _ in range(MAX_SAMPLE_ATTEMPTS):
        params = tuple(_nonzero_vector(rng, b, p) for b in param.block_sizes)
        image = eval_monomials(param, np.concatenate(params), p)
        if image.any():
            return ConePoint(params, image)
    raise RuntimeError(f"no nonzero cone point after {MAX_SAMPLE_ATTEMPTS} attempts")


def cone_point_at(param: ParamLike, params: Sequence[Sequence[int]], p: int = DEFAULT_PRIME) -> ConePoint:
    param = as_parametrization(param)
    blocks = tuple(np.asarray(b, dtype=np.int64) % p for b in params)
    if tuple(len(b) for b in blocks) != param.block_sizes:
        raise ValueError("parameter blocks do not match the parametrization")
    return ConePoint(blocks, eval_monomials(param, np.concatenate(blocks), p))


def jacobian_rows(param: ParamLike, point: ConePoint, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Partial derivatives of every ambient coordinate, one row per parameter.

    The row space is the affine tangent space to the cone at ``point``.
    """
    param = as_parametrization(param)
    E = param.exponents
    x = point.x % p
    pw = _power_table(x, int(E.max(initial=0)), p)
    nv = E.shape[1]
    factors = np.stack([pw[j, E[:, j]] for j in range(nv)])
    lowered = np.stack([pw[j, np.maximum(E[:, j] - 1, 0)] for j in range(nv)])
    out = np.empty((nv, E.shape[0]), dtype=np.int64)
    for j in range(nv):
        row = E[:, j] % p * lowered[j] % p
        for jj in range(nv):
            if jj != j:
                row = row * factors[jj] % p
        out[j] = row
    return out


def eval_poly(poly: SparsePoly, point: Sequence[int], p: int = DEFAULT_PRIME) -> int:
    """Value of ``poly`` at an ambient vector, reduced mod ``p``."""
    vals = [int(v) % p for v in point]
    n = len(vals)
    total = 0
    for mono, c in poly.terms.items():
        term = c % p
        for v in mono:
            if not 0 <= v < n:
                raise IndexError(f"variable {v} outside point of length {n}")
            term = term * vals[v] % p
        total += term
    return total % p


def random_matrix(rng: np.random.Generator, shape: tuple[int, int], p: int = DEFAULT_PRIME) -> np.ndarray:
    return rng.integers(0, p, size=shape, dtype=np.int64)
