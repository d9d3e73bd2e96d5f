import itertools
import random
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secantvar.coords import FactorProfile, coord_index, enumerate_monomials, parse_profile
from secantvar.flatten import (
    build_flattening,
    colex_combinations,
    emit_minors,
    enumerate_splits,
    factor_catalecticant,
    flattening_shape,
    kronecker_entries,
    minor_poly,
    split_census,
)
from secantvar.numeric import DEFAULT_PRIME, eval_poly
from secantvar.poly import SparsePoly

P = DEFAULT_PRIME


def leibniz_det(M, p):
    """Permutation-sum determinant mod p, for small matrices."""
    k = len(M)
    total = 0
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(k):
            term = term * int(M[i][perm[i]]) % p
        total += term
    return total % p


def a0_names():
    F = factor_catalecticant(2, 3, 1)
    name = {i: "y" + "".join(str(v) * e for v, e in enumerate(m)) for i, m in enumerate(enumerate_monomials(2, 3))}
    return [[name[int(v)] for v in row] for row in F.entries]


def test_a0_matches_printed_matrix():
    assert a0_names() == [
        ["y000", "y001", "y002", "y011", "y012", "y022"],
        ["y001", "y011", "y012", "y111", "y112", "y122"],
        ["y002", "y012", "y022", "y112", "y122", "y222"],
    ]


def test_build_flattening_single_factor_is_a0():
    F = build_flattening(parse_profile("P(2,3)"), (1,))
    assert F.shape == (3, 6)
    assert np.array_equal(F.entries, factor_catalecticant(2, 3, 1).entries)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_example_segre_matrix(n):
    profile = FactorProfile.segre([1, 1, n])
    F = build_flattening(profile, (1, 1, 0))
    assert F.shape == (4, n + 1)
    # row (i, j), column k holds v_{ijk}; printed row order is v_00*, v_10*, v_11*, v_01*
    def v(i, j, k):
        return coord_index(profile, [(1 - i, i), (1 - j, j), tuple(int(t == k) for t in range(n + 1))])
    printed = [[v(i, j, k) for k in range(n + 1)] for i, j in [(0, 0), (1, 0), (1, 1), (0, 1)]]
    assert sorted(map(tuple, F.entries.tolist())) == sorted(map(tuple, printed))


@pytest.mark.parametrize("k,m", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)])
def test_kronecker_square(k, m):
    F = build_flattening(FactorProfile(((1, 2 * k), (m, 2))), (k, 1))
    assert F.shape == ((k + 1) * (m + 1), (k + 1) * (m + 1))


def test_hankel_pattern():
    k = 3
    F = factor_catalecticant(1, 2 * k, k)
    mons = enumerate_monomials(1, 2 * k)
    for i in range(k + 1):
        for j in range(k + 1):
            assert mons[F.entry(i, j)] == (2 * k - i - j, i + j)


def test_symmetric_pattern():
    F = factor_catalecticant(4, 2, 1)
    assert F.shape == (5, 5)
    assert np.array_equal(F.entries, F.entries.T)


profiles = st.lists(st.tuples(st.integers(1, 2), st.integers(1, 3)), min_size=1, max_size=3).map(
    lambda fs: FactorProfile(tuple(fs))
)


@settings(max_examples=60, deadline=None)
@given(profiles, st.data())
def test_kronecker_consistency(profile, data):
    split = tuple(data.draw(st.integers(0, d)) for d in profile.ds)
    F = build_flattening(profile, split, allow_degenerate=True)
    assert np.array_equal(F.entries, kronecker_entries(profile, split))


@settings(max_examples=60, deadline=None)
@given(profiles, st.data())
def test_transpose_law(profile, data):
    split = tuple(data.draw(st.integers(0, d)) for d in profile.ds)
    twin = tuple(d - a for a, d in zip(split, profile.ds))
    F = build_flattening(profile, split, allow_degenerate=True)
    G = build_flattening(profile, twin, allow_degenerate=True)
    assert np.array_equal(F.entries, G.entries.T)


@settings(max_examples=60, deadline=None)
@given(profiles, st.data())
def test_shape_and_entries(profile, data):
    split = tuple(data.draw(st.integers(0, d)) for d in profile.ds)
    F = build_flattening(profile, split, allow_degenerate=True)
    assert F.shape == flattening_shape(profile, split)
    r, c = data.draw(st.integers(0, F.shape[0] - 1)), data.draw(st.integers(0, F.shape[1] - 1))
    summed = [tuple(x + y for x, y in zip(a, b)) for a, b in zip(F.rows[r], F.cols[c])]
    assert F.entry(r, c) == coord_index(profile, summed)


def test_degenerate_split_rejected():
    with pytest.raises(ValueError):
        build_flattening(parse_profile("P(1)xP(2)"), (0, 0))
    with pytest.raises(ValueError):
        build_flattening(parse_profile("P(1)xP(2)"), (1, 1))
    with pytest.raises(ValueError):
        build_flattening(parse_profile("P(1)xP(2)"), (2, 0))


def test_census_five_lines():
    census = split_census(parse_profile("P(1)x5"))
    assert census == {(4, 8): 10, (2, 16): 5}


def test_two_factor_single_split():
    assert enumerate_splits(parse_profile("P(2)xP(4)")) == [(1, 0)]


def brute_force_splits(ds):
    classes = set()
    for a in itertools.product(*(range(d + 1) for d in ds)):
        if all(x == 0 for x in a) or a == tuple(ds):
            continue
        twin = tuple(d - x for x, d in zip(a, ds))
        classes.add(frozenset([a, twin]))
    return classes


def test_single_factor_degree_four_splits():
    profile = parse_profile("P(1,4)")
    splits = enumerate_splits(profile)
    assert sorted(splits) == [(1,), (2,)]
    assert sorted(flattening_shape(profile, s) for s in splits) == [(2, 4), (3, 3)]
    assert len(brute_force_splits((4,))) == 2


@pytest.mark.parametrize("text", ["P(1)x5", "P(1,4)", "P(2,2)xP(1,3)", "P(1)xP(2,2)xP(1)"])
def test_splits_match_brute_force(text):
    profile = parse_profile(text)
    splits = enumerate_splits(profile)
    assert len(splits) == len(set(splits)) == len(brute_force_splits(profile.ds))
    for s in splits:
        r, c = flattening_shape(profile, s)
        assert r <= c


def test_minor_a0_collected_square():
    A0 = factor_catalecticant(2, 3, 1)
    f = minor_poly(A0, [0, 1], [0, 1])
    # y000*y011 - y001^2
    assert f == SparsePoly({(0, 3): 1, (1, 1): -1}, 2)


def test_one_by_one_minor():
    A0 = factor_catalecticant(2, 3, 1)
    for r in range(3):
        for c in range(6):
            assert minor_poly(A0, [r], [c]) == SparsePoly.variable(A0.entry(r, c))


def test_minor_size_mismatch():
    with pytest.raises(ValueError):
        minor_poly(factor_catalecticant(2, 3, 1), [0, 1], [0])


def test_minor_evaluation_commutes_a0():
    A0 = factor_catalecticant(2, 3, 1)
    rng = random.Random(3)
    for _ in range(20):
        R = sorted(rng.sample(range(3), 3))
        C = sorted(rng.sample(range(6), 3))
        pt = [rng.randrange(P) for _ in range(10)]
        sub = [[pt[A0.entry(r, c)] for c in C] for r in R]
        assert eval_poly(minor_poly(A0, R, C), pt, P) == leibniz_det(sub, P)


def test_minor_evaluation_commutes_random_flattenings():
    rng = random.Random(11)
    cases = [("P(1)xP(1)xP(3)", (1, 1, 0)), ("P(1,2)xP(1,2)", (1, 1)), ("P(2,2)xP(1)", (1, 1)), ("P(1)x4", (1, 0, 1, 0))]
    for text, split in cases:
        F = build_flattening(parse_profile(text), split)
        for _ in range(10):
            k = rng.randint(1, min(F.shape))
            R = sorted(rng.sample(range(F.shape[0]), k))
            C = sorted(rng.sample(range(F.shape[1]), k))
            pt = [rng.randrange(P) for _ in range(F.profile.num_coords)]
            sub = [[pt[F.entry(r, c)] for c in C] for r in R]
            assert eval_poly(minor_poly(F, R, C), pt, P) == leibniz_det(sub, P)


def test_colex_order():
    got = list(colex_combinations(4, 2))
    assert got == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert sorted(got) == sorted(itertools.combinations(range(4), 2))


def test_emit_counts():
    M = build_flattening(FactorProfile.segre([1, 1, 4]), (1, 1, 0))
    total, stream = emit_minors(M, 3)
    assert total == comb(4, 3) * comb(5, 3) == 40
    assert len(list(stream)) == 40
    total, _ = emit_minors(factor_catalecticant(2, 3, 1), 2)
    assert total == comb(3, 2) * comb(6, 2) == 45


def test_emit_cap_and_order():
    A0 = factor_catalecticant(2, 3, 1)
    total, stream = emit_minors(A0, 2, cap=7)
    items = list(stream)
    assert total == 45 and len(items) == 7
    keys = [(R, C) for R, C, _ in items]
    assert keys[0] == ((0, 1), (0, 1))
    assert keys[1] == ((0, 1), (0, 2))


def test_emit_too_large():
    A0 = factor_catalecticant(2, 3, 1)
    with pytest.raises(ValueError):
        emit_minors(A0, 4)
