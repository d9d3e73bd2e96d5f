import itertools

import numpy as np
import pytest

from secantvar import classify
from secantvar.delpezzo import (
    DELETIONS,
    SURFACES,
    build_surface,
    deleted_column_matrix,
    delpezzo_degrees,
    delpezzo_report,
    minors_of,
    secant_checks,
    symbolic_minor_vanishing,
)
from secantvar.flatten import factor_catalecticant, minor_poly
from secantvar.numeric import FieldConfig, eval_poly
from secantvar.secant import sample_secant_point, terracini_dim


def names(spec):
    coords = spec.coordinate_names()
    return [[coords[int(v)] for v in row] for row in spec.matrix]


def test_s9_matrix():
    spec = build_surface("S9")
    assert spec.matrix.shape == (3, 6) and len(spec.monomials) == 10
    assert names(spec)[0] == ["y000", "y001", "y002", "y011", "y012", "y022"]


def test_d8_matrix_printed():
    spec = build_surface("D8")
    assert spec.matrix.shape == (4, 4) and len(spec.monomials) == 9
    B = names(spec)
    assert B == [
        ["y0000", "y0001", "y0100", "y0101"],
        ["y0001", "y0011", "y0101", "y0111"],
        ["y0100", "y0101", "y1100", "y1101"],
        ["y0101", "y0111", "y1101", "y1111"],
    ]
    assert B[0][3] == B[1][2] == "y0101"
    assert sum(row.count("y0101") for row in B) == 4


@pytest.mark.parametrize("name,shape,count", [("S8", (3, 5), 9), ("S7", (3, 4), 8), ("S6", (3, 3), 7)])
def test_projected_matrices(name, shape, count):
    spec = build_surface(name)
    assert spec.matrix.shape == shape and len(spec.monomials) == count
    assert spec.matrix_variables() == set(range(count))


def test_dropped_monomials():
    rows = {name: {tuple(r) for r in build_surface(name).monomials.tolist()} for name in ("S9", "S8", "S7", "S6")}
    assert rows["S9"] - rows["S8"] == {(0, 0, 3)}
    assert rows["S8"] - rows["S7"] == {(0, 3, 0)}
    assert rows["S7"] - rows["S6"] == {(3, 0, 0)}


def test_column_deletion_removes_one_variable_each():
    A0 = factor_catalecticant(2, 3, 1).entries
    support = set(np.unique(A0).tolist())
    expected_lost = [9, 6, 0]  # y222, y111, y000 in the P^9 numbering
    for k in range(1, 4):
        A, deleted = deleted_column_matrix(k)
        assert deleted == DELETIONS[:k]
        now = set(np.unique(A).tolist())
        assert support - now == {expected_lost[k - 1]}
        support = now


def test_unknown_surface():
    with pytest.raises(ValueError):
        build_surface("S2")


@pytest.mark.parametrize("name", SURFACES)
def test_two_minors_vanish_symbolically(name):
    assert symbolic_minor_vanishing(build_surface(name), 2)


@pytest.mark.parametrize("name", ["S9", "S8", "D8"])
def test_higher_minors_vanish_on_the_surface(name):
    # a rank-one matrix has vanishing minors of every size >= 2
    assert symbolic_minor_vanishing(build_surface(name), 3)


def test_symbolic_vanishing_size_error():
    with pytest.raises(ValueError):
        symbolic_minor_vanishing(build_surface("S6"), 4)


def test_projection_law_minors_are_inherited():
    for k in range(3):
        big = build_surface(SURFACES[k])
        small = build_surface(SURFACES[k + 1])
        big_polys = set()
        for _, _, f in minors_of(big, 3):
            big_polys.add(frozenset((tuple(big.base_coords[v] for v in m), c) for m, c in f.terms.items()))
        for _, _, f in minors_of(small, 3):
            lifted = frozenset((tuple(small.base_coords[v] for v in m), c) for m, c in f.terms.items())
            assert lifted in big_polys


def test_projection_law_numeric():
    cfg = FieldConfig()
    for k in range(3):
        small = build_surface(SURFACES[k + 1])
        big = build_surface(SURFACES[k])
        sample = sample_secant_point(big, 2, cfg).image
        where = {b: i for i, b in enumerate(big.base_coords)}
        projected = [sample[where[b]] for b in small.base_coords]
        for _, _, f in minors_of(small, 3):
            assert eval_poly(f, projected, cfg.p) == 0


@pytest.mark.parametrize("name,expected", [("S9", 5), ("S8", 5), ("S7", 5), ("S6", 5), ("D8", 5)])
def test_sigma2_not_defective(name, expected):
    assert terracini_dim(build_surface(name), 2).projective_dim == expected


def test_secant_check_s8():
    chk = secant_checks(build_surface("S8"), 2)
    assert chk.minors_vanish is True and chk.oracle_dim == 5 and chk.defect == 0


def test_secant_check_d8():
    chk = secant_checks(build_surface("D8"), 3)
    assert chk.minors_vanish is True and chk.minors_checked == 1
    assert chk.oracle_dim == 7 and chk.expected_dim == 8 and chk.defect == 1


@pytest.mark.parametrize("name,dim", [("S8", 8), ("S9", 8)])
def test_secant_check_sigma3(name, dim):
    chk = secant_checks(build_surface(name), 3)
    assert chk.oracle_dim == dim and chk.defect == 0
    assert chk.minors_vanish is None and "no-constraint" in chk.flags


def test_degrees():
    table = {row["surface"]: row for row in delpezzo_degrees()}
    assert table["S9"]["degree"] == 15
    assert table["S8"]["degree"] == 10
    assert table["S7"]["degree"] == 6
    assert table["S6"]["degree"] == 3
    assert table["D8"]["degree"] == 10 and classify.REPORTED_ONLY in table["D8"]["flags"]


def test_report_shape():
    report = delpezzo_report()
    assert len(report["secants"]) == 2 * len(SURFACES)
    assert [n["surface"] for n in report["notes"]] == ["S5", "S4", "S3"]
