from itertools import combinations, permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artal.torsion import (
    ORIGIN,
    POINTS,
    PointSubset,
    TorsionLine,
    TorsionPoint,
    add,
    all_lines,
    collinear_triple_count,
    count_collinear_mask,
    is_collinear_triple,
    third_point,
)

P = TorsionPoint


@pytest.mark.parametrize(
    "p, q, expected",
    [((1, 2), (2, 1), (0, 0)), ((0, 0), (1, 1), (1, 1)), ((1, 0), (1, 0), (2, 0))],
)
def test_add_examples(p, q, expected):
    assert add(P(*p), P(*q)) == P(*expected)


def test_group_axioms_exhaustive():
    for p in POINTS:
        assert p + ORIGIN == p
        assert p + p + p == ORIGIN
        assert p + (-p) == ORIGIN
    for p, q, r in product(POINTS, repeat=3):
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p


def test_collinear_examples():
    assert is_collinear_triple(P(0, 0), P(1, 0), P(2, 0))
    assert not is_collinear_triple(P(0, 0), P(1, 0), P(1, 0))
    assert not is_collinear_triple(P(0, 0), P(1, 0), P(0, 1))


def test_collinearity_symmetric_over_all_ordered_triples():
    for t in product(POINTS, repeat=3):
        assert len({is_collinear_triple(*s) for s in permutations(t)}) == 1


def test_twelve_lines_by_brute_force():
    lines = all_lines()
    assert len(lines) == 12
    assert all(is_collinear_triple(*line.points) for line in lines)
    brute = {frozenset(t) for t in combinations(POINTS, 3) if sum(x.a for x in t) % 3 == 0 and sum(x.b for x in t) % 3 == 0}
    assert {line.points for line in lines} == brute
    assert lines == sorted(lines, key=lambda line: line.sorted_points)


def test_hesse_configuration_incidences():
    lines = all_lines()
    for p in POINTS:
        assert sum(p in line.points for line in lines) == 4
    # any two points lie on exactly one common line
    for p, q in combinations(POINTS, 2):
        assert sum(p in line.points and q in line.points for line in lines) == 1
        assert third_point(p, q) in next(line.points for line in lines if {p, q} <= line.points)


def test_torsion_line_rejects_non_lines():
    with pytest.raises(ValueError):
        TorsionLine(frozenset({P(0, 0), P(1, 0), P(0, 1)}))


def test_collinear_count_examples():
    assert collinear_triple_count(PointSubset(POINTS)) == 12
    assert collinear_triple_count(PointSubset([P(0, 0), P(1, 0)])) == 0
    assert collinear_triple_count(PointSubset([P(0, 0), P(1, 0), P(2, 0), P(0, 1)])) == 1


def test_collinear_count_matches_line_filter_on_every_subset():
    lines = all_lines()
    for mask in range(512):
        s = PointSubset.from_mask(mask)
        by_lines = sum(1 for line in lines if line.points <= set(s))
        assert collinear_triple_count(s) == by_lines == count_collinear_mask(mask)


def test_subset_serialization_roundtrip():
    s = PointSubset([P(2, 0), P(0, 0), P(1, 0)])
    assert str(s) == "[0,0 1,0 2,0]"
    assert PointSubset.parse(str(s)) == s
    assert PointSubset.parse("0,0 1,0") == PointSubset([P(0, 0), P(1, 0)])
    assert PointSubset.parse("[]") == PointSubset()


@pytest.mark.parametrize("bad", ["[0,0 0,0]", "[0,3]", "[0,0", "[a,b]", "[0,0,0]"])
def test_subset_parse_errors(bad):
    with pytest.raises(ValueError):
        PointSubset.parse(bad)


@given(st.integers(0, 511))
def test_mask_roundtrip(mask):
    s = PointSubset.from_mask(mask)
    assert s.mask == mask
    assert list(s) == sorted(s)
