"""Enumeration of roots, lines and rulings by exact lattice search."""

import pytest

from adecox import (
    DivisorClass,
    SurfaceFamily,
    basis_class,
    build_lattice,
    enumerate_lines,
    enumerate_roots,
    enumerate_rulings,
    pair,
    pairs_of_lines_summing_to,
)

LINE_COUNTS_E = {3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}
RULING_COUNTS_E = {3: 3, 4: 5, 5: 10, 6: 27, 7: 126, 8: 2160}
ROOT_COUNTS_E = {3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}


@pytest.mark.parametrize("n", sorted(LINE_COUNTS_E))
def test_e_family_counts(n):
    lat = build_lattice(SurfaceFamily("E", n))
    assert len(enumerate_lines(lat)) == LINE_COUNTS_E[n]
    assert len(enumerate_rulings(lat)) == RULING_COUNTS_E[n]
    assert len(enumerate_roots(lat)) == ROOT_COUNTS_E[n]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_d_family_counts(n):
    lat = build_lattice(SurfaceFamily("D", n))
    assert len(enumerate_lines(lat)) == 2 * n
    assert len(enumerate_roots(lat)) == 2 * n * (n - 1)
    rulings = enumerate_rulings(lat)
    assert list(rulings) == [lat.C]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_a_family_counts(n):
    lat = build_lattice(SurfaceFamily("A", n))
    assert len(enumerate_lines(lat)) == n + 1
    assert len(enumerate_roots(lat)) == n * (n + 1)
    assert len(enumerate_rulings(lat)) == 0


@pytest.mark.parametrize(
    "kind,n",
    [("E", 6), ("E", 7), ("D", 4), ("A", 3)],
)
def test_defining_equations_hold(kind, n):
    """Every enumerated class satisfies its defining intersection numbers."""
    lat = build_lattice(SurfaceFamily(kind, n))
    cases = [
        (enumerate_roots(lat), -2, 0),
        (enumerate_lines(lat), -1, -1),
        (enumerate_rulings(lat), 0, -2),
    ]
    for classes, self_int, k_int in cases:
        for d in classes:
            assert pair(lat, d, d) == self_int
            assert pair(lat, d, lat.K) == k_int
            assert pair(lat, d, lat.C) == 0


def test_results_are_sorted_and_duplicate_free():
    lat = build_lattice(SurfaceFamily("E", 6))
    lines = list(enumerate_lines(lat))
    assert lines == sorted(lines)
    assert len(lines) == len(set(lines))


def test_e3_line_classes_explicitly():
    lat = build_lattice(SurfaceFamily("E", 3))
    h = basis_class(lat, "h")
    ls = [basis_class(lat, f"l{i}") for i in range(1, 4)]
    expected = set(ls)
    expected.update(h - ls[i] - ls[j] for i in range(3) for j in range(i + 1, 3))
    assert enumerate_lines(lat).as_set() == expected


def test_roots_closed_under_negation():
    lat = build_lattice(SurfaceFamily("D", 4))
    roots = enumerate_roots(lat).as_set()
    assert {-r for r in roots} == roots


def test_pairs_of_lines_summing_to_ruling_e6():
    lat = build_lattice(SurfaceFamily("E", 6))
    lines = enumerate_lines(lat)
    ruling = basis_class(lat, "h") - basis_class(lat, "l1")
    assert pairs_of_lines_summing_to(lat, ruling, lines) == 5


def test_pairs_of_lines_summing_to_fiber_d4():
    lat = build_lattice(SurfaceFamily("D", 4))
    lines = enumerate_lines(lat)
    assert pairs_of_lines_summing_to(lat, lat.C, lines) == 4


def test_pairs_of_lines_for_large_targets():
    lat7 = build_lattice(SurfaceFamily("E", 7))
    shift7 = lat7.C - lat7.K
    assert pairs_of_lines_summing_to(lat7, shift7, enumerate_lines(lat7)) == 28

    lat8 = build_lattice(SurfaceFamily("E", 8))
    target8 = (lat8.C - lat8.K) * 2
    assert pairs_of_lines_summing_to(lat8, target8, enumerate_lines(lat8)) == 120


def test_pairs_count_zero_when_no_decomposition():
    lat = build_lattice(SurfaceFamily("A", 2))
    lines = enumerate_lines(lat)
    target = DivisorClass((0, 1, 1, 0))
    assert pairs_of_lines_summing_to(lat, target, lines) == 1
    missing = DivisorClass((1, 0, 0, 0))
    assert pairs_of_lines_summing_to(lat, missing, lines) == 0
