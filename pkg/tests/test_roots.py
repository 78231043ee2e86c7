"""Simple roots, Cartan matrices, classification, reflections and orbits."""

import pytest

from adecox import (
    SurfaceFamily,
    basis_class,
    build_lattice,
    build_root_system,
    classify_type,
    enumerate_lines,
    enumerate_roots,
    enumerate_rulings,
    pair,
    positive_roots,
    reflect,
    simple_roots,
    weyl_orbit,
)
from adecox.linalg import det


def test_d4_simple_roots_and_pairings():
    lat = build_lattice(SurfaceFamily("D", 4))
    alphas = simple_roots(lat)
    assert len(alphas) == 4
    f = basis_class(lat, "f")
    l1 = basis_class(lat, "l1")
    l2 = basis_class(lat, "l2")
    assert alphas[0] == -f + l1 + l2
    assert alphas[1] == l2 - l1
    for a in alphas:
        assert pair(lat, a, a) == -2
        assert pair(lat, a, lat.C) == 0
    # Branch node: alpha_1 meets alpha_2 but not the neighbours further out.
    assert pair(lat, alphas[0], alphas[1]) == 0
    assert pair(lat, alphas[0], alphas[2]) == 1
    assert pair(lat, alphas[1], alphas[2]) == 1


def test_e6_simple_roots_and_pairings():
    lat = build_lattice(SurfaceFamily("E", 6))
    alphas = simple_roots(lat)
    assert len(alphas) == 6
    h = basis_class(lat, "h")
    l1 = basis_class(lat, "l1")
    l2 = basis_class(lat, "l2")
    l3 = basis_class(lat, "l3")
    assert alphas[0] == -h + l1 + l2 + l3
    assert alphas[1] == l2 - l1
    # The cubic node attaches to the third leg, not to the chain start.
    assert pair(lat, alphas[0], alphas[1]) == 0
    assert pair(lat, alphas[0], alphas[3]) == 1


def test_a_family_simple_roots():
    lat = build_lattice(SurfaceFamily("A", 3))
    alphas = simple_roots(lat)
    labels = lat.basis_labels
    for i, alpha in enumerate(alphas):
        lo = basis_class(lat, labels[i + 1])
        hi = basis_class(lat, labels[i + 2])
        assert alpha == hi - lo


CLASSIFICATION = [
    ("A", 1, "A1"),
    ("A", 4, "A4"),
    ("D", 2, "A1xA1"),
    ("D", 3, "A3"),
    ("D", 4, "D4"),
    ("D", 6, "D6"),
    ("E", 3, "A2xA1"),
    ("E", 4, "A4"),
    ("E", 5, "D5"),
    ("E", 6, "E6"),
    ("E", 7, "E7"),
    ("E", 8, "E8"),
]


@pytest.mark.parametrize("kind,n,expected", CLASSIFICATION)
def test_classification(kind, n, expected):
    system = build_root_system(build_lattice(SurfaceFamily(kind, n)))
    assert classify_type(system) == expected
    assert system.type_label == expected


POSITIVE_COUNTS = [
    ("A", 3, 6),
    ("A", 5, 15),
    ("D", 4, 12),
    ("D", 5, 20),
    ("E", 3, 4),
    ("E", 6, 36),
    ("E", 7, 63),
    ("E", 8, 120),
]


@pytest.mark.parametrize("kind,n,count", POSITIVE_COUNTS)
def test_positive_root_counts(kind, n, count):
    lat = build_lattice(SurfaceFamily(kind, n))
    system = build_root_system(lat)
    pos = positive_roots(system)
    assert len(pos) == count
    # Positive and negative roots together exhaust the (-2, 0) classes.
    all_roots = enumerate_roots(lat).as_set()
    assert set(pos) | {-r for r in pos} == all_roots


CARTAN_DETS = [
    ("A", 2, 3),
    ("A", 4, 5),
    ("D", 4, 4),
    ("D", 5, 4),
    ("E", 3, 6),
    ("E", 6, 3),
    ("E", 7, 2),
    ("E", 8, 1),
]


@pytest.mark.parametrize("kind,n,expected", CARTAN_DETS)
def test_cartan_determinants(kind, n, expected):
    system = build_root_system(build_lattice(SurfaceFamily(kind, n)))
    cartan = [list(row) for row in system.cartan]
    for i in range(len(cartan)):
        assert cartan[i][i] == 2
    assert det(cartan) == expected


def test_reflect_examples():
    lat = build_lattice(SurfaceFamily("E", 6))
    alphas = simple_roots(lat)
    h = basis_class(lat, "h")
    l1 = basis_class(lat, "l1")
    l2 = basis_class(lat, "l2")
    l3 = basis_class(lat, "l3")
    assert reflect(lat, l1, alphas[0]) == h - l2 - l3
    assert reflect(lat, l2, l2 - l1) == l1
    # Reflections are involutions.
    assert reflect(lat, reflect(lat, h, alphas[0]), alphas[0]) == h


def test_reflect_requires_a_root():
    lat = build_lattice(SurfaceFamily("E", 6))
    with pytest.raises(ValueError):
        reflect(lat, lat.K, basis_class(lat, "h"))


def test_orbit_of_a_line_is_all_lines():
    for kind, n in [("E", 6), ("D", 4), ("A", 3)]:
        lat = build_lattice(SurfaceFamily(kind, n))
        system = build_root_system(lat)
        lines = enumerate_lines(lat)
        seed = next(iter(lines))
        assert weyl_orbit(system, seed).as_set() == lines.as_set()


def test_orbit_of_invariant_class_is_singleton():
    lat = build_lattice(SurfaceFamily("D", 4))
    system = build_root_system(lat)
    assert weyl_orbit(system, lat.C).as_set() == {lat.C}


def test_orbit_of_ruling_class_e6():
    lat = build_lattice(SurfaceFamily("E", 6))
    system = build_root_system(lat)
    seed = basis_class(lat, "h") - basis_class(lat, "l1")
    orbit = weyl_orbit(system, seed)
    assert orbit.as_set() == enumerate_rulings(lat).as_set()
    assert len(orbit) == 27
