"""Total coordinate ring generators, relations, graded dimensions, characters."""

from fractions import Fraction

import pytest

from adecox import (
    DivisorClass,
    SurfaceConfigD,
    SurfaceFamily,
    anticanonical_shift,
    basis_class,
    build_lattice,
    cox_generators,
    cox_presentation,
    degree,
    dn_ideal,
    git_hilbert,
    graded_piece_dim,
    relation_census,
    section_dim,
    torus_character,
    verify_hilbert,
)


def _lat(kind, n):
    return build_lattice(SurfaceFamily(kind, n))


def _points(n):
    return SurfaceConfigD(tuple(range(n)))


GENERATOR_COUNTS = [
    ("A", 3, 4),
    ("D", 4, 8),
    ("E", 4, 10),
    ("E", 6, 27),
    ("E", 7, 56),
    ("E", 8, 242),
]


@pytest.mark.parametrize("kind,n,count", GENERATOR_COUNTS)
def test_generator_counts(kind, n, count):
    lat = _lat(kind, n)
    gens = cox_generators(lat)
    assert len(gens) == count
    names = [name for name, _ in gens]
    assert len(set(names)) == count
    for _, cls in gens:
        assert degree(lat, cls) == 1


def test_e8_extra_generators_carry_the_shift_class():
    lat = _lat("E", 8)
    gens = dict(cox_generators(lat))
    shift = anticanonical_shift(lat)
    assert shift == lat.C - lat.K
    assert gens["k1"] == shift
    assert gens["k2"] == shift


def test_d_generators_pair_lines_with_fiber_complements():
    lat = _lat("D", 3)
    gens = dict(cox_generators(lat))
    f = basis_class(lat, "f")
    for i in range(1, 4):
        li = basis_class(lat, f"l{i}")
        assert gens[f"x{i}"] == li
        assert gens[f"y{i}"] == f - li


def test_section_dim_d_family():
    lat = _lat("D", 4)
    f = basis_class(lat, "f")
    l1 = basis_class(lat, "l1")
    assert section_dim(lat, f * 2 + l1 * 3) == 3
    assert section_dim(lat, f - l1 * 2) == 0
    assert section_dim(lat, f) == 2
    assert section_dim(lat, lat.zero()) == 1
    assert section_dim(lat, f - l1) == 1


def test_section_dim_a_family():
    lat = _lat("A", 3)
    l1 = basis_class(lat, "l1")
    l2 = basis_class(lat, "l2")
    assert section_dim(lat, l1 + l2 * 4) == 1
    assert section_dim(lat, l1 - l2) == 0
    assert section_dim(lat, lat.zero()) == 1


def test_section_dim_e_family_supported_shapes():
    e7 = _lat("E", 7)
    assert section_dim(e7, basis_class(e7, "l1")) == 1
    assert section_dim(e7, basis_class(e7, "h") - basis_class(e7, "l1")) == 2
    assert section_dim(e7, anticanonical_shift(e7)) == 3

    e8 = _lat("E", 8)
    assert section_dim(e8, anticanonical_shift(e8)) == 2
    assert section_dim(e8, anticanonical_shift(e8) * 2) == 4


def test_section_dim_e_family_rejects_other_classes():
    e6 = _lat("E", 6)
    with pytest.raises(ValueError):
        section_dim(e6, anticanonical_shift(e6))
    with pytest.raises(ValueError):
        section_dim(e6, basis_class(e6, "h"))


def test_section_dim_requires_orthogonality_to_c():
    d4 = _lat("D", 4)
    s = basis_class(d4, "s")
    with pytest.raises(ValueError):
        section_dim(d4, s)
    e6 = _lat("E", 6)
    with pytest.raises(ValueError):
        section_dim(e6, basis_class(e6, "l7"))


def test_config_validation():
    with pytest.raises(ValueError):
        SurfaceConfigD((0, 1, 1))
    config = SurfaceConfigD((0, "1/2", 2))
    assert config.points[1] == Fraction(1, 2)


def test_dn_ideal_d3_coefficients():
    lat = _lat("D", 3)
    pres = dn_ideal(lat, _points(3))
    assert len(pres.relations) == 1
    rel = pres.relations[0]
    assert rel.cls == basis_class(lat, "f")
    coeffs = [c for c, _ in rel.terms]
    assert coeffs == [Fraction(-1), Fraction(2), Fraction(-1)]
    monomials = [m for _, m in rel.terms]
    assert monomials == [(0, 3), (1, 4), (2, 5)]


def test_dn_ideal_d4_coefficients():
    lat = _lat("D", 4)
    pres = dn_ideal(lat, _points(4))
    assert len(pres.relations) == 2
    second = pres.relations[1]
    assert [c for c, _ in second.terms] == [Fraction(-2), Fraction(3), Fraction(-1)]
    assert [m for _, m in second.terms] == [(0, 4), (1, 5), (3, 7)]


def test_dn_ideal_small_n_is_free():
    lat = _lat("D", 2)
    pres = dn_ideal(lat, _points(2))
    assert pres.relations == ()


def test_dn_ideal_errors():
    with pytest.raises(ValueError):
        dn_ideal(_lat("E", 6), _points(6))
    with pytest.raises(ValueError):
        dn_ideal(_lat("D", 4), _points(3))


def test_cox_presentation_dispatch():
    a2 = cox_presentation(_lat("A", 2))
    assert len(a2.generators) == 3
    assert a2.relations == ()
    d3 = cox_presentation(_lat("D", 3), _points(3))
    assert len(d3.relations) == 1
    with pytest.raises(ValueError):
        cox_presentation(_lat("E", 6))


def test_graded_piece_dim_examples():
    d3 = _lat("D", 3)
    pres3 = cox_presentation(d3, _points(3))
    f3 = basis_class(d3, "f")
    assert graded_piece_dim(pres3, d3, f3) == 2

    d4 = _lat("D", 4)
    pres4 = cox_presentation(d4, _points(4))
    f4 = basis_class(d4, "f")
    assert graded_piece_dim(pres4, d4, f4 * 2) == 3
    assert graded_piece_dim(pres4, d4, d4.zero()) == 1
    assert graded_piece_dim(pres4, d4, -f4) == 0

    a2 = _lat("A", 2)
    presa = cox_presentation(a2)
    target = basis_class(a2, "l1") + basis_class(a2, "l2") * 2
    assert graded_piece_dim(presa, a2, target) == 1


def test_graded_piece_dim_respects_cap():
    d3 = _lat("D", 3)
    pres = cox_presentation(d3, _points(3))
    f = basis_class(d3, "f")
    with pytest.raises(ValueError):
        graded_piece_dim(pres, d3, f, cap=1)


def test_verify_hilbert_d3():
    lat = _lat("D", 3)
    report = verify_hilbert(cox_presentation(lat, _points(3)), lat, 6)
    assert report["ok"]
    assert report["mismatches"] == []
    assert report["classes_checked"] > 100


def test_verify_hilbert_d3_generic_points():
    lat = _lat("D", 3)
    config = SurfaceConfigD((Fraction(1, 3), Fraction(-2, 7), 5))
    report = verify_hilbert(cox_presentation(lat, config), lat, 4)
    assert report["ok"]


def test_verify_hilbert_a4():
    lat = _lat("A", 4)
    report = verify_hilbert(cox_presentation(lat), lat, 5)
    assert report["ok"]
    assert report["mismatches"] == []


CENSUS_CASES = [
    ("E", 4, "ruling", (3, 2, 1)),
    ("E", 5, "ruling", (4, 2, 2)),
    ("E", 6, "ruling", (5, 2, 3)),
    ("E", 7, "ruling", (6, 2, 4)),
    ("E", 7, "shift", (28, 3, 25)),
    ("E", 8, "shift", (2, 2, 0)),
    ("E", 8, "double-shift", (123, 4, 119)),
    ("D", 4, "ruling", (4, 2, 2)),
    ("D", 6, "ruling", (6, 2, 4)),
]


@pytest.mark.parametrize("kind,n,which,expected", CENSUS_CASES)
def test_relation_census(kind, n, which, expected):
    lat = _lat(kind, n)
    if which == "ruling":
        if kind == "D":
            target = lat.C
        else:
            target = basis_class(lat, "h") - basis_class(lat, "l1")
    elif which == "shift":
        target = anticanonical_shift(lat)
    else:
        target = anticanonical_shift(lat) * 2
    census = relation_census(lat, target)
    assert (census.monomials, census.sections, census.relations) == expected


def test_relation_census_rejects_unsupported_targets():
    lat = _lat("E", 6)
    with pytest.raises(ValueError):
        relation_census(lat, basis_class(lat, "l1"))


def test_torus_character_invariant_class():
    lat = _lat("D", 4)
    reduced, weight = torus_character(lat, basis_class(lat, "f"))
    assert reduced == lat.zero()
    assert weight == (0, 0, 0, 0)


def test_torus_character_e8_shift_is_unseen_by_the_small_torus():
    lat = _lat("E", 8)
    reduced, weight = torus_character(lat, anticanonical_shift(lat))
    assert weight == (0,) * 8
    assert not reduced.is_zero()


def test_torus_characters_separate_e6_generators():
    lat = _lat("E", 6)
    chars = {torus_character(lat, cls) for _, cls in cox_generators(lat)}
    assert len(chars) == 27


def test_git_hilbert_d_family():
    lat = _lat("D", 4)
    f = basis_class(lat, "f")
    s = basis_class(lat, "s")
    assert git_hilbert(lat, f, 5) == [1, 2, 3, 4, 5, 6]
    assert git_hilbert(lat, s, 5) == [1, 2, 3, 4, 5, 6]
    pres = cox_presentation(lat, _points(4))
    assert git_hilbert(lat, f, 3, presentation=pres) == [1, 2, 3, 4]


def test_git_hilbert_a_family():
    lat = _lat("A", 3)
    l1 = basis_class(lat, "l1")
    assert git_hilbert(lat, l1, 4) == [1, 1, 1, 1, 1]


def test_git_hilbert_errors():
    e6 = _lat("E", 6)
    with pytest.raises(ValueError):
        git_hilbert(e6, basis_class(e6, "l1"), 3)
    d4 = _lat("D", 4)
    with pytest.raises(ValueError):
        git_hilbert(d4, basis_class(d4, "l1"), 3)
    with pytest.raises(ValueError):
        git_hilbert(d4, basis_class(d4, "f"), -1)
