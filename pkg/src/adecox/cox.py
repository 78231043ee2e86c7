"""Cox-ring presentations, graded dimensions and torus data.

The ring studied here is graded by the divisor classes orthogonal to the
marking class ``C``.  All generators sit in anticanonical degree 1, so a
graded piece is spanned by the monomials of one class and cut down by the
quadratic relations; its dimension is an exact rank computation over the
rationals.

Families differ in what can be written down explicitly:

* ``A``: a free polynomial ring on the lines.
* ``D``: generators ``x_i`` (the lines ``l_i``) and ``y_i`` (the partner
  lines ``f - l_i``), with ``n - 2`` quadratic relations in class ``f``
  whose coefficients come from the fiber positions ``t_1, ..., t_n``.
* ``E``: the generator list is known (the lines, plus two extra degree-1
  generators of class ``-K + C`` when n = 8) and the quadratic relations
  are only counted per class (`relation_census`), not constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .curves import enumerate_lines, enumerate_rulings, pairs_of_lines_summing_to
from .lattice import DivisorClass, IntersectionLattice, basis_class, degree, pair
from .linalg import rational_rank
from .roots import build_root_system
from .weights import WeightVector, weight_of

# Guard for the monomial enumeration behind graded_piece_dim.
MONOMIAL_CAP = 200_000


@dataclass(frozen=True)
class SurfaceConfigD:
    """Fiber positions ``t_1, ..., t_n`` on the base line, pairwise distinct.

    Distinctness is the lattice-level shadow of choosing the blown-up points
    in general position; every relation coefficient below is a difference of
    two of these values, so distinctness is exactly what keeps them nonzero.
    """

    points: tuple[Fraction, ...]

    def __post_init__(self):
        pts = tuple(Fraction(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("fiber positions must be pairwise distinct")


@dataclass(frozen=True)
class Generator:
    name: str
    cls: DivisorClass


@dataclass(frozen=True)
class Relation:
    """A homogeneous quadric: terms are (coefficient, generator-index tuple)."""

    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]
    cls: DivisorClass


@dataclass(frozen=True)
class CoxPresentation:
    lattice: IntersectionLattice
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]

    def __post_init__(self):
        for g in self.generators:
            if degree(self.lattice, g.cls) != 1:
                raise ValueError(f"generator {g.name} does not have degree 1")
        for rel in self.relations:
            if not rel.terms:
                raise ValueError("relation with no terms")
            for coeff, mono in rel.terms:
                if coeff == 0:
                    raise ValueError("relation carries a zero coefficient")
                total = self.lattice.zero()
                for idx in mono:
                    total = total + self.generators[idx].cls
                if total != rel.cls:
                    raise ValueError("relation is not homogeneous")

    @property
    def generator_classes(self) -> tuple[DivisorClass, ...]:
        return tuple(g.cls for g in self.generators)


def anticanonical_shift(lattice: IntersectionLattice) -> DivisorClass:
    """The class ``-K + C``, the degree-1 stand-in for the anticanonical class.

    ``-K`` itself pairs nonzero with ``C``; adding ``C`` lands in the
    orthogonal sublattice without changing the class modulo ``ZC``.
    """
    return lattice.C - lattice.K


def cox_generators(lattice: IntersectionLattice) -> list[tuple[str, DivisorClass]]:
    """Named degree-1 generators of the graded section ring.

    A-family: one generator per line ``l_1 .. l_{n+1}``.  D-family: ``x_i``
    for ``l_i`` and ``y_i`` for ``f - l_i``.  E-family: one generator per
    line, plus two generators ``k1, k2`` of class ``-K + C`` when n = 8
    (that class has a two-dimensional space of sections there).
    """
    fam = lattice.family
    if fam.kind == "A":
        return [
            (f"x{i}", basis_class(lattice, f"l{i}")) for i in range(1, fam.n + 2)
        ]
    if fam.kind == "D":
        f = basis_class(lattice, "f")
        xs = [(f"x{i}", basis_class(lattice, f"l{i}")) for i in range(1, fam.n + 1)]
        ys = [(f"y{i}", f - basis_class(lattice, f"l{i}")) for i in range(1, fam.n + 1)]
        return xs + ys
    gens = [(f"x{i}", cls) for i, cls in enumerate(enumerate_lines(lattice), start=1)]
    if fam.n == 8:
        shift = anticanonical_shift(lattice)
        gens += [("k1", shift), ("k2", shift)]
    return gens


def dn_ideal(lattice: IntersectionLattice, config: SurfaceConfigD) -> CoxPresentation:
    """The quadratic ideal of the D-family section ring.

    Generator ``x_i y_i`` is the section ``u - t_i v`` of the ruling pencil
    vanishing on the fiber over ``t_i``; any three such sections are linearly
    dependent, giving for each i >= 3 the relation

        (t_2 - t_i) x_1 y_1 + (t_i - t_1) x_2 y_2 + (t_1 - t_2) x_i y_i = 0

    of class ``f``.  That is n - 2 relations; n = 2 yields a free ring.
    """
    fam = lattice.family
    if fam.kind != "D":
        raise ValueError("quadric ideal construction needs the D family")
    n = fam.n
    if len(config.points) != n:
        raise ValueError(f"need exactly {n} fiber positions, got {len(config.points)}")
    generators = tuple(Generator(name, cls) for name, cls in cox_generators(lattice))
    if n < 3:
        return CoxPresentation(lattice, generators, ())
    t = config.points
    f = basis_class(lattice, "f")
    relations = []
    for i in range(3, n + 1):
        terms = (
            (t[1] - t[i - 1], (0, n)),
            (t[i - 1] - t[0], (1, n + 1)),
            (t[0] - t[1], (i - 1, n + i - 1)),
        )
        relations.append(Relation(terms, f))
    return CoxPresentation(lattice, generators, tuple(relations))


def cox_presentation(
    lattice: IntersectionLattice, config: SurfaceConfigD | None = None
) -> CoxPresentation:
    """Generators plus relations where the relations are constructible."""
    fam = lattice.family
    if fam.kind == "A":
        gens = tuple(Generator(name, cls) for name, cls in cox_generators(lattice))
        return CoxPresentation(lattice, gens, ())
    if fam.kind == "D":
        if fam.n < 3:
            gens = tuple(Generator(name, cls) for name, cls in cox_generators(lattice))
            return CoxPresentation(lattice, gens, ())
        if config is None:
            raise ValueError("D-family presentations with n >= 3 need fiber positions")
        return dn_ideal(lattice, config)
    raise ValueError(
        "E-family relation ideals are not constructed; use relation_census"
    )


def section_dim(lattice: IntersectionLattice, d: DivisorClass) -> int:
    """Dimension of the space of sections of a class orthogonal to ``C``.

    A-family: classes are effective exactly when they are nonnegative sums
    of lines, each with a one-dimensional space.  D-family: for
    ``D = a f + sum c_i l_i`` the negative ``c_i`` force fiber components,
    leaving a pencil power ``a_0 = a - sum_{c_i < 0} |c_i|`` with
    ``a_0 + 1`` sections.  E-family: supported only on the closed class list
    (lines, rulings, ``-K + C`` for n in {7, 8}, ``-2K + 2C`` for n = 8),
    where the dimension equals ``1 + (D^2 - D.K) / 2``.
    """
    if pair(lattice, d, lattice.C) != 0:
        raise ValueError("class must be orthogonal to C")
    fam = lattice.family
    if fam.kind == "A":
        return 1 if all(c >= 0 for c in d.coords[1:]) else 0
    if fam.kind == "D":
        a = d.coords[0]
        a0 = a + sum(c for c in d.coords[2:] if c < 0)
        return a0 + 1 if a0 >= 0 else 0
    supported = d in enumerate_lines(lattice).as_set() or d in enumerate_rulings(
        lattice
    ).as_set()
    shift = anticanonical_shift(lattice)
    if fam.n in (7, 8) and d == shift:
        supported = True
    if fam.n == 8 and d == shift + shift:
        supported = True
    if not supported:
        raise ValueError(f"unsupported E-family class {d}")
    chi = 1 + (pair(lattice, d, d) - pair(lattice, d, lattice.K)) // 2
    return chi


@lru_cache(maxsize=None)
def _degree_buckets(
    presentation: CoxPresentation, deg: int, cap: int
) -> dict[DivisorClass, tuple[tuple[int, ...], ...]]:
    """All degree-``deg`` monomials in the generators, grouped by class."""
    classes = presentation.generator_classes
    n = len(classes)
    count = math.comb(n + deg - 1, deg) if deg > 0 else 1
    if count > cap:
        raise ValueError(
            f"monomial enumeration of size {count} exceeds the cap {cap}"
        )
    buckets: dict[DivisorClass, list[tuple[int, ...]]] = {}
    zero = presentation.lattice.zero()
    for mono in combinations_with_replacement(range(n), deg):
        total = zero
        for i in mono:
            total = total + classes[i]
        buckets.setdefault(total, []).append(mono)
    return {cls: tuple(mons) for cls, mons in buckets.items()}


def graded_piece_dim(
    presentation: CoxPresentation,
    lattice: IntersectionLattice,
    d: DivisorClass,
    cap: int = MONOMIAL_CAP,
) -> int:
    """Dimension of the class-``d`` piece of the presented quotient ring.

    Counts the monomials of class ``d`` and subtracts the exact rank of the
    matrix whose rows are all products relation * monomial landing in that
    class.
    """
    if pair(lattice, d, lattice.C) != 0:
        raise ValueError("class must be orthogonal to C")
    deg = degree(lattice, d)
    if deg < 0:
        return 0
    monomials = _degree_buckets(presentation, deg, cap).get(d, ())
    if not monomials:
        return 0
    index = {mono: j for j, mono in enumerate(monomials)}
    rows = []
    for rel in presentation.relations:
        shift_deg = deg - degree(lattice, rel.cls)
        if shift_deg < 0:
            continue
        shifts = _degree_buckets(presentation, shift_deg, cap).get(d - rel.cls, ())
        for shift in shifts:
            row = [Fraction(0)] * len(monomials)
            for coeff, mono in rel.terms:
                merged = tuple(sorted(mono + shift))
                row[index[merged]] += coeff
            rows.append(tuple(row))
    if not rows:
        return len(monomials)
    return len(monomials) - rational_rank(tuple(rows))


def verify_hilbert(
    presentation: CoxPresentation, lattice: IntersectionLattice, max_degree: int
) -> dict:
    """Compare graded dimensions with the closed-form section counts.

    Every class expressible as a sum of generator classes with anticanonical
    degree at most ``max_degree`` is checked; the report carries each class
    with both numbers and the list of mismatches (empty on success).
    """
    seen: set[DivisorClass] = set()
    for deg in range(max_degree + 1):
        seen.update(_degree_buckets(presentation, deg, MONOMIAL_CAP).keys())
    checked = []
    mismatches = []
    for cls in sorted(seen, key=lambda c: (degree(lattice, c), c.coords)):
        g = graded_piece_dim(presentation, lattice, cls)
        s = section_dim(lattice, cls)
        entry = {
            "class": list(cls.coords),
            "degree": degree(lattice, cls),
            "graded": g,
            "section": s,
        }
        checked.append(entry)
        if g != s:
            mismatches.append(entry)
    return {
        "family": lattice.family.label,
        "max_degree": max_degree,
        "classes_checked": len(checked),
        "classes": checked,
        "mismatches": mismatches,
        "ok": not mismatches,
    }


@dataclass(frozen=True)
class RelationCensus:
    monomials: int
    sections: int
    relations: int


def relation_census(lattice: IntersectionLattice, target: DivisorClass) -> RelationCensus:
    """Count quadratic relations in one class as monomials minus sections.

    Supported targets: any ruling; the class ``-K + C`` for (E, 7) and
    (E, 8); the class ``-2K + 2C`` for (E, 8).  Monomials are unordered line
    pairs summing to the target, plus the products of the two extra (E, 8)
    generators where those land in the target class.
    """
    fam = lattice.family
    lines = enumerate_lines(lattice)
    rulings = enumerate_rulings(lattice).as_set()
    shift = anticanonical_shift(lattice)
    is_e8 = fam.kind == "E" and fam.n == 8
    supported = target in rulings
    if fam.kind == "E" and fam.n in (7, 8) and target == shift:
        supported = True
    if is_e8 and target == shift + shift:
        supported = True
    if not supported:
        raise ValueError(f"unsupported census target {target}")
    monomials = pairs_of_lines_summing_to(lattice, target, lines)
    if is_e8:
        if target == shift + shift:
            monomials += 3  # k1^2, k1 k2, k2^2
        elif target == shift:
            monomials += 2  # the degree-1 monomials k1, k2 themselves
    sections = section_dim(lattice, target)
    relations = monomials - sections
    if relations < 0:
        raise AssertionError("more sections than monomials in a census class")
    return RelationCensus(monomials, sections, relations)


def torus_character(
    lattice: IntersectionLattice, d: DivisorClass
) -> tuple[DivisorClass, WeightVector]:
    """Characters of the two grading tori attached to a class.

    The big torus has character lattice Pic modulo ``ZC``; since ``C`` is a
    basis vector in every family, the canonical representative just zeroes
    that coordinate.  The small torus character is the Dynkin label vector.
    """
    idx = lattice.C.coords.index(1)
    coords = list(d.coords)
    coords[idx] = 0
    reduced = DivisorClass(tuple(coords))
    return reduced, weight_of(build_root_system(lattice), d)


def git_hilbert(
    lattice: IntersectionLattice,
    linearization: DivisorClass,
    max_k: int,
    presentation: CoxPresentation | None = None,
) -> list[int]:
    """Dimensions of the invariant graded pieces along a linearization ray.

    D-family: the ray is the ruling class ``f`` (the class ``s`` is accepted
    as an alias naming the same ray modulo ``ZC``); the values
    ``1, 2, ..., max_k + 1`` are the Hilbert function of the projective
    line.  A-family: any line class; all values are 1, the quotient is a
    point.  When a presentation is supplied the values come from
    graded_piece_dim instead of the closed-form section count.
    """
    if max_k < 0:
        raise ValueError("max_k must be nonnegative")
    fam = lattice.family
    if fam.kind == "D":
        f = basis_class(lattice, "f")
        s = basis_class(lattice, "s")
        if linearization not in (f, s):
            raise ValueError("unsupported linearization for the D family")
        ray = f
    elif fam.kind == "A":
        line_classes = {
            basis_class(lattice, f"l{i}") for i in range(1, fam.n + 2)
        }
        if linearization not in line_classes:
            raise ValueError("unsupported linearization for the A family")
        ray = linearization
    else:
        raise ValueError("GIT Hilbert functions cover the A and D families only")
    dims = []
    for k in range(max_k + 1):
        cls = ray * k
        if presentation is not None:
            dims.append(graded_piece_dim(presentation, lattice, cls))
        else:
            dims.append(section_dim(lattice, cls))
    return dims
