"""Quadric models of minimal-orbit cones and the surface-to-cone embedding.

For the D family the cone over the relevant flag variety is a single
quadric: pairing each line ``l_i`` with its partner ``f - l_i`` gives
coordinates ``X_i, Y_i`` and the equation ``sum_i X_i Y_i = 0``.  The
section ring of a D-surface maps onto the coordinate ring of that cone
after rescaling ``X_i`` by constants ``c_i`` chosen so that
``sum_i c_i x_i y_i`` lies in the surface's quadric ideal; membership is
certified by an exact rank computation in the class-``f`` graded piece.

The A family needs no quadric (the ring is free), and the two rank-drop
cases (E, 3) and (D, 2) decompose as outer tensor products, checked here
at the level of weight multisets together with the 2x2 Segre quadric.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cox import CoxPresentation, SurfaceConfigD, cox_generators, dn_ideal
from .curves import enumerate_lines
from .lattice import DivisorClass, IntersectionLattice, basis_class, pair
from .linalg import rational_rank
from .roots import build_root_system
from .weights import WeightVector, weight_of


@dataclass(frozen=True)
class QuadricVariable:
    name: str
    cls: DivisorClass
    weight: WeightVector


@dataclass(frozen=True)
class Quadric:
    """Terms are (coefficient, monomial as a sorted tuple of variable names)."""

    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]


@dataclass(frozen=True)
class QuadricSystem:
    variables: tuple[QuadricVariable, ...]
    quadrics: tuple[Quadric, ...]
    # Entries (source, scalar, target) encoding source -> scalar * target.
    substitution: tuple[tuple[str, Fraction, str], ...] | None = None

    def __post_init__(self):
        weights = {v.name: v.weight for v in self.variables}
        for q in self.quadrics:
            if not q.terms:
                raise ValueError("quadric with no terms")
            seen = None
            for coeff, mono in q.terms:
                if coeff == 0:
                    raise ValueError("quadric carries a zero coefficient")
                total = None
                for name in mono:
                    w = weights[name]
                    total = w if total is None else tuple(
                        a + b for a, b in zip(total, w)
                    )
                if seen is None:
                    seen = total
                elif total != seen:
                    raise ValueError("quadric is not weight homogeneous")
        if self.substitution is not None:
            for _, scalar, _ in self.substitution:
                if scalar == 0:
                    raise ValueError("substitution scalar must be nonzero")


def cone_quadric_D(lattice: IntersectionLattice) -> QuadricSystem:
    """The single quadric ``sum_i X_i Y_i`` cutting out the D-family cone.

    ``X_i`` carries the class ``l_i`` and ``Y_i`` the partner ``f - l_i``;
    every monomial has class ``f``, hence weight zero.
    """
    fam = lattice.family
    if fam.kind != "D" or fam.n < 3:
        raise ValueError("cone quadric is defined for the D family with n >= 3")
    system = build_root_system(lattice)
    f = basis_class(lattice, "f")
    variables = []
    terms = []
    for i in range(1, fam.n + 1):
        li = basis_class(lattice, f"l{i}")
        variables.append(QuadricVariable(f"X{i}", li, weight_of(system, li)))
        variables.append(QuadricVariable(f"Y{i}", f - li, weight_of(system, f - li)))
        terms.append((Fraction(1), (f"X{i}", f"Y{i}")))
    quadric = Quadric(tuple(terms))
    zero = (0,) * system.rank
    for _, mono in quadric.terms:
        lookup = {v.name: v.weight for v in variables}
        total = tuple(
            a + b for a, b in zip(lookup[mono[0]], lookup[mono[1]])
        )
        assert total == zero
    return QuadricSystem(tuple(variables), (quadric,))


def _relation_rows(presentation: CoxPresentation, n: int) -> list[list[Fraction]]:
    """Coefficient rows of the class-``f`` relations over the basis x_i y_i."""
    rows = []
    for rel in presentation.relations:
        row = [Fraction(0)] * n
        for coeff, mono in rel.terms:
            # mono = (i - 1, n + i - 1) is the monomial x_i y_i.
            row[mono[0]] += coeff
        rows.append(row)
    return rows


def embed_cox_into_cone_D(
    lattice: IntersectionLattice, config: SurfaceConfigD
) -> tuple[QuadricSystem, dict]:
    """Rescaling that carries the cone quadric into the surface ideal.

    Searches the row space of the class-``f`` relation matrix for a vector
    ``c`` with every coordinate nonzero; then ``X_i -> c_i x_i``,
    ``Y_i -> y_i`` maps ``sum X_i Y_i`` to ``sum c_i x_i y_i``, which lies
    in the ideal by construction.  The certificate recomputes that
    membership directly: adjoining ``c`` to the relation rows must not
    raise the rank.  For n = 3 the solution ray is unique; for larger n the
    geometric-weight combinations ``sum_i k^{i-3} row_i`` for k = 1, 2, ...
    hit an all-nonzero vector within ``2(n - 3) + 1`` tries because each
    coordinate is a nonzero polynomial in k of degree at most ``n - 3``.
    """
    fam = lattice.family
    if fam.kind != "D" or fam.n < 3:
        raise ValueError("embedding is defined for the D family with n >= 3")
    n = fam.n
    presentation = dn_ideal(lattice, config)
    rows = _relation_rows(presentation, n)
    c: list[Fraction] | None = None
    if n == 3:
        candidate = rows[0]
        if all(x != 0 for x in candidate):
            c = candidate
    else:
        for k in range(1, 2 * (n - 3) + 2):
            candidate = [
                sum(Fraction(k) ** (i - 3) * rows[i - 3][j] for i in range(3, n + 1))
                for j in range(n)
            ]
            if all(x != 0 for x in candidate):
                c = candidate
                break
    if c is None:
        raise AssertionError("no all-nonzero combination of relation rows found")
    rank_before = rational_rank(tuple(tuple(r) for r in rows))
    rank_after = rational_rank(tuple(tuple(r) for r in rows) + (tuple(c),))
    certified = rank_before == rank_after == n - 2

    cone = cone_quadric_D(lattice)
    system = build_root_system(lattice)
    f = basis_class(lattice, "f")
    cox_vars = []
    image_terms = []
    substitution = []
    for i in range(1, n + 1):
        li = basis_class(lattice, f"l{i}")
        cox_vars.append(QuadricVariable(f"x{i}", li, weight_of(system, li)))
        cox_vars.append(QuadricVariable(f"y{i}", f - li, weight_of(system, f - li)))
        image_terms.append((c[i - 1], (f"x{i}", f"y{i}")))
        substitution.append((f"X{i}", c[i - 1], f"x{i}"))
        substitution.append((f"Y{i}", Fraction(1), f"y{i}"))
    quad_system = QuadricSystem(
        cone.variables + tuple(cox_vars),
        cone.quadrics + (Quadric(tuple(image_terms)),),
        tuple(substitution),
    )
    report = {
        "n": n,
        "points": [str(t) for t in config.points],
        "c": [str(x) for x in c],
        "rank_before": rank_before,
        "rank_after": rank_after,
        "certified": certified,
    }
    return quad_system, report


def an_report(lattice: IntersectionLattice, max_degree: int = 6) -> dict:
    """Free-ring data identifying the A-family quotient with projective space.

    The ring on ``n + 1`` degree-1 generators has ``binomial(d + n, n)``
    monomials in total degree d, the Hilbert function of projective n-space;
    generator weights are pairwise distinct.
    """
    fam = lattice.family
    if fam.kind != "A":
        raise ValueError("report is defined for the A family")
    system = build_root_system(lattice)
    gens = cox_generators(lattice)
    weights = [weight_of(system, cls) for _, cls in gens]
    dims = [math.comb(d + fam.n, fam.n) for d in range(max_degree + 1)]
    return {
        "generators": len(gens),
        "relations": 0,
        "dims_by_degree": dims,
        "weights_distinct": len(set(weights)) == len(weights),
        "ok": len(gens) == fam.n + 1 and len(set(weights)) == len(weights),
    }


def appendix_tensor_check(
    lattice: IntersectionLattice,
) -> tuple[dict, QuadricSystem | None]:
    """Tensor factorizations of the line module in the two rank-drop cases.

    (E, 3): the six line weights are the pairwise sums of the three weights
    of the classes ``-(h - l_i)`` and the two weights of ``h`` and
    ``2h - l_1 - l_2 - l_3``.  (D, 2): the four lines split as sums of
    ``{l_1 - s, l_2 - s}`` and ``{s, s + f - l_1 - l_2}``, with the 2x2
    Segre quadric ``z11 z22 - z12 z21`` homogeneous of class ``f``.
    """
    fam = lattice.family
    system = build_root_system(lattice)
    if fam.kind == "E" and fam.n == 3:
        h = basis_class(lattice, "h")
        ls = [basis_class(lattice, f"l{i}") for i in (1, 2, 3)]
        left = [ls[i] - h for i in range(3)]
        right = [h, h + h - ls[0] - ls[1] - ls[2]]
        products = sorted(
            weight_of(system, a + b) for a in left for b in right
        )
        line_weights = sorted(
            weight_of(system, line) for line in enumerate_lines(lattice)
        )
        report = {
            "family": fam.label,
            "left_dim": len(left),
            "right_dim": len(right),
            "line_count": len(line_weights),
            "factorization_holds": products == line_weights,
            "ok": products == line_weights,
        }
        return report, None
    if fam.kind == "D" and fam.n == 2:
        f = basis_class(lattice, "f")
        s = basis_class(lattice, "s")
        l1 = basis_class(lattice, "l1")
        l2 = basis_class(lattice, "l2")
        left = [l1 - s, l2 - s]
        right = [s, s + f - l1 - l2]
        sums = sorted((a + b) for a in left for b in right)
        line_classes = sorted(enumerate_lines(lattice))
        variables = []
        for i, a in enumerate(left, start=1):
            for j, b in enumerate(right, start=1):
                cls = a + b
                variables.append(
                    QuadricVariable(f"z{i}{j}", cls, weight_of(system, cls))
                )
        segre = Quadric(
            (
                (Fraction(1), ("z11", "z22")),
                (Fraction(-1), ("z12", "z21")),
            )
        )
        quad_system = QuadricSystem(tuple(variables), (segre,))
        lookup = {v.name: v.cls for v in variables}
        segre_classes = sorted(
            {lookup[m[0]] + lookup[m[1]] for _, m in segre.terms}
        )
        report = {
            "family": fam.label,
            "left_dim": 2,
            "right_dim": 2,
            "line_count": len(line_classes),
            "factorization_holds": sums == line_classes,
            "segre_monomial_classes": [list(cls.coords) for cls in segre_classes],
            "segre_class_is_f": segre_classes == [f],
            "ok": sums == line_classes and segre_classes == [f],
        }
        return report, quad_system
    raise ValueError("tensor check is defined for (E, 3) and (D, 2) only")
