"""Exhaustive enumeration of roots, lines and rulings.

A class ``D`` orthogonal to the marking class ``C`` is determined by a
leading coefficient (``a`` on ``h`` or ``f``; forced to zero in the ``A``
family) and exceptional coordinates ``b_i``.  Fixing the self intersection
and the canonical degree turns the search into: for each ``a``, find all
integer tuples with prescribed sum ``s`` and sum of squares ``q``.  The
Cauchy-Schwarz bound ``(s - b)^2 <= (m - 1)(q - b^2)`` prunes every branch
that cannot be completed, so the recursion is provably exhaustive while
visiting only near-feasible prefixes.

Kinds and their defining equations (``.`` is the intersection pairing):

* roots:   ``D.D = -2``, ``D.K = 0``,  ``D.C = 0``
* lines:   ``D.D = -1``, ``D.K = -1``, ``D.C = 0``
* rulings: ``D.D = 0``,  ``D.K = -2``, ``D.C = 0``
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .lattice import DivisorClass, IntersectionLattice

KINDS = {
    "roots": (-2, 0),
    "lines": (-1, -1),
    "rulings": (0, -2),
}


@dataclass(frozen=True)
class ClassSet:
    lattice: IntersectionLattice
    kind: str
    classes: tuple[DivisorClass, ...]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def as_set(self) -> frozenset[DivisorClass]:
        return frozenset(self.classes)


def _sum_square_tuples(m: int, s: int, q: int):
    """All integer m-tuples with sum s and sum of squares q, pruned exactly."""
    if m == 0:
        if s == 0 and q == 0:
            yield ()
        return
    if q < 0:
        return
    if m == 1:
        if s * s == q:
            yield (s,)
        return
    top = isqrt(q)
    for b in range(-top, top + 1):
        rest_q = q - b * b
        rest_s = s - b
        if rest_s * rest_s <= (m - 1) * rest_q:
            for tail in _sum_square_tuples(m - 1, rest_s, rest_q):
                yield (b,) + tail


def _leading_range(a2: int, a1: int, a0: int):
    """Integers a with a2*a^2 + a1*a + a0 <= 0, assuming a2 > 0."""
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    r = isqrt(disc)
    lo = (-a1 - r) // (2 * a2) - 1
    hi = (-a1 + r) // (2 * a2) + 2
    return [a for a in range(lo, hi + 1) if a2 * a * a + a1 * a + a0 <= 0]


def _enumerate(lattice: IntersectionLattice, self_int: int, k_int: int):
    fam = lattice.family
    n = fam.n
    found = []
    if fam.kind == "E":
        # D = a*h + sum b_i l_i with b_(n+1) = 0 forced by D.C = 0.
        # sum b = -k_int - 3a, sum b^2 = a^2 - self_int over n coordinates.
        for a in _leading_range(9 - n, 6 * k_int, k_int * k_int + n * self_int):
            s = -k_int - 3 * a
            q = a * a - self_int
            for b in _sum_square_tuples(n, s, q):
                found.append(DivisorClass((a,) + b + (0,)))
    elif fam.kind == "A":
        # D.C = D.h forces a = 0; sum b = -k_int, sum b^2 = -self_int.
        for b in _sum_square_tuples(n + 1, -k_int, -self_int):
            found.append(DivisorClass((0,) + b))
    else:
        # D = a*f + sum b_i l_i with the s coordinate forced to zero.
        # sum b = -k_int - 2a, sum b^2 = -self_int.
        for a in _leading_range(4, 4 * k_int, k_int * k_int + n * self_int):
            s = -k_int - 2 * a
            q = -self_int
            for b in _sum_square_tuples(n, s, q):
                found.append(DivisorClass((a, 0) + b))
    classes = tuple(sorted(found))
    assert len(set(classes)) == len(classes)
    return classes


@lru_cache(maxsize=None)
def _enumerate_kind(lattice: IntersectionLattice, kind: str) -> ClassSet:
    self_int, k_int = KINDS[kind]
    return ClassSet(lattice, kind, _enumerate(lattice, self_int, k_int))


def enumerate_roots(lattice: IntersectionLattice) -> ClassSet:
    return _enumerate_kind(lattice, "roots")


def enumerate_lines(lattice: IntersectionLattice) -> ClassSet:
    return _enumerate_kind(lattice, "lines")


def enumerate_rulings(lattice: IntersectionLattice) -> ClassSet:
    return _enumerate_kind(lattice, "rulings")


def pairs_of_lines_summing_to(
    lattice: IntersectionLattice, target: DivisorClass, lines: ClassSet
) -> int:
    """Number of unordered line pairs {l, l'} with l + l' = target.

    A line counts with itself only when 2l = target.
    """
    line_set = lines.as_set()
    doubles = sum(1 for l in line_set if l + l == target)
    halves = sum(
        1 for l in line_set if (target - l) in line_set and (target - l) != l
    )
    assert halves % 2 == 0
    return halves // 2 + doubles
