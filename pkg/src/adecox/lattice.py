"""Picard lattices of the three rational surface families.

Each surface family carries a based unimodular lattice of signature
``(1, rank-1)`` together with two distinguished classes: the canonical
class ``K`` and a marking class ``C`` (the class of the fixed curve that
selects the family).  The three families are

* ``E`` (blown-up plane, marking a (-1)-curve): basis ``h, l1, ..., l(n+1)``,
  ``K = -3h + sum(l_i)``, ``C = l(n+1)``, for ``3 <= n <= 8``;
* ``D`` (blown-up quadric, marking a fiber): basis ``f, s, l1, ..., ln``
  with ``f.s = 1`` the hyperbolic pairing, ``K = -2f - 2s + sum(l_i)``,
  ``C = f``, for ``n >= 2``;
* ``A`` (blown-up plane, marking a cubic's hyperplane class): same basis
  and ``K`` as ``E`` but ``C = h``, for ``n >= 1``.

``n = 3`` in the ``E`` family and ``n = 2`` in the ``D`` family are the
degenerate small-rank cases; they are supported but flagged.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

E_RANGE = range(3, 9)


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An integer coordinate vector with respect to a lattice basis."""

    coords: tuple[int, ...]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self) -> str:
        return f"DivisorClass{self.coords}"


@dataclass(frozen=True)
class SurfaceFamily:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "D", "E"):
            raise ValueError(f"unknown family kind {self.kind!r}, expected A, D or E")
        if self.kind == "A" and self.n < 1:
            raise ValueError("A family needs n >= 1")
        if self.kind == "D" and self.n < 2:
            raise ValueError("D family needs n >= 2")
        if self.kind == "E" and self.n not in E_RANGE:
            raise ValueError("E family needs 3 <= n <= 8")

    @property
    def rank(self) -> int:
        return self.n + 2

    @property
    def is_appendix_case(self) -> bool:
        """The two degenerate small-rank cases (E, 3) and (D, 2)."""
        return (self.kind, self.n) in (("E", 3), ("D", 2))

    @property
    def label(self) -> str:
        return f"{self.kind}{self.n}"


@dataclass(frozen=True)
class IntersectionLattice:
    family: SurfaceFamily
    basis_labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    K: DivisorClass
    C: DivisorClass

    @property
    def rank(self) -> int:
        return len(self.basis_labels)

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)


@lru_cache(maxsize=None)
def build_lattice(family: SurfaceFamily) -> IntersectionLattice:
    n = family.n
    rank = family.rank
    if family.kind in ("E", "A"):
        labels = ("h",) + tuple(f"l{i}" for i in range(1, n + 2))
        gram = tuple(
            tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rank))
            for i in range(rank)
        )
        K = DivisorClass((-3,) + (1,) * (n + 1))
        if family.kind == "E":
            C = DivisorClass((0,) * (rank - 1) + (1,))
        else:
            C = DivisorClass((1,) + (0,) * (rank - 1))
    else:
        labels = ("f", "s") + tuple(f"l{i}" for i in range(1, n + 1))
        rows = []
        for i in range(rank):
            row = [0] * rank
            if i == 0:
                row[1] = 1
            elif i == 1:
                row[0] = 1
            else:
                row[i] = -1
            rows.append(tuple(row))
        gram = tuple(rows)
        K = DivisorClass((-2, -2) + (1,) * n)
        C = DivisorClass((1,) + (0,) * (rank - 1))
    return IntersectionLattice(family, labels, gram, K, C)


def basis_class(lattice: IntersectionLattice, label: str) -> DivisorClass:
    i = lattice.basis_labels.index(label)
    return DivisorClass(tuple(1 if j == i else 0 for j in range(lattice.rank)))


def pair(lattice: IntersectionLattice, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection pairing of two classes."""
    if len(d1.coords) != lattice.rank or len(d2.coords) != lattice.rank:
        raise ValueError("coordinate length does not match the lattice rank")
    gram = lattice.gram
    total = 0
    for i, a in enumerate(d1.coords):
        if not a:
            continue
        row = gram[i]
        for j, b in enumerate(d2.coords):
            if b and row[j]:
                total += a * row[j] * b
    return total


def degree(lattice: IntersectionLattice, d: DivisorClass) -> int:
    """Anticanonical degree ``D . (-K)``."""
    return -pair(lattice, d, lattice.K)


def gram_vector(lattice: IntersectionLattice, d: DivisorClass) -> tuple[int, ...]:
    """The covector ``gram @ d``, so that pairing with ``d`` is a dot product."""
    return tuple(
        sum(lattice.gram[i][j] * d.coords[j] for j in range(lattice.rank))
        for i in range(lattice.rank)
    )
