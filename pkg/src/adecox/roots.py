"""Simple roots, Cartan data and Weyl group machinery.

The sublattice of classes orthogonal to both ``K`` and ``C`` is a (negated)
root lattice.  A root here is a class with self intersection -2; adjacent
simple roots pair to +1, so the Cartan matrix is ``cartan[i][j] =
-(alpha_i . alpha_j)`` with diagonal 2 and off-diagonal entries in {0, -1}.

Simple root conventions:

* ``E`` family: ``alpha_1 = -h + l1 + l2 + l3`` and ``alpha_i = l_i - l_(i-1)``
  for ``2 <= i <= n``; the top node ``alpha_1`` attaches to ``alpha_4``.
* ``D`` family: ``alpha_1 = -f + l1 + l2`` and ``alpha_i = l_i - l_(i-1)``.
  ``alpha_1`` is the unique root orthogonal to ``K``, ``C`` and ``alpha_2``
  that pairs to +1 with ``alpha_3``, i.e. the class completing the fork.
* ``A`` family: ``alpha_i = l_(i+1) - l_i`` for ``1 <= i <= n``, a chain.

Diagram classification goes by graph isomorphism, so the small cases come
out under their isomorphic names: (E,3) -> A2xA1, (E,4) -> A4, (E,5) -> D5,
(D,2) -> A1xA1, (D,3) -> A3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .curves import ClassSet
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    basis_class,
    gram_vector,
    pair,
)


@dataclass(frozen=True)
class RootSystemData:
    lattice: IntersectionLattice
    simple_roots: tuple[DivisorClass, ...]
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[DivisorClass, ...]
    type_label: str

    @property
    def rank(self) -> int:
        return len(self.simple_roots)


def simple_roots(lattice: IntersectionLattice) -> tuple[DivisorClass, ...]:
    fam = lattice.family
    n = fam.n
    ls = [basis_class(lattice, f"l{i}") for i in range(1, n + 2 if fam.kind != "D" else n + 1)]
    if fam.kind == "E":
        h = basis_class(lattice, "h")
        alphas = [-h + ls[0] + ls[1] + ls[2]]
        alphas += [ls[i] - ls[i - 1] for i in range(1, n)]
    elif fam.kind == "D":
        f = basis_class(lattice, "f")
        alphas = [-f + ls[0] + ls[1]]
        alphas += [ls[i] - ls[i - 1] for i in range(1, n)]
    else:
        alphas = [ls[i] - ls[i - 1] for i in range(1, n + 1)]
    return tuple(alphas)


def _classify_component(adj: dict[int, list[int]], comp: list[int]) -> str:
    k = len(comp)
    degs = sorted(len(adj[v]) for v in comp)
    nedges = sum(len(adj[v]) for v in comp) // 2
    if nedges != k - 1 or (degs and degs[-1] > 3):
        raise ValueError("diagram is not of ADE type")
    if k == 1 or degs[-1] <= 2:
        return f"A{k}"
    branch = next(v for v in comp if len(adj[v]) == 3)
    arms = []
    for start in adj[branch]:
        length = 1
        prev, cur = branch, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] != 1 or len(arms) != 3:
        raise ValueError("diagram is not of ADE type")
    if arms[1] == 1:
        return f"D{k}"
    if arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{k}"
    raise ValueError("diagram is not of ADE type")


def _classify_cartan(cartan: tuple[tuple[int, ...], ...]) -> str:
    rank = len(cartan)
    adj = {i: [j for j in range(rank) if j != i and cartan[i][j] != 0] for i in range(rank)}
    seen: set[int] = set()
    labels = []
    for i in range(rank):
        if i in seen:
            continue
        comp = [i]
        seen.add(i)
        stack = [i]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        labels.append(_classify_component(adj, comp))
    labels.sort(key=lambda s: (-int(s[1:]), s[0]))
    return "x".join(labels)


def _positive_root_coeffs(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Positive roots as coefficient vectors over the simple roots.

    Closure from the simple roots: with all roots of norm 2 the sum
    ``r + alpha_j`` is again a root exactly when the Cartan pairing
    ``(r, alpha_j)`` equals -1, and every positive root is reachable by
    adding one simple root at a time.
    """
    rank = len(cartan)
    simple = [tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)]
    known = set(simple)
    frontier = list(simple)
    while frontier:
        fresh = []
        for c in frontier:
            pairing = [
                sum(cartan[i][j] * c[i] for i in range(rank) if c[i])
                for j in range(rank)
            ]
            for j in range(rank):
                if pairing[j] == -1:
                    cc = list(c)
                    cc[j] += 1
                    tup = tuple(cc)
                    if tup not in known:
                        known.add(tup)
                        fresh.append(tup)
        frontier = fresh
    return tuple(sorted(known))


@lru_cache(maxsize=None)
def build_root_system(lattice: IntersectionLattice) -> RootSystemData:
    alphas = simple_roots(lattice)
    for a in alphas:
        if pair(lattice, a, a) != -2 or pair(lattice, a, lattice.K) != 0:
            raise AssertionError("simple root fails the root equations")
        if pair(lattice, a, lattice.C) != 0:
            raise AssertionError("simple root not orthogonal to the marking class")
    rank = len(alphas)
    cartan = tuple(
        tuple(-pair(lattice, alphas[i], alphas[j]) for j in range(rank))
        for i in range(rank)
    )
    for i in range(rank):
        for j in range(rank):
            ok = cartan[i][j] == 2 if i == j else cartan[i][j] in (0, -1)
            if not ok:
                raise AssertionError("pairing of simple roots is not simply laced")
    positives = []
    for coeffs in _positive_root_coeffs(cartan):
        total = lattice.zero()
        for c, a in zip(coeffs, alphas):
            if c:
                total = total + c * a
        positives.append(total)
    positives.sort()
    return RootSystemData(
        lattice=lattice,
        simple_roots=alphas,
        cartan=cartan,
        positive_roots=tuple(positives),
        type_label=_classify_cartan(cartan),
    )


def classify_type(system: RootSystemData) -> str:
    return _classify_cartan(system.cartan)


def positive_roots(system: RootSystemData) -> tuple[DivisorClass, ...]:
    return system.positive_roots


def reflect(lattice: IntersectionLattice, x: DivisorClass, alpha: DivisorClass) -> DivisorClass:
    """Reflection in a root: ``x -> x + (x . alpha) alpha`` for norm -2 roots."""
    if pair(lattice, alpha, alpha) != -2:
        raise ValueError("reflection class must have self intersection -2")
    return x + pair(lattice, x, alpha) * alpha


def weyl_orbit(system: RootSystemData, seed: DivisorClass) -> ClassSet:
    """Closure of a class under all simple reflections, sorted."""
    lattice = system.lattice
    galphas = [gram_vector(lattice, a) for a in system.simple_roots]
    acoords = [a.coords for a in system.simple_roots]
    seen = {seed.coords}
    frontier = [seed.coords]
    while frontier:
        fresh = []
        for x in frontier:
            for ga, ac in zip(galphas, acoords):
                t = sum(xi * gi for xi, gi in zip(x, ga) if gi)
                if t:
                    y = tuple(xi + t * ai for xi, ai in zip(x, ac))
                    if y not in seen:
                        seen.add(y)
                        fresh.append(y)
        frontier = fresh
    classes = tuple(DivisorClass(c) for c in sorted(seen))
    return ClassSet(lattice=lattice, kind="orbit", classes=classes)
