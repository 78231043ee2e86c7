"""Weights, characters and the symmetric square decomposition.

A class ``D`` orthogonal to ``C`` determines a weight through its Dynkin
labels ``(-D . alpha_i)_i``; adding multiples of ``K`` or ``C`` does not
change the labels, so the map factors through the quotient by those two
classes.  The inner product on label vectors is ``<mu, nu> = mu^T C^{-1} nu``
normalized so roots have norm 2, which is what the Weyl dimension formula
and Freudenthal's recursion expect.

The central identity checked by this module: the multiset of weights of the
line bundle sum over all lines (plus eight copies of the zero weight in the
(E, 8) case) has a symmetric square that splits as

    sym2(lines) = freudenthal(2 * lambda_line) + W

where ``W`` is family dependent: empty for ``A``, a single zero weight for
``D``, the ruling weights for ``E`` with ``n <= 6``, the ruling weights plus
seven zero weights for (E, 7), and the 3875-dimensional module plus one zero
weight for (E, 8).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .curves import enumerate_lines, enumerate_rulings
from .lattice import DivisorClass, IntersectionLattice, basis_class, pair
from .linalg import invert
from .roots import RootSystemData, _positive_root_coeffs

WeightVector = tuple[int, ...]


@dataclass(frozen=True)
class WeightMultiset:
    """A finite multiset of weight vectors with positive multiplicities."""

    entries: tuple[tuple[WeightVector, int], ...]

    @staticmethod
    def from_dict(d: dict[WeightVector, int]) -> "WeightMultiset":
        for w, m in d.items():
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at weight {w}")
        return WeightMultiset(tuple(sorted((w, m) for w, m in d.items() if m)))

    def as_dict(self) -> dict[WeightVector, int]:
        return dict(self.entries)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def support_size(self) -> int:
        return len(self.entries)

    def get(self, w: WeightVector) -> int:
        return dict(self.entries).get(w, 0)

    def add(self, other: "WeightMultiset") -> "WeightMultiset":
        d = self.as_dict()
        for w, m in other.entries:
            d[w] = d.get(w, 0) + m
        return WeightMultiset.from_dict(d)

    def subtract(self, other: "WeightMultiset") -> "WeightMultiset":
        d = self.as_dict()
        for w, m in other.entries:
            d[w] = d.get(w, 0) - m
        return WeightMultiset.from_dict(d)

    def contains(self, other: "WeightMultiset") -> bool:
        d = self.as_dict()
        return all(d.get(w, 0) >= m for w, m in other.entries)


def weight_of(system: RootSystemData, d: DivisorClass) -> WeightVector:
    """Dynkin labels of a class: ``(-D . alpha_i)`` over the simple roots."""
    lattice = system.lattice
    return tuple(-pair(lattice, d, a) for a in system.simple_roots)


def line_highest_class(lattice: IntersectionLattice) -> DivisorClass:
    """The exceptional class whose weight is the highest line weight."""
    fam = lattice.family
    k = fam.n if fam.kind != "A" else fam.n + 1
    return basis_class(lattice, f"l{k}")


def ruling_highest_class(lattice: IntersectionLattice) -> DivisorClass:
    """The class ``h - l1``; only meaningful for the E family."""
    if lattice.family.kind != "E":
        raise ValueError("ruling weight class is only defined for the E family")
    return basis_class(lattice, "h") - basis_class(lattice, "l1")


@lru_cache(maxsize=None)
def _cartan_inverse(cartan: tuple[tuple[int, ...], ...]):
    return tuple(tuple(row) for row in invert(cartan))


def inner_product(system: RootSystemData, mu: WeightVector, nu: WeightVector) -> Fraction:
    """Weight space inner product, roots normalized to norm 2."""
    cinv = _cartan_inverse(system.cartan)
    rank = len(cinv)
    total = Fraction(0)
    for i in range(rank):
        if mu[i]:
            total += mu[i] * sum(cinv[i][j] * nu[j] for j in range(rank) if nu[j])
    return total


def weyl_dim(system: RootSystemData, lam: WeightVector) -> int:
    """Weyl dimension formula, evaluated exactly."""
    if len(lam) != system.rank:
        raise ValueError("weight length does not match the root system rank")
    if any(x < 0 for x in lam):
        raise ValueError("weight is not dominant")
    rho = (1,) * system.rank
    lam_rho = tuple(l + 1 for l in lam)
    result = Fraction(1)
    for alpha in system.positive_roots:
        a = weight_of(system, alpha)
        result *= inner_product(system, lam_rho, a) / inner_product(system, rho, a)
    if result.denominator != 1:
        raise AssertionError("dimension formula did not produce an integer")
    return int(result)


def _components(cartan: tuple[tuple[int, ...], ...]) -> list[tuple[int, ...]]:
    rank = len(cartan)
    seen: set[int] = set()
    comps = []
    for i in range(rank):
        if i in seen:
            continue
        comp = [i]
        seen.add(i)
        stack = [i]
        while stack:
            v = stack.pop()
            for w in range(rank):
                if w not in seen and w != v and cartan[v][w] != 0:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def _dominant_rep(cartan, nu: WeightVector) -> WeightVector:
    labels = list(nu)
    rank = len(labels)
    while True:
        i = next((i for i in range(rank) if labels[i] < 0), None)
        if i is None:
            return tuple(labels)
        t = labels[i]
        row = cartan[i]
        for j in range(rank):
            if row[j]:
                labels[j] -= t * row[j]


def _orbit_labels(cartan, start: WeightVector) -> set[WeightVector]:
    rank = len(cartan)
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for w in frontier:
            for i in range(rank):
                t = w[i]
                if t == 0:
                    continue
                row = cartan[i]
                y = tuple(w[j] - t * row[j] if row[j] else w[j] for j in range(rank))
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return seen


@lru_cache(maxsize=None)
def _freudenthal_block(cartan: tuple[tuple[int, ...], ...], lam: WeightVector):
    """Weight multiplicities of the irreducible with highest weight lam.

    Works on a connected Cartan matrix.  Steps: enumerate the dominant
    weights (closure of lam under subtracting positive roots while staying
    dominant, which reaches every dominant weight below lam), then fill in
    multiplicities by Freudenthal's recursion in order of increasing depth,
    then expand Weyl orbits.  Depth vectors (coordinates of lam - mu over
    the simple roots) make the cone membership test exact.
    """
    rank = len(cartan)
    cinv = _cartan_inverse(cartan)

    def ip(u, v) -> Fraction:
        total = Fraction(0)
        for i in range(rank):
            if u[i]:
                total += u[i] * sum(cinv[i][j] * v[j] for j in range(rank) if v[j])
        return total

    pos_coeffs = _positive_root_coeffs(cartan)
    pos_labels = [
        tuple(sum(cartan[i][j] * c[i] for i in range(rank) if c[i]) for j in range(rank))
        for c in pos_coeffs
    ]

    dom_depth: dict[WeightVector, tuple[int, ...]] = {lam: (0,) * rank}
    frontier = [lam]
    while frontier:
        fresh = []
        for mu in frontier:
            d = dom_depth[mu]
            for c, al in zip(pos_coeffs, pos_labels):
                nu = tuple(m - a for m, a in zip(mu, al))
                if all(x >= 0 for x in nu) and nu not in dom_depth:
                    dom_depth[nu] = tuple(x + y for x, y in zip(d, c))
                    fresh.append(nu)
        frontier = fresh

    rho = (1,) * rank
    lam_rho = tuple(l + 1 for l in lam)
    lam_norm = ip(lam_rho, lam_rho)
    mult: dict[WeightVector, int] = {}
    for mu in sorted(dom_depth, key=lambda w: (sum(dom_depth[w]), w)):
        if mu == lam:
            mult[mu] = 1
            continue
        depth = dom_depth[mu]
        acc = Fraction(0)
        for c, al in zip(pos_coeffs, pos_labels):
            k = 1
            while all(d - k * ci >= 0 for d, ci in zip(depth, c)):
                nu = tuple(m + k * a for m, a in zip(mu, al))
                m_nu = mult.get(_dominant_rep(cartan, nu), 0)
                if m_nu:
                    acc += 2 * m_nu * ip(nu, al)
                k += 1
        mu_rho = tuple(m + 1 for m in mu)
        value = acc / (lam_norm - ip(mu_rho, mu_rho))
        if value.denominator != 1 or value <= 0:
            raise AssertionError("recursion produced a non-positive multiplicity")
        mult[mu] = int(value)

    full: dict[WeightVector, int] = {}
    for mu, m in mult.items():
        for w in _orbit_labels(cartan, mu):
            full[w] = m
    return tuple(sorted(full.items()))


def freudenthal(system: RootSystemData, lam: WeightVector) -> WeightMultiset:
    """Full weight multiset of the irreducible module with highest weight lam.

    Decomposable Cartan matrices are handled block by block and the block
    multisets are multiplied together.
    """
    if len(lam) != system.rank:
        raise ValueError("weight length does not match the root system rank")
    if any(x < 0 for x in lam):
        raise ValueError("weight is not dominant")
    comps = _components(system.cartan)
    parts = []
    for comp in comps:
        sub_cartan = tuple(tuple(system.cartan[i][j] for j in comp) for i in comp)
        sub_lam = tuple(lam[i] for i in comp)
        parts.append((comp, _freudenthal_block(sub_cartan, sub_lam)))
    result: dict[WeightVector, int] = {(0,) * system.rank: 1}
    for comp, entries in parts:
        merged: dict[WeightVector, int] = {}
        for base, m0 in result.items():
            for w, m in entries:
                labels = list(base)
                for pos, val in zip(comp, w):
                    labels[pos] = val
                merged[tuple(labels)] = m0 * m
        result = merged
    return WeightMultiset.from_dict(result)


def is_weyl_invariant(system: RootSystemData, ms: WeightMultiset) -> bool:
    cartan = system.cartan
    rank = system.rank
    d = ms.as_dict()
    for w, m in ms.entries:
        for i in range(rank):
            t = w[i]
            if t == 0:
                continue
            y = tuple(w[j] - t * cartan[i][j] if cartan[i][j] else w[j] for j in range(rank))
            if d.get(y, 0) != m:
                return False
    return True


@lru_cache(maxsize=None)
def line_weight_multiset(system: RootSystemData) -> WeightMultiset:
    """Weights of the line bundle sum: one per line, plus zero^8 for (E, 8)."""
    lattice = system.lattice
    counts: dict[WeightVector, int] = {}
    for line in enumerate_lines(lattice):
        w = weight_of(system, line)
        counts[w] = counts.get(w, 0) + 1
    if any(m != 1 for m in counts.values()):
        raise AssertionError("distinct lines mapped to the same weight")
    if lattice.family.kind == "E" and lattice.family.n == 8:
        zero = (0,) * system.rank
        counts[zero] = counts.get(zero, 0) + 8
    return WeightMultiset.from_dict(counts)


@lru_cache(maxsize=None)
def ruling_weight_multiset(system: RootSystemData) -> WeightMultiset:
    counts: dict[WeightVector, int] = {}
    for r in enumerate_rulings(system.lattice):
        w = weight_of(system, r)
        counts[w] = counts.get(w, 0) + 1
    if any(m != 1 for m in counts.values()):
        raise AssertionError("distinct rulings mapped to the same weight")
    return WeightMultiset.from_dict(counts)


def sym2_multiset(ms: WeightMultiset) -> WeightMultiset:
    """Symmetric square of a multiset of weights.

    mult(tau) = sum over unordered pairs mu < nu with mu + nu = tau of
    m(mu) m(nu), plus m(mu)(m(mu)+1)/2 whenever 2 mu = tau.  The total is
    t(t+1)/2 for t the input total.
    """
    items = ms.entries
    out: dict[WeightVector, int] = {}
    for i, (w1, m1) in enumerate(items):
        for j in range(i, len(items)):
            w2, m2 = items[j]
            tau = tuple(a + b for a, b in zip(w1, w2))
            bump = m1 * (m1 + 1) // 2 if i == j else m1 * m2
            out[tau] = out.get(tau, 0) + bump
    result = WeightMultiset.from_dict(out)
    t = ms.total
    assert result.total == t * (t + 1) // 2
    return result


def _zero_multiset(system: RootSystemData, mult: int) -> WeightMultiset:
    return WeightMultiset.from_dict({(0,) * system.rank: mult})


def expected_w_multiset(system: RootSystemData) -> tuple[WeightMultiset, str]:
    """The predicted complement W of the top module inside sym2(lines)."""
    fam = system.lattice.family
    if fam.kind == "A":
        return WeightMultiset(()), "empty"
    if fam.kind == "D":
        return _zero_multiset(system, 1), "one zero weight"
    rulings = ruling_weight_multiset(system)
    if fam.n <= 6:
        return rulings, "ruling weights"
    if fam.n == 7:
        return rulings.add(_zero_multiset(system, 7)), "ruling weights plus zero^7"
    top = freudenthal(system, weight_of(system, ruling_highest_class(system.lattice)))
    return top.add(_zero_multiset(system, 1)), "3875-module plus one zero weight"


def decompose_sym2(system: RootSystemData):
    """Split sym2(line weights) into the top module and its complement.

    Returns ``(v_part, w_part, report)`` where ``v_part`` is the Freudenthal
    multiset of twice the highest line weight, ``w_part`` the exact multiset
    difference, and ``report`` records totals and whether ``w_part`` matches
    the family prediction.
    """
    lines_ms = line_weight_multiset(system)
    sym2 = sym2_multiset(lines_ms)
    lam = tuple(2 * x for x in weight_of(system, line_highest_class(system.lattice)))
    v_part = freudenthal(system, lam)
    w_part = sym2.subtract(v_part)
    expected, description = expected_w_multiset(system)
    report = {
        "family": system.lattice.family.label,
        "line_total": lines_ms.total,
        "sym2_total": sym2.total,
        "v_total": v_part.total,
        "w_total": w_part.total,
        "expected_w": description,
        "w_matches_expected": w_part == expected,
    }
    return v_part, w_part, report


def verify_weight_lemma(system: RootSystemData) -> dict:
    """Check the two module identifications behind the decomposition.

    Part one (all families): the weights of the irreducible generated by the
    highest line weight are exactly the line weights.  Part two (E family):
    the module generated by the ``h - l1`` weight matches the ruling weights
    for n <= 6, gains seven zero weights at n = 7, and strictly contains the
    rulings (with multiplicity one each) at n = 8.
    """
    lines_ms = line_weight_multiset(system)
    pi_line = freudenthal(system, weight_of(system, line_highest_class(system.lattice)))
    report: dict = {
        "family": system.lattice.family.label,
        "line_module_total": pi_line.total,
        "line_module_matches": pi_line == lines_ms,
    }
    ok = report["line_module_matches"]
    fam = system.lattice.family
    if fam.kind == "E":
        rulings = ruling_weight_multiset(system)
        pi_r = freudenthal(system, weight_of(system, ruling_highest_class(system.lattice)))
        report["ruling_module_total"] = pi_r.total
        report["ruling_count"] = rulings.total
        if fam.n <= 6:
            good = pi_r == rulings
            report["ruling_relation"] = "equal"
        elif fam.n == 7:
            good = pi_r == rulings.add(_zero_multiset(system, 7))
            report["ruling_relation"] = "equal plus zero^7"
        else:
            d = pi_r.as_dict()
            good = (
                all(d.get(w, 0) == 1 for w, _ in rulings.entries)
                and pi_r.total > rulings.total
            )
            report["ruling_relation"] = "strict containment, rulings simple"
        report["ruling_module_matches"] = good
        ok = ok and good
    report["ok"] = ok
    return report
