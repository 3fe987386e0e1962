"""Brute-force reference implementations, used by the test-suite only.

Nothing here reuses the main pipeline: membership in a Newton polyhedron is
decided from its V-representation by eliminating the convex weights, and
multiplier ideals come from testing lattice points against weighted
Minkowski sums directly.  The point is to have a second, independent route
to every answer the pipeline gives.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import MonomialIdeal


@dataclass(frozen=True)
class Constraint:
    row: tuple[Fraction, ...]
    strict: bool
    rhs: Fraction

    def holds_trivially(self) -> bool:
        return 0 > self.rhs if self.strict else 0 >= self.rhs


@dataclass
class FeasibilitySystem:
    """Constraints row . x (>= or >) rhs over ``variables`` unknowns."""

    variables: int
    constraints: list[Constraint]

    def add(self, row, rhs, strict=False):
        row = tuple(Fraction(x) for x in row)
        if len(row) != self.variables:
            raise ValueError("row length does not match the number of variables")
        self.constraints.append(Constraint(row, strict, Fraction(rhs)))

    def project(self, eliminate: Sequence[int]) -> list[Constraint]:
        """Fourier-Motzkin elimination of the listed unknowns (Chernikov-pruned).

        Only valid for non-strict systems: the pruning rule discards rows
        that are implied by others, and that argument loses strictness.
        """
        if any(c.strict for c in self.constraints):
            raise ValueError("project() needs a non-strict system; use is_feasible()")
        return _eliminate(self.constraints, eliminate)

    def is_feasible(self) -> bool:
        # a.x > b becomes a.x - d >= b with one extra unknown d that must be positive
        rows = [
            Constraint(c.row + (Fraction(-1 if c.strict else 0),), False, c.rhs) for c in self.constraints
        ]
        final = _eliminate(rows, range(self.variables))
        for c in final:
            coeff = c.row[-1]
            # what is left reads coeff * d >= rhs with coeff <= 0
            if coeff == 0 and c.rhs > 0:
                return False
            if coeff < 0 and c.rhs >= 0:
                return False
        return True


def _eliminate(constraints: Sequence[Constraint], eliminate: Sequence[int]) -> list[Constraint]:
    live = {}
    for i, c in enumerate(constraints):
        _keep(live, _scaled(c), frozenset([i]))
    for step, col in enumerate(eliminate, start=1):
        upper, lower, rest = [], [], {}
        for c, hist in live.items():
            if c.row[col] > 0:
                lower.append((c, hist))
            elif c.row[col] < 0:
                upper.append((c, hist))
            else:
                _keep(rest, c, hist)
        for (p, hp), (q, hq) in itertools.product(lower, upper):
            hist = hp | hq
            if len(hist) > step + 1:
                continue
            a, b = p.row[col], -q.row[col]
            row = tuple(b * x + a * y for x, y in zip(p.row, q.row))
            _keep(rest, _scaled(Constraint(row, False, b * p.rhs + a * q.rhs)), hist)
        live = rest
    return list(live)


def _scaled(c: Constraint) -> Constraint:
    scale = max((abs(x) for x in c.row if x), default=None)
    if scale is None:
        return Constraint(c.row, c.strict, Fraction((c.rhs > 0) - (c.rhs < 0)))
    return Constraint(tuple(x / scale for x in c.row), c.strict, c.rhs / scale)


def _keep(store: dict, c: Constraint, hist: frozenset) -> None:
    if c not in store or len(hist) < len(store[c]):
        store[c] = hist


def _undominated(points: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    return [p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts)]


def vrep_membership(gens, v, strict: bool = False) -> bool:
    """Is v in conv(gens) + R^n_+ (in its interior when ``strict``)?

    Decides whether convex weights t exist with sum_g t_g g <= v (strictly
    in every coordinate when ``strict``).
    """
    pts = _undominated(gens)
    if not pts:
        raise ValueError("empty generator set")
    n = len(pts[0])
    if len(v) != n:
        raise ValueError(f"dimension mismatch: {tuple(v)} vs {n}")
    m = len(pts)
    # t_m = 1 - (t_1 + ... + t_{m-1})
    system = FeasibilitySystem(m - 1, [])
    last = pts[-1]
    for i in range(n):
        system.add([last[i] - p[i] for p in pts[:-1]], last[i] - Fraction(v[i]), strict)
    for g in range(m - 1):
        system.add([int(h == g) for h in range(m - 1)], 0)
    system.add([-1] * (m - 1), -1)
    if m == 1:
        return all((vi > li) if strict else (vi >= li) for vi, li in zip(map(Fraction, v), last))
    return system.is_feasible()


def weighted_sum_points(ideals, lam) -> list[tuple[Fraction, ...]]:
    gens = [_generators(I) for I in ideals]
    return [
        tuple(sum((Fraction(l) * g[t] for l, g in zip(lam, choice)), Fraction(0)) for t in range(len(choice[0])))
        for choice in itertools.product(*gens)
    ]


def _generators(I) -> list[tuple[int, ...]]:
    return [tuple(g) for g in (I.generators if isinstance(I, MonomialIdeal) else I)]


def mmi_bruteforce(ideals, lam, box: int) -> MonomialIdeal:
    """Monomials x^v, v in [0, box]^n, with v + (1,...,1) inside sum_i lam_i P(a_i)."""
    ideals = list(ideals)
    lam = [Fraction(x) for x in lam]
    if len(lam) != len(ideals):
        raise ValueError("one exponent per ideal")
    points = _undominated(weighted_sum_points(ideals, lam))
    n = len(points[0])
    members: list[tuple[int, ...]] = []
    for v in sorted(itertools.product(range(box + 1), repeat=n), key=lambda u: (sum(u), u)):
        if any(all(a <= b for a, b in zip(m, v)) for m in members):
            continue
        if vrep_membership(points, [x + 1 for x in v], strict=True):
            members.append(v)
    return MonomialIdeal(n, tuple(sorted(members)))


def facet_normal_candidates(gens) -> set[tuple[int, ...]]:
    """Primitive normals of the inequalities describing conv(gens) + R^n_+."""
    pts = _undominated(gens)
    n, m = len(pts[0]), len(pts)
    # unknowns: v_1..v_n, t_1..t_m with v - sum t_g g >= 0, t >= 0, sum t = 1
    system = FeasibilitySystem(n + m, [])
    for i in range(n):
        system.add([int(s == i) for s in range(n)] + [-p[i] for p in pts], 0)
    for g in range(m):
        system.add([0] * n + [int(h == g) for h in range(m)], 0)
    system.add([0] * n + [1] * m, 1)
    system.add([0] * n + [-1] * m, -1)
    normals = set()
    for c in system.project(range(n, n + m)):
        w = c.row[:n]
        if not any(w):
            continue
        den = math.lcm(*(x.denominator for x in w))
        ints = [int(x * den) for x in w]
        g = math.gcd(*ints)
        normals.add(tuple(x // g for x in ints))
    normals.update(tuple(int(s == t) for s in range(n)) for t in range(n))
    return normals


def jumping_numbers_scan(ideal, max_value) -> list[Fraction]:
    """Jumping numbers in (0, max_value] of one monomial ideal, by direct comparison."""
    gens = _generators(ideal)
    max_value = Fraction(max_value)
    cands = set()
    for w in facet_normal_candidates(gens):
        order = min(sum(a * b for a, b in zip(w, g)) for g in gens)
        if order == 0:
            continue
        nu = 1
        while Fraction(sum(w) - 1 + nu, order) <= max_value:
            cands.add(Fraction(sum(w) - 1 + nu, order))
            nu += 1
    box = math.ceil(max_value * max(max(g) for g in gens)) + 1
    out, previous = [], Fraction(0)
    for mu in sorted(cands):
        below = mu - (mu - previous) / 2
        if mmi_bruteforce([gens], [below], box) != mmi_bruteforce([gens], [mu], box):
            out.append(mu)
        previous = mu
    return out
