"""Newton polyhedra of monomial ideals and the toric divisorial data they carry.

A monomial ideal a has Newton polyhedron P(a) = conv(exponents) + R^n_+.  Each
primitive inner facet normal w of P(a) corresponds to a torus-invariant divisor
E_w of a toric log-resolution; along it a has order e(w) = min <w, v> over the
generators, and the relative canonical divisor has coefficient |w| - 1.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import ExponentVector, MonomialIdeal, minimal_elements, rank
from .errors import DimensionMismatch, InvalidArgument, UnsupportedInput


@dataclass(frozen=True, order=True)
class HalfSpace:
    """The constraint <normal, v> >= rhs, with a primitive nonnegative normal."""

    normal: tuple[int, ...]
    rhs: Fraction

    def __post_init__(self):
        if not any(self.normal) or min(self.normal) < 0:
            raise InvalidArgument(f"normal must be nonzero and nonnegative: {self.normal}")
        if math.gcd(*self.normal) != 1:
            raise InvalidArgument(f"normal must be primitive: {self.normal}")

    @property
    def is_coordinate(self) -> bool:
        """True for the orthant constraints v_t >= 0."""
        return self.rhs == 0 and sum(self.normal) == 1

    def value(self, v: Sequence) -> Fraction:
        return sum((Fraction(w) * Fraction(x) for w, x in zip(self.normal, v)), Fraction(0))

    def satisfied(self, v: Sequence, strict: bool = False) -> bool:
        val = self.value(v)
        return val > self.rhs if strict else val >= self.rhs


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    vertices: tuple[ExponentVector, ...]
    facets: tuple[HalfSpace, ...]
    coordinate_halfspaces: tuple[HalfSpace, ...]

    @property
    def halfspaces(self) -> tuple[HalfSpace, ...]:
        return self.facets + self.coordinate_halfspaces

    def normals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(h.normal for h in self.halfspaces)

    def support(self, w: Sequence[int]) -> int:
        """min <w, v> over the polyhedron (w >= 0)."""
        return min(sum(a * b for a, b in zip(w, g)) for g in self.vertices)


@dataclass(frozen=True)
class ResolutionData:
    """Numerical data of a common toric log-resolution of a tuple of ideals.

    ``e[i][j]`` is the order of ideal i along ray j and ``k[j]`` the
    coefficient of the relative canonical divisor.
    """

    num_ideals: int
    rays: tuple[tuple[int, ...], ...]
    e: tuple[tuple[int, ...], ...]
    k: tuple[int, ...]
    affine_flags: tuple[bool, ...]

    def __post_init__(self):
        if len(self.e) != self.num_ideals:
            raise DimensionMismatch("e-matrix needs one row per ideal")
        if any(len(row) != len(self.k) for row in self.e):
            raise DimensionMismatch("e-matrix rows must have one entry per ray")
        if len(self.affine_flags) != len(self.k):
            raise DimensionMismatch("one affine flag per ray")
        if self.rays and len(self.rays) != len(self.k):
            raise DimensionMismatch("one k-value per ray")
        if any(x < 0 for row in self.e for x in row):
            raise InvalidArgument("e-values must be nonnegative")

    @property
    def num_rays(self) -> int:
        return len(self.k)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.e)


def _primitive(row: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a rational row by a positive factor to primitive integers."""
    lcm = 1
    for x in row:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in row]
    g = math.gcd(*ints) if any(ints) else 1
    return tuple(Fraction(x // g) for x in ints)


def _fourier_motzkin(rows, eliminate: Sequence[int]):
    """Project {x : row . (x, 1) >= 0 for all rows} along the listed coordinates.

    Rows are tuples of Fractions whose last entry is the constant term; each
    carries the set of original rows it was combined from, and Chernikov's
    rule drops combinations that cannot be irredundant.
    """
    current = {}
    for idx, row in enumerate(rows):
        key = _primitive(row)
        current.setdefault(key, frozenset([idx]))
    for step, col in enumerate(eliminate, start=1):
        pos, neg, nxt = [], [], {}
        for row, hist in current.items():
            if row[col] > 0:
                pos.append((row, hist))
            elif row[col] < 0:
                neg.append((row, hist))
            else:
                nxt.setdefault(row, hist)
        for (p, hp), (q, hq) in itertools.product(pos, neg):
            hist = hp | hq
            if len(hist) > step + 1:
                continue
            a, b = p[col], -q[col]
            combo = _primitive(tuple(b * x + a * y for x, y in zip(p, q)))
            if combo not in nxt or len(hist) < len(nxt[combo]):
                nxt[combo] = hist
        current = nxt
    return list(current)


def _facet_halfspaces(points: Sequence[ExponentVector], n: int) -> list[HalfSpace]:
    """Irredundant H-representation of conv(points) + R^n_+ via Fourier-Motzkin."""
    pts = list(points)
    m = len(pts)
    last = pts[-1]
    # variables: v_1..v_n, t_1..t_{m-1}; t_m = 1 - sum(t) has been substituted
    width = n + (m - 1) + 1
    rows = []
    for i in range(n):
        row = [Fraction(0)] * width
        row[i] = Fraction(1)
        for g in range(m - 1):
            row[n + g] = Fraction(last[i] - pts[g][i])
        row[-1] = Fraction(-last[i])
        rows.append(tuple(row))
    for g in range(m - 1):
        row = [Fraction(0)] * width
        row[n + g] = Fraction(1)
        rows.append(tuple(row))
    row = [Fraction(-1) if n <= c < width - 1 else Fraction(0) for c in range(width)]
    row[-1] = Fraction(1)
    rows.append(tuple(row))

    projected = _fourier_motzkin(rows, range(n, n + m - 1))
    normals = set()
    for row in projected:
        w = row[:n]
        if not any(w):
            continue
        g = math.gcd(*(int(x) for x in w))
        normals.add(tuple(int(x) // g for x in w))
    # the projection may keep valid but non-facet inequalities; a normal is a
    # facet normal iff its minimizing face has dimension n - 1
    facets = []
    for w in sorted(normals):
        if min(w) < 0:
            raise AssertionError(f"recession cone violated by normal {w}")
        values = [sum(a * b for a, b in zip(w, g)) for g in pts]
        c = min(values)
        tight = [g for g, val in zip(pts, values) if val == c]
        span = [[Fraction(a - b) for a, b in zip(g, tight[0])] for g in tight[1:]]
        span += [[Fraction(int(s == t)) for s in range(n)] for t in range(n) if w[t] == 0]
        if rank(span) == n - 1 if span else n == 1:
            facets.append(HalfSpace(w, Fraction(c)))
    return facets


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Both representations of conv(generators) + R^n_+."""
    if ideal.is_zero:
        raise UnsupportedInput("the zero ideal has no Newton polyhedron")
    if ideal.n == 0:
        raise UnsupportedInput("ambient dimension 0")
    return _polyhedron_from_points(ideal.generators, ideal.n)


def _polyhedron_from_points(points: Sequence[ExponentVector], n: int) -> NewtonPolyhedron:
    pts = minimal_elements(points)
    halfspaces = _facet_halfspaces(pts, n)
    facets = tuple(sorted(h for h in halfspaces if not h.is_coordinate))
    coords = tuple(sorted(h for h in halfspaces if h.is_coordinate))
    vertices = []
    for g in pts:
        tight = [list(h.normal) for h in halfspaces if h.value(g) == h.rhs]
        if rank(tight) == n:
            vertices.append(g)
    return NewtonPolyhedron(n, tuple(sorted(vertices)), facets, coords)


def minkowski_sum_points(ideals: Sequence[MonomialIdeal]) -> tuple[ExponentVector, ...]:
    """Minimal elements among all sums of one generator per ideal."""
    sums = (tuple(map(sum, zip(*choice))) for choice in itertools.product(*(I.generators for I in ideals)))
    return minimal_elements(sums)


def resolution_data(ideals: Sequence[MonomialIdeal]) -> ResolutionData:
    """Rays, e-values and k-values of a common toric log-resolution.

    The rays are the facet normals of P(a_1) + ... + P(a_l) together with
    every coordinate direction, sorted lexicographically.
    """
    ideals = tuple(ideals)
    if not ideals:
        raise InvalidArgument("need at least one ideal")
    dims = {I.n for I in ideals}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")
    (n,) = dims
    if any(I.is_zero for I in ideals):
        raise UnsupportedInput("zero ideal in tuple")
    if n == 0:
        raise UnsupportedInput("ambient dimension 0")
    total = _polyhedron_from_points(minkowski_sum_points(ideals), n)
    rays = set(total.normals())
    rays.update(tuple(int(s == t) for s in range(n)) for t in range(n))
    rays = tuple(sorted(rays))
    e = tuple(
        tuple(min(sum(a * b for a, b in zip(w, g)) for g in I.generators) for w in rays)
        for I in ideals
    )
    k = tuple(sum(w) - 1 for w in rays)
    affine = tuple(
        sum(w) == 1 and any(row[j] > 0 for row in e) for j, w in enumerate(rays)
    )
    return ResolutionData(len(ideals), rays, e, k, affine)


def weighted_rhs(rd: ResolutionData, lam: Sequence, j: int) -> Fraction:
    """sum_i lam_i * e[i][j] - k[j], the value rounded up in the multiplier ideal."""
    if not 0 <= j < rd.num_rays:
        raise IndexError(f"ray index {j} out of range")
    if len(lam) != rd.num_ideals:
        raise DimensionMismatch(f"lambda has length {len(lam)}, expected {rd.num_ideals}")
    return sum((Fraction(x) * rd.e[i][j] for i, x in enumerate(lam)), Fraction(0)) - rd.k[j]


def membership(P: NewtonPolyhedron, v: Sequence, strict: bool = False) -> bool:
    """Is v in P (in its interior when ``strict``)?"""
    if len(v) != P.n:
        raise DimensionMismatch(f"point {tuple(v)} not in dimension {P.n}")
    return all(h.satisfied(v, strict) for h in P.halfspaces)
