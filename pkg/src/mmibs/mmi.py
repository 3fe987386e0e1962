"""Mixed multiplier ideals of monomial tuples, jumping points and walls.

For a toric log-resolution with rays w_j, the mixed multiplier ideal at
lambda is generated by the monomials x^v with

    <w_j, v> + k_j + 1 > sum_i lambda_i e_{i,j}    for every ray j,

so J only changes where some sum_i lambda_i e_{i,j} crosses an integer
k_j + nu (nu >= 1).  Those hyperplanes are the candidate walls.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import MonomialIdeal, as_rational, minimal_elements, product_power
from .arrangement import face_samples
from .errors import DimensionMismatch, InvalidArgument, UnsupportedInput, VerificationError
from .newton import ResolutionData, resolution_data, weighted_rhs

LambdaPoint = tuple[Fraction, ...]

MAX_ARRANGEMENT_DIM = 3


def as_lambda(coords: Sequence, ell: int | None = None) -> LambdaPoint:
    lam = tuple(as_rational(x) for x in coords)
    if any(x < 0 for x in lam):
        raise InvalidArgument(f"lambda must be nonnegative: {[str(x) for x in lam]}")
    if ell is not None and len(lam) != ell:
        raise DimensionMismatch(f"lambda has length {len(lam)}, expected {ell}")
    return lam


@dataclass(frozen=True, order=True)
class Wall:
    """The hyperplane sum_i coeffs[i] * z_i = rhs coming from ray ``ray_index``."""

    coeffs: tuple[int, ...]
    rhs: int
    ray_index: int = field(compare=False, default=-1)

    def value(self, lam: Sequence) -> Fraction:
        return sum((c * Fraction(x) for c, x in zip(self.coeffs, lam)), Fraction(0))

    def contains(self, lam: Sequence) -> bool:
        return self.value(lam) == self.rhs

    def hyperplane(self) -> tuple[tuple[Fraction, ...], Fraction]:
        return tuple(Fraction(c) for c in self.coeffs), Fraction(self.rhs)


@dataclass(frozen=True)
class RegionReport:
    base: LambdaPoint
    ideal_at_base: MonomialIdeal
    walls_active: tuple[Wall, ...]
    constancy_sample: tuple[LambdaPoint, ...]
    region_sample: tuple[LambdaPoint, ...]
    outside_sample: tuple[LambdaPoint, ...]
    axis_degenerate: tuple[LambdaPoint, ...]
    """Region probes on a coordinate hyperplane, where regions are only one-sided."""


def _ambient_dim(rd: ResolutionData) -> int:
    if not rd.rays:
        raise UnsupportedInput("resolution data without rays cannot reconstruct monomial ideals")
    return len(rd.rays[0])


def _check(rd: ResolutionData, lam) -> LambdaPoint:
    return as_lambda(lam, rd.num_ideals)


def mixed_multiplier_ideal(rd: ResolutionData, lam: Sequence) -> MonomialIdeal:
    """J(a_1^lam_1 ... a_l^lam_l) as a monomial ideal."""
    lam = _check(rd, lam)
    n = _ambient_dim(rd)
    # x^v is in J iff <w_j, v> > thresholds[j] for all rays
    thresholds = [weighted_rhs(rd, lam, j) - 1 for j in range(rd.num_rays)]
    bounds = []
    for t in range(n):
        cands = [math.ceil(c / w[t]) + 1 for w, c in zip(rd.rays, thresholds) if w[t] > 0]
        bounds.append(max([0] + cands))
    members = []
    for v in itertools.product(*(range(b + 1) for b in bounds)):
        if all(sum(a * b for a, b in zip(w, v)) > c for w, c in zip(rd.rays, thresholds)):
            members.append(v)
    return MonomialIdeal(n, minimal_elements(members))


def valuation_profile(rd: ResolutionData, lam: Sequence) -> tuple[int, ...]:
    """Per-ray coefficients ceil(k_j - sum_i lam_i e_{i,j}) of the divisor pushed forward."""
    lam = _check(rd, lam)
    return tuple(math.ceil(-weighted_rhs(rd, lam, j)) for j in range(rd.num_rays))


def jump_epsilon(rd: ResolutionData, lam: Sequence, direction: Sequence) -> Fraction | None:
    """A step below which J(lam - eps * direction) no longer depends on eps.

    Moving along -direction lowers sum_i lam_i e_{i,j} at rate D_j; J is
    constant as long as none of these sums reaches the next integer below
    it.  Returns None when the direction leaves the orthant immediately.
    """
    lam = _check(rd, lam)
    direction = tuple(Fraction(x) for x in direction)
    if any(x < 0 for x in direction) or not any(direction):
        raise InvalidArgument("direction must be nonzero and nonnegative")
    limits = [lam[i] / d for i, d in enumerate(direction) if d > 0]
    if min(limits) == 0:
        return None
    for j in range(rd.num_rays):
        rate = sum((d * e for d, e in zip(direction, rd.column(j))), Fraction(0))
        if rate == 0:
            continue
        total = weighted_rhs(rd, lam, j) + rd.k[j]
        below = math.ceil(total) - 1
        if below >= rd.k[j] + 1:
            limits.append((total - below) / rate)
    return min(limits) / 2


def jumps_along(rd: ResolutionData, lam: Sequence, direction: Sequence) -> bool:
    """Does J strictly grow when lam moves a little along -direction?"""
    eps = jump_epsilon(rd, lam, direction)
    if eps is None:
        return False
    lam = _check(rd, lam)
    lower = tuple(x - eps * Fraction(d) for x, d in zip(lam, direction))
    return mixed_multiplier_ideal(rd, lower) > mixed_multiplier_ideal(rd, lam)


def is_jumping_point(rd: ResolutionData, lam: Sequence) -> bool:
    """True iff J(lam') strictly contains J(lam) for every lam' < lam close to lam.

    Every coordinate with lam_t > 0 is lowered simultaneously; coordinates
    equal to zero stay at zero so the probe never leaves the orthant.  All
    points strictly below lam in a small ball share one ideal, so a single
    probe with an exact step decides the question.
    """
    lam = _check(rd, lam)
    if not any(lam):
        return False
    direction = tuple(int(x > 0) for x in lam)
    return jumps_along(rd, lam, direction)


def candidate_walls(rd: ResolutionData, box_max) -> list[Wall]:
    """Walls sum_i e_{i,j} z_i = k_j + nu meeting [0, box_max]^l, ordered by ray then rhs."""
    box_max = as_rational(box_max)
    if box_max <= 0:
        raise InvalidArgument("box_max must be positive")
    walls, seen = [], set()
    for j in range(rd.num_rays):
        coeffs = rd.column(j)
        reach = box_max * sum(coeffs)
        nu = 1
        while rd.k[j] + nu <= reach:
            key = (coeffs, rd.k[j] + nu)
            if key not in seen:
                seen.add(key)
                walls.append(Wall(coeffs, rd.k[j] + nu, j))
            nu += 1
    return walls


def walls_through(rd: ResolutionData, lam: Sequence) -> list[Wall]:
    """Candidate walls passing through lam."""
    lam = _check(rd, lam)
    bound = max(lam, default=Fraction(0))
    if bound == 0:
        return []
    return [w for w in candidate_walls(rd, bound) if w.contains(lam)]


def region_report(rd: ResolutionData, lam: Sequence, box_max, density: int = 1) -> RegionReport:
    """Classify one probe per face of the wall arrangement in [0, box_max]^l."""
    lam = _check(rd, lam)
    box_max = as_rational(box_max)
    ell = rd.num_ideals
    if ell > MAX_ARRANGEMENT_DIM:
        raise UnsupportedInput(f"arrangement enumeration supports l <= {MAX_ARRANGEMENT_DIM}, got {ell}")
    if any(x > box_max for x in lam):
        raise InvalidArgument("lambda lies outside the box")
    walls = candidate_walls(rd, box_max)
    base_ideal = mixed_multiplier_ideal(rd, lam)
    faces = face_samples([w.hyperplane() for w in walls], ell, box_max, density)
    constancy, region, outside = [], [], []
    for samples in faces.values():
        probe = samples[0]
        ideal = mixed_multiplier_ideal(rd, probe)
        if ideal == base_ideal:
            constancy.append(probe)
        if ideal >= base_ideal:
            region.append(probe)
        else:
            outside.append(probe)
    return RegionReport(
        base=lam,
        ideal_at_base=base_ideal,
        walls_active=tuple(w for w in walls if w.contains(lam)),
        constancy_sample=tuple(constancy),
        region_sample=tuple(region),
        outside_sample=tuple(outside),
        axis_degenerate=tuple(p for p in region if 0 in p),
    )


def _ray_candidates(rd: ResolutionData, alpha: Sequence[int], max_param: Fraction) -> list[Fraction]:
    cands = set()
    for j in range(rd.num_rays):
        rate = sum(a * e for a, e in zip(alpha, rd.column(j)))
        if rate == 0:
            continue
        nu = 1
        while Fraction(rd.k[j] + nu, rate) <= max_param:
            cands.add(Fraction(rd.k[j] + nu, rate))
            nu += 1
    return sorted(cands)


def _ray_scan(rd: ResolutionData, alpha: Sequence[int], max_param: Fraction) -> list[Fraction]:
    return [
        mu for mu in _ray_candidates(rd, alpha, max_param)
        if is_jumping_point(rd, tuple(mu * a for a in alpha))
    ]


def ray_jumping_numbers(
    rd: ResolutionData,
    ideals: Sequence[MonomialIdeal] | None,
    alpha: Sequence[int],
    max_param,
) -> list[Fraction]:
    """Parameters mu in (0, max_param] such that mu * alpha is a jumping point.

    When the ideals are given, the answer is cross-checked against the
    jumping numbers of a_1^alpha_1 ... a_l^alpha_l treated as one ideal.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != rd.num_ideals:
        raise DimensionMismatch(f"alpha has length {len(alpha)}, expected {rd.num_ideals}")
    if any(a <= 0 for a in alpha):
        raise InvalidArgument("alpha entries must be positive integers")
    max_param = as_rational(max_param)
    found = _ray_scan(rd, alpha, max_param)
    if ideals is not None:
        single = resolution_data((product_power(ideals, alpha),))
        expected = _ray_scan(single, (1,), max_param)
        if found != expected:
            raise VerificationError(
                f"ray jumping points {found} disagree with the product ideal's {expected}"
            )
    return found


def jumping_numbers(rd: ResolutionData, max_param) -> list[Fraction]:
    """Jumping numbers in (0, max_param] of a single ideal."""
    if rd.num_ideals != 1:
        raise InvalidArgument("jumping numbers are defined for a single ideal; use ray_jumping_numbers")
    return _ray_scan(rd, (1,), as_rational(max_param))
