"""Sample points for every face of a hyperplane arrangement inside a cube.

Faces are the relatively open cells of all dimensions cut out by the
hyperplanes together with the cube's facets; two points lie in the same face
iff they have the same sign vector.  Sampling works by slicing: the first
coordinate is fixed at every vertex coordinate and at interior points of the
slabs between consecutive vertex coordinates, and the rest is recursive.
Every face contains at least one sample, and every face of positive
dimension contains at least ``density`` samples.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .algebra import rank, solve

Hyperplane = tuple[tuple[Fraction, ...], Fraction]


def _box_planes(d: int, box_max: Fraction) -> list[Hyperplane]:
    planes = []
    for t in range(d):
        unit = tuple(Fraction(int(s == t)) for s in range(d))
        planes.append((unit, Fraction(0)))
        planes.append((unit, Fraction(box_max)))
    return planes


def vertices(hyps: Sequence[Hyperplane], d: int, box_max: Fraction) -> set[tuple[Fraction, ...]]:
    """Points of the cube where d independent hyperplanes (or cube facets) meet."""
    planes = list(dict.fromkeys(list(hyps) + _box_planes(d, box_max)))
    out = set()
    for combo in itertools.combinations(planes, d):
        sol = solve([a for a, _ in combo], [b for _, b in combo])
        if sol is not None and all(0 <= x <= box_max for x in sol):
            out.add(sol)
    return out


def _slice_values(critical: list[Fraction], density: int) -> list[Fraction]:
    values = []
    for i, c in enumerate(critical):
        values.append(c)
        if i + 1 < len(critical):
            step = (critical[i + 1] - c) / (density + 1)
            values.extend(c + step * r for r in range(1, density + 1))
    return values


def _samples(hyps: list[Hyperplane], d: int, box_max: Fraction, density: int) -> list[tuple[Fraction, ...]]:
    if d == 0:
        return [()]
    critical = sorted({v[0] for v in vertices(hyps, d, box_max)})
    out = []
    for x in _slice_values(critical, density):
        sub = []
        for a, b in hyps:
            rest = a[1:]
            if any(rest):
                sub.append((rest, b - a[0] * x))
        sub = list(dict.fromkeys(sub))
        out.extend((x,) + tail for tail in _samples(sub, d - 1, box_max, density))
    return out


def sign_vector(hyps: Sequence[Hyperplane], point: Sequence[Fraction]) -> tuple[int, ...]:
    signs = []
    for a, b in hyps:
        val = sum((x * y for x, y in zip(a, point)), Fraction(0)) - b
        signs.append((val > 0) - (val < 0))
    return tuple(signs)


def face_samples(hyps: Sequence[Hyperplane], d: int, box_max, density: int = 1) -> dict[tuple[int, ...], list[tuple[Fraction, ...]]]:
    """Map each face's sign vector (w.r.t. hyps then cube facets) to its samples, sorted."""
    box_max = Fraction(box_max)
    hyps = [(tuple(Fraction(x) for x in a), Fraction(b)) for a, b in hyps]
    every = hyps + _box_planes(d, box_max)
    faces: dict[tuple[int, ...], list[tuple[Fraction, ...]]] = {}
    for p in sorted(set(_samples(list(dict.fromkeys(hyps)), d, box_max, density))):
        faces.setdefault(sign_vector(every, p), []).append(p)
    return dict(sorted(faces.items(), key=lambda kv: kv[1][0]))


def face_dimension(signs: Sequence[int], hyps: Sequence[Hyperplane], d: int, box_max) -> int:
    """Dimension of a face: d minus the rank of the hyperplanes it lies on."""
    every = list(hyps) + _box_planes(d, Fraction(box_max))
    tight = [list(a) for (a, _), s in zip(every, signs) if s == 0]
    return d - rank(tight)
