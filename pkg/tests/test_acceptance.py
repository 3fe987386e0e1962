"""Acceptance criteria 1-8, each with its own time budget.

Run under pytest, or directly with ``python tests/test_acceptance.py`` for a
plain pass/fail listing.  Under pytest the same listing is printed in the
terminal summary.
"""
import random
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cli_cases import CASES, GOLDEN, PLOT_CASES, run  # noqa: E402
from conftest import box_for, random_ideal, random_rational  # noqa: E402
from mmibs.algebra import MonomialIdeal, Polynomial, minimalize, product_power  # noqa: E402
from mmibs.bernstein import (  # noqa: E402
    bs_ideal_principal_monomial,
    functional_equation_check,
    generator_independence_certificate,
    inclusion_check_unit_factors,
    verify_theorem_main,
)
from mmibs.errors import CertificateError  # noqa: E402
from mmibs.mmi import (  # noqa: E402
    is_jumping_point,
    jumping_numbers,
    mixed_multiplier_ideal,
    ray_jumping_numbers,
    walls_through,
)
from mmibs.newton import resolution_data  # noqa: E402
from mmibs.oracle import jumping_numbers_scan, mmi_bruteforce  # noqa: E402

Q = Fraction
RESULTS: dict[int, str] = {}


def principal(*gens):
    return [MonomialIdeal(len(g), (tuple(g),)) for g in gens]


THEOREM_FAMILY = [
    principal((1, 0), (1, 1)),
    principal((2, 0), (1, 1)),
    principal((1, 1), (0, 2)),
    principal((1, 0), (0, 1)),
    principal((2, 0), (0, 3)),
    principal((2, 1), (0, 1)),
    principal((3, 0), (1, 2)),
    principal((1, 1), (1, 1)),
    principal((0, 1), (2, 1)),
    principal((1, 1, 0), (1, 0, 1)),
    principal((2, 1, 0), (0, 1, 1)),
    principal((1, 1, 1), (1, 0, 0)),
    principal((2, 0, 1), (0, 2, 0)),
]


def criterion(number: int, budget: float, summary: str):
    def wrap(fn):
        def test():
            start = time.perf_counter()
            try:
                detail = fn()
            except BaseException:
                RESULTS[number] = f"FAIL criterion {number}: {summary} (error after {time.perf_counter() - start:.2f}s)"
                raise
            elapsed = time.perf_counter() - start
            ok = elapsed < budget
            RESULTS[number] = f"{'PASS' if ok else 'FAIL'} criterion {number}: {summary}; {detail} [{elapsed:.2f}s / {budget:g}s]"
            assert ok, RESULTS[number]
        test.__name__ = fn.__name__
        return test
    return wrap


@criterion(1, 1, "single-ideal regression for (x^2)")
def test_criterion_1_single_ideal():
    I = minimalize([(2,)])
    rd = resolution_data([I])
    assert jumping_numbers(rd, 1) == [Q(1, 2), Q(1)]
    assert jumping_numbers_scan(I, 1) == [Q(1, 2), Q(1)]
    res = bs_ideal_principal_monomial([I])
    assert res.reduced.evaluate([Q(-1, 2)]) == 0 and res.reduced.evaluate([Q(-1)]) == 0
    assert functional_equation_check([(2, 1)], res.operator_orders, res.generator)
    return f"jumping numbers {{1/2, 1}}, reduced b = {res.reduced}"


@criterion(2, 10, "jumping points of norm < 1 are zeros of the reduced generator")
def test_criterion_2_theorem():
    points = 0
    for ideals in THEOREM_FAMILY:
        rep = verify_theorem_main(ideals, samples=5)
        assert rep.status == "pass", (ideals, rep.violations)
        assert all(rep.symbolic.values())
        for lam in rep.checked_points:
            assert sum(x * x for x in lam) < 1
            assert rep.reduced.evaluate([-x for x in lam]) == 0
        points += len(rep.checked_points)
    assert len(THEOREM_FAMILY) >= 10 and points > 0
    return f"{len(THEOREM_FAMILY)} tuples, {points} jumping points checked"


@criterion(3, 60, "mixed_multiplier_ideal agrees with the brute-force oracle")
def test_criterion_3_oracle():
    rng = random.Random(20240603)
    pairs = 0
    while pairs < 220:
        n = rng.choice((1, 2, 2, 3))
        ell = rng.choice((1, 2))
        ideals = [random_ideal(rng, n, max_gens=4, max_exp=3 if n < 3 else 2) for _ in range(ell)]
        rd = resolution_data(ideals)
        for _ in range(2):
            lam = tuple(random_rational(rng) for _ in range(ell))
            expected = mmi_bruteforce(ideals, lam, box_for(ideals, lam))
            assert mixed_multiplier_ideal(rd, lam) == expected, (ideals, lam)
            pairs += 1
    return f"{pairs} (tuple, lambda) pairs"


@criterion(4, 30, "ray jumping numbers match the product ideal's")
def test_criterion_4_ray():
    rng = random.Random(7)
    cases = [(principal((1, 0), (0, 1)), (1, 2)), (principal((1, 0), (1, 1)), (1, 1))]
    while len(cases) < 24:
        n = rng.choice((1, 2))
        ideals = [random_ideal(rng, n, max_gens=3, max_exp=2) for _ in range(2)]
        alpha = (rng.randint(1, 2), rng.randint(1, 2))
        cases.append((ideals, alpha))
    numbers = 0
    for ideals, alpha in cases:
        rd = resolution_data(ideals)
        found = ray_jumping_numbers(rd, None, alpha, 1)
        expected = jumping_numbers_scan(product_power(ideals, alpha), 1)
        assert set(found) == set(expected), (ideals, alpha, found, expected)
        numbers += len(found)
    return f"{len(cases)} (tuple, alpha) pairs, {numbers} jumping numbers"


@criterion(5, 30, "monotonicity and wall confinement")
def test_criterion_5_monotone():
    rng = random.Random(11)
    pairs = jumps = 0
    while pairs < 520:
        n = rng.choice((1, 2, 3))
        ell = rng.choice((1, 2, 3))
        ideals = [random_ideal(rng, n, max_gens=3, max_exp=3) for _ in range(ell)]
        rd = resolution_data(ideals)
        for _ in range(4):
            hi = tuple(random_rational(rng, top=Q(2)) for _ in range(ell))
            lo = tuple(x * random_rational(rng, top=Q(1)) for x in hi)
            assert mixed_multiplier_ideal(rd, lo) >= mixed_multiplier_ideal(rd, hi)
            pairs += 1
            for lam in (lo, hi):
                if is_jumping_point(rd, lam):
                    jumps += 1
                    assert walls_through(rd, lam), (ideals, lam)
    return f"{pairs} ordered pairs, {jumps} jumping points all on walls"


def _random_poly(rng, xs, terms=2):
    return Polynomial(xs, {tuple(rng.randint(0, 2) for _ in xs): rng.randint(-3, 3) for _ in range(rng.randint(0, terms))})


@criterion(6, 10, "generator independence")
def test_criterion_6_independence():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.choice((1, 2, 3))
        ideals = [random_ideal(rng, n) for _ in range(2)]
        lam = (random_rational(rng), random_rational(rng))
        padded = []
        for I in ideals:
            extra = {tuple(a + rng.randint(0, 2) for a in rng.choice(I.generators)) for _ in range(3)}
            padded.append(MonomialIdeal(n, tuple(sorted(set(I.generators) | extra))))
        assert mixed_multiplier_ideal(resolution_data(padded), lam) == mixed_multiplier_ideal(resolution_data(ideals), lam)
    valid = invalid = 0
    for _ in range(60):
        n = rng.choice((1, 2, 3))
        xs = tuple(f"x{i}" for i in range(1, n + 1))
        gens = list(random_ideal(rng, n).generators)
        zs = [_random_poly(rng, xs) for _ in gens]
        h = Polynomial(xs, {})
        for z, f in zip(zs, gens):
            h = h + z * Polynomial.monomial(xs, f)
        assert generator_independence_certificate(gens, h, zs, xs)
        valid += 1
        wrong = list(zs)
        wrong[0] = wrong[0] + Polynomial.constant(xs, 1)
        with pytest.raises(CertificateError):
            generator_independence_certificate(gens, h, wrong, xs)
        invalid += 1
    return f"60 padded generating sets, {valid} valid certificates accepted, {invalid} invalid rejected"


@criterion(7, 1, "B_G lies in ((s1 + 1)...(sl + 1))")
def test_criterion_7_inclusion():
    for ideals in THEOREM_FAMILY:
        assert inclusion_check_unit_factors(bs_ideal_principal_monomial(ideals).generator)
    return f"{len(THEOREM_FAMILY)} generators"


@criterion(8, 5, "CLI golden files, exit codes and plots")
def test_criterion_8_cli():
    with tempfile.TemporaryDirectory() as tmp:
        for name, problem, argv, code in CASES:
            got, out = run(problem, argv, Path(tmp) / "p.svg" if "PLOT" in argv else None)
            assert got == code, name
            assert f"exit {got}\n{out}" == (GOLDEN / f"{name}.out").read_text(encoding="utf-8"), name
        for name, problem, argv in PLOT_CASES:
            path = Path(tmp) / f"{name}.svg"
            run(problem, argv, path)
            assert path.read_bytes() == (GOLDEN / f"{name}.svg").read_bytes(), name
    commands = {argv[0] for _, _, argv, _ in CASES}
    problems = {p for _, p, _, _ in CASES}
    return f"{len(CASES)} command runs over {len(problems)} problems ({len(commands)} commands), {len(PLOT_CASES)} plots"


if __name__ == "__main__":
    failed = False
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except BaseException:
                failed = True
    for number in sorted(RESULTS):
        print(RESULTS[number])
    sys.exit(1 if failed else 0)
