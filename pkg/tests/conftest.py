import itertools
from fractions import Fraction

from hypothesis import strategies as st

from mmibs.algebra import MonomialIdeal, minimalize


def ideals(n, max_gens=4, max_exp=3, nonzero=True):
    vec = st.tuples(*[st.integers(0, max_exp)] * n)
    if nonzero:
        vec = vec.filter(any)
    return st.lists(vec, min_size=1, max_size=max_gens).map(lambda gs: minimalize(gs, n))


def principal(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n).filter(any).map(lambda g: MonomialIdeal(n, (g,)))


rationals = st.builds(Fraction, st.integers(0, 12), st.integers(1, 6))


def random_ideal(rng, n, max_gens=4, max_exp=3):
    gens = []
    while not gens:
        gens = [v for v in (tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(rng.randint(1, max_gens))) if any(v)]
    return minimalize(gens, n)


def random_rational(rng, top=Fraction(3, 2), den=6):
    q = rng.randint(1, den)
    return Fraction(rng.randint(0, int(top * q)), q)


def box_for(ideals_, lam):
    top = max(max(g) for I in ideals_ for g in I.generators)
    return int(sum(Fraction(x) for x in lam) * top) + 2


def all_vectors(n, top):
    return itertools.product(range(top + 1), repeat=n)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[number])
