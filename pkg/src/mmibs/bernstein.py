"""Bernstein-Sato ideals of tuples of ideals, exactly, for principal monomial data.

For a tuple of ideals a_i = (f_{i,1}, ..., f_{i,r_i}) one forms the
hypersurfaces g_i = sum_j f_{i,j} y_{i,j} in the ring with extra variables
y_{i,j}; the Bernstein-Sato ideal of the tuple is the reduced ideal of
G = (g_1, ..., g_l).  When every a_i is principal and monomial, each g_i is a
monomial and the functional equation can be written down and checked
symbolically with :class:`TwistedMonomial`.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import (
    MonomialIdeal,
    Polynomial,
    as_rational,
    default_variable_names,
    exponent_vector,
    format_rational,
    substitute,
    substitute_many,
)
from .arrangement import face_samples
from .errors import CertificateError, DimensionMismatch, InvalidArgument, UnsupportedInput, VerificationError
from .mmi import MAX_ARRANGEMENT_DIM, Wall, candidate_walls, is_jumping_point
from .newton import resolution_data


def s_variables(ell: int) -> tuple[str, ...]:
    return tuple(f"s{k}" for k in range(1, ell + 1))


# -- building G --------------------------------------------------------------


@dataclass(frozen=True)
class HypersurfaceTuple:
    """g_i = sum_j f_{i,j} * y_{i,j}, each in its own block of y-variables."""

    x_vars: tuple[str, ...]
    y_blocks: tuple[tuple[str, ...], ...]
    polys: tuple[Polynomial, ...]

    @property
    def ring_vars(self) -> tuple[str, ...]:
        return self.x_vars + tuple(y for block in self.y_blocks for y in block)

    @property
    def d(self) -> int:
        return len(self.ring_vars)


def y_name(i: int, j: int) -> str:
    return f"y{i}_{j}"


def build_g(ideals) -> HypersurfaceTuple:
    """Hypersurface tuple of a tuple of ideals, given as MonomialIdeals or generator lists.

    Generator lists are used as given (in order, repeats and non-minimal
    generators allowed), since G depends on the chosen generators.
    """
    gen_lists = []
    for I in ideals:
        if isinstance(I, MonomialIdeal):
            # lex order with x_1 > x_2 > ...: (1,0) before (0,1)
            gens = sorted(I.generators, reverse=True)
        else:
            gens = [exponent_vector(g) for g in I]
        if not gens:
            raise InvalidArgument("every ideal needs at least one generator")
        gen_lists.append(list(gens))
    dims = {len(g) for gens in gen_lists for g in gens}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")
    (n,) = dims
    x_vars = default_variable_names(n)
    blocks = tuple(
        tuple(y_name(i, j) for j in range(1, len(gens) + 1)) for i, gens in enumerate(gen_lists, start=1)
    )
    ring = x_vars + tuple(y for b in blocks for y in b)
    polys = []
    for gens, block in zip(gen_lists, blocks):
        g = Polynomial(ring, {})
        for f, y in zip(gens, block):
            g = g + Polynomial(ring, {tuple(f) + tuple(int(v == y) for v in ring[n:]): 1})
        polys.append(g)
    return HypersurfaceTuple(x_vars, blocks, tuple(polys))


def generator_independence_certificate(ideal_gens, h, z, x_vars: Sequence[str] | None = None) -> bool:
    """Check the change of variables relating g = sum f_j y_j and g' = g + h y_{r+1}.

    ``z`` witnesses h = sum_j z_j f_j.  After y_j -> y'_j + z_j y'_{r+1},
    g must become g' = sum_j f_j y'_j + h y'_{r+1}.
    """
    gens = list(ideal_gens)
    if not gens:
        raise InvalidArgument("need at least one generator")
    if x_vars is None:
        first = gens[0]
        n = len(first.variables) if isinstance(first, Polynomial) else len(first)
        x_vars = default_variable_names(n)
    x_vars = tuple(x_vars)
    fs = [g if isinstance(g, Polynomial) else Polynomial.monomial(x_vars, exponent_vector(g, len(x_vars)))
          for g in gens]
    h = h if isinstance(h, Polynomial) else Polynomial.constant(x_vars, h)
    zs = [c if isinstance(c, Polynomial) else Polynomial.constant(x_vars, c) for c in z]
    if len(zs) != len(fs):
        raise CertificateError(f"need one coefficient per generator, got {len(zs)} for {len(fs)}")
    for name, poly in [("h", h)] + [(f"z{j}", c) for j, c in enumerate(zs, 1)] + [(f"f{j}", f) for j, f in enumerate(fs, 1)]:
        stray = poly.used_variables() - set(x_vars)
        if stray:
            raise CertificateError(f"{name} uses variables {sorted(stray)} outside {x_vars}")
    combo = Polynomial(x_vars, {})
    for c, f in zip(zs, fs):
        combo = combo + c * f
    if combo != h:
        raise CertificateError(f"h = {h} is not sum z_j f_j = {combo}")

    r = len(fs)
    ys = [f"y{j}" for j in range(1, r + 1)]
    yp = [f"yp{j}" for j in range(1, r + 2)]
    ring = x_vars + tuple(ys) + tuple(yp)
    g = Polynomial(ring, {})
    g_prime = Polynomial(ring, {})
    for f, y, y2 in zip(fs, ys, yp):
        g = g + f * Polynomial.var(ring, y)
        g_prime = g_prime + f * Polynomial.var(ring, y2)
    g_prime = g_prime + h * Polynomial.var(ring, yp[-1])
    mapping = {y: Polynomial.var(ring, y2) + c * Polynomial.var(ring, yp[-1]) for y, y2, c in zip(ys, yp, zs)}
    return substitute_many(g, mapping) == g_prime


# -- linear forms and their products -------------------------------------------


@dataclass(frozen=True, order=True)
class LinearForm:
    """sum_k coeffs[k] * s_k + constant."""

    coeffs: tuple[int, ...]
    constant: int

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise InvalidArgument("linear-form coefficients must be nonnegative")
        if self.constant <= 0:
            raise InvalidArgument("linear-form constant must be positive")

    def evaluate(self, s: Sequence) -> Fraction:
        return sum((c * as_rational(x) for c, x in zip(self.coeffs, s)), Fraction(self.constant))

    def as_polynomial(self, svars: Sequence[str]) -> Polynomial:
        poly = Polynomial.constant(svars, self.constant)
        for c, name in zip(self.coeffs, svars):
            if c:
                poly = poly + c * Polynomial.var(svars, name)
        return poly

    def primitive(self) -> LinearForm:
        g = math.gcd(self.constant, *self.coeffs)
        return LinearForm(tuple(c // g for c in self.coeffs), self.constant // g)

    def is_unit_factor(self, k: int) -> bool:
        """Is this form a positive multiple of s_k + 1?"""
        p = self.primitive()
        return p.constant == 1 and p.coeffs == tuple(int(i == k) for i in range(len(self.coeffs)))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs, 1):
            if c:
                parts.append(f"s{k}" if c == 1 else f"{c}*s{k}")
        parts.append(str(self.constant))
        return " + ".join(parts)


@dataclass(frozen=True)
class ProductOfLinearForms:
    """scale * product of factors, kept factored."""

    factors: tuple[LinearForm, ...]
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @property
    def ell(self) -> int:
        return len(self.factors[0].coeffs) if self.factors else 0

    def evaluate(self, s: Sequence) -> Fraction:
        value = Fraction(self.scale)
        for f in self.factors:
            value *= f.evaluate(s)
        return value

    def expand(self, svars: Sequence[str] | None = None) -> Polynomial:
        svars = tuple(svars or s_variables(self.ell))
        poly = Polynomial.constant(svars, self.scale)
        for f in self.factors:
            poly = poly * f.as_polynomial(svars)
        return poly

    def __mul__(self, other: ProductOfLinearForms) -> ProductOfLinearForms:
        return ProductOfLinearForms(self.factors + other.factors, self.scale * other.scale)

    def has_unit_factor(self, k: int) -> bool:
        return any(f.is_unit_factor(k) for f in self.factors)

    def divide_unit_factor(self, k: int) -> ProductOfLinearForms:
        """Divide by s_k + 1, preferring an exact copy of that factor."""
        factors = list(self.factors)
        exact = [i for i, f in enumerate(factors) if f.is_unit_factor(k) and f.constant == 1]
        loose = [i for i, f in enumerate(factors) if f.is_unit_factor(k)]
        if not loose:
            raise InvalidArgument(f"s{k + 1} + 1 does not divide {self}")
        idx = (exact or loose)[0]
        removed = factors.pop(idx)
        return ProductOfLinearForms(tuple(factors), self.scale * removed.constant)

    def reduced(self) -> ProductOfLinearForms:
        """b / ((s_1 + 1) ... (s_l + 1))."""
        out = self
        for k in range(self.ell):
            out = out.divide_unit_factor(k)
        return out

    def multiset(self) -> Counter:
        return Counter(self.factors)

    def __str__(self) -> str:
        body = "".join(f"({f})" for f in self.factors) or "1"
        return body if self.scale == 1 else f"{format_rational(self.scale)}*{body}"


# -- twisted monomials -----------------------------------------------------------


@dataclass(frozen=True)
class TwistedMonomial:
    """coefficient(s) * prod_u x_u^(v_u + sum_k a_{u,k} s_k).

    Exponents are affine-linear in s with integer constant and nonnegative
    integer slopes, so differentiation stays inside this family.
    """

    coefficient: Polynomial
    exponents: tuple[tuple[int, tuple[int, ...]], ...]

    def differentiate(self, u: int, times: int = 1) -> TwistedMonomial:
        """Apply (d/dx_u)^times: each step multiplies by the current exponent and lowers it by one."""
        svars = self.coefficient.variables
        coeff = self.coefficient
        const, slopes = self.exponents[u]
        for _ in range(times):
            factor = Polynomial.constant(svars, const)
            for name, a in zip(svars, slopes):
                if a:
                    factor = factor + a * Polynomial.var(svars, name)
            coeff = coeff * factor
            const -= 1
        exps = list(self.exponents)
        exps[u] = (const, slopes)
        return TwistedMonomial(coeff, tuple(exps))

    def scaled(self, poly: Polynomial) -> TwistedMonomial:
        return TwistedMonomial(self.coefficient * poly, self.exponents)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedMonomial):
            return NotImplemented
        if self.coefficient.is_zero() and other.coefficient.is_zero():
            return True
        return self.coefficient == other.coefficient and self.exponents == other.exponents

    __hash__ = None


def _monomial_data(g, d: int | None) -> tuple[tuple[int, ...], Fraction]:
    if isinstance(g, Polynomial):
        if not g.is_monomial():
            raise UnsupportedInput(f"{g} is not a monomial")
        ((exps, c),) = g.terms.items()
        return tuple(exps), c
    exps = exponent_vector(g, d)
    return exps, Fraction(1)


def power_product(gs, shift: int) -> TwistedMonomial:
    """g_1^(s_1 + shift) ... g_l^(s_l + shift) for unit-coefficient monomials g_i."""
    exps = [_monomial_data(g, None)[0] for g in gs]
    d = len(exps[0])
    ell = len(exps)
    svars = s_variables(ell)
    per_var = tuple(
        (shift * sum(e[u] for e in exps), tuple(e[u] for e in exps)) for u in range(d)
    )
    return TwistedMonomial(Polynomial.constant(svars, 1), per_var)


def functional_equation_check(g, delta: Sequence[int], b: ProductOfLinearForms) -> bool:
    """Does delta * g^(s+1) == b(s) * g^s hold, with delta a product of partial derivatives?

    ``g`` is a tuple of monomials (exponent vectors over the ring variables,
    or single-term Polynomials) and ``delta`` lists the derivative order per
    ring variable.
    """
    gs = list(g)
    if not gs:
        raise InvalidArgument("empty tuple")
    data = [_monomial_data(x, None) for x in gs]
    d = len(data[0][0])
    if any(len(e) != d for e, _ in data) or len(delta) != d:
        raise DimensionMismatch("monomials and derivative orders must share the ring dimension")
    if any(o < 0 for o in delta):
        raise InvalidArgument("derivative orders must be nonnegative")
    if b.factors and b.ell != len(gs):
        raise DimensionMismatch(f"b is in {b.ell} variables, tuple has {len(gs)} entries")
    exps = [e for e, _ in data]
    svars = s_variables(len(gs))
    # c^(s+1) / c^s leaves one factor of each coefficient on the left
    lead = Fraction(1)
    for _, c in data:
        lead *= c
    lhs = power_product(exps, 1).scaled(Polynomial.constant(svars, lead))
    for u, order in enumerate(delta):
        if order:
            lhs = lhs.differentiate(u, order)
    rhs = power_product(exps, 0).scaled(b.expand(svars))
    return lhs == rhs


def _principal_exponents(monomials) -> list[tuple[int, ...]]:
    out = []
    for m in monomials:
        if isinstance(m, MonomialIdeal):
            if not m.is_principal:
                raise UnsupportedInput(f"{m} is not principal")
            out.append(m.generators[0])
        else:
            out.append(exponent_vector(m))
    if not out:
        raise InvalidArgument("empty tuple")
    if len({len(a) for a in out}) != 1:
        raise DimensionMismatch("monomials of different lengths")
    return out


@dataclass(frozen=True)
class BSIdealResult:
    generator: ProductOfLinearForms
    reduced: ProductOfLinearForms
    operator_orders: tuple[int, ...]
    ring_vars: tuple[str, ...]


def bs_ideal_principal_monomial(monomials) -> BSIdealResult:
    """A witnessed element of B_G, and its reduction, for g_i = x^{a_i} y_i.

    b(s) = prod_t prod_{m=1}^{A_t} (sum_k a_{k,t} s_k + m) * prod_k (s_k + 1)
    with A_t = sum_k a_{k,t}; the operator prod_t d_{x_t}^{A_t} prod_k d_{y_k}
    realizes the functional equation, which is checked before returning.
    """
    exps = _principal_exponents(monomials)
    n, ell = len(exps[0]), len(exps)
    factors = []
    totals = []
    for t in range(n):
        coeffs = tuple(a[t] for a in exps)
        totals.append(sum(coeffs))
        factors.extend(LinearForm(coeffs, m) for m in range(1, sum(coeffs) + 1))
    units = [LinearForm(tuple(int(i == k) for i in range(ell)), 1) for k in range(ell)]
    b = ProductOfLinearForms(tuple(factors + units))
    ring_g = [tuple(a) + tuple(int(i == k) for i in range(ell)) for k, a in enumerate(exps)]
    orders = tuple(totals) + (1,) * ell
    if not functional_equation_check(ring_g, orders, b):
        raise VerificationError(f"functional equation failed for {exps}")
    x_vars = default_variable_names(n)
    ring_vars = x_vars + tuple(y_name(k, 1) for k in range(1, ell + 1))
    return BSIdealResult(b, b.reduced(), orders, ring_vars)


def inclusion_check_unit_factors(b: ProductOfLinearForms) -> bool:
    """Does (s_1 + 1) ... (s_l + 1) divide b?"""
    return all(b.has_unit_factor(k) for k in range(b.ell)) if b.factors else False


# -- the jumping-point theorem ---------------------------------------------------


def restriction_vanishes(factor: LinearForm, wall: Wall) -> bool:
    """Is factor(-z) identically zero on the hyperplane wall.coeffs . z = wall.rhs?"""
    ell = len(wall.coeffs)
    zvars = tuple(f"z{k}" for k in range(1, ell + 1))
    poly = factor.as_polynomial(zvars)
    negated = {name: -Polynomial.var(zvars, name) for name in zvars}
    poly = substitute_many(poly, negated)
    pivot = next(k for k, c in enumerate(wall.coeffs) if c)
    solved = Polynomial.constant(zvars, Fraction(wall.rhs, wall.coeffs[pivot]))
    for k, c in enumerate(wall.coeffs):
        if k != pivot and c:
            solved = solved - Fraction(c, wall.coeffs[pivot]) * Polynomial.var(zvars, zvars[k])
    return substitute(poly, zvars[pivot], solved).is_zero()


def matching_factor(b: ProductOfLinearForms, wall: Wall) -> LinearForm | None:
    target = LinearForm(tuple(wall.coeffs), wall.rhs).primitive()
    return next((f for f in b.factors if f.primitive() == target), None)


@dataclass
class TheoremReport:
    status: str
    checked_points: list[tuple[Fraction, ...]]
    violations: list[tuple[Fraction, ...]]
    walls: list[Wall]
    symbolic: dict[Wall, bool]
    generator: ProductOfLinearForms
    reduced: ProductOfLinearForms
    candidates_examined: int = 0
    scope: str = field(default=(
        "b is a witnessed element of B_G (functional equation verified); "
        "vanishing of the witnessed reduced b at -lambda is checked exactly"
    ))

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def theorem_points(ideals, samples: int = 5, box_max=1):
    """Exact rational probes on the candidate walls inside the open unit ball."""
    rd = resolution_data(ideals)
    ell = rd.num_ideals
    if ell > MAX_ARRANGEMENT_DIM:
        raise UnsupportedInput(f"wall enumeration supports l <= {MAX_ARRANGEMENT_DIM}")
    walls = candidate_walls(rd, box_max)
    faces = face_samples([w.hyperplane() for w in walls], ell, box_max, density=samples)
    points = []
    for signs, pts in faces.items():
        if 0 not in signs[: len(walls)]:
            continue
        points.extend(p for p in pts if sum(x * x for x in p) < 1)
    return rd, walls, points


def verify_theorem_main(ideals, samples: int = 5) -> TheoremReport:
    """Check that -lambda lies in Z(B_a) for jumping points lambda with |lambda| < 1.

    Restricted to tuples of principal monomial ideals.  Probes are every
    wall-wall intersection plus ``samples`` rational points per wall segment
    in [0, 1]^l; each jumping point found must be a zero of the reduced
    generator, and the matching linear factor must vanish identically on
    the wall.
    """
    ideals = [I if isinstance(I, MonomialIdeal) else MonomialIdeal.from_generators(I) for I in ideals]
    if any(not I.is_principal for I in ideals):
        raise UnsupportedInput("theorem verification needs principal monomial ideals")
    bs = bs_ideal_principal_monomial(ideals)
    rd, walls, points = theorem_points(ideals, samples)
    checked, violations = [], []
    symbolic: dict[Wall, bool] = {}
    for lam in points:
        if not is_jumping_point(rd, lam):
            continue
        checked.append(lam)
        through = [w for w in walls if w.contains(lam)]
        for w in through:
            if w not in symbolic:
                f = matching_factor(bs.reduced, w)
                symbolic[w] = f is not None and restriction_vanishes(f, w)
        if bs.reduced.evaluate([-x for x in lam]) != 0 or not any(symbolic[w] for w in through):
            violations.append(lam)
    return TheoremReport(
        status="fail" if violations else "pass",
        checked_points=checked,
        violations=violations,
        walls=walls,
        symbolic=symbolic,
        generator=bs.generator,
        reduced=bs.reduced,
        candidates_examined=len(points),
    )


def candidate_zero_locus(ideals, box_max=1) -> list[Wall]:
    """Walls that could carry zeros of B_a; a fallback outside the principal family, not certified."""
    ideals = [I if isinstance(I, MonomialIdeal) else MonomialIdeal.from_generators(I) for I in ideals]
    return candidate_walls(resolution_data(ideals), box_max)
