"""Exact arithmetic substrate: exponent vectors, monomial ideals, polynomials over Q.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
touches floating point.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, InvalidArgument

Rational = Fraction
ExponentVector = tuple[int, ...]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise InvalidArgument(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/[+-]?\d+)?", text):
            raise InvalidArgument(f"not a rational: {value!r}")
        if "/" in text and int(text.split("/")[1]) == 0:
            raise InvalidArgument(f"zero denominator in {value!r}")
        return Fraction(text)
    raise InvalidArgument(f"not an exact rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def exponent_vector(entries: Iterable[int], n: int | None = None) -> ExponentVector:
    v = tuple(int(e) for e in entries)
    if any(e < 0 for e in v):
        raise InvalidArgument(f"negative exponent in {v}")
    if n is not None and len(v) != n:
        raise DimensionMismatch(f"expected length {n}, got {v}")
    return v


def divides(g: Sequence[int], v: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(g, v))


def minimal_elements(gens: Iterable[ExponentVector]) -> tuple[ExponentVector, ...]:
    """Componentwise-minimal elements, sorted lexicographically."""
    # sorting by total degree first means a divisor is always seen before its multiples
    pool = sorted(set(gens), key=lambda v: (sum(v), v))
    kept: list[ExponentVector] = []
    for v in pool:
        if not any(divides(g, v) for g in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal in n variables, stored by its minimal generators.

    The zero ideal has no generators; the unit ideal is generated by (0,...,0).
    """

    n: int
    generators: tuple[ExponentVector, ...]

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
        return minimalize(gens, n)

    @classmethod
    def unit(cls, n: int) -> MonomialIdeal:
        return cls(n, ((0,) * n,))

    @classmethod
    def zero(cls, n: int) -> MonomialIdeal:
        return cls(n, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def issubset(self, other: MonomialIdeal) -> bool:
        if self.n != other.n:
            raise DimensionMismatch(f"ambient dims {self.n} and {other.n}")
        return all(contains(other, g) for g in self.generators)

    def __le__(self, other: MonomialIdeal) -> bool:
        return self.issubset(other)

    def __lt__(self, other: MonomialIdeal) -> bool:
        return self.issubset(other) and self != other

    def __ge__(self, other: MonomialIdeal) -> bool:
        return other.issubset(self)

    def __gt__(self, other: MonomialIdeal) -> bool:
        return other.issubset(self) and self != other

    def is_m_primary(self) -> bool:
        """True if some pure power of every variable lies in the ideal."""
        if self.is_zero or self.is_unit:
            return False
        return all(
            any(g[t] > 0 and sum(g) == g[t] for g in self.generators) for t in range(self.n)
        )

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, generators={list(self.generators)})"


def minimalize(gens: Iterable[Sequence[int]], n: int | None = None) -> MonomialIdeal:
    """Reduce a generating set to the antichain of its minimal elements."""
    vecs = [exponent_vector(g) for g in gens]
    dims = {len(v) for v in vecs}
    if n is not None:
        dims.add(n)
    if len(dims) > 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")
    if not dims:
        raise InvalidArgument("ambient dimension unknown for an empty generator set")
    (dim,) = dims
    return MonomialIdeal(dim, minimal_elements(vecs))


def contains(ideal: MonomialIdeal, v: Sequence[int]) -> bool:
    if len(v) != ideal.n:
        raise DimensionMismatch(f"vector {tuple(v)} not in dimension {ideal.n}")
    return any(divides(g, v) for g in ideal.generators)


def product_power(ideals: Sequence[MonomialIdeal], alpha: Sequence[int]) -> MonomialIdeal:
    """Minimal generators of a_1^alpha_1 * ... * a_l^alpha_l."""
    if len(ideals) != len(alpha):
        raise DimensionMismatch("one exponent per ideal required")
    if any(a < 0 for a in alpha):
        raise InvalidArgument(f"negative exponent in {tuple(alpha)}")
    if not any(alpha):
        raise InvalidArgument("exponent tuple is all zero")
    dims = {I.n for I in ideals}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed ambient dimensions {sorted(dims)}")
    (n,) = dims
    current: tuple[ExponentVector, ...] = ((0,) * n,)
    for ideal, a in zip(ideals, alpha):
        for _ in range(a):
            # minimalizing after each factor keeps the intermediate sets small
            current = minimal_elements(
                tuple(x + y for x, y in zip(u, g)) for u in current for g in ideal.generators
            )
    return MonomialIdeal(n, current)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return minimalize(I.generators + J.generators, I.n)


# -- polynomials ---------------------------------------------------------------

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    powers = dict(a)
    for name, e in b:
        powers[name] = powers.get(name, 0) + e
    return tuple(sorted(powers.items()))


class Polynomial:
    """Multivariate polynomial over Q in named variables.

    Internally each monomial is a sorted tuple of (name, exponent) pairs with
    positive exponents, so polynomials over different declared variable lists
    compare and combine by name. ``variables`` is the declared ring, kept for
    display and for the aligned ``terms`` view.
    """

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise InvalidArgument(f"repeated variable names in {self.variables}")
        self._terms: dict[Monomial, Fraction] = {}
        for key, c in (terms or {}).items():
            c = as_rational(c)
            if c == 0:
                continue
            mono = self._normalize_key(key)
            total = self._terms.get(mono, Fraction(0)) + c
            if total:
                self._terms[mono] = total
            else:
                self._terms.pop(mono, None)

    def _normalize_key(self, key) -> Monomial:
        if len(key) == 0:
            return ()
        if isinstance(key[0], tuple):
            pairs = key
        else:
            if len(key) != len(self.variables):
                raise DimensionMismatch(f"exponent {key} does not match {self.variables}")
            pairs = zip(self.variables, key)
        out: dict[str, int] = {}
        for name, e in pairs:
            if name not in self.variables:
                raise InvalidArgument(f"unknown variable {name!r}")
            if e < 0:
                raise InvalidArgument(f"negative exponent for {name}")
            if e:
                out[name] = out.get(name, 0) + int(e)
        return tuple(sorted(out.items()))

    @classmethod
    def _raw(cls, variables, terms: dict[Monomial, Fraction]) -> Polynomial:
        p = cls.__new__(cls)
        p.variables = tuple(variables)
        p._terms = {m: c for m, c in terms.items() if c}
        return p

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> Polynomial:
        return cls._raw(variables, {(): as_rational(c)})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> Polynomial:
        if name not in variables:
            raise InvalidArgument(f"unknown variable {name!r}")
        return cls._raw(variables, {((name, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Sequence[int], coeff=1) -> Polynomial:
        return cls(variables, {tuple(exponents): coeff})

    @property
    def terms(self) -> dict[ExponentVector, Fraction]:
        """Terms keyed by exponent tuples aligned with ``variables``."""
        out = {}
        for mono, c in self._terms.items():
            powers = dict(mono)
            out[tuple(powers.get(v, 0) for v in self.variables)] = c
        return out

    def used_variables(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self._terms), default=0)

    def _ring(self, other: Polynomial) -> tuple[str, ...]:
        return self.variables + tuple(v for v in other.variables if v not in self.variables)

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(self.variables, other)

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial._raw(self._ring(other), terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Polynomial:
        return self._lift(other) - self

    def __mul__(self, other) -> Polynomial:
        other = self._lift(other)
        terms: dict[Monomial, Fraction] = {}
        for (m1, c1), (m2, c2) in itertools.product(self._terms.items(), other._terms.items()):
            m = _mono_mul(m1, m2)
            terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Polynomial._raw(self._ring(other), terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise InvalidArgument("negative power")
        result = Polynomial.constant(self.variables, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for name, e in mono:
                term *= as_rational(point[name]) ** e
            total += term
        return total

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in sorted(self._terms.items(), key=lambda mc: _display_key(mc[0], self.variables)):
            body = "*".join(name if e == 1 else f"{name}^{e}" for name, e in
                            sorted(mono, key=lambda ne: _var_rank(ne[0], self.variables)))
            if not body:
                pieces.append(format_rational(c))
            elif c == 1:
                pieces.append(body)
            elif c == -1:
                pieces.append("-" + body)
            else:
                pieces.append(f"{format_rational(c)}*{body}")
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")


def _var_rank(name: str, variables: Sequence[str]) -> tuple:
    return (variables.index(name), name) if name in variables else (len(variables), name)


def _display_key(mono: Monomial, variables: Sequence[str]) -> tuple:
    powers = dict(mono)
    aligned = tuple(-powers.get(v, 0) for v in variables)
    return (-sum(powers.values()), aligned, mono)


def substitute(p: Polynomial, var: str, replacement: Polynomial) -> Polynomial:
    """Replace ``var`` by ``replacement`` in ``p`` and expand.

    The result lives in the union of both declared variable lists; the
    substituted variable stays declared so triangular changes of variables
    can be composed.
    """
    if var not in p.variables:
        raise InvalidArgument(f"unknown variable {var!r} in ring {p.variables}")
    ring = p.variables + tuple(v for v in replacement.variables if v not in p.variables)
    result = Polynomial._raw(ring, {})
    powers_cache = {0: Polynomial.constant(ring, 1)}
    for mono, c in p._terms.items():
        powers = dict(mono)
        e = powers.pop(var, 0)
        if e not in powers_cache:
            powers_cache[e] = replacement ** e
        rest = Polynomial._raw(ring, {tuple(sorted(powers.items())): c})
        result = result + rest * powers_cache[e]
    return Polynomial._raw(ring, result._terms)


def substitute_many(p: Polynomial, mapping: Mapping[str, Polynomial]) -> Polynomial:
    """Simultaneous substitution, done through fresh placeholder names."""
    placeholders = {name: f"__sub_{i}__" for i, name in enumerate(mapping)}
    ring = p.variables + tuple(placeholders.values())
    staged = Polynomial._raw(ring, p._terms)
    for name, tmp in placeholders.items():
        staged = substitute(staged, name, Polynomial.var(ring, tmp))
    for name, tmp in placeholders.items():
        staged = substitute(staged, tmp, mapping[name])
    ring = tuple(v for v in staged.variables if v not in placeholders.values())
    return Polynomial._raw(ring, staged._terms)


_TERM_RE = re.compile(r"\s*([+-]?)\s*([^+-]+)")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse sums of terms like ``3/2*x1^2*x2 - y1_1 + 4``."""
    variables = tuple(variables)
    src = text.replace(" ", "")
    if not src:
        raise InvalidArgument("empty polynomial")
    result = Polynomial._raw(variables, {})
    pos = 0
    while pos < len(src):
        m = _TERM_RE.match(src, pos)
        if not m or m.end() == pos:
            raise InvalidArgument(f"cannot parse polynomial {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(sign)
        exps: dict[str, int] = {}
        for factor in m.group(2).split("*"):
            if not factor:
                raise InvalidArgument(f"empty factor in {text!r}")
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= as_rational(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in variables:
                raise InvalidArgument(f"unknown variable {name!r} in {text!r}")
            if power and not power.isdigit():
                raise InvalidArgument(f"bad exponent in {factor!r}")
            exps[name] = exps.get(name, 0) + (int(power) if power else 1)
        result = result + Polynomial(variables, {tuple(exps.get(v, 0) for v in variables): coeff})
        pos = m.end()
    return result


def default_variable_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def parse_monomial(text: str, n: int) -> ExponentVector:
    """Parse ``x1^2*x2`` (or ``x^2*y`` for n <= 3, or ``1``) into an exponent vector."""
    aliases = dict(zip("xyz", range(n))) if n <= 3 else {}
    src = text.replace(" ", "")
    exps = [0] * n
    if src == "1":
        return tuple(exps)
    for factor in src.split("*"):
        name, _, power = factor.partition("^")
        if power and not power.isdigit():
            raise InvalidArgument(f"bad exponent in monomial {text!r}")
        e = int(power) if power else 1
        if name in aliases:
            idx = aliases[name]
        elif re.fullmatch(r"x\d+", name) and 1 <= int(name[1:]) <= n:
            idx = int(name[1:]) - 1
        else:
            raise InvalidArgument(f"unknown variable {name!r} in monomial {text!r}")
        exps[idx] += e
    return tuple(exps)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by exact Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    r = 0
    ncols = len(mat[0])
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col] / mat[r][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
        if r == len(mat):
            break
    return r


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Unique solution of a square rational system, or None when singular."""
    n = len(rows)
    mat = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if mat[i][col] != 0), None)
        if pivot is None:
            return None
        mat[col], mat[pivot] = mat[pivot], mat[col]
        for i in range(n):
            if i != col and mat[i][col] != 0:
                f = mat[i][col] / mat[col][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return tuple(mat[i][n] / mat[i][i] for i in range(n))
