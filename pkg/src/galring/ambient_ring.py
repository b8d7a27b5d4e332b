"""The length-p^s constacyclic ambient ring over a Galois ring.

For a context GR(p^a, m), a length exponent s >= 1 and a unit constant
gamma, the ambient ring is

    R = GR(p^a, m)[x] / <x^(p^s) - gamma>.

Elements are polynomials of degree < p^s; multiplying by x wraps the top
coefficient around with a factor gamma, which is exactly the constacyclic
shift on coefficient words.  R is local for every unit gamma: reducing
modulo p sends it onto F_{p^m}[x] / <(x - alpha)^(p^s)> where alpha is
the Teichmuller solution of alpha^(p^s) = zeta0(gamma), so an element is
a unit iff its evaluation at alpha is nonzero modulo p.

verify_chain_structure is the exhaustive oracle of the package: it
materializes every principal ideal of R as a literal set {f*g : f in R},
checks whether the distinct ideals form a single inclusion chain, and
compares them against the tower generated by powers of x - alpha.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    BudgetExceededError,
    ContextMismatchError,
    NotAUnitError,
    ParamsMismatchError,
)
from .galois_ring import GrElement, Raw, RingContext
from .unit_types import TYPE1, UnitClass, classify_unit

PolyRaw = tuple[Raw, ...]

DEFAULT_CHAIN_BUDGET = 1 << 16


class AmbientParams:
    """Immutable description of one ambient ring R = GR[x]/<x^n - gamma>."""

    __slots__ = ("ctx", "s", "gamma", "n", "key", "_gamma_class", "_alpha")

    def __init__(self, ctx: RingContext, s: int, gamma: GrElement):
        if s < 1:
            raise ValueError(f"s must be >= 1, got {s}")
        if gamma.ctx is not ctx and gamma.ctx.key != ctx.key:
            raise ContextMismatchError("gamma lives in a different context")
        if not gamma.is_unit:
            raise NotAUnitError("the constacyclic constant must be a unit")
        self.ctx = ctx
        self.s = s
        self.gamma = gamma
        self.n = ctx.params.p**s
        self.key = (ctx.key, s, gamma.coeffs)
        self._gamma_class: UnitClass | None = None
        self._alpha: GrElement | None = None

    @property
    def gamma_class(self) -> UnitClass:
        if self._gamma_class is None:
            self._gamma_class = classify_unit(self.gamma)
        return self._gamma_class

    @property
    def alpha(self) -> GrElement:
        """The Teichmuller element with alpha^(p^s) = zeta0(gamma)."""
        if self._alpha is None:
            self._alpha = solve_alpha(self.gamma_class, self.s)
        return self._alpha

    @property
    def size(self) -> int:
        return self.ctx.size**self.n

    # -- constructors -------------------------------------------------

    def zero(self) -> "AmbientPoly":
        return AmbientPoly(self, (self.ctx.zero.coeffs,) * self.n)

    def one(self) -> "AmbientPoly":
        return self.monomial(0)

    def monomial(self, k: int, coeff: GrElement | None = None) -> "AmbientPoly":
        if not 0 <= k < self.n:
            raise ValueError(f"monomial degree {k} outside [0, {self.n})")
        c = self.ctx.one if coeff is None else coeff
        raw = [self.ctx.zero.coeffs] * self.n
        raw[k] = c.coeffs
        return AmbientPoly(self, tuple(raw))

    def constant(self, c: GrElement | int) -> "AmbientPoly":
        if isinstance(c, int):
            c = self.ctx.from_int(c)
        return self.monomial(0, c)

    def x_minus(self, c: GrElement) -> "AmbientPoly":
        raw = [self.ctx.zero.coeffs] * self.n
        raw[0] = (-c).coeffs
        raw[1] = self.ctx.one.coeffs
        return AmbientPoly(self, tuple(raw))

    def element(self, coeffs: Sequence[GrElement]) -> "AmbientPoly":
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients")
        return AmbientPoly(self, tuple(c.coeffs for c in coeffs))

    def from_raw(self, raw: PolyRaw) -> "AmbientPoly":
        return AmbientPoly(self, raw)

    def iter_raw(self) -> Iterator[PolyRaw]:
        return itertools.product(self.ctx.iter_raw(), repeat=self.n)

    def iter_elements(self) -> Iterator["AmbientPoly"]:
        for raw in self.iter_raw():
            yield AmbientPoly(self, raw)

    def __eq__(self, other):
        if not isinstance(other, AmbientParams):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"Ambient({self.ctx!r}, n={self.n}, gamma={list(self.gamma.coeffs)})"


class AmbientPoly:
    """A residue class in the ambient ring, as a length-n coefficient tuple."""

    __slots__ = ("params", "raw")

    def __init__(self, params: AmbientParams, raw: PolyRaw):
        self.params = params
        self.raw = raw

    @property
    def coeffs(self) -> tuple[GrElement, ...]:
        ctx = self.params.ctx
        return tuple(GrElement(ctx, c) for c in self.raw)

    @property
    def is_zero(self) -> bool:
        return not any(any(c) for c in self.raw)

    def to_word(self) -> tuple[GrElement, ...]:
        return self.coeffs

    def _check(self, other: "AmbientPoly") -> None:
        if other.params is not self.params and other.params.key != self.params.key:
            raise ParamsMismatchError("ambient elements from different rings")

    def __add__(self, other):
        if not isinstance(other, AmbientPoly):
            return NotImplemented
        self._check(other)
        add = self.params.ctx.add_raw
        return AmbientPoly(
            self.params, tuple(add(x, y) for x, y in zip(self.raw, other.raw))
        )

    def __sub__(self, other):
        if not isinstance(other, AmbientPoly):
            return NotImplemented
        self._check(other)
        sub = self.params.ctx.sub_raw
        return AmbientPoly(
            self.params, tuple(sub(x, y) for x, y in zip(self.raw, other.raw))
        )

    def __neg__(self):
        q = self.params.ctx.q
        return AmbientPoly(
            self.params, tuple(tuple((-v) % q for v in c) for c in self.raw)
        )

    def __mul__(self, other):
        if not isinstance(other, AmbientPoly):
            return NotImplemented
        self._check(other)
        return AmbientPoly(self.params, _mul_raw(self.params, self.raw, other.raw))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.params.one()
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, k: int) -> "AmbientPoly":
        q = self.params.ctx.q
        return AmbientPoly(
            self.params, tuple(tuple((v * k) % q for v in c) for c in self.raw)
        )

    def __eq__(self, other):
        if not isinstance(other, AmbientPoly):
            return NotImplemented
        return self.raw == other.raw and self.params.key == other.params.key

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        return f"AmbientPoly({[list(c) for c in self.raw]})"


def _mul_raw(params: AmbientParams, f: PolyRaw, g: PolyRaw) -> PolyRaw:
    ctx = params.ctx
    n = params.n
    mul = ctx.mul_raw
    add = ctx.add_raw
    zero = ctx.zero.coeffs
    gamma = params.gamma.coeffs
    acc = [zero] * n
    for i, ci in enumerate(f):
        if not any(ci):
            continue
        for j, dj in enumerate(g):
            if not any(dj):
                continue
            prod = mul(ci, dj)
            k = i + j
            if k >= n:
                k -= n
                prod = mul(prod, gamma)
            acc[k] = add(acc[k], prod)
    return tuple(acc)


def amb_add(f: AmbientPoly, g: AmbientPoly) -> AmbientPoly:
    return f + g


def amb_mul(f: AmbientPoly, g: AmbientPoly) -> AmbientPoly:
    return f * g


def constacyclic_shift(
    word: Sequence[GrElement], gamma: GrElement
) -> tuple[GrElement, ...]:
    """One constacyclic step: (x_0..x_{n-1}) -> (gamma*x_{n-1}, x_0, ..)."""
    for el in word:
        if el.ctx is not gamma.ctx and el.ctx.key != gamma.ctx.key:
            raise ContextMismatchError("word and gamma from different contexts")
    return (gamma * word[-1],) + tuple(word[:-1])


def solve_alpha(gamma_class: UnitClass, s: int) -> GrElement:
    """Teichmuller solution alpha of alpha^(p^s) = zeta0.

    p^s is invertible modulo p^m - 1, so the exponent equation
    i * p^s = e (mod p^m - 1) has exactly one solution.
    """
    if gamma_class.zeta0_idx in (None, 0):
        raise NotAUnitError("alpha exists only for units (zeta0 != 0)")
    ctx = gamma_class.ctx
    p = ctx.params.p
    q1 = ctx.params.residue_size - 1
    if q1 == 1:
        return ctx.one
    e = gamma_class.zeta0_idx - 1
    i = (e * pow(pow(p, s, q1), -1, q1)) % q1
    return ctx.teich_exp(i)


def _eval_at_alpha_is_unit(params: AmbientParams, f: PolyRaw) -> bool:
    # f(alpha) modulo p is well defined on residue classes of R, and
    # nonvanishing there characterizes the units of R.
    ctx = params.ctx
    alpha = params.alpha.coeffs
    mul, add = ctx.mul_raw, ctx.add_raw
    acc = ctx.zero.coeffs
    for c in reversed(f):
        acc = add(mul(acc, alpha), c)
    p = ctx.params.p
    return any(v % p for v in acc)


def is_unit(f: AmbientPoly) -> bool:
    """Whether f is invertible in its ambient ring."""
    return _eval_at_alpha_is_unit(f.params, f.raw)


def nilpotency_index(f: AmbientPoly, cap: int | None = None) -> int | None:
    """Smallest k >= 1 with f^k = 0, or None if f is not nilpotent.

    Units are rejected immediately; for the rest, iterated multiplication
    runs up to the cap (default a*p^s + 1, which bounds the nilpotency of
    every non-unit of the ambient ring).
    """
    params = f.params
    if cap is None:
        cap = params.ctx.params.a * params.n + 1
    if is_unit(f):
        return None
    power = f
    for k in range(1, cap + 1):
        if power.is_zero:
            return k
        power = power * f
    return None


def ideal_raw(params: AmbientParams, g: PolyRaw, elements: list[PolyRaw] | None = None) -> frozenset:
    """The principal ideal <g> materialized as {f*g : f in R}."""
    if elements is None:
        elements = list(params.iter_raw())
    return frozenset(_mul_raw(params, f, g) for f in elements)


@dataclass
class ChainReport:
    """Result of the exhaustive principal-ideal survey of one ambient ring."""

    is_chain: bool
    ideal_count: int
    ideal_sizes: tuple[int, ...]
    maximal_ideal_principal: bool
    alpha: GrElement
    tower_match: bool | None = None
    p_in_x_alpha: bool | None = None
    x_alpha_in_p: bool | None = None

    def to_json_dict(self) -> dict:
        return {
            "is_chain": self.is_chain,
            "ideal_count": self.ideal_count,
            "ideal_sizes": list(self.ideal_sizes),
            "maximal_ideal_principal": self.maximal_ideal_principal,
            "alpha": list(self.alpha.coeffs),
        }


def verify_chain_structure(
    params: AmbientParams, budget: int = DEFAULT_CHAIN_BUDGET
) -> ChainReport:
    """Materialize every principal ideal of R and survey the lattice.

    Generators are grouped into unit-multiple orbits: <u*g> = <g> for any
    unit u, so materializing one representative per orbit still covers
    {<g> : g in R} completely.  The report records whether the distinct
    ideals are totally ordered by inclusion, whether they coincide with
    the tower <(x - alpha)^i> when a chain is expected, and whether the
    set of non-units (the unique maximal ideal) is itself principal.
    """
    size = params.size
    if size > budget:
        raise BudgetExceededError("principal ideal survey", size, budget)
    ctx = params.ctx
    elements = list(params.iter_raw())
    units = [f for f in elements if _eval_at_alpha_is_unit(params, f)]
    nonunits = frozenset(f for f in elements if not _eval_at_alpha_is_unit(params, f))

    ideals: set[frozenset] = set()
    assigned: set[PolyRaw] = set()
    for g in elements:
        if g in assigned:
            continue
        ideals.add(ideal_raw(params, g, elements))
        for u in units:
            assigned.add(_mul_raw(params, u, g))

    by_size = sorted(ideals, key=len, reverse=True)
    is_chain = True
    for big, small in zip(by_size, by_size[1:]):
        if len(small) == len(big) or not small <= big:
            is_chain = False
            break

    maximal_principal = nonunits in ideals

    x_alpha = params.x_minus(params.alpha).raw
    p_const = params.constant(ctx.params.p).raw
    ideal_x_alpha = ideal_raw(params, x_alpha, elements)
    ideal_p = ideal_raw(params, p_const, elements)
    p_in_x_alpha = p_const in ideal_x_alpha
    x_alpha_in_p = x_alpha in ideal_p

    a = ctx.params.a
    expect_chain = a == 1 or params.gamma_class.variant == TYPE1
    tower_match = None
    if expect_chain:
        tower: set[frozenset] = set()
        gpow = params.one()
        x_alpha_poly = params.from_raw(x_alpha)
        for _ in range(a * params.n + 1):
            tower.add(ideal_raw(params, gpow.raw, elements))
            gpow = gpow * x_alpha_poly
        tower_match = tower == ideals

    return ChainReport(
        is_chain=is_chain,
        ideal_count=len(ideals),
        ideal_sizes=tuple(len(i) for i in by_size),
        maximal_ideal_principal=maximal_principal,
        alpha=params.alpha,
        tower_match=tower_match,
        p_in_x_alpha=p_in_x_alpha,
        x_alpha_in_p=x_alpha_in_p,
    )


def _exact_quotient_poly(f: AmbientPoly, d: int) -> AmbientPoly:
    out = []
    for c in f.raw:
        if any(v % d for v in c):
            raise ValueError(f"coefficient block {c} not divisible by {d}")
        out.append(tuple(v // d for v in c))
    return AmbientPoly(f.params, tuple(out))


def freshman_congruence_check(
    params: AmbientParams,
    b: GrElement,
    n: int,
    budget: int = DEFAULT_CHAIN_BUDGET,
) -> bool:
    """Check the p-th power congruence for (x + b)^(p^n) in the ambient ring.

    The difference D = (x + b)^(p^n) - x^(p^n) - b^(p^n) must vanish
    modulo p.  For odd p, D must moreover lie in the ideal generated by
    p*(x + b) (verified by materializing that ideal, subject to budget).
    For p = 2 and a Type1 constant, D/2 must be a unit.
    """
    if not 1 <= n <= params.s:
        raise ValueError(f"n must lie in [1, {params.s}], got {n}")
    if not b.is_unit:
        raise NotAUnitError("b must be a unit")
    ctx = params.ctx
    p = ctx.params.p
    pn = p**n
    x_plus_b = params.x_minus(-b)
    d_poly = (x_plus_b**pn) - (params.monomial(1) ** pn) - params.constant(b**pn)
    if any(v % p for c in d_poly.raw for v in c):
        return False
    if p == 2:
        if params.gamma_class.variant == TYPE1:
            return is_unit(_exact_quotient_poly(d_poly, 2))
        return True
    size = params.size
    if size > budget:
        raise BudgetExceededError("freshman ideal membership", size, budget)
    gen = x_plus_b.scale(p)
    return d_poly.raw in ideal_raw(params, gen.raw)
