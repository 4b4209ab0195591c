"""Truncated multivariate power series in z, u, v_1..v_D and the potential PDE check."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .closed_form import hurwitz_closed
from .errors import UnsupportedGenusError, ValidationError
from .partitions import Partition, conjugacy_class_size, partitions_of, r_value
from .recursion import HurwitzTable, hurwitz_recursive

__all__ = [
    "TruncatedSeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_partial",
    "build_potential",
    "PdeReport",
    "verify_pde",
]

# (z-degree, u-degree, (m_1, ..., m_D))
Monomial = tuple[int, int, tuple[int, ...]]


@dataclass(frozen=True)
class TruncatedSeries:
    """Exact coefficients, all monomials of z-degree above ``order`` dropped.

    The v alphabet is v_1..v_order: under the truncation no larger index can
    appear in the potentials.
    """

    order: int
    terms: dict[Monomial, Fraction] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValidationError("truncation order must be non-negative")
        clean = {}
        for (a, b, ms), c in self.terms.items():
            if len(ms) != self.order:
                raise ValidationError(f"v-exponent vector {ms} has wrong length for order {self.order}")
            if a <= self.order and c != 0:
                clean[(a, b, ms)] = Fraction(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, {})

    @classmethod
    def monomial(cls, order: int, coeff=1, z: int = 0, u: int = 0, v: dict[int, int] | None = None) -> "TruncatedSeries":
        ms = [0] * order
        for i, e in (v or {}).items():
            if not 1 <= i <= order:
                raise ValidationError(f"v_{i} outside v_1..v_{order}")
            ms[i - 1] += e
        return cls(order, {(z, u, tuple(ms)): Fraction(coeff)})

    def coefficient(self, z: int = 0, u: int = 0, v: dict[int, int] | None = None) -> Fraction:
        ms = [0] * self.order
        for i, e in (v or {}).items():
            ms[i - 1] += e
        return self.terms.get((z, u, tuple(ms)), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_sub(self, other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        c = Fraction(other)
        return TruncatedSeries(self.order, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def partial(self, var: str) -> "TruncatedSeries":
        return series_partial(self, var)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{_monomial_str(m)}" for m, c in sorted(self.terms.items()))


def _monomial_str(m: Monomial) -> str:
    a, b, ms = m
    bits = []
    if a:
        bits.append(f"z^{a}")
    if b:
        bits.append(f"u^{b}")
    bits.extend(f"v{i + 1}^{e}" for i, e in enumerate(ms) if e)
    return "*".join(bits) or "1"


def _check_compatible(s: TruncatedSeries, t: TruncatedSeries):
    if s.order != t.order:
        raise ValidationError(f"truncation orders differ: {s.order} vs {t.order}")


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(s, t)
    out: dict[Monomial, Fraction] = dict(s.terms)
    for k, c in t.terms.items():
        out[k] = out.get(k, Fraction(0)) + c
    return TruncatedSeries(s.order, out)


def series_sub(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    return series_add(s, t * -1)


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check_compatible(s, t)
    D = s.order
    out: defaultdict[Monomial, Fraction] = defaultdict(Fraction)
    for (a1, b1, m1), c1 in s.terms.items():
        for (a2, b2, m2), c2 in t.terms.items():
            if a1 + a2 > D:
                continue
            out[(a1 + a2, b1 + b2, tuple(x + y for x, y in zip(m1, m2)))] += c1 * c2
    return TruncatedSeries(D, dict(out))


def _parse_var(var: str, order: int) -> tuple[str, int]:
    if var in ("z", "u"):
        return var, 0
    if var.startswith("v") and var[1:].isdigit():
        i = int(var[1:])
        if 1 <= i <= order:
            return "v", i - 1
    raise ValidationError(f"unknown variable {var!r} (expected z, u or v1..v{order})")


def series_partial(s: TruncatedSeries, var: str) -> TruncatedSeries:
    kind, idx = _parse_var(var, s.order)
    out: dict[Monomial, Fraction] = {}
    for (a, b, ms), c in s.terms.items():
        if kind == "z":
            if a:
                out[(a - 1, b, ms)] = c * a
        elif kind == "u":
            if b:
                out[(a, b - 1, ms)] = c * b
        else:
            e = ms[idx]
            if e:
                new = list(ms)
                new[idx] -= 1
                out[(a, b, tuple(new))] = c * e
    return TruncatedSeries(s.order, out)


def _default_source(route: str) -> Callable[[int, Partition], Fraction]:
    if route == "closed":
        return hurwitz_closed
    if route == "recursion":
        table = HurwitzTable()
        return lambda g, alpha: hurwitz_recursive(g, alpha, table)
    raise ValidationError(f"unknown route {route!r}")


def build_potential(
    g: int, D: int, source: str | Callable[[int, Partition], Fraction] = "closed"
) -> TruncatedSeries:
    """F^g truncated at z-degree D.

    Coefficient of z^d u^r v_alpha is d G^0 h / (d! r!) for genus 0 and
    12 G^1 h / (d! r!) for genus 1.  ``source`` is ``"closed"``,
    ``"recursion"`` or any callable (g, alpha) -> G.
    """
    if g not in (0, 1):
        raise UnsupportedGenusError(f"potentials exist for genus 0 and 1, got {g}")
    if D < 1:
        raise ValidationError("truncation order D must be at least 1")
    value = _default_source(source) if isinstance(source, str) else source
    terms: dict[Monomial, Fraction] = {}
    for d in range(1, D + 1):
        for alpha in partitions_of(d):
            r = r_value(g, alpha)
            weight = d if g == 0 else 12
            coeff = weight * value(g, alpha) * conjugacy_class_size(alpha) / (factorial(d) * factorial(r))
            ms = [0] * D
            for i, z in alpha.counts.items():
                ms[i - 1] = z
            terms[(d, r, tuple(ms))] = Fraction(coeff)
    return TruncatedSeries(D, terms)


@dataclass
class PdeReport:
    genus: int
    order: int
    residual: TruncatedSeries

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()

    def residual_lines(self) -> list[str]:
        return [f"{_monomial_str(m)} {c}" for m, c in sorted(self.residual.terms.items())]


def _v(order: int, i: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(order, 1, v={i: 1})


def verify_pde(g: int, D: int, source: str | Callable[[int, Partition], Fraction] = "closed") -> PdeReport:
    """Residual LHS - RHS of the genus-g potential equation, truncated at z-degree D."""
    if g not in (0, 1):
        raise UnsupportedGenusError(f"potential equations exist for genus 0 and 1, got {g}")
    if D < 1:
        raise ValidationError("truncation order D must be at least 1")
    F0 = build_potential(0, D, source)
    uz2 = TruncatedSeries.monomial(D, 1, z=2, u=1)
    F0_z = F0.partial("z")
    dv0 = {p: F0.partial(f"v{p}") for p in range(1, D + 1)}

    if g == 0:
        lhs = F0.partial("u")
        rhs = uz2 * (F0_z * F0_z)
        for p in range(1, D):
            for q in range(1, D - p + 1):
                rhs = rhs + (_v(D, p + q) * (dv0[p] * dv0[q])) * Fraction(p * q, 2)
        return PdeReport(0, D, lhs - rhs)

    F1 = build_potential(1, D, source)
    lhs = F1.partial("u")
    rhs = uz2 * (F0.partial("z").partial("z") + 2 * (F0_z * F1.partial("z")))
    dv1 = {p: F1.partial(f"v{p}") for p in range(1, D + 1)}
    for p in range(1, D):
        for q in range(1, D - p + 1):
            inner = dv0[p].partial(f"v{q}") * Fraction(1, 2) + dv0[p] * dv1[q]
            rhs = rhs + (_v(D, p + q) * inner) * (p * q)
    return PdeReport(1, D, lhs - rhs)
