"""Closed formulas for the clump-graph counts T^0, T^1 and Hurwitz numbers G^0, G^1."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import UnsupportedGenusError
from .partitions import Partition, elementary_symmetric, r_value

__all__ = [
    "HurwitzValue",
    "tree_count_genus0",
    "graph_count_genus1",
    "hurwitz_closed",
    "hurwitz_closed_genus0",
    "hurwitz_closed_genus1",
    "geotree_convert",
    "transitive_count_from_hurwitz",
    "METHODS",
]

METHODS = ("closed", "recursion", "dfs-oracle", "sieve-oracle", "graph-oracle")


@dataclass(frozen=True)
class HurwitzValue:
    genus: int
    alpha: Partition
    value: Fraction
    method: str

    @property
    def c(self) -> Fraction:
        """Transitive factorization count c = G * prod(alpha_i)."""
        return self.value * self.alpha.part_product


def _dpow(d: int, e: int) -> Fraction:
    return Fraction(d) ** e


def _cayley_weight(alpha: Partition) -> int:
    return prod(a ** (a - 1) for a in alpha.parts)


def _factorial_weight(alpha: Partition) -> int:
    return prod(factorial(a - 1) for a in alpha.parts)


def _genus1_bracket(alpha: Partition) -> Fraction:
    # d^2 - d - sum_{j>=2} d^(2-j) (j-2)! e_j, with e_j = 0 past l(alpha)
    d = alpha.d
    s = Fraction(d * d - d)
    for j in range(2, alpha.length + 1):
        s -= _dpow(d, 2 - j) * factorial(j - 2) * elementary_symmetric(alpha, j)
    return s


def tree_count_genus0(alpha: Partition) -> Fraction:
    """T^0 = d^(l-2) prod alpha_i^(alpha_i - 1)."""
    return _dpow(alpha.d, alpha.length - 2) * _cayley_weight(alpha)


def graph_count_genus1(alpha: Partition) -> Fraction:
    return tree_count_genus0(alpha) / 2 * _genus1_bracket(alpha)


def hurwitz_closed_genus0(alpha: Partition) -> Fraction:
    r = r_value(0, alpha)
    return (factorial(r) * _dpow(alpha.d, alpha.length - 3) * _cayley_weight(alpha)
            / _factorial_weight(alpha))


def hurwitz_closed_genus1(alpha: Partition) -> Fraction:
    r = r_value(1, alpha)
    head = (factorial(r) * _dpow(alpha.d, alpha.length - 2) * _cayley_weight(alpha)
            / (24 * _factorial_weight(alpha)))
    return head * _genus1_bracket(alpha)


def hurwitz_closed(g: int, alpha: Partition) -> Fraction:
    if g == 0:
        return hurwitz_closed_genus0(alpha)
    if g == 1:
        return hurwitz_closed_genus1(alpha)
    raise UnsupportedGenusError(f"no closed form for genus {g}")


def geotree_convert(g: int, alpha: Partition, t: Fraction | int) -> Fraction:
    """Turn a clump-graph count T^g into the Hurwitz number G^g (g = 0 or 1)."""
    if g == 0:
        return factorial(r_value(0, alpha)) * Fraction(t) / (alpha.d * _factorial_weight(alpha))
    if g == 1:
        return factorial(r_value(1, alpha)) * Fraction(t) / (12 * _factorial_weight(alpha))
    raise UnsupportedGenusError(f"graph interpretation only exists for genus 0 and 1, got {g}")


def transitive_count_from_hurwitz(alpha: Partition, value: Fraction) -> Fraction:
    return value * alpha.part_product
