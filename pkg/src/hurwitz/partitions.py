"""Integer partitions, labelled splittings and the small arithmetic helpers
that every other module leans on.

A ``Partition`` is always canonical (parts non-increasing).  Sums over
*labelled* partitions are carried out on canonical partitions with an
explicit multiplicity: splitting ``[1^7]`` into ``[1^3]`` and ``[1^4]``
happens in ``C(7, 3) = 35`` labelled ways, and that 35 is stored on the
term instead of enumerating the 35 subsets.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import comb, factorial, prod
from typing import Iterable, Iterator

from .errors import ValidationError

__all__ = [
    "Partition",
    "SplitTerm",
    "PartSplitTerm",
    "make_partition",
    "parse_partition",
    "partitions_of",
    "r_value",
    "elementary_symmetric",
    "conjugacy_class_size",
    "ordered_splittings",
    "part_splittings",
    "binomial",
    "format_rational",
    "parse_rational",
]


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValidationError("a partition needs at least one part")
        if any((not isinstance(p, int)) or p < 1 for p in self.parts):
            raise ValidationError(f"parts must be positive integers, got {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValidationError(f"parts must be non-increasing, got {self.parts}")

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def counts(self) -> dict[int, int]:
        """Part value -> multiplicity, z_alpha(i) for every i that occurs."""
        return dict(Counter(self.parts))

    def multiplicity(self, i: int) -> int:
        return self.counts.get(i, 0)

    @property
    def part_product(self) -> int:
        return prod(self.parts)

    def without(self, part: int) -> tuple[int, ...]:
        """Parts with one occurrence of ``part`` removed (possibly empty)."""
        parts = list(self.parts)
        parts.remove(part)
        return tuple(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def make_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize any sequence of positive integers into a Partition.

    >>> make_partition([1, 2])
    Partition(parts=(2, 1))
    """
    parts = list(parts)
    if not parts:
        raise ValidationError("empty partition")
    for p in parts:
        if isinstance(p, bool) or not isinstance(p, int):
            raise ValidationError(f"part {p!r} is not an integer")
        if p < 1:
            raise ValidationError(f"part {p} is not positive")
    return Partition(tuple(sorted(parts, reverse=True)))


def parse_partition(text: str) -> Partition:
    """Parse the ``"3,2,1"`` wire format (order-insensitive)."""
    pieces = [s.strip() for s in text.strip().strip("()[]").split(",")]
    if not pieces or pieces == [""]:
        raise ValidationError(f"empty partition string {text!r}")
    try:
        parts = [int(s) for s in pieces]
    except ValueError:
        raise ValidationError(f"invalid partition string {text!r}") from None
    return make_partition(parts)


def partitions_of(d: int) -> list[Partition]:
    """All partitions of d in reverse-lexicographic order: (d), (d-1,1), ..., (1^d)."""
    if d < 1:
        raise ValidationError("d must be positive")
    out: list[Partition] = []

    def rec(remaining: int, largest: int, acc: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        for p in range(min(remaining, largest), 0, -1):
            acc.append(p)
            rec(remaining - p, p, acc)
            acc.pop()

    rec(d, d, [])
    return out


def r_value(g: int, alpha: Partition) -> int:
    """Number of simple branch points, d + l(alpha) + 2g - 2."""
    return alpha.d + alpha.length + 2 * g - 2


def elementary_symmetric(alpha: Partition | Iterable[int], j: int) -> int:
    """e_j of the parts, via the coefficients of prod(1 + a t)."""
    parts = alpha.parts if isinstance(alpha, Partition) else tuple(alpha)
    if j < 0:
        raise ValidationError("j must be non-negative")
    if j > len(parts):
        return 0
    e = [1] + [0] * j
    for a in parts:
        for k in range(j, 0, -1):
            e[k] += a * e[k - 1]
    return e[j]


def conjugacy_class_size(alpha: Partition) -> int:
    """h_alpha = d! / (prod alpha_i * prod z_alpha(i)!)."""
    denom = alpha.part_product * prod(factorial(z) for z in alpha.counts.values())
    return factorial(alpha.d) // denom


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n (including negative n)."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class SplitTerm:
    beta: Partition
    gamma: Partition
    multiplicity: int

    @property
    def i(self) -> int:
        return self.beta.d

    @property
    def j(self) -> int:
        return self.gamma.d


@dataclass(frozen=True)
class PartSplitTerm:
    part_value: int
    p: int
    q: int
    beta: Partition
    gamma: Partition
    multiplicity: int

    @property
    def i(self) -> int:
        return self.beta.d

    @property
    def j(self) -> int:
        return self.gamma.d


def _sub_multisets(counts: dict[int, int]) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Yield (chosen parts, rest parts, labelled multiplicity) for every sub-multiset."""
    values = sorted(counts, reverse=True)
    ranges = [range(counts[v] + 1) for v in values]
    for choice in product(*ranges):
        chosen: list[int] = []
        rest: list[int] = []
        mult = 1
        for v, k in zip(values, choice):
            chosen.extend([v] * k)
            rest.extend([v] * (counts[v] - k))
            mult *= comb(counts[v], k)
        yield tuple(chosen), tuple(rest), mult


def ordered_splittings(alpha: Partition) -> list[SplitTerm]:
    """Every ordered pair (beta, gamma) of nonempty sub-multisets with beta + gamma = alpha.

    Each term carries the number of labelled splittings it stands for, so
    the multiplicities add up to 2^l - 2.  Sorted by beta, then gamma.
    """
    terms = []
    for chosen, rest, mult in _sub_multisets(alpha.counts):
        if not chosen or not rest:
            continue
        terms.append(SplitTerm(make_partition(chosen), make_partition(rest), mult))
    terms.sort(key=lambda t: (t.beta.parts, t.gamma.parts))
    return terms


def part_splittings(alpha: Partition) -> list[PartSplitTerm]:
    """Split one part a = p + q (ordered) and distribute the remaining parts.

    beta receives p, gamma receives q; the other parts go to either side in
    every labelled way.  Multiplicity counts the choice of which occurrence
    of ``a`` is cut times the labelled distributions.
    """
    terms = []
    for a, za in sorted(alpha.counts.items(), reverse=True):
        if a < 2:
            continue
        rest = Counter(alpha.without(a))
        for p in range(1, a):
            q = a - p
            for chosen, other, mult in _sub_multisets(dict(rest)):
                terms.append(PartSplitTerm(
                    part_value=a, p=p, q=q,
                    beta=make_partition(chosen + (p,)),
                    gamma=make_partition(other + (q,)),
                    multiplicity=za * mult,
                ))
    terms.sort(key=lambda t: (-t.part_value, t.p, t.beta.parts, t.gamma.parts))
    return terms


def format_rational(x: Fraction | int) -> str:
    """Wire format: ``"4"`` or ``"1/2"``."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        m = int(den) if sep else 1
    except ValueError:
        raise ValidationError(f"malformed rational {text!r}") from None
    if m <= 0:
        raise ValidationError(f"malformed rational {text!r}: denominator must be positive")
    return Fraction(n, m)
