"""Memoized boundary recursions for G^0 and G^1, and the genus-2 relation for [1^d].

Splittings are summed as ORDERED pairs (beta, gamma) with labelled
multiplicities; with that reading the recursions reproduce the closed
forms and the brute-force counts exactly.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Literal

from .errors import TableFormatError, UnsupportedGenusError, ValidationError
from .partitions import (
    Partition,
    binomial,
    make_partition,
    ordered_splittings,
    parse_partition,
    parse_rational,
    part_splittings,
    r_value,
)

__all__ = [
    "HurwitzTable",
    "hurwitz_recursive",
    "genus2_conjecture",
    "save_table",
    "load_table",
    "TABLE_MAGIC",
    "TABLE_VERSION",
]

TABLE_MAGIC = "# hurwitz-table"
TABLE_VERSION = 1

_ONE = make_partition([1])


class HurwitzTable:
    """Memo store (genus, canonical partition) -> G, seeded with the degree-1 cover."""

    def __init__(self):
        self.entries: dict[tuple[int, Partition], Fraction] = {
            (0, _ONE): Fraction(1),
            (1, _ONE): Fraction(0),
        }
        self.hits = 0
        self.misses = 0
        self._lock = threading.Lock()

    def get(self, g: int, alpha: Partition) -> Fraction | None:
        with self._lock:
            value = self.entries.get((g, alpha))
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, g: int, alpha: Partition, value: Fraction) -> Fraction:
        # first writer wins; concurrent evaluations of one cell agree anyway
        with self._lock:
            return self.entries.setdefault((g, alpha), Fraction(value))

    def __contains__(self, key) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HurwitzTable):
            return NotImplemented
        return self.entries == other.entries

    def sorted_items(self) -> list[tuple[tuple[int, Partition], Fraction]]:
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].d, [-p for p in kv[0][1].parts]))


def _g0(alpha: Partition, table: HurwitzTable) -> Fraction:
    cached = table.get(0, alpha)
    if cached is not None:
        return cached
    d = alpha.d
    r = r_value(0, alpha)

    joins = Fraction(0)
    for t in ordered_splittings(alpha):
        i, j = t.i, t.j
        joins += (t.multiplicity * Fraction(i * i * j * j, d)
                  * _g0(t.beta, table) * _g0(t.gamma, table)
                  * binomial(r - 2, r_value(0, t.beta)))
    joins *= r - 1

    cuts = Fraction(0)
    for t in part_splittings(alpha):
        i, j = t.i, t.j
        cuts += (t.multiplicity * Fraction(t.part_value, 2)
                 * binomial(r - 1, r_value(0, t.beta)) * Fraction(i * j, d)
                 * _g0(t.beta, table) * _g0(t.gamma, table))

    return table.put(0, alpha, joins + cuts)


def _g1(alpha: Partition, table: HurwitzTable) -> Fraction:
    cached = table.get(1, alpha)
    if cached is not None:
        return cached
    d = alpha.d
    r = r_value(1, alpha)

    # irreducible one-nodal degenerations
    node = 2 * binomial(d, 2) * Fraction(d, 12) * (r - 1) * _g0(alpha, table)

    # roaming point hits a part a over infinity, curve stays irreducible;
    # alpha' replaces one a by p and q, ordered (p, q) both counted
    merged = Fraction(0)
    for a, za in alpha.counts.items():
        rest = alpha.without(a)
        for p in range(1, a):
            merged += za * a * _g0(make_partition(rest + (p, a - p)), table)
    merged *= Fraction(d, 24)

    joins = Fraction(0)
    for t in ordered_splittings(alpha):
        joins += (t.multiplicity * t.i * t.i * t.j
                  * _g0(t.beta, table) * _g1(t.gamma, table)
                  * binomial(r - 2, r_value(0, t.beta)))
    joins *= 2 * (r - 1)

    cuts = Fraction(0)
    for t in part_splittings(alpha):
        cuts += (t.multiplicity * t.part_value * t.i
                 * _g0(t.beta, table) * _g1(t.gamma, table)
                 * binomial(r - 1, r_value(0, t.beta)))

    return table.put(1, alpha, node + merged + joins + cuts)


def hurwitz_recursive(g: int, alpha: Partition, table: HurwitzTable | None = None) -> Fraction:
    """G^g_alpha from the boundary recursion (g in {0, 1})."""
    if table is None:
        table = HurwitzTable()
    if g == 0:
        return _g0(alpha, table)
    if g == 1:
        return _g1(alpha, table)
    raise UnsupportedGenusError(f"the boundary recursion covers genus 0 and 1, got {g}")


_C1 = Fraction(97, 136)
_C2 = Fraction(20, 17)
_C3 = Fraction(115, 17)
_C4 = Fraction(11697, 34)
_C5 = Fraction(3899, 68)


def _genus2_step(d: int, n0, n1, n2) -> Fraction:
    total = d * d * (_C1 * d - _C2) * n1(d)
    for j in range(1, d):
        total += n0(j) * n2(d - j) * binomial(2 * d, 2 * j - 2) * j * (d - j) * (8 * d - _C3 * j)
        total += (n1(j) * n1(d - j) * binomial(2 * d, 2 * j) * j * (d - j)
                  * (_C4 * j * (d - j) - _C5 * d * d))
    return total


def genus2_conjecture(
    d: int,
    table: HurwitzTable | None = None,
    normalization: Literal["unlabelled", "labelled"] = "unlabelled",
) -> Fraction:
    """G^2 for alpha = [1^d] predicted by the conjectured genus-2 relation.

    The relation is stated for covers whose d points over infinity are not
    labelled, i.e. for N^g_j = G^g_{[1^j]} / j!.  With the default
    ``normalization="unlabelled"`` each input is divided by j! and the
    output is scaled back by d!, so the result is directly comparable with
    c^2_{[1^d]}.  ``"labelled"`` plugs the labelled G values in unchanged;
    that reading already fails to be an integer at d = 3.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise ValidationError(f"degree must be a positive integer, got {d!r}")
    if normalization not in ("unlabelled", "labelled"):
        raise ValidationError(f"unknown normalization {normalization!r}")
    if table is None:
        table = HurwitzTable()

    def ones(j: int) -> Partition:
        return make_partition([1] * j)

    scale = (lambda j: Fraction(1, factorial(j))) if normalization == "unlabelled" else (lambda j: Fraction(1))
    local: dict[int, Fraction] = {1: Fraction(0)}

    def n2(j: int) -> Fraction:
        if normalization == "unlabelled":
            cached = table.get(2, ones(j)) if j > 1 else Fraction(0)
            if cached is not None:
                return cached * scale(j)
        elif j in local:
            return local[j]
        value = _genus2_step(j, n0, n1, n2)
        if normalization == "unlabelled":
            table.put(2, ones(j), value * factorial(j))
        else:
            local[j] = value
        return value

    def n0(j: int) -> Fraction:
        return _g0(ones(j), table) * scale(j)

    def n1(j: int) -> Fraction:
        return _g1(ones(j), table) * scale(j)

    return n2(d) / scale(d)


def save_table(table: HurwitzTable, path: str | Path) -> None:
    lines = [f"{TABLE_MAGIC} v{TABLE_VERSION}"]
    for (g, alpha), value in table.sorted_items():
        lines.append(f"{g} {alpha} {value.numerator}/{value.denominator}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_table(path: str | Path) -> HurwitzTable:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or not lines[0].startswith(TABLE_MAGIC + " v"):
        raise TableFormatError(f"{path}: missing '{TABLE_MAGIC}' header")
    version = lines[0][len(TABLE_MAGIC) + 2:].strip()
    if version != str(TABLE_VERSION):
        raise TableFormatError(f"{path}: table version {version!r}, expected {TABLE_VERSION}")
    table = HurwitzTable()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 3:
            raise TableFormatError(f"{path}:{lineno}: expected '<genus> <partition> <num>/<den>'")
        try:
            g = int(fields[0])
            alpha = parse_partition(fields[1])
            value = parse_rational(fields[2])
        except (ValueError, ValidationError) as exc:
            raise TableFormatError(f"{path}:{lineno}: {exc}") from None
        table.entries[(g, alpha)] = value
    return table
