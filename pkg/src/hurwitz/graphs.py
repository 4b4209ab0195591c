"""Brute-force census of clump graphs.

Vertices 0..d-1 are grouped into consecutive clumps of sizes alpha.  A
counted object is a connected loopless multigraph together with a marked
edge set forming a spanning tree inside every clump.  With vertices held
fixed, the only automorphisms swap the two copies of a doubled pair, and
that is allowed only when neither copy is marked; the weight of a graph is
therefore 1 / 2^(number of unmarked doubled pairs).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Callable, Iterator

from .errors import UnsupportedGenusError, ValidationError
from .partitions import Partition, ordered_splittings, part_splittings
from .partitions import binomial

__all__ = [
    "DEFAULT_GRAPH_CAP",
    "ClumpConfig",
    "ClumpMultigraph",
    "labelled_trees",
    "enumerate_clump_spanning_forests",
    "enumerate_clump_graphs",
    "tree_count_oracle",
    "genus1_count_oracle",
    "census_lines",
    "edge_deletion_identities",
]

DEFAULT_GRAPH_CAP = 7

Edge = tuple[int, int]


@dataclass(frozen=True)
class ClumpConfig:
    alpha: Partition
    clumps: tuple[tuple[int, ...], ...]

    @classmethod
    def from_partition(cls, alpha: Partition) -> "ClumpConfig":
        clumps = []
        start = 0
        for a in alpha.parts:
            clumps.append(tuple(range(start, start + a)))
            start += a
        return cls(alpha, tuple(clumps))

    @property
    def d(self) -> int:
        return self.alpha.d

    def clump_of(self, v: int) -> int:
        for k, clump in enumerate(self.clumps):
            if v in clump:
                return k
        raise ValidationError(f"vertex {v} outside 0..{self.d - 1}")


@dataclass(frozen=True)
class ClumpMultigraph:
    """Edges as sorted (u, v, multiplicity, marked multiplicity) tuples, u < v."""

    d: int
    edges: tuple[tuple[int, int, int, int], ...]

    @property
    def n_edges(self) -> int:
        return sum(e[2] for e in self.edges)

    @property
    def genus(self) -> int:
        return 1 - self.d + self.n_edges

    @property
    def weight(self) -> Fraction:
        swaps = sum(1 for _, _, m, k in self.edges if m == 2 and k == 0)
        return Fraction(1, 2 ** swaps)

    def marked_edges(self) -> list[Edge]:
        return [(u, v) for u, v, _, k in self.edges for _ in range(k)]

    def is_connected(self) -> bool:
        return _connected(self.d, [(u, v) for u, v, _, _ in self.edges])


def _connected(d: int, edges) -> bool:
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = d
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return components == 1


def labelled_trees(vertices: tuple[int, ...]) -> list[tuple[Edge, ...]]:
    """All labelled spanning trees on ``vertices`` (Pruefer decoding)."""
    n = len(vertices)
    if n == 1:
        return [()]
    if n == 2:
        return [((vertices[0], vertices[1]),)]
    trees = []
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(i for i in range(n) if degree[i] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [i for i in range(n) if degree[i] == 1]
        edges.append((u, w))
        trees.append(tuple(sorted(
            tuple(sorted((vertices[a], vertices[b]))) for a, b in edges)))
    return trees


def enumerate_clump_spanning_forests(cfg: ClumpConfig | Partition) -> list[tuple[Edge, ...]]:
    """One spanning tree per clump, in every combination; prod alpha_i^(alpha_i - 2) forests."""
    if isinstance(cfg, Partition):
        cfg = ClumpConfig.from_partition(cfg)
    per_clump = [labelled_trees(c) for c in cfg.clumps]
    return [tuple(sorted(e for tree in choice for e in tree)) for choice in product(*per_clump)]


def _check_cap(alpha: Partition, cap: int):
    if alpha.d > cap:
        raise ValidationError(f"graph census capped at d <= {cap}, got d = {alpha.d}")


def enumerate_clump_graphs(alpha: Partition, genus: int, cap: int = DEFAULT_GRAPH_CAP) -> Iterator[ClumpMultigraph]:
    """Every connected clump graph of the given genus (0 or 1), in deterministic order.

    Marked forest first, then l - 1 + genus further unmarked edges chosen
    with repetition from all vertex pairs; no pair may carry more than two
    edges.
    """
    if genus not in (0, 1):
        raise UnsupportedGenusError(f"clump graph census covers genus 0 and 1, got {genus}")
    _check_cap(alpha, cap)
    d = alpha.d
    pairs = list(combinations(range(d), 2))
    extra = alpha.length - 1 + genus
    for forest in enumerate_clump_spanning_forests(alpha):
        marked = set(forest)
        for chosen in combinations_with_replacement(pairs, extra):
            mult: dict[Edge, int] = {e: 1 for e in forest}
            for e in chosen:
                mult[e] = mult.get(e, 0) + 1
            if any(m > 2 for m in mult.values()):
                continue
            if not _connected(d, mult):
                continue
            yield ClumpMultigraph(d, tuple(sorted(
                (u, v, m, 1 if (u, v) in marked else 0) for (u, v), m in mult.items())))


def tree_count_oracle(alpha: Partition, cap: int = DEFAULT_GRAPH_CAP) -> int:
    return sum(1 for _ in enumerate_clump_graphs(alpha, 0, cap))


def genus1_count_oracle(alpha: Partition, cap: int = DEFAULT_GRAPH_CAP) -> Fraction:
    return sum((g.weight for g in enumerate_clump_graphs(alpha, 1, cap)), Fraction(0))


def census_lines(alpha: Partition, genus: int, cap: int = DEFAULT_GRAPH_CAP) -> list[str]:
    """Human-readable dump: one graph per line, ``u-v`` edges with ``*`` on marked copies."""
    lines = []
    for graph in enumerate_clump_graphs(alpha, genus, cap):
        edges = []
        for u, v, m, k in graph.edges:
            edges.extend([f"{u}-{v}*"] * k + [f"{u}-{v}"] * (m - k))
        lines.append(f"{' '.join(edges)}\tweight={graph.weight}")
    return lines


def edge_deletion_identities(
    alpha: Partition,
    t0: Callable[[Partition], Fraction | int],
    t1: Callable[[Partition], Fraction | int],
) -> dict[str, tuple[Fraction, Fraction]]:
    """Both sides of the four edge-deletion counts behind the graph interpretation.

    Keys ``"genus0-outside"``, ``"genus0-inside"``, ``"genus1-outside"``,
    ``"genus1-inside"`` map to (lhs, rhs).  ``t0``/``t1`` supply the graph
    counts, so oracle censuses and closed forms can both be plugged in.
    """
    d, l = alpha.d, alpha.length
    T0a, T1a = Fraction(t0(alpha)), Fraction(t1(alpha))

    outside0 = Fraction(0)
    outside1 = Fraction(0)
    for s in ordered_splittings(alpha):
        outside0 += s.multiplicity * s.i * Fraction(t0(s.beta)) * s.j * Fraction(t0(s.gamma))
        outside1 += s.multiplicity * s.i * Fraction(t0(s.beta)) * s.j * Fraction(t1(s.gamma))

    inside0 = Fraction(0)
    inside1_joined = Fraction(0)
    inside1_split = Fraction(0)
    for s in part_splittings(alpha):
        ways = binomial(s.part_value, s.p)
        inside0 += s.multiplicity * ways * s.p * Fraction(t0(s.beta)) * s.q * Fraction(t0(s.gamma))
        inside1_split += s.multiplicity * ways * s.p * Fraction(t0(s.beta)) * s.q * Fraction(t1(s.gamma))
    for a, za in alpha.counts.items():
        rest = alpha.without(a)
        for p in range(1, a):
            q = a - p
            merged = Partition(tuple(sorted(rest + (p, q), reverse=True)))
            inside1_joined += za * p * q * Fraction(t0(merged)) * binomial(a, p)

    return {
        "genus0-outside": (2 * (l - 1) * T0a, outside0),
        "genus0-inside": (2 * (d - l) * T0a, inside0),
        "genus1-outside": (2 * l * T1a, d * (d - 1) * T0a + 2 * outside1),
        "genus1-inside": (2 * (d - l) * T1a, inside1_joined + 2 * inside1_split),
    }
