"""Ground-truth counts of factorizations into transpositions.

Two independent routes:

* ``transitive_factorization_count_dfs`` walks every r-tuple of
  transpositions of S_d and keeps those multiplying to a fixed sigma and
  generating a transitive group.  Simple, exponential, capped by a budget.
* ``connected_sieve`` gets all (not necessarily transitive) counts from the
  cut-join action of a transposition on conjugacy classes, then peels off
  the intransitive ones by splitting the parts of sigma into orbit blocks.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import BudgetExceeded, ConsistencyError, ValidationError
from .partitions import (
    Partition,
    _sub_multisets,
    binomial,
    conjugacy_class_size,
    make_partition,
    r_value,
)

__all__ = [
    "DEFAULT_DFS_BUDGET",
    "ClassVector",
    "canonical_permutation",
    "cycle_type",
    "transpositions",
    "is_transitive",
    "transitive_factorization_count_dfs",
    "identity_class_vector",
    "cut_join_step",
    "class_vector",
    "total_factorization_count",
    "connected_sieve",
    "hurwitz_from_factorizations",
]

DEFAULT_DFS_BUDGET = 10**8


def canonical_permutation(alpha: Partition) -> tuple[int, ...]:
    """Images (0-based) of the fixed representative: consecutive cycles, longest first."""
    images = []
    start = 0
    for a in alpha.parts:
        images.extend(start + (k + 1) % a for k in range(a))
        start += a
    return tuple(images)


def cycle_type(perm) -> Partition:
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValidationError(f"not a permutation of 0..{n - 1}: {perm}")
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        k = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            k += 1
        lengths.append(k)
    return make_partition(lengths)


def transpositions(d: int) -> list[tuple[int, int]]:
    return list(combinations(range(d), 2))


def is_transitive(d: int, taus) -> bool:
    """Union-find over the transpositions; True when they connect all d points."""
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = d
    for a, b in taus:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            components -= 1
            if components == 1:
                return True
    return components == 1


def _dfs_count(d: int, r: int, target: tuple[int, ...], first: int | None) -> int:
    trans = transpositions(d)
    target_list = list(target)
    cur = list(range(d))
    stack: list[tuple[int, int]] = []
    count = 0

    def rec(depth: int):
        nonlocal count
        if depth == r:
            if cur == target_list and is_transitive(d, stack):
                count += 1
            return
        if depth == r - 1:
            # leaf level unrolled: same visits, no call per leaf
            for t in trans:
                a, b = t
                cur[a], cur[b] = cur[b], cur[a]
                if cur == target_list:
                    stack.append(t)
                    if is_transitive(d, stack):
                        count += 1
                    stack.pop()
                cur[a], cur[b] = cur[b], cur[a]
            return
        for t in trans:
            a, b = t
            cur[a], cur[b] = cur[b], cur[a]
            stack.append(t)
            rec(depth + 1)
            stack.pop()
            cur[a], cur[b] = cur[b], cur[a]

    if r == 0:
        rec(0)
    elif first is None:
        rec(0)
    else:
        a, b = trans[first]
        cur[a], cur[b] = cur[b], cur[a]
        stack.append(trans[first])
        rec(1)
    return count


def transitive_factorization_count_dfs(
    alpha: Partition, r: int, budget: int = DEFAULT_DFS_BUDGET, workers: int = 1
) -> int:
    """c(alpha, r): ordered r-tuples of transpositions with product sigma, transitive.

    sigma is ``canonical_permutation(alpha)``.  Raises BudgetExceeded when
    (d(d-1)/2)^r leaves would exceed ``budget``.  ``workers > 1`` splits the
    search on the first transposition across processes.
    """
    if r < 0:
        raise ValidationError("r must be non-negative")
    d = alpha.d
    n_trans = d * (d - 1) // 2
    leaves = n_trans ** r
    if leaves > budget:
        raise BudgetExceeded(f"DFS over {r}-tuples in S_{d}", leaves, budget)
    target = canonical_permutation(alpha)
    if r == 0 or n_trans == 0 or workers <= 1:
        return _dfs_count(d, r, target, None)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_dfs_count, [d] * n_trans, [r] * n_trans,
                         [target] * n_trans, range(n_trans))
        return sum(parts)


@dataclass(frozen=True)
class ClassVector:
    """coeffs[lambda] = number of ordered ``steps``-tuples of transpositions whose product has type lambda."""

    d: int
    coeffs: dict[Partition, int] = field(hash=False)
    steps: int = 0

    def __getitem__(self, alpha: Partition) -> int:
        return self.coeffs.get(alpha, 0)

    def total(self) -> int:
        return sum(self.coeffs.values())


def identity_class_vector(d: int) -> ClassVector:
    return ClassVector(d, {make_partition([1] * d): 1}, 0)


@lru_cache(maxsize=None)
def _transitions(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """(lambda, m) pairs: m transpositions turn a fixed permutation of type mu into type lambda."""
    out: Counter[Partition] = Counter()
    counts = mu.counts
    values = sorted(counts)
    # join two cycles
    for x in range(len(values)):
        a = values[x]
        if counts[a] >= 2:
            out[_replace(mu, [a, a], [2 * a])] += binomial(counts[a], 2) * a * a
        for y in range(x + 1, len(values)):
            b = values[y]
            out[_replace(mu, [a, b], [a + b])] += counts[a] * counts[b] * a * b
    # cut one cycle
    for c in values:
        for a in range(1, c // 2 + 1):
            b = c - a
            m = counts[c] * c if a != b else counts[c] * c // 2
            out[_replace(mu, [c], [a, b])] += m
    return tuple(sorted(out.items()))


def _replace(mu: Partition, remove: list[int], add: list[int]) -> Partition:
    parts = list(mu.parts)
    for x in remove:
        parts.remove(x)
    return make_partition(parts + add)


def cut_join_step(v: ClassVector) -> ClassVector:
    new: Counter[Partition] = Counter()
    for mu, coeff in v.coeffs.items():
        if coeff == 0:
            continue
        for lam, m in _transitions(mu):
            new[lam] += m * coeff
    return ClassVector(v.d, dict(new), v.steps + 1)


@lru_cache(maxsize=None)
def class_vector(d: int, steps: int) -> ClassVector:
    """Cut-join state after ``steps`` transpositions starting from the identity of S_d."""
    if steps == 0:
        return identity_class_vector(d)
    return cut_join_step(class_vector(d, steps - 1))


def total_factorization_count(alpha: Partition, r: int) -> int:
    """F(sigma, r): all r-tuples of transpositions multiplying to a fixed sigma of type alpha."""
    if r < 0:
        raise ValidationError("r must be non-negative")
    w = class_vector(alpha.d, r)[alpha]
    h = conjugacy_class_size(alpha)
    q, rem = divmod(w, h)
    if rem:
        raise ConsistencyError(f"class count {w} for {alpha} not divisible by h = {h}")
    return q


def _total(parts: tuple[int, ...], r: int) -> int:
    if not parts:
        return 1 if r == 0 else 0
    return total_factorization_count(make_partition(parts), r)


@lru_cache(maxsize=None)
def _sieve(alpha: Partition, r: int) -> int:
    # Blocks of the orbit partition: fix the block containing the first
    # labelled part, sum over the rest (exponential formula).
    first = alpha.parts[0]
    rest_counts = Counter(alpha.without(first))
    disconnected = 0
    for chosen, other, mult in _sub_multisets(dict(rest_counts)):
        if not other:
            continue
        block = make_partition((first,) + chosen)
        for s in range(r + 1):
            c_block = _sieve(block, s)
            if c_block == 0:
                continue
            disconnected += mult * binomial(r, s) * c_block * _total(other, r - s)
    c = total_factorization_count(alpha, r) - disconnected
    if c < 0:
        raise ConsistencyError(f"negative transitive count {c} for {alpha}, r={r}")
    return c


def connected_sieve(alpha: Partition, r: int) -> int:
    """c(alpha, r) recovered from total counts by the connectedness sieve."""
    if r < 0:
        raise ValidationError("r must be non-negative")
    return _sieve(alpha, r)


def hurwitz_from_factorizations(
    g: int, alpha: Partition, method: str = "sieve", budget: int = DEFAULT_DFS_BUDGET
) -> Fraction:
    """G^g = c^g / prod(alpha_i), with c counted by ``method`` in {"dfs", "sieve"}."""
    r = r_value(g, alpha)
    if r < 0:
        raise ValidationError(f"r^{g} = {r} < 0 for {alpha}")
    if method == "dfs":
        c = transitive_factorization_count_dfs(alpha, r, budget=budget)
    elif method == "sieve":
        c = connected_sieve(alpha, r)
    else:
        raise ValidationError(f"unknown factorization method {method!r}")
    return Fraction(c, alpha.part_product)
