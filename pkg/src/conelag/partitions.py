"""Partitions indexing the spherical and Laguerre families.

A partition is a non-increasing tuple of positive integers; the canonical
form carries no trailing zeros, so the empty tuple is the zero partition.
Orderings used elsewhere:

* enumeration order: by weight, then ascending lexicographic on the padded
  tuple (deterministic, matches the documented table layout);
* dominance order: partial order used by the spherical triangular solve.
"""

from __future__ import annotations

Partition = tuple  # canonical: non-increasing, no trailing zeros


def trim(parts) -> Partition:
    """Canonicalize by dropping trailing zeros."""
    t = tuple(parts)
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def pad(m: Partition, r: int) -> tuple:
    return tuple(m) + (0,) * (r - len(m))


def is_partition(m, r: int | None = None) -> bool:
    t = tuple(m)
    if any(not isinstance(x, int) or x < 0 for x in t):
        return False
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        return False
    if r is not None and len(trim(t)) > r:
        return False
    return True


def weight(m: Partition) -> int:
    return sum(m)


def partitions_of(k: int, max_parts: int, max_first: int | None = None):
    """Yield canonical partitions of k into at most max_parts parts."""
    if k == 0:
        yield ()
        return
    if max_parts == 0:
        return
    hi = k if max_first is None else min(k, max_first)
    for first in range(hi, 0, -1):
        for rest in partitions_of(k - first, max_parts - 1, first):
            yield (first,) + rest


def partitions_upto(r: int, max_weight: int) -> list[Partition]:
    """All partitions with <= r parts and weight <= max_weight, enumeration order."""
    out: list[Partition] = []
    for k in range(max_weight + 1):
        batch = sorted(partitions_of(k, r), key=lambda m: pad(m, r))
        out.extend(batch)
    return out


def dominates(a: Partition, b: Partition) -> bool:
    """True when a >= b in dominance order (requires equal weight)."""
    if weight(a) != weight(b):
        return False
    r = max(len(a), len(b))
    pa, pb = pad(a, r), pad(b, r)
    sa = sb = 0
    for i in range(r):
        sa += pa[i]
        sb += pb[i]
        if sa < sb:
            return False
    return True


def add_box(m: Partition, j: int, r: int) -> Partition | None:
    """m + gamma_j (1-based row j); None when the result leaves the partition set."""
    p = list(pad(m, max(r, j)))
    p[j - 1] += 1
    p = trim(p)
    if not is_partition(p, r):
        return None
    return p


def sub_box(m: Partition, j: int) -> Partition | None:
    """m - gamma_j (1-based row j); None when the result leaves the partition set."""
    p = list(pad(m, j))
    p[j - 1] -= 1
    if p[j - 1] < 0:
        return None
    p = trim(p)
    if not is_partition(p):
        return None
    return p


def distinct_permutations(m: Partition, r: int):
    """All distinct arrangements of pad(m, r), as exponent tuples."""
    # multiset recursion; r is small so this is never a bottleneck
    def rec(values):
        if not values:
            yield ()
            return
        used = set()
        for i, v in enumerate(values):
            if v in used:
                continue
            used.add(v)
            for tail in rec(values[:i] + values[i + 1:]):
                yield (v,) + tail

    yield from rec(list(pad(m, r)))
