"""Set partitions, non-crossing partitions, and their depth statistics.

Partitions of [n] = {1, ..., n} are stored as tuples of blocks, each block a
strictly increasing tuple of integers, blocks ordered by their minimum.  The
statistics attached to a non-crossing partition are the per-block depths
(number of blocks strictly nesting the block), their total td1, and the
intermediate-element total td2 = sum over blocks of size >= 3 of
(size - 2) * depth.

Enumeration recurses on the block containing the smallest element; the gaps
between consecutive elements of that block are partitioned independently,
which yields each non-crossing partition exactly once in a fixed order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

DEFAULT_MAX_N = 18
_ENV_CAP = "FOCKPOISSON_MAX_N"


class LimitExceededError(RuntimeError):
    """Enumeration request above the configured size cap."""


def enumeration_cap() -> int:
    """Current cap on the ground-set size for enumerations."""
    raw = os.environ.get(_ENV_CAP)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{_ENV_CAP} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_N


def _check_cap(n: int, max_n) -> None:
    cap = max_n if max_n is not None else enumeration_cap()
    if n > cap:
        raise LimitExceededError(
            f"n={n} exceeds the enumeration cap {cap}; Catalan growth makes this "
            f"expensive (override with max_n or {_ENV_CAP})"
        )


class SetPartition:
    """A partition of {1..n} into disjoint nonempty blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks):
        blocks = tuple(tuple(b) for b in blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
                raise ValueError(f"block {b} is not strictly increasing")
            seen.update(b)
        if len(seen) != sum(len(b) for b in blocks):
            raise ValueError("blocks are not pairwise disjoint")
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks do not cover 1..{n}")
        self.n = n
        self.blocks = tuple(sorted(blocks, key=lambda b: b[0]))

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        inner = ",".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks)
        return f"{type(self).__name__}([{inner}])"

    def to_json_obj(self):
        return [list(b) for b in self.blocks]


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no two blocks interleave as b1 < c1 < b2 < c2."""
    blocks = p.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            merged = sorted(
                [(x, 0) for x in blocks[i]] + [(x, 1) for x in blocks[j]]
            )
            alternations = 1
            for k in range(1, len(merged)):
                if merged[k][1] != merged[k - 1][1]:
                    alternations += 1
            if alternations >= 4:
                return False
    return True


class NCPartition(SetPartition):
    """A non-crossing partition; the constructor rejects crossing input."""

    __slots__ = ()

    def __init__(self, n: int, blocks):
        super().__init__(n, blocks)
        if not is_noncrossing(self):
            raise ValueError(f"partition {self.blocks} is crossing")

    @classmethod
    def _trusted(cls, n: int, blocks) -> "NCPartition":
        # Fast path for the enumerator, which produces canonical blocks.
        obj = cls.__new__(cls)
        obj.n = n
        obj.blocks = blocks
        return obj

    def stats(self) -> "PartitionStats":
        return stats(self)


@dataclass(frozen=True)
class PartitionStats:
    """Depth statistics of a non-crossing partition, in block order."""

    block_depths: tuple
    td1: int
    td2: int
    inner_flags: tuple


def stats(p: NCPartition) -> PartitionStats:
    """Block depths by interval containment, and the totals td1, td2.

    For a non-crossing partition the blocks nesting B are exactly those whose
    first/last elements bracket B's interval, so depth is a pairwise interval
    test rather than a per-element cover count.
    """
    spans = [(b[0], b[-1]) for b in p.blocks]
    depths = []
    for fb, lb in spans:
        d = 0
        for fc, lc in spans:
            if fc < fb and lb < lc:
                d += 1
        depths.append(d)
    td1 = sum(depths)
    td2 = sum(
        (len(b) - 2) * d for b, d in zip(p.blocks, depths) if len(b) >= 3
    )
    return PartitionStats(
        block_depths=tuple(depths),
        td1=td1,
        td2=td2,
        inner_flags=tuple(d >= 1 for d in depths),
    )


def _gap_partitions(gaps, idx):
    """Lazily combine independent partitions of each gap, in gap order."""
    if idx == len(gaps):
        yield ()
        return
    for head in _nc_blocks(gaps[idx]):
        for tail in _gap_partitions(gaps, idx + 1):
            yield head + tail


def _nc_blocks(elems):
    """Yield non-crossing partitions of the sorted label tuple as block tuples.

    The block containing the first element is chosen outright; every other
    block must fall entirely inside one gap between its consecutive elements,
    so the gaps are partitioned independently.  Gap spans increase left to
    right, which keeps the emitted blocks ordered by minimum with no sorting.
    """
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    for size in range(len(rest) + 1):
        for chosen in combinations(range(len(rest)), size):
            block = (first,) + tuple(rest[i] for i in chosen)
            gaps = []
            prev = -1
            for i in chosen:
                if i > prev + 1:
                    gaps.append(rest[prev + 1 : i])
                prev = i
            if prev + 1 < len(rest):
                gaps.append(rest[prev + 1 :])
            for combo in _gap_partitions(gaps, 0):
                yield (block,) + combo


def enumerate_nc(n: int, max_n=None):
    """Yield every non-crossing partition of [n] once, in a fixed order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _check_cap(n, max_n)
    for blocks in _nc_blocks(tuple(range(1, n + 1))):
        yield NCPartition._trusted(n, blocks)


class Family(Enum):
    """Restrictions on which blocks may be inner (depth >= 1)."""

    NC = "NC"
    INTERVAL = "INTERVAL"
    ALMOST_INTERVAL = "ALMOST_INTERVAL"
    NC12_INNER = "NC12_INNER"


def _in_family(p: NCPartition, family: Family) -> bool:
    if family is Family.NC:
        return True
    st = stats(p)
    if family is Family.INTERVAL:
        return not any(st.inner_flags)
    if family is Family.ALMOST_INTERVAL:
        return all(
            len(b) == 1 for b, inner in zip(p.blocks, st.inner_flags) if inner
        )
    if family is Family.NC12_INNER:
        return all(
            len(b) <= 2 for b, inner in zip(p.blocks, st.inner_flags) if inner
        )
    raise ValueError(f"unknown family {family}")


def enumerate_family(n: int, family: Family, max_n=None):
    """Yield the members of the requested restricted family of NC(n)."""
    for p in enumerate_nc(n, max_n=max_n):
        if _in_family(p, family):
            yield p


def count_by_blocks(n: int, family: Family, max_n=None):
    """Counts of family members with exactly k blocks, for k = 1..n."""
    counts = [0] * n
    for p in enumerate_family(n, family, max_n=max_n):
        counts[len(p.blocks) - 1] += 1
    return counts
