"""Powers of paths and cycles, bitmask vertex subsets, and the exhaustive
independent-subset enumerator used to cross-check every counting formula."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

#: Hard cap for bitmask-backed graphs; the enumerator is only meant for desk
#: scale, so one adjacency row per vertex never needs more than 64 bits.
MAX_VERTICES = 64


class CapacityError(ValueError):
    """A construction exceeds its documented size limit."""


@dataclass(frozen=True)
class VertexSubset:
    """Subset of vertices v_1..v_n, stored as a bitmask.

    Bit i-1 is set iff v_i belongs to the subset, so the mask read from bit 0
    upward is the binary string b_1 b_2 ... b_n of the subset.
    """

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"subset width {self.n} outside 0..{MAX_VERTICES}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"mask {self.bits:#x} has bits beyond position {self.n}")

    @classmethod
    def from_vertices(cls, vertices: Iterable[int], n: int) -> "VertexSubset":
        """Build from 1-based vertex numbers."""
        bits = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise ValueError(f"vertex v_{v} outside 1..{n}")
            bits |= 1 << (v - 1)
        return cls(bits, n)

    @classmethod
    def from_string(cls, s: str) -> "VertexSubset":
        """Build from a binary string b_1...b_n."""
        if set(s) - {"0", "1"}:
            raise ValueError(f"not a binary string: {s!r}")
        bits = 0
        for i, c in enumerate(s):
            if c == "1":
                bits |= 1 << i
        return cls(bits, len(s))

    def vertices(self) -> tuple[int, ...]:
        """Members as 1-based vertex numbers, ascending."""
        return tuple(i + 1 for i in range(self.n) if (self.bits >> i) & 1)

    def to_string(self) -> str:
        """The binary string b_1...b_n (b_i = 1 iff v_i is a member)."""
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    @property
    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, vertex: int) -> bool:
        return 1 <= vertex <= self.n and bool((self.bits >> (vertex - 1)) & 1)

    def sort_key(self) -> tuple[int, int]:
        """Canonical order used everywhere: (cardinality, mask value)."""
        return (self.cardinality, self.bits)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices v_1..v_n with bitmask adjacency rows.

    adj[i] is the neighbor mask of v_{i+1}. Rows are plain ints, so derived
    graphs (e.g. cover graphs of posets) may have any number of vertices; the
    64-vertex cap applies only to the path/cycle builders and the enumerator.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for i, row in enumerate(self.adj):
            if row >> self.n:
                raise ValueError(f"row {i} has bits beyond position {self.n}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at v_{i + 1}")
            m = row
            while m:  # per set bit, so validation is O(edges), not O(n^2)
                low = m & -m
                j = low.bit_length() - 1
                if not ((self.adj[j] >> i) & 1):
                    raise ValueError(f"asymmetric adjacency between v_{i + 1}, v_{j + 1}")
                m ^= low

    def has_edge(self, i: int, j: int) -> bool:
        """Adjacency of v_i and v_j (1-based)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"vertex outside 1..{self.n}")
        return bool((self.adj[i - 1] >> (j - 1)) & 1)

    def degree(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex outside 1..{self.n}")
        return self.adj[i - 1].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as 1-based pairs (i, j), i < j, in ascending order."""
        for i in range(self.n):
            m = self.adj[i] & ~((1 << (i + 1)) - 1)
            while m:
                low = m & -m
                yield (i + 1, low.bit_length())
                m ^= low

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        """Build from 1-based endpoint pairs; duplicates collapse."""
        rows = [0] * n
        for i, j in edges:
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"bad edge ({i}, {j}) for n={n}")
            rows[i - 1] |= 1 << (j - 1)
            rows[j - 1] |= 1 << (i - 1)
        return cls(n, tuple(rows))


def _check_power_args(n: int, h: int) -> None:
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    if n > MAX_VERTICES:
        raise CapacityError(f"n={n} exceeds the {MAX_VERTICES}-vertex capacity")


def power_path(n: int, h: int) -> SimpleGraph:
    """Path power: v_i ~ v_j iff 0 < |j - i| <= h."""
    _check_power_args(n, h)
    rows = [0] * n
    for i in range(n):
        for j in range(max(0, i - h), min(n, i + h + 1)):
            if j != i:
                rows[i] |= 1 << j
    return SimpleGraph(n, tuple(rows))


def power_cycle(n: int, h: int) -> SimpleGraph:
    """Cycle power: v_i ~ v_j iff |j - i| <= h or |j - i| >= n - h (i != j).

    Both conditions holding for a pair still yields a single edge; n = 1 has
    no edges and n = 2 with h >= 1 has exactly one.
    """
    _check_power_args(n, h)
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if j != i and (abs(j - i) <= h or abs(j - i) >= n - h):
                rows[i] |= 1 << j
    return SimpleGraph(n, tuple(rows))


def is_independent(g: SimpleGraph, s: VertexSubset) -> bool:
    """True iff no two members of s are adjacent in g."""
    if s.n != g.n:
        raise ValueError(f"subset width {s.n} != graph order {g.n}")
    bits = s.bits
    i = 0
    m = bits
    while m:
        if m & 1 and g.adj[i] & bits:
            return False
        m >>= 1
        i += 1
    return True


def enumerate_independent(g: SimpleGraph) -> list[VertexSubset]:
    """All independent subsets of g, sorted by (cardinality, mask value).

    Pruned backtracking over the adjacency masks; cost grows with the number
    of independent subsets, so keep g.n at desk scale (<= ~24). The empty
    subset is always present.
    """
    if g.n > MAX_VERTICES:
        raise CapacityError(f"n={g.n} exceeds the {MAX_VERTICES}-vertex capacity")
    adj = g.adj
    n = g.n
    found: list[int] = []

    def extend(start: int, chosen: int) -> None:
        found.append(chosen)
        for v in range(start, n):
            if not (adj[v] & chosen):
                extend(v + 1, chosen | (1 << v))

    extend(0, 0)
    found.sort(key=lambda m: (m.bit_count(), m))
    return [VertexSubset(m, n) for m in found]


def hamming(a: VertexSubset, b: VertexSubset) -> int:
    """Number of positions where the two binary strings differ."""
    if a.n != b.n:
        raise ValueError(f"width mismatch: {a.n} != {b.n}")
    return (a.bits ^ b.bits).bit_count()


def contains_pattern(s: VertexSubset, pattern: str, circular: bool = False) -> bool:
    """Whether the binary string of s contains the pattern as a substring.

    Linear mode scans b_1..b_n as-is. Circular mode joins the last bit back
    to the first, so an occurrence may wrap around the end once; patterns
    longer than the string cannot occur.
    """
    if not pattern:
        raise ValueError("empty pattern")
    if set(pattern) - {"0", "1"}:
        raise ValueError(f"not a binary pattern: {pattern!r}")
    text = s.to_string()
    if not circular:
        return pattern in text
    if len(pattern) > s.n:
        return False
    return pattern in (text + text)[: s.n + len(pattern) - 1]
