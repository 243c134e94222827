"""Inclusion posets of independent subsets and their cube-shaped cover graphs.

The Hasse diagram of the independent subsets of a path power, read as binary
strings, is a Fibonacci-cube-like graph; the cycle-power analogue is a
Lucas-cube-like graph. This module builds the diagrams, the classic cubes,
and the pattern-avoidance cubes, so the structural identities between them
can be checked vertex for vertex and edge for edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import (
    CapacityError,
    SimpleGraph,
    VertexSubset,
    contains_pattern,
    enumerate_independent,
)

#: Node counts grow like the total independent-subset count, so diagram and
#: cube construction is capped well below the 64-bit mask limit.
MAX_CUBE_ORDER = 20


@dataclass(frozen=True)
class PosetDiagram:
    """Hasse diagram of independent subsets ordered by inclusion.

    levels[k] holds the size-k subsets in canonical order; covers are the
    ordered pairs (smaller, larger) with the larger one element bigger.
    """

    n: int
    levels: tuple[tuple[VertexSubset, ...], ...]
    covers: tuple[tuple[VertexSubset, VertexSubset], ...]

    def nodes(self) -> tuple[VertexSubset, ...]:
        """All nodes, flattened in canonical (cardinality, mask) order."""
        return tuple(s for level in self.levels for s in level)

    @property
    def node_count(self) -> int:
        return sum(len(level) for level in self.levels)

    @property
    def cover_count(self) -> int:
        return len(self.covers)


def hasse_diagram(g: SimpleGraph) -> PosetDiagram:
    """Diagram of the independent subsets of g ordered by inclusion.

    Covers are exactly the pairs (s, s + v): adding one non-conflicting
    vertex to an independent set is the only way to go up one level.
    """
    if g.n > MAX_CUBE_ORDER:
        raise CapacityError(f"n={g.n} exceeds the diagram cap of {MAX_CUBE_ORDER}")
    subsets = enumerate_independent(g)
    max_card = subsets[-1].cardinality
    levels: list[list[VertexSubset]] = [[] for _ in range(max_card + 1)]
    for s in subsets:
        levels[s.cardinality].append(s)
    covers = []
    for s in subsets:
        for v in range(g.n):
            if not ((s.bits >> v) & 1) and not (g.adj[v] & s.bits):
                covers.append((s, VertexSubset(s.bits | (1 << v), g.n)))
    covers.sort(key=lambda pair: (pair[0].cardinality, pair[0].bits, pair[1].bits))
    return PosetDiagram(g.n, tuple(tuple(level) for level in levels), tuple(covers))


def diagram_as_graph(d: PosetDiagram) -> SimpleGraph:
    """Undirected view of the diagram: one vertex per node (in canonical
    order), one edge per cover pair."""
    nodes = d.nodes()
    index = {s.bits: i for i, s in enumerate(nodes)}
    rows = [0] * len(nodes)
    for low, high in d.covers:
        i, j = index[low.bits], index[high.bits]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return SimpleGraph(len(nodes), tuple(rows))


def _check_cube_order(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_CUBE_ORDER:
        raise CapacityError(f"n={n} exceeds the cube cap of {MAX_CUBE_ORDER}")


def _canonical(masks: list[int], n: int) -> list[VertexSubset]:
    masks.sort(key=lambda m: (m.bit_count(), m))
    return [VertexSubset(m, n) for m in masks]


def _hamming_cube(vertices: Sequence[VertexSubset]) -> SimpleGraph:
    """Graph on the given strings with edges at Hamming distance one."""
    index = {s.bits: i for i, s in enumerate(vertices)}
    n = vertices[0].n if vertices else 0
    rows = [0] * len(vertices)
    for i, s in enumerate(vertices):
        for v in range(n):
            flipped = s.bits ^ (1 << v)
            j = index.get(flipped)
            if j is not None and flipped > s.bits:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return SimpleGraph(len(vertices), tuple(rows))


def fibonacci_strings(n: int) -> list[VertexSubset]:
    """Binary strings of length n with no two consecutive ones, canonical order."""
    _check_cube_order(n)
    return _canonical([m for m in range(1 << n) if not (m & (m >> 1))], n)


def lucas_strings(n: int) -> list[VertexSubset]:
    """Fibonacci strings whose first and last bits are not both one."""
    _check_cube_order(n)
    masks = [
        m
        for m in range(1 << n)
        if not (m & (m >> 1)) and not (n and (m & 1) and (m >> (n - 1)) & 1)
    ]
    return _canonical(masks, n)


def avoiding_strings(n: int, patterns: Sequence[str], circular: bool = False) -> list[VertexSubset]:
    """Length-n strings containing none of the patterns, canonical order."""
    _check_cube_order(n)
    if not patterns:
        raise ValueError("pattern list must be nonempty")
    masks = []
    for m in range(1 << n):
        s = VertexSubset(m, n)
        if not any(contains_pattern(s, p, circular) for p in patterns):
            masks.append(m)
    return _canonical(masks, n)


def fibonacci_cube(n: int) -> SimpleGraph:
    """Hamming-distance-1 graph on the Fibonacci strings of length n."""
    return _hamming_cube(fibonacci_strings(n))


def lucas_cube(n: int) -> SimpleGraph:
    """Hamming-distance-1 graph on the circularly 11-avoiding strings."""
    return _hamming_cube(lucas_strings(n))


def generalized_cube(n: int, patterns: Sequence[str], circular: bool = False) -> SimpleGraph:
    """Hamming-distance-1 graph on the strings avoiding every pattern,
    linearly or circularly."""
    return _hamming_cube(avoiding_strings(n, patterns, circular))


def power_patterns(h: int) -> list[str]:
    """The forbidden substrings for h-power independence strings: two ones
    separated by fewer than h zeros."""
    if h < 1:
        raise ValueError("h must be at least 1")
    return ["1" + "0" * j + "1" for j in range(h)]


def same_labeled_graph(
    a: SimpleGraph,
    a_labels: Sequence[str],
    b: SimpleGraph,
    b_labels: Sequence[str],
    label_map: Mapping[str, str] | None = None,
) -> bool:
    """Whether label_map carries a's labeled vertices and edges exactly onto b's.

    label_map defaults to the identity. Labels must be unique per graph and
    the map must be defined and injective on a's labels; anything else is a
    caller error. A mapped label missing from b, or any edge mismatch, makes
    the graphs differ and returns False.
    """
    if len(a_labels) != a.n or len(b_labels) != b.n:
        raise ValueError("label list length must match the vertex count")
    if len(set(a_labels)) != a.n or len(set(b_labels)) != b.n:
        raise ValueError("labels must be unique")
    if label_map is None:
        mapped = list(a_labels)
    else:
        try:
            mapped = [label_map[lab] for lab in a_labels]
        except KeyError as exc:
            raise ValueError(f"label map undefined for {exc.args[0]!r}") from None
        if len(set(mapped)) != len(mapped):
            raise ValueError("label map is not injective")
    if a.n != b.n:
        return False
    b_index = {lab: i for i, lab in enumerate(b_labels)}
    perm = []
    for lab in mapped:
        i = b_index.get(lab)
        if i is None:
            return False
        perm.append(i)
    a_edges = {(min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1])) for i, j in a.edges()}
    b_edges = {(i - 1, j - 1) for i, j in b.edges()}
    return a_edges == b_edges
