"""Shared brute-force oracles for the test suite.

These deliberately avoid the library's graph representation: adjacency is
decided by index arithmetic on 1-based vertex numbers and subsets come from
itertools, so they are an independent route to every count being tested.
"""

from itertools import combinations


def brute_adjacent(i: int, j: int, n: int, h: int, cyclic: bool) -> bool:
    if i == j:
        return False
    d = abs(j - i)
    return d <= h or (cyclic and d >= n - h)


def brute_independent_sets(n: int, h: int, cyclic: bool) -> list[frozenset[int]]:
    out = []
    for k in range(n + 1):
        for sub in combinations(range(1, n + 1), k):
            if all(not brute_adjacent(a, b, n, h, cyclic) for a, b in combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


def brute_histogram(sets: list[frozenset[int]]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for s in sets:
        hist[len(s)] = hist.get(len(s), 0) + 1
    return hist


def brute_cover_count(sets: list[frozenset[int]]) -> int:
    present = set(sets)
    return sum(1 for s in sets for v in s if s - {v} in present)


def brute_edge_count(n: int, h: int, cyclic: bool) -> int:
    pairs = combinations(range(1, n + 1), 2)
    return sum(1 for i, j in pairs if brute_adjacent(i, j, n, h, cyclic))
