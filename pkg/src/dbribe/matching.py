"""Maximum bipartite matching via augmenting paths (Kuhn's algorithm)."""

from __future__ import annotations

from typing import Iterable


def max_bipartite_matching(
    n_left: int, n_right: int, edges: Iterable[tuple[int, int]]
) -> dict[int, int]:
    """Maximum-cardinality matching of a bipartite graph, as a left->right map.

    Left vertices are processed in index order and neighbours in edge input
    order, so the result is deterministic for a given input.
    """
    adjacency: list[list[int]] = [[] for _ in range(n_left)]
    for u, v in edges:
        if not (0 <= u < n_left and 0 <= v < n_right):
            raise ValueError(f"edge ({u}, {v}) out of range")
        adjacency[u].append(v)
    match_left: list[int | None] = [None] * n_left
    match_right: list[int | None] = [None] * n_right

    def augment(u: int, seen: set[int]) -> bool:
        for v in adjacency[u]:
            if v in seen:
                continue
            seen.add(v)
            if match_right[v] is None or augment(match_right[v], seen):
                match_left[u] = v
                match_right[v] = u
                return True
        return False

    for u in range(n_left):
        augment(u, set())
    return {u: v for u, v in enumerate(match_left) if v is not None}
