"""Canonical forms: AHU codes for trees, refinement + individualization for small graphs.

Trees and forests on n vertices are enumerated up to isomorphism by growing
leaves onto smaller trees and deduplicating by centre-rooted AHU code.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from math import factorial, prod
from typing import Hashable, Iterable, Sequence

Edge = tuple[int, int]


def _adjacency(n: int, edges: Iterable[Edge]) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n + 1)]
    for a, b in edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return adj


# ---------------------------------------------------------------------------
# Trees

def _rooted_code(adj: Sequence[set[int]], root: int, parent: int = 0) -> str:
    kids = sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)
    return "(" + "".join(kids) + ")"


def tree_centres(n: int, edges: Sequence[Edge]) -> list[int]:
    adj = _adjacency(n, edges)
    if n == 1:
        return [1]
    degree = {v: len(adj[v]) for v in range(1, n + 1)}
    layer = [v for v in range(1, n + 1) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for u in adj[leaf]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def tree_code(n: int, edges: Sequence[Edge]) -> str:
    """Isomorphism invariant of a tree: the smallest centre-rooted AHU code."""
    adj = _adjacency(n, edges)
    if len(edges) != n - 1:
        raise ValueError("not a tree")
    centres = tree_centres(n, edges)
    if len(centres) == 1:
        return _rooted_code(adj, centres[0])
    a, b = centres
    ca, cb = sorted((_rooted_code(adj, a, b), _rooted_code(adj, b, a)))
    return "[" + ca + cb + "]"


def _code_tree(code: str) -> tuple[int, list[Edge]]:
    """Rebuild a tree (vertices 1..n, BFS-ish labels) from a rooted AHU code."""
    edges: list[Edge] = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            count += 1
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
        elif ch == ")":
            stack.pop()
    return count, edges


def tree_from_code(code: str) -> tuple[int, list[Edge]]:
    if code.startswith("["):
        inner = code[1:-1]
        depth = 0
        for k, ch in enumerate(inner):
            depth += 1 if ch == "(" else -1
            if depth == 0:
                left, right = inner[: k + 1], inner[k + 1 :]
                break
        na, ea = _code_tree(left)
        nb, eb = _code_tree(right)
        edges = ea + [(a + na, b + na) for a, b in eb] + [(1, na + 1)]
        return na + nb, sorted(tuple(sorted(e)) for e in edges)
    n, edges = _code_tree(code)
    return n, sorted(tuple(sorted(e)) for e in edges)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[tuple[int, tuple[Edge, ...]], ...]:
    """One representative per isomorphism class of trees on n vertices, sorted by code."""
    if n < 1:
        return ()
    if n == 1:
        return ((1, ()),)
    codes = {}
    for m, edges in trees(n - 1):
        for v in range(1, m + 1):
            new = list(edges) + [(v, n)]
            code = tree_code(n, new)
            if code not in codes:
                codes[code] = tree_from_code(code)
    return tuple((codes[c][0], tuple(codes[c][1])) for c in sorted(codes))


def _rooted_aut(adj: Sequence[set[int]], root: int, parent: int = 0) -> tuple[str, int]:
    kids = [_rooted_aut(adj, c, root) for c in adj[root] if c != parent]
    groups = Counter(code for code, _ in kids)
    aut = prod(a for _, a in kids) * prod(factorial(m) for m in groups.values())
    return "(" + "".join(sorted(code for code, _ in kids)) + ")", aut


def tree_automorphisms(n: int, edges: Sequence[Edge]) -> int:
    adj = _adjacency(n, edges)
    centres = tree_centres(n, edges)
    if len(centres) == 1:
        return _rooted_aut(adj, centres[0])[1]
    a, b = centres
    code_a, aut_a = _rooted_aut(adj, a, b)
    code_b, aut_b = _rooted_aut(adj, b, a)
    return aut_a * aut_b * (2 if code_a == code_b else 1)


def _multisets_of_sizes(n: int, largest: int) -> Iterable[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _multisets_of_sizes(n - first, first):
            yield (first,) + rest


def forests(n: int) -> list[tuple[int, tuple[Edge, ...], tuple[tuple[int, int], ...]]]:
    """Forests on n vertices up to isomorphism.

    Each entry is (n, edges, components) where components lists
    (size, index into trees(size)) in canonical order.
    """
    out = []
    for sizes in _multisets_of_sizes(n, n):
        # choose a weakly decreasing index sequence within each block of equal sizes
        blocks = Counter(sizes)
        per_size = []
        for size in sorted(blocks, reverse=True):
            per_size.append([(size, combo) for combo in _multichoose(len(trees(size)), blocks[size])])
        for choice in _product(per_size):
            comps = tuple((size, idx) for size, combo in choice for idx in combo)
            edges: list[Edge] = []
            offset = 0
            for size, idx in comps:
                _, tedges = trees(size)[idx]
                edges.extend((a + offset, b + offset) for a, b in tedges)
                offset += size
            out.append((n, tuple(edges), comps))
    return out


def _multichoose(k: int, r: int, start: int = 0) -> Iterable[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    for i in range(start, k):
        for rest in _multichoose(k, r - 1, i):
            yield (i,) + rest


def _product(lists):
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for tail in _product(lists[1:]):
            yield (head,) + tail


def forest_automorphisms(comps: Sequence[tuple[int, int]]) -> int:
    counts = Counter(comps)
    total = 1
    for (size, idx), mult in counts.items():
        n, edges = trees(size)[idx]
        total *= tree_automorphisms(n, edges) ** mult * factorial(mult)
    return total


# ---------------------------------------------------------------------------
# General small graphs

def _refine(adj: Sequence[set[int]], colour: dict[int, int]) -> dict[int, int]:
    """Colour refinement to an equitable partition; colours are canonical ranks."""
    while True:
        signature = {
            v: (colour[v], tuple(sorted(colour[u] for u in adj[v]))) for v in colour
        }
        ranks = {sig: r for r, sig in enumerate(sorted(set(signature.values())))}
        new = {v: ranks[signature[v]] for v in colour}
        if len(set(new.values())) == len(set(colour.values())):
            return new
        colour = new


def canonical_form(n: int, edges: Iterable[Edge], labels: Sequence[Hashable] | None = None) -> tuple:
    """Certificate equal for two vertex-labelled simple graphs iff they are isomorphic.

    ``labels[v-1]`` is an optional vertex label (must be mutually comparable);
    parallel edges and loops are ignored.
    """
    edges = {tuple(sorted(e)) for e in edges if e[0] != e[1]}
    adj = _adjacency(n, edges)
    labels = list(labels) if labels is not None else [0] * n
    label_rank = {lab: r for r, lab in enumerate(sorted(set(labels)))}
    start = _refine(adj, {v: label_rank[labels[v - 1]] for v in range(1, n + 1)})

    best: list = [None]

    def certificate(colour: dict[int, int]) -> tuple:
        order = sorted(colour, key=colour.get)
        pos = {v: i for i, v in enumerate(order)}
        return (
            tuple(label_rank[labels[v - 1]] for v in order),
            tuple(sorted(tuple(sorted((pos[a], pos[b]))) for a, b in edges)),
        )

    def search(colour: dict[int, int]) -> None:
        cells: dict[int, list[int]] = defaultdict(list)
        for v, c in colour.items():
            cells[c].append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                if target is None or len(cells[c]) < len(cells[target]):
                    target = c
        if target is None:
            cert = certificate(colour)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            # vertices with the same open or closed neighbourhood are interchangeable
            if any(adj[v] - {u} == adj[u] - {v} for u in tried):
                continue
            tried.append(v)
            split = {u: 2 * c + (0 if u == v else 1) for u, c in colour.items()}
            search(_refine(adj, split))

    search(start)
    return (n,) + best[0] if n else (0,)
