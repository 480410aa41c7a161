"""Graphs, hypergraphs and rooted graphs with their (pointed) chromatic symmetric functions.

Vertices are 1..n.  Graph edges are ordered pairs kept in input order (the
order matters for the group-algebra operators); loops and parallel edges are
allowed.  Hypergraph edges are sorted tuples.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .canon import canonical_form
from .partitions import Partition, partitions_of, sorted_partition
from .symfun import PointedSymFun, SymFun

MAX_EDGES = 30
ORACLE_MAX_N = 9

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge {(a, b)} has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    def neighbours(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b) and a != b}

    def is_simple(self) -> bool:
        keys = [tuple(sorted(e)) for e in self.edges]
        return all(a != b for a, b in keys) and len(set(keys)) == len(keys)

    def simplified(self) -> "Graph":
        """Drop loops and repeated parallel copies (keeps first occurrence order)."""
        seen, out = set(), []
        for a, b in self.edges:
            key = tuple(sorted((a, b)))
            if a != b and key not in seen:
                seen.add(key)
                out.append((a, b))
        return Graph(self.n, tuple(out))

    def has_loop(self) -> bool:
        return any(a == b for a, b in self.edges)

    def as_hypergraph(self) -> "Hypergraph":
        return Hypergraph(self.n, tuple(tuple(sorted({a, b})) for a, b in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        edges = []
        for e in self.edges:
            e = tuple(sorted(set(int(v) for v in e)))
            if not e:
                raise ValueError("hyperedges must be nonempty")
            if e[0] < 1 or e[-1] > self.n:
                raise ValueError(f"hyperedge {e} not inside 1..{self.n}")
            edges.append(e)
        object.__setattr__(self, "edges", tuple(edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class RootedGraph:
    graph: Graph
    root: int

    def __post_init__(self):
        if not 1 <= self.root <= self.graph.n:
            raise ValueError(f"root {self.root} outside 1..{self.graph.n}")

    def to_json(self) -> dict:
        d = self.graph.to_json()
        d["root"] = self.root
        return d


AnyGraph = Graph | Hypergraph


# ---------------------------------------------------------------------------
# Named families and parsing

def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(1, n + 1), 2)))


def cycle(n: int) -> Graph:
    """C_n; C_1 is a vertex with a loop and C_2 a doubled edge."""
    if n < 1:
        raise ValueError("cycle needs n >= 1")
    if n == 1:
        return Graph(1, ((1, 1),))
    if n == 2:
        return Graph(2, ((1, 2), (1, 2)))
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def star(n: int) -> Graph:
    return Graph(n, tuple((1, j) for j in range(2, n + 1)))


def edgeless(n: int) -> Graph:
    return Graph(n, ())


FAMILIES = {"P": path, "K": complete, "C": cycle, "S": star, "E": edgeless}


def parse_graph(text_or_obj) -> Graph | Hypergraph | RootedGraph:
    """Accept JSON text or dict, or a family name such as ``P_4``, ``K3``."""
    if isinstance(text_or_obj, str):
        s = text_or_obj.strip()
        if s and s[0].upper() in FAMILIES and not s.startswith("{"):
            digits = s[1:].lstrip("_")
            if digits.isdigit():
                return FAMILIES[s[0].upper()](int(digits))
        obj = json.loads(s)
    else:
        obj = text_or_obj
    n = int(obj["n"])
    edges = [tuple(e) for e in obj.get("edges", [])]
    hyper = obj.get("hypergraph", False) or any(len(e) != 2 for e in edges)
    g: Graph | Hypergraph = Hypergraph(n, tuple(edges)) if hyper else Graph(n, tuple(edges))
    if "root" in obj and obj["root"] is not None:
        if isinstance(g, Hypergraph):
            raise ValueError("rooted hypergraphs are not supported")
        return RootedGraph(g, int(obj["root"]))
    return g


# ---------------------------------------------------------------------------
# Union-find with rollback

class _RollbackDSU:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.history: list = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.history.append(None)
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))

    def rollback(self) -> None:
        step = self.history.pop()
        if step is not None:
            ra, rb = step
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]

    def sizes(self, n: int) -> Partition:
        return sorted_partition(self.size[v] for v in range(1, n + 1) if self.parent[v] == v)


def _edge_sets(g: AnyGraph) -> list[tuple[int, ...]]:
    if isinstance(g, Graph):
        return [tuple(e) for e in g.edges]
    return list(g.edges)


def component_type(g: AnyGraph, subset: Iterable[Sequence[int]] | None = None, root: int | None = None):
    """type(G_S), or (type_v^-, type_v^+) when a root is given."""
    n = g.n
    if root is not None and not 1 <= root <= n:
        raise ValueError(f"root {root} outside 1..{n}")
    dsu = _RollbackDSU(n)
    for e in (_edge_sets(g) if subset is None else subset):
        e = tuple(e)
        for u in e[1:]:
            dsu.union(e[0], u)
    if root is None:
        return dsu.sizes(n)
    r = dsu.find(root)
    rest = sorted_partition(dsu.size[v] for v in range(1, n + 1) if dsu.parent[v] == v and v != r)
    return rest, dsu.size[r]


def _check_bound(m: int, max_edges: int) -> None:
    if m > max_edges:
        raise ValueError(f"{m} edges exceeds the bound of {max_edges}")


def _subset_sum(g: AnyGraph, root: int | None, max_edges: int) -> dict:
    edges = [e for e in _edge_sets(g) if len(set(e)) > 1 or isinstance(g, Graph)]
    _check_bound(len(edges), max_edges)
    n = g.n
    dsu = _RollbackDSU(n)
    acc: Counter = Counter()

    def record(sign: int) -> None:
        if root is None:
            acc[dsu.sizes(n)] += sign
        else:
            r = dsu.find(root)
            rest = sorted_partition(
                dsu.size[v] for v in range(1, n + 1) if dsu.parent[v] == v and v != r
            )
            acc[(rest, dsu.size[r] - 1)] += sign

    def dfs(k: int, sign: int) -> None:
        if k == len(edges):
            record(sign)
            return
        dfs(k + 1, sign)
        e = edges[k]
        for u in e[1:]:
            dsu.union(e[0], u)
        dfs(k + 1, -sign)
        for _ in e[1:]:
            dsu.rollback()

    dfs(0, 1)
    return {k: v for k, v in acc.items() if v}


def csf(g: AnyGraph, method: str = "subset", max_edges: int = MAX_EDGES) -> SymFun:
    """X_G in the p basis.

    ``method='subset'`` sums over edge subsets; ``method='dc'`` uses the
    vertex-weighted deletion-contraction recurrence (graphs only).
    Singleton hyperedges never make a colouring improper, so they are ignored.
    """
    if method == "subset":
        if isinstance(g, Hypergraph):
            g = Hypergraph(g.n, tuple(e for e in g.edges if len(e) > 1))
        return SymFun("p", _subset_sum(g, None, max_edges))
    if method == "dc":
        if isinstance(g, Hypergraph):
            raise ValueError("deletion-contraction is implemented for graphs only")
        _check_bound(len(g.edges), max_edges)
        if g.has_loop():
            return SymFun("p")
        return SymFun("p", dict(_weighted_dc(*_weighted_key([1] * g.n, g.simplified().edges))))
    raise ValueError(f"unknown method {method!r}")


def _weighted_key(weights: Sequence[int], edges: Iterable[Edge]) -> tuple:
    """Canonical (weights, edges) of a vertex-weighted simple graph."""
    n = len(weights)
    cert = canonical_form(n, edges, weights)
    if n == 0:
        return (), ()
    _, labels, canon_edges = cert
    ordered = sorted(set(weights))
    return tuple(ordered[r] for r in labels), tuple((a + 1, b + 1) for a, b in canon_edges)


@lru_cache(maxsize=200_000)
def _weighted_dc(weights: tuple[int, ...], edges: tuple[Edge, ...]) -> tuple:
    if not edges:
        return ((sorted_partition(weights), Fraction(1)),)
    # split off components when disconnected
    comps = _components(len(weights), edges)
    if len(comps) > 1:
        result = SymFun.one("p")
        for verts in comps:
            index = {v: i + 1 for i, v in enumerate(verts)}
            sub_w = [weights[v - 1] for v in verts]
            sub_e = [(index[a], index[b]) for a, b in edges if a in index]
            result = result * SymFun("p", dict(_weighted_dc(*_weighted_key(sub_w, sub_e))))
        return tuple(result.coeffs.items())
    a, b = edges[-1]
    deleted = _weighted_dc(*_weighted_key(weights, edges[:-1]))
    # contract b into a: weights add, parallel edges collapse
    relabel = {}
    k = 0
    for v in range(1, len(weights) + 1):
        if v == b:
            continue
        k += 1
        relabel[v] = k
    relabel[b] = relabel[a]
    new_w = [0] * (len(weights) - 1)
    for v, w in enumerate(weights, start=1):
        new_w[relabel[v] - 1] += w
    new_e = {tuple(sorted((relabel[x], relabel[y]))) for x, y in edges[:-1]}
    new_e = [e for e in new_e if e[0] != e[1]]
    contracted = _weighted_dc(*_weighted_key(new_w, new_e))
    out: dict = dict(deleted)
    for key, c in contracted:
        out[key] = out.get(key, 0) - c
        if not out[key]:
            del out[key]
    return tuple(out.items())


def _components(n: int, edges: Iterable[Sequence[int]]) -> list[list[int]]:
    adj = defaultdict(set)
    for e in edges:
        for u in e:
            for w in e:
                if u != w:
                    adj[u].add(w)
    seen, comps = set(), []
    for v in range(1, n + 1):
        if v in seen:
            continue
        comp, queue = [], deque([v])
        seen.add(v)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def components(g: AnyGraph) -> list[list[int]]:
    return _components(g.n, _edge_sets(g))


def csf_oracle(g: AnyGraph) -> SymFun:
    """X_G in the m basis by counting proper colourings with each exponent vector."""
    n = g.n
    if n > ORACLE_MAX_N:
        raise ValueError(f"colouring oracle limited to n <= {ORACLE_MAX_N}")
    hyper = [tuple(e) for e in _edge_sets(g) if len(set(e)) > 1 or isinstance(g, Graph)]
    if any(len(set(e)) == 1 for e in hyper):
        return SymFun("m")  # a loop can never be properly coloured
    # edges checked once their last vertex is coloured
    closing: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for e in hyper:
        closing[max(e)].append(e)
    out = {}
    for lam in partitions_of(n):
        colour = [0] * (n + 1)
        room = list(lam)

        def go(v: int) -> int:
            if v > n:
                return 1
            total = 0
            for c in range(len(room)):
                if room[c] == 0:
                    continue
                colour[v] = c
                if all(any(colour[u] != c for u in e if u != v) for e in closing[v]):
                    room[c] -= 1
                    total += go(v + 1)
                    room[c] += 1
            return total

        count = go(1)
        if count:
            out[lam] = count
    return SymFun("m", out)


# ---------------------------------------------------------------------------
# Pointed chromatic symmetric functions

def _as_rooted(g, root=None) -> RootedGraph:
    if isinstance(g, RootedGraph):
        return g if root is None else RootedGraph(g.graph, root)
    if root is None:
        raise ValueError("a root vertex is required")
    return RootedGraph(g, root)


def pointed_csf(g, root: int | None = None, mode: str = "subset-sum", max_edges: int = MAX_EDGES) -> PointedSymFun:
    """X_{G,v} in Lambda[t] by the subset sum or by deletion-contraction at the root."""
    rg = _as_rooted(g, root)
    if mode == "subset-sum":
        return PointedSymFun(_subset_sum(rg.graph, rg.root, max_edges))
    if mode == "deletion-contraction":
        _check_bound(len(rg.graph.edges), max_edges)
        return _pointed_dc(rg.graph, rg.root)
    raise ValueError(f"unknown mode {mode!r}")


def _pointed_dc(g: Graph, v: int) -> PointedSymFun:
    if g.has_loop():
        return PointedSymFun()
    g = g.simplified()
    at_root = [e for e in g.edges if v in e]
    if not at_root:
        rest = delete_vertex(g, v)
        return PointedSymFun.from_symfun(csf(rest, method="dc"))
    e = at_root[-1]
    deleted = Graph(g.n, tuple(x for x in g.edges if x is not e))
    contracted, root = contract(deleted, e, keep=v)
    return _pointed_dc(deleted, v) - PointedSymFun.t_power(1) * _pointed_dc(contracted, root)


def delete_vertex(g: Graph, v: int) -> Graph:
    shift = lambda x: x - 1 if x > v else x
    return Graph(g.n - 1, tuple((shift(a), shift(b)) for a, b in g.edges if v not in (a, b)))


def contract(g: Graph, e: Edge, keep: int | None = None) -> tuple[Graph, int]:
    """Merge the endpoints of ``e`` (which need not be among g's edges) into ``keep``.

    Returns the contracted multigraph and the new label of the merged vertex.
    Other copies of ``e`` become loops.
    """
    a, b = e
    keep = a if keep is None else keep
    gone = b if keep == a else a
    relabel = {}
    k = 0
    for x in range(1, g.n + 1):
        if x == gone:
            continue
        k += 1
        relabel[x] = k
    relabel[gone] = relabel[keep]
    return Graph(g.n - 1, tuple((relabel[x], relabel[y]) for x, y in g.edges)), relabel[keep]


def wedge(g: RootedGraph, h: RootedGraph) -> RootedGraph:
    """Identify the roots; g keeps its labels, h's other vertices follow in order."""
    relabel = {h.root: g.root}
    k = g.graph.n
    for x in range(1, h.graph.n + 1):
        if x != h.root:
            k += 1
            relabel[x] = k
    edges = g.graph.edges + tuple((relabel[a], relabel[b]) for a, b in h.graph.edges)
    return RootedGraph(Graph(k, edges), g.root)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.edges + tuple((a + g.n, b + g.n) for a, b in h.edges))


# ---------------------------------------------------------------------------
# Structure

def is_acyclic(g: AnyGraph) -> tuple[bool, list | None]:
    """Forest / hyperforest test on the vertex-edge incidence graph.

    The witness is the alternating sequence [v1, e1, v2, ..., ek, v1] with
    edges given by their index in ``g.edges``.  A graph loop counts as a cycle.
    """
    edges = _edge_sets(g)
    if isinstance(g, Graph):
        for j, (a, b) in enumerate(edges):
            if a == b:
                return False, [a, j, a]
    adj: dict = defaultdict(list)
    for j, e in enumerate(edges):
        for v in set(e):
            adj[("v", v)].append(("e", j))
            adj[("e", j)].append(("v", v))
    parent: dict = {}
    for start in [("v", v) for v in range(1, g.n + 1)] + [("e", j) for j in range(len(edges))]:
        if start in parent:
            continue
        parent[start] = None
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y == parent[x]:
                    continue
                if y in parent:
                    return False, _cycle_witness(parent, x, y)
                parent[y] = x
                stack.append(y)
    return True, None


def _ancestors(parent, x):
    out = []
    while x is not None:
        out.append(x)
        x = parent[x]
    return out


def _cycle_witness(parent, x, y) -> list:
    px, py = _ancestors(parent, x), _ancestors(parent, y)
    common = set(px) & set(py)
    loop = [z for z in px if z not in common]
    meet = next(z for z in px if z in common)
    back = [z for z in py if z not in common]
    seq = loop + [meet] + back[::-1]
    # rotate to start at a vertex
    k = next(i for i, z in enumerate(seq) if z[0] == "v")
    seq = seq[k:] + seq[:k]
    return [z[1] for z in seq] + [seq[0][1]]


def line_graph(g: AnyGraph) -> Graph:
    edges = [set(e) for e in _edge_sets(g)]
    pairs = [(i + 1, j + 1) for i, j in itertools.combinations(range(len(edges)), 2) if edges[i] & edges[j]]
    return Graph(len(edges), tuple(pairs))


def edge_two_coloring(g: AnyGraph) -> list[int] | None:
    """A proper 2-colouring (colour per edge index) of the line graph, or None."""
    lg = line_graph(g)
    colour = [-1] * (lg.n + 1)
    adj = defaultdict(list)
    for a, b in lg.edges:
        adj[a].append(b)
        adj[b].append(a)
    for s in range(1, lg.n + 1):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour[1:]


def perfect_elimination_order(g: Graph) -> list[int] | None:
    """Vertices ordered so that each one's later neighbours form a clique, or None."""
    simple = g.simplified()
    adj = {v: simple.neighbours(v) for v in range(1, g.n + 1)}
    weight = {v: 0 for v in adj}
    visited: list[int] = []
    while len(visited) < g.n:
        v = max((u for u in adj if u not in visited), key=lambda u: (weight[u], -u))
        visited.append(v)
        for u in adj[v]:
            if u not in visited:
                weight[u] += 1
    order = visited[::-1]
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if any(b not in adj[a] for a, b in itertools.combinations(later, 2)):
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_order(g) is not None


def chordal_edge_order(g: Graph) -> list[Edge] | None:
    """An edge order under which the broken circuit complex factors, if chordal."""
    order = perfect_elimination_order(g)
    if order is None:
        return None
    pos = {v: i for i, v in enumerate(order)}
    edges = [tuple(sorted(e, key=pos.get)) for e in g.simplified().edges]
    return [tuple(sorted(e)) for e in sorted(edges, key=lambda e: (pos[e[0]], pos[e[1]]))]


def contains_broken_circuit(edges: Sequence[Edge], labels: Mapping[Edge, int], subset: Iterable[Edge]) -> bool:
    """Does ``subset`` contain a circuit minus its largest edge?

    Equivalently: some edge e has its endpoints joined by a path of
    ``subset`` edges all labelled below e.
    """
    subset = list(subset)
    if not edges or not subset:
        return False
    top = max(max(x) for x in edges)
    for e in edges:
        dsu = _RollbackDSU(top)
        for f in subset:
            if labels[f] < labels[e]:
                dsu.union(*f)
        if dsu.find(e[0]) == dsu.find(e[1]):
            return True
    return False


def chordal_factorization(g: Graph, order: Sequence[Edge] | None = None) -> list[list[Edge]] | None:
    """Zero-dimensional join factors of the broken circuit complex, or None.

    ``order`` lists the edges from smallest to largest label; by default the
    lexicographic order is tried, then one built from a perfect elimination
    ordering.  Factors are returned
    sorted by decreasing largest label, each factor listed in label order.
    """
    found = factorization_with_order(g, order)
    return None if found is None else found[1]


def factorization_with_order(g: Graph, order: Sequence[Edge] | None = None):
    """(edge order used, factors) for chordal_factorization, or None."""
    if not g.is_simple():
        raise ValueError("chordal factorization needs a simple graph")
    if order is None:
        lex = sorted(tuple(sorted(e)) for e in g.edges)
        found = factorization_with_order(g, lex)
        if found is not None:
            return found
        order = chordal_edge_order(g)
        if order is None:
            return None
    order = [tuple(sorted(e)) for e in order]
    if sorted(order) != sorted(tuple(sorted(e)) for e in g.edges):
        raise ValueError("order must list every edge exactly once")
    labels = {e: k for k, e in enumerate(order)}
    edge_set = set(order)
    # two-element broken circuits: adjacent edges whose third triangle edge is larger
    block_of = {e: {e} for e in order}
    pairs = set()
    for e, f in itertools.combinations(order, 2):
        shared = set(e) & set(f)
        if len(shared) != 1:
            continue
        third = tuple(sorted((set(e) | set(f)) - shared))
        if third in edge_set and labels[third] > max(labels[e], labels[f]):
            pairs.add(frozenset((e, f)))
    for pair in pairs:
        e, f = tuple(pair)
        merged = block_of[e] | block_of[f]
        for x in merged:
            block_of[x] = merged
    blocks = {frozenset(b) for b in block_of.values()}
    # cluster condition: every pair inside a block is a broken circuit
    for b in blocks:
        for e, f in itertools.combinations(b, 2):
            if frozenset((e, f)) not in pairs:
                return None
    factors = [sorted(b, key=labels.get) for b in blocks]
    factors.sort(key=lambda b: -labels[b[-1]])
    # every facet of the join must avoid broken circuits
    for facet in itertools.product(*factors):
        if contains_broken_circuit(order, labels, facet):
            return None
    return order, factors


def broken_circuit_complex(g: Graph, order: Sequence[Edge]) -> set[frozenset]:
    """All faces, by brute force over edge subsets (small graphs only)."""
    order = [tuple(sorted(e)) for e in order]
    labels = {e: k for k, e in enumerate(order)}
    faces = set()
    for r in range(len(order) + 1):
        for s in itertools.combinations(order, r):
            if not contains_broken_circuit(order, labels, s):
                faces.add(frozenset(s))
    return faces


def join_faces(factors: Sequence[Sequence[Edge]]) -> set[frozenset]:
    faces = {frozenset()}
    for block in factors:
        faces = faces | {f | {e} for f in faces for e in block}
    return faces


# ---------------------------------------------------------------------------
# Unit interval graphs

def unit_interval(m: Sequence[int]) -> Graph:
    """G(m): edge (i, j) whenever i < j <= m_i."""
    n = len(m)
    m = [int(x) for x in m]
    for i, x in enumerate(m, start=1):
        if not i <= x <= n:
            raise ValueError(f"need {i} <= m_{i} <= {n}, got {x}")
    if any(m[i] > m[i + 1] for i in range(n - 1)):
        raise ValueError("m must be weakly increasing")
    return Graph(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, m[i - 1] + 1)))


def unit_interval_sequences(n: int) -> list[tuple[int, ...]]:
    out = []

    def go(prefix: list[int]) -> None:
        i = len(prefix) + 1
        if i > n:
            out.append(tuple(prefix))
            return
        low = max(i, prefix[-1] if prefix else 1)
        for x in range(low, n + 1):
            prefix.append(x)
            go(prefix)
            prefix.pop()

    go([])
    return out


def enumerate_graphs(kind: str, n: int):
    """Representatives for the censuses: trees, forests (Graph objects) or m sequences."""
    from .canon import forests, trees

    if n > 12:
        raise ValueError("enumeration limited to n <= 12")
    if kind == "trees":
        return [Graph(m, edges) for m, edges in trees(n)]
    if kind == "forests":
        return [Graph(m, edges) for m, edges, _ in forests(n)]
    if kind == "unit-interval-sequences":
        return unit_interval_sequences(n)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# Random corpora

def random_hyperforest(n: int, rng, max_edge: int = 4) -> Hypergraph:
    """Grow a hyperforest: each new edge meets every existing component in at most one vertex."""
    comp = {v: v for v in range(1, n + 1)}
    edges = []
    if n < 2:
        return Hypergraph(n, ())
    for _ in range(rng.randint(0, n)):
        size = rng.randint(2, min(max_edge, n))
        verts = rng.sample(range(1, n + 1), size)
        labels = [comp[v] for v in verts]
        if len(set(labels)) != len(labels):
            continue
        edges.append(tuple(sorted(verts)))
        for v in range(1, n + 1):
            if comp[v] in labels:
                comp[v] = labels[0]
    return Hypergraph(n, tuple(edges))


def random_graph(n: int, rng, p: float = 0.4) -> Graph:
    return Graph(n, tuple(e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p))
