"""The group algebra Q[S_n]: sparse elements, chromatic operators, Frobenius maps.

Permutations are one-line tuples ``p`` with ``p[i-1] = p(i)``.  Products
compose right to left, ``(s t)(x) = s(t(x))``, and operator products over an
edge list multiply left to right in list order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

import numpy as np

from .partitions import (
    Partition,
    character,
    dim_irrep,
    down_moves,
    partitions_of,
    sorted_partition,
)
from .symfun import PointedSymFun, SymFun, _accumulate

Perm = tuple[int, ...]


# ---------------------------------------------------------------------------
# Permutations

def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(s: Perm, t: Perm) -> Perm:
    return tuple(s[x - 1] for x in t)


def inverse_perm(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, x in enumerate(s, start=1):
        out[x - 1] = i
    return tuple(out)


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = j, i
    return tuple(p)


def cycle_perm(n: int, cyc: Sequence[int]) -> Perm:
    """The cycle c1 -> c2 -> ... -> c1."""
    p = list(range(1, n + 1))
    for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
        p[a - 1] = b
    return tuple(p)


def cycles(s: Perm, points: Iterable[int] | None = None) -> list[list[int]]:
    pts = sorted(points) if points is not None else range(1, len(s) + 1)
    seen, out = set(), []
    for start in pts:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = s[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = s[x - 1]
        out.append(cyc)
    return out


def cycle_type(s: Perm, points: Iterable[int] | None = None) -> Partition:
    return sorted_partition(len(c) for c in cycles(s, points))


def marked_cycle_type(s: Perm, v: int, points: Iterable[int] | None = None) -> tuple[Partition, int]:
    """(cycle type away from v, length of the cycle through v)."""
    rest, through = [], 0
    for c in cycles(s, points):
        if v in c:
            through = len(c)
        else:
            rest.append(len(c))
    return sorted_partition(rest), through


def sign(s: Perm) -> int:
    return -1 if sum(len(c) - 1 for c in cycles(s)) % 2 else 1


def support(s: Perm) -> set[int]:
    return {i for i, x in enumerate(s, start=1) if x != i}


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(1, n + 1)))


def perms_fixing(n: int, fixed: Iterable[int]) -> list[Perm]:
    fixed = set(fixed)
    moving = [x for x in range(1, n + 1) if x not in fixed]
    out = []
    for images in itertools.permutations(moving):
        p = list(range(1, n + 1))
        for a, b in zip(moving, images):
            p[a - 1] = b
        out.append(tuple(p))
    return out


def descent_word(s: Perm) -> list[int]:
    """Indices j with s = s_{j1} s_{j2} ... s_{jk}, s_j = (j j+1), k = inversions."""
    word = []
    s = list(s)
    while True:
        for j in range(len(s) - 1):
            if s[j] > s[j + 1]:
                # s = s' * s_j with s' = s * s_j having one fewer inversion
                s[j], s[j + 1] = s[j + 1], s[j]
                word.append(j + 1)
                break
        else:
            break
    return word[::-1]


# ---------------------------------------------------------------------------
# Sparse elements

class GroupAlgebraElement:
    """Finite sum of permutations of [n] with rational coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Perm, object] | None = None):
        self.n = n
        self.coeffs: dict[Perm, Fraction] = {}
        for p, c in (coeffs or {}).items():
            p = tuple(p)
            if len(p) != n or sorted(p) != list(range(1, n + 1)):
                raise ValueError(f"{p} is not a permutation of 1..{n}")
            _accumulate(self.coeffs, p, Fraction(c))

    @classmethod
    def identity(cls, n: int, c=1) -> "GroupAlgebraElement":
        return cls(n, {identity_perm(n): c})

    @classmethod
    def of(cls, p: Perm, c=1) -> "GroupAlgebraElement":
        return cls(len(p), {tuple(p): c})

    def _check(self, other: "GroupAlgebraElement") -> None:
        if other.n != self.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement.identity(self.n, other)
        self._check(other)
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            _accumulate(out, p, c)
        return GroupAlgebraElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GroupAlgebraElement.identity(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "GroupAlgebraElement":
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {p: v * c for p, v in self.coeffs.items()} if c else {})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                _accumulate(out, compose(p, q), a * b)
        return GroupAlgebraElement(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = GroupAlgebraElement.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def star(self) -> "GroupAlgebraElement":
        """Adjoint for the inner product making permutations orthonormal."""
        return GroupAlgebraElement(self.n, {inverse_perm(p): c for p, c in self.coeffs.items()})

    def identity_coeff(self) -> Fraction:
        return self.coeffs.get(identity_perm(self.n), Fraction(0))

    def conjugate_by(self, s: Perm) -> "GroupAlgebraElement":
        si = inverse_perm(s)
        return GroupAlgebraElement(self.n, {compose(compose(s, p), si): c for p, c in self.coeffs.items()})

    def embed(self, n: int) -> "GroupAlgebraElement":
        """View as an element of S_n for n >= self.n (new points fixed)."""
        tail = tuple(range(self.n + 1, n + 1))
        return GroupAlgebraElement(n, {p + tail: c for p, c in self.coeffs.items()})

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p, c in sorted(self.coeffs.items()):
            cyc = [x for x in cycles(p) if len(x) > 1]
            name = "".join("(" + " ".join(map(str, x)) + ")" for x in cyc) or "1"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


def one_minus(n: int, perms: Iterable[Perm], weight=1) -> GroupAlgebraElement:
    """1 - weight * (sum of perms)."""
    out = GroupAlgebraElement.identity(n)
    for p in perms:
        out = out - GroupAlgebraElement.of(p, weight)
    return out


class ProductElement:
    """scalar * f_1 * f_2 * ... kept factored (matrices are built factor by factor)."""

    def __init__(self, n: int, factors: Sequence[GroupAlgebraElement], scalar=1):
        self.n = n
        self.factors = list(factors)
        self.scalar = Fraction(scalar)
        for f in self.factors:
            if f.n != n:
                raise ValueError("factor size mismatch")

    def expand(self) -> GroupAlgebraElement:
        out = GroupAlgebraElement.identity(self.n, self.scalar)
        for f in self.factors:
            out = out * f
        return out

    def normalized(self) -> "ProductElement":
        return ProductElement(self.n, self.factors, 1)


def _edge_order(edges: Sequence, order: Sequence | None) -> list:
    if order is None:
        return list(edges)
    order = [tuple(e) for e in order]
    if sorted(tuple(sorted(e)) for e in order) != sorted(tuple(sorted(e)) for e in edges):
        raise ValueError("order must be a permutation of the edges")
    return order


def forest_product(graph, order: Sequence | None = None) -> ProductElement:
    """n! prod (1 - (i j)) over the edges in the given order, kept factored."""
    n = graph.n
    factors = [one_minus(n, [transposition(n, a, b)]) for a, b in _edge_order(graph.edges, order)]
    return ProductElement(n, factors, factorial(n))


def alpha_forest(graph, order: Sequence | None = None) -> GroupAlgebraElement:
    return forest_product(graph, order).expand()


def hyperedge_cycles(e: Sequence[int], n: int) -> list[Perm]:
    e = sorted(e)
    first, rest = e[0], e[1:]
    return [cycle_perm(n, [first, *tail]) for tail in itertools.permutations(rest)]


def alpha_hyperedge(e: Sequence[int], n: int) -> GroupAlgebraElement:
    """1 - (1/(|e|-1)!) times the sum of the cycles with support e."""
    e = sorted(set(e))
    if not e or e[0] < 1 or e[-1] > n:
        raise ValueError(f"hyperedge {e} outside 1..{n}")
    if len(e) == 1:
        return GroupAlgebraElement.identity(n)
    return one_minus(n, hyperedge_cycles(e, n), Fraction(1, factorial(len(e) - 1)))


def hyperforest_product(h, order: Sequence | None = None) -> ProductElement:
    n = h.n
    edges = list(h.edges) if order is None else [tuple(sorted(e)) for e in order]
    return ProductElement(n, [alpha_hyperedge(e, n) for e in edges], factorial(n))


def alpha_hyperforest(h, order: Sequence | None = None) -> GroupAlgebraElement:
    return hyperforest_product(h, order).expand()


def chordal_product(graph, order: Sequence | None = None) -> ProductElement:
    from .graphs import chordal_factorization

    factors = chordal_factorization(graph, order)
    if factors is None:
        raise ValueError("the broken circuit complex does not factor completely (graph not chordal or bad order)")
    n = graph.n
    return ProductElement(
        n, [one_minus(n, [transposition(n, a, b) for a, b in block]) for block in factors], factorial(n)
    )


def alpha_chordal(graph, order: Sequence | None = None) -> GroupAlgebraElement:
    return chordal_product(graph, order).expand()


# ---------------------------------------------------------------------------
# Frobenius maps

def frobenius_ch(alpha: GroupAlgebraElement) -> SymFun:
    out: dict = {}
    for p, c in alpha.coeffs.items():
        _accumulate(out, cycle_type(p), c)
    scale = Fraction(1, factorial(alpha.n))
    return SymFun("p", {k: c * scale for k, c in out.items()})


def pointed_ch(alpha: GroupAlgebraElement, v: int, points: Iterable[int] | None = None) -> PointedSymFun:
    """Pointed Frobenius map at v, optionally restricted to a ground set ``points``."""
    pts = sorted(points) if points is not None else list(range(1, alpha.n + 1))
    if v not in pts:
        raise ValueError(f"root {v} not in the ground set")
    out: dict = {}
    for p, c in alpha.coeffs.items():
        rest, through = marked_cycle_type(p, v, pts)
        _accumulate(out, (rest, through - 1), c)
    scale = Fraction(1, factorial(len(pts) - 1))
    return PointedSymFun({k: c * scale for k, c in out.items()})


def sign_element(n: int, points: Iterable[int] | None = None) -> GroupAlgebraElement:
    group = all_perms(n) if points is None else perms_fixing(n, set(range(1, n + 1)) - set(points))
    return GroupAlgebraElement(n, {p: sign(p) for p in group})


# ---------------------------------------------------------------------------
# Dense arithmetic over all of S_n (n <= 8)

class DenseSn:
    """Index tables for S_n so products can run as numpy vector operations."""

    def __init__(self, n: int):
        self.n = n
        self.perms = all_perms(n)
        self.index = {p: i for i, p in enumerate(self.perms)}
        self.array = np.array(self.perms, dtype=np.int64) - 1 if n else np.zeros((1, 0), np.int64)
        weights = n ** np.arange(n, dtype=np.int64)
        self._weights = weights
        codes = self.array @ weights
        self._order = np.argsort(codes)
        self._codes = codes[self._order]

    def lookup(self, arr: np.ndarray) -> np.ndarray:
        codes = arr @ self._weights
        return self._order[np.searchsorted(self._codes, codes)]

    @lru_cache(maxsize=None)
    def right_index(self, t: Perm) -> np.ndarray:
        """idx[k] = index of perms[k] * t."""
        t0 = np.array(t, dtype=np.int64) - 1
        return self.lookup(self.array[:, t0])

    @lru_cache(maxsize=None)
    def left_index(self, s: Perm) -> np.ndarray:
        """idx[k] = index of s * perms[k]."""
        s0 = np.array(s, dtype=np.int64) - 1
        return self.lookup(s0[self.array])

    def to_dense(self, alpha: GroupAlgebraElement, dtype=object) -> np.ndarray:
        vec = np.zeros(len(self.perms), dtype=dtype)
        for p, c in alpha.coeffs.items():
            vec[self.index[p]] = c
        return vec

    def from_dense(self, vec: np.ndarray) -> GroupAlgebraElement:
        nz = np.nonzero(vec)[0]
        return GroupAlgebraElement(self.n, {self.perms[k]: Fraction(vec[k]) if not isinstance(vec[k], Fraction) else vec[k] for k in nz})

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.zeros_like(b) if b.dtype == object else np.zeros(len(b), dtype=np.result_type(a, b))
        if out.dtype == object:
            out[:] = 0
        for k in np.nonzero(a)[0]:
            idx = self.left_index(self.perms[k])
            out[idx] += a[k] * b
        return out

    def right_multiply_one_minus(self, vec: np.ndarray, t: Perm) -> np.ndarray:
        """vec * (1 - t): coefficient at s becomes vec[s] - vec[s t^-1]."""
        idx = self.right_index(inverse_perm(t))
        return vec - vec[idx]


@lru_cache(maxsize=None)
def dense_sn(n: int) -> DenseSn:
    if n > 8:
        raise ValueError("dense S_n arithmetic limited to n <= 8")
    return DenseSn(n)


def identity_coeff_powers(graph, order: Sequence | None = None, k_max: int = 10) -> list[int]:
    """[1] abar^k for k = 1..k_max, abar = prod (1 - (i j)) without the n! factor."""
    n = graph.n
    edges = _edge_order(graph.edges, order)
    dense = dense_sn(n)
    transpositions = [transposition(n, a, b) for a, b in edges]
    # entries of abar^k are bounded by 2^(|E| k)
    dtype = np.int64 if len(edges) * k_max < 62 else object
    vec = np.zeros(len(dense.perms), dtype=dtype)
    vec[dense.index[identity_perm(n)]] = 1
    ident = dense.index[identity_perm(n)]
    out = []
    for _ in range(k_max):
        for t in transpositions:
            vec = dense.right_multiply_one_minus(vec, t)
        out.append(int(vec[ident]))
    return out


def count_matchings(graph) -> int:
    """Number of matchings (including the empty one), by brute force."""
    edges = [tuple(e) for e in graph.edges]
    total = 0
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            verts = [v for e in sub for v in e]
            if len(verts) == len(set(verts)):
                total += 1
    return total


# ---------------------------------------------------------------------------
# Idempotents

IDEMPOTENT_MAX_N = 7


def idempotent(lam: Partition, n: int | None = None, points: Iterable[int] | None = None) -> GroupAlgebraElement:
    """(f^lam/|G|) sum chi^lam(g) g over the symmetric group of ``points`` inside S_n."""
    k = sum(lam)
    n = k if n is None else n
    pts = sorted(points) if points is not None else list(range(1, k + 1))
    if len(pts) != k:
        raise ValueError("ground set size must equal |lam|")
    if n > IDEMPOTENT_MAX_N:
        raise ValueError(f"explicit idempotents limited to n <= {IDEMPOTENT_MAX_N}")
    group = perms_fixing(n, set(range(1, n + 1)) - set(pts))
    scale = Fraction(dim_irrep(lam), factorial(k))
    return GroupAlgebraElement(n, {g: scale * character(lam, cycle_type(g, pts)) for g in group if character(lam, cycle_type(g, pts))})


def idempotents(n: int) -> dict[Partition, GroupAlgebraElement]:
    return {lam: idempotent(lam) for lam in partitions_of(n)}


def _dense_product(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Exact product via integer numpy arrays after clearing denominators."""
    dense = dense_sn(a.n)
    da = _common_denominator(a)
    db = _common_denominator(b)
    va = dense.to_dense(a.scale(da), dtype=object).astype(np.int64)
    vb = dense.to_dense(b.scale(db), dtype=object).astype(np.int64)
    prod = dense.multiply(va, vb)
    scale = Fraction(1, da * db)
    return GroupAlgebraElement(a.n, {dense.perms[k]: scale * int(prod[k]) for k in np.nonzero(prod)[0]})


def _common_denominator(a: GroupAlgebraElement) -> int:
    from math import lcm

    d = 1
    for c in a.coeffs.values():
        d = lcm(d, c.denominator)
    return d


def pointed_idempotent(lam: Partition, i: int, v: int | None = None) -> GroupAlgebraElement:
    """eps_{lam, i} = eps_{lam with i lowered} (on [n] minus v) times eps_lam."""
    n = sum(lam)
    v = n if v is None else v
    lowered = dict(down_moves(lam))
    if i not in lowered:
        raise ValueError(f"{i} is not a part of {lam}")
    others = [x for x in range(1, n + 1) if x != v]
    small = idempotent(lowered[i], n, others)
    return _dense_product(small, idempotent(lam))


def pointed_idempotents(n: int, v: int | None = None) -> dict[tuple[Partition, int], GroupAlgebraElement]:
    return {(lam, i): pointed_idempotent(lam, i, v) for lam in partitions_of(n) for i, _ in down_moves(lam)}


# ---------------------------------------------------------------------------
# The circle product

CIRC_MAX_N = 7


def circ(alpha: GroupAlgebraElement, beta: GroupAlgebraElement, n: int) -> GroupAlgebraElement:
    """alpha on [n] and beta on [n, N] (both given inside S_N), conjugation-averaged over Stab(n)."""
    big = beta.n
    if alpha.n != big:
        alpha = alpha.embed(big)
    m = big - n + 1
    if big > CIRC_MAX_N:
        raise ValueError(f"circle product limited to total size {CIRC_MAX_N}")
    for p in alpha.coeffs:
        if support(p) - set(range(1, n + 1)):
            raise ValueError("alpha must act on 1..n")
    for p in beta.coeffs:
        if support(p) - set(range(n, big + 1)):
            raise ValueError(f"beta must act on {n}..{big}")
    product = alpha * beta
    out: dict = {}
    for s in perms_fixing(big, [n]):
        si = inverse_perm(s)
        for p, c in product.coeffs.items():
            _accumulate(out, compose(compose(s, p), si), c)
    scale = Fraction(1, factorial(n - 1) * factorial(m - 1))
    return GroupAlgebraElement(big, {p: c * scale for p, c in out.items()})


# ---------------------------------------------------------------------------
# Regular representation (small n)

def regular_matrix(alpha: GroupAlgebraElement):
    """Matrix of x -> alpha x on Q[S_n] in the basis all_perms(n)."""
    from . import linalg

    if alpha.n > 5:
        raise ValueError("regular representation matrices limited to n <= 5")
    perms = all_perms(alpha.n)
    index = {p: k for k, p in enumerate(perms)}
    m = linalg.zeros(len(perms))
    for p, c in alpha.coeffs.items():
        for k, q in enumerate(perms):
            r = index[compose(p, q)]
            m[r, k] = m[r, k] + linalg.fq(c)
    return m
