"""Integer partitions, standard tableaux and symmetric group characters.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty partition is ``()``.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalise a sequence of parts (sorting is not implied)."""
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def sorted_partition(parts: Sequence[int]) -> Partition:
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. (3), (2,1), (1,1,1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n: int, bound: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence (independent of the enumerator)."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def multiplicities(lam: Partition) -> Counter:
    return Counter(lam)


def z_of(lam: Partition) -> int:
    """Size of the centralizer of a permutation with cycle type ``lam``."""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def sign_of(lam: Partition) -> int:
    """Sign of a permutation of cycle type ``lam``."""
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def union(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def hook_lengths(lam: Partition) -> list[int]:
    lamc = conjugate(lam)
    return [lam[r] - c - 1 + lamc[c] - r for r in range(len(lam)) for c in range(lam[r])]


@lru_cache(maxsize=None)
def dim_irrep(lam: Partition) -> int:
    """f^lam via the hook length formula."""
    n = sum(lam)
    return factorial(n) // prod(hook_lengths(lam))


# ---------------------------------------------------------------------------
# Corner moves

def down_moves(lam: Partition) -> list[tuple[int, Partition]]:
    """Pairs (i, lam with one copy of the part i replaced by i-1), one per distinct part.

    The copy that changes is the last one, so the removed cell is a corner.
    Parts are listed in decreasing order of i.
    """
    moves = []
    for r, part in enumerate(lam):
        if r + 1 == len(lam) or lam[r + 1] < part:
            new = list(lam)
            new[r] -= 1
            moves.append((part, tuple(p for p in new if p)))
    return moves


def up_moves(lam: Partition) -> list[tuple[int, Partition]]:
    """Pairs (i, lam with one copy of the part i replaced by i+1), one per distinct part."""
    moves = []
    for r, part in enumerate(lam):
        if r == 0 or lam[r - 1] > part:
            new = list(lam)
            new[r] += 1
            moves.append((part, tuple(new)))
    return moves


def lower(lam: Partition, i: int) -> Partition:
    for part, mu in down_moves(lam):
        if part == i:
            return mu
    raise ValueError(f"{i} is not a part of {lam}")


def raise_part(lam: Partition, i: int) -> Partition:
    for part, mu in up_moves(lam):
        if part == i:
            return mu
    raise ValueError(f"{i} is not a part of {lam}")


def removal_cell(lam: Partition, i: int) -> tuple[int, int]:
    """(row, col), 0-based, of the cell deleted by ``lower(lam, i)``."""
    for r in range(len(lam) - 1, -1, -1):
        if lam[r] == i:
            return (r, i - 1)
    raise ValueError(f"{i} is not a part of {lam}")


def corners(lam: Partition) -> list[tuple[int, int]]:
    """Removable cells (row, col), top row first."""
    return [(r, lam[r] - 1) for r in range(len(lam)) if r + 1 == len(lam) or lam[r + 1] < lam[r]]


def addable_cells(lam: Partition) -> list[tuple[int, int]]:
    cells = []
    for r in range(len(lam) + 1):
        row = lam[r] if r < len(lam) else 0
        if r == 0 or lam[r - 1] > row:
            cells.append((r, row))
    return cells


def remove_cell(lam: Partition, cell: tuple[int, int]) -> Partition:
    r, _ = cell
    new = list(lam)
    new[r] -= 1
    return tuple(p for p in new if p)


def add_cell(lam: Partition, cell: tuple[int, int]) -> Partition:
    r, _ = cell
    new = list(lam)
    if r == len(new):
        new.append(1)
    else:
        new[r] += 1
    return tuple(new)


def content(cell: tuple[int, int]) -> int:
    return cell[1] - cell[0]


# ---------------------------------------------------------------------------
# Standard tableaux

class StandardTableau(NamedTuple):
    """A standard Young tableau stored by the row index of each entry 1..n."""

    shape: Partition
    rows: tuple[int, ...]

    def cells(self) -> list[tuple[int, int]]:
        """Cell (row, col) of each entry 1..n."""
        lengths: Counter = Counter()
        out = []
        for r in self.rows:
            out.append((r, lengths[r]))
            lengths[r] += 1
        return out

    def contents(self) -> list[int]:
        return [content(c) for c in self.cells()]

    def entries(self) -> list[list[int]]:
        filling: list[list[int]] = [[] for _ in self.shape]
        for k, r in enumerate(self.rows, start=1):
            filling[r].append(k)
        return filling


def is_standard(shape: Partition, filling: Sequence[Sequence[int]]) -> bool:
    n = sum(shape)
    if [len(row) for row in filling] != list(shape):
        return False
    if sorted(x for row in filling for x in row) != list(range(1, n + 1)):
        return False
    for r, row in enumerate(filling):
        for c, x in enumerate(row):
            if c and row[c - 1] >= x:
                return False
            if r and filling[r - 1][c] >= x:
                return False
    return True


@lru_cache(maxsize=None)
def standard_tableaux(shape: Partition) -> tuple[StandardTableau, ...]:
    """Standard tableaux of ``shape``, ordered by the corner holding n, then recursively."""
    if not shape:
        return (StandardTableau((), ()),)
    out = []
    for cell in corners(shape):
        smaller = remove_cell(shape, cell)
        for t in standard_tableaux(smaller):
            out.append(StandardTableau(shape, t.rows + (cell[0],)))
    return tuple(out)


# ---------------------------------------------------------------------------
# Characters

def _beta_set(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + ell - 1 - i for i in range(ell))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    ell = len(b)
    return tuple(p for p in (b[i] - (ell - 1 - i) for i in range(ell)) if p)


def rim_hooks(lam: Partition, r: int) -> list[tuple[int, Partition]]:
    """All (sign, lam minus a rim hook of length r), sign = (-1)^height."""
    beta = _beta_set(lam)
    present = set(beta)
    out = []
    for b in beta:
        if b - r >= 0 and (b - r) not in present:
            height = sum(1 for x in beta if b - r < x < b)
            new = [x for x in beta if x != b] + [b - r]
            out.append((-1 if height % 2 else 1, _from_beta(new)))
    return out


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum(sign * _mn(smaller, rest) for sign, smaller in rim_hooks(lam, r))


def character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated at cycle type mu, by the Murnaghan-Nakayama rule."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(tuple(lam), sorted_partition(mu))
