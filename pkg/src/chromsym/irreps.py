"""Young's seminormal form and per-irreducible spectra of group-algebra elements.

Basis vectors are indexed by ``standard_tableaux(lam)``.  For the adjacent
transposition s_j = (j j+1) and a tableau T, with r the content of j+1 minus
the content of j,

    s_j T = (1/r) T + c T'        (T' = s_j T when that is standard)

where c = 1 if r > 0 and c = 1 - 1/r^2 if r < 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg
from .group_algebra import (
    GroupAlgebraElement,
    ProductElement,
    descent_word,
)
from .partitions import Partition, partitions_of, standard_tableaux

SPECTRUM_MAX_N = 10


@lru_cache(maxsize=None)
def _tableau_index(lam: Partition) -> dict:
    return {t.rows: k for k, t in enumerate(standard_tableaux(lam))}


@lru_cache(maxsize=None)
def generator_action(lam: Partition, j: int) -> tuple:
    """Sparse columns of rho(s_j): for each basis index, a tuple of (row, value)."""
    index = _tableau_index(lam)
    cols = []
    for t in standard_tableaux(lam):
        cont = t.contents()
        r = cont[j] - cont[j - 1]
        entries = [(index[t.rows], Fraction(1, r))]
        if abs(r) > 1:
            swapped = list(t.rows)
            swapped[j - 1], swapped[j] = swapped[j], swapped[j - 1]
            other = index[tuple(swapped)]
            entries.append((other, Fraction(1) if r > 0 else 1 - Fraction(1, r * r)))
        cols.append(tuple(entries))
    return tuple(cols)


@lru_cache(maxsize=None)
def generator_matrix(lam: Partition, j: int):
    d = len(standard_tableaux(lam))
    m = linalg.zeros(d)
    for col, entries in enumerate(generator_action(lam, j)):
        for row, v in entries:
            m[row, col] = linalg.fq(v)
    return m


@lru_cache(maxsize=None)
def generator_float(lam: Partition, j: int) -> np.ndarray:
    d = len(standard_tableaux(lam))
    m = np.zeros((d, d))
    for col, entries in enumerate(generator_action(lam, j)):
        for row, v in entries:
            m[row, col] = float(v)
    return m


@lru_cache(maxsize=4096)
def rho(lam: Partition, perm: tuple[int, ...]):
    """Exact rho^lam(perm) as a flint matrix."""
    d = len(standard_tableaux(lam))
    m = linalg.identity(d)
    for j in descent_word(perm):
        m = m * generator_matrix(lam, j)
    return m


@lru_cache(maxsize=4096)
def rho_float(lam: Partition, perm: tuple[int, ...]) -> np.ndarray:
    d = len(standard_tableaux(lam))
    m = np.eye(d)
    for j in descent_word(perm):
        m = m @ generator_float(lam, j)
    return m


def irrep_matrix(lam: Partition, alpha: GroupAlgebraElement | ProductElement):
    """Exact rho^lam(alpha)."""
    if isinstance(alpha, ProductElement):
        m = linalg.identity(len(standard_tableaux(lam))) * linalg.fq(alpha.scalar)
        for f in alpha.factors:
            m = m * irrep_matrix(lam, f)
        return m
    if sum(lam) != alpha.n:
        raise ValueError(f"|{lam}| != {alpha.n}")
    d = len(standard_tableaux(lam))
    m = linalg.zeros(d)
    for p, c in alpha.coeffs.items():
        m = m + rho(lam, p) * linalg.fq(c)
    return m


def irrep_float(lam: Partition, alpha: GroupAlgebraElement | ProductElement) -> np.ndarray:
    if isinstance(alpha, ProductElement):
        m = np.eye(len(standard_tableaux(lam))) * float(alpha.scalar)
        for f in alpha.factors:
            m = m @ irrep_float(lam, f)
        return m
    d = len(standard_tableaux(lam))
    m = np.zeros((d, d))
    for p, c in alpha.coeffs.items():
        m += float(c) * rho_float(lam, p)
    return m


def partial_trace(lam: Partition, perm: tuple[int, ...], rows: Sequence[int]) -> Fraction:
    """Sum of the diagonal entries of rho^lam(perm) at the given basis indices."""
    m = rho(lam, perm)
    return sum((linalg.to_fraction(m[k, k]) for k in rows), Fraction(0))


# ---------------------------------------------------------------------------
# Spectra

@dataclass
class BlockSpectrum:
    shape: Partition
    dimension: int
    eigenvalues: list[complex]
    charpoly: list[Fraction] | None = None
    min_real: float = 0.0
    semistable: bool = True
    certified: bool = False
    diagonalizable: bool | None = None
    negative_roots: list[complex] = field(default_factory=list)

    def to_json(self) -> dict:
        from .symfun import format_fraction

        return {
            "lambda": list(self.shape),
            "dimension": self.dimension,
            "eigenvalues": [[round(z.real, 12), round(z.imag, 12)] for z in self.eigenvalues],
            "charpoly": None if self.charpoly is None else [format_fraction(c) for c in self.charpoly],
            "min_real_part": round(self.min_real, 12),
            "semistable": self.semistable,
            "certified": self.certified,
            "diagonalizable": self.diagonalizable,
        }


@dataclass
class SpectrumSummary:
    n: int
    blocks: list[BlockSpectrum]
    semistable: bool
    semidefinite: bool | None
    diagonalizable: bool | None
    hermitian: bool | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [b.to_json() for b in self.blocks],
            "semistable": self.semistable,
            "semidefinite": self.semidefinite,
            "diagonalizable": self.diagonalizable,
            "hermitian": self.hermitian,
        }


def _sorted_eigs(values) -> list[complex]:
    return sorted((complex(z) for z in values), key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def block_spectrum(
    lam: Partition,
    alpha,
    tolerance: float = 1e-9,
    exact: bool = False,
    diagonalizable: bool = False,
) -> BlockSpectrum:
    """Eigenvalues of rho^lam(alpha); a negative verdict is always certified exactly.

    ``exact`` also records the characteristic polynomial; ``diagonalizable``
    checks squarefreeness of the exact minimal polynomial.
    """
    mf = irrep_float(lam, alpha)
    eigs = _sorted_eigs(np.linalg.eigvals(mf)) if mf.size else []
    min_real = min((z.real for z in eigs), default=0.0)
    block = BlockSpectrum(lam, mf.shape[0], eigs, min_real=min_real)
    me = None
    if exact or diagonalizable or min_real < -tolerance:
        me = irrep_matrix(lam, alpha)
        block.charpoly = linalg.charpoly(me)
    if min_real < -tolerance:
        located = linalg.negative_real_part_roots(block.charpoly)
        block.negative_roots = located["negative"]
        block.semistable = not located["negative"]
        block.certified = True
    if diagonalizable:
        block.diagonalizable = linalg.is_squarefree(linalg.minpoly(me))
    return block


def spectrum_summary(
    alpha,
    tolerance: float = 1e-9,
    exact: bool = True,
    diagonalizable: bool = True,
    max_n: int = SPECTRUM_MAX_N,
) -> SpectrumSummary:
    n = alpha.n
    if n > max_n:
        raise ValueError(f"spectrum limited to n <= {max_n}")
    blocks = [block_spectrum(lam, alpha, tolerance, exact, diagonalizable) for lam in partitions_of(n)]
    semistable = all(b.semistable for b in blocks)
    hermitian = None
    if isinstance(alpha, GroupAlgebraElement):
        hermitian = alpha.star() == alpha
    elif n <= 8:
        expanded = alpha.expand()
        hermitian = expanded.star() == expanded
    real_nonneg = all(abs(z.imag) <= tolerance and z.real >= -tolerance for b in blocks for z in b.eigenvalues)
    semidefinite = None if hermitian is None else (hermitian and real_nonneg)
    diag = all(b.diagonalizable for b in blocks) if diagonalizable else None
    return SpectrumSummary(n, blocks, semistable, semidefinite, diag, hermitian)


def is_semistable(alpha, tolerance: float = 1e-9) -> bool:
    return all(block_spectrum(lam, alpha, tolerance).semistable for lam in partitions_of(alpha.n))
