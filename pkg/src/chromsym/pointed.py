"""Pointed Schur and pointed elementary bases of Lambda[t].

For a corner c of lam (the cell removed by lam with i lowered), the
generalized character phi_{lam,i} is the partial trace of rho^lam over
seminormal basis vectors whose tableau has n in c.  On the marked class
(mu, k), with the root in a k-cycle on the largest labels, it factors as

    phi_{lam,i}(mu, k) = sum_{alpha |- n-k} chi^alpha(mu) * Phi(lam/alpha, c, k)

where Phi sums, over chains alpha = b_0 < b_1 < ... < b_k = lam adding cells
d_1, ..., d_k = c, the product of 1/(cont(d_{j+1}) - cont(d_j)).  Hence

    s_{lam,i} = sum_k t^(k-1) sum_alpha Phi(lam/alpha, c, k) s_alpha,

and by orthogonality of generalized characters the s_{lam,i} coefficient of
F = sum_k t^(k-1) F_k is f^lam / (n f^{lam_i}) * sum_{k,alpha} [s_alpha]F_k Phi(lam/alpha, c, k).
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping, Sequence

from . import linalg
from .partitions import (
    Partition,
    character,
    content,
    corners,
    dim_irrep,
    down_moves,
    lower,
    partitions_of,
    remove_cell,
    removal_cell,
    sorted_partition,
    standard_tableaux,
    z_of,
)
from .symfun import (
    PointedSymFun,
    PositivityReport,
    SymFun,
    _report,
    _revlex_key,
)

PointedIndex = tuple[Partition, int]
SOLVE_MAX_N = 12


def pointed_indices(n: int) -> list[PointedIndex]:
    """All (lam, i) with lam |- n and i a part of lam, in canonical order."""
    return [(lam, i) for lam in partitions_of(n) for i, _ in down_moves(lam)]


def marked_types(n: int) -> list[tuple[Partition, int]]:
    """Marked cycle types (mu, k): mu |- n-k is the type away from the root, k >= 1 its cycle."""
    return [(mu, k) for k in range(1, n + 1) for mu in partitions_of(n - k)]


# ---------------------------------------------------------------------------
# Chain sums

@lru_cache(maxsize=None)
def chain_weights(lam: Partition, cell: tuple[int, int]) -> dict:
    """{(alpha, k): Phi(lam/alpha, cell, k)} for all chains ending by adding ``cell``."""
    out: dict = {}
    # state: (shape after removing the cells so far, last removed cell) -> weight
    frontier = {(remove_cell(lam, cell), cell): Fraction(1)}
    k = 1
    while frontier:
        nxt: dict = defaultdict(Fraction)
        for (shape, last), w in frontier.items():
            out[(shape, k)] = out.get((shape, k), 0) + w
            for d in corners(shape):
                nxt[(remove_cell(shape, d), d)] += w / (content(last) - content(d))
        frontier = {key: w for key, w in nxt.items() if w}
        k += 1
    return {key: w for key, w in out.items() if w}


def _corner(lam: Partition, i: int) -> tuple[int, int]:
    if i not in dict(down_moves(lam)):
        raise ValueError(f"{i} is not a part of {lam}")
    return removal_cell(lam, i)


def generalized_character(lam: Partition, i: int, mu: Sequence[int]) -> Fraction:
    """phi_{lam,i} at the marked class with root cycle of length n - |mu|."""
    mu = sorted_partition(mu)
    n = sum(lam)
    k = n - sum(mu)
    if k < 1:
        raise ValueError(f"|mu| must be at most {n - 1}")
    total = Fraction(0)
    for (alpha, kk), w in chain_weights(lam, _corner(lam, i)).items():
        if kk == k:
            total += w * character(alpha, mu)
    return total


def marked_representative(mu: Sequence[int], n: int) -> tuple[int, ...]:
    """Cycles of mu on 1, 2, ... in order, then the root cycle (n-k+1 ... n)."""
    mu = sorted_partition(mu)
    perm = list(range(1, n + 1))
    start = 1
    for part in list(mu) + [n - sum(mu)]:
        block = list(range(start, start + part))
        for a, b in zip(block, block[1:] + block[:1]):
            perm[a - 1] = b
        start += part
    return tuple(perm)


def generalized_character_trace(lam: Partition, i: int, perm: Sequence[int]) -> Fraction:
    """Direct partial trace of rho^lam(perm) over tableaux with n in the corner of (lam, i)."""
    from .irreps import partial_trace

    n = sum(lam)
    cell = _corner(lam, i)
    rows = [k for k, t in enumerate(standard_tableaux(lam)) if t.cells()[n - 1] == cell]
    return partial_trace(lam, tuple(perm), rows)


def generalized_character_table(n: int):
    """Rows pointed_indices(n), columns marked_types(n); returns (rows, cols, flint matrix)."""
    rows = pointed_indices(n)
    cols = marked_types(n)
    m = linalg.zeros(len(rows), len(cols))
    for r, (lam, i) in enumerate(rows):
        for c, (mu, _) in enumerate(cols):
            m[r, c] = linalg.fq(generalized_character(lam, i, mu))
    return rows, cols, m


# ---------------------------------------------------------------------------
# Pointed Schur functions

@lru_cache(maxsize=None)
def pointed_schur_schur(lam: Partition, i: int) -> dict:
    """s_{lam,i} as {(alpha, k-1): coefficient of s_alpha t^(k-1)}."""
    return {(alpha, k - 1): w for (alpha, k), w in chain_weights(lam, _corner(lam, i)).items()}


def pointed_schur(lam: Partition, i: int) -> PointedSymFun:
    parts: dict[int, SymFun] = {}
    grouped: dict[int, dict] = defaultdict(dict)
    for (alpha, k), w in pointed_schur_schur(tuple(lam), i).items():
        grouped[k][alpha] = w
    for k, terms in grouped.items():
        parts[k] = SymFun("s", terms)
    return PointedSymFun.from_t_coefficients(parts)


def pointed_schur_from_characters(lam: Partition, i: int) -> PointedSymFun:
    """s_{lam,i} = sum over marked types of phi/z_mu p_mu t^(n-1-|mu|)."""
    n = sum(lam)
    return PointedSymFun(
        {(mu, k - 1): generalized_character(lam, i, mu) / z_of(mu) for mu, k in marked_types(n)}
    )


# ---------------------------------------------------------------------------
# Pointed elementary functions

def e_pointed_single(i: int) -> PointedSymFun:
    """e_{i,i} = s_{(1^i),1} = sum_{k=1}^i (-t)^(k-1) e_{i-k}; e_{0,0} = 0."""
    if i == 0:
        return PointedSymFun()
    return PointedSymFun.from_t_coefficients(
        {k - 1: SymFun.e(i - k).scale((-1) ** (k - 1)) if i - k else SymFun.one("e").scale((-1) ** (k - 1)) for k in range(1, i + 1)}
    )


def pointed_e(alpha: Sequence[int], i: int) -> PointedSymFun:
    """e_{alpha,i} = e_{i,i} times e_j over the remaining parts of alpha."""
    if i == 0:
        return PointedSymFun()
    parts = list(alpha)
    if i not in parts:
        raise ValueError(f"{i} is not a part of {tuple(alpha)}")
    parts.remove(i)
    rest = SymFun.e(*parts)
    return e_pointed_single(i) * rest


# ---------------------------------------------------------------------------
# Expansions

def _pointed_degree(f: PointedSymFun) -> int | None:
    degs = f.pointed_degrees()
    if len(degs) > 1:
        raise ValueError(f"input is not homogeneous (pointed degrees {degs})")
    return degs[0] if degs else None


def _schur_parts(f: PointedSymFun) -> dict:
    """{(alpha, k): [s_alpha t^k] f}."""
    out = {}
    for k, g in f.t_coefficients("s").items():
        for alpha, c in g.coeffs.items():
            out[(alpha, k)] = c
    return out


def _upward_chain_sums(n: int, inject: Mapping[tuple[Partition, int], Fraction]) -> dict:
    """V(lam, c) = sum over alpha, chains alpha -> lam ending at c of inject[alpha] * weight."""
    values: dict[tuple[Partition, tuple[int, int]], Fraction] = {}
    for size in range(1, n + 1):
        for beta in partitions_of(size):
            for d in corners(beta):
                below = remove_cell(beta, d)
                acc = Fraction(inject.get(below, 0))
                for d0 in corners(below) if below else []:
                    prev = values.get((below, d0))
                    if prev:
                        acc += prev / (content(d) - content(d0))
                if acc:
                    values[(beta, d)] = acc
    return values


def pointed_schur_coefficients_trace(f: PointedSymFun) -> dict[PointedIndex, Fraction]:
    """Pointed Schur coefficients by the orthogonality formula (no linear solve)."""
    deg = _pointed_degree(f)
    if deg is None:
        return {}
    n = deg + 1
    inject = {alpha: c for (alpha, k), c in _schur_parts(f).items()}
    values = _upward_chain_sums(n, inject)
    out = {}
    for lam, i in pointed_indices(n):
        v = values.get((lam, removal_cell(lam, i)))
        if v:
            out[(lam, i)] = v * dim_irrep(lam) / (n * dim_irrep(lower(lam, i)))
    return out


def _solve_in_basis(f_coords: Mapping, columns: list[Mapping], keys: list) -> list[Fraction]:
    index = {k: r for r, k in enumerate(keys)}
    size = len(keys)
    a = linalg.zeros(size)
    for c, col in enumerate(columns):
        for key, v in col.items():
            a[index[key], c] = linalg.fq(v)
    b = linalg.zeros(size, 1)
    for key, v in f_coords.items():
        if key not in index:
            raise ValueError(f"coordinate {key} outside the expected degree")
        b[index[key], 0] = linalg.fq(v)
    x = linalg.solve(a, b)
    return [linalg.to_fraction(x[r, 0]) for r in range(size)]


def pointed_schur_coefficients_solve(f: PointedSymFun) -> dict[PointedIndex, Fraction]:
    """Pointed Schur coefficients by an exact square solve in the basis {s_alpha t^k}."""
    deg = _pointed_degree(f)
    if deg is None:
        return {}
    n = deg + 1
    idx = pointed_indices(n)
    keys = [(alpha, k - 1) for alpha, k in ((mu, k) for mu, k in marked_types(n))]
    cols = [pointed_schur_schur(lam, i) for lam, i in idx]
    sol = _solve_in_basis(_schur_parts(f), cols, keys)
    return {ix: c for ix, c in zip(idx, sol) if c}


def pointed_e_coefficients(f: PointedSymFun) -> dict[PointedIndex, Fraction]:
    deg = _pointed_degree(f)
    if deg is None:
        return {}
    n = deg + 1
    idx = pointed_indices(n)
    keys = [(mu, k - 1) for mu, k in marked_types(n)]
    cols = [pointed_e(lam, i).coeffs for lam, i in idx]
    sol = _solve_in_basis(f.coeffs, cols, keys)
    return {ix: c for ix, c in zip(idx, sol) if c}


def _index_order(d: Mapping[PointedIndex, Fraction]) -> dict:
    return dict(sorted(d.items(), key=lambda kv: (_revlex_key(kv[0][0]), -kv[0][1])))


def expand_pointed(f: PointedSymFun, basis: str, method: str = "auto") -> PositivityReport:
    """Expand homogeneous f in the pointed-schur or pointed-e basis with a positivity verdict."""
    if basis == "pointed-schur":
        deg = _pointed_degree(f)
        if method == "auto":
            method = "solve" if deg is None or deg + 1 <= SOLVE_MAX_N else "trace"
        coeffs = (pointed_schur_coefficients_solve if method == "solve" else pointed_schur_coefficients_trace)(f)
    elif basis == "pointed-e":
        coeffs = pointed_e_coefficients(f)
    else:
        raise ValueError(f"unknown pointed basis {basis!r}")
    return _report(basis, _index_order(coeffs))


def combine(coeffs: Mapping[PointedIndex, Fraction], basis: str) -> PointedSymFun:
    """Rebuild sum c * b_{lam,i} for b = pointed-schur or pointed-e."""
    build = pointed_schur if basis == "pointed-schur" else pointed_e
    out = PointedSymFun()
    for (lam, i), c in coeffs.items():
        out = out + build(lam, i).scale(c)
    return out


# ---------------------------------------------------------------------------
# Closed forms

def _multinomial(parts: Sequence[int]) -> int:
    counts = defaultdict(int)
    for p in parts:
        counts[p] += 1
    return factorial(len(parts)) // prod(factorial(m) for m in counts.values())


def _minus(lam: Partition, i: int) -> list[int]:
    rest = list(lam)
    rest.remove(i)
    return rest


def closed_form_coefficients(family: str, n: int) -> dict[PointedIndex, Fraction]:
    """Pointed-e coefficients of X_{K_n,n}, X_{P_n,n} or X_{C_n,n}."""
    if family == "complete":
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        return {((n,), n): Fraction(factorial(n - 1))}
    if family not in ("path", "cycle"):
        raise ValueError(f"unknown family {family!r}")
    if family == "cycle" and n == 0:
        return {}
    if n < 1:
        raise ValueError("need n >= 1")
    out = {}
    for lam, i in pointed_indices(n):
        rest = _minus(lam, i)
        weight = prod(j - 1 for j in (rest if family == "path" else lam))
        c = _multinomial(rest) * weight
        if c:
            out[(lam, i)] = Fraction(c)
    return out


def closed_form(family: str, n: int) -> PointedSymFun:
    return combine(closed_form_coefficients(family, n), "pointed-e")


def path_to_cycle(coeffs: Mapping[PointedIndex, Fraction]) -> dict[PointedIndex, Fraction]:
    """The linear map e_{lam,i} -> (i-1) e_{lam,i}."""
    return {(lam, i): c * (i - 1) for (lam, i), c in coeffs.items() if i != 1}


# ---------------------------------------------------------------------------
# Generating functions (truncated z-series with coefficients in Lambda[t])

def _series_mul(a: list, b: list, order: int) -> list:
    out = [PointedSymFun() for _ in range(order + 1)]
    for i, x in enumerate(a[: order + 1]):
        if x.is_zero():
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _one_over_one_plus_tz(order: int) -> list:
    return [PointedSymFun.t_power(j, (-1) ** j) for j in range(order + 1)]


def stanley_path_series(order: int) -> list[SymFun]:
    """[z^n] of (sum e_i z^i) / (1 - sum (i-1) e_i z^i) for n <= order."""
    num = [SymFun.one("e")] + [SymFun.e(i) for i in range(1, order + 1)]
    den = [SymFun("e", {(i,): i - 1}) for i in range(order + 1)]
    den[0] = SymFun("e")
    out: list[SymFun] = []
    for n in range(order + 1):
        term = num[n]
        for i in range(1, n + 1):
            term = term + den[i] * out[n - i]
        out.append(term)
    return out


def generating_function_check(family: str, n_max: int) -> dict:
    """Compare the generating function identities with direct pointed_csf, coefficient by coefficient."""
    from .graphs import csf, cycle, path, pointed_csf

    if n_max > 10:
        raise ValueError("n_max limited to 10")
    items = []
    if family == "stanley":
        series = stanley_path_series(n_max)
        for n in range(1, n_max + 1):
            items.append({"n": n, "ok": series[n] == csf(path(n))})
    else:
        F = [PointedSymFun.from_symfun(f) for f in stanley_path_series(n_max)]
        G = _series_mul([PointedSymFun()] + F, _one_over_one_plus_tz(n_max), n_max)
        if family == "path":
            for n in range(1, n_max + 1):
                items.append({"n": n, "ok": G[n] == pointed_csf(path(n), n)})
        elif family == "cycle":
            shifted = [g for g in G]
            shifted[1] = shifted[1] - PointedSymFun({((), 0): 1})
            H = _series_mul(shifted, _one_over_one_plus_tz(n_max), n_max)
            for n in range(1, n_max + 1):
                items.append({"n": n, "ok": H[n] == pointed_csf(cycle(n), n)})
        else:
            raise ValueError(f"unknown family {family!r}")
    return {"family": family, "n_max": n_max, "items": items, "ok": all(x["ok"] for x in items)}
