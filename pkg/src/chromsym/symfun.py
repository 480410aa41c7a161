"""Symmetric functions with exact rational coefficients, and the module Lambda[t].

A :class:`SymFun` is a finite linear combination of p_lam, e_lam, m_lam or s_lam.
The power sum basis is the internal hub: every conversion goes through it,
one degree at a time, using transition tables cached per degree.  Mixed
degrees are allowed (formal group laws produce them).

A :class:`PointedSymFun` is an element of Lambda[t], stored over the monomials
p_mu t^k.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from . import linalg
from .partitions import (
    Partition,
    character,
    partitions_of,
    sign_of,
    sorted_partition,
    union,
    z_of,
)

BASES = ("p", "e", "m", "s")
Coeff = Union[int, Fraction]


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v != 0}


def _accumulate(target: dict, key, value) -> None:
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    return Fraction(str(s)) if not isinstance(s, (int, Fraction)) else Fraction(s)


# ---------------------------------------------------------------------------
# Transition tables (cached per degree)

def _p_product(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> dict:
    out: dict = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            _accumulate(out, union(la, lb), ca * cb)
    return out


@lru_cache(maxsize=None)
def _e_single_in_p(k: int) -> dict:
    return {mu: Fraction(sign_of(mu), z_of(mu)) for mu in partitions_of(k)}


@lru_cache(maxsize=None)
def _m_count(lam: Partition, mu: Partition) -> int:
    """[m_lam] p_mu: ways to distribute the parts of mu among the rows of lam exactly."""

    @lru_cache(maxsize=None)
    def go(idx: int, remaining: tuple[int, ...]) -> int:
        if idx == len(mu):
            return 1 if not any(remaining) else 0
        part = mu[idx]
        total = 0
        for j, room in enumerate(remaining):
            if room >= part:
                nxt = list(remaining)
                nxt[j] -= part
                total += go(idx + 1, tuple(nxt))
        return total

    return go(0, tuple(lam))


@lru_cache(maxsize=None)
def _to_p_table(basis: str, d: int) -> dict:
    """basis element of degree d -> its p-expansion."""
    parts = partitions_of(d)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        return {
            lam: {mu: Fraction(character(lam, mu), z_of(mu)) for mu in parts if character(lam, mu)}
            for lam in parts
        }
    if basis == "e":
        table = {}
        for lam in parts:
            acc: dict = {(): Fraction(1)}
            for k in lam:
                acc = _p_product(acc, _e_single_in_p(k))
            table[lam] = acc
        return table
    if basis == "m":
        return _invert(_from_p_table("m", d), d)
    raise ValueError(f"unknown basis {basis!r}")


@lru_cache(maxsize=None)
def _from_p_table(basis: str, d: int) -> dict:
    """p_mu of degree d -> its expansion in ``basis``."""
    parts = partitions_of(d)
    if basis == "p":
        return {mu: {mu: Fraction(1)} for mu in parts}
    if basis == "s":
        return {
            mu: {lam: Fraction(character(lam, mu)) for lam in parts if character(lam, mu)}
            for mu in parts
        }
    if basis == "m":
        return {
            mu: {lam: Fraction(_m_count(lam, mu)) for lam in parts if _m_count(lam, mu)}
            for mu in parts
        }
    if basis == "e":
        return _invert(_to_p_table("e", d), d)
    raise ValueError(f"unknown basis {basis!r}")


def _invert(table: Mapping[Partition, Mapping[Partition, Fraction]], d: int) -> dict:
    parts = partitions_of(d)
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    # column j of A = expansion of the j-th source element
    a = linalg.zeros(size)
    for j, src in enumerate(parts):
        for key, c in table[src].items():
            a[index[key], j] = linalg.fq(c)
    inv = linalg.inverse(a)
    out = {}
    for j, tgt in enumerate(parts):
        col = {}
        for i, src in enumerate(parts):
            v = linalg.to_fraction(inv[i, j])
            if v:
                col[src] = v
        out[tgt] = col
    return out


# ---------------------------------------------------------------------------
# Lambda

class SymFun:
    """Exact element of Lambda expressed in one of the bases p, e, m, s."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[Iterable[int], Coeff] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        self.coeffs: dict[Partition, Fraction] = {}
        for key, c in (coeffs or {}).items():
            _accumulate(self.coeffs, sorted_partition(key), Fraction(c))

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, basis: str = "p") -> "SymFun":
        return cls(basis)

    @classmethod
    def one(cls, basis: str = "p") -> "SymFun":
        return cls(basis, {(): 1})

    @classmethod
    def p(cls, *parts: int) -> "SymFun":
        return cls("p", {tuple(parts): 1})

    @classmethod
    def e(cls, *parts: int) -> "SymFun":
        return cls("e", {tuple(parts): 1})

    @classmethod
    def m(cls, *parts: int) -> "SymFun":
        return cls("m", {tuple(parts): 1})

    @classmethod
    def s(cls, *parts: int) -> "SymFun":
        return cls("s", {tuple(parts): 1})

    @classmethod
    def h(cls, k: int) -> "SymFun":
        """Complete homogeneous h_k, returned in the p basis."""
        return cls("p", {mu: Fraction(1, z_of(mu)) for mu in partitions_of(k)})

    # structure ------------------------------------------------------------
    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self.coeffs})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def homogeneous_part(self, d: int) -> "SymFun":
        return SymFun(self.basis, {k: c for k, c in self.coeffs.items() if sum(k) == d})

    def truncate(self, max_degree: int) -> "SymFun":
        return SymFun(self.basis, {k: c for k, c in self.coeffs.items() if sum(k) <= max_degree})

    def coefficient(self, key: Iterable[int]) -> Fraction:
        return self.coeffs.get(sorted_partition(key), Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), _revlex_key(kv[0])))

    # conversion -------------------------------------------------------------
    def convert(self, target: str) -> "SymFun":
        if target not in BASES:
            raise ValueError(f"unknown basis {target!r}")
        if target == self.basis:
            return self
        p_terms: dict = {}
        for lam, c in self.coeffs.items():
            for mu, v in _to_p_table(self.basis, sum(lam))[lam].items():
                _accumulate(p_terms, mu, c * v)
        if target == "p":
            return SymFun("p", p_terms)
        out: dict = {}
        for mu, c in p_terms.items():
            for lam, v in _from_p_table(target, sum(mu))[mu].items():
                _accumulate(out, lam, c * v)
        return SymFun(target, out)

    def to_p(self) -> "SymFun":
        return self.convert("p")

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "SymFun":
        if isinstance(other, SymFun):
            return other.convert(self.basis)
        if isinstance(other, (int, Fraction)):
            return SymFun(self.basis, {(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _accumulate(out, k, c)
        return SymFun(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFun(self.basis, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> "SymFun":
        c = Fraction(c)
        return SymFun(self.basis, {k: v * c for k, v in self.coeffs.items()} if c else {})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, PointedSymFun):
            return NotImplemented
        if not isinstance(other, SymFun):
            return NotImplemented
        if self.basis in ("p", "e"):
            return SymFun(self.basis, _p_product(self.coeffs, other.convert(self.basis).coeffs))
        prod = SymFun("p", _p_product(self.to_p().coeffs, other.to_p().coeffs))
        return prod.convert(self.basis)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = SymFun.one(self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymFun("p", {(): other})
        if not isinstance(other, SymFun):
            return NotImplemented
        return self.to_p().coeffs == other.to_p().coeffs

    def __hash__(self):
        return hash(frozenset(self.to_p().coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{format_fraction(c)}*{self.basis}{list(k)}" for k, c in self.items()
        )

    # serialisation ----------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"key": list(k), "coeff": format_fraction(c)} for k, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFun":
        return cls(data["basis"], {tuple(t["key"]): parse_fraction(t["coeff"]) for t in data["terms"]})


def _revlex_key(lam: Partition) -> tuple:
    return tuple(-x for x in lam)


# ---------------------------------------------------------------------------
# Lambda[t]

PointedKey = tuple[Partition, int]


class PointedSymFun:
    """Element of Lambda[t] stored as {(mu, k): c} meaning the sum of c * p_mu * t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple, Coeff] | None = None):
        self.coeffs: dict[PointedKey, Fraction] = {}
        for (mu, k), c in (coeffs or {}).items():
            if k < 0:
                raise ValueError("negative power of t")
            _accumulate(self.coeffs, (sorted_partition(mu), int(k)), Fraction(c))

    @classmethod
    def t_power(cls, k: int, c: Coeff = 1) -> "PointedSymFun":
        return cls({((), k): c})

    @classmethod
    def from_symfun(cls, f: SymFun, k: int = 0) -> "PointedSymFun":
        return cls({(mu, k): c for mu, c in f.to_p().coeffs.items()})

    @classmethod
    def from_t_coefficients(cls, parts: Mapping[int, SymFun]) -> "PointedSymFun":
        out: dict = {}
        for k, f in parts.items():
            for mu, c in f.to_p().coeffs.items():
                _accumulate(out, (mu, k), c)
        return cls(out)

    def t_coefficients(self, basis: str = "p") -> dict[int, SymFun]:
        grouped: dict[int, dict] = defaultdict(dict)
        for (mu, k), c in self.coeffs.items():
            grouped[k][mu] = c
        return {k: SymFun("p", terms).convert(basis) for k, terms in sorted(grouped.items())}

    def pointed_degrees(self) -> list[int]:
        return sorted({sum(mu) + k for mu, k in self.coeffs})

    def is_homogeneous(self) -> bool:
        return len(self.pointed_degrees()) <= 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, mu: Iterable[int], k: int) -> Fraction:
        return self.coeffs.get((sorted_partition(mu), k), Fraction(0))

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0][0]) + kv[0][1], kv[0][1], _revlex_key(kv[0][0])))

    def negate_t(self) -> "PointedSymFun":
        """Image under the Lambda-linear map t -> -t."""
        return PointedSymFun({(mu, k): (-c if k % 2 else c) for (mu, k), c in self.coeffs.items()})

    def _coerce(self, other):
        if isinstance(other, PointedSymFun):
            return other
        if isinstance(other, SymFun):
            return PointedSymFun.from_symfun(other)
        if isinstance(other, (int, Fraction)):
            return PointedSymFun({((), 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            _accumulate(out, key, c)
        return PointedSymFun(out)

    __radd__ = __add__

    def __neg__(self):
        return PointedSymFun({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> "PointedSymFun":
        c = Fraction(c)
        return PointedSymFun({k: v * c for k, v in self.coeffs.items()} if c else {})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (mu, k), c in self.coeffs.items():
            for (nu, j), d in other.coeffs.items():
                _accumulate(out, (union(mu, nu), k + j), c * d)
        return PointedSymFun(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PointedSymFun({((), 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{format_fraction(c)}*p{list(mu)}*t^{k}" for (mu, k), c in self.items())

    def to_json(self) -> dict:
        return {
            "basis": "p",
            "terms": [
                {"key": {"mu": list(mu), "k": k}, "coeff": format_fraction(c)}
                for (mu, k), c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PointedSymFun":
        if data.get("basis", "p") != "p":
            raise ValueError("pointed JSON input must be in the p basis")
        return cls({(tuple(t["key"]["mu"]), t["key"]["k"]): parse_fraction(t["coeff"]) for t in data["terms"]})


T = PointedSymFun.t_power(1)


def psi(f: PointedSymFun) -> SymFun:
    """Lambda-linear map p_mu t^(i-1) -> p_(mu with a part i added)."""
    out: dict = {}
    for (mu, k), c in f.coeffs.items():
        _accumulate(out, union(mu, (k + 1,)), c)
    return SymFun("p", out)


def specialize_ones(f: SymFun, k: int) -> Fraction:
    """Evaluate at x_1 = ... = x_k = 1 and all other variables 0."""
    return sum((c * Fraction(k) ** len(mu) for mu, c in f.to_p().coeffs.items()), Fraction(0))


# ---------------------------------------------------------------------------
# Positivity

@dataclass
class PositivityReport:
    basis: str
    coefficients: dict
    is_nonnegative: bool
    witness: object = None

    def to_json(self) -> dict:
        terms = []
        for key, c in self.coefficients.items():
            if isinstance(key, tuple) and len(key) == 2 and isinstance(key[1], int) and isinstance(key[0], tuple):
                if self.basis.startswith("pointed"):
                    terms.append({"lambda": list(key[0]), "i": key[1], "coeff": format_fraction(c)})
                else:
                    terms.append({"key": {"mu": list(key[0]), "k": key[1]}, "coeff": format_fraction(c)})
            else:
                terms.append({"key": list(key), "coeff": format_fraction(c)})
        witness = self.witness
        if isinstance(witness, tuple) and witness and isinstance(witness[0], tuple):
            witness = [list(witness[0]), witness[1]]
        elif isinstance(witness, tuple):
            witness = list(witness)
        return {"basis": self.basis, "terms": terms, "nonnegative": self.is_nonnegative, "witness": witness}


def _report(basis: str, coeffs: Mapping) -> PositivityReport:
    witness = next((k for k, c in coeffs.items() if c < 0), None)
    return PositivityReport(basis, dict(coeffs), witness is None, witness)


def positivity(f, basis: str) -> PositivityReport:
    """Expand ``f`` in ``basis`` and report whether every coefficient is nonnegative.

    For pointed input, the bases p, e, m, s apply to each t-power coefficient
    (keys are (lam, k) for lam * t^k) and the bases ``pointed-schur`` and
    ``pointed-e`` give the pointed expansions.
    """
    if isinstance(f, SymFun):
        if basis.startswith("pointed"):
            raise ValueError(f"basis {basis!r} needs a pointed symmetric function")
        g = f.convert(basis)
        return _report(basis, dict(g.items()))
    if isinstance(f, PointedSymFun):
        if basis in BASES:
            coeffs = {}
            for k, g in f.t_coefficients(basis).items():
                for lam, c in g.items():
                    coeffs[(lam, k)] = c
            return _report(basis, dict(sorted(coeffs.items(), key=lambda kv: (kv[0][1], _revlex_key(kv[0][0])))))
        from .pointed import expand_pointed

        return expand_pointed(f, basis)
    raise TypeError(f"cannot test positivity of {type(f).__name__}")
