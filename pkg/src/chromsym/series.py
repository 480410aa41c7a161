"""Truncated univariate power series over Q and their formal group laws in Lambda."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence

from .symfun import SymFun

FGL_MAX_DEGREE = 8


class PowerSeries:
    """c_0 + c_1 x + ... + c_d x^d, known modulo x^(d+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    @classmethod
    def from_sequence(cls, seq: Sequence, kind: str = "ogf") -> "PowerSeries":
        """sum a_n x^n (ogf) or sum a_n x^n / n! (egf) from a_1, a_2, ..."""
        if kind == "ogf":
            return cls([0, *seq])
        if kind == "egf":
            return cls([0] + [Fraction(a, factorial(n)) for n, a in enumerate(seq, start=1)])
        raise ValueError(f"unknown kind {kind!r}")

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs, order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        d = min(self.order, other.order)
        return PowerSeries([self[k] + other[k] for k in range(d + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        d = min(self.order, other.order)
        return PowerSeries([self[k] - other[k] for k in range(d + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries([c * other for c in self.coeffs])
        d = min(self.order, other.order)
        out = [Fraction(0)] * (d + 1)
        for i, a in enumerate(self.coeffs[: d + 1]):
            if a:
                for j in range(d + 1 - i):
                    out[i + j] += a * other[j]
        return PowerSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        d = min(self.order, other.order)
        return all(self[k] == other[k] for k in range(d + 1))

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """self(g(x)); needs g(0) = 0."""
        if g[0] != 0:
            raise ValueError("inner series must have zero constant term")
        d = min(self.order, g.order)
        g = g.truncate(d)
        result = PowerSeries([self[0]], d)
        power = PowerSeries([1], d)
        for k in range(1, d + 1):
            power = power * g
            if self[k]:
                result = result + power * self[k]
        return result

    def __repr__(self) -> str:
        return "PowerSeries(" + ", ".join(str(c) for c in self.coeffs) + ")"


def _check_invertible(f: PowerSeries) -> None:
    if f[0] != 0 or f[1] == 0:
        raise ValueError("need f(0) = 0 and f'(0) != 0")


def compositional_inverse(f: PowerSeries) -> PowerSeries:
    """g with f(g(x)) = x to the order of f, solved one coefficient at a time."""
    _check_invertible(f)
    d = f.order
    g = [Fraction(0), 1 / f[1]] + [Fraction(0)] * (d - 1)
    for k in range(2, d + 1):
        partial = f.compose(PowerSeries(g[:k], d))
        g[k] = -partial[k] / f[1]
    return PowerSeries(g[: d + 1])


def lagrange_inverse(f: PowerSeries) -> PowerSeries:
    """Same as compositional_inverse, via [x^n] g = (1/n) [x^(n-1)] (x/f)^n."""
    _check_invertible(f)
    d = f.order
    # x / f(x) = 1 / (f_1 + f_2 x + ...)
    shifted = PowerSeries(f.coeffs[1:], d - 1)
    recip = [Fraction(0)] * d
    recip[0] = 1 / shifted[0]
    for k in range(1, d):
        recip[k] = -sum((shifted[j] * recip[k - j] for j in range(1, k + 1)), Fraction(0)) / shifted[0]
    base = PowerSeries(recip)
    out = [Fraction(0)]
    power = PowerSeries([1], d - 1)
    for n in range(1, d + 1):
        power = power * base
        out.append(power[n - 1] / n)
    return PowerSeries(out)


def formal_group_law(f: PowerSeries, degree: int, max_degree: int = FGL_MAX_DEGREE) -> SymFun:
    """f(g(x_1) + g(x_2) + ...) with g = f^-1, through the given degree, in the p basis."""
    if degree > max_degree:
        raise ValueError(f"degree limited to {max_degree}")
    f = f.truncate(degree)
    _check_invertible(f)
    g = compositional_inverse(f)
    # sum_i g(x_i) = sum_m g_m p_m
    u = SymFun("p", {(m,): g[m] for m in range(1, degree + 1) if g[m]})
    result = SymFun("p")
    power = SymFun.one("p")
    for k in range(1, degree + 1):
        power = (power * u).truncate(degree)
        if f[k]:
            result = result + power.scale(f[k])
    return result


# ---------------------------------------------------------------------------
# Sequences

def little_schroeder(n_max: int) -> list[int]:
    """Plane trees with n labelled leaves and no node with exactly one child.

    The series s satisfies s = x + s^2 + s^3 + ...; since s has no constant
    term, [x^n] of s^k for k >= 2 only involves coefficients below n.
    """
    s = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        if n == 1:
            s[1] = 1
            continue
        total = 0
        power = s[:]  # s^1
        for _k in range(2, n + 1):
            power = [sum(power[i] * s[j - i] for i in range(j + 1)) for j in range(n_max + 1)]
            total += power[n]
        s[n] = total
    return s[1:]


def l_admissible_paths(steps: Iterable[int], n_max: int) -> list[int]:
    """a_n = #{(s_1, ..., s_n) : s_1 = s_n = 0 and s_{i+1} - s_i in L}, n = 1..n_max."""
    L = sorted(set(int(x) for x in steps))
    out = []
    counts = {0: 1}
    for n in range(1, n_max + 1):
        if n > 1:
            nxt: dict[int, int] = {}
            for h, c in counts.items():
                for d in L:
                    nxt[h + d] = nxt.get(h + d, 0) + c
            counts = nxt
        out.append(counts.get(0, 0))
    return out


def builtin_sequence(name: str, n_max: int, steps: Sequence[int] | None = None) -> tuple[list[int], str]:
    """(a_1..a_{n_max}, 'ogf' or 'egf') for a named counting sequence."""
    if name == "permutations-ogf":
        return [factorial(n) for n in range(1, n_max + 1)], "ogf"
    if name == "permutations-egf":
        return [factorial(n) for n in range(1, n_max + 1)], "egf"
    if name == "plane-trees-no-unary":
        return little_schroeder(n_max), "ogf"
    if name.startswith("L-admissible-paths"):
        if steps is None:
            inside = name[len("L-admissible-paths"):].strip("()[]{}: ")
            if not inside:
                raise ValueError("L-admissible-paths needs a step set, e.g. L-admissible-paths(1,-1)")
            steps = [int(x) for x in inside.split(",")]
        return l_admissible_paths(steps, n_max), "ogf"
    raise ValueError(f"unknown sequence {name!r}")


def builtin_series(name: str, degree: int, steps: Sequence[int] | None = None) -> PowerSeries:
    seq, kind = builtin_sequence(name, degree, steps)
    return PowerSeries.from_sequence(seq, kind)


def hadamard(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """EGF Hadamard product: sum a_n b_n x^n / n! from sum a_n x^n/n! and sum b_n x^n/n!."""
    d = min(f.order, g.order)
    return PowerSeries([f[n] * g[n] * factorial(n) for n in range(d + 1)])


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)
