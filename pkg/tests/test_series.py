from collections import Counter
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from chromsym.partitions import partitions_of
from chromsym.series import (
    PowerSeries,
    builtin_sequence,
    builtin_series,
    catalan,
    compositional_inverse,
    formal_group_law,
    hadamard,
    l_admissible_paths,
    lagrange_inverse,
    little_schroeder,
)
from chromsym.symfun import SymFun, positivity

NVARS = 3


def _mul(a, b, order):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if sum(e) <= order:
                out[e] += ca * cb
    return out


def direct_law(f: PowerSeries, order: int) -> Counter:
    """f(g(x_1) + g(x_2) + g(x_3)) as a polynomial truncated at total degree ``order``."""
    g = compositional_inverse(f.truncate(order))
    inner = Counter()
    for i in range(NVARS):
        x = Counter({tuple(1 if j == i else 0 for j in range(NVARS)): Fraction(1)})
        power = Counter({(0,) * NVARS: Fraction(1)})
        for m in range(1, order + 1):
            power = _mul(power, x, order)
            for e, c in power.items():
                inner[e] += g[m] * c
    result = Counter()
    power = Counter({(0,) * NVARS: Fraction(1)})
    for k in range(1, order + 1):
        power = _mul(power, inner, order)
        for e, c in power.items():
            result[e] += f[k] * c
    return Counter({e: c for e, c in result.items() if c})


def specialize(law: SymFun, order: int) -> Counter:
    """Evaluate a p-basis element at three variables."""
    out = Counter()
    for mu, c in law.convert("p").coeffs.items():
        poly = Counter({(0,) * NVARS: Fraction(1)})
        for part in mu:
            factor = Counter({tuple(part if j == i else 0 for j in range(NVARS)): Fraction(1) for i in range(NVARS)})
            poly = _mul(poly, factor, order)
        for e, v in poly.items():
            out[e] += c * v
    return Counter({e: c for e, c in out.items() if c})


def test_inverse_examples():
    assert compositional_inverse(PowerSeries([0, 1], 5)) == PowerSeries([0, 1, 0, 0, 0, 0])
    g = compositional_inverse(PowerSeries([0, 1, 1], 6))
    assert g.coeffs == [0, 1, -1, 2, -5, 14, -42]
    assert [abs(g[n]) for n in range(1, 7)] == [catalan(n - 1) for n in range(1, 7)]


series = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=6, max_size=6).filter(
    lambda cs: cs[0] != 0
)


@given(series)
@settings(max_examples=50)
def test_inverse_round_trip(cs):
    f = PowerSeries([0, *cs])
    g = compositional_inverse(f)
    x = PowerSeries([0, 1], f.order)
    assert f.compose(g) == x
    assert g.compose(f) == x
    assert lagrange_inverse(f) == g


def test_identity_law():
    assert formal_group_law(PowerSeries([0, 1], 6), 6) == SymFun.e(1)


def test_exponential_law():
    f = PowerSeries([0] + [Fraction(1, factorial(k)) for k in range(1, 7)])
    assert formal_group_law(f, 6) == SymFun("e", {(k,): 1 for k in range(1, 7)})


@pytest.mark.parametrize("name", ["permutations-ogf", "permutations-egf", "plane-trees-no-unary"])
def test_law_against_explicit_variables(name):
    f = builtin_series(name, 5)
    assert specialize(formal_group_law(f, 5), 5) == direct_law(f, 5)


def test_degree_one_part():
    for name in ["permutations-ogf", "permutations-egf", "plane-trees-no-unary"]:
        law = formal_group_law(builtin_series(name, 5), 5)
        assert law.homogeneous_part(1) == SymFun.p(1)
    f = PowerSeries([0, 3, 1, 2])
    assert formal_group_law(f, 3).homogeneous_part(1) == SymFun.p(1)


def test_permutations_law_schur_positive():
    assert positivity(formal_group_law(builtin_series("permutations-ogf", 5), 5), "s").is_nonnegative


def test_degree_bound():
    with pytest.raises(ValueError):
        formal_group_law(PowerSeries([0, 1], 9), 9)
    with pytest.raises(ValueError):
        compositional_inverse(PowerSeries([0, 0, 1]))


def test_sequences():
    assert builtin_sequence("permutations-ogf", 4) == ([1, 2, 6, 24], "ogf")
    assert little_schroeder(7) == [1, 1, 3, 11, 45, 197, 903]
    assert l_admissible_paths([1, -1], 7) == [1, 0, 2, 0, 6, 0, 20]
    assert builtin_sequence("L-admissible-paths(1,-1)", 3)[0] == [1, 0, 2]
    with pytest.raises(ValueError):
        builtin_sequence("nope", 3)


def test_l_admissible_brute_force():
    import itertools

    for steps in ([1, -1], [1, 0, -1], [2, -1], [0, 1]):
        for n in range(1, 7):
            count = sum(1 for walk in itertools.product(steps, repeat=n - 1) if sum(walk) == 0)
            assert l_admissible_paths(steps, n)[-1] == count


def test_hadamard():
    f = builtin_series("permutations-egf", 6)
    h = hadamard(f, f)
    assert [h[n] * factorial(n) for n in range(1, 7)] == [factorial(n) ** 2 for n in range(1, 7)]
    assert [h[n] for n in range(1, 7)] == [factorial(n) for n in range(1, 7)]
