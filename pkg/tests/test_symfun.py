import itertools
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chromsym.partitions import partitions_of
from chromsym.symfun import BASES, PointedSymFun, SymFun, positivity, psi


def _poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def power_sum_poly(mu, nvars):
    poly = Counter({(0,) * nvars: 1})
    for part in mu:
        factor = Counter({tuple(part if j == i else 0 for j in range(nvars)): 1 for i in range(nvars)})
        poly = _poly_mul(poly, factor)
    return poly


def monomial_coefficients_of_p(mu):
    """m-basis coefficients of p_mu, read off an explicit polynomial."""
    n = sum(mu)
    poly = power_sum_poly(mu, n)
    return {lam: poly.get(tuple(lam) + (0,) * (n - len(lam)), 0) for lam in partitions_of(n)}


def kostka(lam, mu):
    """Semistandard tableaux of shape lam and content mu, by brute force over row fillings."""
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    letters = [v for v, k in enumerate(mu, start=1) for _ in range(k)]
    count = 0
    seen = set()
    for perm in set(itertools.permutations(letters)):
        if perm in seen:
            continue
        seen.add(perm)
        t = dict(zip(cells, perm))
        if all(t[(r, c)] <= t[(r, c + 1)] for (r, c) in cells if (r, c + 1) in t) and all(
            t[(r, c)] < t[(r + 1, c)] for (r, c) in cells if (r + 1, c) in t
        ):
            count += 1
    return count


def test_p_to_m_against_polynomials():
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert SymFun.p(*mu).convert("m") == SymFun("m", monomial_coefficients_of_p(mu))


def test_schur_against_kostka():
    for n in range(1, 6):
        for lam in partitions_of(n):
            expected = SymFun("m", {mu: kostka(lam, mu) for mu in partitions_of(n)})
            assert SymFun.s(*lam).convert("m") == expected


def test_small_values():
    assert SymFun.e(2) == SymFun("p", {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})
    assert SymFun.e(3).convert("s") == SymFun.s(1, 1, 1)
    assert SymFun.h(3).convert("s") == SymFun.s(3)
    x_p3 = SymFun("e", {(3,): 3, (2, 1): 1})
    assert x_p3.convert("s").coeffs == {(2, 1): 1, (1, 1, 1): 4}


def symfun_strategy(max_degree=6):
    def build(basis, d, coeffs):
        parts = partitions_of(d)
        return SymFun(basis, {lam: c for lam, c in zip(parts, coeffs) if c})

    return st.tuples(st.sampled_from(BASES), st.integers(0, max_degree)).flatmap(
        lambda bd: st.lists(
            st.fractions(min_value=-5, max_value=5, max_denominator=6),
            min_size=len(partitions_of(bd[1])),
            max_size=len(partitions_of(bd[1])),
        ).map(lambda cs: build(bd[0], bd[1], cs))
    )


@given(symfun_strategy(), st.sampled_from(BASES))
@settings(max_examples=60)
def test_basis_round_trip(f, target):
    g = f.convert(target)
    assert g.basis == target
    assert g.convert(f.basis).coeffs == f.coeffs


@given(symfun_strategy(4), symfun_strategy(3))
@settings(max_examples=40)
def test_product_is_basis_independent(f, g):
    prod_p = (f.convert("p") * g.convert("p")).convert("s")
    prod_s = f.convert("s") * g.convert("s")
    assert prod_p == prod_s


def test_e_product_is_concatenation():
    assert (SymFun.e(2) * SymFun.e(1)).coeffs == {(2, 1): 1}


def test_json_round_trip():
    f = SymFun("s", {(2, 1): Fraction(3, 4), (1, 1, 1): -2})
    assert SymFun.from_json(f.to_json()) == f
    g = PointedSymFun({((1,), 0): 1, ((), 1): -1})
    assert PointedSymFun.from_json(g.to_json()) == g
    assert f.to_json()["terms"][0] == {"key": [2, 1], "coeff": "3/4"}


def test_zero_is_nonnegative_everywhere():
    for basis in BASES:
        assert positivity(SymFun.zero(), basis).is_nonnegative


def test_positivity_witness():
    rep = positivity(SymFun.p(2), "s")
    assert not rep.is_nonnegative
    assert rep.witness == (1, 1)


def test_psi_on_t_powers():
    f = PointedSymFun({((1,), 0): 1, ((), 1): -1})
    assert psi(f) == SymFun.p(1, 1) - SymFun.p(2)


def test_pointed_negate_t():
    f = PointedSymFun({((1,), 0): 1, ((), 1): -1})
    assert f.negate_t() == PointedSymFun({((1,), 0): 1, ((), 1): 1})


def test_pointed_needs_pointed_input():
    with pytest.raises(ValueError):
        positivity(SymFun.p(1), "pointed-schur")
