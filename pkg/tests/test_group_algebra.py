import itertools
import random
from fractions import Fraction
from math import factorial

import networkx as nx
import numpy as np
from hypothesis import given, settings, strategies as st

from chromsym import canon
from chromsym.graphs import Graph, Hypergraph, complete, csf, cycle, path, random_graph, random_hyperforest
from chromsym.group_algebra import (
    GroupAlgebraElement,
    all_perms,
    alpha_chordal,
    alpha_forest,
    alpha_hyperedge,
    alpha_hyperforest,
    chordal_product,
    compose,
    count_matchings,
    cycle_perm,
    cycle_type,
    dense_sn,
    descent_word,
    forest_product,
    frobenius_ch,
    identity_coeff_powers,
    identity_perm,
    idempotent,
    idempotents,
    inverse_perm,
    one_minus,
    pointed_ch,
    pointed_idempotent,
    regular_matrix,
    sign_element,
    transposition,
)
from chromsym import linalg
from chromsym.partitions import dim_irrep, lower, partitions_of
from chromsym.pointed import pointed_indices
from chromsym.symfun import PointedSymFun, SymFun

perms = st.integers(1, 6).flatmap(lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


def elem(n, terms):
    return GroupAlgebraElement(n, {p: Fraction(c) for p, c in terms.items()})


def random_element(n, rng, size=4):
    ps = all_perms(n)
    return GroupAlgebraElement(n, {rng.choice(ps): Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(size)})


def test_basic_products():
    t = transposition(3, 1, 2)
    assert GroupAlgebraElement.of(t) * GroupAlgebraElement.of(t) == GroupAlgebraElement.identity(3)
    c = cycle_perm(3, [1, 2, 3])
    assert GroupAlgebraElement.of(c).star() == GroupAlgebraElement.of(cycle_perm(3, [1, 3, 2]))
    abar = one_minus(2, [transposition(2, 1, 2)])
    assert (abar * abar).scale(2).identity_coeff() == 4


def test_composition_convention():
    s, t = transposition(3, 1, 2), transposition(3, 2, 3)
    st_ = compose(s, t)
    assert st_[0] == s[t[0] - 1]


@given(perms)
def test_inverse_and_descent_word(p):
    n = len(p)
    assert compose(p, inverse_perm(p)) == identity_perm(n)
    word = descent_word(p)
    q = identity_perm(n)
    for j in word:
        q = compose(q, transposition(n, j, j + 1))
    assert q == p


@given(st.integers(1, 4), st.randoms(use_true_random=False))
@settings(max_examples=30)
def test_associativity(n, rng):
    a, b, c = (random_element(n, rng) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_alpha_examples():
    t12 = GroupAlgebraElement.of(transposition(2, 1, 2))
    assert alpha_forest(path(2)) == (GroupAlgebraElement.identity(2) - t12).scale(2)
    one = GroupAlgebraElement.identity(3)
    p3 = (one - GroupAlgebraElement.of(transposition(3, 1, 2))) * (one - GroupAlgebraElement.of(transposition(3, 2, 3)))
    assert alpha_forest(path(3), [(1, 2), (2, 3)]) == p3.scale(6)
    assert alpha_hyperedge((3, 4), 4) == GroupAlgebraElement.identity(4) - GroupAlgebraElement.of(transposition(4, 3, 4))
    one4 = GroupAlgebraElement.identity(4)
    c1, c2 = cycle_perm(4, [1, 2, 3]), cycle_perm(4, [1, 3, 2])
    expected = (one4 - elem(4, {c1: Fraction(1, 2), c2: Fraction(1, 2)})) * (one4 - GroupAlgebraElement.of(transposition(4, 3, 4)))
    assert alpha_hyperforest(Hypergraph(4, ((1, 2, 3), (3, 4)))) == expected.scale(24)


def test_alpha_e_hermitian():
    for e in [(1, 2), (1, 2, 3), (2, 3, 4), (1, 2, 3, 4)]:
        a = alpha_hyperedge(e, 4)
        assert a.star() == a


def test_chordal_k3():
    one = GroupAlgebraElement.identity(3)
    t = lambda a, b: GroupAlgebraElement.of(transposition(3, a, b))
    expected = ((one - t(2, 3)) * (one - t(1, 2) - t(1, 3))).scale(6)
    assert alpha_chordal(complete(3)) == expected
    assert frobenius_ch(alpha_chordal(complete(3))) == csf(complete(3))


def test_chordal_forests_match_reversed_forest_order():
    for n in range(1, 6):
        for m, edges, _ in canon.forests(n):
            g = Graph(m, edges)
            order = sorted(edges)
            assert alpha_chordal(g, order) == alpha_forest(g, order[::-1])


def test_chordal_operator_characteristic():
    rng = random.Random(3)
    count = 0
    while count < 25:
        g = random_graph(rng.randint(2, 6), rng, 0.6)
        try:
            a = chordal_product(g).expand()
        except ValueError:
            continue
        count += 1
        assert frobenius_ch(a) == csf(g)


def test_cycle_ordering_pair():
    g = cycle(4)
    pi = [(1, 2), (2, 3), (3, 4), (1, 4)]
    pi2 = [(1, 2), (3, 4), (2, 3), (1, 4)]
    assert frobenius_ch(alpha_forest(g, pi)) != frobenius_ch(alpha_forest(g, pi2))


def test_forest_operator_characteristic():
    rng = random.Random(4)
    for n in range(1, 7):
        for m, edges, _ in canon.forests(n):
            g = Graph(m, edges)
            order = list(edges)
            for _ in range(3):
                rng.shuffle(order)
                assert frobenius_ch(alpha_forest(g, order)) == csf(g)


def test_hyperforest_operator_characteristic():
    rng = random.Random(5)
    for _ in range(40):
        h = random_hyperforest(rng.randint(1, 6), rng)
        order = list(h.edges)
        rng.shuffle(order)
        assert frobenius_ch(alpha_hyperforest(h, order)) == csf(h)


def test_frobenius_examples():
    one = GroupAlgebraElement.identity(3)
    assert frobenius_ch(one) == SymFun.p(1, 1, 1).scale(Fraction(1, 6))
    assert pointed_ch(one, 3) == PointedSymFun.from_symfun(SymFun.p(1, 1).scale(Fraction(1, 2)))
    c = GroupAlgebraElement.of(cycle_perm(3, [1, 2, 3]))
    assert pointed_ch(c, 3) == PointedSymFun.t_power(2, Fraction(1, 2))
    for n in range(1, 7):
        assert frobenius_ch(sign_element(n)) == SymFun.e(n)


def test_identity_coefficients():
    assert identity_coeff_powers(path(2), k_max=2) == [1, 2]
    assert identity_coeff_powers(path(3), k_max=2) == [1, 3]
    rng = random.Random(6)
    for n in range(1, 7):
        for m, edges, _ in canon.forests(n):
            g = Graph(m, edges)
            seq = identity_coeff_powers(g, k_max=2)
            assert seq[0] == 1
            assert seq[1] == count_matchings(g)


def test_matchings_against_networkx():
    rng = random.Random(7)
    for _ in range(20):
        g = random_graph(rng.randint(1, 7), rng)
        h = nx.Graph(g.edges)
        brute = 1 + sum(
            1
            for r in range(1, len(g.edges) + 1)
            for sub in itertools.combinations(h.edges, r)
            if nx.is_matching(h, set(sub))
        )
        assert count_matchings(g) == brute


def test_identity_powers_against_sparse():
    g = path(4)
    order = [(2, 3), (1, 2), (3, 4)]
    seq = identity_coeff_powers(g, order, 4)
    abar = forest_product(g, order).normalized().expand()
    power = GroupAlgebraElement.identity(4)
    for k in range(4):
        power = power * abar
        assert power.identity_coeff() == seq[k]


def test_dense_multiply_matches_sparse():
    rng = random.Random(8)
    dense = dense_sn(4)
    for _ in range(10):
        a, b = random_element(4, rng), random_element(4, rng)
        prod = dense.from_dense(dense.multiply(dense.to_dense(a), dense.to_dense(b)))
        assert prod == a * b


def test_idempotents_are_orthogonal():
    for n in range(1, 5):
        eps = idempotents(n)
        total = sum(eps.values(), GroupAlgebraElement(n))
        assert total == GroupAlgebraElement.identity(n)
        for lam, mu in itertools.product(eps, repeat=2):
            prod = eps[lam] * eps[mu]
            assert prod == (eps[lam] if lam == mu else GroupAlgebraElement(n))


def test_idempotent_examples():
    for n in range(1, 5):
        avg = GroupAlgebraElement(n, {p: Fraction(1, factorial(n)) for p in all_perms(n)})
        assert idempotent((n,), n) == avg
        assert pointed_idempotent((1,) * n, 1) == sign_element(n).scale(Fraction(1, factorial(n)))


def test_pointed_idempotent_ranks():
    for n in range(1, 5):
        for lam, i in pointed_indices(n):
            m = regular_matrix(pointed_idempotent(lam, i))
            assert linalg.rank(m) == dim_irrep(lam) * dim_irrep(lower(lam, i))
