import random
from fractions import Fraction
from math import factorial

import pytest

from chromsym.graphs import complete, cycle, path, pointed_csf
from chromsym.group_algebra import (
    GroupAlgebraElement,
    all_perms,
    circ,
    idempotent,
    marked_cycle_type,
    perms_fixing,
    pointed_ch,
    pointed_idempotent,
)
from chromsym.partitions import dim_irrep, lower, partitions_of, raise_part, up_moves
from chromsym.pointed import (
    closed_form,
    closed_form_coefficients,
    combine,
    expand_pointed,
    generalized_character,
    generalized_character_trace,
    generating_function_check,
    marked_types,
    path_to_cycle,
    pointed_e,
    pointed_indices,
    pointed_schur,
    pointed_schur_coefficients_solve,
    pointed_schur_coefficients_trace,
    pointed_schur_from_characters,
)
from chromsym.symfun import PointedSymFun, SymFun, positivity, psi

T = PointedSymFun.t_power(1)
P1 = PointedSymFun.from_symfun(SymFun.p(1))


def lift(f):
    return PointedSymFun.from_symfun(f)


def test_pointed_index_counts():
    # sum over m < n of p(m)
    assert [len(pointed_indices(n)) for n in range(1, 8)] == [1, 2, 4, 7, 12, 19, 30]


def test_small_pointed_schur():
    assert pointed_schur((1, 1), 1) == P1 - T
    for n in range(1, 8):
        expected = PointedSymFun.from_t_coefficients({k - 1: SymFun.h(n - k) for k in range(1, n + 1)})
        assert pointed_schur((n,), n) == expected
        expected = PointedSymFun.from_t_coefficients({k - 1: SymFun.e(n - k).scale((-1) ** (k - 1)) for k in range(1, n + 1)})
        assert pointed_schur((1,) * n, 1) == expected


def test_two_routes_to_pointed_schur():
    for n in range(1, 7):
        for lam, i in pointed_indices(n):
            assert pointed_schur(lam, i) == pointed_schur_from_characters(lam, i)


def test_generalized_character_is_class_function():
    rng = random.Random(1)
    for n in range(1, 6):
        perms = all_perms(n)
        for lam, i in pointed_indices(n):
            for mu, k in marked_types(n):
                reps = [p for p in perms if marked_cycle_type(p, n) == (mu, k)]
                values = {generalized_character_trace(lam, i, p) for p in rng.sample(reps, min(3, len(reps)))}
                assert values == {generalized_character(lam, i, mu)}


def test_schur_coefficients_match_idempotent_traces():
    rng = random.Random(2)
    for n in range(1, 6):
        for _ in range(3):
            s = rng.choice(all_perms(n))
            coeffs = expand_pointed(pointed_ch(GroupAlgebraElement.of(s), n), "pointed-schur").coefficients
            for lam, i in pointed_indices(n):
                tr = factorial(n) * (GroupAlgebraElement.of(s) * pointed_idempotent(lam, i)).identity_coeff()
                expected = tr / (factorial(n) * dim_irrep(lower(lam, i)))
                assert coeffs.get((lam, i), 0) == expected


def test_solve_and_trace_agree():
    for n in range(1, 7):
        for f in (pointed_csf(path(n), 1), pointed_csf(cycle(n), n), pointed_csf(complete(n), 1)):
            assert pointed_schur_coefficients_solve(f) == pointed_schur_coefficients_trace(f)


def test_expansion_round_trip():
    f = pointed_csf(path(5), 3)
    for basis in ("pointed-schur", "pointed-e"):
        assert combine(expand_pointed(f, basis).coefficients, basis) == f


def test_expansion_examples():
    rep = expand_pointed(pointed_csf(path(2), 1), "pointed-schur")
    assert rep.coefficients == {((1, 1), 1): 1} and rep.is_nonnegative
    assert expand_pointed(pointed_csf(cycle(2), 2), "pointed-schur").coefficients == {((1, 1), 1): 1}
    assert pointed_csf(cycle(1), 1).is_zero()


def test_pointed_e_examples():
    assert pointed_e((2,), 2) == P1 - T
    assert pointed_e((2, 1), 1) == lift(SymFun.e(2))


def test_t_times_pointed_e():
    for n in range(1, 8):
        for lam in partitions_of(n):
            for i, up in up_moves(lam):
                assert T * pointed_e(lam, i) == lift(SymFun.e(*lam)) - pointed_e(up, i + 1)


def test_psi_pointed_e():
    for n in range(1, 9):
        for lam, i in pointed_indices(n):
            assert psi(pointed_e(lam, i)) == SymFun.e(*lam).scale(i)


def test_psi_pointed_schur_scalar():
    for n in range(1, 8):
        for lam, i in pointed_indices(n):
            scalar = Fraction(n * dim_irrep(lower(lam, i)), dim_irrep(lam))
            assert psi(pointed_schur(lam, i)) == SymFun.s(*lam).scale(scalar)


def test_printed_psi_scalar_fails_at_n_2():
    # the printed scalar f^(lam_i)/(n-1) would give psi(p_1 - t) = s_11
    assert psi(pointed_schur((1, 1), 1)) == SymFun.s(1, 1).scale(2)


def test_product_lemma():
    for a in range(1, 5):
        for b in range(a, 8 - a):
            for x in pointed_indices(a):
                for y in pointed_indices(b):
                    assert positivity(psi(pointed_schur(*x) * pointed_schur(*y)), "s").is_nonnegative


def shifted(alpha, offset, big):
    """alpha on 1..m moved to 1+offset..m+offset inside S_big."""
    out = {}
    for p, c in alpha.coeffs.items():
        q = list(range(1, big + 1))
        for x, y in enumerate(p, start=1):
            q[x + offset - 1] = y + offset
        out[tuple(q)] = c
    return GroupAlgebraElement(big, out)


def test_circle_product_of_idempotents_is_pointed_schur_positive():
    # eps_lam lives on 1..n-1, so it fixes the point n
    for n in range(2, 5):
        for m in range(1, 4):
            big = n + m - 1
            for lam in partitions_of(n - 1):
                e_lam = idempotent(lam, big, range(1, n))
                for mu, j in pointed_indices(m):
                    e_mu = shifted(pointed_idempotent(mu, j, 1), n - 1, big)
                    x = circ(e_lam, e_mu, n)
                    assert expand_pointed(pointed_ch(x, n), "pointed-schur").is_nonnegative


def test_circle_product_is_multiplicative():
    rng = random.Random(3)
    for n, big in [(2, 4), (3, 5), (3, 6)]:
        a = GroupAlgebraElement(big, {rng.choice(perms_fixing(big, range(n + 1, big + 1))): 1 for _ in range(2)})
        b = GroupAlgebraElement(big, {rng.choice(perms_fixing(big, range(1, n))): 1 for _ in range(2)})
        lhs = pointed_ch(circ(a, b, n), n)
        assert lhs == pointed_ch(a, n, range(1, n + 1)) * pointed_ch(b, n, range(n, big + 1))


def test_pointed_e_is_pointed_schur_positive():
    for n in range(1, 7):
        for lam, i in pointed_indices(n):
            assert expand_pointed(pointed_e(lam, i), "pointed-schur").is_nonnegative


def test_paths_rooted_at_end_are_pointed_schur_positive():
    for n in range(1, 9):
        assert expand_pointed(pointed_csf(path(n), n), "pointed-schur").is_nonnegative


def test_closed_forms():
    assert closed_form("complete", 2) == P1 - T
    assert closed_form_coefficients("path", 3) == {((3,), 3): 1, ((2, 1), 1): 1}
    assert closed_form("path", 3) == lift(SymFun.p(1, 1) - SymFun.p(2)) - P1 * T + T * T
    assert closed_form_coefficients("cycle", 3) == {((3,), 3): 2}
    for n in range(1, 8):
        assert closed_form("complete", n) == pointed_csf(complete(n), n, "deletion-contraction")
        assert closed_form("path", n) == pointed_csf(path(n), n)
        assert closed_form("cycle", n) == pointed_csf(cycle(n), n)
        assert path_to_cycle(closed_form_coefficients("path", n)) == closed_form_coefficients("cycle", n)


@pytest.mark.parametrize("family", ["path", "cycle", "stanley"])
def test_generating_functions(family):
    assert generating_function_check(family, 3)["ok"]
    assert generating_function_check(family, 6)["ok"]


def test_unknown_basis():
    with pytest.raises(ValueError):
        expand_pointed(P1, "pointed-q")
