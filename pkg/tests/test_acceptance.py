"""One test per acceptance criterion, each printing a PASS/FAIL line."""

import random
import time
from fractions import Fraction
from math import factorial

from chromsym import canon, linalg
from chromsym.graphs import Graph, Hypergraph, complete, csf, cycle, path, pointed_csf
from chromsym.group_algebra import (
    GroupAlgebraElement,
    all_perms,
    alpha_chordal,
    alpha_forest,
    frobenius_ch,
)
from chromsym.irreps import irrep_matrix
from chromsym.partitions import dim_irrep, partitions_of
from chromsym.pointed import expand_pointed
from chromsym.series import PowerSeries, builtin_series, formal_group_law
from chromsym.suites import (
    census,
    deep_path_18_4,
    pointed_identity_items,
    suite_forest_operator,
    suite_hyperforest_positivity,
    suite_ordering_invariance,
    suite_unit_interval,
)
from chromsym.symfun import PointedSymFun, SymFun, positivity


def _required_failures(report):
    return [x for x in report["items"] if not x["ok"] and not x["optional"]]


def test_criterion_1_exactness_corpus(criterion):
    criterion("1  ch(alpha_F,pi) = X_F: forests n<=7 x 3 orders, hyperforest corpus n<=7, < 5 min")
    start = time.perf_counter()
    report = suite_forest_operator(max_n=7, orders=3)
    elapsed = time.perf_counter() - start
    forests = sum(len(canon.forests(n)) for n in range(1, 8))
    assert sum(x["name"].startswith("forest ") for x in report["items"]) == forests
    assert any(x["name"].startswith("hyperforest ") for x in report["items"])
    assert not _required_failures(report), _required_failures(report)[:3]
    assert elapsed < 300


def test_criterion_2_trace_identity(criterion):
    criterion("2  f^lam * tr rho^lam(alpha) = n! [s_lam] ch(alpha): 50 random sparse alpha per n<=6")
    rng = random.Random(2)
    mismatches = []
    for n in range(1, 7):
        perms = all_perms(n)
        for _ in range(50):
            alpha = GroupAlgebraElement(
                n, {rng.choice(perms): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 5))}
            )
            s = frobenius_ch(alpha).convert("s")
            for lam in partitions_of(n):
                lhs = dim_irrep(lam) * linalg.trace(irrep_matrix(lam, alpha))
                rhs = factorial(n) * s.coefficient(lam)
                if lhs != rhs:
                    mismatches.append((n, lam, lhs, rhs))
    assert not mismatches, f"{len(mismatches)} mismatches, first {mismatches[0]}"


def test_criterion_3_worked_values(criterion):
    criterion("3  worked values: X_(P_2,1), single hyperedge n<=6, K_3 chordal operator, C_4 ordering pair")
    failures = []
    if pointed_csf(path(2), 1) != PointedSymFun.from_symfun(SymFun.p(1)) - PointedSymFun.t_power(1):
        failures.append("X_(P_2,1)")
    for n in range(1, 7):
        x = csf(Hypergraph(n, (tuple(range(1, n + 1)),)))
        if x != SymFun.p(*([1] * n)) - SymFun.p(n):
            failures.append(f"single hyperedge n={n}: got {x}")
    one = GroupAlgebraElement.identity(3)
    t = lambda a, b: GroupAlgebraElement.of(tuple({a: b, b: a}.get(x, x) for x in range(1, 4)))
    k3 = ((one - t(2, 3)) * (one - t(1, 2) - t(1, 3))).scale(6)
    if alpha_chordal(complete(3)) != k3 or frobenius_ch(k3) != csf(complete(3)):
        failures.append("K_3 chordal operator")
    pi = [(1, 2), (2, 3), (3, 4), (1, 4)]
    pi2 = [(1, 2), (3, 4), (2, 3), (1, 4)]
    if frobenius_ch(alpha_forest(cycle(4), pi)) == frobenius_ch(alpha_forest(cycle(4), pi2)):
        failures.append("C_4 ordering pair")
    assert not failures, failures


def test_criterion_4_positivity_theorems(criterion):
    criterion("4  edge-2-colourable hyperforests Schur positive (n<=7); X_(P_n,n) pointed Schur positive (n<=8)")
    report = suite_hyperforest_positivity(7)
    assert not _required_failures(report)
    assert len(report["items"]) > 50
    for n in range(1, 9):
        assert expand_pointed(pointed_csf(path(n), n), "pointed-schur").is_nonnegative


def test_criterion_5_pointed_identities(criterion):
    criterion("5  s_(1^n),1, t e_(lam,i), psi(e_(lam,i)), K_n / path / cycle closed forms, n<=8")
    wanted = (
        "s_(1^",
        "t e_(lam,i)",
        "psi(e_(lam,i))",
        "closed form complete",
        "closed form path",
        "closed form cycle",
    )
    items = [x for x in pointed_identity_items(8, lemma315_max=2) if x["name"].startswith(wanted)]
    assert len(items) == 8 + 5
    assert all(x["ok"] for x in items), [x["name"] for x in items if not x["ok"]]


def test_criterion_6_conjecture_harnesses(criterion):
    criterion("6  [1]abar^k order invariance (forests n<=6, k<=10); census n<=8 exact, non-path semistable trees")
    report = suite_ordering_invariance(max_n=6, k_max=10)
    assert not _required_failures(report)
    data = census(8)
    assert [r["n"] for r in data["rows"]] == list(range(1, 9))
    for row in data["rows"]:
        assert set(row["counts"]) == {"unlabeled_trees", "labeled_trees", "unlabeled_forests", "labeled_forests"}
        assert set(row["matches"]) == set(row["counts"])
        assert row["counts"]["unlabeled_trees"] == len(row["semistable_trees"]) <= row["trees"]
        assert any(t["path"] for t in row["semistable_trees"])
    assert any(not t["path"] for row in data["rows"] for t in row["semistable_trees"])


def test_criterion_7_unit_interval(criterion):
    criterion("7  X_(G(m),1) pointed e-positive for all m, n<=6 (n=7 included)")
    report = suite_unit_interval(max_n=6, deep=True)
    assert all(x["ok"] for x in report["items"])
    assert sum(x["optional"] for x in report["items"]) == 429


def test_criterion_8_formal_group_laws(criterion):
    criterion("8  exp(x)-1 gives sum e_n to degree 6; permutations OGF law Schur positive to degree 5")
    f = PowerSeries([0] + [Fraction(1, factorial(k)) for k in range(1, 7)])
    assert formal_group_law(f, 6) == SymFun("e", {(k,): 1 for k in range(1, 7)})
    assert positivity(formal_group_law(builtin_series("permutations-ogf", 5), 5), "s").is_nonnegative


def test_criterion_9_deep_path_18_4(criterion):
    criterion("9  X_(P_18,4) has a negative pointed Schur coefficient (deep)")
    item = deep_path_18_4()
    assert item["ok"], item
