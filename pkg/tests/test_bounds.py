import json
import random
from fractions import Fraction
from itertools import combinations, product
from math import ceil

import pytest

from kronbounds.bounds import (check_manivel, full_report, lower_character, lr_coefficient,
                               lr_upper_bound, upper_binomial_product, upper_contingency,
                               upper_dimension, upper_min, upper_schur)
from kronbounds.errors import DomainError
from kronbounds.kronecker import kronecker
from kronbounds.partitions import enumerate_partitions, is_self_conjugate
from kronbounds.stability import stable_kronecker

from oracles import lr_by_restriction


@pytest.mark.parametrize("triple, dim, mn, schur, binom", [
    (((4,), (4,), (4,)), 1, 1, 1, 1),
    (((2, 2), (2, 2), (2, 2)), 2, 2, 20, 60),
    (((3, 1), (3, 1), (4,)), 9, 1, None, None),
    (((3, 2), (3, 2), (3, 2)), 5, 5, None, None),
])
def test_upper_bound_examples(triple, dim, mn, schur, binom):
    assert upper_dimension(*triple) == dim
    assert upper_min(*triple) == mn
    if schur is not None:
        assert upper_schur(*triple) == schur
        assert upper_binomial_product(*triple) == binom


def test_dimension_bound_is_exact_rational():
    value = upper_dimension((3, 1), (2, 2), (2, 1, 1))
    assert value == Fraction(3 * 2, 3)
    value = upper_dimension((2, 2), (2, 2), (3, 1))
    assert value == Fraction(4, 3) and ceil(value) == 2


def test_contingency_examples():
    # the two 2x2 permutation matrices; the binary count sees four 0/1 cubes
    assert upper_contingency((2,), (1, 1), (1, 1)) == (2, 4)
    assert kronecker((2,), (1, 1), (1, 1)) == 1
    assert upper_contingency((5,), (5,), (5,)) == (1, 1)
    with pytest.raises(DomainError):
        upper_contingency((2,), (1,), (1,))


@pytest.mark.parametrize("n", range(1, 7))
def test_sandwich(n):
    parts = enumerate_partitions(n)
    for lam, mu, nu in product(parts, repeat=3):
        g = kronecker(lam, mu, nu)
        assert upper_dimension(lam, mu, nu) >= g
        assert upper_min(lam, mu, nu) >= g
        schur = upper_schur(lam, mu, nu)
        assert schur >= g
        assert upper_binomial_product(lam, mu, nu) >= schur
        ca, ca_star = upper_contingency(lam, mu, nu)
        assert ca >= g and ca_star >= g


@pytest.mark.parametrize("m, ratio", [
    (4, Fraction(57, 105)), (6, Fraction(176, 336)), (8, Fraction(425, 825)),
])
def test_two_row_contingency_vs_schur(m, ratio):
    # both grow like m^4; the contingency count is about half the Schur bound
    lam = (m, m)
    ca, _ = upper_contingency(lam, lam, lam)
    got = Fraction(ca) / upper_schur(lam, lam, lam)
    assert got == ratio
    assert abs(got - 1) <= Fraction(1, 2)


def test_two_row_contingency_ratio_tends_down_to_half():
    ratios = []
    for m in (4, 8, 16, 24):
        lam = (m, m)
        ratios.append(Fraction(upper_contingency(lam, lam, lam)[0]) / upper_schur(lam, lam, lam))
    assert ratios == sorted(ratios, reverse=True)
    assert all(r > Fraction(1, 2) for r in ratios)


def test_lower_character_examples():
    for lam in enumerate_partitions(3):
        assert lower_character(lam, (2, 1)) == 1 == kronecker(lam, (2, 1), (2, 1))
    assert lower_character((2, 2), (2, 2)) == 1
    with pytest.raises(DomainError):
        lower_character((3,), (3,))
    with pytest.raises(DomainError):
        lower_character((3,), (2, 2))


def test_lower_character_staircase_two_rows():
    # principal hooks of (4,3,2,1) are (7,3); the bound is the jump in subset-sum counts
    def subset_sums(k):
        return sum(1 for r in range(3) for c in combinations((7, 3), r) if sum(c) == k)

    for k in range(0, 6):
        tau = (10 - k, k)
        bound = lower_character(tau, (4, 3, 2, 1))
        assert bound == abs(subset_sums(k) - subset_sums(k - 1))
        assert bound <= kronecker((4, 3, 2, 1), (4, 3, 2, 1), tau)


@pytest.mark.parametrize("n", range(1, 11))
def test_lower_character_below_g(n):
    parts = enumerate_partitions(n)
    for mu in filter(is_self_conjugate, parts):
        assert kronecker(mu, mu, mu) >= lower_character(mu, mu) >= 1
        if n > 8:
            continue
        for lam in parts:
            assert lower_character(lam, mu) <= kronecker(lam, mu, mu)


def test_manivel_examples():
    assert check_manivel((2, 1), (2, 1), (2, 1), (1, 1), (1, 1), (2,)) is True
    assert kronecker((3, 2), (3, 2), (4, 1)) == 1
    assert check_manivel((), (), (), (3, 1), (3, 1), (4,)) is True
    assert check_manivel((2, 2), (2, 2), (3, 1), (1,), (1,), (1,)) is None


def test_manivel_random():
    rng = random.Random(5)
    done = 0
    while done < 60:
        t1 = [rng.choice(enumerate_partitions(rng.randint(1, 5)))]
        n1 = sum(t1[0])
        t1 += [rng.choice(enumerate_partitions(n1)) for _ in range(2)]
        n2 = rng.randint(1, 5)
        t2 = [rng.choice(enumerate_partitions(n2)) for _ in range(3)]
        verdict = check_manivel(*t1, *t2)
        if verdict is None:
            continue
        assert verdict is True
        done += 1


@pytest.mark.parametrize("alpha, beta, gamma, c", [
    ((2, 1), (1,), (2,), 1),
    ((3, 2, 1), (2, 1), (2, 1), 2),
    ((2,), (1,), (1,), 1),
    ((2, 2), (1,), (2,), 0),
    ((3,), (2,), (2,), 0),
    ((4, 2), (), (4, 2), 1),
])
def test_lr_examples(alpha, beta, gamma, c):
    assert lr_coefficient(alpha, beta, gamma) == c


def _splits(alpha):
    n = sum(alpha)
    for p in range(n + 1):
        for beta in enumerate_partitions(p):
            for gamma in enumerate_partitions(n - p):
                yield beta, gamma


@pytest.mark.parametrize("n", range(0, 6))
def test_lr_matches_restriction_oracle(n):
    for alpha in enumerate_partitions(n):
        for beta, gamma in _splits(alpha):
            assert lr_coefficient(alpha, beta, gamma) == lr_by_restriction(alpha, beta, gamma)


@pytest.mark.parametrize("n", range(0, 7))
def test_lr_upper_bound(n):
    for alpha in enumerate_partitions(n):
        for beta, gamma in _splits(alpha):
            c = lr_coefficient(alpha, beta, gamma)
            assert lr_upper_bound(alpha, beta, gamma) >= c
            assert c == lr_coefficient(alpha, gamma, beta)
        assert lr_upper_bound(alpha, alpha, ()) == 1


def test_lr_upper_bound_size_mismatch():
    with pytest.raises(DomainError):
        lr_upper_bound((2, 1), (1,), (1,))
    assert lr_coefficient((2, 1), (1,), (1,)) == 0


@pytest.mark.parametrize("total", range(0, 6))
def test_lr_is_stable_kronecker(total):
    for p in range(total + 1):
        for beta in enumerate_partitions(p):
            for gamma in enumerate_partitions(total - p):
                for alpha in enumerate_partitions(total):
                    assert lr_coefficient(alpha, beta, gamma) == stable_kronecker(alpha, beta, gamma)


def test_full_report_examples():
    rep = full_report((2, 2), (2, 2), (3, 1))
    assert rep.true_g == 0 and rep.consistent()
    assert not rep.entry("character").applicable
    assert all(e.value >= 0 for e in rep.entries if e.direction == "upper" and e.applicable)

    rep = full_report((2, 2), (2, 2), (2, 2))
    assert rep.true_g == 1 and rep.consistent()
    assert rep.entry("schur").value == 20
    assert rep.entry("binomial_product").value == 60
    assert rep.entry("character").applicable

    # the character bound is only taken for the last two members
    assert not full_report((2, 2), (3, 1), (3, 1)).entry("character").applicable

    rep = full_report((5, 5, 5), (5, 5, 5), (13, 2))
    assert rep.true_g == kronecker((5, 5, 5), (5, 5, 5), (13, 2))
    assert rep.consistent()


def test_full_report_budget_skips_g():
    rep = full_report((3, 3), (3, 3), (4, 2), budget=1)
    assert rep.true_g is None
    assert all(e.satisfied is None for e in rep.entries)


def test_full_report_json():
    rep = full_report((3, 1), (2, 2), (2, 1, 1))
    text = rep.to_json()
    data = json.loads(text)
    assert json.dumps(data, sort_keys=True) == text
    assert data["true_g"] == "1"
    dim = next(e for e in data["entries"] if e["name"] == "dimension")
    assert dim["value"] == "2" and dim["ceiling"] == "2"
    for e in data["entries"]:
        assert e["value"] is None or isinstance(e["value"], str)


@pytest.mark.parametrize("n", range(1, 7))
def test_full_report_always_consistent(n):
    parts = enumerate_partitions(n)
    for lam, mu, nu in product(parts, repeat=3):
        assert full_report(lam, mu, nu).consistent()
