import random
from itertools import product

import pytest

from kronbounds.characters import dimension
from kronbounds.errors import DomainError
from kronbounds.kronecker import kronecker
from kronbounds.partitions import enumerate_partitions
from kronbounds.stability import (kstab_condition, reduce, shifted_triple, sort_triple,
                                  stability_sequence, stabilization_onset,
                                  stable_kronecker, tail_bound_check, tail_bound_u)


def test_reduce_examples():
    out = reduce((4,), (2, 2), (4,))
    assert out.is_zero and out.witness == 1 and out.s == 0

    out = reduce((3, 1), (3, 1), (3, 1), ell=2)
    assert not out.is_zero
    assert out.s == 1
    assert out.index_set == (1, 2)
    assert out.triple() == ((2, 1), (2, 1), (2, 1))
    assert out.r == 3


def test_zero_certificate_has_no_triple():
    with pytest.raises(DomainError):
        reduce((4,), (2, 2), (4,)).triple()


def test_reduce_rejects_short_length_bound():
    with pytest.raises(DomainError):
        reduce((2, 1, 1), (2, 1, 1), (4,), ell=2)


@pytest.mark.parametrize("n", range(0, 7))
def test_reduce_preserves_g(n):
    parts = enumerate_partitions(n)
    for lam, mu, nu in product(parts, repeat=3):
        g = kronecker(lam, mu, nu)
        out = reduce(lam, mu, nu)
        if out.is_zero:
            assert g == 0
            continue
        assert kronecker(*out.triple()) == g
        assert all(sum(p) == out.r for p in out.triple())
        assert out.r <= 2 * out.s * out.ell ** 2


@pytest.mark.parametrize("n", range(1, 6))
def test_reduce_independent_of_length_bound(n):
    parts = enumerate_partitions(n)
    for lam, mu, nu in product(parts, repeat=3):
        base = reduce(lam, mu, nu)
        wider = reduce(lam, mu, nu, ell=base.ell + 2)
        assert base.is_zero == wider.is_zero
        if not base.is_zero:
            assert kronecker(*base.triple()) == kronecker(*wider.triple())


def test_reduce_twice_keeps_g():
    rng = random.Random(3)
    parts = enumerate_partitions(6)
    for _ in range(100):
        t = [rng.choice(parts) for _ in range(3)]
        first = reduce(*t)
        if first.is_zero:
            continue
        second = reduce(*first.triple())
        g = kronecker(*t)
        assert (second.is_zero and g == 0) or kronecker(*second.triple()) == g


@pytest.mark.parametrize("triple, k, expected", [
    (((2, 2), (2, 2), (3, 1)), 1, False),
    (((1, 1, 1), (1, 1, 1), (3,)), 3, True),
    (((5, 1), (5, 1), (5, 1)), 1, True),
])
def test_kstab_condition(triple, k, expected):
    assert kstab_condition(*triple, k) is expected


def test_kstab_condition_rejects_k0():
    with pytest.raises(DomainError):
        kstab_condition((1,), (1,), (1,), 0)


def test_sort_triple_is_deterministic():
    assert sort_triple((3, 1), (2, 2), (2, 1, 1)) == ((2, 2), (2, 1, 1), (3, 1))
    assert sort_triple((2, 1, 1), (2, 2), (3, 1)) == ((2, 2), (2, 1, 1), (3, 1))


def test_example_sequence():
    seq = stability_sequence((2, 2), (2, 2), (3, 1), 1, 4)
    assert seq.values == [0, 1, 1, 1, 1]
    assert seq.onset == 1 and seq.stabilized and seq.stable_value == 1
    assert seq.t_max == 4


def test_empty_and_constant_sequences():
    assert stability_sequence((), (), (), 1, 3).values == [1, 1, 1, 1]
    seq = stability_sequence((3, 1), (3, 1), (3, 1), 1, 3)
    assert seq.onset == 0 and seq.values == [1, 1, 1, 1]


def test_short_sequence_is_flagged():
    seq = stability_sequence((2, 2), (2, 2), (3, 1), 1, 0)
    assert not seq.stabilized and seq.stable_value is None


@pytest.mark.parametrize("k", [1, 2, 3])
def test_onset_closed_form(k):
    # t0 = max(0, max(l_{k+1}, m_{k+1}) + s - min(l_k, m_k)); k = 1 sorts the triple first
    for n in range(0, 7):
        for lam, mu, nu in product(enumerate_partitions(n), repeat=3):
            a, b, c = sort_triple(lam, mu, nu) if k == 1 else (lam, mu, nu)
            s = n - c.part(1)
            expected = max(0, max(a.part(k + 1), b.part(k + 1)) + s - min(a.part(k), b.part(k)))
            assert stabilization_onset(lam, mu, nu, k) == expected


@pytest.mark.parametrize("n", range(0, 6))
def test_constant_after_onset(n):
    parts = enumerate_partitions(n)
    for lam, mu, nu in product(parts, repeat=3):
        for k in (1, 2):
            onset = stabilization_onset(lam, mu, nu, k)
            if onset > 3:
                continue
            vals = [kronecker(*shifted_triple(lam, mu, nu, k, t)) for t in range(onset, onset + 3)]
            assert len(set(vals)) == 1


def test_monotone_sample():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 6)
        k = rng.randint(1, 3)
        parts = enumerate_partitions(n)
        t = [rng.choice(parts) for _ in range(3)]
        vals = [kronecker(*shifted_triple(*t, k, s)) for s in range(4)]
        assert vals == sorted(vals)


def test_stable_kronecker():
    assert stable_kronecker((), (), ()) == 1
    assert stable_kronecker((1,), (1,), (1,)) == 1
    assert stable_kronecker((2,), (1,), (1,)) == 1


def test_stable_value_independent_of_size():
    # evaluate well past the admissible size and compare
    base = stable_kronecker((2,), (2,), (2,))
    for total in (12, 15):
        triple = [(total - 2, 2)] * 3
        assert kronecker(*triple) == base


def test_tail_bound_u():
    assert tail_bound_u((1,), ell=2, mode="length") == 6
    assert tail_bound_u((1,), mode="durfee", h=1) == 8
    with pytest.raises(DomainError):
        tail_bound_u((1,), mode="length")
    with pytest.raises(DomainError):
        tail_bound_u((1,), ell=2, mode="bogus")


def test_tail_bound_check_example():
    tb = tail_bound_check((6, 2), (6, 2), (1,), mode="length")
    assert tb.u == 6 and tb.bound == dimension((5, 1)) == 5
    assert tb.applicable and tb.g == kronecker((6, 2), (6, 2), (7, 1))
    assert tb.holds


@pytest.mark.parametrize("mode", ["length", "durfee"])
def test_tail_bound_holds_when_applicable(mode):
    checked = 0
    for n in range(6, 11):
        for lam, mu in product(enumerate_partitions(n, max_length=2), repeat=2):
            for tail in ((1,), (2,), (1, 1)):
                tb = tail_bound_check(lam, mu, tail, mode=mode)
                if tb.applicable:
                    checked += 1
                    assert tb.holds
    assert checked > 0
