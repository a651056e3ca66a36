import itertools
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from dspringer.qseries import (ONE, ZERO, QPolynomial, add, eval_int, mul, q_binomial,
                               q_factorial, q_int)


def P(*cs):
    return QPolynomial(cs)


def inversions_generating_function(n):
    """Oracle: sum of q^inv(w) over S_n equals [n]_q!."""
    cs = [0] * (comb(n, 2) + 1)
    for w in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])
        cs[inv] += 1
    return QPolynomial(cs)


def partitions_in_box(k, m):
    """Oracle: sum of q^|lambda| over partitions inside a k x m box."""
    cs = [0] * (k * m + 1)
    for parts in itertools.combinations_with_replacement(range(m + 1), k):
        cs[sum(parts)] += 1
    return QPolynomial(cs)


def test_normalization():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P(0, 0).coeffs == ()
    assert ZERO.degree == -1


def test_add_examples():
    assert add(P(1, 1), P(0, 1, 1)) == P(1, 2, 1)
    assert add(P(3, 0, 4), ZERO) == P(3, 0, 4)
    assert add(P(1), P(-1)).coeffs == ()


def test_mul_examples():
    assert mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert mul(P(5, 0, -2), ONE) == P(5, 0, -2)
    assert mul(P(1, 1), P(1, 1, 1)) == P(1, 2, 2, 1)
    assert mul(P(1, 1), ZERO) == ZERO


def test_q_int():
    assert q_int(1) == ONE
    assert q_int(3) == P(1, 1, 1)
    assert q_int(5) == P(1, 1, 1, 1, 1)
    for bad in (0, -3):
        with pytest.raises(ValueError):
            q_int(bad)


def test_q_factorial():
    assert q_factorial(0) == ONE
    assert q_factorial(3) == P(1, 2, 2, 1)
    f4 = q_factorial(4)
    assert f4.degree == 6 and eval_int(f4, 1) == 24
    for n in range(7):
        assert q_factorial(n) == inversions_generating_function(n)
    with pytest.raises(ValueError):
        q_factorial(-1)


def test_q_binomial_examples():
    for n in range(6):
        assert q_binomial(n, 0) == ONE
    assert q_binomial(4, 2) == P(1, 1, 2, 1, 1)
    for n, k in [(2, 3), (-1, 0), (3, -1)]:
        with pytest.raises(ValueError):
            q_binomial(n, k)


@pytest.mark.parametrize("n", range(13))
def test_q_binomial_identities(n):
    for k in range(n + 1):
        b = q_binomial(n, k)
        assert b == partitions_in_box(k, n - k)
        assert b == q_binomial(n, n - k)
        assert b * q_factorial(k) * q_factorial(n - k) == q_factorial(n)
        assert eval_int(b, 1) == comb(n, k)
        assert b.is_palindromic() and b.is_unimodal()
        assert all(c > 0 for c in b.coeffs)


def test_eval_int():
    assert eval_int(P(1, 1, 1), 1) == 3
    assert eval_int(q_factorial(3) * q_int(2) * q_int(2), 2) == 189
    assert eval_int(ZERO, 5) == 0
    assert eval_int(P(0, 0, 1), 10**20) == 10**40


def test_json_round_trip():
    p = P(1, -2, 10**30)
    assert p.to_json() == ["1", "-2", str(10**30)]
    assert QPolynomial.from_json(p.to_json()) == p


def test_unimodal_detector():
    assert P(1, 3, 2).is_unimodal()
    assert not P(1, 0, 1).is_unimodal()
    assert eval_int(q_factorial(5), 1) == factorial(5)


polys = st.lists(st.integers(-50, 50), max_size=7).map(QPolynomial)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys, st.integers(-5, 5))
def test_eval_is_ring_map(a, b, x):
    assert eval_int(a * b, x) == eval_int(a, x) * eval_int(b, x)
    assert eval_int(a + b, x) == eval_int(a, x) + eval_int(b, x)
    assert eval_int(a, 1) == sum(a.coeffs)
