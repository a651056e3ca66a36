import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from dspringer.shapes import (ComponentTableau, Filling, GlobalParams, classify_filling,
                              component_word, enumerate_components, enumerate_fillings,
                              filling_to_partial_permutation, is_standard,
                              iter_component_flags, partial_permutation_to_filling,
                              tableau_to_partial_permutation)

_ = None

# The 24 fillings listed for K^3 of Y_{4,3}, rows from the top.
K3_OF_Y43 = [
    [[1, 4], [2, _], [3, _]], [[1, 4], [3, _], [2, _]], [[2, _], [1, 4], [3, _]],
    [[3, _], [1, 4], [2, _]], [[3, _], [2, _], [1, 4]], [[2, _], [3, _], [1, 4]],
    [[2, 4], [1, _], [3, _]], [[2, 4], [3, _], [1, _]], [[1, _], [2, 4], [3, _]],
    [[3, _], [2, 4], [1, _]], [[1, _], [3, _], [2, 4]], [[3, _], [1, _], [2, 4]],
    [[2, 3], [1, _], [4, _]], [[2, 3], [4, _], [1, _]], [[1, _], [2, 3], [4, _]],
    [[4, _], [2, 3], [1, _]], [[1, _], [4, _], [2, 3]], [[4, _], [1, _], [2, 3]],
    [[1, 3], [2, _], [4, _]], [[1, 3], [4, _], [2, _]], [[2, _], [1, 3], [4, _]],
    [[4, _], [1, 3], [2, _]], [[2, _], [4, _], [1, 3]], [[4, _], [2, _], [1, 3]],
]

# The 8 fillings listed for K^2 of Y_{3,(1^2),3}.
K2_OF_Y333 = [
    [[_, 3], [1, _], [2, _]], [[_, 3], [2, _], [1, _]],
    [[_, 2], [1, _], [3, _]], [[_, 2], [3, _], [1, _]],
    [[_, _], [1, 2], [3, _]], [[_, _], [1, 3], [2, _]],
    [[_, _], [2, _], [1, 3]], [[_, _], [3, _], [1, 2]],
]

SMALL = [(n, s) for n in range(2, 6) for s in range(n - 1, n + 2)]


def brute_force_fillings(params):
    """Oracle: every injective placement of 1..n in the cells, kept when the
    left column is full and each double row increases."""
    cells = params.cells()
    out = set()
    for placed in itertools.permutations(cells, params.n):
        by_cell = dict(zip(placed, range(1, params.n + 1)))
        ok = True
        for r in range(params.s):
            if params.is_double_row(r):
                left, right = by_cell.get((r, 0)), by_cell.get((r, 1))
                if left is None or (right is not None and right < left):
                    ok = False
                    break
        if ok:
            out.add(tuple(placed))
    return out


def expected_filling_count(n, s):
    # the single right-column label goes into a double row next to a smaller
    # left label, or alone into one of the s-n+1 top rows
    return factorial(n) * (n - 1) // 2 + (s - n + 1) * factorial(n)


def test_params_validation():
    with pytest.raises(ValueError):
        GlobalParams(1, 1)
    with pytest.raises(ValueError):
        GlobalParams(4, 2)
    assert GlobalParams.of(4).s == 3
    assert GlobalParams(4, 3).ambient_dim == 6


@pytest.mark.parametrize("n,s", SMALL + [(6, 5), (6, 8)])
def test_basis_frame_is_bijective(n, s):
    p = GlobalParams(n, s)
    idx = [p.basis_index(c) for c in p.cells()]
    assert sorted(idx) == list(range(1, p.ambient_dim + 1))
    for c in p.cells():
        assert p.cell_of(p.basis_index(c)) == c
    # x moves one cell to the left
    for r in range(p.s):
        if p.is_double_row(r):
            assert p.basis_index((r, 1)) - (n - 1) == p.basis_index((r, 0))


def test_component_examples():
    comps = enumerate_components(GlobalParams(4, 3))
    assert len(comps) == 3
    words = ["".join(map(str, tableau_to_partial_permutation(t))) for t in comps]
    assert sorted(words) == ["3216", "3261", "3621"]
    assert words[0] == "3621"  # ordered by the top-right entry i = 2, 3, 4
    comps = enumerate_components(GlobalParams(3, 3))
    assert [t.top_right for t in comps] == [1, 2, 3]
    assert len(enumerate_components(GlobalParams(2, 1))) == 1


@pytest.mark.parametrize("n,s", SMALL + [(6, 5), (7, 9)])
def test_components_standard_and_words(n, s):
    p = GlobalParams(n, s)
    comps = enumerate_components(p)
    assert len(comps) == n - p.min_index + 1
    for t in comps:
        assert is_standard(t)
        assert tableau_to_partial_permutation(t) == component_word(p, t.top_right)


def test_nonstandard_detected():
    p = GlobalParams(3, 2)
    assert not is_standard(ComponentTableau(p, 1, (2, 3)))
    assert not is_standard(ComponentTableau(p, 2, (3, 1)))


def test_filling_examples():
    assert len(enumerate_fillings(GlobalParams(4, 3))) == 36
    assert len(enumerate_fillings(GlobalParams(3, 3))) == 12
    assert len(enumerate_fillings(GlobalParams(2, 1))) == 1
    f = Filling.from_rows(GlobalParams(3, 3), [[_, _], [1, 2], [3, _]])
    assert filling_to_partial_permutation(f) == (2, 4, 1)


@pytest.mark.parametrize("n,s", SMALL)
def test_fillings_match_brute_force(n, s):
    p = GlobalParams(n, s)
    got = enumerate_fillings(p)
    assert {f.positions for f in got} == brute_force_fillings(p)
    assert len(got) == expected_filling_count(n, s)
    assert [f.positions for f in got] == sorted(f.positions for f in got)


@pytest.mark.parametrize("n,s", SMALL + [(6, 7)])
def test_filling_words_are_injective_and_invertible(n, s):
    p = GlobalParams(n, s)
    words = set()
    for f in enumerate_fillings(p):
        w = filling_to_partial_permutation(f)
        assert len(set(w)) == n and set(range(1, n)) <= set(w)
        words.add(w)
        assert partial_permutation_to_filling(p, w) == f
    assert len(words) == expected_filling_count(n, s)


def test_listed_component_flags():
    p = GlobalParams(4, 3)
    listed = {Filling.from_rows(p, rows).positions for rows in K3_OF_Y43}
    assert len(listed) == 24
    assert {f.positions for f in iter_component_flags(p, 3)} == listed
    p = GlobalParams(3, 3)
    listed = {Filling.from_rows(p, rows).positions for rows in K2_OF_Y333}
    assert len(listed) == 8
    assert {f.positions for f in iter_component_flags(p, 2)} == listed


def test_classification_counts_match_euler_characteristic():
    # the permutation flags of K^i are the cell centers: (n-1)! (i-1 + s-n+1) (n-i+1)
    for n, s in SMALL + [(6, 5), (6, 8)]:
        p = GlobalParams(n, s)
        fs = enumerate_fillings(p)
        for i in p.component_indices():
            cnt = sum(classify_filling(f, i) for f in fs)
            assert cnt == factorial(n - 1) * (s + i - n) * (n - i + 1)


def test_every_filling_lies_in_some_component():
    for n, s in SMALL:
        p = GlobalParams(n, s)
        for f in enumerate_fillings(p):
            assert any(classify_filling(f, i) for i in p.component_indices())


def test_invalid_inputs():
    p = GlobalParams(3, 2)
    with pytest.raises(ValueError):
        Filling.from_rows(p, [[2, 1], [3, _]])
    with pytest.raises(ValueError):
        Filling.from_rows(p, [[1, _], [2, _]])
    with pytest.raises(ValueError):
        partial_permutation_to_filling(p, (3, 4, 2))
    with pytest.raises(ValueError):
        classify_filling(enumerate_fillings(p)[0], 1)
    with pytest.raises(ValueError):
        component_word(p, 4)


def test_json_shapes():
    p = GlobalParams(3, 3)
    t = enumerate_components(p)[1]
    assert t.to_json()["rows"] == [[None, 2], [1], [3]]
    f = Filling.from_rows(p, K2_OF_Y333[0])
    assert f.to_json() == {"n": 3, "s": 3, "rows": K2_OF_Y333[0]}


@settings(deadline=None, max_examples=50)
@given(st.integers(2, 6), st.integers(0, 3), st.data())
def test_word_round_trip_property(n, extra, data):
    p = GlobalParams(n, n - 1 + extra)
    fs = enumerate_fillings(p)
    f = fs[data.draw(st.integers(0, len(fs) - 1))]
    assert partial_permutation_to_filling(p, filling_to_partial_permutation(f)) == f
