import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from hprimes.deleting import (StepIndex, ZeroPivotError, as_matrix, bareiss_det, dd_inverse_run,
                              dd_inverse_step, dd_run, dd_step, dd_trace, diagonal_product,
                              enumerate_E, mp_leq, mp_less, pivot_sequence, random_generic_matrix,
                              successor)
from hprimes.perms import Permutation, length

SIZES = [(2, 2), (2, 3), (3, 2), (3, 3)]


def leibniz(Y):
    n = len(Y)
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction((-1) ** length(Permutation(k + 1 for k in perm)))
        for i in range(n):
            term *= Y[i][perm[i]]
        total += term
    return total


class TestOrdering:
    def test_examples(self):
        assert mp_leq((1, 4), (2, 2), 2)
        assert mp_leq((3, 1), (3, 2), 2)
        assert mp_leq((2, 2), (1, 2), 2)

    def test_printed_reading_is_not_reflexive(self):
        assert not mp_leq((2, 1), (2, 1), 2, printed=True)
        assert mp_leq((2, 1), (2, 1), 2)

    @pytest.mark.parametrize("m, p", SIZES)
    def test_total_order_on_E(self, m, p):
        E = enumerate_E(m, p)
        for a in E:
            assert mp_leq(a, a, m)
            for b in E:
                if a != b:
                    assert mp_less(a, b, m) != mp_less(b, a, m)
                for c in E:
                    if mp_leq(a, b, m) and mp_leq(b, c, m):
                        assert mp_leq(a, c, m)

    @pytest.mark.parametrize("m, p", SIZES)
    def test_E_shape(self, m, p):
        n = m + p
        E = enumerate_E(m, p)
        assert len(E) == n * n
        assert E[0] == (m - 1, n) and E[-1] == (n, n + 1)
        assert (m, n) not in E
        assert all(mp_less(a, b, m) for a, b in zip(E, E[1:]))

    def test_successor(self):
        assert successor((1, 1), 2, 2) == (3, 1)
        E = enumerate_E(2, 3)
        assert all(successor(a, 2, 3) == b for a, b in zip(E, E[1:]))
        with pytest.raises(ValueError):
            successor((5, 6), 2, 3)

    def test_pivot_sequence(self):
        seq = pivot_sequence(2, 2, (2, 2))
        assert seq[0] == (4, 4) and seq[-1] == (2, 2)
        assert pivot_sequence(2, 2, (4, 5)) == []
        with pytest.raises(ValueError):
            pivot_sequence(2, 2, (2, 4))


class TestSteps:
    def test_identity_and_diagonal_fixed(self):
        for M in (as_matrix([[int(i == j) for j in range(4)] for i in range(4)]),
                  as_matrix([[(i + 2) * (i == j) for j in range(4)] for i in range(4)])):
            # off-diagonal pivots vanish and are rejected; diagonal ones leave M alone
            for r in (r for r in pivot_sequence(2, 2, (1, 4)) if r.row == r.col):
                assert dd_step(M, r, 2) == M
                assert dd_inverse_step(M, r, 2) == M

    def test_zero_pivot_reported(self):
        M = as_matrix([[1, 2, 3, 4], [5, 6, 7, 8], [1, 1, 1, 1], [2, 3, 0, 1]])
        with pytest.raises(ZeroPivotError) as info:
            dd_step(M, (4, 3), 2)
        assert info.value.pivot == StepIndex(4, 3)

    def test_target_top_is_noop(self, rng):
        Y = random_generic_matrix(4, 2, rng)
        assert dd_run(Y, 2, (4, 5)) == Y

    def test_full_run_n4(self, rng):
        Y = random_generic_matrix(4, 2, rng, target=(1, 4))
        steps = list(dd_trace(Y, 2, (1, 4)))
        assert len(steps) == 16
        assert steps[-1][0] == (1, 4)

    def test_pivot_entry_unchanged(self, rng):
        Y = random_generic_matrix(5, 2, rng)
        for r, Z in dd_trace(Y, 2, (2, 2)):
            if r != (5, 6):
                assert Z[r.row - 1][r.col - 1] == prev[r.row - 1][r.col - 1]
            prev = Z

    @pytest.mark.parametrize("m, p", SIZES)
    def test_settled_entries_stay_put(self, m, p):
        # once the run passes below (i,a), later steps leave entry (i,a) alone
        n = m + p
        rng = random.Random(m * 10 + p)
        Y = random_generic_matrix(n, m, rng)
        trace = list(dd_trace(Y, m, (m - 1, n)))
        for k, (r, Z) in enumerate(trace):
            for _, later in trace[k + 1:]:
                for i in range(1, n + 1):
                    for a in range(1, n + 1):
                        if (i, a) != (m, n) and mp_leq(r, (i, a), m) and (i, a) != tuple(r):
                            assert later[i - 1][a - 1] == Z[i - 1][a - 1]


def int_matrices(n):
    return st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=40, deadline=None)
@given(int_matrices(5), st.sampled_from([(5, 1), (2, 5), (3, 4), (1, 1)]))
def test_step_inverse(rows, pivot):
    Y = as_matrix(rows)
    try:
        stepped = dd_step(Y, pivot, 2)
    except ZeroPivotError:
        return
    assert dd_inverse_step(stepped, pivot, 2) == Y


@settings(max_examples=30, deadline=None)
@given(int_matrices(5))
def test_bareiss_matches_leibniz(rows):
    Y = as_matrix(rows)
    assert bareiss_det(Y) == leibniz(Y)


def test_bareiss_fractions():
    Y = as_matrix([[Fraction(1, 2), 3], [Fraction(2, 3), Fraction(-1, 5)]])
    assert bareiss_det(Y) == leibniz(Y) == Fraction(-1, 10) - 2


@pytest.mark.parametrize("n", [4, 5])
def test_determinant_identity_against_leibniz(n, rng):
    for m in range(2, n - 1):
        for _ in range(20):
            Y = random_generic_matrix(n, m, rng, target=(m, m))
            out = dd_run(Y, m, (m, m))
            assert diagonal_product(out) == leibniz(Y)
            assert dd_inverse_run(out, m, (m, m)) == Y


def test_round_trip_from_bottom(rng):
    Y = random_generic_matrix(5, 3, rng)
    out = dd_run(Y, 3, (2, 5))
    assert dd_inverse_run(out, 3, (2, 5)) == Y
