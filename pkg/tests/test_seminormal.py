import itertools

import pytest

from rookq.errors import ShapeTooLarge, WeightMismatch
from rookq.exact import LaurentPoly, RationalFunction
from rookq.shapes import partitions_of, partitions_up_to, standard_count
from rookq.characters import chi_oracle
from rookq.seminormal import (
    enumerate_tableaux,
    gen_matrix_P,
    gen_matrix_T,
    quadratic_check,
    commute_check,
    standard_word,
    trace_standard_element,
)

Q = LaurentPoly.monomial("q", 1)
S = LaurentPoly.half_monomial("q", 1)


class TestTableaux:
    def test_counts(self):
        assert len(enumerate_tableaux((1,), 5)) == 5
        assert len(enumerate_tableaux((2, 1), 3)) == 2
        assert len(enumerate_tableaux((), 3)) == 1

    def test_count_formula(self):
        for n in range(6):
            for lam in partitions_up_to(n):
                assert len(enumerate_tableaux(lam, n)) == standard_count(lam, n)

    def test_shape_too_large(self):
        with pytest.raises(ShapeTooLarge):
            enumerate_tableaux((3, 1), 3)

    def test_deterministic_order(self):
        basis = enumerate_tableaux((1,), 2)
        assert basis == (((1,),), ((2,),))


class TestGeneratorMatrices:
    def test_two_dim_example(self):
        # lambda=(1), n=2 in basis {1}, {2}: columns are images of the basis
        m = gen_matrix_T(1, (1,), 2)
        dense = m.dense()
        rf = lambda p: RationalFunction(p)
        assert dense[0][0] == rf(LaurentPoly.zero("q"))
        assert dense[1][0] == rf(S)
        assert dense[0][1] == rf(S)
        assert dense[1][1] == rf(Q - 1)

    def test_single_row_eigenvalue(self):
        for n in range(2, 5):
            m = gen_matrix_T(1, (n,), n)
            assert m.dimension == 1
            assert m.entry(0, 0) == RationalFunction(Q)

    def test_sign_module(self):
        m = gen_matrix_T(1, (1, 1), 2)
        assert m.dimension == 1
        assert m.entry(0, 0) == RationalFunction(-1, 1, var="q")

    def test_idempotents(self):
        for n in range(1, 5):
            for lam in partitions_up_to(n):
                for i in range(1, n + 1):
                    p = gen_matrix_P(i, lam, n)
                    dense = p.dense()
                    for r in range(p.dimension):
                        for c in range(p.dimension):
                            # P^2 = P entrywise for a diagonal 0/1 matrix
                            assert dense[r][c] * dense[r][c] == dense[r][c]


class TestRelations:
    def test_quadratic_small(self):
        assert quadratic_check(1, (1,), 2)
        assert quadratic_check(1, (2, 1), 3)
        assert quadratic_check(1, (), 3)

    def test_all_relations_up_to_five(self):
        for n in range(6):
            for lam in partitions_up_to(n):
                for i in range(1, n):
                    assert quadratic_check(i, lam, n), (lam, n, i)
                for i, j in itertools.combinations(range(1, n), 2):
                    if j - i > 1:
                        assert commute_check(i, j, lam, n), (lam, n, i, j)


class TestTraces:
    def test_standard_word_blocks(self):
        assert standard_word((2,)) == [1]
        assert standard_word((5,)) == [1, 2, 3, 4]
        assert standard_word((2, 2, 1)) == [1, 3]
        assert standard_word((1, 1, 1)) == []

    def test_small_trace(self):
        assert trace_standard_element((1,), (2,)) == Q - 1

    def test_single_row_trace(self):
        assert trace_standard_element((4,), (5,)) == Q**4 - Q**3

    def test_empty_shape_trace(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                expected = LaurentPoly.monomial("q", sum(mu) - len(mu))
                assert trace_standard_element((), mu) == expected

    def test_identity_trace_is_dimension(self):
        for n in range(5):
            for lam in partitions_up_to(n):
                got = trace_standard_element(lam, (1,) * n)
                assert got == LaurentPoly.const(standard_count(lam, n), "q")

    def test_weight_guard(self):
        with pytest.raises(WeightMismatch):
            trace_standard_element((3, 1), (2, 1))

    def test_matches_oracle_up_to_five(self):
        for n in range(6):
            for mu in partitions_of(n):
                for lam in partitions_up_to(n):
                    assert trace_standard_element(lam, mu) == chi_oracle(lam, mu), (lam, mu)

    def test_traces_land_in_z_q(self):
        # no odd powers of q^(1/2) survive in any trace
        for n in range(5):
            for mu in partitions_of(n):
                for lam in partitions_up_to(n):
                    chi = trace_standard_element(lam, mu)
                    assert chi.is_ordinary() and not chi.has_half_exponents()
