import math

import pytest

from rookq.errors import VariantMismatch, WeightMismatch
from rookq.exact import LaurentPoly, RationalFunction
from rookq.shapes import f_lambda, partitions_of, partitions_up_to
from rookq.symfunc import classical_char
from rookq.characters import (
    CharacterTable,
    a_poly,
    a_poly_direct,
    b_poly,
    b_poly_direct,
    chi_empty,
    chi_hook,
    chi_iterative,
    chi_iterative_terms,
    chi_mn,
    chi_oracle,
    chi_special,
    chi_two_row,
    compute_chi,
    hecke_char,
    identity_suite_ab,
    is_hook,
    perm_sum_closed_forms,
    perm_sums,
    x_of_chi,
)

Q = LaurentPoly.monomial("q", 1)
QINV = LaurentPoly.monomial("q", -1)


def qp(s):
    return LaurentPoly.parse(s, "q")


class TestChiEmpty:
    def test_values(self):
        assert chi_empty((5,)) == Q**4
        assert chi_empty((1,) * 5) == LaurentPoly.one("q")
        assert chi_empty(()) == LaurentPoly.one("q")

    def test_matches_oracle_up_to_eight(self):
        for n in range(9):
            for mu in partitions_of(n):
                assert chi_oracle((), mu) == chi_empty(mu)


class TestOracle:
    def test_column_value(self):
        assert chi_oracle((1, 1, 1, 1), (2, 1, 1, 1)) == qp("q - 4")

    def test_empty_value(self):
        assert chi_oracle((), (2, 1, 1, 1)) == qp("q")

    def test_weight_guard(self):
        with pytest.raises(WeightMismatch):
            chi_oracle((3, 1), (2,))

    def test_frobenius_inverse_conversion(self):
        # chi determines X(t) and the round trip is exact division, not loss
        for mu in partitions_of(4):
            for lam in partitions_up_to(4):
                chi = chi_oracle(lam, mu)
                x = x_of_chi(chi, mu)
                lifted = x.substitute_inverse().times_power(sum(mu))
                assert lifted.exact_div((Q - 1) ** len(mu)) == chi


class TestDisputedValue:
    """chi for lambda=(3,1,1), mu=(3,2,1) has two circulating candidate values
    differing by q^3; only one vanishes at q = 1 as the classical limit
    requires.  Every method here must produce that one.
    """

    GOOD = "2*q^3 - 10*q^2 + 10*q - 2"
    OTHER = "q^3 - 10*q^2 + 10*q - 2"

    def test_oracle_adjudicates(self):
        chi = chi_oracle((3, 1, 1), (3, 2, 1))
        assert chi == qp(self.GOOD)
        assert chi != qp(self.OTHER)
        assert chi.evaluate(1) == classical_char((3, 1, 1), (3, 2, 1)) == 0
        assert qp(self.OTHER).evaluate(1) == -1

    def test_all_methods_agree(self):
        expected = qp(self.GOOD)
        assert chi_iterative((3, 1, 1), (3, 2, 1)) == expected
        assert chi_mn((3, 1, 1), (3, 2, 1)) == expected
        assert chi_hook(3, 5, (3, 2, 1)) == expected


class TestIterative:
    def test_printed_expansion(self):
        """The one-level expansion for lambda=(3,1,1), mu=(3,2,1) collects into
        six coefficients; frozen values cross-checked by hand from the
        recursion's composition sums."""
        terms = chi_iterative_terms((3, 1, 1), (3, 2, 1))
        expected = {
            ((), (1,)): qp("3*q^3 - 2*q^2"),
            ((1,), (2,)): qp("-2*q^2 + q"),
            ((1,), (1, 1)): qp("-3*q^3 + 4*q^2 - q"),
            ((1, 1), (3,)): qp("q"),
            ((1, 1), (2, 1)): qp("4*q^2 - 4*q + 1"),
            ((1, 1), (1, 1, 1)): qp("q^3 - 2*q^2 + q"),
        }
        assert set(terms) == set(expected)
        for key, value in expected.items():
            assert terms[key] == RationalFunction(value), key

    def test_small_value(self):
        assert chi_iterative((1,), (2,)) == qp("q - 1")

    def test_empty_base(self):
        for mu in partitions_of(4):
            assert chi_iterative((), mu) == chi_empty(mu)


class TestMurnaghanNakayama:
    def test_single_row(self):
        assert chi_mn((4,), (5,)) == qp("q^4 - q^3")

    def test_non_hook_vanishes_on_full_cycle(self):
        assert chi_mn((2, 2), (5,)).is_zero

    def test_table_entry(self):
        assert chi_mn((2, 1), (2, 2, 1)) == qp("6*q^2 - 10*q + 4")


class TestCompactFormulas:
    def test_hook_matches_oracle(self):
        for n in range(6):
            for mu in partitions_of(n):
                for lam in partitions_up_to(n):
                    if is_hook(lam):
                        assert chi_hook(lam[0], sum(lam), mu) == chi_oracle(lam, mu)

    def test_hook_column_case(self):
        # k=1 single-column hooks
        assert chi_hook(1, 2, (3, 2)) == qp("q^3 - 4*q^2 + 2*q")

    def test_hook_row_case_matches_row_formula(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                for m in range(1, n + 1):
                    assert chi_hook(m, m, mu) == chi_special("row", (m,), mu)

    def test_two_row_adjudicated_value(self):
        """For lambda=(3,2), mu=(2,2,2) a value 3q^2(q-1) circulates that drops
        the (1-1/q)^6 component of b_32; the cross-validated value is below."""
        expected = qp("6*q^3 - 12*q^2 + 9*q - 3")
        assert chi_two_row(3, 5, (2, 2, 2)) == expected
        assert chi_oracle((3, 2), (2, 2, 2)) == expected
        assert chi_mn((3, 2), (2, 2, 2)) == expected

    def test_two_row_vanishing(self):
        assert chi_two_row(2, 4, (5,)).is_zero

    def test_two_row_degenerate_row(self):
        for n in range(1, 6):
            for mu in partitions_of(n):
                for m in range(1, n + 1):
                    assert chi_two_row(m, m, mu) == chi_special("row", (m,), mu)

    def test_shape_guards(self):
        with pytest.raises(VariantMismatch):
            chi_hook(3, 2, (5,))
        with pytest.raises(VariantMismatch):
            chi_two_row(1, 3, (5,))


class TestSpecialCases:
    def test_ones(self):
        assert chi_special("ones", (2, 2), (1,) * 5) == LaurentPoly.const(10, "q")

    def test_row(self):
        assert chi_special("row", (3,), (3, 2)) == qp("3*q^3 - 3*q^2 + q")

    def test_column(self):
        assert chi_special("column", (1, 1, 1), (4, 1)) == qp("-q^2 + 2*q - 1")

    def test_single(self):
        for n in range(1, 6):
            for lam in partitions_up_to(n):
                assert chi_special("single", lam, (n,)) == chi_mn(lam, (n,))

    def test_variant_guard(self):
        with pytest.raises(VariantMismatch):
            chi_special("ones", (2,), (2, 1))
        with pytest.raises(VariantMismatch):
            chi_special("row", (2, 1), (3,))


class TestABFamilies:
    def test_base_values(self):
        for mu in [(1,), (2, 1), (3, 2, 1), (2, 2, 2)]:
            l = len(mu)
            assert a_poly(mu, 0, 0) == (1 - Q) ** l
            assert b_poly(mu, 0, 0) == (1 - QINV) ** l

    def test_a51_dual_route_value(self):
        """a_51 for mu=(3,2,1): the tau=(3,2,0) term has only two nonzero
        parts, so the correct value keeps a (1-1/q)^3 summand that a
        circulating worked example drops (the root of the disputed character
        value above)."""
        mu = (3, 2, 1)
        expected = (1 - QINV) ** 3 + ((1 - QINV) ** 4).scale(2)
        assert a_poly(mu, 5, 1) == expected
        assert a_poly_direct(mu, 5, 1) == expected

    def test_b41_value(self):
        mu = (2, 2, 2)
        expected = ((1 - QINV) ** 5).scale(6) + ((1 - QINV) ** 4).scale(3)
        assert b_poly(mu, 4, 1) == expected
        assert b_poly_direct(mu, 4, 1) == expected

    def test_b32_keeps_sixth_power(self):
        mu = (2, 2, 2)
        expected = (
            ((1 - QINV) ** 6).scale(3)
            + ((1 - QINV) ** 5).scale(6)
            + ((1 - QINV) ** 4).scale(6)
        )
        assert b_poly(mu, 3, 2) == expected
        assert b_poly_direct(mu, 3, 2) == expected

    def test_symmetry_and_routes(self):
        for n in range(7):
            for mu in partitions_of(n):
                for i in range(n + 1):
                    for j in range(n + 1 - i):
                        assert a_poly(mu, i, j) == a_poly(mu, j, i)
                        assert b_poly(mu, i, j) == b_poly(mu, j, i)
                        assert a_poly(mu, i, j) == a_poly_direct(mu, i, j)
                        assert b_poly(mu, i, j) == b_poly_direct(mu, i, j)

    def test_out_of_range_zero(self):
        assert a_poly((2, 1), 3, 1).is_zero
        assert b_poly((2, 1), -1, 0).is_zero
        assert b_poly((2, 1), 2, -1).is_zero


class TestIdentitySuite:
    def test_single_part(self):
        report = identity_suite_ab((1,))
        assert all(report.values())

    def test_single_row(self):
        for n in range(1, 7):
            report = identity_suite_ab((n,))
            assert all(report.values()), report

    def test_all_partitions(self):
        for n in range(7):
            for mu in partitions_of(n):
                report = identity_suite_ab(mu)
                assert all(report.values()), (mu, report)


class TestPermSums:
    def test_ones(self):
        mu = (1, 1, 1)
        s1, s2 = perm_sums(mu)
        rhs1, rhs2 = perm_sum_closed_forms(mu)
        assert RationalFunction(s1) == rhs1
        assert s2 == rhs2 == LaurentPoly.const(27, "q")

    def test_single_row(self):
        for n in range(1, 7):
            mu = (n,)
            s1, s2 = perm_sums(mu)
            rhs1, rhs2 = perm_sum_closed_forms(mu)
            assert RationalFunction(s1) == rhs1
            assert s2 == rhs2

    def test_empty(self):
        s1, s2 = perm_sums(())
        rhs1, rhs2 = perm_sum_closed_forms(())
        assert RationalFunction(s1) == rhs1
        assert s2 == rhs2 == LaurentPoly.one("q")

    def test_all_partitions(self):
        for n in range(7):
            for mu in partitions_of(n):
                s1, s2 = perm_sums(mu)
                rhs1, rhs2 = perm_sum_closed_forms(mu)
                assert RationalFunction(s1) == rhs1, mu
                assert s2 == rhs2, mu


class TestStructure:
    def test_integer_ordinary_everywhere(self):
        for n in range(6):
            for mu in partitions_of(n):
                for lam in partitions_up_to(n):
                    chi = chi_mn(lam, mu)
                    assert chi.is_ordinary() and chi.has_integer_coefficients()

    def test_q1_specialization(self):
        for n in range(7):
            for mu in partitions_of(n):
                for lam in partitions_up_to(n):
                    assert chi_mn(lam, mu).evaluate(1) == classical_char(lam, mu)

    def test_ones_column_constant(self):
        for n in range(7):
            for lam in partitions_up_to(n):
                expected = LaurentPoly.const(math.comb(n, sum(lam)) * f_lambda(lam), "q")
                assert chi_mn(lam, (1,) * n) == expected

    def test_hecke_diagonal_block(self):
        anchors = {
            ((2,), (2,)): "q",
            ((2,), (1, 1)): "1",
            ((1, 1), (2,)): "-1",
            ((1, 1), (1, 1)): "1",
            ((3,), (3,)): "q^2",
            ((2, 1), (3,)): "-q",
            ((2, 1), (2, 1)): "q - 1",
            ((2, 1), (1, 1, 1)): "2",
            ((1, 1, 1), (3,)): "1",
            ((1, 1, 1), (2, 1)): "-1",
        }
        for (lam, mu), s in anchors.items():
            assert hecke_char(lam, mu) == qp(s)
        with pytest.raises(WeightMismatch):
            hecke_char((2,), (1, 1, 1))


class TestDispatch:
    def test_auto_paths(self):
        assert compute_chi((3, 1), (4, 1), "auto").method == "hook"
        assert compute_chi((3, 2), (4, 1), "auto").method == "two_row"
        assert compute_chi((2, 2, 1), (4, 1), "auto").method == "mn"

    def test_all_methods_one_cell(self):
        lam, mu = (2, 1), (3, 2)
        values = {m: compute_chi(lam, mu, m).chi for m in ("oracle", "iterative", "mn", "hook", "seminormal")}
        assert len(set(map(str, values.values()))) == 1

    def test_table_builder_cross_checks(self):
        table = CharacterTable.build(3, methods=("oracle", "iterative", "mn"))
        assert table.value((2, 1), (3,)) == qp("-q")
        assert len(table.cells) == len(table.rows) * len(table.cols)

    def test_table_builder_reports_mismatch(self, monkeypatch):
        import dataclasses

        import rookq.characters as chmod
        from rookq.errors import MethodMismatch

        real = chmod.compute_chi

        def skewed(lam, mu, method="auto"):
            cv = real(lam, mu, method)
            if method == "iterative" and lam == (1,) and mu == (2,):
                return dataclasses.replace(cv, chi=cv.chi + 1)
            return cv

        monkeypatch.setattr(chmod, "compute_chi", skewed)
        with pytest.raises(MethodMismatch) as exc:
            CharacterTable.build(2, methods=("mn", "iterative"))
        assert exc.value.lam == (1,) and exc.value.mu == (2,)
        assert set(exc.value.values) == {"mn", "iterative"}
