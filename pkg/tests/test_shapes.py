import itertools
import math

import pytest

from rookq.errors import NotGbsError
from rookq.exact import LaurentPoly
from rookq.shapes import (
    conjugate,
    f_lambda,
    gbs_decompose,
    gbs_weight,
    gbs_weight_k,
    hook_lengths,
    is_vertical_strip,
    partitions_of,
    skew,
    sort_to_partition,
    standard_count,
    sub_partitions,
    subcompositions,
    vertical_strip_complements,
    z_lambda,
)

T = LaurentPoly.monomial("t", 1)


def brute_partitions(n):
    """Independent enumeration: sorted tuples of all compositions."""
    found = set()

    def rec(remaining, prefix):
        if remaining == 0:
            found.add(tuple(sorted(prefix, reverse=True)))
            return
        for part in range(1, remaining + 1):
            rec(remaining - part, prefix + [part])

    rec(n, [])
    return found


class TestPartitions:
    def test_empty(self):
        assert partitions_of(0) == ((),)

    @pytest.mark.parametrize("n,count", [(4, 5), (5, 7)])
    def test_counts_against_brute_force(self, n, count):
        got = partitions_of(n)
        assert len(got) == count
        assert set(got) == brute_partitions(n)

    def test_reverse_lex_order(self):
        assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))

    def test_conjugate(self):
        assert conjugate((3, 1, 1)) == (3, 1, 1)
        assert conjugate((4,)) == (1, 1, 1, 1)
        assert conjugate(()) == ()

    def test_conjugate_involution(self):
        for n in range(9):
            for lam in partitions_of(n):
                assert conjugate(conjugate(lam)) == lam

    def test_z_lambda(self):
        assert z_lambda((1, 1, 1)) == 6
        assert z_lambda((3, 2, 1)) == 6
        assert z_lambda((2, 2)) == 8


class TestCompositions:
    def test_full_weight(self):
        assert subcompositions((3, 2, 1), 6) == ((3, 2, 1),)

    def test_single_unit(self):
        assert set(subcompositions((2, 1), 1)) == {(1, 0), (0, 1)}

    def test_count_six(self):
        got = subcompositions((3, 2, 1), 3)
        assert len(got) == 6
        # brute force over the full box product
        brute = {
            c
            for c in itertools.product(range(4), range(3), range(2))
            if sum(c) == 3
        }
        assert set(got) == brute

    def test_overweight_empty(self):
        assert subcompositions((2, 1), 4) == ()

    def test_generating_function_counts(self):
        for n in range(9):
            for mu in partitions_of(n):
                coeffs = [1]
                for part in mu:
                    new = [0] * (len(coeffs) + part)
                    for i, c in enumerate(coeffs):
                        for j in range(part + 1):
                            new[i + j] += c
                    coeffs = new
                for k in range(n + 1):
                    assert len(subcompositions(mu, k)) == coeffs[k]

    def test_sort_to_partition(self):
        assert sort_to_partition((0, 2, 1)) == (2, 1)
        assert sort_to_partition((0, 0, 0)) == ()
        assert sort_to_partition((1, 3, 1)) == (3, 1, 1)


class TestSkewAndStrips:
    def test_vertical_strip(self):
        assert is_vertical_strip(skew((2, 1), (1,)))
        assert not is_vertical_strip(skew((3, 1), (1,)))
        assert is_vertical_strip(skew((2, 2), (2, 2)))

    def test_vertical_strip_complements(self):
        subs = vertical_strip_complements((2, 1))
        assert set(subs) == {(2, 1), (2,), (1, 1), (1,)}

    def test_hooks_and_f(self):
        assert f_lambda((3, 1)) == 3
        assert standard_count((3, 1), 5) == 15
        for n in range(1, 7):
            assert f_lambda((n,)) == 1
        assert hook_lengths((3, 1, 1)) == ((5, 2, 1), (2,), (1,))
        assert f_lambda((3, 1, 1)) == 6

    def test_f_against_brute_force(self):
        for n in range(7):
            for lam in partitions_of(n):
                cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]
                count = 0
                for perm in itertools.permutations(range(1, n + 1)):
                    filling = dict(zip(cells, perm))
                    ok = all(
                        filling[(i, j)] < filling[(i, j + 1)]
                        for (i, j) in cells
                        if (i, j + 1) in filling
                    ) and all(
                        filling[(i, j)] < filling[(i + 1, j)]
                        for (i, j) in cells
                        if (i + 1, j) in filling
                    )
                    count += ok
                assert count == f_lambda(lam)

    def test_square_sum(self):
        for n in range(8):
            assert sum(f_lambda(lam) ** 2 for lam in partitions_of(n)) == math.factorial(n)


class TestGbs:
    def test_three_components(self):
        dec = gbs_decompose(skew((4, 3, 3, 1), (3, 2, 1)))
        assert dec is not None
        assert sorted(c.size for c in dec.components) == [1, 1, 3]

    def test_empty(self):
        dec = gbs_decompose(skew((2, 1), (2, 1)))
        assert dec is not None and dec.components == ()

    def test_two_by_two_block(self):
        assert gbs_decompose(skew((2, 2))) is None

    def test_border_strip_single_component(self):
        dec = gbs_decompose(skew((3, 2), (1, 1)))
        assert dec is not None and len(dec.components) == 1

    def test_weight_figure_example(self):
        w = gbs_weight(skew((4, 3, 3, 1), (3, 2, 1)))
        assert w == -T * (T - 1) ** 2

    def test_weight_empty(self):
        assert gbs_weight(skew((3, 1), (3, 1))) == LaurentPoly.one("t")

    def test_weight_single_row(self):
        for k in range(1, 6):
            assert gbs_weight(skew((k,))) == LaurentPoly.monomial("t", k - 1)

    def test_weight_not_gbs(self):
        with pytest.raises(NotGbsError):
            gbs_weight(skew((2, 2)))

    def test_weight_k_cases(self):
        # strip smaller than k gains a (t-1) t^(k-size-1) prefactor
        assert gbs_weight_k(skew((4,)), 5) == T**4 - T**3
        # size == k reduces to the plain weight
        s = skew((3, 2), (1, 1))
        assert gbs_weight_k(s, s.size) == gbs_weight(s)
        # size > k vanishes
        assert gbs_weight_k(s, s.size - 1) == LaurentPoly.zero("t")

    def test_sub_partitions(self):
        subs = sub_partitions((2, 1))
        assert set(subs) == {(2, 1), (2,), (1, 1), (1,), ()}
