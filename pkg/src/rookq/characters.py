"""Irreducible characters chi^lambda_mu(q) of the q-rook monoid algebra.

Four independent algorithms compute the same values:

* ``chi_oracle``     -- inner product of q-hat_mu(t) with the Schur expansion
                        in the power-sum basis, then the Frobenius conversion
                        chi = q^|mu| / (q-1)^l(mu) * X(q^{-1});
* ``chi_iterative``  -- recursion that shortens the upper partition lambda by
                        peeling its first row (vertical-strip complements);
* ``chi_mn``         -- Murnaghan-Nakayama recursion that shortens the lower
                        partition mu using weighted generalized border strips;
* ``chi_hook`` / ``chi_two_row`` -- compact closed forms through the a/b
                        polynomial families attached to mu.

Every algorithm must return an ordinary polynomial in q with integer
coefficients; all internal divisions by powers of (q-1) are exact and checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .errors import VariantMismatch, WeightMismatch
from .exact import LaurentPoly, RationalFunction
from .shapes import (
    Partition,
    comp_sub,
    f_lambda,
    gbs_decompose,
    gbs_weight_k,
    nonzero_length,
    partitions_of,
    skew,
    sort_to_partition,
    sub_partitions,
    subcompositions,
    vertical_strip_complements,
)
from .symfunc import inner_product, qhat_mu, schur_in_p

import math

_Q = LaurentPoly.monomial("q", 1)
_ONE = LaurentPoly.one("q")
_QM1 = _Q - 1
_ONE_MINUS_QINV = _ONE - LaurentPoly.monomial("q", -1)

METHODS = ("oracle", "iterative", "mn", "hook", "two_row", "seminormal")


def _check_weights(lam: Partition, mu: Partition) -> None:
    if sum(lam) > sum(mu):
        raise WeightMismatch(f"|lambda|={sum(lam)} exceeds |mu|={sum(mu)}")


def frobenius_chi(x_t: LaurentPoly, mu: Partition) -> LaurentPoly:
    """chi(q) = q^|mu| / (q-1)^l(mu) * X(q^{-1}), by exact division."""
    xq = x_t.substitute_inverse()
    numer = xq.times_power(sum(mu))
    return numer.exact_div(_QM1 ** len(mu))


def x_of_chi(chi: LaurentPoly, mu: Partition) -> LaurentPoly:
    """Inverse Frobenius conversion: X(t) = chi(t^{-1}) t^{|mu|-l} (1-t)^l."""
    t = LaurentPoly.monomial("t", 1)
    l = len(mu)
    return chi.substitute_inverse() * LaurentPoly.monomial("t", sum(mu) - l) * (1 - t) ** l


@lru_cache(maxsize=None)
def chi_oracle(lam: Partition, mu: Partition) -> LaurentPoly:
    """X^lambda_mu(t) = <q-hat_mu(t), s_lambda> converted to chi(q)."""
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    x = inner_product(qhat_mu(mu), schur_in_p(lam))
    return frobenius_chi(x, mu)


def chi_empty(mu: Sequence[int]) -> LaurentPoly:
    """chi^{empty}_mu = q^{|mu| - l(mu)} (equal to 1 only when mu = (1^n))."""
    return LaurentPoly.monomial("q", sum(mu) - nonzero_length(mu))


@lru_cache(maxsize=None)
def chi_iterative(lam: Partition, mu: Partition) -> LaurentPoly:
    """Row-peeling recursion.

    chi^lambda_mu = sum over nu contained in lambda^[1] with lambda^[1]/nu a
    vertical strip, and tau in C(mu; |lambda|-|nu|), of

        (-1)^(|lambda|-|nu|-lambda_1) * q^(|lambda|-|nu|-l(tau))
          / (q-1)^(l(mu)-l(tau)-l(mu-tau)) * chi^nu_{sort(mu-tau)}.

    Individual summands may carry (q-1) denominators; only the combined sum
    is guaranteed polynomial, so terms are accumulated over a common
    denominator and divided out exactly at the end.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    if not lam:
        return chi_empty(mu)
    m = sum(lam)
    head = lam[0]
    lmu = len(mu)
    entries: List[Tuple[int, LaurentPoly]] = []
    for nu in vertical_strip_complements(lam[1:]):
        k = m - sum(nu)
        negative = (k - head) % 2 == 1
        for tau in subcompositions(mu, k):
            lt = nonzero_length(tau)
            rho = sort_to_partition(comp_sub(mu, tau))
            e = lmu - lt - len(rho)
            poly = chi_iterative(nu, rho).times_power(k - lt)
            entries.append((e, -poly if negative else poly))
    if not entries:
        return LaurentPoly.zero("q")
    top = max(0, max(e for e, _ in entries))
    numer = LaurentPoly.zero("q")
    for e, poly in entries:
        numer = numer + poly * _QM1 ** (top - e)
    return numer.exact_div(_QM1**top) if top else numer


def chi_iterative_terms(
    lam: Partition, mu: Partition
) -> Dict[Tuple[Partition, Partition], RationalFunction]:
    """One level of the row-peeling recursion, as collected coefficients.

    Maps (nu, sorted(mu - tau)) to the rational-function coefficient in front
    of chi^nu_{sort(mu-tau)}; useful for inspecting the expansion.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    out: Dict[Tuple[Partition, Partition], RationalFunction] = {}
    if not lam:
        return out
    m = sum(lam)
    head = lam[0]
    lmu = len(mu)
    for nu in vertical_strip_complements(lam[1:]):
        k = m - sum(nu)
        sign = -1 if (k - head) % 2 else 1
        for tau in subcompositions(mu, k):
            lt = nonzero_length(tau)
            rho = sort_to_partition(comp_sub(mu, tau))
            e = lmu - lt - len(rho)
            mono = LaurentPoly.monomial("q", k - lt, sign)
            if e >= 0:
                coeff = RationalFunction(mono, _QM1**e)
            else:
                coeff = RationalFunction(mono * _QM1 ** (-e), 1)
            key = (nu, rho)
            out[key] = out.get(key, RationalFunction(0, 1, var="q")) + coeff
    return {k: v for k, v in out.items() if not v.is_zero}


@lru_cache(maxsize=None)
def chi_mn(lam: Partition, mu: Partition) -> LaurentPoly:
    """Murnaghan-Nakayama recursion on the lower partition.

    chi^lambda_mu = sum over nu with lambda/nu a generalized border strip of
    size at most mu_1 and |nu| <= |mu^[1]| of
    wt(lambda/nu; mu_1, q) * chi^nu_{mu^[1]}.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    if not mu:
        return _ONE if not lam else LaurentPoly.zero("q")
    k = mu[0]
    rest = mu[1:]
    rest_weight = sum(rest)
    total = LaurentPoly.zero("q")
    for nu in sub_partitions(lam):
        if sum(lam) - sum(nu) > k or sum(nu) > rest_weight:
            continue
        sk = skew(lam, nu)
        if gbs_decompose(sk) is None:
            continue
        w = gbs_weight_k(sk, k, var="q")
        if w.is_zero:
            continue
        total = total + w * chi_mn(nu, rest)
    return total


# ----------------------------------------------------------------------
# the a/b polynomial families attached to mu
# ----------------------------------------------------------------------
def _bivar_mul(A: dict, B: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in A.items():
        for (i2, j2), c2 in B.items():
            key = (i1 + i2, j1 + j2)
            c = c1 * c2
            cur = out.get(key)
            out[key] = c if cur is None else cur + c
    return {k: v for k, v in out.items() if not v.is_zero}


@lru_cache(maxsize=None)
def _ab_tables(mu: Partition) -> Tuple[dict, dict]:
    """All a_{ij}(mu; q) and b_{ij}(mu; q) at once.

    Coefficient extraction from the per-part generating factors

        sum_{tau_i, theta_i} (1-q^{-1})^{[tau_i>0] + [theta_i>0]}
            * w^{[tau_i+theta_i < mu_i]} v^{tau_i} u^{theta_i}

    with w = (1-q) for the a family and (1-q^{-1}) for the b family.
    """
    a_acc: dict = {(0, 0): _ONE}
    b_acc: dict = {(0, 0): _ONE}
    one_minus_q = _ONE - _Q
    for part in mu:
        fa: dict = {}
        fb: dict = {}
        for ti in range(part + 1):
            for th in range(part + 1 - ti):
                border = (1 if ti else 0) + (1 if th else 0)
                w = _ONE_MINUS_QINV**border
                if ti + th != part:
                    fa[(ti, th)] = w * one_minus_q
                    fb[(ti, th)] = w * _ONE_MINUS_QINV
                else:
                    fa[(ti, th)] = w
                    fb[(ti, th)] = w
        a_acc = _bivar_mul(a_acc, fa)
        b_acc = _bivar_mul(b_acc, fb)
    return a_acc, b_acc


def a_poly(mu: Partition, i: int, j: int) -> LaurentPoly:
    """a_{ij}(mu; q); zero outside 0 <= i, j with i + j <= |mu|."""
    mu = tuple(mu)
    if i < 0 or j < 0 or i + j > sum(mu):
        return LaurentPoly.zero("q")
    return _ab_tables(mu)[0].get((i, j), LaurentPoly.zero("q"))


def b_poly(mu: Partition, i: int, j: int) -> LaurentPoly:
    """b_{ij}(mu; q); zero outside 0 <= i, j with i + j <= |mu|."""
    mu = tuple(mu)
    if i < 0 or j < 0 or i + j > sum(mu):
        return LaurentPoly.zero("q")
    return _ab_tables(mu)[1].get((i, j), LaurentPoly.zero("q"))


def _ab_direct(mu: Partition, i: int, j: int, b_family: bool) -> LaurentPoly:
    """Double enumeration over tau in C(mu;i), theta in C(mu-tau;j)."""
    mu = tuple(mu)
    if i < 0 or j < 0 or i + j > sum(mu):
        return LaurentPoly.zero("q")
    one_minus_q = _ONE - _Q
    total = LaurentPoly.zero("q")
    for tau in subcompositions(mu, i):
        rem = comp_sub(mu, tau)
        for theta in subcompositions(rem, j):
            rest = comp_sub(rem, theta)
            term = _ONE_MINUS_QINV ** (nonzero_length(tau) + nonzero_length(theta))
            tail = nonzero_length(rest)
            term = term * (_ONE_MINUS_QINV if b_family else one_minus_q) ** tail
            total = total + term
    return total


def a_poly_direct(mu: Partition, i: int, j: int) -> LaurentPoly:
    return _ab_direct(mu, i, j, b_family=False)


def b_poly_direct(mu: Partition, i: int, j: int) -> LaurentPoly:
    return _ab_direct(mu, i, j, b_family=True)


# ----------------------------------------------------------------------
# compact closed forms
# ----------------------------------------------------------------------
def chi_hook(k: int, m: int, mu: Partition) -> LaurentPoly:
    """Hook shape (k, 1^(m-k)):

    chi = q^(n-m) / (q-1)^l(mu) * (-1)^(m-k) * sum_{i=k}^{m} a_{i,n-m}(mu;q) q^i.
    """
    mu = tuple(mu)
    n = sum(mu)
    if not (1 <= k <= m <= n):
        raise VariantMismatch(f"need 1 <= k <= m <= |mu|, got k={k}, m={m}, n={n}")
    s = LaurentPoly.zero("q")
    for i in range(k, m + 1):
        s = s + a_poly(mu, i, n - m).times_power(i)
    numer = s.times_power(n - m)
    if (m - k) % 2:
        numer = -numer
    return numer.exact_div(_QM1 ** len(mu))


def chi_two_row(k: int, m: int, mu: Partition) -> LaurentPoly:
    """Two-row shape (k, m-k):

    chi = q^n / (q-1)^l(mu) * (b_{k,m-k}(mu;q) - b_{k+1,m-k-1}(mu;q)).
    """
    mu = tuple(mu)
    n = sum(mu)
    if not (0 <= m - k <= k <= m <= n) or k < 1:
        raise VariantMismatch(f"need m-k <= k <= m <= |mu|, got k={k}, m={m}, n={n}")
    diff = b_poly(mu, k, m - k) - b_poly(mu, k + 1, m - k - 1)
    return diff.times_power(n).exact_div(_QM1 ** len(mu))


def chi_special(variant: str, lam: Partition, mu: Partition) -> LaurentPoly:
    """Special-case formulas.

    ones:    mu = (1^n), any lambda  -> the constant C(n, |lambda|) f_lambda;
    row:     lambda = (m)            -> composition sum over C(mu; m);
    column:  lambda = (1^m)          -> signed composition sum over C(mu; n-m);
    single:  mu = (n)                -> the border-strip weight of lambda.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    n = sum(mu)
    m = sum(lam)
    if variant == "ones":
        if mu != (1,) * n:
            raise VariantMismatch(f"variant 'ones' needs mu=(1^n), got {list(mu)}")
        return LaurentPoly.const(math.comb(n, m) * f_lambda(lam), "q")
    if variant == "row":
        if lam != (m,) and lam != ():
            raise VariantMismatch(f"variant 'row' needs a one-row lambda, got {list(lam)}")
        total = LaurentPoly.zero("q")
        for tau in subcompositions(mu, m):
            rest = comp_sub(mu, tau)
            total = total + _ONE_MINUS_QINV ** (
                nonzero_length(tau) + nonzero_length(rest)
            )
        return total.times_power(n).exact_div(_QM1 ** len(mu))
    if variant == "column":
        if lam != (1,) * m:
            raise VariantMismatch(f"variant 'column' needs lambda=(1^m), got {list(lam)}")
        total = LaurentPoly.zero("q")
        for tau in subcompositions(mu, n - m):
            rest = comp_sub(mu, tau)
            lmt = nonzero_length(rest)
            term = _ONE_MINUS_QINV ** (nonzero_length(tau) + lmt)
            term = term * LaurentPoly.monomial("q", -(m - lmt), (-1) ** (m - lmt))
            total = total + term
        return total.times_power(n).exact_div(_QM1 ** len(mu))
    if variant == "single":
        if mu != (n,) or n == 0:
            raise VariantMismatch(f"variant 'single' needs mu=(n), got {list(mu)}")
        sk = skew(lam)
        if gbs_decompose(sk) is None:
            return LaurentPoly.zero("q")
        return gbs_weight_k(sk, n, var="q")
    raise VariantMismatch(f"unknown variant {variant!r}")


# ----------------------------------------------------------------------
# generating-function identities and permutation sums
# ----------------------------------------------------------------------
def _a_weighted_sum(mu: Partition, sign_i: bool, sign_j: bool) -> LaurentPoly:
    total = LaurentPoly.zero("q")
    for (i, j), c in _ab_tables(mu)[0].items():
        s = (-1) ** (i if sign_i else 0) * (-1) ** (j if sign_j else 0)
        total = total + c.times_power(i + j).scale(s)
    return total


def hook_content_factor(m: int) -> RationalFunction:
    """A(m; q) = ((-q)^{m-1}(q^2+6q+1) + 4)/(q+1)^2 + 2m(-q)^{m-1}(q-1)/(q+1)."""
    neg_q = LaurentPoly.monomial("q", m - 1, (-1) ** (m - 1))
    term1 = RationalFunction(neg_q * (_Q**2 + 6 * _Q + 1) + 4, (_Q + 1) ** 2)
    term2 = RationalFunction(neg_q * _QM1 * (2 * m), _Q + 1)
    return term1 + term2


def _two_row_factor(m: int) -> LaurentPoly:
    """3m - 3(m-1)q^{-1} + (m-1)(m-2)(1-q^{-1})^2 / 2."""
    qinv = LaurentPoly.monomial("q", -1)
    return (
        LaurentPoly.const(3 * m, "q")
        - qinv.scale(3 * (m - 1))
        + ((_ONE - qinv) ** 2).scale(Fraction((m - 1) * (m - 2), 2))
    )


def identity_suite_ab(mu: Partition) -> Dict[str, bool]:
    """The four exact generating-function identities for the a/b families."""
    mu = tuple(mu)
    l = len(mu)
    report: Dict[str, bool] = {}

    lhs1 = _a_weighted_sum(mu, sign_i=False, sign_j=False)
    rhs1 = _ONE
    for part in mu:
        rhs1 = rhs1 * _QM1 * LaurentPoly.monomial("q", part - 1)
    report["a-sum-plain"] = lhs1 == rhs1

    lhs2 = _a_weighted_sum(mu, sign_i=True, sign_j=False)
    rhs2 = _ONE
    for part in mu:
        rhs2 = rhs2 * (1 - _Q) * LaurentPoly.monomial("q", part - 1, (-1) ** (part - 1))
    report["a-sum-alternate-one"] = lhs2 == rhs2

    lhs3 = RationalFunction(_a_weighted_sum(mu, sign_i=True, sign_j=True))
    rhs3 = RationalFunction(1, 1, var="q")
    for part in mu:
        rhs3 = rhs3 * RationalFunction(1 - _Q) * hook_content_factor(part)
    report["a-sum-alternate-both"] = lhs3 == rhs3

    lhs4 = LaurentPoly.zero("q")
    for _, c in _ab_tables(mu)[1].items():
        lhs4 = lhs4 + c
    rhs4 = _ONE_MINUS_QINV**l
    for part in mu:
        rhs4 = rhs4 * _two_row_factor(part)
    report["b-sum-plain"] = lhs4 == rhs4
    return report


def perm_sums(mu: Partition) -> Tuple[LaurentPoly, LaurentPoly]:
    """Character sums over all hook and all two-row shapes of every weight.

    Returns (sum over hooks of chi^{(m-k,1^k)}_mu,
             sum over two-row shapes of (m-2k+1) chi^{(m-k,k)}_mu),
    the k ranges being 0..m-1 and 0..floor(m/2) respectively.
    """
    mu = tuple(mu)
    n = sum(mu)
    s1 = LaurentPoly.zero("q")
    s2 = LaurentPoly.zero("q")
    for m in range(n + 1):
        for k in range(m):
            lam = (m - k,) + (1,) * k
            s1 = s1 + chi_mn(lam, mu)
        for k in range(m // 2 + 1):
            lam = (m - k, k) if k else ((m,) if m else ())
            s2 = s2 + chi_mn(lam, mu).scale(m - 2 * k + 1)
    return s1, s2


def perm_sum_closed_forms(mu: Partition) -> Tuple[RationalFunction, LaurentPoly]:
    """The closed forms the two permutation sums must equal."""
    mu = tuple(mu)
    n = sum(mu)
    l = len(mu)
    prod_a = RationalFunction(1, 1, var="q")
    for part in mu:
        prod_a = prod_a * hook_content_factor(part)
    sign = (-1) ** (n + l)
    rhs1 = (prod_a - LaurentPoly.monomial("q", n - l, (-1) ** (n - l))) * Fraction(sign, 2)
    rhs2 = LaurentPoly.monomial("q", n - l)
    for part in mu:
        rhs2 = rhs2 * _two_row_factor(part)
    return rhs1, rhs2


def perm_sums_agree(mu: Partition) -> bool:
    s1, s2 = perm_sums(mu)
    rhs1, rhs2 = perm_sum_closed_forms(mu)
    return RationalFunction(s1) == rhs1 and s2 == rhs2


# ----------------------------------------------------------------------
# dispatch and table building
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class CharacterValue:
    lam: Partition
    mu: Partition
    chi: LaurentPoly
    method: str
    x_poly: LaurentPoly


def is_hook(lam: Partition) -> bool:
    return len(lam) >= 1 and all(p == 1 for p in lam[1:])


def is_two_row(lam: Partition) -> bool:
    return 1 <= len(lam) <= 2


def compute_chi(lam: Sequence[int], mu: Sequence[int], method: str = "auto") -> CharacterValue:
    """Compute one character value with the requested algorithm.

    ``auto`` picks the hook/two-row fast paths when the shape allows and the
    Murnaghan-Nakayama recursion otherwise.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_weights(lam, mu)
    if method == "auto":
        if is_hook(lam):
            method = "hook"
        elif is_two_row(lam):
            method = "two_row"
        else:
            method = "mn"
    if method == "oracle":
        chi = chi_oracle(lam, mu)
    elif method == "iterative":
        chi = chi_iterative(lam, mu)
    elif method == "mn":
        chi = chi_mn(lam, mu)
    elif method == "hook":
        if not is_hook(lam):
            raise VariantMismatch(f"{list(lam)} is not a hook")
        chi = chi_hook(lam[0], sum(lam), mu)
    elif method == "two_row":
        if not is_two_row(lam):
            raise VariantMismatch(f"{list(lam)} is not a two-row shape")
        chi = chi_two_row(lam[0], sum(lam), mu)
    elif method == "seminormal":
        from .seminormal import trace_standard_element

        chi = trace_standard_element(lam, mu)
    else:
        raise ValueError(f"unknown method {method!r}")
    assert chi.is_ordinary() and chi.has_integer_coefficients(), (
        f"character value must lie in Z[q]: {chi}"
    )
    return CharacterValue(lam=lam, mu=mu, chi=chi, method=method, x_poly=x_of_chi(chi, mu))


def _table_cell(args):
    lam, mu, methods = args
    return lam, mu, [(m, compute_chi(lam, mu, m).chi) for m in methods]


def table_rows(n: int, *, restrict: bool = False, order: str = "paper") -> Tuple[Partition, ...]:
    """Row partitions: every weight from the top down, ordered within weight."""
    rows: List[Partition] = []
    top = n - 1 if restrict else n
    for k in range(top, -1, -1):
        block = partitions_of(k)
        rows.extend(reversed(block) if order == "paper" else block)
    return tuple(rows)


def table_columns(n: int, *, order: str = "paper") -> Tuple[Partition, ...]:
    block = partitions_of(n)
    return tuple(reversed(block)) if order == "paper" else tuple(block)


class CharacterTable:
    """All chi^lambda_mu(q) for lambda |- k <= n and mu |- n.

    When several methods are requested every cell is computed with each and
    the results cross-checked; any disagreement raises MethodMismatch.
    """

    def __init__(self, n, rows, cols, cells, methods, restrict, order):
        self.n = n
        self.rows = rows
        self.cols = cols
        self.cells = cells  # (lam, mu) -> CharacterValue
        self.methods = methods
        self.restrict = restrict
        self.order = order

    @classmethod
    def build(
        cls,
        n: int,
        methods: Sequence[str] = ("mn",),
        *,
        restrict_lambda_lt_n: bool = False,
        order: str = "paper",
        jobs: int = 1,
    ) -> "CharacterTable":
        from .errors import MethodMismatch

        methods = tuple(methods)
        rows = table_rows(n, restrict=restrict_lambda_lt_n, order=order)
        cols = table_columns(n, order=order)
        work = [(lam, mu, methods) for lam in rows for mu in cols]
        results = {}
        if jobs > 1:
            import concurrent.futures

            with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
                for lam, mu, values in pool.map(_table_cell, work, chunksize=8):
                    results[(lam, mu)] = values
        else:
            for args in work:
                lam, mu, values = _table_cell(args)
                results[(lam, mu)] = values
        cells = {}
        for (lam, mu), values in results.items():
            first = values[0][1]
            for name, chi in values[1:]:
                if chi != first:
                    raise MethodMismatch(lam, mu, {m: str(c) for m, c in values})
            cells[(lam, mu)] = CharacterValue(
                lam=lam, mu=mu, chi=first, method=methods[0], x_poly=x_of_chi(first, mu)
            )
        return cls(n, rows, cols, cells, methods, restrict_lambda_lt_n, order)

    def value(self, lam: Sequence[int], mu: Sequence[int]) -> LaurentPoly:
        return self.cells[(tuple(lam), tuple(mu))].chi


def hecke_char(lam: Partition, mu: Partition) -> LaurentPoly:
    """Iwahori-Hecke character: the full-weight diagonal block |lambda| = |mu|."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatch("Hecke characters need |lambda| = |mu|")
    return chi_mn(lam, mu)
