"""Partitions, compositions, skew diagrams and generalized border strips.

Partitions are plain tuples of weakly decreasing positive integers; the empty
partition is ``()``.  Compositions are tuples of nonnegative integers and may
retain zeros: the length function ``nonzero_length`` counts nonzero entries
only, which is the convention every weight formula in this package relies on.

All enumeration orders are fixed and deterministic so that emitted tables and
golden files are stable across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import NotGbsError
from .exact import LaurentPoly

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize a partition given as any iterable."""
    t = tuple(int(p) for p in parts)
    if any(p <= 0 for p in t):
        raise ValueError(f"partition parts must be positive: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {t}")
    return t


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order: (n) first, (1^n) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(m: int, maxpart: int) -> List[Partition]:
        if m == 0:
            return [()]
        out: List[Partition] = []
        for first in range(min(m, maxpart), 0, -1):
            out.extend((first,) + rest for rest in rec(m - first, first))
        return out

    return tuple(rec(n, n))


def partitions_up_to(n: int, *, strict: bool = False) -> Tuple[Partition, ...]:
    """Partitions of every weight k <= n (k < n when strict), heaviest first."""
    top = n - 1 if strict else n
    out: List[Partition] = []
    for k in range(top, -1, -1):
        out.extend(partitions_of(k))
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: lam'_i = #{j : lam_j >= i}."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def multiplicities(lam: Partition) -> dict:
    m: dict = {}
    for p in lam:
        m[p] = m.get(p, 0) + 1
    return m


def z_lambda(lam: Partition) -> int:
    """Centralizer size prod_i i^{m_i} * m_i!."""
    z = 1
    for part, m in multiplicities(lam).items():
        z *= part**m * math.factorial(m)
    return z


def subcompositions(mu: Sequence[int], k: int) -> Tuple[Composition, ...]:
    """All compositions tau with 0 <= tau_i <= mu_i and sum(tau) = k.

    The result keeps the full length of mu (zeros included) and is ordered
    lexicographically.  Empty when k > sum(mu) or k < 0.
    """
    mu = tuple(mu)
    if k < 0 or k > sum(mu):
        return ()
    out: List[Composition] = []

    def rec(i: int, remaining: int, prefix: Tuple[int, ...]):
        if i == len(mu):
            if remaining == 0:
                out.append(prefix)
            return
        tail_capacity = sum(mu[i + 1 :])
        lo = max(0, remaining - tail_capacity)
        hi = min(mu[i], remaining)
        for v in range(lo, hi + 1):
            rec(i + 1, remaining - v, prefix + (v,))

    rec(0, k, ())
    return tuple(out)


def sort_to_partition(comp: Sequence[int]) -> Partition:
    """Arrange the nonzero parts of a composition in weakly decreasing order."""
    return tuple(sorted((p for p in comp if p > 0), reverse=True))


def nonzero_length(comp: Sequence[int]) -> int:
    """l(tau) of a composition: the number of nonzero parts."""
    return sum(1 for p in comp if p)


def comp_sub(mu: Sequence[int], tau: Sequence[int]) -> Composition:
    """Componentwise difference mu - tau (tau implicitly zero-padded)."""
    tau = tuple(tau) + (0,) * (len(mu) - len(tau))
    diff = tuple(m - t for m, t in zip(mu, tau))
    if any(d < 0 for d in diff):
        raise ValueError(f"{tau} is not contained in {tuple(mu)}")
    return diff


@dataclass(frozen=True)
class SkewShape:
    """Set-theoretic difference outer/inner of two nested partitions."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        inner = tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))
        if len(inner) > len(self.outer) and any(inner[len(self.outer) :]):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")
        if any(i > o for o, i in zip(self.outer, inner)):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")
        object.__setattr__(self, "inner", inner[: len(self.outer)])

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> Tuple[Tuple[int, int], ...]:
        """Cells (row, col), 0-indexed, rows top to bottom."""
        out = []
        for i, o in enumerate(self.outer):
            start = self.inner[i] if i < len(self.inner) else 0
            out.extend((i, j) for j in range(start, o))
        return tuple(out)

    def __str__(self) -> str:
        return f"{list(self.outer)}/{list(self.inner)}"


def skew(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    return SkewShape(tuple(outer), tuple(inner))


def is_vertical_strip(s: SkewShape) -> bool:
    """At most one cell per row: outer_i - inner_i <= 1 for all i."""
    return all(o - i <= 1 for o, i in zip(s.outer, s.inner))


def hook_lengths(lam: Partition) -> Tuple[Tuple[int, ...], ...]:
    """Table h_{ij} = lam_i + lam'_j - i - j + 1 (1-indexed in the formula)."""
    conj = conjugate(lam)
    return tuple(
        tuple(lam[i] + conj[j] - (i + 1) - (j + 1) + 1 for j in range(lam[i]))
        for i in range(len(lam))
    )


def f_lambda(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    n = sum(lam)
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    f, rem = divmod(math.factorial(n), prod)
    assert rem == 0, "hook length product must divide n!"
    return f


def standard_count(lam: Partition, n: int) -> int:
    """Number of n-standard tableaux of shape lam |- k: C(n,k) * f_lam."""
    return math.comb(n, sum(lam)) * f_lambda(lam)


@dataclass(frozen=True)
class BorderStrip:
    """A connected 2x2-free component of a skew diagram."""

    cells: frozenset
    rows: int
    cols: int

    @property
    def size(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class GbsDecomposition:
    """Decomposition of a skew shape into disjoint border strips."""

    components: Tuple[BorderStrip, ...]

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)


def gbs_decompose(s: SkewShape) -> Optional[GbsDecomposition]:
    """Connected components of the cell graph (edge adjacency).

    Returns None when the shape contains a 2x2 block of cells, i.e. when it
    is not a generalized border strip.  An empty shape decomposes into zero
    components.
    """
    cells = set(s.cells())
    for (i, j) in cells:
        if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= cells:
            return None
    seen: set = set()
    comps: List[BorderStrip] = []
    for start in sorted(cells):
        if start in seen:
            continue
        stack = [start]
        comp = set()
        while stack:
            c = stack.pop()
            if c in comp:
                continue
            comp.add(c)
            i, j = c
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if nb in cells and nb not in comp:
                    stack.append(nb)
        seen |= comp
        comps.append(
            BorderStrip(
                cells=frozenset(comp),
                rows=len({i for i, _ in comp}),
                cols=len({j for _, j in comp}),
            )
        )
    return GbsDecomposition(components=tuple(comps))


def gbs_weight(s: SkewShape, var: str = "t") -> LaurentPoly:
    """wt(theta; t) = (t-1)^(m-1) * prod (-1)^(r_i - 1) t^(c_i - 1).

    The empty shape has weight 1 by convention.
    """
    dec = gbs_decompose(s)
    if dec is None:
        raise NotGbsError(f"{s} is not a generalized border strip")
    return _weight_of_decomposition(dec, var)


def _weight_of_decomposition(dec: GbsDecomposition, var: str) -> LaurentPoly:
    if not dec.components:
        return LaurentPoly.one(var)
    m = len(dec.components)
    t = LaurentPoly.monomial(var, 1)
    w = (t - 1) ** (m - 1)
    for comp in dec.components:
        sign = -1 if (comp.rows - 1) % 2 else 1
        w = w * LaurentPoly.monomial(var, comp.cols - 1, sign)
    return w


def gbs_weight_k(s: SkewShape, k: int, var: str = "t") -> LaurentPoly:
    """The k-bounded weight wt(theta; k, t).

    Cases on the strip size |theta|: t^(k-1)*wt for an empty shape,
    (t-1)*t^(k-|theta|-1)*wt when 0 < |theta| < k, wt itself at |theta| = k,
    and 0 beyond k.
    """
    if k <= 0:
        raise ValueError("k must be a positive integer")
    size = s.size
    if size > k:
        return LaurentPoly.zero(var)
    w = gbs_weight(s, var)
    t = LaurentPoly.monomial(var, 1)
    if size == 0:
        return LaurentPoly.monomial(var, k - 1) * w
    if size < k:
        return (t - 1) * LaurentPoly.monomial(var, k - size - 1) * w
    return w


def sub_partitions(lam: Partition) -> Tuple[Partition, ...]:
    """All partitions nu with nu_i <= lam_i for every i (zeros dropped)."""
    out: List[Partition] = []

    def rec(i: int, cap: int, prefix: Tuple[int, ...]):
        if i == len(lam):
            out.append(prefix)
            return
        for v in range(min(cap, lam[i]), -1, -1):
            if v == 0:
                out.append(prefix)
                return
            rec(i + 1, v, prefix + (v,))

    rec(0, lam[0] if lam else 0, ())
    return tuple(out)


def vertical_strip_complements(lam: Partition) -> Tuple[Partition, ...]:
    """All partitions nu contained in lam with lam/nu a vertical strip."""
    out: List[Partition] = []

    def rec(i: int, prev: int, prefix: Tuple[int, ...]):
        if i == len(lam):
            out.append(tuple(p for p in prefix if p))
            return
        for v in (lam[i], lam[i] - 1):
            if 0 <= v <= prev:
                rec(i + 1, v, prefix + (v,))

    rec(0, lam[0] if lam else 0, ())
    # deterministic: sort by descending weight then lexicographically
    uniq = sorted(set(out), key=lambda p: (-sum(p), p))
    return tuple(uniq)
