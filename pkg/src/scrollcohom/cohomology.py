"""Closed-form cohomology of line bundles and split bundles on a scroll.

The pushforward of O(pH + qF) to the base is Sym^p(V)(q) when p >= 0, a sum
of line bundles O(t + q) indexed by the weak compositions of p.  Cohomology
therefore sits in degrees 0 and m for p >= 0, vanishes for -n <= p < 0, and
for p < -n is computed by relative duality from Sym^{-p-n-1}(V)(c-q-1-m),
landing in degrees n and n+m.  Tables are plain tuples of length n+m+1.

All dimension arithmetic is unbounded-integer exact; binomials are built
multiplicatively.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .scroll import ZERO, DivClass, Scroll


def choose(n: int, k: int) -> int:
    """C(n, k) for n, k >= 0 (0 outside that range), without factorials."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def monomial_count(m: int, d: int) -> int:
    """Number of degree-d monomials in m+1 variables: C(d+m, m) for d >= 0."""
    return choose(d + m, m) if d >= 0 else 0


def pm_cohom(m: int, d: int) -> tuple[int, int]:
    """(h^0, h^m) of O(d) on P^m.  For m = 0 both land at degree 0 and the
    caller adds them there; exactly one of the two is 1 in that case."""
    if m < 0:
        raise ValueError("base dimension must be nonnegative")
    return monomial_count(m, d), monomial_count(m, -d - 1 - m)


@lru_cache(maxsize=None)
def sym_twists(x: Scroll, k: int) -> tuple[int, ...]:
    """Multiset of base twists of Sym^k(V): all sums beta . a over weak
    compositions beta of k, as a sorted tuple of length C(k+n, n)."""
    if k < 0:
        raise ValueError("symmetric power index must be nonnegative")
    from .characters import weak_compositions

    twists = [sum(aj * bj for aj, bj in zip(x.a, beta)) for beta in weak_compositions(k, x.n + 1)]
    twists.sort()
    return tuple(twists)


def zero_table(x: Scroll) -> tuple[int, ...]:
    return (0,) * (x.dim + 1)


def add_tables(t1, t2) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(t1, t2))


@lru_cache(maxsize=None)
def line_cohom(x: Scroll, d: DivClass) -> tuple[int, ...]:
    """Cohomology table (h^0, ..., h^{n+m}) of O(d.p * H + d.q * F)."""
    table = [0] * (x.dim + 1)
    p, q = d.p, d.q
    if p >= 0:
        for t in sym_twists(x, p):
            h0, hm = pm_cohom(x.m, t + q)
            table[0] += h0
            table[x.m] += hm
    elif p < -x.n:
        b = x.c - q - 1 - x.m
        for t in sym_twists(x, -p - x.n - 1):
            h0, hm = pm_cohom(x.m, t + b)
            table[x.dim] += h0
            table[x.n] += hm
    return tuple(table)


def euler_char(x: Scroll, d: DivClass) -> int:
    return sum(h if i % 2 == 0 else -h for i, h in enumerate(line_cohom(x, d)))


def is_globally_generated(x: Scroll, d: DivClass) -> bool:
    """O(pH+qF) is globally generated iff p >= 0 and every twist of the
    pushforward Sym^p(V)(q) is nonnegative, i.e. p*a_0 + q >= 0."""
    d = x.normalize_class(d)
    return d.p >= 0 and d.p * x.a[0] + d.q >= 0


@dataclass(frozen=True)
class SplitBundle:
    """A finite direct sum of line bundles, stored as a sorted multiset."""

    summands: tuple[DivClass, ...]

    def __post_init__(self):
        if not self.summands:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @property
    def rank(self) -> int:
        return len(self.summands)

    def twist(self, t: DivClass) -> "SplitBundle":
        return SplitBundle(tuple(s + t for s in self.summands))

    def dual(self) -> "SplitBundle":
        return SplitBundle(tuple(-s for s in self.summands))

    def to_json(self) -> dict:
        return {"split": [s.to_json() for s in self.summands]}

    @staticmethod
    def from_json(data) -> "SplitBundle":
        return SplitBundle(tuple(DivClass.from_json(s) for s in data))


def bundle_cohom(x: Scroll, e: SplitBundle, t: DivClass = ZERO) -> tuple[int, ...]:
    """Entrywise sum of line cohomology over the summands, twisted by t."""
    table = zero_table(x)
    for s in e.summands:
        table = add_tables(table, line_cohom(x, s + t))
    return table


def section_monomials(x: Scroll, d: DivClass) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Monomial basis (beta, alpha) of the sections of O(d)."""
    from .characters import weak_compositions

    p, q = d.p, d.q
    out = []
    if p < 0:
        return out
    for beta in weak_compositions(p, x.n + 1):
        s = q + sum(aj * bj for aj, bj in zip(x.a, beta))
        for alpha in weak_compositions(s, x.m + 1):
            out.append((beta, alpha))
    return out


def _bump(vec: tuple[int, ...], i: int) -> tuple[int, ...]:
    return vec[:i] + (vec[i] + 1,) + vec[i + 1:]


def mult_map_rank(x: Scroll, e: SplitBundle, by: DivClass) -> tuple[int, int]:
    """Rank and target dimension of a section multiplication map.

    by = (0,1): H^0(E) (x) H^0(O(F)) -> H^0(E(F)), multiplication by the
    base variables.  by = (1,0): (+)_k H^0(E(a_k F)) -> H^0(E(H)),
    multiplication by the fiber variables.  Products of basis monomials are
    monomials, so the image dimension is the number of distinct products.
    """
    by = DivClass(by.p, by.q)
    rank = 0
    target = 0
    if by == DivClass(0, 1):
        for s in e.summands:
            target += len(section_monomials(x, s + by))
            products = set()
            for beta, alpha in section_monomials(x, s):
                for i in range(x.m + 1):
                    products.add((beta, _bump(alpha, i)))
            rank += len(products)
    elif by == DivClass(1, 0):
        for s in e.summands:
            target += len(section_monomials(x, s + by))
            products = set()
            for k, ak in enumerate(x.a):
                for beta, alpha in section_monomials(x, s + DivClass(0, ak)):
                    products.add((_bump(beta, k), alpha))
            rank += len(products)
    else:
        raise ValueError("multiplication is supported for twists (0,1) and (1,0) only")
    return rank, target
