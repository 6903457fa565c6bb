"""Brute-force line bundle cohomology by torus character enumeration.

The total coordinate ring of a scroll has base variables x_0..x_m of class F
and fiber variables y_0..y_n of class H - a_j*F.  A Laurent monomial
x^alpha * y^beta has class (|beta|, |alpha| - sum_j a_j*beta_j), and its
contribution to cohomology is decided purely by the sign pattern of its
exponents:

    degree 0      alpha >= 0 and beta >= 0          (a regular section)
    degree m      alpha <= -1 (all) and beta >= 0
    degree n      alpha >= 0 and beta <= -1 (all)
    degree n+m    alpha <= -1 and beta <= -1

Mixed-sign exponent vectors contribute nothing.  When m = 0 or n = 0 (or
m = n) several rows land on the same cohomological degree and their counts
add.  This is the standard chart-by-chart computation for a product-type
fan, and it serves as the independent oracle for the closed forms in
:mod:`scrollcohom.cohomology`: the two must agree exactly, and the test
suite checks that they do over large twist boxes.

Enumeration is finite for every (class, row): rows with beta >= 0 fix
|beta| = p, rows with beta <= -1 fix |beta| = p <= -(n+1), and alpha is
then pinned by the class equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .scroll import DivClass, Scroll


@dataclass(frozen=True)
class Character:
    """Exponent vector of a Laurent monomial x^alpha * y^beta."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def degree(self, x: Scroll) -> DivClass:
        return DivClass(sum(self.beta), sum(self.alpha) - sum(aj * bj for aj, bj in zip(x.a, self.beta)))

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta)}


def weak_compositions(total: int, parts: int):
    """Yield tuples of `parts` nonnegative integers summing to `total`,
    in lexicographically increasing order."""
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


# the four sign classes: (alpha negative?, beta negative?)
_SIGN_CLASSES = ((False, False), (True, False), (False, True), (True, True))


def _class_row(x: Scroll, alpha_neg: bool, beta_neg: bool) -> int:
    return (x.m if alpha_neg else 0) + (x.n if beta_neg else 0)


def valid_rows(x: Scroll) -> tuple[int, ...]:
    return tuple(sorted({_class_row(x, an, bn) for an, bn in _SIGN_CLASSES}))


def _enumerate_sign_class(x: Scroll, d: DivClass, alpha_neg: bool, beta_neg: bool):
    p, q = d.p, d.q
    if beta_neg:
        # beta = -1 - beta' entrywise, so |beta| = p forces |beta'| = -p-(n+1)
        betas = [tuple(-1 - b for b in comp) for comp in weak_compositions(-p - (x.n + 1), x.n + 1)]
    else:
        betas = list(weak_compositions(p, x.n + 1))
    out = []
    for beta in betas:
        s = q + sum(aj * bj for aj, bj in zip(x.a, beta))
        if alpha_neg:
            alphas = [tuple(-1 - a for a in comp) for comp in weak_compositions(-s - (x.m + 1), x.m + 1)]
        else:
            alphas = list(weak_compositions(s, x.m + 1))
        out.extend(Character(alpha, beta) for alpha in alphas)
    return out


def enumerate_contributing(x: Scroll, d: DivClass, row: int) -> list[Character]:
    """All characters of class `d` contributing to cohomological degree `row`.

    `row` must be one of the degrees where a line bundle can have cohomology
    at all ({0, m, n, n+m}); when several sign classes share the degree the
    union is returned, sorted by (beta, alpha).
    """
    if row not in valid_rows(x):
        raise ValueError(f"row {row} is not one of the contributing degrees {valid_rows(x)}")
    found = []
    for alpha_neg, beta_neg in _SIGN_CLASSES:
        if _class_row(x, alpha_neg, beta_neg) == row:
            found.extend(_enumerate_sign_class(x, d, alpha_neg, beta_neg))
    found.sort(key=lambda ch: (ch.beta, ch.alpha))
    return found


@lru_cache(maxsize=None)
def _character_counts(x: Scroll, d: DivClass) -> tuple[int, ...]:
    table = [0] * (x.dim + 1)
    for alpha_neg, beta_neg in _SIGN_CLASSES:
        row = _class_row(x, alpha_neg, beta_neg)
        table[row] += len(_enumerate_sign_class(x, d, alpha_neg, beta_neg))
    return tuple(table)


def character_cohom(x: Scroll, d: DivClass) -> tuple[int, ...]:
    """Full cohomology table of O(d) by counting contributing characters."""
    return _character_counts(x, d)
