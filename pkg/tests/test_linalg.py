from fractions import Fraction
from random import Random

from scrollcohom.linalg import rank_int


def _rank_fraction(rows, ncols):
    mat = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank = 0
    col = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def test_simple_ranks():
    assert rank_int([]) == 0
    assert rank_int([{0: 1}, {0: -1}]) == 1
    assert rank_int([{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]) == 2
    assert rank_int([{0: 2}, {1: 3}]) == 2


def test_no_unit_pivot():
    rows = [{0: 2, 1: 4}, {0: 3, 1: 6}, {0: 2, 1: 5}]
    assert rank_int([dict(r) for r in rows]) == 2


def test_against_fraction_elimination():
    rng = Random(7)
    for trial in range(60):
        nrows, ncols = rng.randint(1, 8), rng.randint(1, 8)
        rows = []
        for _ in range(nrows):
            row = {c: rng.choice([-2, -1, -1, 1, 1, 2, 3]) for c in range(ncols) if rng.random() < 0.5}
            rows.append(row)
        assert rank_int([dict(r) for r in rows]) == _rank_fraction(rows, ncols)
