import pytest

from scrollcohom import (DivClass, SplitBundle, bundle_cohom, euler_char, is_globally_generated,
                         line_cohom, make_scroll, mult_map_rank, pm_cohom, sym_twists)
from scrollcohom.cohomology import choose

X12 = make_scroll(1, 1, [1, 2])
F2 = make_scroll(1, 1, [0, 2])


@pytest.mark.parametrize("m,d,want", [(2, 2, (6, 0)), (1, -1, (0, 0)), (1, -2, (0, 1)),
                                      (0, 3, (1, 0)), (0, -1, (0, 1)), (3, -4, (0, 1))])
def test_pm_cohom(m, d, want):
    assert pm_cohom(m, d) == want


def test_choose_edge_cases():
    assert choose(4, 2) == 6
    assert choose(3, 0) == 1
    assert choose(2, 5) == 0
    assert choose(-1, 2) == 0  # no generalized binomials here; counts only


def test_sym_twists():
    assert sym_twists(X12, 2) == (2, 3, 4)
    assert sym_twists(X12, 0) == (0,)
    assert sym_twists(make_scroll(1, 2, [1, 1, 2]), 1) == (1, 1, 2)
    assert len(sym_twists(make_scroll(1, 3, [1, 1, 1, 1]), 4)) == choose(4 + 3, 3)
    with pytest.raises(ValueError):
        sym_twists(X12, -1)


def test_line_cohom_frozen_values():
    assert line_cohom(X12, DivClass(0, 0)) == (1, 0, 0)
    assert line_cohom(F2, DivClass(-2, 0)) == (0, 0, 1)
    # displayed value: h^{n+m}(O(-H)<-n, c-1-m>) = 1, total twist (-2, 1) here
    assert line_cohom(X12, DivClass(-2, 1)) == (0, 0, 1)
    assert line_cohom(X12, DivClass(-3, 1)) == (0, 0, 5)
    assert line_cohom(X12, DivClass(-1, 5)) == (0, 0, 0)  # -n <= p < 0 vanishes


def test_line_cohom_table_support():
    for x in (X12, make_scroll(2, 1, [1, 3]), make_scroll(2, 2, [1, 1, 1])):
        allowed = {0, x.m, x.n, x.dim}
        for p in range(-5, 6):
            for q in range(-5, 6):
                t = line_cohom(x, DivClass(p, q))
                assert len(t) == x.dim + 1
                assert all(h == 0 for i, h in enumerate(t) if i not in allowed)


def test_bundle_cohom():
    e = SplitBundle((DivClass(0, 0),))
    assert bundle_cohom(X12, e) == line_cohom(X12, DivClass(0, 0))
    # witness used by the splitting tests: O(F) twisted to total class (-2,3)
    e = SplitBundle((DivClass(0, 1),))
    assert bundle_cohom(X12, e, DivClass(-2, 2)) == (0, 1, 0)
    e = SplitBundle((DivClass(0, 0), DivClass(1, 0)))
    assert bundle_cohom(X12, e) == (6, 0, 0)  # 1 + (2 + 3) sections


def test_split_bundle_invariants():
    with pytest.raises(ValueError):
        SplitBundle(())
    e = SplitBundle((DivClass(1, 0), DivClass(0, 0)))
    assert e.summands == (DivClass(0, 0), DivClass(1, 0))
    assert e.rank == 2
    assert e.dual().summands == (DivClass(-1, 0), DivClass(0, 0))
    assert e.twist(DivClass(1, 1)).summands == (DivClass(1, 1), DivClass(2, 1))


@pytest.mark.parametrize("d,want", [((0, 0), 1), ((-1, 0), 0)])
def test_euler_char(d, want):
    assert euler_char(X12, DivClass(*d)) == want


def test_euler_char_hirzebruch():
    assert euler_char(F2, DivClass(-2, 0)) == 1


@pytest.mark.parametrize("x,d,want", [
    (X12, (1, -1), True),
    (X12, (0, -1), False),
    (F2, (1, 0), True),
    (F2, (1, -1), False),
    (X12, (-1, 5), False),
])
def test_is_globally_generated(x, d, want):
    assert is_globally_generated(x, DivClass(*d)) is want


def test_mult_map_rank():
    e = SplitBundle((DivClass(0, 0),))
    assert mult_map_rank(X12, e, DivClass(0, 1)) == (2, 2)
    assert mult_map_rank(X12, e, DivClass(1, 0)) == (5, 5)
    assert mult_map_rank(X12, SplitBundle((DivClass(0, -1),)), DivClass(0, 1)) == (0, 1)
    with pytest.raises(ValueError):
        mult_map_rank(X12, e, DivClass(1, 1))


def test_serre_duality_box():
    for x in (X12, F2, make_scroll(1, 2, [1, 1, 2]), make_scroll(0, 2, [0, 0, 0]),
              make_scroll(2, 0, [2]), make_scroll(1, 1, [-1, 2])):
        for p in range(-6, 7):
            for q in range(-6, 7):
                d = x.divclass(p, q)
                t1 = line_cohom(x, d)
                t2 = line_cohom(x, x.serre_dual_twist(d))
                assert all(t1[i] == t2[x.dim - i] for i in range(x.dim + 1)), (x, d)
