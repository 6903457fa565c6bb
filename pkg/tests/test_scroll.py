import pytest

from scrollcohom import DivClass, line_cohom, make_scroll, normalize_twist


def test_make_scroll_sorts_and_sums():
    x = make_scroll(1, 1, [2, 1])
    assert (x.m, x.n, x.a, x.c) == (1, 1, (1, 2), 3)


def test_hirzebruch_is_semipositive_not_positive():
    x = make_scroll(1, 1, [0, 2])
    assert x.is_semipositive and not x.is_positive
    assert x.c == 2


def test_projective_plane_as_base_degenerate_fiber():
    x = make_scroll(0, 2, [0, 0, 0])
    assert x.dim == 2 and not x.is_positive


@pytest.mark.parametrize("m,n,a", [(1, 1, [1]), (1, 1, [1, 2, 3]), (0, 0, [5]), (-1, 1, [0, 0])])
def test_bad_scroll_rejected(m, n, a):
    with pytest.raises(ValueError):
        make_scroll(m, n, a)


@pytest.mark.parametrize("m,n,a,want", [
    (1, 1, [1, 2], (-2, 1)),
    (1, 1, [0, 2], (-2, 0)),
    (2, 2, [1, 1, 1], (-3, 0)),
])
def test_canonical_class(m, n, a, want):
    assert make_scroll(m, n, a).canonical_class() == DivClass(*want)


@pytest.mark.parametrize("m,n,a,want", [
    (1, 1, [1, 1], (-2, 2)),
    (1, 2, [1, 1, 2], (-3, 4)),
    (2, 1, [1, 3], (-2, 4)),
])
def test_relative_canonical(m, n, a, want):
    assert make_scroll(m, n, a).relative_canonical() == DivClass(*want)


def test_serre_dual_twist_examples():
    x = make_scroll(1, 1, [1, 2])
    assert x.serre_dual_twist(DivClass(0, 0)) == DivClass(-2, 1)
    assert x.serre_dual_twist(DivClass(-2, 1)) == DivClass(0, 0)
    y = make_scroll(2, 2, [1, 1, 1])
    assert y.serre_dual_twist(DivClass(1, -1)) == DivClass(-4, 1)


def test_serre_dual_is_involution():
    for x in (make_scroll(1, 1, [1, 2]), make_scroll(2, 0, [2]), make_scroll(0, 2, [0, 0, 0])):
        for p in range(-4, 5):
            for q in range(-4, 5):
                d = x.divclass(p, q)
                assert x.serre_dual_twist(x.serre_dual_twist(d)) == d


def test_degenerate_class_normalization():
    assert make_scroll(0, 2, [0, 0, 0]).divclass(3, 5) == DivClass(3, 0)
    assert make_scroll(2, 0, [2]).divclass(3, 5) == DivClass(0, 11)


def test_normalize_twist_map():
    x = make_scroll(1, 1, [0, 2])
    xw, tmap = normalize_twist(x, 1)
    assert xw.a == (1, 3) and xw.c == 4 == x.c + 2
    assert tmap.apply(DivClass(1, 0)) == DivClass(1, -1)
    x2, tmap0 = normalize_twist(make_scroll(1, 1, [1, 2]), 0)
    assert x2.a == (1, 2) and tmap0.apply(DivClass(2, 3)) == DivClass(2, 3)


def test_normalize_twist_preserves_cohomology():
    x = make_scroll(1, 1, [0, 2])
    xw, tmap = normalize_twist(x, 1)
    assert line_cohom(x, DivClass(1, 0)) == line_cohom(xw, DivClass(1, -1))
    for p in range(-4, 5):
        for q in range(-4, 5):
            d = DivClass(p, q)
            assert line_cohom(x, d) == line_cohom(xw, tmap.apply(d))
            assert tmap.invert(tmap.apply(d)) == d


def test_json_roundtrip():
    x = make_scroll(1, 2, [1, 1, 2])
    from scrollcohom.scroll import Scroll

    assert Scroll.from_json(x.to_json()) == x
    assert DivClass.from_json([3, -1]) == DivClass(3, -1)
    with pytest.raises(ValueError):
        DivClass.from_json([1])
