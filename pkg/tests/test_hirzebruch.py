import itertools

import pytest
from hypothesis import given, strategies as st

from noetherline.exactring import A, E, ModeError, is_zero
from noetherline.hirzebruch import (
    L,
    S,
    ZERO,
    SurfaceDivisorClass,
    canonical_class,
    cohomology,
    intersect,
    is_base_point_free,
    is_nef,
    is_very_ample,
    parse_surface_class,
    restriction_degree_to_section,
)


def h1_pushforward(alpha, beta, e):
    """Independent h^1: R^0 of O(alpha*s + beta*l) to P^1 splits as O(beta - i*e), i <= alpha."""
    if alpha >= 0:
        return sum(max(0, -(beta - i * e) - 1) for i in range(alpha + 1))
    if alpha == -1:
        return 0
    # alpha <= -2: Serre duality moves it to K - D, which has alpha' = -2 - alpha >= 0
    return h1_pushforward(-2 - alpha, -(e + 2) - beta, e)


def test_intersect_examples():
    assert intersect(S, S, 3) == -3
    assert intersect(L, L, 7) == 0
    m = SurfaceDivisorClass(1, 3 * 3 - 3 - 2)
    assert intersect(m, m, 3) == 5
    assert intersect(S, S, E) == -E


def test_canonical_class_examples():
    assert canonical_class(0) == SurfaceDivisorClass(-2, -2)
    assert canonical_class(3) == SurfaceDivisorClass(-2, -5)
    # rational fiber: K.l + l^2 = -2, for every e
    assert intersect(canonical_class(E), L, E) + intersect(L, L, E) == -2


def test_nef_examples():
    assert is_nef(SurfaceDivisorClass(2, 6), 3)
    assert not is_nef(S, 1)
    assert intersect(S, S, 1) < 0
    assert is_nef(ZERO, 4)


def test_base_point_free_examples():
    assert is_base_point_free(SurfaceDivisorClass(2, 2 * 3), 2)
    assert not is_base_point_free(SurfaceDivisorClass(2, 2 * 2), 3)
    assert is_base_point_free(L, 5)


def test_very_ample_examples():
    assert is_very_ample(SurfaceDivisorClass(1, 3 * 3 - 3 - 2), 3)
    for e in range(8):
        assert not is_very_ample(SurfaceDivisorClass(1, e), e)
    assert not is_very_ample(L, 0)


def test_cohomology_examples():
    assert cohomology(ZERO, 4).as_tuple() == (1, 0, 0)
    assert cohomology(SurfaceDivisorClass(2, 6), 3).h1 == 0
    assert cohomology(SurfaceDivisorClass(1, 4), 3).h0 == 7
    assert cohomology(SurfaceDivisorClass(-1, 3 - 3 - 2), 3).h0 == 0


def test_restriction_degree_examples():
    assert restriction_degree_to_section(SurfaceDivisorClass(1, A), E) == A - E
    assert restriction_degree_to_section(L, E) == 1
    assert restriction_degree_to_section(SurfaceDivisorClass(3, 9), 3) == 0
    assert restriction_degree_to_section(SurfaceDivisorClass(3, 9), 3) == intersect(SurfaceDivisorClass(3, 9), S, 3)


def test_symbolic_rejected_by_concrete_ops():
    sym = SurfaceDivisorClass(2, 2 * A)
    for fn in (is_nef, is_base_point_free, is_very_ample, cohomology):
        with pytest.raises(ModeError):
            fn(sym, 3)
    with pytest.raises(ModeError):
        is_nef(S, E)
    with pytest.raises(ValueError):
        is_nef(S, -1)


GRID = [(SurfaceDivisorClass(al, be), e)
        for al, be, e in itertools.product(range(-6, 7), range(-6, 7), range(6))]


def test_serre_duality_and_riemann_roch_grid():
    for d, e in GRID:
        t = cohomology(d, e)
        dual = cohomology(canonical_class(e) - d, e)
        assert t.as_tuple() == dual.as_tuple()[::-1]
        assert 2 * t.chi == 2 + intersect(d, d - canonical_class(e), e)


def test_h1_matches_direct_sum_oracle_grid():
    for d, e in GRID:
        assert cohomology(d, e).h1 == h1_pushforward(d.alpha, d.beta, e), (d, e)


def test_h1_of_family_classes_by_direct_sum():
    # h^1(2s + 2al) decomposes over P^1 as H^1(O(2a)) + H^1(O(2a - e)) + H^1(O(2a - 2e))
    for e in range(0, 9):
        for a in range(e, 15):
            assert cohomology(SurfaceDivisorClass(2, 2 * a), e).h1 == 0
            assert h1_pushforward(2, 2 * a, e) == 0


def test_positivity_ladder_grid():
    for d, e in GRID:
        if is_very_ample(d, e):
            assert is_base_point_free(d, e)
        if is_base_point_free(d, e):
            assert is_nef(d, e)


def test_nef_means_nonnegative_on_curves():
    # the effective cone is spanned by s and l
    for d, e in GRID:
        if is_nef(d, e):
            assert intersect(d, S, e) >= 0 and intersect(d, L, e) >= 0


coeffs = st.integers(-20, 20)
classes = st.builds(SurfaceDivisorClass, coeffs, coeffs)


@given(classes, classes, classes, st.integers(-5, 5), st.integers(0, 10))
def test_bilinear_symmetric_concrete(x, y, z, k, e):
    assert intersect(x, y, e) == intersect(y, x, e)
    assert intersect(x + y, z, e) == intersect(x, z, e) + intersect(y, z, e)
    assert intersect(k * x, y, e) == k * intersect(x, y, e)


def test_bilinear_symmetric_symbolic():
    x = SurfaceDivisorClass(2, 3 * A - E)
    y = SurfaceDivisorClass(-1, A + 1)
    z = SurfaceDivisorClass(E, 2 * A)
    assert is_zero(intersect(x, y, E) - intersect(y, x, E))
    assert is_zero(intersect(x + y, z, E) - intersect(x, z, E) - intersect(y, z, E))


def test_parse_surface_class():
    assert parse_surface_class("2*s + 2*a*l") == SurfaceDivisorClass(2, 2 * A)
    assert parse_surface_class("-s + (a - e - 2)*l") == SurfaceDivisorClass(-1, A - E - 2)
    assert parse_surface_class("l") == L
    with pytest.raises(ValueError):
        parse_surface_class("s*l")
    with pytest.raises(ValueError):
        parse_surface_class("s + 1")


def test_str_form():
    assert str(SurfaceDivisorClass(-1, -3)) == "-s - 3*l"
    assert str(SurfaceDivisorClass(1, 3 * A - E - 2)) == "s + (3*a - e - 2)*l"
    assert str(ZERO) == "0"
    assert parse_surface_class(str(SurfaceDivisorClass(1, 3 * A - E - 2))) == SurfaceDivisorClass(1, 3 * A - E - 2)
