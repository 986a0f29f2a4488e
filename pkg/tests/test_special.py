import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from colored_jones.special import CATALAN, V3, clausen2, ideal_tet_volume, im_li2_unit, li2, lobachevsky

angles = st.floats(-20, 20, allow_nan=False)
# values from mpmath clsin(2, .) at 30 digits, frozen
LOB_PI_3 = 0.338313868803218
LOB_PI_6 = 0.507470803204827


def lob_quad(theta):
    """Lobachevsky function straight from its defining integral."""
    f = lambda x: -math.log(abs(2 * math.sin(x)))
    # the integrand has log singularities at multiples of pi; split there
    k = math.floor(theta / math.pi)
    edges = sorted({0.0, theta, *[j * math.pi for j in range(min(0, k), max(0, k) + 1)]})
    edges = [e for e in edges if min(0, theta) <= e <= max(0, theta)]
    total = sum(quad(f, a, b, limit=200)[0] for a, b in zip(edges, edges[1:]))
    return total if theta >= 0 else -total


def test_frozen_values_match_mpmath():
    with mpmath.workdps(30):
        assert float(mpmath.clsin(2, 2 * mpmath.pi / 3) / 2) == pytest.approx(LOB_PI_3, abs=1e-15)
        assert float(mpmath.clsin(2, mpmath.pi / 3) / 2) == pytest.approx(LOB_PI_6, abs=1e-15)


def test_lobachevsky_examples():
    assert lobachevsky(0) == 0
    assert lobachevsky(math.pi / 3) == pytest.approx(LOB_PI_3, abs=1e-12)
    assert lobachevsky(math.pi / 6) == pytest.approx(LOB_PI_6, abs=1e-12)
    assert lobachevsky(math.pi / 6) == pytest.approx(1.5 * lobachevsky(math.pi / 3), abs=1e-12)
    assert abs(lobachevsky(math.pi / 2)) < 1e-15


@pytest.mark.parametrize("theta", [0.1, 0.7, 1.2, 2.5, 3.0, 4.4, -0.9, -3.7])
def test_lobachevsky_against_quadrature(theta):
    assert lobachevsky(theta) == pytest.approx(lob_quad(theta), abs=1e-10)


@given(angles)
def test_clausen_against_mpmath(theta):
    assert clausen2(theta) == pytest.approx(float(mpmath.clsin(2, theta)), abs=1e-12)


@given(angles)
def test_lobachevsky_identities(theta):
    lam = lobachevsky
    assert lam(theta + math.pi) == pytest.approx(lam(theta), abs=1e-11)
    assert lam(-theta) == pytest.approx(-lam(theta), abs=1e-11)
    assert lam(2 * theta) == pytest.approx(2 * lam(theta) + 2 * lam(theta + math.pi / 2), abs=1e-11)
    assert im_li2_unit(theta) == pytest.approx(2 * lam(theta / 2), abs=1e-11)


def test_im_li2_examples():
    assert im_li2_unit(0) == 0
    assert im_li2_unit(math.pi / 3) == pytest.approx(1.014941606409, abs=1e-12)
    assert im_li2_unit(math.pi / 2) == pytest.approx(CATALAN, abs=1e-12)
    assert float(mpmath.catalan) == CATALAN


def test_non_finite_angles():
    for f in (lobachevsky, clausen2, im_li2_unit):
        for bad in (math.inf, -math.inf, math.nan):
            with pytest.raises(ValueError):
                f(bad)


def test_li2_examples():
    assert li2(0) == 0
    assert li2(1) == pytest.approx(math.pi ** 2 / 6, abs=1e-15)
    assert li2(-1) == pytest.approx(-math.pi ** 2 / 12, abs=1e-14)
    with pytest.raises(ValueError):
        li2(1.01)
    with pytest.raises(ValueError):
        li2(2j)


@given(st.floats(0, 1), st.floats(-math.pi, math.pi))
def test_li2_against_mpmath(r, phi):
    z = cmath.rect(r, phi)
    if abs(1 - z) < 1e-12:
        return
    assert abs(li2(z) - complex(mpmath.polylog(2, z))) <= 1e-12


@given(st.floats(0.01, 2 * math.pi - 0.01))
def test_li2_on_the_circle(theta):
    z = cmath.exp(1j * theta)
    # Re Li2(e^{i t}) = pi^2/6 - t(2 pi - t)/4 on [0, 2 pi]
    assert li2(z).real == pytest.approx(math.pi ** 2 / 6 - theta * (2 * math.pi - theta) / 4, abs=1e-12)
    assert li2(z).imag == pytest.approx(im_li2_unit(theta), abs=1e-12)


def test_ideal_tetrahedra():
    t = math.pi / 3
    assert ideal_tet_volume(t, t, t) == pytest.approx(V3, abs=1e-15)
    assert V3 == pytest.approx(1.014941606409, abs=1e-12)
    assert ideal_tet_volume(math.pi / 2, math.pi / 4, math.pi / 4) == pytest.approx(CATALAN, abs=1e-12)
    with pytest.raises(ValueError):
        ideal_tet_volume(1.0, 1.0, 1.0)


@given(st.floats(0, math.pi))
def test_degenerate_tetrahedron(x):
    assert abs(ideal_tet_volume(0.0, x, math.pi - x)) < 1e-12


def test_regular_is_the_largest():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b = rng.uniform(0, math.pi, 2)
        if a + b < math.pi:
            assert ideal_tet_volume(a, b, math.pi - a - b) <= V3 + 1e-12


def test_boundary_values():
    assert lobachevsky(math.pi) == 0
    assert abs(lobachevsky(math.pi / 2)) < 1e-15
    assert lobachevsky(5 * math.pi / 6) == pytest.approx(-1.5 * lobachevsky(math.pi / 3), abs=1e-12)
    assert lobachevsky(5 * math.pi / 6) == pytest.approx(-lobachevsky(math.pi / 6), abs=1e-12)


@given(angles)
def test_clausen_through_duplication(theta):
    # Im Li2(e^{it}) = L(t) + 2 L(pi/2 - t/2), from doubling plus oddness
    assert im_li2_unit(theta) == pytest.approx(lobachevsky(theta) + 2 * lobachevsky(math.pi / 2 - theta / 2), abs=1e-11)


def test_shifted_variant_is_not_an_identity():
    # with pi - t/2 in place of pi/2 - t/2 the formula fails, already at pi/3
    variant = lambda t: lobachevsky(t) + 2 * lobachevsky(math.pi - t / 2)
    assert variant(math.pi / 3) == pytest.approx(-2 * lobachevsky(math.pi / 3), abs=1e-12)
    assert abs(variant(math.pi / 3) - im_li2_unit(math.pi / 3)) > 1
