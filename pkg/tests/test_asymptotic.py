import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from colored_jones.asymptotic import (
    FIG8_VOLUME,
    VolumeRow,
    VolumeTable,
    blowup_residuals,
    ekholm_report,
    extrapolate_volume,
    g_is_unimodal,
    qpoch_asymptotic_gap,
    saddle_gradient,
    saddle_potential,
    saddle_solve,
    summand_ratio_analysis,
    volume_sequence,
    zw1_residuals,
    zw2_residuals,
)
from colored_jones.fig8 import fig8_single_sum
from colored_jones.phase import RootContext
from colored_jones.special import V3, lobachevsky
from oracles import naive_qpoch

VOL = 2.029883212819307


def test_volume_constant():
    assert FIG8_VOLUME == pytest.approx(VOL, abs=1e-12)
    assert FIG8_VOLUME == pytest.approx(6 * lobachevsky(math.pi / 3), abs=1e-15)


def test_volume_sequence_examples():
    t = volume_sequence([1])
    assert t.rows == (VolumeRow(1, 0.0, 0.0),)
    (row,) = volume_sequence([6]).rows
    assert row.log_jn == pytest.approx(math.log(89), rel=1e-15)
    assert row.a_n == pytest.approx(2 * math.pi * math.log(89) / 6, rel=1e-15)
    assert row.a_n == pytest.approx(4.700489014595, abs=1e-12)


def test_volume_sequence_sorts_and_dedupes():
    t = volume_sequence([500, 250, 500])
    assert [r.n for r in t.rows] == [250, 500]
    with pytest.raises(ValueError):
        volume_sequence([0, 3])


def test_volume_sequence_decreases_to_the_volume():
    t = volume_sequence([250, 500, 1000, 2000])
    a = [r.a_n for r in t.rows]
    assert all(x > y for x, y in zip(a, a[1:]))
    assert all(x > VOL for x in a)
    assert extrapolate_volume(t) == pytest.approx(VOL, abs=5e-3)
    assert t.extrapolated == extrapolate_volume(t)
    assert t.fit_residual < 1e-5


def test_extrapolation_exact_fits():
    rows = tuple(VolumeRow(n, 0.0, 7.0) for n in (10, 20, 40, 80))
    t = VolumeTable(rows)
    assert extrapolate_volume(t) == pytest.approx(7.0, abs=1e-12)
    assert t.fit_residual < 1e-12
    rows = tuple(VolumeRow(n, 0.0, 3.0 + 2 * math.log(n) / n - 5.0 / n) for n in (10, 30, 90, 270, 810))
    assert extrapolate_volume(VolumeTable(rows)) == pytest.approx(3.0, abs=1e-10)


def test_extrapolation_needs_three_rows():
    with pytest.raises(ValueError):
        extrapolate_volume(volume_sequence([10, 20]))


@pytest.mark.parametrize(
    "n, k, g2, jn",
    [(1, 0, 1, 1), (2, 1, 4, 5), (6, 5, 36, 89)],
)
def test_ekholm_examples(n, k, g2, jn):
    r = ekholm_report(n)
    assert r.k_star == k
    assert r.g2 == pytest.approx(g2, rel=1e-14)
    assert r.jn == pytest.approx(jn, rel=1e-14)
    assert r.lower_ok and r.upper_ok


def test_ekholm_riemann_sum_n6():
    assert ekholm_report(6).riemann_sum == pytest.approx(math.log(6) / 3, rel=1e-14)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 2000))
def test_ekholm_bounds_and_argmax(n):
    r = ekholm_report(n)
    assert r.lower_ok and r.upper_ok
    assert abs(r.k_star - 5 * n / 6) <= 1
    assert g_is_unimodal(n)
    # exhaustive argmax by brute force over the plain products
    if n <= 300:
        g = [abs(naive_qpoch(n, k)) for k in range(n)]
        assert max(g) == pytest.approx(g[r.k_star], rel=1e-12)
        assert r.jn == pytest.approx(fig8_single_sum(RootContext(n)), rel=1e-12)


def test_ekholm_ties_go_to_the_larger_index():
    # for 6 | N the product g_k has equal values at k = 5N/6 - 1 and 5N/6
    r = ekholm_report(12)
    assert r.k_star == 10


def test_riemann_limit():
    r = ekholm_report(10**5)
    assert abs(r.riemann_sum - 3 / math.pi * lobachevsky(math.pi / 3)) <= 1e-3
    assert 3 / math.pi * lobachevsky(math.pi / 3) == pytest.approx(0.323066, abs=1e-6)


def test_saddle_report():
    r = saddle_solve()
    for u in r.roots_u:
        assert abs(u * u - u + 1) <= 1e-12
    assert abs(r.roots_u[0] - cmath.exp(1j * math.pi / 3)) <= 1e-12
    assert abs(r.roots_u[1] - cmath.exp(-1j * math.pi / 3)) <= 1e-12
    assert r.im_f0 == pytest.approx(VOL, abs=1e-12)
    assert r.f0.imag == pytest.approx(r.im_f0, abs=1e-12)
    assert abs(r.f0.real) < 1e-12
    assert r.trivial_residuals == (0, 0)
    assert r.im_f0 / V3 == pytest.approx(2, abs=1e-9)


def test_blowup_at_the_roots():
    for u in saddle_solve().roots_u:
        a, b = blowup_residuals(0, u)
        assert abs(a) < 1e-15 and abs(b) < 1e-15


unit_circle = st.floats(0.05, 2 * math.pi - 0.05).map(lambda t: cmath.exp(1j * t))


@settings(max_examples=100)
@given(unit_circle, unit_circle)
def test_zw1_is_the_exponentiated_gradient(z, w):
    if min(abs(1 - z), abs(1 - 1 / w), abs(1 - z * w)) < 1e-3:
        return
    d1, d2 = saddle_gradient(z, w)
    r1, r2 = zw1_residuals(z, w)
    assert abs((1 - z) * (cmath.exp(d1) - 1) - r1) < 1e-10
    assert abs((1 - 1 / w) * (cmath.exp(d2) - 1) - r2) < 1e-10
    # and zw2 is zw1 times -z w
    p1, p2 = zw2_residuals(z, w)
    assert abs(p1 + z * w * r1) < 1e-12 and abs(p2 + z * w * r2) < 1e-12


@settings(max_examples=50)
@given(unit_circle, unit_circle)
def test_gradient_matches_finite_differences(z, w):
    if min(abs(1 - z), abs(1 - 1 / w), abs(1 - z * w)) < 1e-2:
        return
    h = 1e-6
    # derivative along the circle: d/dt F(z e^{it}) = i z dF/dz
    dz = (saddle_potential(z * cmath.exp(1j * h), w) - saddle_potential(z * cmath.exp(-1j * h), w)) / (2j * h)
    dw = (saddle_potential(z, w * cmath.exp(1j * h)) - saddle_potential(z, w * cmath.exp(-1j * h))) / (2j * h)
    g1, g2 = saddle_gradient(z, w)
    # log branch choices agree with Li2's principal branch away from the cuts
    assert abs(cmath.exp(dz) - cmath.exp(g1)) < 1e-5 * max(1, abs(cmath.exp(g1)))
    assert abs(cmath.exp(dw) - cmath.exp(g2)) < 1e-5 * max(1, abs(cmath.exp(g2)))


def test_ratio_example_n3():
    q = cmath.exp(2j * math.pi / 3)
    f = lambda i, j: naive_qpoch(3, i + j) * naive_qpoch(3, i + j, True) / (naive_qpoch(3, i) * naive_qpoch(3, j, True))
    assert abs(f(1, 0) / f(0, 0) - (1 - 1 / q)) < 1e-15
    assert abs((1 - 1 / q) - complex(1.5, math.sqrt(3) / 2)) < 1e-15


def test_ratio_report_small():
    r = summand_ratio_analysis(2)
    assert r.f_max == pytest.approx(4, rel=1e-15)
    assert r.k_designated == 1
    r = summand_ratio_analysis(12)
    assert r.max_ratio_error < 1e-12
    assert r.max_zw1_mismatch < 1e-12
    with pytest.raises(ValueError):
        summand_ratio_analysis(1)


def test_ratio_argmax_against_brute_force():
    n = 14
    best = max(
        ((i, j) for i in range(n) for j in range(n - i)),
        key=lambda ij: abs(naive_qpoch(n, sum(ij))) ** 2 / (abs(naive_qpoch(n, ij[0])) * abs(naive_qpoch(n, ij[1]))),
    )
    r = summand_ratio_analysis(n)
    assert r.argmax_ij == best


def test_ratio_route_converges():
    gaps = [abs(summand_ratio_analysis(n).v_n - VOL) for n in (600, 1200, 3000)]
    assert gaps[0] < 0.15
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.05


def test_qpoch_gap():
    assert qpoch_asymptotic_gap(0.001, 100) == 0.0
    assert qpoch_asymptotic_gap(0.3, 1000) <= 0.01
    assert qpoch_asymptotic_gap(0.3, 10000) < qpoch_asymptotic_gap(0.3, 1000)
    for bad in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(ValueError):
            qpoch_asymptotic_gap(bad, 100)


@given(st.floats(0.05, 0.95), st.integers(50, 3000))
def test_qpoch_gap_shrinks_like_log_n_over_n(alpha, n):
    assert qpoch_asymptotic_gap(alpha, n) <= 2 * math.log(n) / n


def test_row_order_independent_of_input_order():
    a = volume_sequence([40, 10, 20])
    b = volume_sequence([10, 20, 40])
    assert a.rows == b.rows
    assert np.array_equal([r.a_n for r in a.rows], [r.a_n for r in b.rows])
