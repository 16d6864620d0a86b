"""Chart/line bridge: intertwining, isometry, and the flat limit."""

import numpy as np
import pytest

from circlet import (
    CircleGrid,
    CircleSignal,
    ContractionParams,
    DecayError,
    LineGrid,
    LineSignal,
    SupportEscapeError,
    check_intertwining,
    contract_point,
    euclidean_limit_error,
    i_r_inverse,
    i_r_map,
    smooth_bump,
    stereo_lift,
    stereo_project,
)

CGRID = CircleGrid(1024)
LGRID = LineGrid(-16.0, 16.0, 2048)


def chart_bump():
    return CircleSignal.from_evaluator(CGRID, lambda t: np.exp(-np.tan(t) ** 2))


def line_bump():
    return LineSignal.from_evaluator(LGRID, smooth_bump(1.0))


def test_intertwining_exact():
    gamma = chart_bump()
    for a in (0.3, 1.0, 2.0, 7.0):
        assert check_intertwining(gamma, a, LGRID) < 1e-12


def test_projection_preserves_norm():
    # wide window so the projected tails carry nothing
    gamma = chart_bump()
    wide = LineGrid(-200.0, 200.0, 2 ** 15)
    f = stereo_project(gamma, wide)
    assert f.norm() == pytest.approx(gamma.norm(), rel=1e-6)


def test_lift_project_round_trip():
    f = line_bump()
    back = stereo_project(stereo_lift(f, CGRID), LGRID)
    assert np.max(np.abs(back.values - f.values)) < 1e-12


def test_project_lift_round_trip():
    gamma = chart_bump()
    back = stereo_lift(stereo_project(gamma, LGRID), CGRID)
    assert np.max(np.abs(back.values - gamma.values)) < 1e-12


def test_radius_scaling_isometry():
    # I_R multiplies the chart norm by sqrt(R) (the R-scaled arc measure)
    gamma = chart_bump()
    for R in (10.0, 100.0):
        wide = LineGrid(-100.0 * R, 100.0 * R, 2 ** 15)
        f = i_r_map(gamma, wide, ContractionParams(R))
        assert f.norm() ** 2 == pytest.approx(R * gamma.norm() ** 2, rel=1e-6)


def test_lift_rejects_undecayed_window():
    f = LineSignal.from_evaluator(LGRID, lambda x: np.exp(-np.abs(x) / 50.0))
    with pytest.raises(DecayError):
        stereo_lift(f, CGRID)


def test_contract_point():
    vt, a = contract_point(7.0, 2.0, ContractionParams(7.0))
    assert vt == pytest.approx(np.pi / 4)
    assert a == 2.0
    # the contraction flattens translations as R grows
    vt_far, _ = contract_point(7.0, 2.0, ContractionParams(7000.0))
    assert abs(vt_far) < 1.1e-3


def test_limit_error_decreases():
    f = line_bump()
    for b, a in ((0.7, 2.0), (-1.0, 0.5)):
        errs = [
            euclidean_limit_error(f, b, a, ContractionParams(R))
            for R in (10.0, 100.0, 1000.0)
        ]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < errs[0] / 50.0


def test_limit_error_frozen_magnitudes():
    # the decay is quadratic in 1/R for this bump; anchor the R = 10 value
    f = line_bump()
    err10 = euclidean_limit_error(f, 0.7, 2.0, ContractionParams(10.0))
    assert err10 == pytest.approx(4.1455e-3, rel=1e-3)


def test_support_escape_guard():
    f = line_bump()
    # a * halfwidth + |b| beyond the window edge must refuse
    with pytest.raises(SupportEscapeError):
        euclidean_limit_error(f, 10.0, 8.0, ContractionParams(100.0))
    # tiny radius folds the support past the chart ends
    with pytest.raises(SupportEscapeError):
        euclidean_limit_error(f, 0.0, 4.0, ContractionParams(0.05))


def test_smooth_bump_support():
    bump = smooth_bump(2.0)
    x = np.array([-2.5, -2.0, 0.0, 1.99, 2.5])
    v = bump(x)
    assert v[0] == 0.0 and v[1] == 0.0 and v[4] == 0.0
    assert v[2] == pytest.approx(np.exp(-1.0))
    assert 0.0 < v[3] < 1.0


def test_contraction_params_validation():
    with pytest.raises(ValueError):
        ContractionParams(0.0)
    with pytest.raises(ValueError):
        ContractionParams(-3.0)
