"""Transform layer: mode coefficients, admissibility, analysis, reconstruction."""

import warnings

import numpy as np
import pytest

from circlet import (
    AliasingError,
    CircleGrid,
    CircleSignal,
    DecayError,
    ScaleGrid,
    analyze,
    analyze_direct,
    dilated_coeffs,
    fourier_coeffs,
    frame_bounds,
    lambda_sequence,
    make_dog,
    mexican_hat,
    mode_synthesis,
    rep_action,
    stereo_lift,
    synthesize,
    weak_admissibility,
)
from circlet.cwt import FourierCoeffs

GRID = CircleGrid(1024)


@pytest.fixture(scope="module")
def dog():
    return make_dog(2.0)


@pytest.fixture(scope="module")
def dog_report(dog):
    return lambda_sequence(dog, n_max=32)


def two_mode_signal():
    t = GRID.nodes
    return CircleSignal(GRID, np.cos(2 * t) + 0.5 * np.sin(4 * t))


def test_fourier_coeffs_cosine():
    # cos(2 theta) = (e^{2 i theta} + e^{-2 i theta})/2, so both +-1
    # coefficients against e^{2 i n theta}/sqrt(pi) equal sqrt(pi)/2
    t = GRID.nodes
    psi = CircleSignal(GRID, np.cos(2 * t))
    c = fourier_coeffs(psi, 4)
    assert c[1] == pytest.approx(np.sqrt(np.pi) / 2, abs=1e-12)
    assert c[-1] == pytest.approx(np.sqrt(np.pi) / 2, abs=1e-12)
    assert abs(c[0]) < 1e-12
    assert abs(c[2]) < 1e-12


def test_fourier_round_trip():
    psi = two_mode_signal()
    c = fourier_coeffs(psi, 8)
    back = mode_synthesis(GRID, c)
    assert np.max(np.abs(back.values - psi.values)) < 1e-12


def test_fourier_parseval():
    psi = two_mode_signal()
    c = fourier_coeffs(psi, 8)
    assert np.sum(np.abs(c.values) ** 2) == pytest.approx(psi.norm() ** 2, rel=1e-12)


def test_fourier_coeffs_rejects_aliased():
    n = 64
    grid = CircleGrid(n)
    t = grid.nodes
    psi = CircleSignal(grid, np.exp(2j * 20 * t))
    with pytest.raises(AliasingError):
        fourier_coeffs(psi, 16)


def test_fourier_coeffs_caps_n_max():
    psi = two_mode_signal()
    with pytest.raises(ValueError):
        fourier_coeffs(psi, GRID.n_samples // 4 + 1)


def test_dilated_coeffs_match_acted_signal(dog):
    """The scale-resolved coefficients computed in the undilated variable
    must agree with literally transforming the wavelet and reading its
    modes, wherever the latter is alias-free."""
    sc = ScaleGrid(0.5, 2.0, 5)
    via_substitution = dilated_coeffs(dog, sc, 16)
    for j, a in enumerate(sc.nodes):
        acted = rep_action(dog, float(a), 0.0)
        literal = fourier_coeffs(acted, 16)
        assert np.max(np.abs(via_substitution[:, j] - literal.values)) < 1e-10


def test_dilated_coeffs_identity_scale(dog):
    sc = ScaleGrid(0.999999, 1.000001, 3)
    mid = dilated_coeffs(dog, sc, 8)[:, 1]
    plain = fourier_coeffs(dog, 8)
    assert np.max(np.abs(mid - plain.values)) < 1e-5


def test_weak_integral_balanced(dog):
    assert abs(weak_admissibility(dog)) < 1e-10


def test_weak_integral_unbalanced():
    # the historical single-weight difference keeps a finite weak integral:
    # (1 - sqrt(alpha)) times the bump's own integral
    unb = make_dog(2.0, balanced=False)
    w = weak_admissibility(unb)
    assert w.real == pytest.approx(-0.6313067781276809, abs=1e-9)
    bump = CircleSignal.from_evaluator(GRID, lambda t: np.exp(-np.tan(t) ** 2))
    assert w.real == pytest.approx((1 - np.sqrt(2)) * weak_admissibility(bump).real, rel=1e-10)


def test_weak_integral_decay_guard():
    t = GRID.nodes
    flat = CircleSignal(GRID, np.ones_like(t, dtype=complex))
    with pytest.raises(DecayError):
        weak_admissibility(flat)
    value, ok = weak_admissibility(flat, strict=False)
    assert not ok
    assert np.isfinite(value.real)


def test_lambda_sequence_balanced_dog(dog_report):
    rep = dog_report
    assert rep.admissible
    assert rep.weak_ok
    assert np.all(rep.lambdas > 0.0)
    assert np.isfinite(rep.sup_lambda)
    # frozen profile of the alpha = 2 balanced difference at 1024 samples
    assert rep.lambda_of(0) == pytest.approx(0.0635327747, abs=1e-6)
    assert rep.lambda_of(8) == pytest.approx(0.1609331784, abs=1e-6)
    assert rep.lambda_of(32) == pytest.approx(0.1591827, abs=1e-4)


def test_lambda_symmetry(dog_report):
    # real wavelet: conjugation flips the mode sign, |c_n| = |c_{-n}|
    for n in (1, 5, 17, 32):
        assert dog_report.lambda_of(n) == pytest.approx(dog_report.lambda_of(-n), rel=1e-10)


def test_lambda_rejects_constant():
    t = GRID.nodes
    flat = CircleSignal(GRID, np.ones_like(t, dtype=complex))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = lambda_sequence(flat, n_max=8)
    assert not rep.admissible
    assert not rep.weak_ok


def test_lambda_warns_without_plateau(dog):
    # a tiny mode budget cannot have settled; the report must say so
    with pytest.warns(RuntimeWarning, match="plateau"):
        rep = lambda_sequence(dog, n_max=2)
    assert not rep.plateau_ok


def test_lifted_line_wavelet_is_admissible():
    lifted = stereo_lift(mexican_hat(), GRID)
    rep = lambda_sequence(lifted, n_max=32)
    assert rep.admissible
    assert abs(rep.weak_integral) < 1e-10
    # the line admissibility constant is 1; the lifted mode integrals
    # settle onto that same plateau
    assert rep.lambda_of(32) == pytest.approx(1.0, abs=5e-3)


def test_frame_bounds(dog_report):
    lo, hi = frame_bounds(dog_report)
    assert 0.0 < lo <= hi
    assert lo == pytest.approx(dog_report.inf_lambda)
    assert hi == pytest.approx(dog_report.sup_lambda)


def test_frame_bounds_warn_on_bad_report(dog):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = lambda_sequence(dog, n_max=2)
    with pytest.warns(RuntimeWarning):
        frame_bounds(rep)


def test_analyze_matches_direct_quadrature(dog):
    psi = two_mode_signal()
    scales = ScaleGrid(0.4, 2.5, 7)
    scal = analyze(psi, dog, scales=scales, n_max=16)
    for j in (0, 3, 6):
        for i in (100, 512, 900):
            a = float(scales.nodes[j])
            vt = float(scal.angles.nodes[i])
            direct = analyze_direct(psi, dog, a, vt)
            assert abs(scal.values[j, i] - direct) < 1e-8


def test_analyze_rotation_covariance(dog):
    # rotating the signal translates the scalogram in the angle slot
    psi = two_mode_signal()
    shift = 17
    vt0 = float(GRID.spacing * shift)
    rotated = rep_action(psi, 1.0, vt0)
    scales = ScaleGrid(0.5, 2.0, 4)
    base = analyze(psi, dog, scales=scales, n_max=8)
    moved = analyze(rotated, dog, scales=scales, n_max=8)
    assert np.max(np.abs(moved.values - np.roll(base.values, shift, axis=1))) < 1e-10


def test_analyze_dilation_covariance_on_axis(dog):
    # dilating the signal slides the zero-rotation fiber along log-scale:
    # W_{U(a0) psi}(0, a) = W_psi(0, a/a0).  Off that fiber rotations and
    # dilations interleave and no plain slide exists.
    psi = CircleSignal.from_evaluator(GRID, lambda t: np.exp(-np.tan(t) ** 2) * np.cos(2 * t))
    a0 = 2.0
    dilated = rep_action(psi, a0, 0.0)
    for a in (0.5, 1.0, 3.0):
        lhs = analyze_direct(dilated, dog, a, 0.0)
        rhs = analyze_direct(psi, dog, a / a0, 0.0)
        assert abs(lhs - rhs) < 1e-10


def test_scalogram_energy_identity(dog, dog_report):
    psi = two_mode_signal()
    scal = analyze(psi, dog, n_max=16)
    c = fourier_coeffs(psi, 16)
    lam = np.array([dog_report.lambda_of(n) for n in range(-16, 17)])
    diagonal = np.pi * float(np.sum(lam * np.abs(c.values) ** 2))
    assert scal.energy() == pytest.approx(diagonal, rel=1e-10)


def test_round_trip(dog, dog_report):
    psi = two_mode_signal()
    scal = analyze(psi, dog, n_max=16)
    rec = synthesize(scal, dog, dog_report)
    err = np.sqrt(GRID.spacing * np.sum(np.abs(rec.values - psi.values) ** 2)) / psi.norm()
    assert err < 1e-10


def test_round_trip_improves_with_scale_range(dog, dog_report):
    psi = two_mode_signal()
    errs = []
    for a_min, a_max in ((1e-1, 1e1), (1e-2, 1e2), (1e-3, 1e3)):
        scal = analyze(psi, dog, scales=ScaleGrid(a_min, a_max, 400), n_max=16)
        rec = synthesize(scal, dog, dog_report)
        errs.append(np.sqrt(GRID.spacing * np.sum(np.abs(rec.values - psi.values) ** 2)) / psi.norm())
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-2


def test_synthesize_skips_dead_modes(dog, dog_report):
    # a mode floor high enough to kill everything returns the zero signal
    psi = two_mode_signal()
    scal = analyze(psi, dog, n_max=8)
    rec = synthesize(scal, dog, dog_report, mode_floor=10.0)
    assert np.max(np.abs(rec.values)) == 0.0


def test_make_dog_validation():
    with pytest.raises(ValueError):
        make_dog(1.0)
    with pytest.raises(ValueError):
        make_dog(-2.0)


def test_scale_grid_weights_integrate_power_law():
    # int_{a0}^{a1} a^{-2} da computed by the grid's own rule
    sc = ScaleGrid(1e-2, 1e2, 4000)
    got = float(sc.integrate_da_over_a2(np.ones(sc.count)))
    want = 1.0 / 1e-2 - 1.0 / 1e2
    assert got == pytest.approx(want, rel=1e-5)


def test_fourier_coeffs_container():
    c = FourierCoeffs(2, np.arange(5, dtype=complex))
    assert c[-2] == 0.0
    assert c[2] == 4.0
    with pytest.raises(IndexError):
        c[3]
    with pytest.raises(ValueError):
        FourierCoeffs(3, np.zeros(5, dtype=complex))
