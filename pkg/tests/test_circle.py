"""Chart action: unitarity, multiplier laws, generators, quadratic invariant."""

import numpy as np
import pytest

from circlet import (
    AliasingError,
    CircleGrid,
    CircleSignal,
    RepParams,
    casimir_apply,
    dilate_angle,
    generator,
    multiplier,
    reduce_half_angle,
    rep_action,
    trig_interpolate,
)

GRID = CircleGrid(1024)


def gauss_bump():
    return CircleSignal.from_evaluator(GRID, lambda t: np.exp(-np.tan(t) ** 2))


def band_limited(seed, n_band=8, grid=GRID):
    """Random trig polynomial in modes |n| <= n_band with decaying weights."""
    rng = np.random.default_rng(seed)
    t = grid.nodes
    vals = np.zeros(grid.n_samples, dtype=complex)
    for n in range(-n_band, n_band + 1):
        c = (rng.standard_normal() + 1j * rng.standard_normal()) / (1.0 + n * n)
        vals += c * np.exp(2j * n * t)
    return CircleSignal(grid, vals)


def test_reduce_half_angle():
    assert reduce_half_angle(0.3) == pytest.approx(0.3)
    assert reduce_half_angle(0.3 + np.pi) == pytest.approx(0.3)
    assert reduce_half_angle(-1.2 - 3 * np.pi) == pytest.approx(-1.2)
    assert np.allclose(reduce_half_angle(np.array([0.0, np.pi, 2.5])), [0.0, 0.0, 2.5 - np.pi])


def test_dilate_angle_known_value():
    assert dilate_angle(np.pi / 4, 2.0) == pytest.approx(np.arctan(2.0))
    # a = 1 is the identity
    t = np.linspace(-1.5, 1.5, 11)
    assert np.allclose(dilate_angle(t, 1.0), t)


def test_dilate_angle_group_property():
    t = np.linspace(-1.4, 1.4, 301)
    assert np.allclose(dilate_angle(dilate_angle(t, 2.0), 3.0), dilate_angle(t, 6.0), atol=1e-12)


def test_multiplier_known_value():
    # lambda(2, pi/4) = 2/(4 - 3/2) = 0.8
    assert multiplier(2.0, np.pi / 4) == pytest.approx(0.8, abs=1e-15)
    assert multiplier(1.0, 0.3) == pytest.approx(1.0, abs=1e-15)


def test_multiplier_is_dilation_derivative():
    # central differences of the dilated angle against the closed form
    t = np.linspace(-1.3, 1.3, 401)
    h = 1e-5
    for a in (0.3, 2.0, 7.0):
        fd = (dilate_angle(t + h, a) - dilate_angle(t - h, a)) / (2 * h)
        assert np.max(np.abs(fd - multiplier(a, t))) < 1e-6


def test_multiplier_cocycle():
    t = np.linspace(-1.5, 1.5, 501)
    for a, ap in ((2.0, 3.0), (0.4, 5.0), (0.2, 0.7)):
        lhs = multiplier(a * ap, t)
        rhs = multiplier(a, dilate_angle(t, ap)) * multiplier(ap, t)
        assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_multiplier_reciprocity():
    t = np.linspace(-1.5, 1.5, 501)
    for a in (0.25, 2.0, 9.0):
        prod = multiplier(1.0 / a, dilate_angle(t, a)) * multiplier(a, t)
        assert np.max(np.abs(prod - 1.0)) < 1e-12


def test_rep_action_unitary():
    gamma = gauss_bump()
    base = gamma.norm()
    rng = np.random.default_rng(21)
    for _ in range(100):
        a = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        vt = float(rng.uniform(-np.pi / 2, np.pi / 2))
        acted = rep_action(gamma, a, vt)
        assert abs(acted.norm() / base - 1.0) < 1e-6


def test_rep_action_splits():
    # U(a, vt) = U(1, vt) U(a, 0): rotate after dilating
    gamma = gauss_bump()
    a, vt = 2.7, 0.9
    joint = rep_action(gamma, a, vt)
    split = rep_action(rep_action(gamma, a, 0.0), 1.0, vt)
    assert np.max(np.abs(joint.values - split.values)) < 1e-12


def test_rep_action_group_law_on_dilations():
    gamma = gauss_bump()
    two_step = rep_action(rep_action(gamma, 2.0, 0.0), 3.0, 0.0)
    one_step = rep_action(gamma, 6.0, 0.0)
    assert np.max(np.abs(two_step.values - one_step.values)) < 1e-12


def test_rep_action_rotation_is_shift():
    gamma = gauss_bump()
    vt = GRID.spacing * 5  # exact grid shift
    acted = rep_action(gamma, 1.0, vt)
    assert np.max(np.abs(acted.values - np.roll(gamma.values, 5))) < 1e-12


def test_rep_action_preserves_realness_at_s0():
    # alpha = 1/2 keeps real signals real
    gamma = gauss_bump()
    acted = rep_action(gamma, 3.0, 0.4)
    assert np.max(np.abs(acted.values.imag)) < 1e-14


def test_trig_interpolation_exact_on_modes():
    t = GRID.nodes
    vals = np.exp(2j * 7 * t) + 0.3 * np.exp(-2j * 12 * t)
    probe = np.array([-1.234, -0.1, 0.555, 1.5])
    want = np.exp(2j * 7 * probe) + 0.3 * np.exp(-2j * 12 * probe)
    got = trig_interpolate(GRID, vals, probe)
    assert np.max(np.abs(got - want)) < 1e-12


def test_signal_call_without_evaluator_interpolates():
    t = GRID.nodes
    sig = CircleSignal(GRID, np.cos(2 * t))
    probe = np.array([0.1, 0.2, -1.0])
    assert np.max(np.abs(sig(probe) - np.cos(2 * probe))) < 1e-12


def test_inner_product_orthonormal_modes():
    t = GRID.nodes
    e1 = CircleSignal(GRID, np.exp(2j * t) / np.sqrt(np.pi))
    e2 = CircleSignal(GRID, np.exp(4j * t) / np.sqrt(np.pi))
    assert e1.inner(e1) == pytest.approx(1.0, abs=1e-12)
    assert abs(e1.inner(e2)) < 1e-12


def test_generator_commutators():
    """The frozen structure constants of the realized algebra:

    [gen_a, gen_b]      = i gen_b
    [gen_a, gen_theta]  = -i (2 gen_b + gen_theta)
    [gen_b, gen_theta]  = 2 i gen_a
    """
    f = band_limited(31)

    def comm(x, y, g):
        return generator(x, generator(y, g)).values - generator(y, generator(x, g)).values

    ab = comm("a", "b", f)
    assert np.max(np.abs(ab - 1j * generator("b", f).values)) < 1e-8

    at = comm("a", "theta", f)
    want = -1j * (2.0 * generator("b", f).values + generator("theta", f).values)
    assert np.max(np.abs(at - want)) < 1e-8

    bt = comm("b", "theta", f)
    assert np.max(np.abs(bt - 2j * generator("a", f).values)) < 1e-8


def test_casimir_scalar_on_modes():
    # the invariant multiplies every mode by alpha(1 - alpha) = 1/4 at s = 0
    t = GRID.nodes
    ratios = []
    for n in range(-12, 13):
        f = CircleSignal(GRID, np.exp(2j * n * t))
        out = casimir_apply(f)
        ratios.append(np.mean(out.values / f.values))
    ratios = np.array(ratios)
    assert np.max(np.abs(ratios - 0.25)) < 1e-8
    assert np.max(np.abs(ratios - ratios.mean())) < 1e-8


def test_casimir_scalar_off_principal_axis():
    # at s != 0 the scalar moves to alpha(1-alpha) = 1/4 + s^2
    p = RepParams(s=0.7)
    t = GRID.nodes
    f = CircleSignal(GRID, np.exp(2j * 3 * t))
    out = casimir_apply(f, p)
    ratio = np.mean(out.values / f.values)
    assert ratio == pytest.approx(0.25 + 0.49, abs=1e-8)


def test_generator_rejects_aliased_input():
    n = 64
    grid = CircleGrid(n)
    t = grid.nodes
    f = CircleSignal(grid, np.exp(2j * (n // 4 + 3) * t))  # above the safe band
    with pytest.raises(AliasingError):
        generator("theta", f)


def test_generator_theta_is_rotation_derivative():
    gamma = gauss_bump()
    h = 1e-6
    # d/dvartheta U(1, vartheta) at 0 equals -d/dtheta, i.e. i * gen_theta
    plus = rep_action(gamma, 1.0, h).values
    minus = rep_action(gamma, 1.0, -h).values
    fd = (plus - minus) / (2 * h)
    spectral = generator("theta", gamma).values
    assert np.max(np.abs(fd - 1j * spectral)) < 1e-4


def test_generator_a_is_dilation_derivative():
    gamma = gauss_bump()
    h = 1e-6
    # d/dt U(e^t, 0) at t = 0, against the closed-form generator
    plus = rep_action(gamma, np.exp(h), 0.0).values
    minus = rep_action(gamma, np.exp(-h), 0.0).values
    fd = (plus - minus) / (2 * h)
    spectral = generator("a", gamma).values
    assert np.max(np.abs(fd - 1j * spectral)) < 1e-4


def test_grid_validation():
    with pytest.raises(ValueError):
        CircleGrid(5)
    with pytest.raises(ValueError):
        CircleGrid(2)


def test_signal_validation():
    with pytest.raises(ValueError):
        CircleSignal(GRID, np.zeros(100))
    bad = np.zeros(GRID.n_samples)
    bad[3] = np.nan
    with pytest.raises(ValueError):
        CircleSignal(GRID, bad)
