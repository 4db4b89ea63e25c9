import math

import pytest

import dirac1d as d1


def test_version_string():
    assert d1.__version__.startswith("dirac1d ")


def test_amplitudes_unitary_and_conjugate():
    e = d1.electrostatic_amplitudes(1.0, 1.2, 0.8, d1.Species.Electron)
    p = d1.electrostatic_amplitudes(1.0, 1.2, 0.8, d1.Species.Positron)
    assert e.unitarity_residual() < 1e-14
    assert abs(p.sigma - e.sigma.conjugate()) < 1e-14
    assert abs(p.rho - e.rho.conjugate()) < 1e-14


def test_bound_state_quadrants_and_density():
    bs = d1.electrostatic_bound_state(1.0, 2.0 * math.pi / 3.0)
    assert bs is not None
    assert bs.species == d1.Species.Electron
    assert abs(bs.kappa_b - math.sqrt(3.0) / 2.0) < 1e-12
    assert abs(bs.omega_b - 0.5) < 1e-12
    assert abs(bs.profile.total_probability() - 1.0) < 1e-13

    rho = d1.bound_state_density(bs, 2.0)
    assert rho.sign == 1
    assert abs(rho(0.0) - 2.0 * bs.kappa_b) < 1e-13

    assert d1.electrostatic_bound_state(1.0, 0.0) is None
    assert d1.mass_spike_bound_state(1.0, 1.0).species == d1.Species.Positron


def test_transfer_matches_closed_form():
    arr = d1.ImpurityArray([(0.0, 1.2, 0.0)])
    ts = d1.s_matrix(arr, d1.Species.Electron, 1.0, 0.8)
    ana = d1.electrostatic_amplitudes(1.0, 1.2, 0.8, d1.Species.Electron)
    assert abs(ts.sigma_r - ana.sigma) < 1e-13
    assert abs(ts.rho_r - ana.rho) < 1e-13

    states = d1.find_bound_states(arr, d1.Species.Positron, 1.0)
    bs = d1.electrostatic_bound_state(1.0, 1.2)
    assert len(states) == 1
    assert abs(states[0].kappa_b - bs.kappa_b) < 1e-10
    assert d1.matching_residual(states[0], arr) < 1e-9


def test_two_site_array_is_unitary():
    arr = d1.ImpurityArray([(-0.6, 0.9, 0.2), (0.4, -1.1, 0.5)])
    assert len(arr) == 2
    assert arr.positions() == [-0.6, 0.4]
    ts = d1.s_matrix(arr, d1.Species.Positron, 1.0, 1.7)
    assert ts.right().unitarity_residual() < 1e-12
    assert abs(ts.sigma_r - ts.sigma_l) < 1e-12


def test_phase_shift_closed_form():
    ps = d1.total_phase_shift(
        d1.electrostatic_amplitudes(1.0, math.pi / 4.0, 1.0, d1.Species.Electron))
    assert abs(ps.tan_two_delta - 2.0 * math.sqrt(2.0)) < 1e-13
    closed = d1.closed_form_tan_two_delta(
        1.0, math.pi / 4.0, d1.PointKind.Electrostatic, d1.Species.Electron, 1.0)
    assert abs(closed - 2.0 * math.sqrt(2.0)) < 1e-13


def test_job_tables_render():
    cfg = d1.JobConfig()
    cfg.add_impurity(0.0, 2.0 * math.pi / 3.0, 0.0)
    cfg.k_grid = d1.GridSpec(0.1, 4.0, 8)
    table = d1.run_scatter(cfg)
    assert table.columns[0] == "k"
    assert len(table.rows) == 16  # both incidence sides
    csv = d1.render(table, "csv")
    assert csv == d1.render(table, "csv")
    assert csv.splitlines()[0].startswith("# dirac1d")

    dens = d1.run_density(cfg)
    checks = dict(dens.checks)
    assert abs(checks["total_charge"] - 1.0) < 1e-6

    with pytest.raises(Exception):
        d1.render(table, "yaml")
