"""Acceptance gate: every shipped guarantee at its stated tolerance.

Run with `pytest tests/test_acceptance.py -v -s`; each criterion prints
one PASS line when its assertions hold.
"""

import random
from dataclasses import replace

from isaclink import (
    CouplingState,
    DetectionSpec,
    comm_snr,
    comm_snr_at_ratio,
    db_to_lin,
    delta_beta,
    delta_db,
    lin_to_db,
    loss_factors,
    loss_pair_db,
    loss_pair_linear,
    processing_gain,
    radar_snr,
    reproduce,
    required_snr_albersheim,
    required_snr_exact,
    sop_radar_snr,
    spectral_efficiency_from_snr,
)
from isaclink.rangeplan import TargetSnrs
from isaclink.report import crossing_spectral_efficiency, preset_system
from helpers import make_params, sop_db_sum_oracle

FULL = CouplingState(beta=1.0)


def _report(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def test_criterion_1_table3_radar_ranges_within_1pct():
    report = reproduce("table3")
    assert len(report.rows) == 6
    for row in report.rows:
        assert row.status == "PASS", f"{row.quantity}: {row.computed} vs {row.reference}"
        assert row.error <= 0.01
    _report("1 table3 radar ranges within 1%")


def test_criterion_2_table4_ratio_and_user_distance_within_10pct():
    report = reproduce("table4")
    assert len(report.rows) == 6
    for row in report.rows:
        assert row.status == "PASS", f"{row.quantity}: {row.computed} vs {row.reference}"
        assert row.error <= 0.10
    _report("2 table4 delta and d_c within 10%")


def test_criterion_3_unit_ratio_crossings():
    expected = {
        ("sub6", 30.0): 12.9,
        ("sub6", 20.0): 11.2,
        ("mmwave", 30.0): 8.0,
        ("subthz", 30.0): 6.0,
    }
    for (band, p_dbm), ref in expected.items():
        system = preset_system(band, p_dbm=p_dbm)
        crossing = crossing_spectral_efficiency(system, FULL)
        assert abs(crossing - ref) <= 0.3, f"{band}@{p_dbm}: {crossing} vs {ref}"
    _report("3 ratio=1 crossings at 12.9/11.2/8/6 bits/s/Hz (tol 0.3)")


def test_criterion_4_power_rate_rule():
    radar_target_db = 10.8
    qualifying = 0
    for band, deltas in (("sub6", (1.0, 2.0, 3.0)), ("mmwave", (1.0,)), ("subthz", (1.0,))):
        hi = preset_system(band, p_dbm=30.0)
        lo = preset_system(band, p_dbm=20.0)
        for delta in deltas:
            comm_hi = comm_snr_at_ratio(hi, FULL, delta, radar_target_db)
            comm_lo = comm_snr_at_ratio(lo, FULL, delta, radar_target_db)
            assert abs((comm_hi - comm_lo) - 5.0) <= 1e-9
            rate_hi = spectral_efficiency_from_snr(db_to_lin(comm_hi))
            rate_lo = spectral_efficiency_from_snr(db_to_lin(comm_lo))
            if rate_lo >= 6.0:
                qualifying += 1
                assert abs((rate_hi - rate_lo) - 1.67) <= 0.05
    assert qualifying >= 4  # the rule must actually be exercised
    _report("4 power step: comm target moves 5.000 dB, rate ~1.67 bits/s/Hz")


def test_criterion_5_closed_loop_operating_point_identity():
    rng = random.Random(987654321)
    worst_direct = 0.0
    worst_oracle = 0.0
    for _ in range(1000):
        params = make_params(rng)
        coupling = CouplingState(beta=rng.uniform(0.1, 1.0), alpha=rng.uniform(0.0, 1.0))
        d_c = 10.0 ** rng.uniform(1.0, 5.0)
        delta = 10.0 ** rng.uniform(-1.0, 2.0)
        comm_db = lin_to_db(comm_snr(params, coupling.loss_comm, d_c))
        via_line = sop_radar_snr(params, coupling, comm_db, delta)
        direct = lin_to_db(radar_snr(params, coupling.loss_radar, d_c / delta))
        oracle = sop_db_sum_oracle(params, coupling, float(comm_db), delta)
        worst_direct = max(worst_direct, abs(via_line - direct))
        worst_oracle = max(worst_oracle, abs(via_line - oracle))
    assert worst_direct <= 1e-9
    assert worst_oracle <= 1e-9  # single-power term sum agrees
    _report(
        f"5 closed-loop identity over 1000 configs "
        f"(worst {worst_direct:.2e} dB direct, {worst_oracle:.2e} dB term sum)"
    )


def test_criterion_6_coefficient_vector_and_slope():
    params = preset_system("sub6")
    step_db = 1.0
    factor = 10.0 ** (step_db / 10.0)
    base = sop_radar_snr(params, FULL, 12.0, 2.0)

    def coeff(**changed) -> float:
        return (sop_radar_snr(replace(params, **changed), FULL, 12.0, 2.0) - base) / step_db

    assert abs(coeff(b_hz=params.b_hz * factor) - 1.0) <= 1e-6
    assert abs(coeff(f_hz=params.f_hz * factor) - 2.0) <= 1e-6
    assert abs(coeff(g_p=params.g_p * factor) - 1.0) <= 1e-6
    assert abs(coeff(sigma_rcs_m2=params.sigma_rcs_m2 * factor) - 1.0) <= 1e-6
    assert abs(coeff(p_watts=params.p_watts * factor) - (-1.0)) <= 1e-6
    assert abs(coeff(g_ue=params.g_ue * factor) - (-2.0)) <= 1e-6
    assert abs(coeff(g_bs=params.g_bs * factor) - 0.0) <= 1e-6
    noise = coeff(n_ue_w_hz=params.n_ue_w_hz * factor, n_bs_w_hz=params.n_bs_w_hz * factor)
    assert abs(noise - 1.0) <= 1e-6
    delta_coeff = (sop_radar_snr(params, FULL, 12.0, 2.0 * factor) - base) / step_db
    assert abs(delta_coeff - 4.0) <= 1e-6

    # quarter-weighted counterparts on the ratio relation
    targets = TargetSnrs(8.0, 10.8)
    ratio_base = delta_db(params, FULL, targets)

    def ratio_coeff(**changed) -> float:
        return (delta_db(replace(params, **changed), FULL, targets) - ratio_base) / step_db

    assert abs(ratio_coeff(b_hz=params.b_hz * factor) - (-0.25)) <= 1e-6
    assert abs(ratio_coeff(f_hz=params.f_hz * factor) - (-0.5)) <= 1e-6
    assert abs(ratio_coeff(g_p=params.g_p * factor) - (-0.25)) <= 1e-6
    assert abs(ratio_coeff(sigma_rcs_m2=params.sigma_rcs_m2 * factor) - (-0.25)) <= 1e-6
    assert abs(ratio_coeff(p_watts=params.p_watts * factor) - 0.25) <= 1e-6
    assert abs(ratio_coeff(g_ue=params.g_ue * factor) - 0.5) <= 1e-6
    assert abs(ratio_coeff(g_bs=params.g_bs * factor)) <= 1e-6
    target_coeff = (delta_db(params, FULL, TargetSnrs(8.0, 10.8 + step_db)) - ratio_base) / step_db
    assert abs(target_coeff - 0.25) <= 1e-6
    comm_coeff = (delta_db(params, FULL, TargetSnrs(8.0 + step_db, 10.8)) - ratio_base) / step_db
    assert abs(comm_coeff - (-0.5)) <= 1e-6

    for x in (-20.0, 0.0, 10.0, 35.0):
        for step in (1.0, 7.5, -12.0):
            shift = sop_radar_snr(params, FULL, x + step, 2.0) - sop_radar_snr(params, FULL, x, 2.0)
            assert abs(shift - 2.0 * step) <= 1e-9
    _report("6 coefficient vector (1,2,1,1,4,-1,-2,0, N:+1) and slope-2 law")


def test_criterion_7_coupling_algebra_grid():
    grid = [i / 100.0 for i in range(101)]
    worst_sum = 0.0
    worst_pair = 0.0
    worst_db = 0.0
    for beta in grid:
        for alpha in grid:
            l_c, l_r = loss_factors(beta, alpha)
            worst_sum = max(worst_sum, abs(l_c + l_r - (1.0 + beta)))
            worst_pair = max(worst_pair, abs(loss_pair_linear(beta, l_c) - l_r))
            if l_c > 0.0 and l_r > 0.0:
                db_err = abs(loss_pair_db(beta, lin_to_db(l_c)) - lin_to_db(l_r))
                worst_db = max(worst_db, db_err)
    assert worst_sum <= 1e-12
    assert worst_pair <= 1e-12
    assert worst_db <= 1e-9
    for alpha in grid:
        assert delta_beta(1.0, alpha) == 0.0
    _report(
        f"7 coupling algebra on 101x101 grid "
        f"(sum {worst_sum:.1e}, pair {worst_pair:.1e}, dB {worst_db:.1e})"
    )


def test_criterion_8_detection_requirement():
    albersheim = required_snr_albersheim(DetectionSpec(0.9, 1e-3, 1))
    exact = required_snr_exact(0.9, 1e-3)
    assert abs(albersheim - 10.8) <= 0.3
    assert abs(albersheim - exact) <= 0.4
    gain = processing_gain(1024)
    assert abs(gain - 30.10) <= 0.01
    _report(
        f"8 detection: albersheim {albersheim:.3f} dB, exact {exact:.3f} dB, "
        f"gain {gain:.2f} dB"
    )


def test_criterion_9_reference_operating_point_partial_check():
    system = preset_system("config4")  # 30 dBm, unit processing gain
    radar_db = lin_to_db(radar_snr(system, 1.0, 500.0))
    assert abs(radar_db - (-17.4)) <= 0.2
    comm_db = lin_to_db(comm_snr(system, 1.0, 500.0))
    report = reproduce("fig4")
    status = {row.quantity: row.status for row in report.rows}
    assert status["config4_comm_snr_500m_db"] == "SKIP"
    assert report.passed
    _report(
        f"9 reference point: radar {radar_db:.2f} dB (ref -17.4+-0.2); "
        f"comm {comm_db:.2f} dB reported, excluded as documented"
    )
