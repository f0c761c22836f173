"""Verification helpers: report arithmetic, RWA distance, generator oracle.

The tracking report is checked against hand-computed sup/rms values on a
fabricated four-sample result. The generator oracle is compared with the
closed-form rate expressions over seeded random rate triples; both sides are
exact arithmetic, so the tolerance is machine-level.
"""

import numpy as np
import pytest

from blochpulse import (
    ControlField,
    Rates,
    SimResult,
    ValidationError,
    density_from_bloch,
    equilibrium_inversion,
    generator_oracle,
    inversion_decay_rate,
    rwa_deviation,
    tracking_error,
    transverse_rate,
)


def _result_from_bloch(vectors, picture="test"):
    t = np.arange(float(len(vectors)))
    states = np.stack([density_from_bloch(r) for r in vectors])
    return SimResult(picture=picture, t=t, states=states)


def test_tracking_error_frozen_arithmetic():
    res = _result_from_bloch([(0.0, 0.0, 0.5), (0.1, 0.0, 0.5),
                              (0.0, 0.0, 0.5), (0.0, 0.0, 0.5)])
    zeros = np.zeros(4)
    report = tracking_error(res, zeros, zeros, np.full(4, 0.5))
    assert report.sup_u == pytest.approx(0.1, abs=1e-15)
    assert report.rms_u == pytest.approx(0.05, abs=1e-15)  # sqrt(0.01 / 4)
    assert report.sup_v == 0.0
    assert report.sup_w == 0.0
    assert report.sup == report.sup_u
    assert report.t_worst == 1.0
    assert report.fidelity_final == pytest.approx(1.0, abs=1e-12)
    assert "[test]" in report.summary()


def test_tracking_error_antipodal_endpoint():
    res = _result_from_bloch([(0.0, 0.0, 1.0), (0.0, 0.0, 1.0)])
    zeros = np.zeros(2)
    report = tracking_error(res, zeros, zeros, np.full(2, -1.0))
    assert report.sup_w == pytest.approx(2.0, abs=1e-15)
    assert report.fidelity_final == pytest.approx(0.0, abs=1e-12)


def test_tracking_error_perfect_match():
    vectors = [(0.3, 0.2, -0.4), (0.1, -0.5, 0.2)]
    res = _result_from_bloch(vectors)
    arr = np.array(vectors)
    report = tracking_error(res, arr[:, 0], arr[:, 1], arr[:, 2])
    assert report.sup < 1e-15
    assert report.fidelity_final == pytest.approx(1.0, abs=1e-12)


def test_tracking_error_rejects_mismatched_shapes():
    res = _result_from_bloch([(0.0, 0.0, 1.0), (0.0, 0.0, 1.0)])
    with pytest.raises(ValidationError):
        tracking_error(res, np.zeros(3), np.zeros(2), np.zeros(2))


def _carrier_field():
    t = np.linspace(0.0, 20.0, 101)
    return ControlField(t=t, omega=np.full_like(t, 0.4), delta=np.zeros_like(t),
                        phi=1.0 * t, omega_r=np.full_like(t, 0.2),
                        omega0=np.ones_like(t))


def test_rwa_deviation_shrinks_with_drive():
    field = _carrier_field()
    rho0 = density_from_bloch([0.0, 0.0, 1.0])
    grid = field.t
    strong = rwa_deviation(field, rho0, grid, scale=1.0)
    weak = rwa_deviation(field, rho0, grid, scale=0.05)
    assert weak < strong
    assert strong > 1e-3


def test_rwa_deviation_rejects_bad_scale():
    field = _carrier_field()
    rho0 = density_from_bloch([0.0, 0.0, 1.0])
    with pytest.raises(ValidationError):
        rwa_deviation(field, rho0, field.t, scale=0.0)


def test_generator_oracle_frozen_case():
    coeff = generator_oracle(Rates(dephasing=2e-3, thermal=5e-4, occupancy=1.5))
    assert coeff.transverse_decay == pytest.approx(4e-3, abs=1e-15)
    assert coeff.inversion_decay == pytest.approx(4e-3, abs=1e-15)
    assert coeff.inversion_pump == pytest.approx(-1e-3, abs=1e-15)
    assert coeff.equilibrium_inversion == pytest.approx(-0.25, abs=1e-12)


def test_generator_oracle_matches_closed_forms():
    rng = np.random.default_rng(43)
    for _ in range(100):
        rates = Rates(dephasing=rng.uniform(0, 0.01), thermal=rng.uniform(1e-5, 0.01),
                      occupancy=rng.uniform(0, 3.0))
        coeff = generator_oracle(rates)
        assert coeff.transverse_decay == pytest.approx(transverse_rate(rates), abs=1e-12)
        assert coeff.inversion_decay == pytest.approx(inversion_decay_rate(rates), abs=1e-12)
        assert coeff.inversion_pump == pytest.approx(-2.0 * rates.thermal, abs=1e-12)
        assert coeff.equilibrium_inversion == pytest.approx(
            equilibrium_inversion(rates), abs=1e-12)
        assert coeff.matrix[0, 0] == pytest.approx(coeff.matrix[1, 1], abs=1e-15)
        off = coeff.matrix - np.diag(np.diag(coeff.matrix))
        assert np.max(np.abs(off)) < 1e-12
        assert np.max(np.abs(coeff.offset[:2])) < 1e-12


def test_generator_oracle_dephasing_only():
    coeff = generator_oracle(Rates(dephasing=3e-3))
    assert coeff.inversion_decay == 0.0
    assert np.isnan(coeff.equilibrium_inversion)
    assert coeff.transverse_decay == pytest.approx(3e-3, abs=1e-15)
