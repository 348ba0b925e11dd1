import numpy as np
import pytest

import sixstate_qkd as sq


def test_thresholds():
    assert sq.threshold(sq.Protocol.SIXSTATE_THRESHOLD) == pytest.approx(0.126112, abs=5e-6)
    assert sq.threshold(sq.Protocol.SIXSTATE_QUBIT) == pytest.approx(0.12619, abs=5e-5)
    assert sq.threshold(sq.Protocol.BB84) == pytest.approx(0.110028, abs=1e-4)


def test_envelope():
    env = sq.tangent_envelope()
    assert 0.1150 <= env.e_d <= 0.1165
    assert env.slope == pytest.approx(2.82, abs=0.01)
    assert env.intercept == pytest.approx(0.0976, abs=0.001)
    assert env.v3 == pytest.approx(sq.h3(0.25, 1 / 3), abs=1e-14)
    assert sq.hzx_upper(0.05, env) == pytest.approx(sq.h12(0.05), abs=1e-14)


def test_operators_roundtrip():
    split = sq.symmetric_split(3)
    assert np.trace(split.pi_h).real == pytest.approx(4.0)
    m_plus = sq.threshold_povm(sq.BasisAxis.Z, sq.BitValue.PLUS, 3)
    m_minus = sq.threshold_povm(sq.BasisAxis.Z, sq.BitValue.MINUS, 3)
    assert np.max(np.abs(m_plus + m_minus - np.eye(8))) < 1e-12

    vals = sq.hermitian_eigenvalues(sq.avg_error_povm(3))
    assert vals[0] == pytest.approx(0.25, abs=1e-9)


def test_twirl_and_rates():
    rng = np.random.default_rng(0)
    g = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    w = sq.twirl(rho)
    r = sq.decompose(w)
    assert 3 * r.r0 + 3 * r.r1 + 2 * r.r2 + 8 * r.r3 == pytest.approx(1.0, abs=1e-10)

    squash = sq.construct_squash_y()
    assert squash.choi_min_eig >= -1e-9
    pt = sq.error_rates(sq.RCoefficients(0.0, 1 / 3, 0.0), squash)
    assert (pt.e_b, pt.e_y) == (pytest.approx(0.25), pytest.approx(1 / 3))


def test_min_error_table():
    rows = sq.min_error_table(4)
    assert rows[0].min_e_b == pytest.approx(0.0, abs=1e-12)
    assert rows[2].min_e_b == pytest.approx(0.25, abs=1e-9)
    assert rows[3].min_e_b > 0.25677


def test_simulate_clicks_deterministic():
    state = np.eye(8) / 8.0
    a = sq.simulate_clicks(state, sq.BasisAxis.X, 3, 2000, 7)
    b = sq.simulate_clicks(state, sq.BasisAxis.X, 3, 2000, 7)
    assert a.plus == b.plus
    assert abs(a.freq_plus - a.prob_plus) < 4 * (0.25 / 2000) ** 0.5


def test_errors_surface_as_exceptions():
    with pytest.raises(sq.SixStateError):
        sq.min_bit_error(0)
    with pytest.raises(sq.SixStateError):
        sq.binary_entropy(1.5)
