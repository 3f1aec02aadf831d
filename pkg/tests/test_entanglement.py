import math

import numpy as np
import pytest

from gatemp.entanglement import (
    example1_thresholds,
    is_entangled,
    log_negativity,
    max_temporal_negativity,
    partial_transpose,
    ppt_nu_minus,
    symplectic_min,
)
from gatemp.errors import BadVariance, NotASpatialState
from gatemp.states import SpaceTimeCM, assemble, beam_splitter_mix, two_mode_squeezed_thermal

I2 = np.eye(2)


class TestPartialTranspose:
    def test_vacuum_fixed(self):
        cm = assemble(I2, I2, np.zeros((2, 2)))
        np.testing.assert_array_equal(partial_transpose(cm), np.eye(4))

    def test_flips_momentum_column(self):
        cm = two_mode_squeezed_thermal(1.0, 0.3)
        pt = partial_transpose(cm)
        np.testing.assert_array_equal(pt[:2, :2], cm.V_A)
        np.testing.assert_array_equal(pt[:2, 2:], cm.C @ np.diag([1.0, -1.0]))

    def test_involution(self):
        cm = two_mode_squeezed_thermal(1.4, 0.6)
        once = partial_transpose(cm)
        again = partial_transpose(SpaceTimeCM(once[:2, :2], once[2:, 2:], once[:2, 2:]))
        np.testing.assert_array_equal(again, cm.matrix())


class TestSymplecticSpectrum:
    def test_vacuum(self):
        spec = symplectic_min(np.eye(4))
        assert spec.nu_minus == pytest.approx(1.0, abs=1e-12)
        assert spec.nu_plus == pytest.approx(1.0, abs=1e-12)

    def test_two_thermals(self):
        spec = symplectic_min(np.diag([2.0, 2.0, 3.0, 3.0]))
        assert spec.nu_minus == pytest.approx(2.0, abs=1e-12)
        assert spec.nu_plus == pytest.approx(3.0, abs=1e-12)

    def test_tmsv_pt_closed_form(self):
        # nu_minus of the transposed squeezed thermal CM is v e^{-2r}
        for v in (1.1, 1.5, 2.0):
            for r in (0.05, 0.3, 0.8):
                cm = two_mode_squeezed_thermal(v, r)
                assert ppt_nu_minus(cm) == pytest.approx(v * math.exp(-2 * r), rel=1e-9)


class TestEntanglement:
    def test_pure_tmsv_entangled(self):
        assert is_entangled(two_mode_squeezed_thermal(1.0, 0.3))

    def test_thermal_tmsv_below_threshold(self):
        # entangled iff r > ln(v)/2
        v = 1.5
        r_ent, _ = example1_thresholds(v)
        assert not is_entangled(two_mode_squeezed_thermal(v, r_ent - 0.01))
        assert is_entangled(two_mode_squeezed_thermal(v, r_ent + 0.01))

    def test_unsqueezed_product_not_entangled(self):
        assert not is_entangled(assemble(2 * I2, 2 * I2, np.zeros((2, 2))))

    def test_beam_splitter_of_thermals_not_entangled(self):
        cm = beam_splitter_mix(2.0 * I2, 1.0 * I2, 0.5)
        assert not is_entangled(cm)

    def test_aspatial_raises(self):
        with pytest.raises(NotASpatialState):
            is_entangled(assemble(I2, I2, I2))
        with pytest.raises(NotASpatialState):
            log_negativity(assemble(I2, I2, I2))

    def test_log_negativity_pure(self):
        # E = 2r for the pure two-mode squeezed vacuum
        for r in (0.2, 0.5, 0.9):
            cm = two_mode_squeezed_thermal(1.0, r)
            assert log_negativity(cm) == pytest.approx(2 * r, rel=1e-9)

    def test_log_negativity_clamped(self):
        assert log_negativity(assemble(2 * I2, 2 * I2, np.zeros((2, 2)))) == 0.0


class TestThresholds:
    def test_values_at_v15(self):
        r_ent, r_atemp = example1_thresholds(1.5)
        assert r_ent == pytest.approx(0.2027326, abs=1e-6)
        assert r_atemp == pytest.approx(0.2919680, abs=1e-6)

    def test_vacuum_limit(self):
        # at v=1 both thresholds collapse to 0: (1 + sqrt(9))/4 = 1
        r_ent, r_atemp = example1_thresholds(1.0)
        assert r_ent == 0.0
        assert r_atemp == pytest.approx(0.0, abs=1e-12)

    def test_entanglement_strictly_earlier(self):
        for v in np.linspace(1.01, 3.0, 50):
            r_ent, r_atemp = example1_thresholds(float(v))
            assert r_ent < r_atemp

    def test_bad_variance(self):
        with pytest.raises(BadVariance):
            example1_thresholds(0.8)


def test_max_temporal_negativity():
    e_max, r_star = max_temporal_negativity()
    assert e_max == pytest.approx(0.18822640, abs=1e-6)
    assert r_star == pytest.approx(0.22034340, abs=1e-6)
    # the optimizer sits at a stationary point of g
    def g(r):
        return 2 * r - math.log(math.cosh(4 * r) / math.cosh(2 * r))

    h = 1e-5
    assert abs(g(r_star + h) - g(r_star - h)) / (2 * h) < 1e-3
