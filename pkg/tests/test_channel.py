"""Channel primitives: the rate function, capacities, decode predicate."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sicrate.channel import (
    ChannelGains,
    SymmetricChannel,
    can_decode,
    capacity_sic,
    capacity_with_interference,
    phi,
)

# mpmath references (50+ digits, rounded to nearest double)
PHI_4 = 2.321928094887362
WS1_EXAMPLE = 1.0374747054186628

EXAMPLE_GAINS = ChannelGains(g11=1.0, g12=0.3, g21=0.7, g22=1.0,
                             gamma1_max=4.0, gamma2_max=4.0)


class TestPhi:
    def test_zero(self):
        assert phi(0.0) == 0.0

    def test_one(self):
        assert phi(1.0) == 1.0

    def test_four(self):
        assert phi(4.0) == pytest.approx(PHI_4, abs=1e-5)

    def test_tiny_argument_accuracy(self):
        # log1p keeps full precision where log(1 + x) would lose it
        assert phi(1e-12) == pytest.approx(1.4426950408889632e-12, rel=1e-12)

    @pytest.mark.parametrize("bad", [-1e-9, -1.0, math.inf, -math.inf, math.nan])
    def test_rejects_bad_input(self, bad):
        with pytest.raises(ValueError):
            phi(bad)

    @given(st.floats(min_value=0.0, max_value=1e9))
    def test_strictly_increasing(self, x):
        # relative separation keeps the output difference representable
        y = x * (1.0 + 1e-6) + 1e-6
        assert phi(x) < phi(y)


class TestCapacities:
    def test_with_interference_example(self):
        c = capacity_with_interference(EXAMPLE_GAINS, tx=1, rx=1, gamma1=4.0, gamma2=4.0)
        assert c == pytest.approx(WS1_EXAMPLE, abs=1e-4)

    def test_zero_power_means_zero_rate(self):
        assert capacity_with_interference(EXAMPLE_GAINS, 1, 1, 0.0, 4.0) == 0.0
        assert capacity_sic(EXAMPLE_GAINS, 2, 0.0) == 0.0

    def test_silent_interferer_matches_sic(self):
        with_i = capacity_with_interference(EXAMPLE_GAINS, 1, 1, 3.0, 0.0)
        assert with_i == capacity_sic(EXAMPLE_GAINS, 1, 3.0)

    def test_sic_example(self):
        assert capacity_sic(EXAMPLE_GAINS, 1, 4.0) == pytest.approx(PHI_4, abs=1e-5)

    @pytest.mark.parametrize("g1,g2", [(-0.1, 1.0), (5.0, 1.0), (1.0, 4.5), (math.nan, 1.0)])
    def test_out_of_range_snr_rejected(self, g1, g2):
        with pytest.raises(ValueError):
            capacity_with_interference(EXAMPLE_GAINS, 1, 1, g1, g2)
        with pytest.raises(ValueError):
            capacity_sic(EXAMPLE_GAINS, 1, -0.5)

    @given(
        st.floats(min_value=0.0, max_value=4.0),
        st.floats(min_value=0.0, max_value=4.0),
    )
    def test_sic_dominates_interference_capacity(self, g1, g2):
        assert capacity_sic(EXAMPLE_GAINS, 1, g1) >= capacity_with_interference(
            EXAMPLE_GAINS, 1, 1, g1, g2
        )

    @given(
        st.floats(min_value=0.0, max_value=3.9),
        st.floats(min_value=0.001, max_value=0.1),
        st.floats(min_value=0.0, max_value=4.0),
    )
    def test_monotone_in_own_power(self, g1, step, g2):
        lo = capacity_with_interference(EXAMPLE_GAINS, 1, 1, g1, g2)
        hi = capacity_with_interference(EXAMPLE_GAINS, 1, 1, g1 + step, g2)
        assert hi > lo

    @given(
        st.floats(min_value=0.1, max_value=4.0),
        st.floats(min_value=0.0, max_value=3.9),
        st.floats(min_value=0.001, max_value=0.1),
    )
    def test_monotone_decreasing_in_interferer_power(self, g1, g2, step):
        lo_interf = capacity_with_interference(EXAMPLE_GAINS, 1, 1, g1, g2)
        hi_interf = capacity_with_interference(EXAMPLE_GAINS, 1, 1, g1, g2 + step)
        assert hi_interf < lo_interf


class TestCanDecode:
    def test_at_threshold_from_below(self):
        assert can_decode(0.64, 0.6415) is True

    def test_boundary_equality_decodes(self):
        assert can_decode(0.0, 0.0) is True
        assert can_decode(1.5, 1.5) is True

    def test_above_capacity_fails(self):
        assert can_decode(2.4, PHI_4) is False

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            can_decode(-0.1, 1.0)


class TestChannelGains:
    def test_dominant_predicate(self):
        assert EXAMPLE_GAINS.dominant_intended_links
        flipped = ChannelGains(1.0, 1.5, 0.7, 1.0, 4.0, 4.0)
        assert not flipped.dominant_intended_links

    @pytest.mark.parametrize("field,value", [
        ("g11", 0.0), ("g12", -1.0), ("g22", math.inf),
        ("gamma1_max", -0.1), ("gamma2_max", math.nan),
    ])
    def test_validation(self, field, value):
        kw = dict(g11=1.0, g12=0.3, g21=0.7, g22=1.0, gamma1_max=4.0, gamma2_max=4.0)
        kw[field] = value
        with pytest.raises(ValueError):
            ChannelGains(**kw)

    def test_zero_peak_snr_allowed(self):
        g = ChannelGains(1.0, 0.3, 0.7, 1.0, 0.0, 0.0)
        assert g.peak_snr(1) == 0.0

    def test_swap_is_involution(self):
        assert EXAMPLE_GAINS.swapped().swapped() == EXAMPLE_GAINS

    def test_gain_lookup(self):
        assert EXAMPLE_GAINS.gain(1, 2) == 0.3
        assert EXAMPLE_GAINS.gain(2, 1) == 0.7


class TestSymmetricChannel:
    @pytest.mark.parametrize("eps,mu,gamma", [
        (0.0, 0.5, 4.0), (1.0, 0.5, 4.0), (0.5, 1.2, 4.0), (0.5, 0.5, 0.0),
        (0.5, 0.5, -1.0), (math.nan, 0.5, 4.0),
    ])
    def test_validation(self, eps, mu, gamma):
        with pytest.raises(ValueError):
            SymmetricChannel(eps, mu, gamma)

    def test_conversion(self):
        sym = SymmetricChannel(0.3, 0.7, 4.0)
        g = sym.to_gains()
        assert (g.g11, g.g22) == (1.0, 1.0)
        assert g.g21 == pytest.approx(0.7, abs=1e-15)
        assert g.g12 == pytest.approx(0.3, abs=1e-15)
        assert g.gamma1_max == g.gamma2_max == 4.0
        assert g.dominant_intended_links

    @given(
        st.floats(min_value=1e-6, max_value=1.0 - 1e-6),
        st.floats(min_value=1e-6, max_value=1.0 - 1e-6),
        st.floats(min_value=1e-3, max_value=1e6),
    )
    def test_margin_roundtrip(self, eps, mu, gamma):
        g = SymmetricChannel(eps, mu, gamma).to_gains()
        assert abs((1.0 - g.g21) - eps) < 1e-15
        assert abs((1.0 - g.g12) - mu) < 1e-15
        assert g.dominant_intended_links
