"""Symmetric-channel closed forms, switching curve, and region classifier."""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sicrate.centralized import Strategy, solve_global
from sicrate.channel import SymmetricChannel
from sicrate.symmetric import (
    classify_region,
    diagonal_intersection_q,
    landmarks,
    sum_rate_no_sic,
    sum_rate_partial_I,
    sum_rate_partial_II,
    switching_curve_mu,
    symmetric_optimum,
)

EXAMPLE = SymmetricChannel(epsilon=0.3, mu=0.7, gamma=4.0)

# mpmath references for the example point
MV = 2.321928094887362
WS1 = 1.0374747054186628
WS2 = 1.494764691749578
OP1 = 0.3103401206121505
OP2 = 0.6415460290875237
TH = 0.84799690655495
R_NS = 2.5322393971682406
R_PI = 2.6322682154995127
R_PII = 2.963474123974886
Q4 = 0.6096117967977924

margins = st.floats(min_value=0.001, max_value=0.999)
snrs = st.floats(min_value=1e-3, max_value=1e6)


class TestLandmarks:
    def test_example_values(self):
        m = landmarks(EXAMPLE)
        assert m.mv == pytest.approx(MV, rel=1e-12)
        assert m.ws1 == pytest.approx(WS1, rel=1e-12)
        assert m.ws2 == pytest.approx(WS2, rel=1e-12)
        assert m.op1 == pytest.approx(OP1, rel=1e-12)
        assert m.op2 == pytest.approx(OP2, rel=1e-12)
        assert m.th == pytest.approx(TH, rel=1e-12)

    def test_printed_two_decimal_values(self):
        m = landmarks(EXAMPLE)
        assert m.ws2 == pytest.approx(1.49, abs=0.01)
        assert m.op2 == pytest.approx(0.64, abs=0.01)
        assert m.th == pytest.approx(0.85, abs=0.01)

    def test_equal_margins_collapse_pairs(self):
        m = landmarks(SymmetricChannel(0.4, 0.4, 3.0))
        assert m.ws1 == m.ws2
        assert m.op1 == m.op2

    def test_vanishing_margin_sends_op_to_ceiling(self):
        m = landmarks(SymmetricChannel(1e-12, 0.5, 4.0))
        assert m.op2 == pytest.approx(m.th, rel=1e-9)

    @given(margins, margins, snrs)
    def test_ordering(self, eps, mu, gamma):
        m = landmarks(SymmetricChannel(eps, mu, gamma))
        assert m.op1 <= m.th <= m.ws1 <= m.mv
        assert m.op2 <= m.th <= m.ws2 <= m.mv


class TestSumRates:
    def test_example_values(self):
        assert sum_rate_no_sic(EXAMPLE) == pytest.approx(R_NS, rel=1e-12)
        assert sum_rate_partial_I(EXAMPLE) == pytest.approx(R_PI, rel=1e-12)
        assert sum_rate_partial_II(EXAMPLE) == pytest.approx(R_PII, rel=1e-12)

    def test_equal_margins_make_no_sic_terms_equal(self):
        sym = SymmetricChannel(0.25, 0.25, 4.0)
        m = landmarks(sym)
        assert m.ws1 == m.ws2
        assert sum_rate_partial_I(sym) == sum_rate_partial_II(sym)

    def test_low_snr_limit(self):
        assert sum_rate_no_sic(SymmetricChannel(0.3, 0.7, 1e-9)) < 1e-8

    def test_full_margin_limit_is_single_link(self):
        sym = SymmetricChannel(0.3, 1.0 - 1e-12, 4.0)
        assert sum_rate_partial_I(sym) == pytest.approx(MV, rel=1e-9)

    @given(margins, margins, snrs)
    def test_partial_order_follows_margins(self, eps, mu, gamma):
        # margins one ulp apart evaluate to identical rates; require a
        # representable separation before asserting strictness
        assume(abs(mu - eps) > 1e-9)
        sym = SymmetricChannel(eps, mu, gamma)
        if mu > eps:
            assert sum_rate_partial_I(sym) < sum_rate_partial_II(sym)
        else:
            assert sum_rate_partial_I(sym) > sum_rate_partial_II(sym)

    @given(margins, margins, snrs)
    def test_swap_symmetry(self, eps, mu, gamma):
        sym = SymmetricChannel(eps, mu, gamma)
        swapped = sym.swapped()
        assert sum_rate_partial_I(sym) == sum_rate_partial_II(swapped)
        assert sum_rate_no_sic(sym) == pytest.approx(sum_rate_no_sic(swapped), rel=1e-14)


class TestSwitchingCurve:
    def test_example_point(self):
        # 1 - 0.3 / (0.7 * 4) = 25/28
        assert switching_curve_mu(0.3, 4.0) == pytest.approx(0.8928571428571429, abs=1e-12)

    def test_boundary_identity_example(self):
        mu = switching_curve_mu(0.3, 4.0)
        sym = SymmetricChannel(0.3, mu, 4.0)
        assert abs(sum_rate_no_sic(sym) - sum_rate_partial_II(sym)) < 1e-9

    @settings(max_examples=200)
    @given(
        st.floats(min_value=0.01, max_value=0.99),
        st.floats(min_value=0.05, max_value=100.0),
    )
    def test_boundary_identity_random(self, frac, gamma):
        # mu lands in (0, 1) only for eps below gamma/(1+gamma)
        eps = frac * gamma / (1.0 + gamma)
        mu = switching_curve_mu(eps, gamma)
        assert 0.0 < mu < 1.0
        sym = SymmetricChannel(eps, mu, gamma)
        assert abs(sum_rate_no_sic(sym) - sum_rate_partial_II(sym)) < 1e-9

    def test_out_of_range_epsilon_gives_nonpositive_mu(self):
        # beyond gamma/(1+gamma) no-cancellation wins the whole column
        assert switching_curve_mu(0.9, 4.0) <= 0.0
        sym_lo = SymmetricChannel(0.9, 1e-6, 4.0)
        assert sum_rate_no_sic(sym_lo) > sum_rate_partial_II(sym_lo)

    def test_validation(self):
        with pytest.raises(ValueError):
            switching_curve_mu(0.0, 4.0)
        with pytest.raises(ValueError):
            switching_curve_mu(0.5, 0.0)


class TestDiagonalIntersection:
    def test_gamma_four(self):
        assert diagonal_intersection_q(4.0) == pytest.approx(Q4, abs=1e-5)

    def test_fixed_point_of_curve(self):
        q = diagonal_intersection_q(4.0)
        assert switching_curve_mu(q, 4.0) == pytest.approx(q, abs=1e-9)

    def test_small_snr_limit(self):
        assert diagonal_intersection_q(1e-9) < 1e-4

    def test_large_snr_limit(self):
        assert diagonal_intersection_q(1e9) > 1.0 - 1e-4

    @given(st.floats(min_value=1e-3, max_value=1e6))
    def test_monotone_in_snr(self, gamma):
        assert diagonal_intersection_q(2.0 * gamma) > diagonal_intersection_q(gamma)

    @given(st.floats(min_value=1e-3, max_value=1e6))
    def test_boundary_identity_at_fixed_point(self, gamma):
        q = diagonal_intersection_q(gamma)
        sym = SymmetricChannel(q, q, gamma)
        assert abs(sum_rate_no_sic(sym) - sum_rate_partial_II(sym)) < 1e-9


class TestClassifyRegion:
    def test_example_point_is_r1_cancelling(self):
        assert classify_region(EXAMPLE) is Strategy.PARTIAL_SIC_R1

    def test_weak_interference_both_sides_is_no_sic(self):
        assert classify_region(SymmetricChannel(0.7, 0.7, 4.0)) is Strategy.NO_SIC

    def test_strong_interference_both_sides_is_partial(self):
        # both cross links near the direct ones: cancellation pays off
        assert classify_region(SymmetricChannel(0.2, 0.2, 4.0)) is Strategy.PARTIAL_SIC_R1

    def test_diagonal_tie_prefers_r1(self):
        sym = SymmetricChannel(0.3, 0.3, 4.0)
        assert sum_rate_partial_I(sym) == sum_rate_partial_II(sym)
        assert classify_region(sym) is Strategy.PARTIAL_SIC_R1

    def test_matches_optimum(self):
        for sym in (EXAMPLE, SymmetricChannel(0.8, 0.9, 4.0), SymmetricChannel(0.5, 0.1, 2.0)):
            best = symmetric_optimum(sym)
            values = {
                Strategy.NO_SIC: sum_rate_no_sic(sym),
                Strategy.PARTIAL_SIC_R1: sum_rate_partial_II(sym),
                Strategy.PARTIAL_SIC_R2: sum_rate_partial_I(sym),
            }
            assert values[classify_region(sym)] == best

    def test_agrees_with_general_solver_on_grid(self):
        # full margin grid at gamma = 4, skipping near-ties
        gamma = 4.0
        points = [0.01 * k for k in range(1, 100)]
        for eps in points:
            for mu in points:
                sym = SymmetricChannel(eps, mu, gamma)
                ranked = sorted(
                    (sum_rate_no_sic(sym), sum_rate_partial_I(sym), sum_rate_partial_II(sym)),
                    reverse=True,
                )
                if ranked[0] - ranked[1] < 1e-9:
                    continue
                assert classify_region(sym) is solve_global(sym.to_gains()).strategy, (eps, mu)
