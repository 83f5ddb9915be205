"""Inequality evaluator tests: anchors, boundary checks, slack properties."""

import math
import random
from fractions import Fraction

import pytest

from nablafrac import (
    Backend,
    BoundaryConditionError,
    FunctionSpec,
    GridFunction,
    OpialParams,
    ParameterError,
    TaylorSeed,
    TolerancePolicy,
    WindowError,
    avg_sobolev_report,
    construct_from_taylor_data,
    g_bound,
    gen_function,
    normalized_rising,
    opial_corollary_25,
    opial_report,
    ostrowski_report,
    poincare_report,
    scalar_close,
    sobolev_report,
)

FIVE_HALVES = Fraction(5, 2)


def unit_weights(lo, hi):
    return GridFunction.constant(lo, hi, Fraction(1))


def zero_function(lo, hi):
    return GridFunction(lo, tuple(0 for _ in range(lo, hi + 1)))


def admissible(seed, a, m, b, k0, bound=9):
    return gen_function(
        FunctionSpec(a=a, m=m, b=b, zero_initials_from=k0, value_range=bound, seed=seed)
    )


def default_opial_params(a, t, mu=FIVE_HALVES, p=0):
    m = 3
    return OpialParams(
        mu=mu,
        p=p,
        gamma=2,
        delta=2,
        inner_weights=unit_weights(a + 1, t),
        outer_weights=unit_weights(a + m, t),
    )


class TestGBound:
    def test_anchor_values(self):
        g = GridFunction(1, (Fraction(1), Fraction(2), Fraction(3), Fraction(4)))
        assert g_bound(g, 0, 3, 4, "paper") == 48
        assert g_bound(g, 0, 3, 4, "tight") == 8
        # tight variant equals the telescoped square difference
        assert g_bound(g, 0, 3, 4, "tight") == Fraction((2 * 4 - 3) ** 2 - (2 * 2 - 1) ** 2, 2)

    def test_tight_never_exceeds_paper(self):
        rng = random.Random(41)
        for _ in range(200):
            increments = [Fraction(rng.randint(0, 9)) for _ in range(rng.randint(4, 12))]
            vals = []
            acc = Fraction(0)
            for inc in increments:
                acc += inc
                vals.append(acc)
            g = GridFunction(1, tuple(vals))
            t = g.hi
            assert g_bound(g, 0, 3, t, "tight") <= g_bound(g, 0, 3, t, "paper")

    def test_unknown_variant_rejected(self):
        g = GridFunction(1, (1, 2, 3, 4))
        with pytest.raises(ParameterError):
            g_bound(g, 0, 3, 4, "loose")


class TestOpial:
    def test_zero_function_gives_zero_report(self):
        f = zero_function(-2, 8)
        report = opial_report(f, 0, 5, default_opial_params(0, 5))
        assert report.lhs == 0
        assert report.rhs == 0
        assert report.slack == 0
        assert report.holds

    def test_g_series_is_nondecreasing(self):
        f = admissible(99, 0, 3, 12, k0=0)
        report = opial_report(f, 0, 12, default_opial_params(0, 12))
        g_series = report.components["g"]
        assert all(x <= y for x, y in zip(g_series, g_series[1:]))

    def test_boundary_violation_detected(self):
        f = GridFunction(-2, tuple(t + 5 for t in range(-2, 9)))
        with pytest.raises(BoundaryConditionError):
            opial_report(f, 0, 5, default_opial_params(0, 5))

    def test_random_slack_nonnegative_paper_variant(self):
        rng = random.Random(43)
        for _ in range(60):
            t = 3 + rng.randint(0, 10)
            f = admissible(rng.getrandbits(63), 0, 3, max(t, 4), k0=0)
            report = opial_report(f, 0, t, default_opial_params(0, t), "paper")
            assert report.components["exact_holds"] == 1
            assert report.holds

    def test_exact_squared_certificate_present(self):
        f = admissible(7, 0, 3, 8, k0=0)
        report = opial_report(f, 0, 8, default_opial_params(0, 8))
        lhs_sq = report.components["lhs_squared"]
        rhs_sq = report.components["rhs_squared"]
        assert isinstance(lhs_sq, Fraction) and isinstance(rhs_sq, Fraction)
        assert math.isclose(float(lhs_sq), float(report.lhs) ** 2, rel_tol=1e-12)

    def test_zero_outer_weights_allowed(self):
        f = admissible(11, 0, 3, 8, k0=0)
        params = OpialParams(
            mu=FIVE_HALVES,
            p=0,
            gamma=2,
            delta=2,
            inner_weights=unit_weights(1, 8),
            outer_weights=GridFunction(3, tuple(0 for _ in range(3, 9))),
        )
        report = opial_report(f, 0, 8, params)
        assert report.lhs == 0
        assert report.holds

    def test_tight_variant_counterexample(self):
        # an early caputo spike followed by a nearly flat tail drives the
        # telescoped variant negative: it is not a valid upper bound there
        seed = TaylorSeed(a=0, m=3, initial=(0, 0, 0), h=(0, 9, -4, -1))
        f = construct_from_taylor_data(seed)
        params = default_opial_params(0, 4)
        tight = opial_report(f, 0, 4, params, "tight")
        paper = opial_report(f, 0, 4, params, "paper")
        assert tight.components["g_bound_tight"] < 0
        assert math.isnan(tight.rhs)
        assert not tight.holds
        assert tight.components["exact_holds"] == 0
        assert paper.holds and paper.components["exact_holds"] == 1

    def test_conjugacy_enforced(self):
        with pytest.raises(ParameterError):
            OpialParams(
                mu=FIVE_HALVES,
                p=0,
                gamma=2,
                delta=3,
                inner_weights=unit_weights(1, 5),
                outer_weights=unit_weights(3, 5),
            )

    def test_low_order_rejected(self):
        with pytest.raises(ParameterError):
            OpialParams(
                mu=Fraction(3, 2),
                p=0,
                gamma=2,
                delta=2,
                inner_weights=unit_weights(1, 5),
                outer_weights=unit_weights(2, 5),
            )


class TestOpialCorollary:
    def test_prefactor_matches_closed_form(self):
        f = zero_function(-2, 6)
        report = opial_corollary_25(f, 4)
        assert report.components["prefactor"] == pytest.approx(
            4.0 / (3.0 * math.sqrt(math.pi)), rel=1e-12
        )

    def test_zero_function(self):
        f = zero_function(-2, 6)
        report = opial_corollary_25(f, 5)
        assert report.lhs == 0 and report.rhs == 0

    def test_first_g_value_is_squared_first_value(self):
        # with zero initial values the first accumulated term is f(1)^2
        seed = TaylorSeed(a=0, m=3, initial=(0, 0, 0), h=(5, 1, -2, 3))
        f = construct_from_taylor_data(seed)
        report = opial_corollary_25(f, 4)
        assert report.components["g"][0] == float(f.at(1)) ** 2

    def test_boundary_zeroes_required(self):
        f = GridFunction(-2, tuple(1 for _ in range(10)))
        with pytest.raises(BoundaryConditionError):
            opial_corollary_25(f, 4)

    def test_random_slack_nonnegative(self):
        rng = random.Random(47)
        for _ in range(60):
            t = 3 + rng.randint(0, 15)
            f = admissible(rng.getrandbits(63), 0, 3, max(t, 4), k0=0)
            report = opial_corollary_25(f, t)
            assert report.holds and report.components["exact_holds"] == 1


class TestOstrowski:
    def test_coefficient_anchor(self):
        f = admissible(3, 0, 3, 5, k0=1)
        report = ostrowski_report(f, 0, 5, FIVE_HALVES, 0)
        assert report.components["coefficient"] == pytest.approx(4851 / 256, rel=1e-15)

    def test_coefficient_matches_log_gamma(self):
        # normalized rational coefficient vs the float gamma evaluation
        policy = TolerancePolicy()
        a, b, m, p = 0, 5, 3, 0
        exact = (
            normalized_rising(b - a, FIVE_HALVES - p + 2)
            - normalized_rising(m, FIVE_HALVES - p + 2)
        ) / (b - a - m)
        target = float(FIVE_HALVES) - p + 2.0
        approx = (
            normalized_rising(b - a, target, backend=Backend.FLOAT)
            - normalized_rising(m, target, backend=Backend.FLOAT)
        ) / (b - a - m)
        assert scalar_close(approx, exact, policy)

    def test_zero_function(self):
        f = zero_function(-2, 8)
        report = ostrowski_report(f, 0, 8, FIVE_HALVES, 0)
        assert report.lhs == 0 and report.rhs == 0

    def test_exact_rational_report(self):
        f = admissible(13, 0, 3, 9, k0=1)
        report = ostrowski_report(f, 0, 9, FIVE_HALVES, 0)
        assert isinstance(report.lhs, Fraction) and isinstance(report.rhs, Fraction)
        assert report.components["exact_holds"] == 1

    def test_boundary_zeroes_start_after_shift(self):
        # p = 1 leaves nabla^0 and nabla^1 free; only nabla^2 must vanish
        rng = random.Random(53)
        seed = TaylorSeed(a=0, m=3, initial=(4, -3, 0), h=tuple(rng.randint(-9, 9) for _ in range(8)))
        f = construct_from_taylor_data(seed)
        report = ostrowski_report(f, 0, 8, FIVE_HALVES, 1)
        assert report.holds

    def test_window_error(self):
        f = admissible(5, 0, 3, 7, k0=1)
        with pytest.raises(WindowError):
            ostrowski_report(f, 0, 3, FIVE_HALVES, 0)

    def test_random_slack_nonnegative(self):
        rng = random.Random(59)
        for _ in range(60):
            m = rng.randint(1, 4)
            mu = Fraction(rng.randint((m - 1) * 8 + 1, m * 8 - 1), 8)
            p = rng.randint(0, m - 1)
            a = rng.randint(0, 2)
            b = a + m + 1 + rng.randint(0, 9)
            f = admissible(rng.getrandbits(63), a, m, b, k0=min(p + 1, m))
            report = ostrowski_report(f, a, b, mu, p)
            assert report.components["exact_holds"] == 1


class TestPoincare:
    def test_zero_function(self):
        f = zero_function(-2, 8)
        report = poincare_report(f, 0, 8, FIVE_HALVES, 0)
        assert report.lhs == 0 and report.rhs == 0

    def test_exact_rational_when_square_exponents(self):
        f = admissible(17, 0, 3, 9, k0=0)
        report = poincare_report(f, 0, 9, FIVE_HALVES, 0)
        assert isinstance(report.lhs, Fraction) and isinstance(report.rhs, Fraction)
        assert report.slack >= 0

    def test_boundary_window_single_term(self):
        # evaluation at b = a+m keeps exactly one outer term
        f = admissible(19, 0, 3, 4, k0=0)
        report = poincare_report(f, 0, 3, FIVE_HALVES, 0)
        assert report.holds

    def test_general_conjugate_pair(self):
        f = admissible(23, 0, 3, 9, k0=0)
        report = poincare_report(f, 0, 9, FIVE_HALVES, 0, Fraction(3, 2), Fraction(3))
        assert isinstance(report.slack, float)
        assert report.holds

    def test_random_slack_nonnegative(self):
        rng = random.Random(61)
        for _ in range(60):
            m = rng.randint(1, 4)
            mu = Fraction(rng.randint((m - 1) * 8 + 1, m * 8 - 1), 8)
            p = rng.randint(0, m - 1)
            a = rng.randint(0, 2)
            b = a + m + 1 + rng.randint(0, 9)
            f = admissible(rng.getrandbits(63), a, m, b, k0=p)
            report = poincare_report(f, a, b, mu, p)
            assert report.components["exact_holds"] == 1


class TestSobolev:
    def test_zero_function(self):
        f = zero_function(-2, 8)
        report = sobolev_report(f, 0, 8, FIVE_HALVES, 0)
        assert report.lhs == 0 and report.rhs == 0

    def test_r_equal_delta_matches_poincare_root(self):
        f = admissible(29, 0, 3, 9, k0=0)
        sob = sobolev_report(f, 0, 9, FIVE_HALVES, 0, 2, 2, 2)
        poi = poincare_report(f, 0, 9, FIVE_HALVES, 0, 2, 2)
        assert float(sob.lhs) == pytest.approx(float(poi.lhs) ** 0.5, rel=1e-12)

    def test_r_one_keeps_exact_lhs(self):
        f = admissible(31, 0, 3, 9, k0=0)
        report = sobolev_report(f, 0, 9, FIVE_HALVES, 0, 2, 2, 1)
        assert isinstance(report.lhs, Fraction)

    def test_invalid_r_rejected(self):
        f = admissible(37, 0, 3, 9, k0=0)
        with pytest.raises(ParameterError):
            sobolev_report(f, 0, 9, FIVE_HALVES, 0, 2, 2, Fraction(1, 2))

    def test_fractional_norm_exponent(self):
        f = admissible(38, 0, 3, 9, k0=0)
        report = sobolev_report(f, 0, 9, FIVE_HALVES, 0, 2, 2, Fraction(3, 2))
        assert isinstance(report.slack, float)
        assert report.holds

    def test_random_slack_nonnegative_various_r(self):
        rng = random.Random(67)
        policy = TolerancePolicy()
        for _ in range(60):
            m = rng.randint(1, 4)
            mu = Fraction(rng.randint((m - 1) * 8 + 1, m * 8 - 1), 8)
            p = rng.randint(0, m - 1)
            a = rng.randint(0, 2)
            b = a + m + 1 + rng.randint(0, 9)
            f = admissible(rng.getrandbits(63), a, m, b, k0=p)
            for r in (1, 2, 3):
                report = sobolev_report(f, a, b, mu, p, 2, 2, r)
                rhs = float(report.rhs)
                assert float(report.slack) >= -(policy.abs_eps + policy.rel_eps * abs(rhs))
                if r == 2:
                    assert report.components["exact_holds"] == 1


class TestAvgSobolev:
    def test_zero_function(self):
        f = zero_function(-2, 9)
        weights = [unit_weights(1, 9)]
        report = avg_sobolev_report(f, 0, 9, [FIVE_HALVES], weights)
        assert report.lhs == 0 and report.rhs == 0

    def test_single_order_unit_weights_reduce_to_sobolev(self):
        f = admissible(41, 0, 3, 9, k0=0)
        weights = [unit_weights(1, 9)]
        for r in (1, 2, 3):
            avg = avg_sobolev_report(f, 0, 9, [FIVE_HALVES], weights, r)
            sob = sobolev_report(f, 0, 9, FIVE_HALVES, 0, 2, 2, r)
            assert avg.components["rho_star"] == 1
            assert float(avg.lhs) == pytest.approx(float(sob.lhs), rel=1e-12)
            assert float(avg.rhs) == pytest.approx(float(sob.rhs), rel=1e-12)

    def test_orders_must_increase(self):
        f = admissible(43, 0, 3, 9, k0=0)
        weights = [unit_weights(1, 9), unit_weights(1, 9)]
        with pytest.raises(ParameterError):
            avg_sobolev_report(f, 0, 9, [FIVE_HALVES, Fraction(3, 2)], weights)

    def test_norm_monotone_in_window_start(self):
        # the r-norm over [a+m_k, b] never exceeds the one over a wider window
        rng = random.Random(71)
        for _ in range(40):
            f = admissible(rng.getrandbits(63), 0, 3, 10, k0=0)
            r = rng.choice((1, 2, 3))
            norms = []
            for start in (3, 2, 1):
                total = sum(abs(float(f.at(j))) ** r for j in range(start, 11))
                norms.append(total ** (1.0 / r))
            assert norms[0] <= norms[1] + 1e-12 and norms[1] <= norms[2] + 1e-12

    def test_random_slack_nonnegative_two_orders(self):
        rng = random.Random(73)
        for _ in range(50):
            mu1 = Fraction(rng.randint(9, 15), 8)
            mu2 = Fraction(rng.randint(17, 23), 8)
            a = rng.randint(0, 2)
            b = a + 3 + 1 + rng.randint(0, 7)
            f = admissible(rng.getrandbits(63), a, 3, b, k0=0)
            weights = []
            for _w in range(2):
                vals = [Fraction(rng.randint(3, 8), 4) for _t in range(a + 1, b + 1)]
                weights.append(GridFunction(a + 1, tuple(vals)))
            report = avg_sobolev_report(f, a, b, [mu1, mu2], weights, 2)
            assert report.components["exact_holds"] == 1

    def test_strict_window_required(self):
        f = admissible(79, 0, 3, 9, k0=0)
        with pytest.raises(WindowError):
            avg_sobolev_report(f, 0, 3, [FIVE_HALVES], [unit_weights(1, 9)])


def raw_rising(n, alpha):
    """Independent raw rising power via log-gamma (float oracle)."""
    if n == 0:
        return 0.0
    return math.exp(math.lgamma(n + alpha) - math.lgamma(n))


def raw_caputo(f, a, mu, tau):
    """Caputo-like difference from the raw kernel with an explicit 1/gamma."""
    m = math.ceil(mu)
    nu = m - mu
    total = 0.0
    for s in range(a, tau + 1):
        dm = sum((-1) ** i * math.comb(m, i) * float(f.at(s - i)) for i in range(m + 1))
        total += raw_rising(tau - s + 1, nu - 1.0) * dm
    return total / math.gamma(nu)


class TestRawFormulaOracle:
    """The normalized-kernel implementation against independent brute-force
    float evaluations of the raw formula shapes (raw rising-power kernels,
    explicit gamma prefactors).  Slack positivity alone would not catch a
    systematically inflated right-hand side; these equalities do."""

    def _instance(self, seed):
        rng = random.Random(seed)
        a, m, mu, p = 0, 3, 2.5, 0
        t = a + m + rng.randint(1, 6)
        f = admissible(rng.getrandbits(63), a, m, max(t, a + m + 1), k0=p)
        c_vals = [Fraction(rng.randint(1, 8), rng.randint(1, 8)) for _ in range(a + 1, t + 1)]
        d_vals = [Fraction(rng.randint(0, 8), rng.randint(1, 8)) for _ in range(a + m, t + 1)]
        return a, m, mu, p, t, f, c_vals, d_vals

    def test_opial_report_matches_raw_formulas(self):
        for seed in range(12):
            a, m, mu, p, t, f, c_vals, d_vals = self._instance(seed)
            params = OpialParams(
                mu=FIVE_HALVES,
                p=p,
                gamma=2,
                delta=2,
                inner_weights=GridFunction(a + 1, tuple(c_vals)),
                outer_weights=GridFunction(a + m, tuple(d_vals)),
            )
            report = opial_report(f, a, t, params)

            cap = {tau: raw_caputo(f, a + 1, mu, tau) for tau in range(a + 1, t + 1)}
            C = {tau: float(v) for tau, v in zip(range(a + 1, t + 1), c_vals)}
            D = {tp: float(v) for tp, v in zip(range(a + m, t + 1), d_vals)}

            def theta(tp):
                total = sum(
                    (raw_rising(tp - tau + 1, mu - p - 1.0) / C[tau]) ** 2
                    for tau in range(a + 1, tp + 1)
                )
                return total**0.5

            k_raw = (
                sum((D[tp] / C[tp] * theta(tp)) ** 2 for tp in range(a + m, t + 1)) ** 0.5
                / math.gamma(mu - p)
            )
            g_raw = {}
            acc = 0.0
            for tau in range(a + 1, t + 1):
                acc += (C[tau] * abs(cap[tau])) ** 2
                g_raw[tau] = acc
            big_g = (
                2.0 * (g_raw[t] ** 2 - g_raw[a + m - 1] ** 2)
                + (g_raw[t - 1] ** 2 - g_raw[a + m - 2] ** 2) / 2.0
                + 2.0 * (g_raw[t] * g_raw[t - 1] - g_raw[a + m - 1] * g_raw[a + m - 2])
            )
            lhs_raw = sum(
                D[tp]
                * abs(sum((-1) ** i * math.comb(p, i) * float(f.at(tp - i)) for i in range(p + 1)))
                * abs(cap[tp])
                for tp in range(a + m, t + 1)
            )
            assert report.components["k_factor"] == pytest.approx(k_raw, rel=1e-9, abs=1e-12)
            assert report.components["g_bound_paper"] == pytest.approx(big_g, rel=1e-9, abs=1e-9)
            assert float(report.lhs) == pytest.approx(lhs_raw, rel=1e-9, abs=1e-12)
            assert float(report.rhs) == pytest.approx(
                k_raw * max(big_g, 0.0) ** 0.5, rel=1e-9, abs=1e-12
            )
            thetas = [theta(tp) for tp in range(a + m, t + 1)]
            for got, want in zip(report.components["theta"], thetas):
                assert got == pytest.approx(want, rel=1e-9, abs=1e-12)

    def test_poincare_rhs_matches_raw_formula(self):
        for seed in range(12):
            rng = random.Random(100 + seed)
            m = rng.randint(1, 3)
            mu_num = rng.randint((m - 1) * 8 + 1, m * 8 - 1)
            mu = Fraction(mu_num, 8)
            p = rng.randint(0, m - 1)
            a = rng.randint(0, 2)
            b = a + m + 1 + rng.randint(0, 6)
            f = admissible(rng.getrandbits(63), a, m, b, k0=p)
            report = poincare_report(f, a, b, mu, p)

            muf = float(mu)
            kernel = sum(
                sum(raw_rising(j - tau + 1, muf - p - 1.0) ** 2 for tau in range(a + 1, j + 1))
                for j in range(a + m, b + 1)
            )
            cap_norm = sum(
                raw_caputo(f, a + 1, muf, tau) ** 2 for tau in range(a + 1, b + 1)
            )
            rhs_raw = kernel * cap_norm / math.gamma(muf - p) ** 2
            assert float(report.rhs) == pytest.approx(rhs_raw, rel=1e-9, abs=1e-9)

    def test_sobolev_rhs_matches_raw_formula(self):
        for seed in range(8):
            rng = random.Random(200 + seed)
            m = rng.randint(1, 3)
            mu = Fraction(rng.randint((m - 1) * 8 + 1, m * 8 - 1), 8)
            p = rng.randint(0, m - 1)
            a = rng.randint(0, 2)
            b = a + m + 1 + rng.randint(0, 6)
            r = rng.choice((1, 2, 3))
            f = admissible(rng.getrandbits(63), a, m, b, k0=p)
            report = sobolev_report(f, a, b, mu, p, 2, 2, r)

            muf = float(mu)
            kernel = sum(
                sum(raw_rising(j - tau + 1, muf - p - 1.0) ** 2 for tau in range(a + 1, j + 1))
                ** (r / 2.0)
                for j in range(a + m, b + 1)
            )
            cap_norm = sum(
                raw_caputo(f, a + 1, muf, tau) ** 2 for tau in range(a + 1, b + 1)
            )
            rhs_raw = kernel ** (1.0 / r) * cap_norm**0.5 / math.gamma(muf - p)
            assert float(report.rhs) == pytest.approx(rhs_raw, rel=1e-9, abs=1e-9)

    def test_ostrowski_rhs_matches_raw_formula(self):
        for seed in range(12):
            rng = random.Random(300 + seed)
            m = rng.randint(1, 3)
            mu = Fraction(rng.randint((m - 1) * 8 + 1, m * 8 - 1), 8)
            p = rng.randint(0, m - 1)
            a = rng.randint(0, 2)
            b = a + m + 1 + rng.randint(0, 6)
            f = admissible(rng.getrandbits(63), a, m, b, k0=min(p + 1, m))
            report = ostrowski_report(f, a, b, mu, p)

            muf = float(mu)
            coeff = (raw_rising(b - a, muf - p + 1.0) - raw_rising(m, muf - p + 1.0)) / (
                math.gamma(muf - p + 2.0) * (b - a - m)
            )
            max_cap = max(
                abs(raw_caputo(f, a + 1, muf, tau)) for tau in range(a + 1, b + 1)
            )
            assert float(report.rhs) == pytest.approx(coeff * max_cap, rel=1e-9, abs=1e-12)

    def test_avg_sobolev_delta_star_matches_raw_formula(self):
        for seed in range(8):
            rng = random.Random(400 + seed)
            mu1 = Fraction(rng.randint(9, 15), 8)
            mu2 = Fraction(rng.randint(17, 23), 8)
            a = rng.randint(0, 2)
            b = a + 3 + 1 + rng.randint(0, 5)
            r = rng.choice((1, 2, 3))
            f = admissible(rng.getrandbits(63), a, 3, b, k0=0)
            weights = [unit_weights(a + 1, b), unit_weights(a + 1, b)]
            report = avg_sobolev_report(f, a, b, [mu1, mu2], weights, r)

            candidates = []
            for mu in (float(mu1), float(mu2)):
                m_l = math.ceil(mu)
                inner = sum(
                    sum(raw_rising(j - tau + 1, mu - 1.0) ** 2 for tau in range(a + 1, j + 1))
                    ** (r / 2.0)
                    for j in range(a + m_l, b + 1)
                )
                candidates.append(inner ** (2.0 / r) / math.gamma(mu) ** 2)
            assert report.components["delta_star"] == pytest.approx(
                max(candidates), rel=1e-9, abs=1e-9
            )
