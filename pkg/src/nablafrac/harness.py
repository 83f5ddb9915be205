"""Deterministic random-instance generation and the verification suites.

Per-trial seeds derive from ``(master_seed, trial_index)`` through the
splitmix-style mixer :func:`mix_seed`, so serial and parallel runs agree and
every failing instance can be reproduced in isolation from its trial seed.

Identity suites check exact algebraic identities (zero defect expected on the
exact backend); inequality suites generate admissible functions, evaluate one
bound report per trial, and count slack violations.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .errors import ParameterError, UsageError
from .fracops import (
    as_order,
    delta_frac_sum,
    frac_sum,
    frac_sum_grid,
    kernel_weights,
)
from .grid import GridFunction, nabla
from .ineq import (
    InequalityReport,
    OpialParams,
    avg_sobolev_report,
    opial_corollary_25,
    opial_report,
    ostrowski_report,
    poincare_report,
    sobolev_report,
)
from .scalars import (
    Backend,
    DEFAULT_TOLERANCE,
    Scalar,
    TolerancePolicy,
    gamma_ratio_mod1,
    scalar_close,
    to_float,
)
from .taylor import (
    TaylorSeed,
    construct_from_taylor_data,
    kernel_sum_closed_form,
    sum_rising_closed_form,
    taylor_extended,
    taylor_extended_series,
    taylor_fractional,
    taylor_fractional_series,
)

__all__ = [
    "FunctionSpec",
    "IDENTITY_SUITE_NAMES",
    "INEQUALITY_SUITE_NAMES",
    "SuiteResult",
    "gen_function",
    "mix_seed",
    "replay_identity_trial",
    "replay_inequality_trial",
    "run_identity_suite",
    "run_inequality_suite",
]

_MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def mix_seed(master_seed: int, trial_index: int) -> int:
    """Splitmix-style mixing of (master seed, trial index) into a 64-bit seed.

    ``z = master + (index+1)·golden`` followed by the two xor-multiply rounds
    and the final xor-shift of the splitmix64 finaliser.
    """
    if master_seed < 0 or trial_index < 0:
        raise ParameterError("seeds and indices must be non-negative")
    z = (master_seed + (trial_index + 1) * _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class FunctionSpec:
    """Recipe for one deterministic admissible grid function.

    ``zero_initials_from = k0`` forces the backward differences of order
    ``k0 .. m−1`` at the base to vanish; differences below ``k0`` and the m-th
    difference values on ``(a, b]`` are drawn uniformly from
    ``[-value_range, value_range]``.
    """

    a: int
    m: int
    b: int
    zero_initials_from: int
    value_range: int
    seed: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ParameterError(f"m must be >= 1, got {self.m}")
        if not self.a + self.m < self.b:
            raise ParameterError(f"need a+m < b, got a+m={self.a + self.m}, b={self.b}")
        if not 0 <= self.zero_initials_from <= self.m:
            raise ParameterError(
                f"zero_initials_from must lie in [0, m], got {self.zero_initials_from}"
            )
        if self.value_range < 0:
            raise ParameterError(f"value_range must be >= 0, got {self.value_range}")
        if not 0 <= self.seed <= _MASK64:
            raise ParameterError("seed must fit in 64 bits")


def gen_function(spec: FunctionSpec) -> GridFunction:
    """Deterministic integer-valued grid function on ``[a−m+1, b]``.

    Draw order is fixed: the free initial differences first (ascending k),
    then the m-th difference values on ``(a, b]`` in ascending t.
    """
    rng = random.Random(spec.seed)
    bound = spec.value_range
    initial = tuple(
        rng.randint(-bound, bound) if k < spec.zero_initials_from else 0
        for k in range(spec.m)
    )
    h = tuple(rng.randint(-bound, bound) for _ in range(spec.a + 1, spec.b + 1))
    return construct_from_taylor_data(TaylorSeed(a=spec.a, m=spec.m, initial=initial, h=h))


@dataclass(frozen=True)
class SuiteResult:
    """Aggregated outcome of one suite run.

    For identity suites ``worst_slack`` is the largest absolute defect seen
    (0.0 when everything matches exactly); for inequality suites it is the
    smallest slack seen over all finite-slack trials.
    """

    suite: str
    trials: int
    failures: int
    worst_slack: float
    failing_seeds: Tuple[int, ...]
    backend: Backend
    master_seed: int

    @property
    def passed(self) -> bool:
        return self.failures == 0


# ---------------------------------------------------------------------------
# random draws


def _random_grid(rng: random.Random, lo: int, hi: int, bound: int = 9) -> GridFunction:
    return GridFunction(lo, tuple(Fraction(rng.randint(-bound, bound)) for _ in range(lo, hi + 1)))


def _draw_fraction(
    rng: random.Random,
    lo: Fraction,
    hi: Fraction,
    max_den: int = 8,
    non_integer: bool = False,
) -> Fraction:
    """Uniform-ish rational in (lo, hi] with denominator at most ``max_den``."""
    lo = Fraction(lo)
    hi = Fraction(hi)
    while True:
        den = rng.randint(1, max_den)
        num_lo = math.floor(lo * den) + 1
        num_hi = math.floor(hi * den)
        if num_hi < num_lo:
            continue
        q = Fraction(rng.randint(num_lo, num_hi), den)
        if q <= lo or q > hi:
            continue
        if non_integer and q.denominator == 1:
            continue
        return q


def _draw_order_with_ceiling(rng: random.Random, m: int, max_den: int = 8) -> Fraction:
    """Non-integer rational in (m−1, m)."""
    den = rng.randint(2, max_den)
    num = rng.randint((m - 1) * den + 1, m * den - 1)
    return Fraction(num, den)


def _maybe_float_grid(f: GridFunction, backend: Backend) -> GridFunction:
    return f.as_float() if backend is Backend.FLOAT else f


# ---------------------------------------------------------------------------
# identity suites: each trial returns (got, want) pairs

Pair = Tuple[Scalar, Scalar]


def _trial_exponents(rng: random.Random, backend: Backend) -> List[Pair]:
    a = rng.randint(-5, 5)
    length = rng.randint(3, 30)
    f = _maybe_float_grid(_random_grid(rng, a, a + length - 1), backend)
    mu = _draw_fraction(rng, Fraction(0), Fraction(3), non_integer=True)
    nu = _draw_fraction(rng, Fraction(0), Fraction(3), non_integer=True)
    inner_mu = frac_sum_grid(f, a, mu)
    inner_nu = frac_sum_grid(f, a, nu)
    combined = frac_sum_grid(f, a, mu + nu)
    pairs: List[Pair] = []
    for t in range(a, f.hi + 1):
        pairs.append((frac_sum(inner_mu, a, nu, t), combined.at(t)))
        pairs.append((frac_sum(inner_nu, a, mu, t), combined.at(t)))
    return pairs


def _trial_duality(rng: random.Random, backend: Backend) -> List[Pair]:
    a = rng.randint(-5, 5)
    length = rng.randint(1, 30)
    f = _maybe_float_grid(_random_grid(rng, a, a + length - 1), backend)
    nu = _draw_fraction(rng, Fraction(0), Fraction(3), non_integer=True)
    return [
        (delta_frac_sum(f, a, nu, j), frac_sum(f, a, nu, a + j))
        for j in range(length)
    ]


def _trial_nabla_of_sum(rng: random.Random, backend: Backend) -> List[Pair]:
    a = rng.randint(-5, 5)
    length = rng.randint(3, 30)
    f = _maybe_float_grid(_random_grid(rng, a, a + length - 1), backend)
    nu = _draw_fraction(rng, Fraction(0), Fraction(3), non_integer=True)
    p_max = math.ceil(nu) - 1
    p = rng.randint(0, max(0, min(3, p_max)))
    summed = frac_sum_grid(f, a, nu)
    reduced = frac_sum_grid(f, a, nu - p)
    pairs: List[Pair] = []
    for t in range(a + p, f.hi + 1):
        pairs.append((nabla(summed, t, p), reduced.at(t)))
    return pairs


def _taylor_function_spec(rng: random.Random, m: int, a: int, free_initials: bool) -> FunctionSpec:
    span = rng.randint(m + 1, 40 - m)
    k0 = m if free_initials else 0
    return FunctionSpec(
        a=a, m=m, b=a + span, zero_initials_from=k0, value_range=9, seed=rng.getrandbits(64)
    )


def _trial_taylor(rng: random.Random, backend: Backend) -> List[Pair]:
    m = rng.randint(1, 5)
    a = rng.randint(-5, 5)
    spec = _taylor_function_spec(rng, m, a, free_initials=True)
    f = _maybe_float_grid(gen_function(spec), backend)
    mu = _draw_order_with_ceiling(rng, m)
    series = taylor_fractional_series(f, a, mu)
    pairs: List[Pair] = []
    for t, expansion in series.items():
        pairs.append((expansion.total, f.at(t)))
        pairs.append((expansion.poly_part + expansion.remainder, expansion.total))
    return pairs


def _trial_taylor_extended(rng: random.Random, backend: Backend) -> List[Pair]:
    m = rng.randint(1, 5)
    a = rng.randint(0, 5)
    spec = _taylor_function_spec(rng, m, a, free_initials=True)
    f = _maybe_float_grid(gen_function(spec), backend)
    mu = _draw_order_with_ceiling(rng, m)
    p = rng.randint(0, m - 1)
    series = taylor_extended_series(f, a, mu, p)
    pairs: List[Pair] = []
    for t, expansion in series.items():
        pairs.append((expansion.total, nabla(f, t, p)))
        pairs.append((expansion.poly_part + expansion.remainder, expansion.total))
    reduced = taylor_extended(f, a, mu, 0, f.hi)
    plain = taylor_fractional(f, a, mu, f.hi)
    pairs.append((reduced.poly_part, plain.poly_part))
    pairs.append((reduced.remainder, plain.remainder))
    pairs.append((reduced.total, plain.total))
    return pairs


def _trial_power_rule(rng: random.Random, backend: Backend) -> List[Pair]:
    a = rng.randint(-5, 5)
    k = rng.randint(0, 6)
    p = rng.randint(0, k)
    span = 30
    row = kernel_weights(Fraction(k + 1), span, backend)
    one: Scalar = 1.0 if backend is Backend.FLOAT else Fraction(1)
    zero: Scalar = 0.0 if backend is Backend.FLOAT else Fraction(0)
    head = one if k == 0 else zero
    g = GridFunction(a, (head,) + tuple(row))
    expected_row = kernel_weights(Fraction(k - p + 1), span, backend)
    expected_head = one if k == p else zero
    pairs: List[Pair] = []
    for t in range(a + p, a + span + 1):
        want = expected_head if t == a else expected_row[t - a - 1]
        pairs.append((nabla(g, t, p), want))
    return pairs


def _trial_gamma_quotient(rng: random.Random, backend: Backend) -> List[Pair]:
    if rng.random() < 0.4:
        k: Fraction = Fraction(rng.randint(0, 6))
    else:
        k = _draw_fraction(rng, Fraction(-1), Fraction(6), non_integer=True)
    x = k + _draw_fraction(rng, Fraction(0), Fraction(6))
    pairs: List[Pair] = []
    if backend is Backend.FLOAT:
        xf, kf = float(x), float(k)
        q1 = math.exp(math.lgamma(xf + 1.0) - math.lgamma(xf - kf + 1.0))
        q2 = math.exp(math.lgamma(xf + 2.0) - math.lgamma(xf - kf + 1.0))
        q3 = math.exp(math.lgamma(xf + 1.0) - math.lgamma(xf - kf))
        pairs.append((q1, (q2 - q3) / (kf + 1.0)))
        return pairs
    # All quotients expressed relative to Γ(x+1)/Γ(x−k+1), which divides out.
    up = gamma_ratio_mod1(x + 2, x + 1)
    down = gamma_ratio_mod1(x - k + 1, x - k)
    pairs.append((Fraction(1), (up - down) / (k + 1)))
    if k.denominator == 1 and k >= 0:
        q1 = gamma_ratio_mod1(x + 1, x - k + 1)
        q2 = gamma_ratio_mod1(x + 2, x - k + 1)
        q3 = gamma_ratio_mod1(x + 1, x - k)
        pairs.append((q1, (q2 - q3) / (k + 1)))
    return pairs


def _trial_kernel_closed_form(rng: random.Random, backend: Backend) -> List[Pair]:
    a = rng.randint(-5, 5)
    mu = _draw_fraction(rng, Fraction(0), Fraction(3), non_integer=True)
    n = rng.randint(1, 50)
    closed = kernel_sum_closed_form(a, mu, a + n, backend)
    row = kernel_weights(mu, n, backend)
    direct = sum(row[1:], row[0])
    return [(closed, direct)]


def _trial_rising_sum(rng: random.Random, backend: Backend) -> List[Pair]:
    a = rng.randint(-5, 5)
    m = rng.randint(1, 5)
    b = a + m + rng.randint(1, 20)
    nu = _draw_fraction(rng, Fraction(0), Fraction(3), non_integer=True)
    closed = sum_rising_closed_form(a, m, b, nu, backend)
    row = kernel_weights(nu + 1, b - a, backend)
    direct = None
    for j in range(a + m + 1, b + 1):
        term = row[j - a - 1]
        direct = term if direct is None else direct + term
    return [(closed, direct)]


_IDENTITY_SUITES: Dict[str, Callable[[random.Random, Backend], List[Pair]]] = {
    "exponents": _trial_exponents,
    "duality": _trial_duality,
    "nabla-of-sum": _trial_nabla_of_sum,
    "taylor": _trial_taylor,
    "taylor-extended": _trial_taylor_extended,
    "kernel-closed-form": _trial_kernel_closed_form,
    "power-rule": _trial_power_rule,
    "gamma-quotient": _trial_gamma_quotient,
    "rising-sum": _trial_rising_sum,
}

IDENTITY_SUITE_NAMES = tuple(sorted(_IDENTITY_SUITES))


def run_identity_suite(
    name: str,
    trials: int,
    master_seed: int,
    backend: Backend = Backend.EXACT,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
) -> SuiteResult:
    """Run ``trials`` randomized checks of the named identity.

    Exact backend: any nonzero defect is a failure.  Float backend: a pair
    failing :func:`scalar_close` under ``policy`` is a failure.  The absolute
    defect of the worst pair is reported either way.
    """
    if name not in _IDENTITY_SUITES:
        raise UsageError(f"unknown identity suite {name!r}; pick one of {', '.join(IDENTITY_SUITE_NAMES)}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    trial_fn = _IDENTITY_SUITES[name]
    failures = 0
    failing: List[int] = []
    worst = 0.0
    for index in range(trials):
        trial_seed = mix_seed(master_seed, index)
        pairs = trial_fn(random.Random(trial_seed), backend)
        bad = False
        for got, want in pairs:
            if backend is Backend.EXACT:
                if got != want:
                    bad = True
            elif not scalar_close(got, want, policy):
                bad = True
            defect = abs(to_float(got) - to_float(want))
            if not math.isnan(defect):
                worst = max(worst, defect)
        if bad:
            failures += 1
            failing.append(trial_seed)
    return SuiteResult(
        suite=name,
        trials=trials,
        failures=failures,
        worst_slack=worst,
        failing_seeds=tuple(failing),
        backend=backend,
        master_seed=master_seed,
    )


# ---------------------------------------------------------------------------
# inequality suites: each trial returns a report


def _spec_function(
    rng: random.Random, a: int, m: int, hi: int, k0: int, bound: int = 9
) -> GridFunction:
    b = max(hi, a + m + 1)
    spec = FunctionSpec(
        a=a, m=m, b=b, zero_initials_from=k0, value_range=bound, seed=rng.getrandbits(64)
    )
    return gen_function(spec)


def _draw_weight(rng: random.Random, allow_zero: bool = False) -> Fraction:
    num = rng.randint(0 if allow_zero else 1, 8)
    den = rng.randint(1, 8)
    return Fraction(num, den)


def _trial_opial(rng: random.Random, backend: Backend, opts: dict) -> InequalityReport:
    mu = as_order(opts["mu"]) if opts.get("mu") else as_order(_draw_fraction(
        rng, Fraction(2), Fraction(3), non_integer=True
    ))
    m = mu.m
    a = rng.randint(0, 3)
    p_cap = min(2, m - 1)
    p = rng.randint(0, p_cap)
    t = a + m + rng.randint(0, 12)
    f = _maybe_float_grid(_spec_function(rng, a, m, t, k0=p), backend)
    inner = GridFunction(a + 1, tuple(_draw_weight(rng) for _ in range(a + 1, t + 1)))
    outer = GridFunction(a + m, tuple(_draw_weight(rng, allow_zero=True) for _ in range(a + m, t + 1)))
    inner = _maybe_float_grid(inner, backend)
    outer = _maybe_float_grid(outer, backend)
    params = OpialParams(
        mu=mu,
        p=p,
        gamma=opts.get("gamma", 2),
        delta=opts.get("delta", 2),
        inner_weights=inner,
        outer_weights=outer,
    )
    return opial_report(f, a, t, params, opts.get("g_variant", "paper"))


def _trial_opial_25(rng: random.Random, backend: Backend, opts: dict) -> InequalityReport:
    t = 3 + rng.randint(0, 17)
    f = _maybe_float_grid(_spec_function(rng, 0, 3, t, k0=0), backend)
    return opial_corollary_25(f, t)


def _trial_ostrowski(rng: random.Random, backend: Backend, opts: dict) -> InequalityReport:
    mu = as_order(opts["mu"]) if opts.get("mu") else as_order(_draw_fraction(
        rng, Fraction(0), Fraction(4), non_integer=True
    ))
    m = mu.m
    p = opts.get("p")
    if p is None:
        p = rng.randint(0, m - 1)
    a = rng.randint(0, 3)
    b = a + m + 1 + rng.randint(0, 11)
    f = _maybe_float_grid(_spec_function(rng, a, m, b, k0=min(p + 1, m)), backend)
    return ostrowski_report(f, a, b, mu, p)


def _trial_poincare(rng: random.Random, backend: Backend, opts: dict) -> InequalityReport:
    mu = as_order(opts["mu"]) if opts.get("mu") else as_order(_draw_fraction(
        rng, Fraction(0), Fraction(4), non_integer=True
    ))
    m = mu.m
    p = opts.get("p")
    if p is None:
        p = rng.randint(0, m - 1)
    a = rng.randint(0, 3)
    b = a + m + 1 + rng.randint(0, 11)
    f = _maybe_float_grid(_spec_function(rng, a, m, b, k0=p), backend)
    return poincare_report(f, a, b, mu, p, opts.get("gamma", 2), opts.get("delta", 2))


def _trial_sobolev(rng: random.Random, backend: Backend, opts: dict) -> InequalityReport:
    mu = as_order(opts["mu"]) if opts.get("mu") else as_order(_draw_fraction(
        rng, Fraction(0), Fraction(4), non_integer=True
    ))
    m = mu.m
    p = opts.get("p")
    if p is None:
        p = rng.randint(0, m - 1)
    a = rng.randint(0, 3)
    b = a + m + 1 + rng.randint(0, 11)
    f = _maybe_float_grid(_spec_function(rng, a, m, b, k0=p), backend)
    return sobolev_report(
        f, a, b, mu, p, opts.get("gamma", 2), opts.get("delta", 2), opts.get("r", 2)
    )


def _trial_avg_sobolev(rng: random.Random, backend: Backend, opts: dict) -> InequalityReport:
    if opts.get("mu_list"):
        orders = [as_order(o) for o in opts["mu_list"]]
    else:
        orders = [
            as_order(_draw_fraction(rng, Fraction(1), Fraction(2), non_integer=True)),
            as_order(_draw_fraction(rng, Fraction(2), Fraction(3), non_integer=True)),
        ]
    m_top = orders[-1].m
    a = rng.randint(0, 3)
    b = a + m_top + 1 + rng.randint(0, 9)
    f = _maybe_float_grid(_spec_function(rng, a, m_top, b, k0=0), backend)
    weights = []
    for _ in orders:
        vals = []
        for _tau in range(a + 1, b + 1):
            den = rng.randint(2, 8)
            num = rng.randint((den + 1) // 2, 2 * den)
            vals.append(Fraction(num, den))
        weights.append(_maybe_float_grid(GridFunction(a + 1, tuple(vals)), backend))
    return avg_sobolev_report(f, a, b, orders, weights, opts.get("r", 2))


_INEQUALITY_SUITES: Dict[str, Callable[[random.Random, Backend, dict], InequalityReport]] = {
    "opial": _trial_opial,
    "opial-25": _trial_opial_25,
    "ostrowski": _trial_ostrowski,
    "poincare": _trial_poincare,
    "sobolev": _trial_sobolev,
    "avg-sobolev": _trial_avg_sobolev,
}

INEQUALITY_SUITE_NAMES = tuple(sorted(_INEQUALITY_SUITES))


def run_inequality_suite(
    name: str,
    trials: int,
    master_seed: int,
    backend: Backend = Backend.EXACT,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
    **params,
) -> SuiteResult:
    """Run ``trials`` randomized bound evaluations of the named family.

    A trial fails when its slack drops below ``−(abs_eps + rel_eps·|rhs|)``,
    when the right-hand side is undefined (NaN), or when an exact squared
    certificate is present and violated.
    """
    if name not in _INEQUALITY_SUITES:
        raise UsageError(
            f"unknown inequality suite {name!r}; pick one of {', '.join(INEQUALITY_SUITE_NAMES)}"
        )
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    trial_fn = _INEQUALITY_SUITES[name]
    failures = 0
    failing: List[int] = []
    worst = math.inf
    for index in range(trials):
        trial_seed = mix_seed(master_seed, index)
        report = trial_fn(random.Random(trial_seed), backend, params)
        slack = to_float(report.slack)
        rhs = to_float(report.rhs)
        bad = False
        if math.isnan(slack) or math.isnan(rhs):
            bad = True
        elif slack < -(policy.abs_eps + policy.rel_eps * abs(rhs)):
            bad = True
        if report.components.get("exact_holds", 1) == 0:
            bad = True
        if not math.isnan(slack):
            worst = min(worst, slack)
        if bad:
            failures += 1
            failing.append(trial_seed)
    if math.isinf(worst):
        worst = float("nan")
    return SuiteResult(
        suite=name,
        trials=trials,
        failures=failures,
        worst_slack=worst,
        failing_seeds=tuple(failing),
        backend=backend,
        master_seed=master_seed,
    )


def replay_identity_trial(
    name: str, trial_seed: int, backend: Backend = Backend.EXACT
) -> List[Pair]:
    """Re-run the single identity trial behind a recorded seed; returns its
    (got, want) comparison pairs."""
    if name not in _IDENTITY_SUITES:
        raise UsageError(f"unknown identity suite {name!r}")
    return _IDENTITY_SUITES[name](random.Random(trial_seed), backend)


def replay_inequality_trial(
    name: str, trial_seed: int, backend: Backend = Backend.EXACT, **params
) -> InequalityReport:
    """Re-run the single inequality trial behind a recorded seed."""
    if name not in _INEQUALITY_SUITES:
        raise UsageError(f"unknown inequality suite {name!r}")
    return _INEQUALITY_SUITES[name](random.Random(trial_seed), backend, params)
