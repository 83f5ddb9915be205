"""Evaluators for the five bound families: weighted-product (Opial-type),
average-deviation (Ostrowski-type), norm-vs-norm (Poincaré- and Sobolev-type)
and the averaged multi-order Sobolev variant.

Each evaluator returns an :class:`InequalityReport` carrying the left- and
right-hand sides, the slack ``rhs − lhs``, and every intermediate component.
Fractional powers and roots are evaluated in floats; whenever the exponent
combination keeps both sides rational (``gamma = delta = 2``, and ``r = 2``
where an outer root appears), the report additionally carries exact squared
certificates computed in big rationals.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Union

from .errors import (
    BoundaryConditionError,
    OrderError,
    ParameterError,
    WindowError,
)
from .fracops import FractionalOrder, OrderInput, as_order, caputo_nabla_grid, kernel_weights
from .grid import GridFunction, nabla
from .scalars import (
    Backend,
    DEFAULT_TOLERANCE,
    Scalar,
    TolerancePolicy,
    parse_order,
    to_float,
)
from .taylor import sum_rising_closed_form

__all__ = [
    "InequalityReport",
    "OpialParams",
    "avg_sobolev_report",
    "g_bound",
    "opial_corollary_25",
    "opial_report",
    "ostrowski_report",
    "poincare_report",
    "sobolev_report",
]

Exponent = Union[Fraction, float]


def as_exponent(value) -> Exponent:
    """Normalise an exponent parameter: rationals stay exact, floats stay float."""
    if isinstance(value, bool):
        raise ParameterError("booleans are not exponents")
    if isinstance(value, str):
        return parse_order(value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(int(value)) if value.is_integer() else value
    raise ParameterError(f"unsupported exponent type {type(value).__name__}")


def _is_integral(e: Exponent) -> bool:
    return isinstance(e, Fraction) and e.denominator == 1


def _pow(base: Scalar, e: Exponent) -> Scalar:
    """``base**e``; exact when the exponent is an integer, float otherwise."""
    if _is_integral(e):
        return base ** int(e)
    return float(base) ** float(e)


def _root(x: Scalar, e: Exponent) -> Scalar:
    """``x**(1/e)``; identity for e = 1, float (NaN below zero) otherwise."""
    if _is_integral(e) and int(e) == 1:
        return x
    v = float(x)
    if v < 0.0:
        return float("nan")
    return v ** (1.0 / float(e))


def _mul(x: Scalar, y: Scalar) -> Scalar:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x * y
    return float(x) * float(y)


def _div(x: Exponent, y: Exponent) -> Exponent:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x / y
    return float(x) / float(y)


def _check_conjugate(gamma: Exponent, delta: Exponent, policy: TolerancePolicy) -> None:
    if not (gamma > 1 and delta > 1):
        raise ParameterError(f"exponents must exceed 1, got gamma={gamma}, delta={delta}")
    if isinstance(gamma, Fraction) and isinstance(delta, Fraction):
        if Fraction(1) / gamma + Fraction(1) / delta != 1:
            raise ParameterError(f"gamma={gamma} and delta={delta} are not conjugate")
        return
    defect = abs(1.0 / float(gamma) + 1.0 / float(delta) - 1.0)
    if defect > policy.abs_eps + policy.rel_eps:
        raise ParameterError(f"gamma={gamma} and delta={delta} are not conjugate")


def _require_zero_initials(
    f: GridFunction, a: int, ks: Sequence[int], policy: TolerancePolicy, context: str
) -> None:
    for k in ks:
        v = nabla(f, a, k)
        if isinstance(v, Fraction):
            bad = v != 0
        else:
            bad = abs(v) > policy.abs_eps
        if bad:
            raise BoundaryConditionError(
                f"{context} requires the k={k} backward difference at {a} to vanish, got {v}"
            )


def _fmt_param(value) -> Union[str, int, float]:
    if isinstance(value, FractionalOrder):
        return str(value)
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    return value


@dataclass(frozen=True)
class InequalityReport:
    """One evaluated bound: ``slack = rhs − lhs``; ``holds`` per tolerance."""

    name: str
    params: dict
    lhs: Scalar
    rhs: Scalar
    slack: Scalar
    holds: bool
    components: dict


def _make_report(
    name: str,
    params: dict,
    lhs: Scalar,
    rhs: Scalar,
    components: dict,
    policy: TolerancePolicy,
) -> InequalityReport:
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        slack: Scalar = rhs - lhs
        holds = slack >= -policy.abs_eps
    else:
        slack = to_float(rhs) - to_float(lhs)
        holds = (not math.isnan(slack)) and slack >= -policy.abs_eps
    return InequalityReport(
        name=name, params=params, lhs=lhs, rhs=rhs, slack=slack, holds=holds, components=components
    )


def g_bound(g: GridFunction, a: int, m: int, t: int, variant: str = "paper") -> Scalar:
    """Endpoint combination of a nondecreasing series that dominates the
    accumulated product ``Σ_{t'=a+m}^{t} g(t')·(g(t')−g(t'−1))``.

    ``paper`` adds the cross term and is an upper bound for every
    nondecreasing non-negative series; ``tight`` subtracts it (the sharper
    telescoped combination), which is only guaranteed when the series is
    convex and may even go negative otherwise.
    """
    if variant not in ("paper", "tight"):
        raise ParameterError(f"unknown g-bound variant {variant!r}")
    if t < a + m:
        raise WindowError(f"g bound needs t >= a+m = {a + m}, got t={t}")
    g.require_window(a + m - 2, t)
    gt = g.at(t)
    gt1 = g.at(t - 1)
    c1 = g.at(a + m - 1)
    c2 = g.at(a + m - 2)
    base = 2 * (gt * gt - c1 * c1) + (gt1 * gt1 - c2 * c2) / 2
    cross = 2 * (gt * gt1 - c1 * c2)
    return base + cross if variant == "paper" else base - cross


@dataclass(frozen=True)
class OpialParams:
    """Weights and exponents for the weighted-product bound.

    ``inner_weights`` must be positive on ``[a+1, t]``; ``outer_weights``
    non-negative on ``[a+m, t]``; ``gamma`` and ``delta`` conjugate; the order
    must exceed 2 (so its ceiling is at least 3) and the shift ``p``.
    """

    mu: FractionalOrder
    p: int
    gamma: Exponent
    delta: Exponent
    inner_weights: GridFunction
    outer_weights: GridFunction

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", as_order(self.mu).require_non_integer("weighted-product bound"))
        object.__setattr__(self, "gamma", as_exponent(self.gamma))
        object.__setattr__(self, "delta", as_exponent(self.delta))
        if self.mu.value <= 2 or self.mu.m < 3:
            raise ParameterError(f"order must exceed 2 (ceiling >= 3), got {self.mu.value}")
        if not isinstance(self.p, int) or self.p < 0:
            raise ParameterError(f"shift p must be a non-negative integer, got {self.p!r}")
        if self.p >= self.mu.value:
            raise OrderError(f"shift p={self.p} must be smaller than the order {self.mu.value}")
        _check_conjugate(self.gamma, self.delta, DEFAULT_TOLERANCE)
        for tau in self.inner_weights.domain.points():
            if not self.inner_weights.at(tau) > 0:
                raise ParameterError(f"inner weight at {tau} must be positive")
        for tp in self.outer_weights.domain.points():
            if self.outer_weights.at(tp) < 0:
                raise ParameterError(f"outer weight at {tp} must be non-negative")


def opial_report(
    f: GridFunction,
    a: int,
    t: int,
    params: OpialParams,
    g_variant: str = "paper",
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """Weighted product of ``|∇^p f|`` and the Caputo-like difference against
    the Hölder bound ``K·G^{1/δ}``."""
    if g_variant not in ("paper", "tight"):
        raise ParameterError(f"unknown g-bound variant {g_variant!r}")
    mu, p = params.mu, params.p
    m = mu.m
    if a < 0:
        raise ParameterError(f"base must be non-negative, got a={a}")
    if t < a + m:
        raise WindowError(f"evaluation point must satisfy t >= a+m = {a + m}, got t={t}")
    C, D = params.inner_weights, params.outer_weights
    if C.backend is not f.backend or D.backend is not f.backend:
        raise ParameterError("weight grids must share the function's backend")
    C.require_window(a + 1, t)
    D.require_window(a + m, t)
    f.require_window(a - m + 1, t)
    _require_zero_initials(f, a, range(p, m), policy, "weighted-product bound")
    gamma, delta = params.gamma, params.delta
    backend = f.backend

    cap = caputo_nabla_grid(f, a + 1, mu, hi=t)
    w = kernel_weights(mu.value - p, t - a, backend)

    g_vals: List[Scalar] = []
    acc: Scalar = Fraction(0) if _is_integral(delta) and backend is Backend.EXACT else 0.0
    for tau in range(a + 1, t + 1):
        acc = acc + _pow(C.at(tau) * abs(cap.at(tau)), delta)
        g_vals.append(acc)
    g = GridFunction(a + 1, tuple(g_vals))

    theta_pow: List[Scalar] = []
    for tp in range(a + m, t + 1):
        s = f.zero() if _is_integral(gamma) else 0.0
        for tau in range(a + 1, tp + 1):
            s = s + _pow(w[tp - tau] / C.at(tau), gamma)
        theta_pow.append(s)

    k_pow = f.zero() if _is_integral(gamma) else 0.0
    for idx, tp in enumerate(range(a + m, t + 1)):
        k_pow = k_pow + _mul(_pow(D.at(tp) / C.at(tp), gamma), theta_pow[idx])
    k_factor = _root(k_pow, gamma)

    lhs = f.zero()
    for tp in range(a + m, t + 1):
        lhs = lhs + D.at(tp) * abs(nabla(f, tp, p)) * abs(cap.at(tp))

    bound_paper = g_bound(g, a, m, t, "paper")
    bound_tight = g_bound(g, a, m, t, "tight")
    chosen = bound_paper if g_variant == "paper" else bound_tight
    rhs = _mul(k_factor, _root(chosen, delta))

    gamma_norm = math.gamma(float(mu.value - p))
    components: Dict[str, object] = {
        "theta": [to_float(_root(tpw, gamma)) * gamma_norm for tpw in theta_pow],
        "g": [to_float(v) for v in g_vals],
        "g_bound_paper": to_float(bound_paper),
        "g_bound_tight": to_float(bound_tight),
        "k_factor": to_float(k_factor),
        "max_caputo": max(to_float(abs(cap.at(tau))) for tau in range(a + 1, t + 1)),
    }
    if (
        backend is Backend.EXACT
        and gamma == 2
        and delta == 2
        and isinstance(k_pow, Fraction)
        and isinstance(chosen, Fraction)
        and isinstance(lhs, Fraction)
    ):
        lhs_sq = lhs * lhs
        rhs_sq = k_pow * chosen
        components["lhs_squared"] = lhs_sq
        components["rhs_squared"] = rhs_sq
        components["exact_holds"] = 1 if lhs_sq <= rhs_sq else 0
    params_echo = {
        "a": a,
        "t": t,
        "mu": _fmt_param(mu),
        "p": p,
        "gamma": _fmt_param(gamma),
        "delta": _fmt_param(delta),
        "g_variant": g_variant,
    }
    return _make_report("opial", params_echo, lhs, rhs, components, policy)


def opial_corollary_25(
    f: GridFunction, t: int, policy: TolerancePolicy = DEFAULT_TOLERANCE
) -> InequalityReport:
    """Specialised weighted-product bound of order 5/2 about base 0 with unit
    weights and square exponents; requires ``f(0) = f(−1) = f(−2) = 0``."""
    if t < 3:
        raise WindowError(f"specialised bound needs t >= 3, got t={t}")
    f.require_window(-2, t)
    for point in (0, -1, -2):
        v = f.at(point)
        bad = v != 0 if isinstance(v, Fraction) else abs(v) > policy.abs_eps
        if bad:
            raise BoundaryConditionError(f"f({point}) must vanish, got {v}")
    one: Scalar = 1.0 if f.backend is Backend.FLOAT else Fraction(1)
    params = OpialParams(
        mu=Fraction(5, 2),
        p=0,
        gamma=2,
        delta=2,
        inner_weights=GridFunction.constant(1, t, one),
        outer_weights=GridFunction.constant(3, t, one),
    )
    report = opial_report(f, 0, t, params, "paper", policy)
    prefactor = 1.0 / math.gamma(2.5)
    expected = 4.0 / (3.0 * math.sqrt(math.pi))
    if abs(prefactor - expected) > 1e-12 * expected:
        raise ParameterError("kernel prefactor drifted from 4/(3*sqrt(pi))")
    components = dict(report.components)
    components["prefactor"] = prefactor
    components["prefactor_expected"] = expected
    return dataclasses.replace(report, name="opial-25", components=components)


def ostrowski_report(
    f: GridFunction,
    a: int,
    b: int,
    mu: OrderInput,
    p: int,
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """Deviation of the tail average of ``∇^p f`` from its base value against
    the telescoped kernel-mass bound.  Rational end to end on the exact backend."""
    mu = as_order(mu).require_non_integer("average-deviation bound")
    m = mu.m
    if a < 0:
        raise ParameterError(f"base must be non-negative, got a={a}")
    if not isinstance(p, int) or p < 0:
        raise ParameterError(f"shift p must be a non-negative integer, got {p!r}")
    if p >= mu.value:
        raise OrderError(f"shift p={p} must be smaller than the order {mu.value}")
    if b <= a + m:
        raise WindowError(f"average needs b > a+m = {a + m}, got b={b}")
    f.require_window(a - m + 1, b)
    _require_zero_initials(f, a, range(p + 1, m), policy, "average-deviation bound")

    count = b - a - m
    total = f.zero()
    for j in range(a + m + 1, b + 1):
        total = total + nabla(f, j, p)
    average = total / count
    base_value = nabla(f, a, p)
    lhs = abs(average - base_value)

    cap = caputo_nabla_grid(f, a + 1, mu, hi=b)
    max_cap = max(abs(cap.at(tau)) for tau in range(a + 1, b + 1))
    coefficient = sum_rising_closed_form(a, m, b, mu.value - p, f.backend) / count
    rhs = coefficient * max_cap

    components: Dict[str, object] = {
        "average": to_float(average),
        "base_value": to_float(base_value),
        "coefficient": to_float(coefficient),
        "max_caputo": to_float(max_cap),
    }
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        components["exact_holds"] = 1 if lhs <= rhs else 0
    params_echo = {"a": a, "b": b, "mu": _fmt_param(mu), "p": p}
    return _make_report("ostrowski", params_echo, lhs, rhs, components, policy)


def _kernel_power_sums(
    order: Fraction,
    a: int,
    m_start: int,
    b: int,
    gamma: Exponent,
    outer_exp: Exponent,
    backend: Backend,
) -> Scalar:
    """``Σ_{j=a+m_start}^{b} ( Σ_{τ=a+1}^{j} w(j−τ+1)^γ )^{outer_exp}``."""
    if b < a + m_start:
        raise WindowError(f"kernel power sum needs b >= a+m = {a + m_start}, got b={b}")
    w = kernel_weights(order, b - a, backend)
    inner_zero: Scalar = Fraction(0) if backend is Backend.EXACT and _is_integral(gamma) else 0.0
    acc = None
    for j in range(a + m_start, b + 1):
        inner = inner_zero
        for tau in range(a + 1, j + 1):
            inner = inner + _pow(w[j - tau], gamma)
        term = _pow(inner, outer_exp)
        acc = term if acc is None else acc + term
    return acc


def poincare_report(
    f: GridFunction,
    a: int,
    b: int,
    mu: OrderInput,
    p: int,
    gamma="2",
    delta="2",
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """δ-power norm of ``∇^p f`` against the kernel-mass factor times the
    δ-power norm of the Caputo-like difference."""
    mu = as_order(mu).require_non_integer("norm bound")
    m = mu.m
    gamma = as_exponent(gamma)
    delta = as_exponent(delta)
    _check_conjugate(gamma, delta, policy)
    if a < 0:
        raise ParameterError(f"base must be non-negative, got a={a}")
    if not isinstance(p, int) or p < 0:
        raise ParameterError(f"shift p must be a non-negative integer, got {p!r}")
    if p >= mu.value:
        raise OrderError(f"shift p={p} must be smaller than the order {mu.value}")
    if b < a + m:
        raise WindowError(f"norm window needs b >= a+m = {a + m}, got b={b}")
    f.require_window(a - m + 1, b)
    _require_zero_initials(f, a, range(p, m), policy, "norm bound")
    backend = f.backend

    kernel_factor = _kernel_power_sums(
        mu.value - p, a, m, b, gamma, _div(delta, gamma), backend
    )
    cap = caputo_nabla_grid(f, a + 1, mu, hi=b)
    caputo_norm = None
    for tau in range(a + 1, b + 1):
        term = _pow(abs(cap.at(tau)), delta)
        caputo_norm = term if caputo_norm is None else caputo_norm + term
    lhs = None
    for j in range(a + m, b + 1):
        term = _pow(abs(nabla(f, j, p)), delta)
        lhs = term if lhs is None else lhs + term
    rhs = _mul(kernel_factor, caputo_norm)

    components: Dict[str, object] = {
        "kernel_factor": to_float(kernel_factor),
        "caputo_norm": to_float(caputo_norm),
        "max_caputo": max(to_float(abs(cap.at(tau))) for tau in range(a + 1, b + 1)),
    }
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        components["exact_holds"] = 1 if lhs <= rhs else 0
    params_echo = {
        "a": a,
        "b": b,
        "mu": _fmt_param(mu),
        "p": p,
        "gamma": _fmt_param(gamma),
        "delta": _fmt_param(delta),
    }
    return _make_report("poincare", params_echo, lhs, rhs, components, policy)


def sobolev_report(
    f: GridFunction,
    a: int,
    b: int,
    mu: OrderInput,
    p: int,
    gamma="2",
    delta="2",
    r="2",
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """r-norm of ``∇^p f`` against the mixed kernel/Caputo norm bound."""
    mu = as_order(mu).require_non_integer("norm bound")
    m = mu.m
    gamma = as_exponent(gamma)
    delta = as_exponent(delta)
    r = as_exponent(r)
    _check_conjugate(gamma, delta, policy)
    if r < 1:
        raise ParameterError(f"norm exponent r must be >= 1, got {r}")
    if a < 0:
        raise ParameterError(f"base must be non-negative, got a={a}")
    if not isinstance(p, int) or p < 0:
        raise ParameterError(f"shift p must be a non-negative integer, got {p!r}")
    if p >= mu.value:
        raise OrderError(f"shift p={p} must be smaller than the order {mu.value}")
    if b < a + m:
        raise WindowError(f"norm window needs b >= a+m = {a + m}, got b={b}")
    f.require_window(a - m + 1, b)
    _require_zero_initials(f, a, range(p, m), policy, "norm bound")
    backend = f.backend

    lhs_pow = None
    for j in range(a + m, b + 1):
        term = _pow(abs(nabla(f, j, p)), r)
        lhs_pow = term if lhs_pow is None else lhs_pow + term
    lhs = _root(lhs_pow, r)

    kernel_factor = _kernel_power_sums(mu.value - p, a, m, b, gamma, _div(r, gamma), backend)
    cap = caputo_nabla_grid(f, a + 1, mu, hi=b)
    caputo_norm = None
    for tau in range(a + 1, b + 1):
        term = _pow(abs(cap.at(tau)), delta)
        caputo_norm = term if caputo_norm is None else caputo_norm + term
    rhs = _mul(_root(kernel_factor, r), _root(caputo_norm, delta))

    components: Dict[str, object] = {
        "kernel_factor": to_float(kernel_factor),
        "caputo_norm": to_float(caputo_norm),
        "max_caputo": max(to_float(abs(cap.at(tau))) for tau in range(a + 1, b + 1)),
    }
    if (
        gamma == 2
        and delta == 2
        and r == 2
        and isinstance(lhs_pow, Fraction)
        and isinstance(kernel_factor, Fraction)
        and isinstance(caputo_norm, Fraction)
    ):
        components["lhs_squared"] = lhs_pow
        components["rhs_squared"] = kernel_factor * caputo_norm
        components["exact_holds"] = 1 if lhs_pow <= kernel_factor * caputo_norm else 0
    params_echo = {
        "a": a,
        "b": b,
        "mu": _fmt_param(mu),
        "p": p,
        "gamma": _fmt_param(gamma),
        "delta": _fmt_param(delta),
        "r": _fmt_param(r),
    }
    return _make_report("sobolev", params_echo, lhs, rhs, components, policy)


def avg_sobolev_report(
    f: GridFunction,
    a: int,
    b: int,
    orders: Sequence[OrderInput],
    weight_grids: Sequence[GridFunction],
    r="2",
    policy: TolerancePolicy = DEFAULT_TOLERANCE,
) -> InequalityReport:
    """r-norm of ``f`` against the averaged weighted Caputo energies across an
    ascending family of orders."""
    orders = [as_order(o).require_non_integer("averaged norm bound") for o in orders]
    if len(orders) == 0:
        raise ParameterError("need at least one order")
    for lo_, hi_ in zip(orders, orders[1:]):
        if not lo_.value < hi_.value:
            raise ParameterError("orders must be strictly increasing")
    if len(weight_grids) != len(orders):
        raise ParameterError("need one weight grid per order")
    r = as_exponent(r)
    if r < 1:
        raise ParameterError(f"norm exponent r must be >= 1, got {r}")
    k = len(orders)
    m_top = orders[-1].m
    if a < 0:
        raise ParameterError(f"base must be non-negative, got a={a}")
    if b <= a + m_top:
        raise WindowError(f"averaged bound needs b > a+m = {a + m_top}, got b={b}")
    f.require_window(a - m_top + 1, b)
    _require_zero_initials(f, a, range(0, m_top), policy, "averaged norm bound")
    backend = f.backend
    for C in weight_grids:
        if C.backend is not backend:
            raise ParameterError("weight grids must share the function's backend")
        C.require_window(a + 1, b)
        for tau in range(a + 1, b + 1):
            if not C.at(tau) > 0:
                raise ParameterError(f"weights must be positive, got {C.at(tau)} at {tau}")

    two = Fraction(2)
    b_terms: List[Scalar] = []
    for order, C in zip(orders, weight_grids):
        cap = caputo_nabla_grid(f, a + 1, order, hi=b)
        acc = f.zero()
        for tau in range(a + 1, b + 1):
            acc = acc + C.at(tau) * cap.at(tau) * cap.at(tau)
        b_terms.append(acc)

    delta_candidates: List[Scalar] = []
    for order in orders:
        inner = _kernel_power_sums(order.value, a, order.m, b, two, _div(r, two), backend)
        delta_candidates.append(_pow(inner, _div(two, r)))
    delta_star = max(delta_candidates, key=to_float)

    rho_star = max(
        (1 / C.at(tau) if isinstance(C.at(tau), Fraction) else 1.0 / C.at(tau))
        for C in weight_grids
        for tau in range(a + 1, b + 1)
    )

    lhs_pow = None
    for j in range(a + m_top, b + 1):
        term = _pow(abs(f.at(j)), r)
        lhs_pow = term if lhs_pow is None else lhs_pow + term
    lhs = _root(lhs_pow, r)

    mean_b = sum(b_terms[1:], b_terms[0]) / k
    rhs_sq = _mul(_mul(delta_star, rho_star), mean_b)
    rhs = _root(rhs_sq, two)

    components: Dict[str, object] = {
        "b_terms": [to_float(v) for v in b_terms],
        "delta_star": to_float(delta_star),
        "rho_star": to_float(rho_star),
    }
    if r == 2 and isinstance(lhs_pow, Fraction) and isinstance(rhs_sq, Fraction):
        components["lhs_squared"] = lhs_pow
        components["rhs_squared"] = rhs_sq
        components["exact_holds"] = 1 if lhs_pow <= rhs_sq else 0
    params_echo = {
        "a": a,
        "b": b,
        "mu_list": [_fmt_param(o) for o in orders],
        "r": _fmt_param(r),
        "k": k,
    }
    return _make_report("avg-sobolev", params_echo, lhs, rhs, components, policy)
