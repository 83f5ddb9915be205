"""Discrete Taylor representations, closed-form kernel sums, remainder bounds,
and the inverse construction used to synthesise test functions.

Every representation splits a value into ``poly_part + remainder``; on the
exact backend the split reproduces the function value with zero defect, which
is the backbone of the verification suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple, Union

from .errors import EmptyRangeError, OrderError, ParameterError, WindowError
from .fracops import (
    FractionalOrder,
    OrderInput,
    as_order,
    caputo_nabla_grid,
    kernel_weights,
)
from .grid import GridFunction, _coerce_values, nabla
from .scalars import Backend, Scalar, normalized_rising

__all__ = [
    "TaylorExpansion",
    "TaylorSeed",
    "construct_from_taylor_data",
    "eval_from_taylor_data",
    "kernel_sum_closed_form",
    "remainder_bound",
    "sum_rising_closed_form",
    "taylor_extended",
    "taylor_extended_series",
    "taylor_fractional",
    "taylor_fractional_series",
    "taylor_integer",
    "taylor_seed_of",
]


@dataclass(frozen=True)
class TaylorExpansion:
    """One evaluated representation: ``total = poly_part + remainder``."""

    base: int
    order: Union[int, FractionalOrder]
    p: int
    poly_part: Scalar
    remainder: Scalar
    total: Scalar


def _poly_weight(n: int, k: int, backend: Backend) -> Scalar:
    """Rising power of ``n`` with exponent ``k`` over ``k!`` for integer ``k ≥ 0``."""
    if n == 0:
        return (1.0 if backend is Backend.FLOAT else Fraction(1)) if k == 0 else (
            0.0 if backend is Backend.FLOAT else Fraction(0)
        )
    return kernel_weights(Fraction(k + 1), n, backend)[n - 1]


def _check_window(f: GridFunction, a: int, m: int, t: int) -> None:
    if t < a + m:
        raise WindowError(f"representation is valid only for t >= a+m = {a + m}, got t={t}")
    f.require_window(a - m + 1, t)


def taylor_integer(f: GridFunction, a: int, m: int, t: int) -> TaylorExpansion:
    """Degree-(m−1) backward expansion about ``a`` plus the m-th difference remainder."""
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"integer order m must be >= 1, got {m!r}")
    _check_window(f, a, m, t)
    backend = f.backend
    poly = f.zero()
    for k in range(m):
        poly += _poly_weight(t - a, k, backend) * nabla(f, a, k)
    w = kernel_weights(Fraction(m), t - a, backend)
    rem = f.zero()
    for tau in range(a + 1, t + 1):
        rem += w[t - tau] * nabla(f, tau, m)
    return TaylorExpansion(base=a, order=m, p=0, poly_part=poly, remainder=rem, total=poly + rem)


def _caputo_values(f: GridFunction, a: int, mu: FractionalOrder, t: int) -> GridFunction:
    # base a+1, defined on [a+1, t]
    return caputo_nabla_grid(f, a + 1, mu, hi=t)


def taylor_fractional(f: GridFunction, a: int, mu: OrderInput, t: int) -> TaylorExpansion:
    """Backward expansion of non-integer order μ about ``a``: the integer poly
    part of degree m−1 plus the order-μ kernel applied to the Caputo-like
    difference based at ``a+1``."""
    mu = as_order(mu).require_non_integer("fractional expansion")
    m = mu.m
    _check_window(f, a, m, t)
    backend = f.backend
    poly = f.zero()
    for k in range(m):
        poly += _poly_weight(t - a, k, backend) * nabla(f, a, k)
    cap = _caputo_values(f, a, mu, t)
    w = kernel_weights(mu, t - a, backend)
    rem = f.zero()
    for tau in range(a + 1, t + 1):
        rem += w[t - tau] * cap.at(tau)
    return TaylorExpansion(base=a, order=mu, p=0, poly_part=poly, remainder=rem, total=poly + rem)


def taylor_fractional_series(
    f: GridFunction, a: int, mu: OrderInput, t_max: int = None
) -> Dict[int, TaylorExpansion]:
    """Expansions at every ``t`` in ``[a+m, t_max]`` sharing one Caputo pass."""
    mu = as_order(mu).require_non_integer("fractional expansion")
    m = mu.m
    if t_max is None:
        t_max = f.hi
    _check_window(f, a, m, t_max)
    backend = f.backend
    cap = _caputo_values(f, a, mu, t_max)
    w = kernel_weights(mu, t_max - a, backend)
    initials = [nabla(f, a, k) for k in range(m)]
    out: Dict[int, TaylorExpansion] = {}
    for t in range(a + m, t_max + 1):
        poly = f.zero()
        for k in range(m):
            poly += _poly_weight(t - a, k, backend) * initials[k]
        rem = f.zero()
        for tau in range(a + 1, t + 1):
            rem += w[t - tau] * cap.at(tau)
        out[t] = TaylorExpansion(base=a, order=mu, p=0, poly_part=poly, remainder=rem, total=poly + rem)
    return out


def _check_extended_args(a: int, mu: FractionalOrder, p: int) -> None:
    if a < 0:
        raise ParameterError(f"extended representation needs a >= 0, got a={a}")
    if not isinstance(p, int) or p < 0:
        raise ParameterError(f"shift p must be a non-negative integer, got {p!r}")
    if p >= mu.value:
        raise OrderError(f"shift p={p} must be smaller than the order {mu.value}")


def taylor_extended(f: GridFunction, a: int, mu: OrderInput, p: int, t: int) -> TaylorExpansion:
    """Expansion of the p-th backward difference: ``total = ∇^p f(t)``, poly
    part summed for ``k = p .. m−1``, remainder kernel of order ``μ−p``."""
    mu = as_order(mu).require_non_integer("extended fractional expansion")
    _check_extended_args(a, mu, p)
    m = mu.m
    _check_window(f, a, m, t)
    backend = f.backend
    poly = f.zero()
    for k in range(p, m):
        poly += _poly_weight(t - a, k - p, backend) * nabla(f, a, k)
    cap = _caputo_values(f, a, mu, t)
    w = kernel_weights(mu.value - p, t - a, backend)
    rem = f.zero()
    for tau in range(a + 1, t + 1):
        rem += w[t - tau] * cap.at(tau)
    return TaylorExpansion(base=a, order=mu, p=p, poly_part=poly, remainder=rem, total=nabla(f, t, p))


def taylor_extended_series(
    f: GridFunction, a: int, mu: OrderInput, p: int, t_max: int = None
) -> Dict[int, TaylorExpansion]:
    """Extended expansions at every ``t`` in ``[a+m, t_max]`` sharing one Caputo pass."""
    mu = as_order(mu).require_non_integer("extended fractional expansion")
    _check_extended_args(a, mu, p)
    m = mu.m
    if t_max is None:
        t_max = f.hi
    _check_window(f, a, m, t_max)
    backend = f.backend
    cap = _caputo_values(f, a, mu, t_max)
    w = kernel_weights(mu.value - p, t_max - a, backend)
    initials = [nabla(f, a, k) for k in range(m)]
    out: Dict[int, TaylorExpansion] = {}
    for t in range(a + m, t_max + 1):
        poly = f.zero()
        for k in range(p, m):
            poly += _poly_weight(t - a, k - p, backend) * initials[k]
        rem = f.zero()
        for tau in range(a + 1, t + 1):
            rem += w[t - tau] * cap.at(tau)
        out[t] = TaylorExpansion(
            base=a, order=mu, p=p, poly_part=poly, remainder=rem, total=nabla(f, t, p)
        )
    return out


def kernel_sum_closed_form(a: int, mu: OrderInput, t: int, backend: Backend = Backend.EXACT) -> Scalar:
    """Closed form of the cumulative kernel mass ``Σ_{n=1}^{t−a} w_μ(n)``:
    the rising power of ``t−a`` with exponent μ over Γ(μ+1)."""
    mu = as_order(mu)
    if t <= a:
        raise EmptyRangeError(f"kernel sum needs t > a, got t={t}, a={a}")
    target = mu.value + 1
    return normalized_rising(t - a, target, target, backend)


def sum_rising_closed_form(
    a: int, m: int, b: int, nu: OrderInput, backend: Backend = Backend.EXACT
) -> Scalar:
    """Closed form of ``Σ_{j=a+m+1}^{b} (j−a)`` to the rising power ν, normalised
    by Γ(ν+2): the telescoped difference of two rising powers of exponent ν+1."""
    nu = as_order(nu)
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"m must be a positive integer, got {m!r}")
    if b <= a + m:
        raise EmptyRangeError(f"rising sum needs b > a+m, got b={b}, a+m={a + m}")
    target = nu.value + 2
    upper = normalized_rising(b - a, target, target, backend)
    lower = normalized_rising(m, target, target, backend)
    return upper - lower


def remainder_bound(
    f: GridFunction, a: int, mu: OrderInput, p: int, t: int
) -> Tuple[Scalar, Scalar]:
    """Deviation of ``∇^p f(t)`` from its poly part, and the kernel-mass bound:
    the rising power of ``t−a`` with exponent ``μ−p`` over Γ(μ−p+1) times the
    largest Caputo magnitude on ``(a, t]``.  Guarantees ``lhs ≤ rhs``."""
    mu = as_order(mu).require_non_integer("remainder bound")
    expansion = taylor_extended(f, a, mu, p, t)
    lhs = abs(expansion.total - expansion.poly_part)
    cap = _caputo_values(f, a, mu, t)
    max_cap = max(abs(cap.at(tau)) for tau in range(a + 1, t + 1))
    target = mu.value - p + 1
    coeff = normalized_rising(t - a, target, target, f.backend)
    return lhs, coeff * max_cap


@dataclass(frozen=True)
class TaylorSeed:
    """Construction data for a grid function: the first m backward differences
    at the base and the m-th difference on ``[a+1, b]``."""

    a: int
    m: int
    initial: tuple
    h: tuple

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or self.m < 1:
            raise ParameterError(f"m must be a positive integer, got {self.m!r}")
        initial = tuple(self.initial)
        h = tuple(self.h)
        if len(initial) != self.m:
            raise ParameterError(f"need exactly m={self.m} initial differences, got {len(initial)}")
        coerced = _coerce_values(initial + h)
        object.__setattr__(self, "initial", coerced[: len(initial)])
        object.__setattr__(self, "h", coerced[len(initial):])

    @property
    def b(self) -> int:
        return self.a + len(self.h)

    @property
    def backend(self) -> Backend:
        return Backend.FLOAT if isinstance(self.initial[0], float) else Backend.EXACT


def construct_from_taylor_data(seed: TaylorSeed) -> GridFunction:
    """Build ``f`` on ``[a−m+1, b]`` with the seed's initial differences at ``a``
    and its m-th difference values on ``[a+1, b]``.

    The left tail solves the lower-triangular binomial system relating the
    tail values to the initial differences; forward values unroll the m-term
    recurrence of the m-th difference.
    """
    a, m = seed.a, seed.m
    values: dict = {a: seed.initial[0]}
    for k in range(1, m):
        acc = seed.initial[k]
        for i in range(k):
            term = math.comb(k, i) * values[a - i]
            acc = acc - term if i % 2 == 0 else acc + term
        values[a - k] = acc if k % 2 == 0 else -acc
    for idx, t in enumerate(range(a + 1, seed.b + 1)):
        acc = seed.h[idx]
        for i in range(1, m + 1):
            term = math.comb(m, i) * values[t - i]
            acc = acc + term if i % 2 == 1 else acc - term
        values[t] = acc
    lo = a - m + 1
    return GridFunction(lo, tuple(values[t] for t in range(lo, seed.b + 1)))


def eval_from_taylor_data(seed: TaylorSeed, t: int) -> Scalar:
    """Evaluate the seeded function at ``t ≥ a+m`` directly from the expansion,
    without constructing the grid.  Independent of the recurrence unroll."""
    a, m = seed.a, seed.m
    if t < a + m:
        raise WindowError(f"direct evaluation is valid only for t >= a+m = {a + m}, got t={t}")
    if t > seed.b:
        raise WindowError(f"t={t} beyond the seeded range [{a + 1}, {seed.b}]")
    backend = seed.backend
    acc: Scalar = 0.0 if backend is Backend.FLOAT else Fraction(0)
    for k in range(m):
        acc += _poly_weight(t - a, k, backend) * seed.initial[k]
    w = kernel_weights(Fraction(m), t - a, backend)
    for tau in range(a + 1, t + 1):
        acc += w[t - tau] * seed.h[tau - a - 1]
    return acc


def taylor_seed_of(f: GridFunction, a: int, m: int, b: int = None) -> TaylorSeed:
    """Extract the seed that reconstructs ``f`` on ``[a−m+1, b]``."""
    if b is None:
        b = f.hi
    f.require_window(a - m + 1, b)
    initial = tuple(nabla(f, a, k) for k in range(m))
    h = tuple(nabla(f, tau, m) for tau in range(a + 1, b + 1))
    return TaylorSeed(a=a, m=m, initial=initial, h=h)
