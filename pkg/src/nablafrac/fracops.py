"""Fractional backward sums, their delta-form dual, and the Caputo-like difference.

All kernels are built from the normalised weights ``w_ν(n)`` produced by
:func:`kernel_weights`: ``w_ν(1) = 1`` and ``w_ν(n+1) = w_ν(n)·(ν+n−1)/n``.
On the exact backend the recurrence runs in big rationals, which is what
makes every identity in this package checkable with zero tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import EmptyRangeError, OrderError, ParameterError
from .grid import GridFunction, nabla
from .scalars import Backend, Scalar, parse_order

__all__ = [
    "FractionalOrder",
    "KernelRow",
    "as_order",
    "caputo_nabla",
    "caputo_nabla_grid",
    "delta_frac_sum",
    "frac_sum",
    "frac_sum_grid",
    "kernel_weights",
]


@dataclass(frozen=True)
class FractionalOrder:
    """A positive rational order together with its ceiling."""

    value: Fraction

    def __post_init__(self) -> None:
        if isinstance(self.value, (float, bool)):
            raise OrderError(f"orders must be rational, got {self.value!r}")
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value <= 0:
            raise OrderError(f"order must be positive, got {self.value}")

    @property
    def m(self) -> int:
        """Ceiling of the order."""
        return math.ceil(self.value)

    @property
    def is_integer(self) -> bool:
        return self.value.denominator == 1

    @classmethod
    def parse(cls, text: str) -> "FractionalOrder":
        return cls(parse_order(text))

    def require_non_integer(self, context: str) -> "FractionalOrder":
        if self.is_integer:
            raise OrderError(f"{context} requires a non-integer order, got {self.value}")
        return self

    def __str__(self) -> str:
        return str(self.value)


OrderInput = Union[FractionalOrder, Fraction, int, str]


def as_order(value: OrderInput) -> FractionalOrder:
    if isinstance(value, FractionalOrder):
        return value
    if isinstance(value, str):
        return FractionalOrder.parse(value)
    return FractionalOrder(value)


_KERNEL_CACHE: dict = {}


def kernel_weights(nu, length: int, backend: Backend = Backend.EXACT) -> tuple:
    """First ``length`` kernel weights of order ν, ``weights[n-1] = w_ν(n)``.

    Rows are memoised per (ν, backend) and grown by the recurrence; extension
    publishes a fresh tuple, so concurrent readers are safe.
    """
    nu = as_order(nu).value
    if not isinstance(length, int) or length < 0:
        raise ParameterError(f"length must be a non-negative integer, got {length!r}")
    if length == 0:
        return ()
    key = (nu, backend)
    row = _KERNEL_CACHE.get(key, ())
    if len(row) >= length:
        return row[:length]
    ws = list(row)
    if not ws:
        ws.append(Fraction(1) if backend is Backend.EXACT else 1.0)
    if backend is Backend.EXACT:
        while len(ws) < length:
            n = len(ws)
            ws.append(ws[-1] * (nu + n - 1) / n)
    else:
        nu_f = float(nu)
        while len(ws) < length:
            n = len(ws)
            ws.append(ws[-1] * (nu_f + n - 1.0) / n)
    full = tuple(ws)
    _KERNEL_CACHE[key] = full
    return full[:length]


@dataclass(frozen=True)
class KernelRow:
    """A materialised row of kernel weights anchored at a base point."""

    base: int
    order: FractionalOrder
    weights: tuple

    @classmethod
    def build(
        cls,
        base: int,
        order: OrderInput,
        length: int,
        backend: Backend = Backend.EXACT,
    ) -> "KernelRow":
        order = as_order(order)
        return cls(base=base, order=order, weights=kernel_weights(order, length, backend))


def frac_sum(f: GridFunction, a: int, nu: OrderInput, t: int) -> Scalar:
    """Order-ν backward fractional sum of ``f`` from base ``a`` at ``t``:
    ``Σ_{s=a}^{t} w_ν(t−s+1)·f(s)``.  Integer ν reproduces the iterated sum."""
    nu = as_order(nu)
    if t < a:
        raise EmptyRangeError(f"fractional sum needs t >= a, got t={t} < a={a}")
    f.require_window(a, t)
    w = kernel_weights(nu, t - a + 1, f.backend)
    acc = f.zero()
    for s in range(a, t + 1):
        acc += w[t - s] * f.at(s)
    return acc


def frac_sum_grid(f: GridFunction, a: int, nu: OrderInput, hi: int = None) -> GridFunction:
    """Fractional sum evaluated at every ``t`` in ``[a, hi]`` (default ``f.hi``)."""
    nu = as_order(nu)
    if hi is None:
        hi = f.hi
    if hi < a:
        raise EmptyRangeError(f"fractional sum grid needs hi >= a, got hi={hi} < a={a}")
    f.require_window(a, hi)
    w = kernel_weights(nu, hi - a + 1, f.backend)
    out = []
    for t in range(a, hi + 1):
        acc = f.zero()
        for s in range(a, t + 1):
            acc += w[t - s] * f.at(s)
        out.append(acc)
    return GridFunction(a, tuple(out))


def delta_frac_sum(f: GridFunction, a: int, nu: OrderInput, j: int) -> Scalar:
    """Delta-form fractional sum of order ν evaluated at the shifted point
    ``a + ν + j``: the falling-power kernel ``(a+ν+j−s−1)`` to the power ν−1,
    normalised by Γ(ν), summed for ``s = a .. a+j``."""
    nu = as_order(nu)
    if not isinstance(j, int) or j < 0:
        raise ParameterError(f"shift j must be a non-negative integer, got {j!r}")
    f.require_window(a, a + j)
    # (a+ν+j−s−1) falling power of (ν−1) over Γ(ν) reduces to w_ν(a+j−s+1).
    w = kernel_weights(nu, j + 1, f.backend)
    acc = f.zero()
    for s in range(a, a + j + 1):
        acc += w[a + j - s] * f.at(s)
    return acc


def caputo_nabla(f: GridFunction, a: int, mu: OrderInput, t: int) -> Scalar:
    """Caputo-like backward difference of non-integer order μ: the fractional
    sum of order ``m−μ`` (m = ⌈μ⌉) applied to the m-th backward difference."""
    mu = as_order(mu).require_non_integer("caputo-like nabla difference")
    m = mu.m
    if t < a:
        raise EmptyRangeError(f"caputo difference needs t >= a, got t={t} < a={a}")
    f.require_window(a - m, t)
    w = kernel_weights(m - mu.value, t - a + 1, f.backend)
    acc = f.zero()
    for s in range(a, t + 1):
        acc += w[t - s] * nabla(f, s, m)
    return acc


def caputo_nabla_grid(f: GridFunction, a: int, mu: OrderInput, hi: int = None) -> GridFunction:
    """Caputo-like difference evaluated at every ``t`` in ``[a, hi]``."""
    mu = as_order(mu).require_non_integer("caputo-like nabla difference")
    m = mu.m
    if hi is None:
        hi = f.hi
    if hi < a:
        raise EmptyRangeError(f"caputo grid needs hi >= a, got hi={hi} < a={a}")
    f.require_window(a - m, hi)
    h = GridFunction(a, tuple(nabla(f, s, m) for s in range(a, hi + 1)))
    return frac_sum_grid(h, a, m - mu.value, hi)
