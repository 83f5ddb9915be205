"""Grid functions on integer intervals and the integer-order difference operators.

A :class:`GridFunction` stores scalar values on a contiguous interval
``[lo, hi]`` with one backend throughout.  Every operator checks its domain
and fails loudly instead of zero-padding, so validity windows of the
representations built on top become checkable preconditions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import DomainError, OrderError, ParameterError
from .scalars import Backend, Scalar

__all__ = [
    "GridDomain",
    "GridFunction",
    "delta",
    "falling_factorial",
    "nabla",
    "rising_factorial",
]


@dataclass(frozen=True)
class GridDomain:
    """Closed integer interval ``[lo, hi]``."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise ParameterError("domain bounds must be integers")
        if self.hi < self.lo:
            raise DomainError(f"empty domain [{self.lo}, {self.hi}]")

    def __contains__(self, t: int) -> bool:
        return self.lo <= t <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def points(self) -> range:
        return range(self.lo, self.hi + 1)


def _coerce_values(values: Sequence) -> tuple:
    if len(values) == 0:
        raise ParameterError("a grid function needs at least one value")
    out = []
    kind = None
    for v in values:
        if isinstance(v, bool):
            raise ParameterError("booleans are not grid values")
        if isinstance(v, float):
            this = Backend.FLOAT
        elif isinstance(v, (int, Fraction)):
            this = Backend.EXACT
            v = Fraction(v)
        else:
            raise ParameterError(f"unsupported grid value type {type(v).__name__}")
        if kind is None:
            kind = this
        elif kind is not this:
            raise ParameterError("grid values must not mix exact and float backends")
        out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class GridFunction:
    """Scalar values on a contiguous integer interval, one backend throughout."""

    lo: int
    values: tuple

    def __post_init__(self) -> None:
        if not isinstance(self.lo, int) or isinstance(self.lo, bool):
            raise ParameterError("lo must be an integer")
        object.__setattr__(self, "values", _coerce_values(tuple(self.values)))

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    @property
    def domain(self) -> GridDomain:
        return GridDomain(self.lo, self.hi)

    @property
    def backend(self) -> Backend:
        return Backend.FLOAT if isinstance(self.values[0], float) else Backend.EXACT

    def at(self, t: int) -> Scalar:
        if t < self.lo or t > self.hi:
            raise DomainError(f"index {t} outside grid domain [{self.lo}, {self.hi}]")
        return self.values[t - self.lo]

    def __call__(self, t: int) -> Scalar:
        return self.at(t)

    def require_window(self, lo: int, hi: int) -> None:
        """Fail loudly, naming the missing index, unless ``[lo, hi]`` is covered."""
        if lo < self.lo:
            raise DomainError(f"index {lo} outside grid domain [{self.lo}, {self.hi}]")
        if hi > self.hi:
            raise DomainError(f"index {hi} outside grid domain [{self.lo}, {self.hi}]")

    def as_float(self) -> "GridFunction":
        """Explicit conversion to the float backend."""
        return GridFunction(self.lo, tuple(float(v) for v in self.values))

    def zero(self) -> Scalar:
        """Additive identity carrying this grid's backend tag."""
        return 0.0 if self.backend is Backend.FLOAT else Fraction(0)

    @classmethod
    def from_callable(
        cls,
        lo: int,
        hi: int,
        fn: Callable[[int], Scalar],
        backend: Backend = Backend.EXACT,
    ) -> "GridFunction":
        vals = [fn(t) for t in range(lo, hi + 1)]
        if backend is Backend.FLOAT:
            vals = [float(v) for v in vals]
        return cls(lo, tuple(vals))

    @classmethod
    def constant(cls, lo: int, hi: int, value: Scalar) -> "GridFunction":
        return cls(lo, tuple(value for _ in range(lo, hi + 1)))


def _check_step_count(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise OrderError(f"difference order must be a non-negative integer, got {k!r}")


def nabla(f: GridFunction, t: int, k: int = 1) -> Scalar:
    """k-th backward difference ``Σ_{j=0}^{k} (−1)^j C(k,j) f(t−j)``."""
    _check_step_count(k)
    f.require_window(t - k, t)
    if k == 0:
        return f.at(t)
    acc = f.zero()
    for j in range(k + 1):
        term = math.comb(k, j) * f.at(t - j)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def delta(f: GridFunction, t: int, k: int = 1) -> Scalar:
    """k-th forward difference ``Σ_{j=0}^{k} C(k,j) (−1)^{k−j} f(t+j)``."""
    _check_step_count(k)
    f.require_window(t, t + k)
    if k == 0:
        return f.at(t)
    acc = f.zero()
    for j in range(k + 1):
        term = math.comb(k, j) * f.at(t + j)
        acc = acc + term if (k - j) % 2 == 0 else acc - term
    return acc


def _classify_exponent(alpha):
    """Return (is_integer, value) with value an int or a Fraction/float."""
    if isinstance(alpha, bool):
        raise ParameterError("booleans are not exponents")
    if isinstance(alpha, int):
        return True, alpha
    if isinstance(alpha, Fraction):
        if alpha.denominator == 1:
            return True, int(alpha)
        return False, alpha
    if isinstance(alpha, float):
        if alpha.is_integer():
            return True, int(alpha)
        return False, alpha
    raise ParameterError(f"unsupported exponent type {type(alpha).__name__}")


def rising_factorial(t: int, alpha) -> Scalar:
    """``t·(t+1)···(t+α−1)`` generalised through ``Γ(t+α)/Γ(t)``.

    Exact for integer ``α``; float (via log-gamma) otherwise.  Conventions:
    the zeroth power of anything is 1, and 0 to any nonzero power is 0.
    """
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise DomainError(f"rising factorial needs an integer t >= 0, got {t!r}")
    integral, value = _classify_exponent(alpha)
    if integral and value == 0:
        return Fraction(1)
    if t == 0:
        return Fraction(0)
    if integral:
        if value > 0:
            acc = Fraction(1)
            for i in range(value):
                acc *= t + i
            return acc
        acc = Fraction(1)
        for i in range(1, -value + 1):
            factor = t - i
            if factor == 0:
                raise DomainError(f"rising factorial pole at t={t}, alpha={alpha}")
            acc *= factor
        return 1 / acc
    x = t + float(value)
    if x > 0.0:
        return math.exp(math.lgamma(x) - math.lgamma(float(t)))
    try:
        return math.gamma(x) / math.gamma(float(t))
    except ValueError as exc:
        raise DomainError(f"rising factorial pole at t={t}, alpha={alpha}") from exc


def falling_factorial(t: int, alpha) -> Scalar:
    """``t·(t−1)···(t−α+1)`` generalised through ``Γ(t+1)/Γ(t+1−α)``.

    Exact for integer ``α``; float otherwise.  A pole of the denominator
    gamma raises a domain error.
    """
    if not isinstance(t, int) or isinstance(t, bool) or t < 0:
        raise DomainError(f"falling factorial needs an integer t >= 0, got {t!r}")
    integral, value = _classify_exponent(alpha)
    if integral:
        if value == 0:
            return Fraction(1)
        if value > 0:
            acc = Fraction(1)
            for i in range(value):
                acc *= t - i
            return acc
        acc = Fraction(1)
        for i in range(1, -value + 1):
            acc *= t + i
        return 1 / acc
    y = t + 1 - float(value)
    if y > 0.0:
        return math.exp(math.lgamma(t + 1.0) - math.lgamma(y))
    try:
        return math.gamma(t + 1.0) / math.gamma(y)
    except ValueError as exc:
        raise DomainError(f"falling factorial pole at t={t}, alpha={alpha}") from exc
