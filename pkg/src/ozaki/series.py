"""Truncated complex power series arithmetic.

A :class:`TruncatedSeries` holds the Taylor coefficients ``a0..aN`` of an
analytic function at the origin, truncated at order ``N``.  All operations
return new values; nothing is mutated in place.  Binary arithmetic truncates
to the smaller operand order, so a result never carries coefficients that the
operands did not determine.  Composition is the one exception: the result
carries the order of the outer series and the inner series is treated as
exact (zero) beyond its stored coefficients, which is the intended reading
for polynomial inner arguments such as ``z**2``.

Coefficients are stored as ``complex128``; every acceptance tolerance in the
package is at least 1e-12 and orders stay small, so double precision is
sufficient.  Structural preconditions (unit constant term, vanishing constant
term) are tested with exact comparison: the constructors of this package
produce those constants exactly.
"""

from __future__ import annotations

from numbers import Complex
from typing import Iterable

import numpy as np

__all__ = [
    "TruncatedSeries",
    "NormalizedFunction",
    "SeriesError",
    "DivisionByNonUnit",
    "CompositionAtNonOrigin",
    "ExpOfNonZeroConstant",
    "LogOfNonUnitConstant",
    "PowOfNonUnitConstant",
    "NotNormalized",
    "linear_combine",
    "zero",
    "constant",
    "identity",
]


class SeriesError(ValueError):
    """Invalid operation on a truncated series."""


class DivisionByNonUnit(SeriesError):
    """Division by a series whose constant term is zero."""


class CompositionAtNonOrigin(SeriesError):
    """Composition with an inner series that does not vanish at 0."""


class ExpOfNonZeroConstant(SeriesError):
    """exp of a series whose constant term is not zero."""


class LogOfNonUnitConstant(SeriesError):
    """log of a series whose constant term is not one."""


class PowOfNonUnitConstant(SeriesError):
    """Real power of a series whose constant term is not one."""


class NotNormalized(SeriesError):
    """Series is not of the normalized form z + a2 z^2 + ..."""


def _trunc_mul(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    """Cauchy product of coefficient arrays, truncated at ``order``."""
    return np.convolve(a[: order + 1], b[: order + 1])[: order + 1]


class TruncatedSeries:
    """Taylor coefficients ``a0..aN`` of an analytic function, ``N = order``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Complex] | np.ndarray):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                     dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise SeriesError("coefficients must form a non-empty 1-D sequence")
        c.setflags(write=False)
        self._c = c

    # -- basic accessors ---------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, index k = coefficient of z^k."""
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def __len__(self) -> int:
        return self._c.size

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._c.tolist()!r})"

    def truncated(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order > self.order:
            raise SeriesError(f"cannot truncate order {self.order} up to {order}")
        return TruncatedSeries(self._c[: order + 1])

    def padded(self, order: int) -> "TruncatedSeries":
        """Extend with exact zero coefficients up to ``order``.

        Use only when the stored coefficients describe the function exactly
        (polynomial data); padding a genuine truncation fabricates zeros.
        """
        if order < self.order:
            return self.truncated(order)
        out = np.zeros(order + 1, dtype=np.complex128)
        out[: self._c.size] = self._c
        return TruncatedSeries(out)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(self._c[: n + 1] + other._c[: n + 1])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncatedSeries(self._c[: n + 1] - other._c[: n + 1])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(_trunc_mul(self._c, other._c, n))
        if isinstance(other, Complex):
            return TruncatedSeries(self._c * complex(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Complex):
            return TruncatedSeries(self._c / complex(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        t0 = other._c[0]
        if t0 == 0:
            raise DivisionByNonUnit("division requires a nonzero constant term")
        n = min(self.order, other.order)
        s, t = self._c, other._c
        q = np.zeros(n + 1, dtype=np.complex128)
        for k in range(n + 1):
            q[k] = (s[k] - np.dot(q[:k], t[k:0:-1])) / t0
        return TruncatedSeries(q)

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "TruncatedSeries":
        """Coefficientwise derivative; order drops by one."""
        if self.order < 1:
            raise SeriesError("derivative requires order >= 1")
        k = np.arange(1, self._c.size)
        return TruncatedSeries(self._c[1:] * k)

    def antiderivative(self) -> "TruncatedSeries":
        """Antiderivative vanishing at 0; order grows by one."""
        out = np.zeros(self._c.size + 1, dtype=np.complex128)
        out[1:] = self._c / np.arange(1, self._c.size + 1)
        return TruncatedSeries(out)

    # -- composition and transcendental maps --------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Series of self(inner(z)), carried to self.order.

        The inner series must vanish at 0 and is treated as exact beyond its
        stored order.  Evaluated by Horner accumulation of truncated powers.
        """
        if inner._c[0] != 0:
            raise CompositionAtNonOrigin(
                f"inner constant term must be 0, got {inner._c[0]}")
        n = self.order
        g = np.zeros(n + 1, dtype=np.complex128)
        g[: min(n, inner.order) + 1] = inner._c[: n + 1]
        acc = np.zeros(n + 1, dtype=np.complex128)
        acc[0] = self._c[n]
        for k in range(n - 1, -1, -1):
            acc = _trunc_mul(acc, g, n)
            acc[0] += self._c[k]
        return TruncatedSeries(acc)

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term, via e' = e * s'."""
        if self._c[0] != 0:
            raise ExpOfNonZeroConstant(
                f"exp requires constant term 0, got {self._c[0]}")
        n = self.order
        s = self._c
        e = np.zeros(n + 1, dtype=np.complex128)
        e[0] = 1.0
        ks = np.arange(n + 1)
        ws = s * ks  # k * s_k
        for m in range(1, n + 1):
            e[m] = np.dot(ws[1: m + 1], e[m - 1:: -1][:m]) / m
        return TruncatedSeries(e)

    def log(self) -> "TruncatedSeries":
        """log of a series with unit constant term, recurrence dual to exp."""
        if self._c[0] != 1:
            raise LogOfNonUnitConstant(
                f"log requires constant term 1, got {self._c[0]}")
        n = self.order
        s = self._c
        out = np.zeros(n + 1, dtype=np.complex128)
        ks = np.arange(n + 1)
        for m in range(1, n + 1):
            acc = np.dot(out[1:m] * ks[1:m], s[m - 1: 0: -1])
            out[m] = (m * s[m] - acc) / m
        return TruncatedSeries(out)

    def pow(self, alpha: float) -> "TruncatedSeries":
        """Real power of a series with unit constant term: exp(alpha*log)."""
        if self._c[0] != 1:
            raise PowOfNonUnitConstant(
                f"pow requires constant term 1, got {self._c[0]}")
        return (self.log() * alpha).exp()

    def __pow__(self, alpha: float) -> "TruncatedSeries":
        return self.pow(alpha)


def linear_combine(alpha: Complex, s: TruncatedSeries,
                   beta: Complex, t: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise alpha*s + beta*t at the smaller operand order."""
    n = min(s.order, t.order)
    return TruncatedSeries(complex(alpha) * s.coeffs[: n + 1]
                           + complex(beta) * t.coeffs[: n + 1])


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(np.zeros(order + 1, dtype=np.complex128))


def constant(value: Complex, order: int) -> TruncatedSeries:
    c = np.zeros(order + 1, dtype=np.complex128)
    c[0] = value
    return TruncatedSeries(c)


def identity(order: int) -> TruncatedSeries:
    """The series of z itself."""
    if order < 1:
        raise SeriesError("identity requires order >= 1")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1] = 1.0
    return TruncatedSeries(c)


class NormalizedFunction:
    """A series of the normalized form f(z) = z + a2 z^2 + ... (a0=0, a1=1)."""

    __slots__ = ("_series",)

    def __init__(self, series: TruncatedSeries):
        if series.order < 1 or series.coeffs[0] != 0 or series.coeffs[1] != 1:
            raise NotNormalized(
                "normalized function needs a0 = 0 and a1 = 1 exactly")
        self._series = series

    @property
    def series(self) -> TruncatedSeries:
        return self._series

    @property
    def order(self) -> int:
        return self._series.order

    def coeff(self, n: int) -> complex:
        return self._series[n]

    def __repr__(self) -> str:
        return f"NormalizedFunction({self._series.coeffs.tolist()!r})"

    def log_ratio(self) -> TruncatedSeries:
        """Series of log(f(z)/z); the n-th logarithmic coefficient is
        half the n-th coefficient of the result."""
        ratio = TruncatedSeries(self._series.coeffs[1:])  # f/z, constant 1
        return ratio.log()

    def inverse(self) -> TruncatedSeries:
        """Compositional inverse F with f(F(w)) = w to self.order.

        Built coefficient by coefficient: with A2..A(m-1) fixed and Am = 0,
        the w^m coefficient of f(F(w)) is exactly the correction -Am.
        """
        n = self.order
        inv = np.zeros(n + 1, dtype=np.complex128)
        inv[1] = 1.0
        for m in range(2, n + 1):
            comp = self._series.compose(TruncatedSeries(inv))
            inv[m] = -comp.coeffs[m]
        return TruncatedSeries(inv)
