"""Members of the Ozaki close-to-convex classes F and G.

A function f in class F satisfies Re(1 + z f''/f') > -1/2 on the unit disk,
and one in class G satisfies Re(1 + z f''/f') < 3/2.  Every member arises
from a Schwarz function w through

    1 + z f''/f' = (3 p(z) - 1) / 2     (class F)
    1 + z f''/f' = (3 - p(z)) / 2       (class G)

with p = (1 + w)/(1 - w) in the Caratheodory class.  This module constructs
members from Schwarz or Caratheodory data by solving that differential
equation on truncated series, provides the four classical extremal functions,
and exposes the closed-form initial coefficients for cross-validation.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .series import NormalizedFunction, TruncatedSeries, constant

__all__ = [
    "ClassLabel",
    "SchwarzCoeffs",
    "CaratheodoryCoeffs",
    "LiberaParams",
    "BlaschkeSpec",
    "OzakiFunction",
    "ZeroOutsideDisk",
    "InvalidSchwarzPrefix",
    "UnknownExtremalName",
    "schwarz_from_blaschke",
    "validate_schwarz_prefix",
    "caratheodory_from_schwarz",
    "libera_expand",
    "build_member",
    "build_member_from_caratheodory",
    "extremal_member",
    "coeffs_from_caratheodory_direct",
    "coeffs_from_schwarz_direct",
    "EXTREMAL_NAMES",
]


class ClassLabel(Enum):
    F = "F"
    G = "G"


class ZeroOutsideDisk(ValueError):
    """A Blaschke zero lies on or outside the unit circle."""


class InvalidSchwarzPrefix(ValueError):
    """Coefficients violate the Schwarz-function prefix inequalities."""


class UnknownExtremalName(ValueError):
    """Extremal name is not one of f1, f2, g1, g2."""


@dataclass(frozen=True)
class SchwarzCoeffs:
    """Coefficients c1..cN of a Schwarz function w(z) = sum c_k z^k."""

    c: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(complex(v) for v in self.c))

    def prefix(self, k: int) -> tuple[complex, ...]:
        """First k coefficients, zero-padded."""
        return tuple(self.c[i] if i < len(self.c) else 0.0 for i in range(k))

    def series(self, order: int) -> TruncatedSeries:
        """w as a series of the given order (stored data treated as exact)."""
        out = np.zeros(order + 1, dtype=np.complex128)
        m = min(len(self.c), order)
        out[1: m + 1] = self.c[:m]
        return TruncatedSeries(out)


_CARATHEODORY_TOL = 1e-9


@dataclass(frozen=True)
class CaratheodoryCoeffs:
    """Coefficients p1..pN of p(z) = 1 + sum p_k z^k with Re p > 0."""

    p: tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.p)
        for k, v in enumerate(vals, start=1):
            if abs(v) > 2.0 + _CARATHEODORY_TOL:
                raise ValueError(
                    f"|p_{k}| = {abs(v)} exceeds the Caratheodory bound 2")
        object.__setattr__(self, "p", vals)

    def prefix(self, k: int) -> tuple[complex, ...]:
        return tuple(self.p[i] if i < len(self.p) else 0.0 for i in range(k))

    def series(self, order: int) -> TruncatedSeries:
        out = np.zeros(order + 1, dtype=np.complex128)
        out[0] = 1.0
        m = min(len(self.p), order)
        out[1: m + 1] = self.p[:m]
        return TruncatedSeries(out)


_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class LiberaParams:
    """Parameters (p1, xi, eta, gamma) of the Caratheodory coefficient
    representation: p1 in [0, 2] and xi, eta, gamma in the closed unit disk.
    The derived quantity t = 4 - p1^2 lies in [0, 4]."""

    p1: float
    xi: complex
    eta: complex
    gamma: complex

    def __post_init__(self):
        if not 0.0 <= self.p1 <= 2.0:
            raise ValueError(f"p1 must lie in [0, 2], got {self.p1}")
        for name in ("xi", "eta", "gamma"):
            if abs(getattr(self, name)) > 1.0 + _UNIT_TOL:
                raise ValueError(f"|{name}| must be <= 1, got {getattr(self, name)}")

    @property
    def t(self) -> float:
        return 4.0 - self.p1 * self.p1


@dataclass(frozen=True)
class BlaschkeSpec:
    """z times a finite Blaschke product, optionally a convex mixture of two.

    w(z) = z * e^(i*rotation) * prod_k (a_k - z)/(1 - conj(a_k) z) is a
    Schwarz function for any zeros a_k inside the open unit disk; so is a
    convex combination of two such products.  ``mixture_weight`` is the
    weight of this product; ``second`` carries the rest.
    """

    rotation: float
    zeros: tuple[complex, ...] = ()
    second: "BlaschkeSpec | None" = None
    mixture_weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(a) for a in self.zeros))
        for a in self.zeros:
            if abs(a) >= 1.0:
                raise ZeroOutsideDisk(f"Blaschke zero {a} has |a| >= 1")
        if not 0.0 <= self.mixture_weight <= 1.0:
            raise ValueError(f"mixture weight {self.mixture_weight} not in [0, 1]")
        if self.second is None and self.mixture_weight != 1.0:
            raise ValueError("mixture weight without a second product")


@dataclass(frozen=True)
class OzakiFunction:
    """A constructed member of class F or G with its generating data."""

    label: ClassLabel
    f: NormalizedFunction
    provenance: SchwarzCoeffs | CaratheodoryCoeffs | str

    def __post_init__(self):
        if self.f.order < 4:
            raise ValueError("class members are carried to order >= 4")

    @property
    def order(self) -> int:
        return self.f.order

    def coeff(self, n: int) -> complex:
        return self.f.coeff(n)


def _product_series(rotation: float, zeros: Sequence[complex], order: int) -> TruncatedSeries:
    """e^(i*rotation) * prod (a_k - z)/(1 - conj(a_k) z) to the given order."""
    b = constant(1.0, order)
    for a in zeros:
        num = TruncatedSeries([a, -1.0]).padded(order)
        den = TruncatedSeries([1.0, -np.conj(a)]).padded(order)
        b = b * (num / den)
    return b * cmath.exp(1j * rotation)


def schwarz_from_blaschke(spec: BlaschkeSpec, order: int) -> SchwarzCoeffs:
    """Coefficients c1..c_order of the Schwarz function described by ``spec``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    b = _product_series(spec.rotation, spec.zeros, order - 1)
    w = spec.mixture_weight * b.coeffs
    if spec.second is not None:
        b2 = _product_series(spec.second.rotation, spec.second.zeros, order - 1)
        w = w + (1.0 - spec.mixture_weight) * b2.coeffs
    return SchwarzCoeffs(tuple(w))


def validate_schwarz_prefix(c: SchwarzCoeffs, tol: float = 1e-12) -> bool:
    """Check the necessary prefix inequalities of a Schwarz function:
    |c1| <= 1, |c2| <= 1 - |c1|^2, |c3| <= 1 - |c1|^2 - |c2|^2/(1 + |c1|)."""
    c1, c2, c3 = c.prefix(3)
    a1, a2, a3 = abs(c1), abs(c2), abs(c3)
    if a1 > 1.0 + tol:
        return False
    if a2 > 1.0 - a1 * a1 + tol:
        return False
    return a3 <= 1.0 - a1 * a1 - a2 * a2 / (1.0 + a1) + tol


def caratheodory_from_schwarz(c: SchwarzCoeffs, order: int) -> CaratheodoryCoeffs:
    """Coefficients p1..p_order of p = (1 + w)/(1 - w)."""
    w = c.series(order)
    one = constant(1.0, order)
    p = (one + w) / (one - w)
    return CaratheodoryCoeffs(tuple(p.coeffs[1:]))


def libera_expand(params: LiberaParams) -> CaratheodoryCoeffs:
    """(p1, p2, p3, p4) from the coefficient representation of class P:

        2 p2 = p1^2 + t xi
        4 p3 = p1^3 + 2 p1 t xi - p1 t xi^2 + 2 t (1-|xi|^2) eta
        8 p4 = p1^4 + 3 p1^2 t xi + (4 - 3 p1^2) t xi^2 + p1^2 t xi^3
               + 4 t (1-|xi|^2)(1-|eta|^2) gamma
               + 4 t (1-|xi|^2)(p1 eta - p1 xi eta - conj(xi) eta^2)

    with t = 4 - p1^2 and xi, eta, gamma in the closed unit disk.
    """
    p1 = complex(params.p1)
    xi, eta, gam = params.xi, params.eta, params.gamma
    t = complex(params.t)
    xi2 = 1.0 - abs(xi) ** 2
    eta2 = 1.0 - abs(eta) ** 2
    p2 = (p1 ** 2 + t * xi) / 2.0
    p3 = (p1 ** 3 + 2.0 * p1 * t * xi - p1 * t * xi ** 2 + 2.0 * t * xi2 * eta) / 4.0
    p4 = (p1 ** 4 + 3.0 * p1 ** 2 * t * xi + (4.0 - 3.0 * p1 ** 2) * t * xi ** 2
          + p1 ** 2 * t * xi ** 3 + 4.0 * t * xi2 * eta2 * gam
          + 4.0 * t * xi2 * (p1 * eta - p1 * xi * eta - np.conj(xi) * eta ** 2)) / 8.0
    return CaratheodoryCoeffs((p1, p2, p3, p4))


def build_member_from_caratheodory(label: ClassLabel, p: CaratheodoryCoeffs,
                                   order: int,
                                   provenance: SchwarzCoeffs | CaratheodoryCoeffs | str | None = None,
                                   ) -> OzakiFunction:
    """Solve the defining differential equation from Caratheodory data.

    With q(z) = f''/f' = 3(p(z)-1)/(2z) for F or (1-p(z))/(2z) for G,
    f' = exp(int q) and f is the antiderivative of f'.
    """
    if order < 4:
        raise ValueError("order must be >= 4")
    ps = p.series(order)
    u = TruncatedSeries(ps.coeffs[1:])  # (p - 1)/z, order-1
    q = u * (1.5 if label is ClassLabel.F else -0.5)
    fprime = q.antiderivative().exp()
    f = fprime.antiderivative().truncated(order)
    return OzakiFunction(label, NormalizedFunction(f),
                         p if provenance is None else provenance)


def build_member(label: ClassLabel, w: SchwarzCoeffs, order: int) -> OzakiFunction:
    """Class member generated by the Schwarz function w."""
    if order < 4:
        raise ValueError("order must be >= 4")
    if not validate_schwarz_prefix(w):
        raise InvalidSchwarzPrefix(f"prefix {w.prefix(3)} fails the Schwarz bounds")
    p = caratheodory_from_schwarz(w, order)
    return build_member_from_caratheodory(label, p, order, provenance=w)


def _one_minus_z(order: int) -> TruncatedSeries:
    return TruncatedSeries([1.0, -1.0]).padded(order)


def _one_minus_z2(order: int) -> TruncatedSeries:
    return TruncatedSeries([1.0, 0.0, -1.0]).padded(order)


EXTREMAL_NAMES = ("f1", "f2", "g1", "g2")


def extremal_member(name: str, order: int) -> OzakiFunction:
    """One of the four extremal functions, by closed form:

    f1' = (1-z)^-3, f2' = (1-z^2)^(-3/2), g1' = 1-z, g2' = (1-z^2)^(1/2),
    each integrated once.  f1, f2 lie in F; g1, g2 lie in G.
    """
    if order < 4:
        raise ValueError("order must be >= 4")
    if name == "f1":
        label, fprime = ClassLabel.F, _one_minus_z(order - 1).pow(-3.0)
    elif name == "f2":
        label, fprime = ClassLabel.F, _one_minus_z2(order - 1).pow(-1.5)
    elif name == "g1":
        label, fprime = ClassLabel.G, _one_minus_z(order - 1)
    elif name == "g2":
        label, fprime = ClassLabel.G, _one_minus_z2(order - 1).pow(0.5)
    else:
        raise UnknownExtremalName(f"unknown extremal {name!r}")
    f = fprime.antiderivative()
    return OzakiFunction(label, NormalizedFunction(f), name)


def coeffs_from_schwarz_direct(label: ClassLabel, c: SchwarzCoeffs,
                               ) -> tuple[complex, complex, complex]:
    """Initial coefficients (a2, a3, a4) straight from Schwarz data."""
    c1, c2, c3 = c.prefix(3)
    if label is ClassLabel.F:
        a2 = 1.5 * c1
        a3 = (4.0 * c1 ** 2 + c2) / 2.0
        a4 = (20.0 * c1 ** 3 + 13.0 * c1 * c2 + 2.0 * c3) / 8.0
    else:
        a2 = -c1 / 2.0
        a3 = -c2 / 6.0
        a4 = -(c1 * c2 + 2.0 * c3) / 24.0
    return a2, a3, a4


def coeffs_from_caratheodory_direct(label: ClassLabel, p: CaratheodoryCoeffs,
                                    ) -> tuple[complex, complex, complex]:
    """Initial coefficients (a2, a3, a4) straight from Caratheodory data."""
    p1, p2, p3 = p.prefix(3)
    if label is ClassLabel.F:
        a2 = 0.75 * p1
        a3 = (3.0 * p1 ** 2 + 2.0 * p2) / 8.0
        a4 = (9.0 * p1 ** 3 + 18.0 * p1 * p2 + 8.0 * p3) / 64.0
    else:
        a2 = -p1 / 4.0
        a3 = (p1 ** 2 - 2.0 * p2) / 24.0
        a4 = (-p1 ** 3 + 6.0 * p1 * p2 - 8.0 * p3) / 192.0
    return a2, a3, a4
