"""Test-function pairs and the smooth annulus weight.

`TestFunctionPair` is the Fejer pair phi(x) = (sin(pi theta x)/(pi theta x))^2
with the triangle transform phi_hat(u) = (1/theta) max(1 - |u|/theta, 0):
non-negative, unit mass 1/theta, and compactly supported transform, which is
what the density statistics require.

`SmoothWeight` is the smooth bump on (1,2) used to weight the parameter
annulus: identically 1 on a plateau whose ramps have width 1/(2U), built
from the standard exp(-1/x) step.  Derivatives up to order four are exact,
computed with truncated Taylor jets of the defining formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_JET_LEN = 5  # value + four derivatives


def _jet_const(v: float) -> list[float]:
    return [v, 0.0, 0.0, 0.0, 0.0]


def _jet_mul(u: list[float], v: list[float]) -> list[float]:
    return [sum(u[i] * v[k - i] for i in range(k + 1)) for k in range(_JET_LEN)]


def _jet_div(u: list[float], v: list[float]) -> list[float]:
    out = [0.0] * _JET_LEN
    inv0 = 1.0 / v[0]
    for k in range(_JET_LEN):
        acc = u[k] - sum(out[i] * v[k - i] for i in range(k))
        out[k] = acc * inv0
    return out


def _jet_exp(u: list[float]) -> list[float]:
    out = [math.exp(u[0])] + [0.0] * (_JET_LEN - 1)
    for k in range(_JET_LEN - 1):
        out[k + 1] = sum((j + 1) * u[j + 1] * out[k - j]
                         for j in range(k + 1)) / (k + 1)
    return out


def _jet_psi(x: float) -> list[float]:
    """Taylor coefficients of exp(-1/x) at x, zero jet for x <= 0."""
    if x <= 0:
        return _jet_const(0.0)
    # coefficients of -1/x: (-1)^(k+1) / x^(k+1)
    inner = [(-1.0) ** (k + 1) / x ** (k + 1) for k in range(_JET_LEN)]
    return _jet_exp(inner)


def _jet_smoothstep(x: float) -> list[float]:
    """Jet of s(x) = psi(x) / (psi(x) + psi(1-x)); s=0 left, s=1 right."""
    if x <= 0:
        return _jet_const(0.0)
    if x >= 1:
        return _jet_const(1.0)
    a = _jet_psi(x)
    b = _jet_psi(1 - x)
    b = [(-1.0) ** k * b[k] for k in range(_JET_LEN)]  # chain rule, u = 1-x
    return _jet_div(a, [a[k] + b[k] for k in range(_JET_LEN)])


def _smoothstep(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    out[x >= 1] = 1.0
    mid = (x > 0) & (x < 1)
    xm = x[mid]
    with np.errstate(over="ignore", divide="ignore"):
        pa = np.exp(-1.0 / xm)
        pb = np.exp(-1.0 / (1.0 - xm))
    out[mid] = pa / (pa + pb)
    return out


@dataclass(frozen=True)
class SmoothWeight:
    """Smooth weight supported on (1,2), equal to 1 on (1+1/U, 2-1/U).

    The ramps have width 1/(2U) (half the required plateau margin), so the
    mass deficit against the plain indicator is 1/(2U); j-th derivatives
    scale like U^j.
    """

    U: float

    def __post_init__(self) -> None:
        if self.U < 2:
            raise ValueError("smooth weight needs U >= 2")

    @property
    def ramp(self) -> float:
        return 0.5 / self.U

    def __call__(self, t):
        t = np.asarray(t, dtype=np.float64)
        scale = 2.0 * self.U
        value = _smoothstep(scale * (t - 1.0)) * _smoothstep(scale * (2.0 - t))
        return float(value) if value.ndim == 0 else value

    def derivative(self, t: float, order: int) -> float:
        """Exact derivative of given order (0..4) at a point."""
        if not 0 <= order < _JET_LEN:
            raise ValueError("derivative order must be 0..4")
        scale = 2.0 * self.U
        left = _jet_smoothstep(scale * (t - 1.0))
        right = _jet_smoothstep(scale * (2.0 - t))
        left = [left[k] * scale**k for k in range(_JET_LEN)]
        right = [right[k] * (-scale) ** k for k in range(_JET_LEN)]
        prod = _jet_mul(left, right)
        return prod[order] * math.factorial(order)

    def mass(self) -> float:
        """integral of the weight over (1,2): exactly 1 - 1/(2U)."""
        return 1.0 - 0.5 / self.U


@dataclass(frozen=True)
class TestFunctionPair:
    """The Fejer pair at scale theta: phi >= 0, transform on [-theta, theta]."""

    theta: float

    def __post_init__(self) -> None:
        if self.theta <= 0:
            raise ValueError("theta must be positive")

    @classmethod
    def fejer(cls, theta: float) -> TestFunctionPair:
        return cls(theta)

    def phi(self, x):
        value = np.sinc(self.theta * np.asarray(x, dtype=np.float64)) ** 2
        return float(value) if value.ndim == 0 else value

    def phi_hat(self, u):
        u = np.asarray(u, dtype=np.float64)
        value = np.maximum(1.0 - np.abs(u) / self.theta, 0.0) / self.theta
        return float(value) if value.ndim == 0 else value

    @property
    def integral_phi(self) -> float:
        return 1.0 / self.theta

    @property
    def integral_phi_hat(self) -> float:
        """equals phi(0) = 1."""
        return 1.0

    @property
    def support_radius(self) -> float:
        return self.theta
