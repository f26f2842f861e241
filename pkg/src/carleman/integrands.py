"""The analytic functions behind the integral representations.

Everything here is pointwise double-precision evaluation on [0,1] (or
x > 0), with the endpoint limits baked in so no NaN or infinity can leak
into the quadrature engine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .quadrature import DEFAULT_CONFIG, QuadratureConfig, QuadratureResult, integrate

E = math.e

# Inside this distance of an endpoint the stored limit is returned; the
# closed forms below contain sin(pi*s)*log((1-s)/s) products that would
# otherwise need care there.
ENDPOINT_WINDOW = 1e-12


@dataclass(frozen=True)
class EndpointSafeFunction:
    """A function on [0,1] with explicit analytic endpoint values.

    `interior` is only consulted for s in (window, 1-window); the limits
    at_zero / at_one cover the rest, keeping every evaluation finite.
    """

    interior: Callable[[float], float]
    at_zero: float
    at_one: float
    window: float = ENDPOINT_WINDOW

    def __call__(self, s: float) -> float:
        if not 0.0 <= s <= 1.0:
            raise ValueError(f"s={s!r} outside [0,1]")
        if s < self.window:
            return self.at_zero
        if s > 1.0 - self.window:
            return self.at_one
        return self.interior(s)


def entropy_weight(s: float) -> float:
    """s**s * (1-s)**(1-s) with the limits at 0 and 1 equal to 1."""
    if s < 1e-300:
        return 1.0
    if s > 1.0 - 1e-16:
        return 1.0
    return math.exp(s * math.log(s) + (1.0 - s) * math.log1p(-s))


def _density_interior(s: float) -> float:
    return entropy_weight(s) * math.sin(math.pi * s) / math.pi


def _density_derivative_interior(s: float) -> float:
    bracket = math.cos(math.pi * s) - math.sin(math.pi * s) / math.pi * math.log((1.0 - s) / s)
    return entropy_weight(s) * bracket


#: The nonnegative weight (1/pi) s^s (1-s)^(1-s) sin(pi s); its power
#: moments reproduce e times the expansion coefficients.
moment_density = EndpointSafeFunction(_density_interior, at_zero=0.0, at_one=0.0)

#: Closed-form derivative of the density: differentiate (1/pi) e^phi sin(pi s)
#: with phi = s log s + (1-s) log(1-s).  Values 1 at s=0 and -1 at s=1
#: because the sin*log product vanishes at both ends.
moment_density_derivative = EndpointSafeFunction(
    _density_derivative_interior, at_zero=1.0, at_one=-1.0
)


def scaled_defect(x: float) -> float:
    """(x+1) * (e - (1+1/x)**x) for x > 0.

    The power is evaluated as exp(x*log1p(1/x)) so the result keeps its
    accuracy when x is large and (1+1/x)**x hugs e.
    """
    if not x > 0:
        raise ValueError("x must be positive")
    return (x + 1.0) * (E - math.exp(x * math.log1p(1.0 / x)))


def scaled_defect_by_quadrature(
    x: float, config: QuadratureConfig = DEFAULT_CONFIG
) -> QuadratureResult:
    """Integral form of the scaled defect: e/2 + int_0^1 density(s)/(x+s) ds."""
    if not x > 0:
        raise ValueError("x must be positive")
    integrand = EndpointSafeFunction(
        lambda s: _density_interior(s) / (x + s),
        at_zero=0.0,
        at_one=0.0,
    )
    return integrate(integrand, config).scaled(1.0, offset=E / 2.0)
