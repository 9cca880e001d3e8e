"""Quadrature oracles for the orbital basis.

Angular integrals are done analytically (all angular dependence is a
monomial of degree <= 2 in the direction), leaving 1D adaptive radial
integrals on [0, inf).
"""
import math
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from scipy import integrate, special

from exceptions import QuadratureError
from orbitals.basis import DilationParams, OrbitalId, radial_factor
from utils import load_solver_config

quadrature_config = load_solver_config()["quadrature"]


def radial_integral(integrand: Callable[[float], float],
                    config: Optional[Dict] = None, what: str = "radial integral") -> float:
    """
    Adaptive quadrature of `integrand` over [0, inf).

    Args:
        integrand (Callable): Real function of r (or |k|).
        config (dict, optional): Overrides for epsabs, epsrel, limit, tolerance.
        what (str): Label used in the error message.

    Returns:
        float: The integral.

    Raises:
        QuadratureError: If the error estimate exceeds the configured tolerance.
    """
    settings = dict(quadrature_config)
    settings.update(config or {})
    value, abserr = integrate.quad(
        integrand, 0.0, np.inf,
        epsabs=settings["epsabs"], epsrel=settings["epsrel"], limit=settings["limit"])
    if abserr > max(settings["tolerance"], settings["epsrel"] * abs(value)):
        raise QuadratureError(f"{what} did not converge", abserr)
    return value


def sphere_monomial_integral(powers: Tuple[int, int, int]) -> float:
    """Integral of n_x^a n_y^b n_z^c over the unit sphere."""
    if any(power % 2 for power in powers):
        return 0.0
    a, b, c = powers
    return 2.0 * (math.gamma((a + 1) / 2) * math.gamma((b + 1) / 2) * math.gamma((c + 1) / 2)
                  / math.gamma((a + b + c + 3) / 2))


def orbital_overlap(a: OrbitalId, b: OrbitalId, params: DilationParams,
                    config: Optional[Dict] = None) -> float:
    """
    Overlap <a|b> by radial quadrature.

    Args:
        a (OrbitalId): First orbital.
        b (OrbitalId): Second orbital.
        params (DilationParams): Dilation parameters.
        config (dict, optional): Quadrature overrides.

    Returns:
        float: The overlap integral.
    """
    a, b = OrbitalId(a), OrbitalId(b)
    if a.l != b.l or (a.l == 1 and a != b):
        return 0.0
    if a.l == 0:
        return 4.0 * math.pi * radial_integral(
            lambda r: radial_factor(a, params, r) * radial_factor(b, params, r) * r * r,
            config, f"<{a.tag}|{b.tag}>")
    return 4.0 * math.pi / 3.0 * radial_integral(
        lambda r: radial_factor(a, params, r) ** 2 * r ** 4, config, f"<{a.tag}|{b.tag}>")


def numerical_fourier_product(a: OrbitalId, b: OrbitalId, params: DilationParams,
                              k: Union[Tuple[float, float, float], np.ndarray],
                              config: Optional[Dict] = None) -> complex:
    """
    Fourier transform of a*b by radial quadrature against spherical Bessel
    kernels, independent of the closed-form table.

    Args:
        a (OrbitalId): First orbital.
        b (OrbitalId): Second orbital.
        params (DilationParams): Dilation parameters.
        k (array-like): Wave vector.
        config (dict, optional): Quadrature overrides.

    Returns:
        complex: The transform value.
    """
    a, b = sorted((OrbitalId(a), OrbitalId(b)))
    k_vec = np.asarray(k, dtype=float)
    k_abs = float(np.linalg.norm(k_vec))
    direction = k_vec / k_abs if k_abs > 0.0 else np.zeros(3)
    label = f"FT({a.tag}*{b.tag})"

    def product(r):
        return radial_factor(a, params, r) * radial_factor(b, params, r)

    def bessel_moment(order: int, r_power: int) -> float:
        if k_abs == 0.0 and order > 0:
            return 0.0
        return radial_integral(
            lambda r: product(r) * r ** r_power * special.spherical_jn(order, k_abs * r),
            config, label)

    if a.l == 0 and b.l == 0:
        return complex(4.0 * math.pi * bessel_moment(0, 2))
    if a.l == 0:
        return -4.0j * math.pi * direction[b.axis] * bessel_moment(1, 3)
    if a == b:
        n_j = direction[a.axis]
        value = bessel_moment(0, 4) / 3.0
        if k_abs > 0.0:
            value -= (n_j * n_j - 1.0 / 3.0) * bessel_moment(2, 4)
        return complex(4.0 * math.pi * value)
    return complex(-4.0 * math.pi * direction[a.axis] * direction[b.axis] * bessel_moment(2, 4))
