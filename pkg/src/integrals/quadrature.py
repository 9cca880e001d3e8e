"""Quadrature oracle for the integrals, independent of the closed forms.

Two-body integrals go through the Fourier route
(ab|cd) = (2 pi^2)^-1 * int |k|^-2 conj(FT(ab)) FT(cd) dk, with the angular
integral done analytically and the radial one by adaptive quadrature.
"""
import math
from typing import Callable, Dict, Optional

import numpy as np

from integrals.symbols import IntegralSymbol
from orbitals.basis import DilationParams, OrbitalId, radial_factor, two_s_denominator
from orbitals.fourier import fourier_terms
from orbitals.quadrature import radial_integral, sphere_monomial_integral


def quadrature_integral(a: int, b: int, c: int, d: int, params: DilationParams,
                        config: Optional[Dict] = None) -> float:
    """
    Two-body integral (ab|cd) of real orbitals by the Fourier route.

    Args:
        a, b, c, d (int): Orbital indices 1..5.
        params (DilationParams): Dilation parameters.
        config (dict, optional): Quadrature overrides.

    Returns:
        float: The integral in hartree.

    Raises:
        QuadratureError: If the radial quadrature does not converge.
    """
    left = fourier_terms(OrbitalId(a), OrbitalId(b), params)
    right = fourier_terms(OrbitalId(c), OrbitalId(d), params)
    pairs = []
    for term_left in left:
        for term_right in right:
            powers = tuple(p + q for p, q in zip(term_left.powers, term_right.powers))
            weight = sphere_monomial_integral(powers)
            if weight != 0.0:
                pairs.append((weight, term_left.radial, term_right.radial))
    if not pairs:
        return 0.0

    def integrand(k: float) -> float:
        return sum(weight * (np.conj(g_left(k)) * g_right(k)).real
                   for weight, g_left, g_right in pairs)

    label = f"({a}{b}|{c}{d})"
    return radial_integral(integrand, config, label) / (2.0 * math.pi ** 2)


def _radial_derivative(orbital: OrbitalId, params: DilationParams) -> Callable[[float], float]:
    """Derivative of the radial function u with phi = u(r) * angular part."""
    if orbital == OrbitalId.S1:
        z1 = params.require("z1")
        return lambda r: -z1 * radial_factor(orbital, params, r)
    if orbital == OrbitalId.S2:
        z1, z2 = params.require("z1"), params.require("z2")
        norm = math.sqrt(3.0 * z2 ** 5 / (8.0 * math.pi * two_s_denominator(z1, z2)))
        beta = (2.0 * z1 + z2) / 6.0
        gamma = z2 / 2.0
        return lambda r: norm * math.exp(-gamma * r) * (-beta - gamma * (1.0 - beta * r))
    z3 = params.require("z3")
    norm = z3 ** 2.5 / math.sqrt(32.0 * math.pi)
    return lambda r: norm * math.exp(-z3 * r / 2.0) * (1.0 - z3 * r / 2.0)


def quadrature_one_body(a: int, Z: float, params: DilationParams,
                        config: Optional[Dict] = None) -> float:
    """
    One-body integral (a|a) = <a| -Laplacian/2 - Z/|x| |a> by radial quadrature.

    Args:
        a (int): Orbital index 1..5.
        Z (float): Nuclear charge.
        params (DilationParams): Dilation parameters.
        config (dict, optional): Quadrature overrides.

    Returns:
        float: The integral in hartree.
    """
    orbital = OrbitalId(a)
    derivative = _radial_derivative(orbital, params)
    label = f"({int(orbital)}|{int(orbital)})"
    if orbital.l == 0:
        def u(r):
            return radial_factor(orbital, params, r)

        kinetic = 0.5 * 4.0 * math.pi * radial_integral(
            lambda r: derivative(r) ** 2 * r * r, config, label)
        potential = -Z * 4.0 * math.pi * radial_integral(lambda r: u(r) ** 2 * r, config, label)
        return kinetic + potential

    def f(r):
        return radial_factor(orbital, params, r) * r

    angular = 4.0 * math.pi / 3.0
    kinetic = 0.5 * angular * radial_integral(
        lambda r: derivative(r) ** 2 * r * r + 2.0 * f(r) ** 2, config, label)
    potential = -Z * angular * radial_integral(lambda r: f(r) ** 2 * r, config, label)
    return kinetic + potential


def quadrature_symbol(symbol: IntegralSymbol, Z: float, params: DilationParams,
                      config: Optional[Dict] = None) -> float:
    """Oracle value of a canonical symbol, dispatching on its kind."""
    orbitals = symbol.orbitals
    if len(orbitals) == 2:
        return quadrature_one_body(orbitals[0], Z, params, config)
    return quadrature_integral(*orbitals, params, config=config)
