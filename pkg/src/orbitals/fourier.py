"""Closed-form Fourier transforms of pointwise orbital products.

Each transform is stored as a short list of terms g(|k|) * n^powers with
n = k / |k|, where g already contains the factor |k|^(sum of powers). The same
terms feed `fourier_product` and the two-body quadrature oracle.
"""
import math
from dataclasses import dataclass
from typing import Callable, List, Tuple, Union

import numpy as np

from exceptions import DomainError
from orbitals.basis import DilationParams, OrbitalId, two_s_denominator

Radial = Callable[[Union[float, np.ndarray]], Union[complex, np.ndarray]]


@dataclass(frozen=True)
class FourierTerm:
    """One term g(|k|) * n_x^a n_y^b n_z^c of a product transform."""
    radial: Radial
    powers: Tuple[int, int, int]


def _unit(axis: int, power: int) -> Tuple[int, int, int]:
    powers = [0, 0, 0]
    powers[axis] = power
    return tuple(powers)


def _one_s_squared(params: DilationParams) -> List[FourierTerm]:
    z1 = params.require("z1")
    return [FourierTerm(lambda k: 16.0 * z1 ** 4 / (4.0 * z1 ** 2 + k ** 2) ** 2, (0, 0, 0))]


def _two_s_squared(params: DilationParams) -> List[FourierTerm]:
    z1, z2 = params.require("z1"), params.require("z2")
    d = two_s_denominator(z1, z2)
    c2 = 2.0 * (z1 + 2.0 * z2)
    c3 = z2 * (2.0 * z1 + z2) * (2.0 * z1 + 5.0 * z2)
    c4 = 2.0 * z2 ** 3 * (2.0 * z1 + z2) ** 2

    def radial(k):
        u = z2 ** 2 + k ** 2
        return z2 ** 5 / d * (c2 / u ** 2 - c3 / u ** 3 + c4 / u ** 4)

    return [FourierTerm(radial, (0, 0, 0))]


def _one_s_two_s(params: DilationParams) -> List[FourierTerm]:
    z1, z2 = params.require("z1"), params.require("z2")
    prefactor = math.sqrt(6.0) * z1 ** 1.5 * z2 ** 2.5 / math.sqrt(two_s_denominator(z1, z2))
    s = 2.0 * z1 + z2
    a2 = (z1 + z2 / 2.0) ** 2

    def radial(k):
        u = a2 + k ** 2
        return prefactor * (4.0 * s / (3.0 * u ** 2) - s ** 3 / (3.0 * u ** 3))

    return [FourierTerm(radial, (0, 0, 0))]


def _p_squared(params: DilationParams, axis: int) -> List[FourierTerm]:
    z3 = params.require("z3")
    z6 = z3 ** 6
    return [
        FourierTerm(lambda k: z6 / (z3 ** 2 + k ** 2) ** 3, (0, 0, 0)),
        FourierTerm(lambda k: -6.0 * z6 * k ** 2 / (z3 ** 2 + k ** 2) ** 4, _unit(axis, 2)),
    ]


def _one_s_p(params: DilationParams, axis: int) -> List[FourierTerm]:
    z1, z3 = params.require("z1"), params.require("z3")
    prefactor = -2.0j * math.sqrt(2.0) * z1 ** 1.5 * z3 ** 2.5 * (2.0 * z1 + z3)
    a2 = (z1 + z3 / 2.0) ** 2
    return [FourierTerm(lambda k: prefactor * k / (a2 + k ** 2) ** 3, _unit(axis, 1))]


def _two_s_p(params: DilationParams, axis: int) -> List[FourierTerm]:
    z1, z2, z3 = params.require("z1"), params.require("z2"), params.require("z3")
    prefactor = 1j * math.sqrt(3.0) * z2 ** 2.5 * z3 ** 2.5 / (
        16.0 * math.sqrt(two_s_denominator(z1, z2)))
    a2 = ((z2 + z3) / 2.0) ** 2
    c4 = 8.0 * (z2 + z3) ** 2 * (2.0 * z1 + z2)
    c3 = (32.0 * z1 + 64.0 * z2 + 48.0 * z3) / 3.0

    def radial(k):
        u = a2 + k ** 2
        return prefactor * (c4 * k / u ** 4 - c3 * k / u ** 3)

    return [FourierTerm(radial, _unit(axis, 1))]


def _p_p(params: DilationParams, axis_j: int, axis_l: int) -> List[FourierTerm]:
    z3 = params.require("z3")
    z6 = z3 ** 6
    powers = [0, 0, 0]
    powers[axis_j] = 1
    powers[axis_l] = 1
    return [FourierTerm(lambda k: -6.0 * z6 * k ** 2 / (z3 ** 2 + k ** 2) ** 4, tuple(powers))]


def fourier_terms(a: OrbitalId, b: OrbitalId, params: DilationParams) -> List[FourierTerm]:
    """
    Split the transform of the product a*b into radial-times-direction terms.

    Args:
        a (OrbitalId): First orbital.
        b (OrbitalId): Second orbital.
        params (DilationParams): Dilation parameters.

    Returns:
        List[FourierTerm]: Terms whose sum is the transform of a*b.

    Raises:
        DomainError: If the pair is not covered by the five-orbital table.
    """
    a, b = sorted((OrbitalId(a), OrbitalId(b)))
    if a == OrbitalId.S1 and b == OrbitalId.S1:
        return _one_s_squared(params)
    if a == OrbitalId.S2 and b == OrbitalId.S2:
        return _two_s_squared(params)
    if a == OrbitalId.S1 and b == OrbitalId.S2:
        return _one_s_two_s(params)
    if a.l == 0 and b.l == 1:
        if a == OrbitalId.S1:
            return _one_s_p(params, b.axis)
        return _two_s_p(params, b.axis)
    if a.l == 1 and b.l == 1:
        if a == b:
            return _p_squared(params, a.axis)
        return _p_p(params, a.axis, b.axis)
    raise DomainError(f"No transform for the product {a.tag}*{b.tag}")


def fourier_product(a: OrbitalId, b: OrbitalId, params: DilationParams,
                    k: Union[Tuple[float, float, float], np.ndarray]) -> complex:
    """
    Fourier transform of the pointwise product a*b at wave vector k.

    The convention is f^(k) = integral of f(x) exp(-i k.x) dx, so f^(0) is the
    overlap of a and b.

    Args:
        a (OrbitalId): First orbital.
        b (OrbitalId): Second orbital.
        params (DilationParams): Dilation parameters.
        k (array-like): Wave vector.

    Returns:
        complex: The transform value.
    """
    k_vec = np.asarray(k, dtype=float)
    if k_vec.shape != (3,) or not np.all(np.isfinite(k_vec)):
        raise DomainError(f"k must be a finite 3-vector, got {k!r}")
    k_abs = float(np.linalg.norm(k_vec))
    value = 0.0 + 0.0j
    for term in fourier_terms(a, b, params):
        if sum(term.powers) == 0:
            value += complex(term.radial(k_abs))
        elif k_abs > 0.0:
            direction = k_vec / k_abs
            value += complex(term.radial(k_abs)) * float(np.prod(direction ** np.array(term.powers)))
    return value
