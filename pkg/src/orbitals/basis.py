"""Parametrized Slater-type orbital basis {1s, 2s, 2p1, 2p2, 2p3}.

Orbital numbering follows the block tables: 1 = 1s, 2 = 2s, 3 = 2p3 (z),
4 = 2p1 (x), 5 = 2p2 (y).
"""
import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Optional, Tuple, Union

import numpy as np

from exceptions import DomainError


class OrbitalId(IntEnum):
    """Spatial orbitals of the minimal model, valued by their table index."""
    S1 = 1
    S2 = 2
    P3 = 3
    P1 = 4
    P2 = 5

    @property
    def tag(self) -> str:
        return _TAGS[self]

    @property
    def l(self) -> int:
        return 0 if self in (OrbitalId.S1, OrbitalId.S2) else 1

    @property
    def parity(self) -> int:
        return 1 if self.l == 0 else -1

    @property
    def axis(self) -> Optional[int]:
        """Cartesian axis (0=x, 1=y, 2=z) of a p orbital, None for s orbitals."""
        return _AXES.get(self)

    @property
    def reflection_signature(self) -> Tuple[int, int, int]:
        """Parity (0 even, 1 odd) under the reflections x->-x, y->-y, z->-z."""
        signature = [0, 0, 0]
        if self.axis is not None:
            signature[self.axis] = 1
        return tuple(signature)

    @classmethod
    def from_tag(cls, tag: str) -> "OrbitalId":
        for orbital, orbital_tag in _TAGS.items():
            if orbital_tag == tag:
                return orbital
        raise DomainError(f"Unknown orbital tag: {tag!r}")

    @classmethod
    def p_orbital(cls, axis: int) -> "OrbitalId":
        return (cls.P1, cls.P2, cls.P3)[axis]


_TAGS = {
    OrbitalId.S1: "1s",
    OrbitalId.S2: "2s",
    OrbitalId.P3: "2p3",
    OrbitalId.P1: "2p1",
    OrbitalId.P2: "2p2",
}
_AXES = {OrbitalId.P1: 0, OrbitalId.P2: 1, OrbitalId.P3: 2}


@dataclass(frozen=True)
class DilationParams:
    """Screening (dilation) parameters of the 1s, 2s and 2p orbitals.

    A parameter set to None is unused by the state at hand (blank cell in the
    energy tables). Used parameters must be finite and positive.
    """
    z1: float
    z2: Optional[float] = None
    z3: Optional[float] = None

    def __post_init__(self) -> None:
        for name in ("z1", "z2", "z3"):
            value = getattr(self, name)
            if value is None:
                if name == "z1":
                    raise DomainError("z1 is always used and cannot be None")
                continue
            if not math.isfinite(value) or value <= 0:
                raise DomainError(f"Dilation parameter {name} must be positive, got {value}")

    @classmethod
    def uniform(cls, value: float) -> "DilationParams":
        """Equal parameters, i.e. the hydrogenic (PT) orbitals for value = Z."""
        return cls(value, value, value)

    def require(self, name: str) -> float:
        """Return a parameter, raising DomainError when it is marked unused."""
        value = getattr(self, name)
        if value is None:
            raise DomainError(f"Dilation parameter {name} is marked unused")
        return value

    def scaled(self, factor: float) -> "DilationParams":
        """Scale every used parameter by `factor`."""
        return DilationParams(*(None if value is None else value * factor
                                for value in self.as_tuple()))

    def as_tuple(self) -> Tuple[Optional[float], Optional[float], Optional[float]]:
        return self.z1, self.z2, self.z3


def two_s_denominator(z1: float, z2: float) -> float:
    """D = 4 z1^2 - 2 z1 z2 + z2^2, which normalizes the 2s orbital."""
    return 4.0 * z1 * z1 - 2.0 * z1 * z2 + z2 * z2


def radial_factor(orbital: OrbitalId, params: DilationParams,
                  r: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """
    Radial part R(r) of an orbital, with phi = R(r) for s orbitals and
    phi = R(r) * x_axis for p orbitals.

    Args:
        orbital (OrbitalId): The orbital.
        params (DilationParams): Dilation parameters.
        r (float or np.ndarray): Distance(s) from the nucleus.

    Returns:
        float or np.ndarray: The radial factor.
    """
    if orbital == OrbitalId.S1:
        z1 = params.require("z1")
        return z1 ** 1.5 / math.sqrt(math.pi) * np.exp(-z1 * r)
    if orbital == OrbitalId.S2:
        z1, z2 = params.require("z1"), params.require("z2")
        norm = math.sqrt(3.0 * z2 ** 5 / (8.0 * math.pi * two_s_denominator(z1, z2)))
        return norm * (1.0 - (2.0 * z1 + z2) * r / 6.0) * np.exp(-z2 * r / 2.0)
    z3 = params.require("z3")
    return z3 ** 2.5 / math.sqrt(32.0 * math.pi) * np.exp(-z3 * r / 2.0)


def evaluate_orbital(orbital: OrbitalId, params: DilationParams,
                     x: Union[Tuple[float, float, float], np.ndarray]) -> Union[float, np.ndarray]:
    """
    Evaluate a normalized orbital at one point or an array of points.

    Args:
        orbital (OrbitalId): The orbital.
        params (DilationParams): Dilation parameters; the ones the orbital
            depends on must be used (not None).
        x (array-like): A point in 3-space, or an array of shape (..., 3).

    Returns:
        float or np.ndarray: The orbital value(s).

    Raises:
        DomainError: If a needed parameter is unused or the point is not finite.
    """
    points = np.asarray(x, dtype=float)
    if points.shape[-1] != 3:
        raise DomainError(f"Points must have 3 coordinates, got shape {points.shape}")
    if not np.all(np.isfinite(points)):
        raise DomainError("Points must be finite")
    r = np.linalg.norm(points, axis=-1)
    value = radial_factor(orbital, params, r)
    if orbital.axis is not None:
        value = value * points[..., orbital.axis]
    if np.ndim(value) == 0:
        return float(value)
    return value
