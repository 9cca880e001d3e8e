"""Spin-orbitals, Slater determinants and the configuration space.

Spin-orbital k has spatial orbital k // 2 + 1 and spin up for even k, down for
odd k, so the canonical order is orbital index first, then spin.
"""
from dataclasses import dataclass
from bisect import bisect_left
from itertools import combinations
from typing import List, Optional, Tuple

from blocks.tables import validate_electron_count
from exceptions import DomainError
from orbitals.basis import OrbitalId

N_SPIN_ORBITALS = 10
CORE_SPIN_ORBITALS = (0, 1)


@dataclass(frozen=True, order=True)
class SpinOrbital:
    orbital: OrbitalId
    spin: float

    def __post_init__(self) -> None:
        if self.spin not in (0.5, -0.5):
            raise DomainError(f"Spin must be +1/2 or -1/2, got {self.spin}")
        object.__setattr__(self, "orbital", OrbitalId(self.orbital))

    @property
    def index(self) -> int:
        return 2 * (int(self.orbital) - 1) + (0 if self.spin > 0 else 1)

    @classmethod
    def from_index(cls, index: int) -> "SpinOrbital":
        if not 0 <= index < N_SPIN_ORBITALS:
            raise DomainError(f"Spin-orbital index must be in 0..9, got {index}")
        return cls(OrbitalId(index // 2 + 1), 0.5 if index % 2 == 0 else -0.5)

    def __str__(self) -> str:
        return f"{int(self.orbital)}{'' if self.spin > 0 else 'b'}"


def spin_of(index: int) -> int:
    """0 for spin up, 1 for spin down."""
    return index % 2


def orbital_of(index: int) -> int:
    return index // 2 + 1


@dataclass(frozen=True)
class Determinant:
    """A Slater determinant stored as the sorted tuple of occupied spin-orbital indices."""
    occupied: Tuple[int, ...]

    def __post_init__(self) -> None:
        occupied = tuple(self.occupied)
        if len(set(occupied)) != len(occupied):
            raise DomainError(f"Repeated spin-orbital in determinant {occupied}")
        if any(not 0 <= index < N_SPIN_ORBITALS for index in occupied):
            raise DomainError(f"Spin-orbital index out of range in {occupied}")
        if list(occupied) != sorted(occupied):
            raise DomainError(f"Determinant {occupied} is not in canonical order")
        object.__setattr__(self, "occupied", occupied)

    @property
    def n_electrons(self) -> int:
        return len(self.occupied)

    @property
    def spin_orbitals(self) -> Tuple[SpinOrbital, ...]:
        return tuple(SpinOrbital.from_index(index) for index in self.occupied)

    @property
    def spin_projection(self) -> float:
        """S3 eigenvalue."""
        return sum(0.5 if spin_of(index) == 0 else -0.5 for index in self.occupied)

    @property
    def n_p_electrons(self) -> int:
        return sum(1 for index in self.occupied if orbital_of(index) >= 3)

    def __contains__(self, index: int) -> bool:
        return index in self.occupied

    def __str__(self) -> str:
        return "|" + " ".join(str(SpinOrbital.from_index(index)) for index in self.occupied) + "|"


def annihilate(occupied: Tuple[int, ...], index: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Apply a_index; returns (sign, occupation) or None if the result vanishes."""
    position = bisect_left(occupied, index)
    if position == len(occupied) or occupied[position] != index:
        return None
    sign = -1 if position % 2 else 1
    return sign, occupied[:position] + occupied[position + 1:]


def create(occupied: Tuple[int, ...], index: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Apply a+_index; returns (sign, occupation) or None if the result vanishes."""
    position = bisect_left(occupied, index)
    if position < len(occupied) and occupied[position] == index:
        return None
    sign = -1 if position % 2 else 1
    return sign, occupied[:position] + (index,) + occupied[position:]


def excite(occupied: Tuple[int, ...], particle: int, hole: int) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Apply a+_particle a_hole."""
    removed = annihilate(occupied, hole)
    if removed is None:
        return None
    added = create(removed[1], particle)
    if added is None:
        return None
    return removed[0] * added[0], added[1]


def enumerate_space(N: int) -> List[Determinant]:
    """
    All determinants with the 1s shell filled and N - 2 electrons in the
    eight 2s/2p spin-orbitals; C(8, N - 2) of them.

    Args:
        N (int): Electron count, 3..10.

    Returns:
        List[Determinant]: Determinants in lexicographic order.
    """
    validate_electron_count(N, 3, 10)
    valence = range(2, N_SPIN_ORBITALS)
    return [Determinant(CORE_SPIN_ORBITALS + chosen) for chosen in combinations(valence, N - 2)]
