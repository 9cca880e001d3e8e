import math

import pytest

from determinant.space import (
    Determinant,
    SpinOrbital,
    annihilate,
    create,
    enumerate_space,
    excite)
from exceptions import DomainError
from orbitals.basis import OrbitalId


def test_spin_orbital_indexing():
    assert SpinOrbital(OrbitalId.S1, 0.5).index == 0
    assert SpinOrbital(OrbitalId.S1, -0.5).index == 1
    assert SpinOrbital(OrbitalId.P2, -0.5).index == 9
    assert SpinOrbital.from_index(6) == SpinOrbital(OrbitalId.P1, 0.5)
    with pytest.raises(DomainError):
        SpinOrbital.from_index(10)
    with pytest.raises(DomainError):
        SpinOrbital(OrbitalId.S2, 1.0)


@pytest.mark.parametrize("occupied", [(0, 0, 1), (1, 0), (0, 12)])
def test_determinant_rejects_bad_occupations(occupied):
    with pytest.raises(DomainError):
        Determinant(occupied)


def test_determinant_properties():
    determinant = Determinant((0, 1, 2, 7))
    assert determinant.n_electrons == 4
    assert determinant.spin_projection == 0.0
    assert determinant.n_p_electrons == 1
    assert 7 in determinant
    assert str(determinant) == "|1 1b 2 4b|"


def test_creation_and_annihilation_signs():
    """
    Given the occupation (0, 1, 4)
    When operators act at different positions
    Then the sign is (-1) to the number of occupied spin-orbitals passed.
    """
    assert annihilate((0, 1, 4), 4) == (1, (0, 1))
    assert annihilate((0, 1, 4), 1) == (-1, (0, 4))
    assert annihilate((0, 1, 4), 3) is None
    assert create((0, 4), 2) == (-1, (0, 2, 4))
    assert create((0, 4), 4) is None
    assert excite((0, 1, 4), 2, 1) == (1, (0, 2, 4))
    assert excite((0, 1, 4), 4, 4) == (1, (0, 1, 4))


@pytest.mark.parametrize("N, dimension", [
    (3, 8), (4, 28), (5, 56), (6, 70), (7, 56), (8, 28), (9, 8), (10, 1),
])
def test_enumerate_space_dimensions(N, dimension):
    """
    Given atom N
    When the configuration space is enumerated
    Then it has C(8, N - 2) determinants, all with a filled 1s shell.
    """
    # When
    space = enumerate_space(N)

    # Then
    assert len(space) == dimension == math.comb(8, N - 2)
    assert len(set(space)) == dimension
    assert all(determinant.occupied[:2] == (0, 1) and determinant.n_electrons == N for determinant in space)


@pytest.mark.parametrize("N", [1, 2, 11])
def test_enumerate_space_rejects_out_of_range(N):
    with pytest.raises(DomainError):
        enumerate_space(N)
