import numpy as np
import pytest

from blocks.solver import blocks_for, find_block, small_atom_block
from blocks.symbolic import SymmetryLabel
from blocks.tables import element_symbol
from exceptions import BoundaryError, DomainError
from optimize.optimizer import (
    active_parameters,
    initial_guess,
    lowest_energy,
    optimize_small_atom,
    optimize_subspace,
    random_starts,
    stationarity_gradient,
    virial_ratio,
    virial_split)
from orbitals.basis import DilationParams


@pytest.fixture(scope="module")
def lithium_ground():
    """Optimized Li ²S at Z = 3."""
    block = find_block(3, SymmetryLabel.parse("2S"))
    return optimize_subspace(3, 3.0, block)


def test_active_parameters_follow_the_orbitals_in_use():
    assert active_parameters(find_block(3, SymmetryLabel.parse("2S"))) == ("z1", "z2")
    assert active_parameters(find_block(3, SymmetryLabel.parse("2Po"))) == ("z1", "z3")
    assert active_parameters(find_block(4, SymmetryLabel.parse("1S"))) == ("z1", "z2", "z3")
    assert active_parameters(small_atom_block(2)) == ("z1",)


def test_initial_guess_offsets_and_fallback():
    """
    Given the offsets (0.3, 2, 2.5)
    When the guess is built for Z = 3 and Z = 2
    Then non-positive entries fall back to Z / 2.
    """
    np.testing.assert_allclose(initial_guess(3.0, ("z1", "z2", "z3")), [2.7, 1.0, 0.5])
    np.testing.assert_allclose(initial_guess(2.0, ("z1", "z2", "z3")), [1.7, 1.0, 1.0])
    np.testing.assert_allclose(initial_guess(5.0, ("z1", "z3")), [4.7, 2.5])


def test_random_starts_lie_in_the_search_box():
    starts = random_starts(4.0, 10, np.random.default_rng(0))
    assert starts.shape == (10, 3)
    assert np.all((starts >= 2.0) & (starts <= 4.8))


@pytest.mark.parametrize("Z", [1.0, 2.0, 7.5])
def test_small_atom_closed_form(Z):
    """
    Given a one- or two-electron system
    When it is optimized
    Then H-like gives z1 = Z, E = -Z^2/2 and He-like z1 = Z - 5/16, E = -(Z - 5/16)^2.
    """
    # When
    hydrogenic = optimize_small_atom(1, Z)
    helium_like = optimize_small_atom(2, Z)

    # Then
    assert hydrogenic.params_star.z1 == Z
    assert hydrogenic.energy == pytest.approx(-0.5 * Z * Z)
    assert helium_like.params_star.z1 == pytest.approx(Z - 5.0 / 16.0)
    assert helium_like.energy == pytest.approx(-(Z - 5.0 / 16.0) ** 2)
    assert helium_like.active_parameters == ("z1",)


def test_helium_ground_energy():
    assert optimize_small_atom(2, 2).energy == pytest.approx(-(27.0 / 16.0) ** 2)


def test_small_atom_without_bound_minimizer():
    with pytest.raises(BoundaryError):
        optimize_small_atom(2, 0.3)


def test_lithium_ground_state(lithium_ground):
    """
    Given the Li ²S block at Z = 3
    When the lowest eigenvalue is minimized
    Then E = -7.4139 at (z1, z2) = (2.6937, 1.5334) and z3 stays unused.
    """
    assert lithium_ground.energy == pytest.approx(-7.4139, abs=5e-4)
    assert lithium_ground.params_star.z1 == pytest.approx(2.6937, abs=5e-3)
    assert lithium_ground.params_star.z2 == pytest.approx(1.5334, abs=5e-3)
    assert lithium_ground.params_star.z3 is None
    assert lithium_ground.active_parameters == ("z1", "z2")
    assert lithium_ground.converged
    assert len(lithium_ground.levels) == 1


def test_optimum_is_stationary_and_virial(lithium_ground):
    """
    Given the optimized Li ground state
    Then the gradient vanishes and the virial ratio V/T is -2.
    """
    # Given
    block = lithium_ground.block

    # Then
    gradient = stationarity_gradient(block, 3.0, lithium_ground.params_star)
    assert np.linalg.norm(gradient) < 1e-5
    assert lithium_ground.gradient_norm < 1e-5
    assert virial_ratio(block, 3, 3.0, lithium_ground.params_star) == pytest.approx(-2.0, abs=1e-6)


def test_optimum_is_below_perturbation_theory(lithium_ground):
    block = lithium_ground.block
    assert lithium_ground.energy < lowest_energy(block, 3.0, DilationParams.uniform(3.0))


@pytest.mark.parametrize("atom, N", [
    ("Li", 3), ("Be", 4), ("B", 5), ("C", 6), ("N", 7), ("O", 8), ("F", 9), ("Ne", 10),
])
def test_virial_ratio_at_pt(atom, N, reference_data):
    """
    Given the ground block at z1 = z2 = z3 = Z = N
    When V/T is evaluated
    Then it matches the tabulated perturbation-theory ratio to 1e-3, and
    fluorine, whose printed ratio disagrees with its own tabulated E_PT,
    matches the reproduced ratio.
    """
    # Given
    block = find_block(N, reference_data.ground_terms[atom])

    # When
    ratio = virial_ratio(block, N, float(N), DilationParams.uniform(float(N)))

    # Then
    assert ratio == pytest.approx(reference_data.virial_ratios_pt[atom], abs=1e-3)
    entry = reference_data.inconsistencies["virial_ratios_pt"].get(atom)
    if entry is not None:
        assert ratio == pytest.approx(entry["reproduced"], abs=1e-4)


def test_virial_split_reassembles_the_energy(be_ground_params):
    block = find_block(4, SymmetryLabel.parse("1S"))
    kinetic, potential = virial_split(block, 4, 4.0, be_ground_params)
    assert kinetic > 0.0 > potential
    assert kinetic + potential == pytest.approx(lowest_energy(block, 4.0, be_ground_params))


def test_box_constraint_raises_boundary_error():
    """
    Given a lower bound of 2 for Li ²S, whose optimal z2 is about 1.53
    When the block is optimized
    Then a BoundaryError carrying the best point is raised.
    """
    # Given
    block = find_block(3, SymmetryLabel.parse("2S"))

    # When/Then
    with pytest.raises(BoundaryError) as error:
        optimize_subspace(3, 3.0, block, starts=[(3.0, 3.0, 3.0)], settings={"lower_bound": 2.0})
    assert error.value.best is not None
    assert error.value.best.params_star.z2 == pytest.approx(2.0, abs=1e-3)


def test_optimize_subspace_rejects_foreign_blocks():
    with pytest.raises(DomainError):
        optimize_subspace(4, 4.0, blocks_for(3)[0])
    with pytest.raises(DomainError):
        optimize_subspace(3, 0.0, blocks_for(3)[0])


@pytest.mark.slow
def test_random_starts_reach_the_same_minimum():
    """
    Given the Be ¹S block and ten random starting points
    When each start is optimized separately
    Then all reach the same energy within 1e-7.
    """
    # Given
    block = find_block(4, SymmetryLabel.parse("1S"))
    starts = random_starts(4.0, 10, np.random.default_rng(11))

    # When
    energies = [optimize_subspace(4, 4.0, block, starts=[start]).energy for start in starts]

    # Then
    assert max(energies) - min(energies) < 1e-7
    assert energies[0] == pytest.approx(-14.5795, abs=5e-4)


@pytest.mark.slow
@pytest.mark.parametrize("N", range(3, 11))
def test_every_block_optimum_is_stationary_and_virial(N):
    """
    Given every symmetry block of atom N
    When its lowest level is optimized at Z = N
    Then the energy gradient is below 1e-5 and V/T = -2 within 1e-6.
    """
    for block in blocks_for(N):
        # When
        result = optimize_subspace(N, float(N), block)

        # Then
        where = f"N={N} {block.label.ascii}"
        gradient = stationarity_gradient(block, float(N), result.params_star)
        assert np.linalg.norm(gradient) < 1e-5, where
        assert virial_ratio(block, N, float(N), result.params_star) == pytest.approx(
            -2.0, abs=1e-6), where


@pytest.mark.slow
@pytest.mark.parametrize("N", range(3, 11))
def test_random_starts_agree_for_every_ground_block(N, reference_data):
    """
    Given the ground block of atom N and ten random starting points
    When each start is optimized separately
    Then all reach the same energy within 1e-7.
    """
    # Given
    block = find_block(N, reference_data.ground_terms[element_symbol(N)])
    starts = random_starts(float(N), 10, np.random.default_rng(N))

    # When
    energies = [optimize_subspace(N, float(N), block, starts=[start]).energy for start in starts]

    # Then
    assert max(energies) - min(energies) < 1e-7
