"""Labelled spectrum of the determinant-basis Hamiltonian and the block cross-check."""
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from blocks.solver import block_eigenpairs, blocks_for
from blocks.symbolic import SymmetryBlock, SymmetryLabel
from blocks.tables import element_symbol
from determinant.hamiltonian import build_hamiltonian
from determinant.operators import OperatorTag, build_operator
from exceptions import ConsistencyError
from integrals.closed_form import IntegralSet
from utils import get_logger, load_solver_config

logger = get_logger(__name__)

QUANTUM_NUMBER_TOLERANCE = 1e-6
ENERGY_CLUSTER_TOLERANCE = 1e-8


@dataclass(frozen=True)
class SpectralLevel:
    label: SymmetryLabel
    energy: float
    degeneracy: int


def _clusters(values: np.ndarray, tolerance: float) -> List[List[int]]:
    """Group indices of ascending `values` whose neighbours differ by <= tolerance."""
    groups: List[List[int]] = []
    for index, value in enumerate(values):
        if groups and abs(value - values[groups[-1][-1]]) <= tolerance:
            groups[-1].append(index)
        else:
            groups.append([index])
    return groups


def _quantum_number(eigenvalue: float, what: str) -> int:
    """Invert x = j(j+1) for 2j, checking the lattice."""
    two_j = int(round(math.sqrt(1.0 + 4.0 * max(eigenvalue, 0.0)) - 1.0))
    j = two_j / 2.0
    if abs(j * (j + 1.0) - eigenvalue) > QUANTUM_NUMBER_TOLERANCE:
        raise ConsistencyError(f"{what} eigenvalue {eigenvalue!r} is not of the form j(j+1)")
    return two_j


def _split(subspaces: List[Tuple[Dict, np.ndarray]], operator: np.ndarray,
           name: str) -> List[Tuple[Dict, np.ndarray]]:
    """Refine each (quantum numbers, orthonormal columns) pair by one commuting operator."""
    refined = []
    for numbers, columns in subspaces:
        projected = columns.T @ operator @ columns
        eigenvalues, eigenvectors = linalg.eigh(0.5 * (projected + projected.T))
        for group in _clusters(eigenvalues, QUANTUM_NUMBER_TOLERANCE):
            value = float(np.mean(eigenvalues[group]))
            refined.append(({**numbers, name: value}, columns @ eigenvectors[:, group]))
    return refined


def labeled_spectrum(N: int, ints: IntegralSet) -> List[SpectralLevel]:
    """
    Diagonalize H on the full configuration space and label every level.

    The space is split into joint eigenspaces of L^2, S^2 and parity, H is
    diagonalized in each, and every energy cluster is checked to have a size
    that is a multiple of (2S+1)(2L+1).

    Args:
        N (int): Electron count, 3..10.
        ints (IntegralSet): Integral values with all parameters used.

    Returns:
        List[SpectralLevel]: Levels sorted by energy (one entry per multiplet).

    Raises:
        ConsistencyError: If a quantum number is off the lattice by more than
            1e-6 or a degeneracy does not match its term.
    """
    hamiltonian = build_hamiltonian(N, ints).matrix
    dimension = hamiltonian.shape[0]
    subspaces = [({}, np.eye(dimension))]
    for tag in (OperatorTag.L2, OperatorTag.S2, OperatorTag.PARITY):
        subspaces = _split(subspaces, build_operator(tag, N).matrix, tag.value)

    levels: List[SpectralLevel] = []
    for numbers, columns in subspaces:
        parity = int(round(numbers["parity"]))
        if abs(numbers["parity"] - parity) > QUANTUM_NUMBER_TOLERANCE or parity not in (1, -1):
            raise ConsistencyError(f"Parity eigenvalue {numbers['parity']!r} is not +1 or -1")
        two_L = _quantum_number(numbers["L2"], "L^2")
        if two_L % 2:
            raise ConsistencyError(f"L^2 eigenvalue {numbers['L2']!r} gives half-integral L")
        label = SymmetryLabel(two_L // 2, _quantum_number(numbers["S2"], "S^2"), parity)
        projected = columns.T @ hamiltonian @ columns
        energies = linalg.eigh(0.5 * (projected + projected.T), eigvals_only=True)
        for group in _clusters(energies, ENERGY_CLUSTER_TOLERANCE):
            if len(group) % label.degeneracy:
                raise ConsistencyError(
                    f"N={N} {label.term}: cluster of {len(group)} states at "
                    f"{energies[group[0]]:.10f} is not a multiple of {label.degeneracy}")
            energy = float(np.mean(energies[group]))
            levels.extend(SpectralLevel(label, energy, label.degeneracy)
                          for _ in range(len(group) // label.degeneracy))
    levels.sort(key=lambda level: (level.energy, level.label))
    logger.debug("N=%d: %d levels over %d determinants", N, len(levels), dimension)
    return levels


def compare_with_blocks(N: int, ints: IntegralSet,
                        blocks: Optional[Sequence[SymmetryBlock]] = None,
                        tolerance: Optional[float] = None) -> List[str]:
    """
    Compare block eigenvalues with the labelled determinant spectrum.

    Args:
        N (int): Electron count, 3..10.
        ints (IntegralSet): Integral values with all parameters used.
        blocks (Sequence[SymmetryBlock], optional): Blocks to check; defaults
            to `blocks_for(N)`.
        tolerance (float, optional): Allowed energy difference, relative to
            max(1, |E|); defaults to `verification.block_tolerance`.

    Returns:
        List[str]: One message per mismatch; empty when everything agrees.
    """
    if blocks is None:
        blocks = blocks_for(N)
    if tolerance is None:
        tolerance = load_solver_config()["verification"]["block_tolerance"]
    atom = element_symbol(N)

    expected: Dict[SymmetryLabel, List[float]] = {}
    for level in labeled_spectrum(N, ints):
        expected.setdefault(level.label, []).append(level.energy)
    found: Dict[SymmetryLabel, List[float]] = {}
    for block in blocks:
        found.setdefault(block.label, []).extend(
            pair.energy for pair in block_eigenpairs(block, ints))

    mismatches = []
    for label in sorted(set(expected) | set(found)):
        oracle = sorted(expected.get(label, []))
        table = sorted(found.get(label, []))
        if len(oracle) != len(table):
            mismatches.append(
                f"{atom} {label.term}: {len(table)} block level(s) but "
                f"{len(oracle)} determinant level(s)")
            continue
        for block_energy, oracle_energy in zip(table, oracle):
            if abs(block_energy - oracle_energy) > tolerance * max(1.0, abs(oracle_energy)):
                mismatches.append(
                    f"{atom} {label.term}: block energy {block_energy:.12f} != "
                    f"determinant energy {oracle_energy:.12f}")
    return mismatches
