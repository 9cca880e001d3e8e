import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from blocks.symbolic import SymmetryBlock, SymmetryLabel
from blocks.tables import BLOCKS, SMALL_ATOM_BLOCKS, validate_electron_count
from exceptions import DomainError
from integrals.closed_form import IntegralSet

LOWER = "lower"
UPPER = "upper"


@dataclass(frozen=True)
class BlockEigenpair:
    """One eigenvalue of a block with its normalized eigenvector.

    The eigenvector is (1, c) / sqrt(1 + c^2) in the block basis, where c is the
    mixing (correlation) coefficient of the second basis state relative to the
    first. c is None for 1x1 blocks and inf for a pure second basis state.
    """
    energy: float
    mixing: Optional[float] = None
    label: Optional[SymmetryLabel] = None
    which_root: str = LOWER

    @property
    def coefficients(self) -> np.ndarray:
        if self.mixing is None:
            return np.array([1.0])
        if math.isinf(self.mixing):
            return np.array([0.0, 1.0])
        norm = math.sqrt(1.0 + self.mixing ** 2)
        return np.array([1.0, self.mixing]) / norm


def blocks_for(N: int) -> List[SymmetryBlock]:
    """
    The symmetry blocks of the N-electron atom, in table order.

    Args:
        N (int): Electron count, 3..10.

    Returns:
        List[SymmetryBlock]: One block per term.

    Raises:
        DomainError: If N is outside 3..10.
    """
    validate_electron_count(N, 3, 10)
    return list(BLOCKS[N])


def small_atom_block(N: int) -> SymmetryBlock:
    """The single 1x1 block of H (N=1) or He (N=2)."""
    validate_electron_count(N, 1, 2)
    return SMALL_ATOM_BLOCKS[N]


def any_blocks_for(N: int) -> List[SymmetryBlock]:
    """All blocks for N in 1..10, including the one-block small atoms."""
    validate_electron_count(N, 1, 10)
    return [small_atom_block(N)] if N <= 2 else blocks_for(N)


def evaluate_block(block: SymmetryBlock, ints: IntegralSet) -> np.ndarray:
    """
    Substitute integral values into a block.

    Args:
        block (SymmetryBlock): The block.
        ints (IntegralSet): Integral values at some Z and dilation parameters.

    Returns:
        np.ndarray: Symmetric 1x1 or 2x2 matrix in hartree.
    """
    matrix = np.diag([float(entry.evaluate(ints)) for entry in block.diagonal])
    if block.cross is not None:
        matrix[0, 1] = matrix[1, 0] = float(block.cross.evaluate(ints))
    return matrix


def _as_matrix(matrix) -> np.ndarray:
    values = np.atleast_2d(np.asarray(matrix, dtype=float))
    if values.shape not in ((1, 1), (2, 2)):
        raise DomainError(f"Expected a 1x1 or 2x2 block, got shape {values.shape}")
    if values.shape == (2, 2) and not math.isclose(values[0, 1], values[1, 0],
                                                   rel_tol=1e-12, abs_tol=1e-14):
        raise DomainError(f"Block matrix is not symmetric: {values.tolist()}")
    return values


def solve_block(matrix, label: Optional[SymmetryLabel] = None) -> List[BlockEigenpair]:
    """
    Closed-form eigenpairs of a 1x1 or 2x2 symmetric block, ascending.

    For a 2x2 block with H12 != 0,
        lambda(+/-) = (H11 + H22)/2 +/- R,  R = sqrt(((H11 - H22)/2)^2 + H12^2),
        c(+/-) = ((H22 - H11)/2 +/- R) / H12.
    With H12 = 0 the basis states are the eigenstates, ordered by their
    diagonal value.

    Args:
        matrix (array-like): The block matrix.
        label (SymmetryLabel, optional): Term attached to every eigenpair.

    Returns:
        List[BlockEigenpair]: Lower root first.
    """
    values = _as_matrix(matrix)
    if values.shape == (1, 1):
        return [BlockEigenpair(float(values[0, 0]), None, label, LOWER)]

    h11, h22, h12 = values[0, 0], values[1, 1], values[0, 1]
    if h12 == 0.0:
        first = (float(h11), 0.0)
        second = (float(h22), math.inf)
        low, high = (first, second) if h11 <= h22 else (second, first)
        return [BlockEigenpair(low[0], low[1], label, LOWER),
                BlockEigenpair(high[0], high[1], label, UPPER)]

    half_gap = 0.5 * (h22 - h11)
    radius = math.hypot(half_gap, h12)
    mean = 0.5 * (h11 + h22)
    return [
        BlockEigenpair(mean - radius, (half_gap - radius) / h12, label, LOWER),
        BlockEigenpair(mean + radius, (half_gap + radius) / h12, label, UPPER),
    ]


def block_eigenpairs(block: SymmetryBlock, ints: IntegralSet) -> List[BlockEigenpair]:
    """Evaluate and solve a block in one step."""
    return solve_block(evaluate_block(block, ints), block.label)


def find_block(N: int, label: SymmetryLabel) -> SymmetryBlock:
    """
    The block of atom N carrying `label`.

    Raises:
        DomainError: If atom N has no such term.
    """
    for block in any_blocks_for(N):
        if block.label == label:
            return block
    raise DomainError(f"Term {label.term} does not occur for N={N}")


def level_keys(N: int) -> List[Tuple[SymmetryLabel, str]]:
    """(term, root) pairs of every level of atom N, in table order."""
    keys = []
    for block in any_blocks_for(N):
        keys.append((block.label, LOWER))
        if block.dimension == 2:
            keys.append((block.label, UPPER))
    return keys
