"""Angular momentum, spin and parity operators on the determinant basis.

One-body operators are given on the 10 spin-orbitals and lifted to the
N-electron space by sum_j A(j), i.e. M[a+_p a_q d, d] += o[p, q] * sign.
On real p orbitals L_i = i * A_i with (A_i)[k, j] = eps(i, axis(j), axis(k)),
which gives L3 p1 = i p2 and L3 p2 = -i p1.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

import numpy as np

from determinant.space import Determinant, enumerate_space, excite
from exceptions import DomainError
from orbitals.basis import OrbitalId


class OperatorTag(Enum):
    H = "H"
    L2 = "L2"
    S2 = "S2"
    L3 = "L3"
    S3 = "S3"
    PARITY = "parity"

    @classmethod
    def parse(cls, text: Union[str, "OperatorTag"]) -> "OperatorTag":
        if isinstance(text, cls):
            return text
        normalized = str(text).replace("²", "2").replace("₃", "3").strip()
        for tag in cls:
            if tag.value.lower() == normalized.lower():
                return tag
        raise DomainError(f"Unknown operator tag: {text!r}")


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense matrix of an operator over a determinant basis."""
    tag: OperatorTag
    matrix: np.ndarray
    basis: Tuple[Determinant, ...]

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def is_hermitian(self, tolerance: float = 1e-12) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=tolerance, rtol=0.0))


def _levi_civita(i: int, j: int, k: int) -> int:
    return (i - j) * (j - k) * (k - i) // 2


def _spatial_generator(axis: int) -> np.ndarray:
    """Real antisymmetric A_axis on the five spatial orbitals (L_axis = i A_axis)."""
    generator = np.zeros((5, 5))
    for j in range(3):
        for k in range(3):
            row, col = int(OrbitalId.p_orbital(k)) - 1, int(OrbitalId.p_orbital(j)) - 1
            generator[row, col] = _levi_civita(axis, j, k)
    return generator


_SPIN_X = np.array([[0.0, 0.5], [0.5, 0.0]])
_SPIN_Y_IMAG = np.array([[0.0, -0.5], [0.5, 0.0]])  # S_y = i * this
_SPIN_Z = np.array([[0.5, 0.0], [0.0, -0.5]])


def spin_orbital_matrix(spatial: np.ndarray = None, spin: np.ndarray = None) -> np.ndarray:
    """10x10 matrix spatial (x) spin in the spin-orbital ordering."""
    spatial = np.eye(5) if spatial is None else spatial
    spin = np.eye(2) if spin is None else spin
    return np.kron(spatial, spin)


def lift_one_body(operator: np.ndarray, space) -> np.ndarray:
    """
    Matrix of sum_j A(j) on a determinant basis for a one-body A given on the
    spin-orbitals.

    Args:
        operator (np.ndarray): 10x10 spin-orbital matrix, o[p, q] = <p|A|q>.
        space (Sequence[Determinant]): The basis.

    Returns:
        np.ndarray: The lifted matrix (same dtype as `operator`).
    """
    position = {determinant.occupied: index for index, determinant in enumerate(space)}
    lifted = np.zeros((len(space), len(space)), dtype=operator.dtype)
    nonzero = list(zip(*np.nonzero(operator)))
    for col, determinant in enumerate(space):
        for p, q in nonzero:
            result = excite(determinant.occupied, int(p), int(q))
            if result is None:
                continue
            sign, occupied = result
            row = position.get(occupied)
            if row is None:
                raise DomainError(f"Operator leaves the configuration space at {determinant}")
            lifted[row, col] += sign * operator[p, q]
    return lifted


def _angular_momentum_squared(space) -> np.ndarray:
    total = np.zeros((len(space), len(space)))
    for axis in range(3):
        generator = lift_one_body(spin_orbital_matrix(spatial=_spatial_generator(axis)), space)
        total -= generator @ generator
    return total


def _spin_squared(space) -> np.ndarray:
    s_x = lift_one_body(spin_orbital_matrix(spin=_SPIN_X), space)
    s_y_imag = lift_one_body(spin_orbital_matrix(spin=_SPIN_Y_IMAG), space)
    s_z = lift_one_body(spin_orbital_matrix(spin=_SPIN_Z), space)
    return s_x @ s_x - s_y_imag @ s_y_imag + s_z @ s_z


def build_operator(tag: Union[str, OperatorTag], N: int) -> OperatorMatrix:
    """
    Matrix of L^2, S^2, L3, S3 or parity over the configuration space of atom N.

    L3 is complex Hermitian; the other operators are real symmetric.

    Args:
        tag (str or OperatorTag): 'L2', 'S2', 'L3', 'S3' or 'parity'.
        N (int): Electron count, 3..10.

    Returns:
        OperatorMatrix: The operator matrix.

    Raises:
        DomainError: For the tag H (use build_hamiltonian) or an unknown tag.
    """
    tag = OperatorTag.parse(tag)
    space = enumerate_space(N)
    if tag == OperatorTag.L2:
        matrix = _angular_momentum_squared(space)
    elif tag == OperatorTag.S2:
        matrix = _spin_squared(space)
    elif tag == OperatorTag.L3:
        matrix = 1j * lift_one_body(spin_orbital_matrix(spatial=_spatial_generator(2)), space)
    elif tag == OperatorTag.S3:
        matrix = np.diag([determinant.spin_projection for determinant in space])
    elif tag == OperatorTag.PARITY:
        matrix = np.diag([(-1.0) ** determinant.n_p_electrons for determinant in space])
    else:
        raise DomainError("The Hamiltonian depends on integrals; use build_hamiltonian")
    return OperatorMatrix(tag, matrix, tuple(space))


def commutator_norm(first, second) -> float:
    """Spectral norm of [A, B] for OperatorMatrix or plain arrays."""
    a = first.matrix if isinstance(first, OperatorMatrix) else np.asarray(first)
    b = second.matrix if isinstance(second, OperatorMatrix) else np.asarray(second)
    return float(np.linalg.norm(a @ b - b @ a, ord=2))
