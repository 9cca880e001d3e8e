from typing import Sequence

import numpy as np

from determinant.operators import OperatorMatrix, OperatorTag
from determinant.space import Determinant, annihilate, create, enumerate_space, orbital_of, spin_of
from integrals.closed_form import IntegralSet


def _one_body(ints: IntegralSet, p: int, q: int) -> float:
    if spin_of(p) != spin_of(q):
        return 0.0
    return float(ints.one_body(orbital_of(p), orbital_of(q)))


def _two_body(ints: IntegralSet, p: int, q: int, r: int, s: int) -> float:
    """Spin-orbital integral (pq|rs) in chemist's notation."""
    if spin_of(p) != spin_of(q) or spin_of(r) != spin_of(s):
        return 0.0
    return float(ints.two_body(orbital_of(p), orbital_of(q), orbital_of(r), orbital_of(s)))


def _diagonal(occupied: Sequence[int], ints: IntegralSet) -> float:
    value = sum(_one_body(ints, i, i) for i in occupied)
    for position, i in enumerate(occupied):
        for j in occupied[position + 1:]:
            value += _two_body(ints, i, i, j, j) - _two_body(ints, i, j, j, i)
    return value


def slater_condon_H(d1: Determinant, d2: Determinant, ints: IntegralSet) -> float:
    """
    Matrix element <d1|H|d2> by the Slater-Condon rules.

    Args:
        d1 (Determinant): Bra determinant.
        d2 (Determinant): Ket determinant.
        ints (IntegralSet): Integral values.

    Returns:
        float: The matrix element; zero when the determinants differ in more
        than two spin-orbitals.
    """
    holes = sorted(set(d2.occupied) - set(d1.occupied))
    particles = sorted(set(d1.occupied) - set(d2.occupied))
    if len(holes) != len(particles) or len(holes) > 2:
        return 0.0
    if not holes:
        return _diagonal(d1.occupied, ints)

    sign = 1
    state = d2.occupied
    for hole in holes:
        sign_step, state = annihilate(state, hole)
        sign *= sign_step
    for particle in reversed(particles):
        sign_step, state = create(state, particle)
        sign *= sign_step

    if len(holes) == 1:
        p, h = particles[0], holes[0]
        value = _one_body(ints, p, h)
        for j in d2.occupied:
            if j != h:
                value += _two_body(ints, p, h, j, j) - _two_body(ints, p, j, j, h)
        return sign * value

    (p1, p2), (h1, h2) = particles, holes
    return sign * (_two_body(ints, p1, h1, p2, h2) - _two_body(ints, p1, h2, p2, h1))


def build_hamiltonian(N: int, ints: IntegralSet) -> OperatorMatrix:
    """
    Dense Hamiltonian over the full configuration space of the N-electron atom.

    Args:
        N (int): Electron count, 3..10.
        ints (IntegralSet): Integral values; every symbol the space needs must
            be present, so dilation parameters must all be used.

    Returns:
        OperatorMatrix: Real symmetric matrix tagged H.
    """
    if ints.is_exact:
        ints = ints.as_float()
    space = enumerate_space(N)
    dimension = len(space)
    matrix = np.zeros((dimension, dimension))
    for row, bra in enumerate(space):
        for col in range(row, dimension):
            value = slater_condon_H(bra, space[col], ints)
            matrix[row, col] = matrix[col, row] = value
    return OperatorMatrix(OperatorTag.H, matrix, tuple(space))
