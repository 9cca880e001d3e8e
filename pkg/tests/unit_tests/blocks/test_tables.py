import math

import pytest

from blocks.solver import blocks_for, level_keys
from blocks.symbolic import SymmetryLabel
from blocks.tables import BLOCKS, ELEMENTS, element_symbol, resolve_atom, validate_electron_count
from exceptions import DomainError
from integrals.symbols import IntegralSymbol


@pytest.mark.parametrize("N, n_blocks, n_levels", [
    (3, 2, 2), (4, 5, 6), (5, 7, 8), (6, 9, 12), (7, 7, 8), (8, 5, 6), (9, 2, 2), (10, 1, 1),
])
def test_block_and_level_counts(N, n_blocks, n_levels):
    assert len(blocks_for(N)) == n_blocks
    assert len(level_keys(N)) == n_levels


@pytest.mark.parametrize("N", range(3, 11))
def test_blocks_exhaust_the_configuration_space(N):
    """
    Given the blocks of atom N
    When each block's states are counted with their (2S+1)(2L+1) degeneracy
    Then the total is the configuration-space dimension C(8, N - 2).
    """
    # When
    states = sum(block.dimension * block.label.degeneracy for block in blocks_for(N))

    # Then
    assert states == math.comb(8, N - 2)


@pytest.mark.parametrize("N", range(3, 11))
def test_every_state_has_n_electrons(N):
    """
    Given any diagonal entry
    Then its one-body coefficients count N electrons and the 1s shell is full.
    """
    for block in blocks_for(N):
        for entry in block.diagonal:
            counts = [entry.coefficient(symbol) for symbol in
                      (IntegralSymbol.H11, IntegralSymbol.H22, IntegralSymbol.H33)]
            assert sum(counts) == N
            assert counts[0] == 2
            assert entry.coefficient(IntegralSymbol.J1111) == 1


def test_terms_are_unique_per_atom():
    for N, blocks in BLOCKS.items():
        labels = [block.label for block in blocks]
        assert len(labels) == len(set(labels)), N


def test_two_by_two_blocks_mix_2s2_and_2p2_configurations():
    """
    Given the Be ¹S block
    Then its basis is 1s2 2s2 / 1s2 2p2 with cross term √3(23|32).
    """
    # When
    block = [block for block in blocks_for(4) if block.label == SymmetryLabel.parse("1S")][0]

    # Then
    assert block.basis == ("1s2 2s2", "1s2 2p2")
    assert block.cross.render() == "√3(23|32)"


def test_corrected_entries():
    """
    Given the blocks whose printed entries needed correction
    Then C ¹S and O ¹S carry the corrected p counts.
    """
    # Given
    carbon = {block.label.ascii: block for block in blocks_for(6)}
    oxygen = {block.label.ascii: block for block in blocks_for(8)}

    # Then
    assert carbon["1S"].diagonal[0].coefficient(IntegralSymbol.H33) == 2
    assert oxygen["1S"].diagonal[1].coefficient(IntegralSymbol.H33) == 6


def test_element_symbols_and_resolution():
    assert ELEMENTS[0] == "H" and ELEMENTS[-1] == "Ne"
    assert element_symbol(6) == "C"
    assert resolve_atom("be") == 4
    assert resolve_atom("Ne") == 10
    assert resolve_atom("7") == 7
    assert resolve_atom(3) == 3


@pytest.mark.parametrize("atom", ["Xx", "11", 0, "Na", True])
def test_resolve_atom_rejects_unknown_atoms(atom):
    with pytest.raises(DomainError):
        resolve_atom(atom)


@pytest.mark.parametrize("N", [2, 11, 4.0, True])
def test_blocks_for_rejects_invalid_electron_counts(N):
    with pytest.raises(DomainError):
        blocks_for(N)


def test_validate_electron_count_bounds():
    validate_electron_count(0, 0, 10)
    with pytest.raises(DomainError):
        validate_electron_count(-1, 0, 10)
