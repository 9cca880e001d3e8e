import math
from fractions import Fraction

import pytest

from blocks.symbolic import (
    Coefficient,
    SymbolicEnergy,
    SymmetryBlock,
    SymmetryLabel,
    configuration_of)
from exceptions import DomainError
from integrals.symbols import IntegralSymbol


@pytest.mark.parametrize("text, L, two_S, parity", [
    ("2S", 0, 1, 1),
    ("2Po", 1, 1, -1),
    ("4So", 0, 3, -1),
    ("1D", 2, 0, 1),
    ("²P°", 1, 1, -1),
    ("³P", 1, 2, 1),
])
def test_symmetry_label_parse(text, L, two_S, parity):
    assert SymmetryLabel.parse(text) == SymmetryLabel(L, two_S, parity)


def test_symmetry_label_rendering_and_degeneracy():
    """
    Given the ²D° term
    Then it renders with superscripts or ASCII and is 10-fold degenerate.
    """
    # Given
    label = SymmetryLabel.parse("2Do")

    # Then
    assert label.term == "²D°"
    assert label.ascii == "2Do"
    assert str(label) == "²D°"
    assert label.degeneracy == 10
    assert label.S == 0.5
    assert label.multiplicity == 2


@pytest.mark.parametrize("text", ["", "2X", "0S", "S2", "2Pe"])
def test_symmetry_label_rejects_garbage(text):
    with pytest.raises(DomainError):
        SymmetryLabel.parse(text)


def test_coefficient_render_and_value():
    assert Coefficient(Fraction(1)).render() == ""
    assert Coefficient(Fraction(-2)).render() == "2"
    assert Coefficient(Fraction(1), 3).render() == "√3"
    assert Coefficient(Fraction(2), 2).value == pytest.approx(2.0 * math.sqrt(2.0))
    assert Coefficient(Fraction(1, 2)).exact() == Fraction(1, 2)
    with pytest.raises(DomainError):
        Coefficient(Fraction(1), 5)


def test_symbolic_energy_parse_merges_repeated_symbols():
    """
    Given an expression naming (3|3) twice
    When it is parsed
    Then the coefficients are merged.
    """
    # When
    expression = SymbolicEnergy.parse("2(3|3) + (11|33) + 3(3|3) - (13|31)")

    # Then
    assert expression.coefficient(IntegralSymbol.H33) == 5
    assert expression.coefficient(IntegralSymbol.K1331) == -1
    assert expression.coefficient(IntegralSymbol.J1111) == 0
    assert len(expression) == 3


def test_symbolic_energy_render_parses_back():
    """
    Given a mixed expression with a radical
    When it is rendered and parsed again
    Then the same expression results.
    """
    # Given
    expression = SymbolicEnergy.parse("2(1|1) - (12|21) + √2(23|32)")

    # When
    rendered = expression.render()

    # Then
    assert rendered == "2(1|1) - (12|21) + √2(23|32)"
    assert SymbolicEnergy.parse(rendered) == expression
    assert not expression.is_rational


@pytest.mark.parametrize("text", ["2(1|1) (11|11)", "2(1|1) + x", "(19|91)", "   "])
def test_symbolic_energy_rejects_unparsable_text(text):
    with pytest.raises(DomainError):
        SymbolicEnergy.parse(text)


def test_evaluate_is_exact_on_exact_integrals(pt_ints):
    """
    Given the He expression 2(1|1) + (11|11) and exact PT integrals at Z = 2
    When it is evaluated
    Then the result is the Fraction -11/4.
    """
    # When
    value = SymbolicEnergy.parse("2(1|1) + (11|11)").evaluate(pt_ints[2])

    # Then
    assert value == Fraction(-11, 4)


def test_evaluate_radical_terms_as_float(pt_ints):
    value = SymbolicEnergy.parse("√3(23|32)").evaluate(pt_ints[4])
    assert isinstance(value, float)
    assert value == pytest.approx(math.sqrt(3.0) * 15.0 / 512.0 * 4.0)


def test_configuration_of_reads_one_body_counts():
    expression = SymbolicEnergy.parse("2(1|1) + 2(2|2) + (3|3) + (11|11)")
    assert configuration_of(expression) == "1s2 2s2 2p1"


def test_symmetry_block_validation():
    """
    Given malformed block definitions
    Then SymmetryBlock refuses a 2x2 block without a cross term, a 1x1 block
    with one, and a radical on the diagonal.
    """
    # Given
    label = SymmetryLabel.parse("1S")
    entry = SymbolicEnergy.parse("2(1|1) + (11|11)")

    # Then
    with pytest.raises(DomainError):
        SymmetryBlock(4, label, (entry, entry))
    with pytest.raises(DomainError):
        SymmetryBlock(4, label, (entry,), SymbolicEnergy.parse("(23|32)"))
    with pytest.raises(DomainError):
        SymmetryBlock(4, label, (SymbolicEnergy.parse("√2(23|32)"),))


def test_symmetry_block_derived_properties():
    """
    Given a 2x2 block over 1s2 2s2 and 1s2 2p2
    Then its basis, symbols and parameter usage are derived from the entries.
    """
    # Given
    block = SymmetryBlock(
        4, SymmetryLabel.parse("1S"),
        (SymbolicEnergy.parse("2(1|1) + 2(2|2) + (11|11)"),
         SymbolicEnergy.parse("2(1|1) + 2(3|3) + (11|11)")),
        SymbolicEnergy.parse("√3(23|32)"))

    # Then
    assert block.dimension == 2
    assert block.name == "N=4 ¹S"
    assert block.basis == ("1s2 2s2", "1s2 2p2")
    assert block.uses_2s and block.uses_2p
    assert IntegralSymbol.K2332 in block.symbols
    assert len(block.expressions()) == 3
