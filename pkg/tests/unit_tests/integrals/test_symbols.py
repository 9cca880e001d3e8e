import pytest

from exceptions import DomainError
from integrals.symbols import IntegralKind, IntegralSymbol, canonical_symbol


def test_there_are_fourteen_canonical_symbols():
    assert len(IntegralSymbol) == 14
    assert sum(symbol.kind == IntegralKind.ONE_BODY for symbol in IntegralSymbol) == 3
    assert sum(symbol.kind == IntegralKind.EXCHANGE for symbol in IntegralSymbol) == 4


def test_symbol_properties():
    """
    Given the (23|32) exchange integral
    Then its orbitals, kind and parameters are read from the label.
    """
    # Given
    symbol = IntegralSymbol.from_label("(23|32)")

    # Then
    assert symbol == IntegralSymbol.K2332
    assert symbol.orbitals == (2, 3, 3, 2)
    assert symbol.kind == IntegralKind.EXCHANGE
    assert symbol.dilation_parameters == ("z1", "z2", "z3")
    assert IntegralSymbol.J3333.dilation_parameters == ("z1", "z3")


def test_from_label_ignores_spaces_and_rejects_unknown_labels():
    assert IntegralSymbol.from_label("(11 | 22)") == IntegralSymbol.J1122
    with pytest.raises(DomainError):
        IntegralSymbol.from_label("(15|51)")


@pytest.mark.parametrize("indices, expected", [
    ((1, 1, 1, 1), IntegralSymbol.J1111),
    ((2, 2, 1, 1), IntegralSymbol.J1122),
    ((2, 1, 1, 2), IntegralSymbol.K1221),
    ((1, 2, 2, 1), IntegralSymbol.K1221),
    ((4, 4, 1, 1), IntegralSymbol.J1133),
    ((5, 1, 1, 5), IntegralSymbol.K1331),
    ((2, 5, 5, 2), IntegralSymbol.K2332),
    ((4, 4, 4, 4), IntegralSymbol.J3333),
    ((5, 5, 3, 3), IntegralSymbol.J3344),
    ((4, 5, 5, 4), IntegralSymbol.K3443),
    ((4, 5, 4, 5), IntegralSymbol.K3443),
])
def test_canonical_symbol_uses_the_symmetries(indices, expected):
    assert canonical_symbol(*indices) == expected


@pytest.mark.parametrize("indices", [(1, 3, 1, 1), (3, 4, 3, 3), (1, 2, 3, 4), (3, 3, 3, 4)])
def test_canonical_symbol_returns_none_for_vanishing_integrals(indices):
    assert canonical_symbol(*indices) is None


def test_canonical_symbol_rejects_integrals_outside_the_model():
    """
    Given (11|12), which does not vanish by symmetry
    When it is canonicalized
    Then a DomainError is raised.
    """
    with pytest.raises(DomainError):
        canonical_symbol(1, 1, 1, 2)
