from enum import Enum
from typing import Optional, Tuple

from exceptions import DomainError
from orbitals.basis import OrbitalId


class IntegralKind(Enum):
    ONE_BODY = "one_body"
    COULOMB = "coulomb"
    EXCHANGE = "exchange"


class IntegralSymbol(Enum):
    """The 14 canonical one-body, Coulomb and exchange integrals."""
    H11 = "(1|1)"
    H22 = "(2|2)"
    H33 = "(3|3)"
    J1111 = "(11|11)"
    J1122 = "(11|22)"
    K1221 = "(12|21)"
    J2222 = "(22|22)"
    J1133 = "(11|33)"
    K1331 = "(13|31)"
    J2233 = "(22|33)"
    K2332 = "(23|32)"
    J3333 = "(33|33)"
    J3344 = "(33|44)"
    K3443 = "(34|43)"

    @property
    def label(self) -> str:
        return self.value

    @property
    def kind(self) -> IntegralKind:
        return _KINDS[self.name[0]]

    @property
    def orbitals(self) -> Tuple[int, ...]:
        """Orbital indices as written in the symbol, e.g. (1, 3, 3, 1)."""
        return tuple(int(char) for char in self.value if char.isdigit())

    @property
    def dilation_parameters(self) -> Tuple[str, ...]:
        """Names of the dilation parameters the integral depends on."""
        names = {"z1"}
        for index in self.orbitals:
            names.add(("z1", "z2", "z3")[min(index, 3) - 1])
        return tuple(sorted(names))

    @classmethod
    def from_label(cls, label: str) -> "IntegralSymbol":
        compact = label.replace(" ", "")
        for symbol in cls:
            if symbol.value == compact:
                return symbol
        raise DomainError(f"Unknown integral symbol: {label!r}")


_KINDS = {"H": IntegralKind.ONE_BODY, "J": IntegralKind.COULOMB, "K": IntegralKind.EXCHANGE}

ONE_BODY_SYMBOLS = {
    OrbitalId.S1: IntegralSymbol.H11,
    OrbitalId.S2: IntegralSymbol.H22,
    OrbitalId.P3: IntegralSymbol.H33,
    OrbitalId.P1: IntegralSymbol.H33,
    OrbitalId.P2: IntegralSymbol.H33,
}


def _xor(first: Tuple[int, int, int], second: Tuple[int, int, int]) -> Tuple[int, int, int]:
    return tuple(x ^ y for x, y in zip(first, second))


def _coulomb(i: OrbitalId, j: OrbitalId) -> IntegralSymbol:
    if i.l == 0 and j.l == 0:
        if i == j:
            return IntegralSymbol.J1111 if i == OrbitalId.S1 else IntegralSymbol.J2222
        return IntegralSymbol.J1122
    if i.l == 0:
        return IntegralSymbol.J1133 if i == OrbitalId.S1 else IntegralSymbol.J2233
    return IntegralSymbol.J3333 if i == j else IntegralSymbol.J3344


def _exchange(i: OrbitalId, j: OrbitalId) -> IntegralSymbol:
    if i.l == 0 and j.l == 0:
        return IntegralSymbol.K1221
    if i.l == 0:
        return IntegralSymbol.K1331 if i == OrbitalId.S1 else IntegralSymbol.K2332
    return IntegralSymbol.K3443


def canonical_symbol(a: int, b: int, c: int, d: int) -> Optional[IntegralSymbol]:
    """
    Map a real-orbital two-body integral (ab|cd) onto its canonical symbol.

    Uses (ab|cd) = (ba|cd) = (ab|dc) = (cd|ab) and the spherical-symmetry
    identities, e.g. (11|44) = (11|33), (25|52) = (23|32), (45|54) = (34|43).

    Args:
        a, b, c, d (int): Orbital indices 1..5.

    Returns:
        IntegralSymbol or None: None when the integral vanishes by reflection
        symmetry.

    Raises:
        DomainError: For a non-vanishing integral outside the canonical set,
            such as (11|12); the minimal model never needs those.
    """
    a, b, c, d = (OrbitalId(index) for index in (a, b, c, d))
    if _xor(a.reflection_signature, b.reflection_signature) != _xor(
            c.reflection_signature, d.reflection_signature):
        return None
    first, second = sorted((tuple(sorted((a, b))), tuple(sorted((c, d)))))
    if first[0] == first[1] and second[0] == second[1]:
        return _coulomb(first[0], second[0])
    if first == second:
        return _exchange(*first)
    raise DomainError(
        f"Integral ({int(a)}{int(b)}|{int(c)}{int(d)}) is outside the canonical set")
