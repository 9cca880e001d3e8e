"""Closed-form one-body, Coulomb and exchange integrals of the orbital basis."""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Tuple, Union

from exceptions import DomainError
from integrals.symbols import ONE_BODY_SYMBOLS, IntegralSymbol, canonical_symbol
from orbitals.basis import DilationParams, OrbitalId, two_s_denominator

Number = Union[float, Fraction]

# PT column: value = coefficient * Z**power at z1 = z2 = z3 = Z
PT_COEFFICIENTS: Dict[IntegralSymbol, Tuple[Fraction, int]] = {
    IntegralSymbol.H11: (Fraction(-1, 2), 2),
    IntegralSymbol.H22: (Fraction(-1, 8), 2),
    IntegralSymbol.H33: (Fraction(-1, 8), 2),
    IntegralSymbol.J1111: (Fraction(5, 8), 1),
    IntegralSymbol.J1122: (Fraction(17, 81), 1),
    IntegralSymbol.K1221: (Fraction(16, 729), 1),
    IntegralSymbol.J2222: (Fraction(77, 512), 1),
    IntegralSymbol.J1133: (Fraction(59, 243), 1),
    IntegralSymbol.K1331: (Fraction(112, 6561), 1),
    IntegralSymbol.J2233: (Fraction(83, 512), 1),
    IntegralSymbol.K2332: (Fraction(15, 512), 1),
    IntegralSymbol.J3333: (Fraction(501, 2560), 1),
    IntegralSymbol.J3344: (Fraction(447, 2560), 1),
    IntegralSymbol.K3443: (Fraction(27, 2560), 1),
}


@dataclass(frozen=True)
class IntegralSet:
    """Values of the canonical integrals for one nuclear charge and parameter set.

    Symbols that need a parameter marked unused are absent.
    """
    Z: Number
    params: DilationParams
    values: Mapping[IntegralSymbol, Number] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", MappingProxyType(dict(self.values)))

    def __getitem__(self, symbol: IntegralSymbol) -> Number:
        try:
            return self.values[symbol]
        except KeyError:
            raise DomainError(
                f"Integral {symbol.label} is unavailable: it needs "
                f"{', '.join(symbol.dilation_parameters)} but {self.params} marks one unused"
            ) from None

    def __contains__(self, symbol: IntegralSymbol) -> bool:
        return symbol in self.values

    def __iter__(self):
        return iter(self.values)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(value, Fraction) for value in self.values.values())

    def one_body(self, a: int, b: int) -> Number:
        """
        One-body integral (a|b) = <a|h b> with h = -Laplacian/2 - Z/|x|.

        Off-diagonal elements vanish by angular symmetry except (1|2), which the
        model never needs and which is therefore rejected.
        """
        a, b = OrbitalId(a), OrbitalId(b)
        if a == b:
            return self[ONE_BODY_SYMBOLS[a]]
        if a.l == 0 and b.l == 0:
            raise DomainError("One-body integral (1|2) is outside the minimal model")
        return 0.0

    def two_body(self, a: int, b: int, c: int, d: int) -> Number:
        """Two-body integral (ab|cd) through the symmetry canonicalization."""
        symbol = canonical_symbol(a, b, c, d)
        if symbol is None:
            return 0.0
        return self[symbol]

    def as_float(self) -> "IntegralSet":
        return IntegralSet(float(self.Z), self.params,
                           {symbol: float(value) for symbol, value in self.values.items()})

    def as_dict(self) -> Dict[str, float]:
        return {symbol.label: float(value) for symbol, value in self.values.items()}


def _validate_charge(Z: Number) -> None:
    if isinstance(Z, bool) or not math.isfinite(float(Z)) or Z <= 0:
        raise DomainError(f"Nuclear charge Z must be positive, got {Z}")


def _one_s_integrals(Z: float, z1: float) -> Dict[IntegralSymbol, float]:
    return {
        IntegralSymbol.H11: 0.5 * z1 * z1 - Z * z1,
        IntegralSymbol.J1111: 5.0 * z1 / 8.0,
    }


def _two_s_integrals(Z: float, z1: float, z2: float) -> Dict[IntegralSymbol, float]:
    d = two_s_denominator(z1, z2)
    s = 2.0 * z1 + z2
    return {
        IntegralSymbol.H22: (z2 * z2 / 24.0 * (4 * z1 ** 2 - 2 * z1 * z2 + 7 * z2 ** 2) / d
                             - Z * z2 / 4.0 * (4 * z1 ** 2 - 4 * z1 * z2 + 3 * z2 ** 2) / d),
        IntegralSymbol.J1122: (z1 * z2 * (8 * z1 ** 4 + 4 * z1 ** 3 * z2 + 4 * z1 * z2 ** 3 + z2 ** 4)
                               / (s ** 3 * d)),
        IntegralSymbol.K1221: 16.0 * z1 ** 3 * z2 ** 5 / (d * s ** 5),
        # the Z1 Z2^3 term is the degree-consistent reading of the printed table
        IntegralSymbol.J2222: (z2 / 512.0 * (1488 * z1 ** 4 - 1952 * z1 ** 3 * z2
                                             + 1752 * z1 ** 2 * z2 ** 2 - 840 * z1 * z2 ** 3
                                             + 245 * z2 ** 4) / d ** 2),
    }


def _two_p_integrals(Z: float, z1: float, z3: float) -> Dict[IntegralSymbol, float]:
    s = 2.0 * z1 + z3
    return {
        IntegralSymbol.H33: z3 * z3 / 8.0 - Z * z3 / 4.0,
        IntegralSymbol.J1133: (z1 * z3 * (8 * z1 ** 4 + 20 * z1 ** 3 * z3 + 20 * z1 ** 2 * z3 ** 2
                                          + 10 * z1 * z3 ** 3 + z3 ** 4) / s ** 5),
        IntegralSymbol.K1331: 112.0 * z1 ** 3 * z3 ** 5 / (3.0 * s ** 7),
        IntegralSymbol.J3333: 501.0 * z3 / 2560.0,
        IntegralSymbol.J3344: 447.0 * z3 / 2560.0,
        IntegralSymbol.K3443: 27.0 * z3 / 2560.0,
    }


def _two_s_two_p_integrals(z1: float, z2: float, z3: float) -> Dict[IntegralSymbol, float]:
    d = two_s_denominator(z1, z2)
    t = z2 + z3
    q = 4 * z1 ** 2 - 4 * z1 * z2 + 3 * z2 ** 2
    bracket = (d * (z2 ** 6 + 7 * z2 ** 5 * z3 + 21 * z2 ** 4 * z3 ** 2 + 35 * z2 ** 3 * z3 ** 3)
               + 3 * z2 ** 2 * z3 ** 4 * (28 * z1 ** 2 - 28 * z1 * z2 + 11 * z2 ** 2)
               + 7 * z2 * z3 ** 5 * q
               + z3 ** 6 * q)
    return {
        IntegralSymbol.J2233: z2 * z3 * bracket / (4.0 * d * t ** 7),
        IntegralSymbol.K2332: (z2 ** 5 * z3 ** 5
                               * (740 * z1 ** 2 + 152 * z1 * z2 + 17 * z2 ** 2 - 42 * z2 * z3
                                  - 588 * z1 * z3 + 126 * z3 ** 2)
                               / (9.0 * t ** 9 * d)),
    }


def compute_integrals(Z: float, params: DilationParams) -> IntegralSet:
    """
    Evaluate every canonical integral available for `params` in closed form.

    One-body integrals depend on Z and the parameters; two-body integrals on
    the parameters only.

    Args:
        Z (float): Nuclear charge.
        params (DilationParams): Dilation parameters; unused ones drop the
            integrals that need them.

    Returns:
        IntegralSet: Floating-point integral values.

    Raises:
        DomainError: On a non-positive charge.
    """
    _validate_charge(Z)
    Z = float(Z)
    z1, z2, z3 = params.as_tuple()
    values = _one_s_integrals(Z, z1)
    if z2 is not None:
        values.update(_two_s_integrals(Z, z1, z2))
    if z3 is not None:
        values.update(_two_p_integrals(Z, z1, z3))
    if z2 is not None and z3 is not None:
        values.update(_two_s_two_p_integrals(z1, z2, z3))
    return IntegralSet(Z, params, values)


def pt_coefficient(symbol: IntegralSymbol) -> Tuple[Fraction, int]:
    """Exact PT coefficient and power of Z, e.g. (Fraction(16, 729), 1) for (12|21)."""
    return PT_COEFFICIENTS[symbol]


def pt_integrals(Z: Union[int, Fraction, float]) -> IntegralSet:
    """
    Integrals of the hydrogenic (PT) orbitals z1 = z2 = z3 = Z in exact
    rational arithmetic.

    Args:
        Z (int, Fraction or float): Nuclear charge; floats are converted exactly.

    Returns:
        IntegralSet: Values as `fractions.Fraction`.
    """
    _validate_charge(Z)
    exact_charge = Fraction(Z)
    values = {symbol: coefficient * exact_charge ** power
              for symbol, (coefficient, power) in PT_COEFFICIENTS.items()}
    return IntegralSet(exact_charge, DilationParams.uniform(float(Z)), values)
