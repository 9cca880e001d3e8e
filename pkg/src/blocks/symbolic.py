"""Term symbols and linear symbolic energy expressions.

Expressions are written the way the block tables print them, for example
`2(1|1) + (2|2) + (11|11) + 2(11|22) - (12|21)` or `√3(23|32)`, and parsed
into exact (Fraction, radical) coefficients over the canonical integral symbols.
"""
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterator, Optional, Tuple, Union

from exceptions import DomainError
from integrals.closed_form import IntegralSet
from integrals.symbols import IntegralSymbol

Number = Union[float, Fraction]

_LETTERS = "SPDF"
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_FROM_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_TERM_PATTERN = re.compile(r"^(\d+)([SPDF])(o|°)?$")


@dataclass(frozen=True, order=True)
class SymmetryLabel:
    """Joint eigenvalues of L^2, S^2 and parity, rendered as a term symbol.

    Attributes:
        L (int): Total orbital angular momentum quantum number.
        two_S (int): Twice the total spin.
        parity (int): +1 (even) or -1 (odd).
    """
    L: int
    two_S: int
    parity: int

    def __post_init__(self) -> None:
        if self.L < 0 or self.L >= len(_LETTERS):
            raise DomainError(f"Unsupported orbital angular momentum L={self.L}")
        if self.two_S < 0:
            raise DomainError(f"2S must be non-negative, got {self.two_S}")
        if self.parity not in (1, -1):
            raise DomainError(f"Parity must be +1 or -1, got {self.parity}")

    @property
    def S(self) -> float:
        return self.two_S / 2.0

    @property
    def multiplicity(self) -> int:
        return self.two_S + 1

    @property
    def degeneracy(self) -> int:
        """(2S+1)(2L+1), the number of joint eigenstates sharing the energy."""
        return (self.two_S + 1) * (2 * self.L + 1)

    @property
    def term(self) -> str:
        """Term symbol with superscripts, e.g. '²P°'."""
        odd = "°" if self.parity == -1 else ""
        return f"{str(self.multiplicity).translate(_SUPERSCRIPTS)}{_LETTERS[self.L]}{odd}"

    @property
    def ascii(self) -> str:
        """Typeable term symbol, e.g. '2Po'."""
        odd = "o" if self.parity == -1 else ""
        return f"{self.multiplicity}{_LETTERS[self.L]}{odd}"

    @classmethod
    def parse(cls, text: str) -> "SymmetryLabel":
        """
        Parse a term symbol in ASCII ('2Po', '1D') or superscript ('²P°') form.

        Raises:
            DomainError: If the text is not a term symbol.
        """
        compact = text.strip().translate(_FROM_SUPERSCRIPTS)
        match = _TERM_PATTERN.match(compact)
        if match is None or int(match.group(1)) < 1:
            raise DomainError(f"Unknown term symbol: {text!r}")
        multiplicity, letter, odd = match.groups()
        return cls(_LETTERS.index(letter), int(multiplicity) - 1, -1 if odd else 1)

    def __str__(self) -> str:
        return self.term


@dataclass(frozen=True)
class Coefficient:
    """A rational number times an optional radical: rational * sqrt(radical)."""
    rational: Fraction
    radical: int = 1

    def __post_init__(self) -> None:
        if self.radical not in (1, 2, 3):
            raise DomainError(f"Unsupported radical sqrt({self.radical})")
        object.__setattr__(self, "rational", Fraction(self.rational))

    @property
    def is_rational(self) -> bool:
        return self.radical == 1

    @property
    def value(self) -> float:
        return float(self.rational) * math.sqrt(self.radical)

    def exact(self) -> Number:
        """Exact Fraction for rational coefficients, float otherwise."""
        return self.rational if self.is_rational else self.value

    def render(self) -> str:
        """Magnitude as printed in front of a symbol: '', '2', '1/2', '√3', '2√2'."""
        magnitude = abs(self.rational)
        number = "" if magnitude == 1 else str(magnitude)
        radical = "" if self.radical == 1 else f"√{self.radical}"
        return f"{number}{radical}"


_EXPRESSION_TERM = re.compile(
    r"(?P<sign>[+\-−])?(?P<number>\d+(?:/\d+)?)?(?P<radical>√[23])?(?P<symbol>\(\d+\|\d+\))")


@dataclass(frozen=True)
class SymbolicEnergy:
    """A linear combination of canonical integral symbols with exact coefficients."""
    terms: Tuple[Tuple[Coefficient, IntegralSymbol], ...] = field(default_factory=tuple)

    @classmethod
    def parse(cls, text: str) -> "SymbolicEnergy":
        """
        Parse an expression such as '2(1|1) + (11|11) - √2(23|32)'.

        Repeated symbols are merged. A term without a sign is positive.

        Raises:
            DomainError: On unparsable text or an unknown integral symbol.
        """
        compact = re.sub(r"\s+", "", text)
        if not compact:
            raise DomainError("Empty energy expression")
        merged: Dict[Tuple[IntegralSymbol, int], Fraction] = {}
        position = 0
        for match in _EXPRESSION_TERM.finditer(compact):
            if match.start() != position or (position > 0 and match.group("sign") is None):
                raise DomainError(f"Cannot parse energy expression: {text!r}")
            position = match.end()
            sign = -1 if match.group("sign") in ("-", "−") else 1
            number = Fraction(match.group("number") or 1)
            radical = int(match.group("radical")[1]) if match.group("radical") else 1
            symbol = IntegralSymbol.from_label(match.group("symbol"))
            key = (symbol, radical)
            merged[key] = merged.get(key, Fraction(0)) + sign * number
        if position != len(compact):
            raise DomainError(f"Cannot parse energy expression: {text!r}")
        return cls(tuple((Coefficient(rational, radical), symbol)
                         for (symbol, radical), rational in merged.items() if rational != 0))

    def __iter__(self) -> Iterator[Tuple[Coefficient, IntegralSymbol]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def symbols(self) -> FrozenSet[IntegralSymbol]:
        return frozenset(symbol for _, symbol in self.terms)

    @property
    def is_rational(self) -> bool:
        return all(coefficient.is_rational for coefficient, _ in self.terms)

    def coefficient(self, symbol: IntegralSymbol) -> Fraction:
        """Rational coefficient of `symbol` (0 when absent); radical terms excluded."""
        return sum((coefficient.rational for coefficient, term_symbol in self.terms
                    if term_symbol == symbol and coefficient.is_rational), Fraction(0))

    def evaluate(self, ints: IntegralSet) -> Number:
        """
        Substitute integral values.

        Returns a Fraction when both the coefficients and the integral set are
        exact, a float otherwise.
        """
        if self.is_rational and ints.is_exact:
            return sum((coefficient.rational * ints[symbol]
                        for coefficient, symbol in self.terms), Fraction(0))
        return float(sum(coefficient.value * float(ints[symbol])
                         for coefficient, symbol in self.terms))

    def render(self) -> str:
        """Render in table notation, e.g. '2(1|1) + (11|11) - (12|21)'."""
        if not self.terms:
            return "0"
        pieces = []
        for index, (coefficient, symbol) in enumerate(self.terms):
            negative = coefficient.rational < 0
            body = f"{coefficient.render()}{symbol.label}"
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"{'-' if negative else '+'} {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.render()


def configuration_of(expression: SymbolicEnergy) -> str:
    """
    Orbital occupation of a diagonal entry, read off its one-body coefficients,
    e.g. '1s2 2s2 2p1'.
    """
    counts = [int(expression.coefficient(symbol)) for symbol in
              (IntegralSymbol.H11, IntegralSymbol.H22, IntegralSymbol.H33)]
    return " ".join(f"{shell}{count}" for shell, count in zip(("1s", "2s", "2p"), counts) if count)


@dataclass(frozen=True)
class SymmetryBlock:
    """An invariant 1x1 or 2x2 block of the Hamiltonian for one term of one atom.

    Attributes:
        N (int): Electron count.
        label (SymmetryLabel): Term of every state in the block.
        diagonal (tuple): One SymbolicEnergy per basis state.
        cross (SymbolicEnergy, optional): Off-diagonal entry of a 2x2 block.
        basis (tuple): Configuration of each basis state, e.g. '1s2 2s2 2p1'.
    """
    N: int
    label: SymmetryLabel
    diagonal: Tuple[SymbolicEnergy, ...]
    cross: Optional[SymbolicEnergy] = None
    basis: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(self.diagonal) not in (1, 2):
            raise DomainError(f"Blocks are 1x1 or 2x2, got {len(self.diagonal)} diagonal entries")
        if (self.cross is None) != (len(self.diagonal) == 1):
            raise DomainError(f"{self.name}: a cross term is required exactly for 2x2 blocks")
        if not all(entry.is_rational for entry in self.diagonal):
            raise DomainError(f"{self.name}: diagonal entries must have rational coefficients")
        if not self.basis:
            object.__setattr__(self, "basis",
                               tuple(configuration_of(entry) for entry in self.diagonal))

    @property
    def dimension(self) -> int:
        return len(self.diagonal)

    @property
    def name(self) -> str:
        return f"N={self.N} {self.label.term}"

    @property
    def symbols(self) -> FrozenSet[IntegralSymbol]:
        found = set()
        for entry in self.expressions():
            found |= entry.symbols
        return frozenset(found)

    @property
    def uses_2s(self) -> bool:
        return any(2 in symbol.orbitals for symbol in self.symbols)

    @property
    def uses_2p(self) -> bool:
        return any(3 in symbol.orbitals for symbol in self.symbols)

    def expressions(self) -> Tuple[SymbolicEnergy, ...]:
        return self.diagonal + ((self.cross,) if self.cross is not None else ())
