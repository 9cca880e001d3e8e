"""Symmetry blocks of the minimal CI Hamiltonian for H through Ne.

Each entry lists the term, the diagonal matrix elements of the basis states
(without the filled-1s core `2(1|1) + (11|11)` shared by every state) and, for
2x2 blocks, the cross term. Basis states span the slice with maximal S3 and
L3 = 0; the first basis state of a 2x2 block is the 1s2 2s2 2p(N-4)
configuration, the second 1s2 2p(N-2).
"""
from typing import Dict, List, Optional, Sequence, Tuple, Union

from blocks.symbolic import SymbolicEnergy, SymmetryBlock, SymmetryLabel
from exceptions import DomainError

ELEMENTS = ("H", "He", "Li", "Be", "B", "C", "N", "O", "F", "Ne")

CORE = "2(1|1) + (11|11)"

# shorthand pieces; every block below is CORE + pieces
_S1 = "(2|2) + 2(11|22) - (12|21)"
_S2 = "2(2|2) + 4(11|22) - 2(12|21) + (22|22)"


def _p(count: int) -> str:
    """One-body and 1s-shell interaction of `count` p electrons."""
    return f"{count}(3|3) + {2 * count}(11|33) - {count}(13|31)"


_RawBlock = Tuple[str, Sequence[str], Optional[str]]

_BLOCK_TABLE: Dict[int, List[_RawBlock]] = {
    3: [
        ("2S", [_S1], None),
        ("2Po", [_p(1)], None),
    ],
    4: [
        ("1S", [_S2, f"{_p(2)} + (33|33) + 2(34|43)"], "√3(23|32)"),
        ("3Po", [f"{_S1} + {_p(1)} + (22|33) - (23|32)"], None),
        ("1Po", [f"{_S1} + {_p(1)} + (22|33) + (23|32)"], None),
        ("1D", [f"{_p(2)} + (33|33) - (34|43)"], None),
        ("3P", [f"{_p(2)} + (33|44) - (34|43)"], None),
    ],
    5: [
        ("2Po", [f"{_S2} + {_p(1)} + 2(22|33) - (23|32)",
                 f"{_p(3)} + (33|33) + 2(33|44)"], "√2(23|32)"),
        ("4P", [f"{_S1} + {_p(2)} + 2(22|33) - 2(23|32) + (33|44) - (34|43)"], None),
        ("2D", [f"{_S1} + {_p(2)} + 2(22|33) - (23|32) + (33|33) - (34|43)"], None),
        ("2S", [f"{_S1} + {_p(2)} + 2(22|33) - (23|32) + (33|33) + 2(34|43)"], None),
        ("2P", [f"{_S1} + {_p(2)} + 2(22|33) + (23|32) + (33|44) - (34|43)"], None),
        ("4So", [f"{_p(3)} + 3(33|44) - 3(34|43)"], None),
        ("2Do", [f"{_p(3)} + 3(33|44)"], None),
    ],
    6: [
        ("3P", [f"{_S2} + {_p(2)} + 4(22|33) - 2(23|32) + (33|44) - (34|43)",
                f"{_p(4)} + (33|33) + 5(33|44) - 3(34|43)"], "(23|32)"),
        ("1D", [f"{_S2} + {_p(2)} + 4(22|33) - 2(23|32) + (33|33) - (34|43)",
                f"{_p(4)} + 2(33|33) + 4(33|44) - 3(34|43)"], "-(23|32)"),
        ("1S", [f"{_S2} + {_p(2)} + 4(22|33) - 2(23|32) + (33|33) + 2(34|43)",
                f"{_p(4)} + 2(33|33) + 4(33|44)"], "2(23|32)"),
        ("5So", [f"{_S1} + {_p(3)} + 3(22|33) - 3(23|32) + 3(33|44) - 3(34|43)"], None),
        ("3Do", [f"{_S1} + {_p(3)} + 3(22|33) - 2(23|32) + 3(33|44)"], None),
        ("3Po", [f"{_S1} + {_p(3)} + 3(22|33) - 2(23|32) + (33|33) + 2(33|44)"], None),
        ("1Do", [f"{_S1} + {_p(3)} + 3(22|33) + 3(33|44)"], None),
        ("3So", [f"{_S1} + {_p(3)} + 3(22|33) + (23|32) + 3(33|44) - 3(34|43)"], None),
        ("1Po", [f"{_S1} + {_p(3)} + 3(22|33) + (33|33) + 2(33|44)"], None),
    ],
    7: [
        ("4So", [f"{_S2} + {_p(3)} + 6(22|33) - 3(23|32) + 3(33|44) - 3(34|43)"], None),
        ("2Do", [f"{_S2} + {_p(3)} + 6(22|33) - 3(23|32) + 3(33|44)"], None),
        ("2Po", [f"{_S2} + {_p(3)} + 6(22|33) - 3(23|32) + (33|33) + 2(33|44)",
                 f"{_p(5)} + 2(33|33) + 8(33|44) - 4(34|43)"], "√2(23|32)"),
        ("4P", [f"{_S1} + {_p(4)} + 4(22|33) - 3(23|32) + (33|33) + 5(33|44) - 3(34|43)"], None),
        ("2D", [f"{_S1} + {_p(4)} + 4(22|33) - 2(23|32) + 2(33|33) + 4(33|44) - 3(34|43)"], None),
        ("2S", [f"{_S1} + {_p(4)} + 4(22|33) - 2(23|32) + 2(33|33) + 4(33|44)"], None),
        ("2P", [f"{_S1} + {_p(4)} + 4(22|33) + (33|33) + 5(33|44) - 3(34|43)"], None),
    ],
    8: [
        ("3P", [f"{_S2} + {_p(4)} + 8(22|33) - 4(23|32) + (33|33) + 5(33|44) - 3(34|43)"], None),
        ("1D", [f"{_S2} + {_p(4)} + 8(22|33) - 4(23|32) + 2(33|33) + 4(33|44) - 3(34|43)"], None),
        ("1S", [f"{_S2} + {_p(4)} + 8(22|33) - 4(23|32) + 2(33|33) + 4(33|44)",
                f"{_p(6)} + 3(33|33) + 12(33|44) - 6(34|43)"], "√3(23|32)"),
        ("3Po", [f"{_S1} + {_p(5)} + 5(22|33) - 3(23|32) + 2(33|33) + 8(33|44) - 4(34|43)"], None),
        ("1Po", [f"{_S1} + {_p(5)} + 5(22|33) - (23|32) + 2(33|33) + 8(33|44) - 4(34|43)"], None),
    ],
    9: [
        ("2Po", [f"{_S2} + {_p(5)} + 10(22|33) - 5(23|32) + 2(33|33) + 8(33|44) - 4(34|43)"], None),
        ("2S", [f"{_S1} + {_p(6)} + 6(22|33) - 3(23|32) + 3(33|33) + 12(33|44) - 6(34|43)"], None),
    ],
    10: [
        ("1S", [f"{_S2} + {_p(6)} + 12(22|33) - 6(23|32) + 3(33|33) + 12(33|44) - 6(34|43)"], None),
    ],
}

_SMALL_ATOM_TABLE: Dict[int, _RawBlock] = {
    1: ("2S", ["(1|1)"], None),
    2: ("1S", [CORE], None),
}


def _make_block(N: int, raw: _RawBlock, with_core: bool = True) -> SymmetryBlock:
    term, diagonal, cross = raw
    entries = tuple(SymbolicEnergy.parse(f"{CORE} + {entry}" if with_core else entry)
                    for entry in diagonal)
    return SymmetryBlock(
        N=N,
        label=SymmetryLabel.parse(term),
        diagonal=entries,
        cross=SymbolicEnergy.parse(cross) if cross is not None else None,
    )


BLOCKS: Dict[int, Tuple[SymmetryBlock, ...]] = {
    N: tuple(_make_block(N, raw) for raw in rows) for N, rows in _BLOCK_TABLE.items()
}
SMALL_ATOM_BLOCKS: Dict[int, SymmetryBlock] = {
    N: _make_block(N, raw, with_core=False) for N, raw in _SMALL_ATOM_TABLE.items()
}


def element_symbol(N: int) -> str:
    """Chemical symbol of the neutral atom with N electrons."""
    validate_electron_count(N, 1, 10)
    return ELEMENTS[N - 1]


def resolve_atom(atom: Union[str, int]) -> int:
    """
    Electron count of an atom given by symbol ('Be', case-insensitive) or number.

    Raises:
        DomainError: If the atom is not one of H..Ne.
    """
    if isinstance(atom, int) and not isinstance(atom, bool):
        validate_electron_count(atom, 1, 10)
        return atom
    text = str(atom).strip()
    if text.isdigit():
        return resolve_atom(int(text))
    for index, symbol in enumerate(ELEMENTS):
        if symbol.lower() == text.lower():
            return index + 1
    raise DomainError(f"Unknown atom: {atom!r}. Expected one of {', '.join(ELEMENTS)} or 1..10")


def validate_electron_count(N: int, low: int, high: int) -> None:
    if isinstance(N, bool) or not isinstance(N, int) or not low <= N <= high:
        raise DomainError(f"Electron count N must be an integer in {low}..{high}, got {N!r}")
