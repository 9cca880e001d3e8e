import json
import os
from typing import Dict, List, Optional

from blocks.symbolic import SymmetryLabel
from blocks.tables import ELEMENTS, element_symbol
from config import paths
from exceptions import DomainError
from utils import read_json_as_dict


class ReferenceData:
    """
    Read-only access to the embedded reference dataset: published minimal CI
    levels, optimal parameters and mixing coefficients, PT energies,
    experimental and MDHF energies and gaps, experimental gap ratios, PT virial
    ratios, ionization energies, percentage errors and the fluorine method
    comparison.
    """

    def __init__(self, data_dict: dict) -> None:
        """
        Initializes a new instance of `ReferenceData`.

        Args:
            data_dict (dict): The parsed dataset.
        """
        self.data = data_dict

    @property
    def name(self) -> str:
        return self.data["name"]

    @property
    def version(self) -> str:
        return self.data["version"]

    @property
    def description(self) -> str:
        return self.data["description"]

    @property
    def atoms(self) -> List[str]:
        """Symbols of the atoms with tabulated levels, ordered by N."""
        return sorted(self.data["atoms"], key=ELEMENTS.index)

    @property
    def ground_terms(self) -> Dict[str, SymmetryLabel]:
        """Experimental ground-state term of every atom H..Ne."""
        return {atom: SymmetryLabel.parse(term) for atom, term in self.data["ground_terms"].items()}

    @property
    def gap_ratios(self) -> Dict[str, float]:
        """Experimental ratio of first spectral gap to ground-state energy."""
        return dict(self.data["gap_ratios_experimental"])

    @property
    def virial_ratios_pt(self) -> Dict[str, float]:
        """V/T of the PT ground states."""
        return dict(self.data["virial_ratios_pt"])

    @property
    def ionization_model(self) -> Dict[str, float]:
        """Published minimal CI ionization energies I(N, N)."""
        return dict(self.data["ionization_energies"]["model"])

    @property
    def ionization_experimental(self) -> Dict[str, float]:
        return dict(self.data["ionization_energies"]["experimental"])

    @property
    def percent_errors(self) -> Dict[str, Dict[str, float]]:
        """Published ground-state percentage errors keyed by method ('PT', 'CI') then atom."""
        return {method: dict(values) for method, values in self.data["percent_errors"].items()}

    @property
    def fluorine_methods(self) -> List[Dict]:
        return [dict(row) for row in self.data["fluorine_methods"]]

    @property
    def inconsistencies(self) -> Dict[str, Dict[str, Dict]]:
        """
        Published values the model does not reproduce, keyed by table then
        atom. Each entry holds 'published', 'reproduced' (or the table's own
        fields) and a 'note'.
        """
        return {table: {atom: dict(entry) for atom, entry in entries.items()}
                for table, entries in self.data.get("published_inconsistencies", {}).items()}

    def is_consistent(self, table: str, atom: str) -> bool:
        """False when the published `table` value of `atom` is a known inconsistency."""
        return atom not in self.inconsistencies.get(table, {})

    def levels(self, atom) -> List[Dict]:
        """
        Tabulated levels of an atom, in table order.

        Args:
            atom (str or int): Symbol or electron count.

        Returns:
            List[dict]: One record per level (see the dataset schema).
        """
        symbol = element_symbol(atom) if isinstance(atom, int) else atom
        try:
            return [dict(row) for row in self.data["atoms"][symbol]["levels"]]
        except KeyError:
            raise DomainError(f"No tabulated levels for atom {atom!r}") from None

    def level(self, atom, term, root: str = "lower") -> Optional[Dict]:
        """
        The record of one level, or None if it is not tabulated.

        Args:
            atom (str or int): Symbol or electron count.
            term (str or SymmetryLabel): Term symbol.
            root (str): 'lower' or 'upper'.
        """
        label = term if isinstance(term, SymmetryLabel) else SymmetryLabel.parse(term)
        symbol = element_symbol(atom) if isinstance(atom, int) else atom
        if symbol not in self.data["atoms"]:
            return None
        for row in self.levels(symbol):
            if SymmetryLabel.parse(row["term"]) == label and row["root"] == root:
                return row
        return None

    def ground_level(self, atom) -> Dict:
        return self.levels(atom)[0]


def load_reference_data(file_path: str = paths.REFERENCE_DATA_FILE_PATH) -> ReferenceData:
    """
    Load the reference dataset.

    Args:
        file_path (str, optional): Dataset path; defaults to the embedded copy.

    Returns:
        ReferenceData: The dataset.
    """
    return ReferenceData(read_json_as_dict(file_path))


def export_reference_data(file_path: str = paths.EXPORTED_DATA_FILE_PATH) -> str:
    """
    Write the embedded dataset to `file_path`.

    Returns:
        str: The path written.
    """
    data = read_json_as_dict(paths.REFERENCE_DATA_FILE_PATH)
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as file:
        json.dump(data, file, indent=2, ensure_ascii=False)
        file.write("\n")
    return file_path
