"""Spectra of atoms and ions assembled from independently optimized symmetry blocks."""
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import pandas as pd
from joblib import Parallel, delayed

from blocks.solver import LOWER, block_eigenpairs, blocks_for
from blocks.symbolic import SymmetryLabel
from blocks.tables import element_symbol, validate_electron_count
from exceptions import DomainError
from integrals.closed_form import pt_integrals
from optimize.optimizer import OptimizationResult, optimize_small_atom, optimize_subspace
from orbitals.basis import DilationParams
from spectra.reference import ReferenceData, load_reference_data
from utils import get_logger, get_n_jobs

logger = get_logger(__name__)

HARTREE_COLUMNS = ("E_CI", "dE_CI", "E_PT", "E_exp", "E_MDHF", "dE_exp", "dE_MDHF")


@dataclass(frozen=True)
class EnergyLevel:
    """One minimal CI level with its parameters, gap and comparison values."""
    N: int
    Z: float
    label: SymmetryLabel
    root: str
    energy_ci: float
    params_star: DilationParams
    mixing_c: Optional[float]
    energy_pt: float
    gap: float = 0.0
    reference: Optional[Dict] = field(default=None, compare=False)

    @property
    def term(self) -> str:
        return self.label.term

    @property
    def energy_exp(self) -> Optional[float]:
        return None if self.reference is None else self.reference.get("E_exp")

    @property
    def energy_mdhf(self) -> Optional[float]:
        return None if self.reference is None else self.reference.get("E_MDHF")

    @property
    def exp_is_approximate(self) -> bool:
        return bool(self.reference and self.reference.get("E_exp_approximate"))


@dataclass(frozen=True)
class AtomSpectrum:
    """All levels of one atom or ion, ascending in energy."""
    N: int
    Z: float
    levels: Tuple[EnergyLevel, ...]

    @property
    def element(self) -> str:
        return element_symbol(self.N)

    @property
    def ground(self) -> EnergyLevel:
        return self.levels[0]

    @property
    def ground_term(self) -> SymmetryLabel:
        return self.ground.label

    @property
    def gaps(self) -> List[float]:
        """Gaps of the excited levels to the ground level."""
        return [level.gap for level in self.levels[1:]]

    def find(self, label: SymmetryLabel, root: str = LOWER) -> EnergyLevel:
        for level in self.levels:
            if level.label == label and level.root == root:
                return level
        raise DomainError(f"{self.element} has no {root} {label.term} level")

    def to_frame(self, ev: bool = False, unicode_terms: bool = True,
                 hartree_to_ev: float = 27.211386245988) -> pd.DataFrame:
        """
        Tabulate the levels.

        Args:
            ev (bool): Convert energies to electronvolts.
            unicode_terms (bool): '²P°' instead of '2Po'.
            hartree_to_ev (float): Conversion constant.

        Returns:
            pd.DataFrame: One row per level.
        """
        rows = []
        for level in self.levels:
            reference = level.reference or {}
            mixing = level.mixing_c
            rows.append({
                "term": level.label.term if unicode_terms else level.label.ascii,
                "root": level.root,
                "E_CI": level.energy_ci,
                "Z1": level.params_star.z1,
                "Z2": level.params_star.z2,
                "Z3": level.params_star.z3,
                "c": None if mixing is None or math.isinf(mixing) else mixing,
                "dE_CI": level.gap,
                "E_PT": level.energy_pt,
                "E_exp": reference.get("E_exp"),
                "E_MDHF": reference.get("E_MDHF"),
                "dE_exp": reference.get("dE_exp"),
                "dE_MDHF": reference.get("dE_MDHF"),
            })
        frame = pd.DataFrame(rows)
        if ev:
            for column in HARTREE_COLUMNS:
                frame[column] = pd.to_numeric(frame[column]) * hartree_to_ev
        return frame


def _levels_of(result: OptimizationResult, Z: float,
               reference: Optional[ReferenceData]) -> List[EnergyLevel]:
    pt_pairs = block_eigenpairs(result.block, pt_integrals(Z))
    levels = []
    for pair, pt_pair in zip(result.levels, pt_pairs):
        record = None
        if reference is not None and Z == result.N and result.N >= 3:
            record = reference.level(result.N, result.label, pair.which_root)
        levels.append(EnergyLevel(
            N=result.N, Z=Z, label=result.label, root=pair.which_root,
            energy_ci=pair.energy, params_star=result.params_star, mixing_c=pair.mixing,
            energy_pt=float(pt_pair.energy), reference=record))
    return levels


def atom_spectrum(N: int, Z: Optional[float] = None, n_jobs: Optional[int] = None,
                  reference: Optional[ReferenceData] = None) -> AtomSpectrum:
    """
    Optimize every block of the atom or ion and assemble its spectrum.

    Each block is optimized for its own lowest level; upper roots of 2x2 blocks
    are evaluated at the lower root's parameters.

    Args:
        N (int): Electron count, 1..10.
        Z (float, optional): Nuclear charge; defaults to N (neutral atom).
        n_jobs (int, optional): Parallel jobs; defaults to `get_n_jobs()`.
        reference (ReferenceData, optional): Dataset for comparison columns;
            loaded when Z == N and not given.

    Returns:
        AtomSpectrum: Levels ascending by energy, gaps relative to the lowest.
    """
    validate_electron_count(N, 1, 10)
    Z = float(N) if Z is None else float(Z)
    if reference is None and Z == N:
        reference = load_reference_data()
    if N <= 2:
        results = [optimize_small_atom(N, Z)]
    else:
        n_jobs = get_n_jobs() if n_jobs is None else n_jobs
        results = Parallel(n_jobs=n_jobs)(
            delayed(optimize_subspace)(N, Z, block) for block in blocks_for(N))

    levels = [level for result in results for level in _levels_of(result, Z, reference)]
    levels.sort(key=lambda level: level.energy_ci)
    ground_energy = levels[0].energy_ci
    levels = [replace(level, gap=level.energy_ci - ground_energy) for level in levels]
    logger.info("%s (Z=%g): ground %s at %.6f, %d levels",
                element_symbol(N), Z, levels[0].term, ground_energy, len(levels))
    return AtomSpectrum(N, Z, tuple(levels))


@lru_cache(maxsize=None)
def _cached_ground_state(N: int, Z: float) -> Optional[OptimizationResult]:
    if N == 0:
        return None
    if N <= 2:
        return optimize_small_atom(N, Z)
    results = [optimize_subspace(N, Z, block) for block in blocks_for(N)]
    return min(results, key=lambda result: result.energy)


def ground_state(N: int, Z: float) -> Optional[OptimizationResult]:
    """
    Optimized lowest block of the N-electron system at charge Z. Cached per (N, Z).

    Args:
        N (int): Electron count, 0..10.
        Z (float): Nuclear charge.

    Returns:
        OptimizationResult or None: None for N = 0 (the bare nucleus).
    """
    validate_electron_count(N, 0, 10)
    return _cached_ground_state(N, float(Z))


def ground_state_energy(N: int, Z: float) -> float:
    """Lowest minimal CI energy E1(N, Z), with E1(0, Z) = 0."""
    result = ground_state(N, Z)
    return 0.0 if result is None else result.energy
