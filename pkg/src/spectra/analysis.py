"""Derived quantities across atoms: ionization energies, scans, error and virial reports."""
from typing import Dict, List, Optional, Sequence

import pandas as pd
from joblib import Parallel, delayed

from blocks.solver import find_block, small_atom_block
from blocks.symbolic import SymmetryLabel
from blocks.tables import ELEMENTS, element_symbol, validate_electron_count
from exceptions import DomainError
from optimize.optimizer import optimize_small_atom, optimize_subspace, virial_ratio
from orbitals.basis import DilationParams
from spectra.reference import ReferenceData, load_reference_data
from spectra.spectrum import AtomSpectrum, atom_spectrum, ground_state, ground_state_energy
from utils import get_logger, get_n_jobs

logger = get_logger(__name__)


def percent_error(energy: float, exact: float) -> float:
    """|E - E_exact| / |E_exact| in percent."""
    return abs(energy - exact) / abs(exact) * 100.0


def ionization_energy(N: int, Z: Optional[float] = None) -> float:
    """
    I(N, Z) = E1(N-1, Z) - E1(N, Z).

    Args:
        N (int): Electron count, 1..10.
        Z (float, optional): Nuclear charge; defaults to N.

    Returns:
        float: Energy needed to remove one electron, in hartree.
    """
    validate_electron_count(N, 1, 10)
    Z = float(N) if Z is None else float(Z)
    return ground_state_energy(N - 1, Z) - ground_state_energy(N, Z)


def _term_energy(N: int, Z: float, label: SymmetryLabel) -> float:
    if N <= 2:
        if small_atom_block(N).label != label:
            raise DomainError(f"Term {label.term} does not occur for N={N}")
        return optimize_small_atom(N, Z).energy
    return optimize_subspace(N, Z, find_block(N, label)).energy


def isoelectronic_scan(N: int, Z_values: Sequence[float], terms: Sequence[SymmetryLabel],
                       n_jobs: Optional[int] = None) -> pd.DataFrame:
    """
    Optimized energies of one or two terms along an isoelectronic sequence.

    Args:
        N (int): Electron count.
        Z_values (Sequence[float]): Nuclear charges.
        terms (Sequence[SymmetryLabel]): One term, or two for a difference curve.
        n_jobs (int, optional): Parallel jobs; defaults to `get_n_jobs()`.

    Returns:
        pd.DataFrame: Columns Z and E_<term> per term (ASCII term), plus
            dE = E_<first> - E_<second> when two terms are given.
    """
    validate_electron_count(N, 1, 10)
    if len(terms) not in (1, 2):
        raise DomainError(f"Expected one or two terms, got {len(terms)}")
    for label in terms:
        if N <= 2:
            if small_atom_block(N).label != label:
                raise DomainError(f"Term {label.term} does not occur for N={N}")
        else:
            find_block(N, label)

    n_jobs = get_n_jobs() if n_jobs is None else n_jobs
    tasks = [(float(Z), label) for Z in Z_values for label in terms]
    energies = Parallel(n_jobs=n_jobs)(delayed(_term_energy)(N, Z, label) for Z, label in tasks)

    rows: Dict[float, Dict] = {}
    for (Z, label), energy in zip(tasks, energies):
        rows.setdefault(Z, {"Z": Z})[f"E_{label.ascii}"] = energy
    frame = pd.DataFrame(list(rows.values()))
    if len(terms) == 2:
        frame["dE"] = frame[f"E_{terms[0].ascii}"] - frame[f"E_{terms[1].ascii}"]
    logger.info("Scanned N=%d over %d charges for %s", N, len(rows),
                ", ".join(label.ascii for label in terms))
    return frame


def gap_ratio(N: int, spectrum: Optional[AtomSpectrum] = None) -> float:
    """
    First spectral gap over the magnitude of the ground-state energy.

    Raises:
        DomainError: If the atom has a single level.
    """
    spectrum = spectrum or atom_spectrum(N)
    if len(spectrum.levels) < 2:
        raise DomainError(f"{spectrum.element} has a single level; the gap ratio is undefined")
    return spectrum.levels[1].gap / abs(spectrum.ground.energy_ci)


def gap_ratio_report(spectra: Dict[str, AtomSpectrum],
                     reference: Optional[ReferenceData] = None) -> pd.DataFrame:
    """
    Computed gap ratios next to the experimental ones.

    Args:
        spectra (dict): AtomSpectrum per atom symbol.
        reference (ReferenceData, optional): Defaults to the embedded dataset.

    Returns:
        pd.DataFrame: Columns atom, first_excited, ratio_CI, ratio_exp; atoms
            with a single level are skipped.
    """
    experimental = (reference or load_reference_data()).gap_ratios
    rows = []
    for atom in sorted(spectra, key=ELEMENTS.index):
        spectrum = spectra[atom]
        if len(spectrum.levels) < 2:
            continue
        rows.append({
            "atom": atom,
            "first_excited": spectrum.levels[1].label.ascii,
            "ratio_CI": gap_ratio(spectrum.N, spectrum),
            "ratio_exp": experimental.get(atom),
        })
    return pd.DataFrame(rows, columns=["atom", "first_excited", "ratio_CI", "ratio_exp"])


def ionization_landscape(values: pd.Series) -> Dict[str, List]:
    """
    Local extrema of an ionization sequence.

    Only interior points can be local extrema; the endpoints are compared
    separately by the caller.

    Args:
        values (pd.Series): Ionization energies indexed by atom, in N order.

    Returns:
        dict: 'minima' and 'maxima' (lists of index labels), 'global_min' and
            'global_max'.
    """
    energies = list(values.values)
    labels = list(values.index)
    minima, maxima = [], []
    for i in range(1, len(energies) - 1):
        if energies[i] < energies[i - 1] and energies[i] < energies[i + 1]:
            minima.append(labels[i])
        elif energies[i] > energies[i - 1] and energies[i] > energies[i + 1]:
            maxima.append(labels[i])
    return {"minima": minima, "maxima": maxima,
            "global_min": values.idxmin(), "global_max": values.idxmax()}


def ground_energy_scan(N_values: Sequence[int], n_jobs: Optional[int] = None) -> pd.DataFrame:
    """Ground-state term and energy of each neutral atom (Z = N)."""
    n_jobs = get_n_jobs() if n_jobs is None else n_jobs
    results = Parallel(n_jobs=n_jobs)(delayed(ground_state)(N, N) for N in N_values)
    return pd.DataFrame([
        {"N": N, "atom": element_symbol(N), "term": result.label.ascii, "E_CI": result.energy}
        for N, result in zip(N_values, results)])


def ionization_scan(N_values: Sequence[int], Z: Optional[float] = None,
                    n_jobs: Optional[int] = None,
                    reference: Optional[ReferenceData] = None) -> pd.DataFrame:
    """
    Ionization energies I(N, Z) for each N, at Z = N unless Z is given.

    Returns:
        pd.DataFrame: Columns N, atom, Z, I, and for neutral atoms only I_exp,
            I_published and published_ok (False where the published value is a
            known inconsistency).
    """
    for N in N_values:
        validate_electron_count(N, 1, 10)
    charges = {N: float(N) if Z is None else float(Z) for N in N_values}
    needed = sorted({(n, charges[N]) for N in N_values for n in (N - 1, N)})
    n_jobs = get_n_jobs() if n_jobs is None else n_jobs
    energies = dict(zip(needed, Parallel(n_jobs=n_jobs)(
        delayed(ground_state_energy)(n, charge) for n, charge in needed)))

    reference = reference or load_reference_data()
    experimental = reference.ionization_experimental
    published = reference.ionization_model
    rows = []
    for N in N_values:
        charge = charges[N]
        atom = element_symbol(N)
        rows.append({
            "N": N, "atom": atom, "Z": charge,
            "I": energies[(N - 1, charge)] - energies[(N, charge)],
            "I_exp": experimental.get(atom) if charge == N else None,
            "I_published": published.get(atom) if charge == N else None,
            "published_ok": (reference.is_consistent("ionization_energies", atom)
                             if charge == N and atom in published else None),
        })
    return pd.DataFrame(rows)


def virial_report(N_values: Sequence[int] = tuple(range(1, 11)),
                  n_jobs: Optional[int] = None,
                  reference: Optional[ReferenceData] = None) -> pd.DataFrame:
    """
    V/T of each neutral ground state at the PT parameters (all equal to Z) and
    at the optimized parameters.

    Returns:
        pd.DataFrame: Columns atom, term, ratio_PT, ratio_CI, published_PT and
            published_ok (False where the published ratio is a known inconsistency).
    """
    n_jobs = get_n_jobs() if n_jobs is None else n_jobs
    results = Parallel(n_jobs=n_jobs)(delayed(ground_state)(N, N) for N in N_values)
    reference = reference or load_reference_data()
    published = reference.virial_ratios_pt
    rows = []
    for N, result in zip(N_values, results):
        Z = float(N)
        atom = element_symbol(N)
        rows.append({
            "atom": atom,
            "term": result.label.ascii,
            "ratio_PT": virial_ratio(result.block, N, Z, DilationParams.uniform(Z)),
            "ratio_CI": virial_ratio(result.block, N, Z, result.params_star),
            "published_PT": published.get(atom),
            "published_ok": (reference.is_consistent("virial_ratios_pt", atom)
                             if atom in published else None),
        })
    return pd.DataFrame(rows)


def error_report(spectra: Optional[Dict[str, AtomSpectrum]] = None,
                 reference: Optional[ReferenceData] = None) -> Dict[str, pd.DataFrame]:
    """
    Compare computed energies of Li..Ne with the reference dataset.

    Args:
        spectra (dict, optional): AtomSpectrum per atom symbol; computed for
            every tabulated atom when not given.
        reference (ReferenceData, optional): Defaults to the embedded dataset.

    Returns:
        dict: Four frames.
            'ground_state': percentage errors of CI and PT ground energies,
                next to the published ones.
            'gaps': per level, dE_CI next to dE_exp and dE_MDHF.
            'fluorine': the fluorine method comparison with computed PT and
                CI errors filled in.
            'gap_ratios': first gap over |E_CI| next to the experimental ratio.
    """
    reference = reference or load_reference_data()
    if spectra is None:
        spectra = {atom: atom_spectrum(ELEMENTS.index(atom) + 1, reference=reference)
                   for atom in reference.atoms}
    published = reference.percent_errors

    ground_rows, gap_rows = [], []
    for atom in reference.atoms:
        if atom not in spectra:
            continue
        spectrum = spectra[atom]
        ground = spectrum.ground
        exact = reference.ground_level(atom)["E_exp"]
        ground_rows.append({
            "atom": atom,
            "term": ground.label.ascii,
            "E_CI": ground.energy_ci,
            "E_PT": ground.energy_pt,
            "E_exp": exact,
            "error_CI": percent_error(ground.energy_ci, exact),
            "error_PT": percent_error(ground.energy_pt, exact),
            "published_CI": published["CI"].get(atom),
            "published_PT": published["PT"].get(atom),
        })
        for level in spectrum.levels[1:]:
            record = level.reference or {}
            gap_rows.append({
                "atom": atom, "term": level.label.ascii, "root": level.root,
                "dE_CI": level.gap, "dE_exp": record.get("dE_exp"),
                "dE_MDHF": record.get("dE_MDHF"),
            })

    ground_frame = pd.DataFrame(ground_rows)
    fluorine = pd.DataFrame(reference.fluorine_methods)
    computed = {}
    if "F" in spectra:
        row = ground_frame.set_index("atom").loc["F"]
        computed = {"PT": row["error_PT"], "minimal CI": row["error_CI"]}
    fluorine["computed_error_percent"] = fluorine["method"].map(computed)
    return {"ground_state": ground_frame, "gaps": pd.DataFrame(gap_rows), "fluorine": fluorine,
            "gap_ratios": gap_ratio_report(spectra, reference)}
