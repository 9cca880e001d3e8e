"""Self-checks of the closed forms and block tables against independent oracles.

The quick level checks the PT rationals, the block tables against the
determinant-basis spectrum at the PT parameters, and the PT energies against
the reference dataset. The full level adds randomized parameter sweeps, the
quadrature oracle for every integral, orbital orthonormality and the
symmetry commutators.
"""
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from blocks.solver import block_eigenpairs, blocks_for, level_keys
from blocks.symbolic import SymmetryLabel
from blocks.tables import element_symbol
from determinant.hamiltonian import build_hamiltonian
from determinant.operators import OperatorTag, build_operator, commutator_norm
from determinant.space import enumerate_space
from determinant.spectrum import compare_with_blocks
from exceptions import DomainError, MinimalCIError
from integrals.closed_form import compute_integrals, pt_integrals
from integrals.quadrature import quadrature_symbol
from integrals.symbols import IntegralSymbol
from orbitals.basis import DilationParams, OrbitalId
from orbitals.quadrature import orbital_overlap
from spectra.reference import ReferenceData, load_reference_data
from utils import get_logger, load_solver_config, set_seeds

logger = get_logger(__name__)

LEVELS = ("quick", "full")
ATOMS = tuple(range(3, 11))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    level: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{"check": check.name, "status": "OK" if check.passed else "FAIL",
                              "detail": check.detail} for check in self.checks])


def _run_check(name: str, check: Callable[[], List[str]]) -> CheckResult:
    """Run one check; it returns failure messages, and raised model errors count as failures."""
    try:
        messages = check()
    except MinimalCIError as error:
        messages = [f"{type(error).__name__}: {error}"]
    result = CheckResult(name, not messages, "; ".join(messages))
    if result.passed:
        logger.info("%s: OK", name)
    else:
        logger.warning("%s: FAIL %s", name, result.detail)
    return result


def _relative_error(value: float, expected: float) -> float:
    return abs(value - expected) / max(1.0, abs(expected))


def check_pt_rationals(symbol: IntegralSymbol, tolerance: float = 1e-12) -> List[str]:
    """Closed forms at z1 = z2 = z3 = Z agree with the exact PT rationals for Z = 1..10."""
    messages = []
    for Z in range(1, 11):
        exact = float(pt_integrals(Z)[symbol])
        value = compute_integrals(Z, DilationParams.uniform(Z))[symbol]
        if _relative_error(value, exact) > tolerance:
            messages.append(f"{symbol.label} at Z={Z}: closed form {value!r} != PT {exact!r}")
    return messages


def check_dimension(N: int) -> List[str]:
    expected = math.comb(8, N - 2)
    found = len(enumerate_space(N))
    if found != expected:
        return [f"N={N}: configuration space has {found} determinants, expected {expected}"]
    return []


def check_blocks(N: int, params: DilationParams, Z: float, tolerance: float) -> List[str]:
    """Block eigenvalues against the labelled determinant spectrum at one parameter point."""
    return compare_with_blocks(N, compute_integrals(Z, params), blocks=blocks_for(N),
                               tolerance=tolerance)


def check_pt_energies(N: int, reference: ReferenceData, tolerance: float) -> List[str]:
    """Tabulated levels against the block tables: every level present, PT energies matching."""
    atom = element_symbol(N)
    ints = pt_integrals(N)
    computed: Dict = {}
    for block in blocks_for(N):
        for pair in block_eigenpairs(block, ints):
            computed[(block.label, pair.which_root)] = pair.energy
    rows = {(SymmetryLabel.parse(row["term"]), row["root"]): row for row in reference.levels(atom)}
    messages = [f"{atom} {label.ascii} ({root}): not tabulated"
                for label, root in level_keys(N) if (label, root) not in rows]
    for key, row in rows.items():
        if row.get("E_PT") is None:
            continue
        if key not in computed:
            messages.append(f"{atom} {row['term']} ({row['root']}): no block")
        elif abs(computed[key] - row["E_PT"]) > tolerance:
            messages.append(f"{atom} {row['term']} ({row['root']}): E_PT "
                            f"{computed[key]:.6f} != reference {row['E_PT']:.4f}")
    return messages


def check_quadrature(params: DilationParams, Z: float, tolerance: float) -> List[str]:
    """Every closed-form integral against the quadrature oracle."""
    closed = compute_integrals(Z, params)
    messages = []
    for symbol in IntegralSymbol:
        oracle = quadrature_symbol(symbol, Z, params)
        if _relative_error(closed[symbol], oracle) > tolerance:
            messages.append(f"{symbol.label} at Z={Z:.6g} {params}: closed form "
                            f"{closed[symbol]!r} != quadrature {oracle!r}")
    return messages


def check_orthonormality(params: DilationParams, tolerance: float) -> List[str]:
    messages = []
    for a in OrbitalId:
        for b in OrbitalId:
            if b < a:
                continue
            overlap = orbital_overlap(a, b, params)
            expected = 1.0 if a == b else 0.0
            if abs(overlap - expected) > tolerance:
                messages.append(f"<{a.tag}|{b.tag}> = {overlap!r}, expected {expected}")
    return messages


def check_commutators(N: int, params: DilationParams, Z: float, tolerance: float) -> List[str]:
    """H commutes with L^2, S^2, L3, S3 and parity."""
    hamiltonian = build_hamiltonian(N, compute_integrals(Z, params))
    scale = max(1.0, float(np.linalg.norm(hamiltonian.matrix, ord=2)))
    messages = []
    for tag in (OperatorTag.L2, OperatorTag.S2, OperatorTag.L3, OperatorTag.S3,
                OperatorTag.PARITY):
        norm = commutator_norm(hamiltonian, build_operator(tag, N))
        if norm > tolerance * scale:
            messages.append(f"N={N}: ||[H, {tag.value}]|| = {norm:.3e}")
    return messages


def _random_params(rng: np.random.Generator, low: float, high: float) -> DilationParams:
    return DilationParams(*rng.uniform(low, high, size=3))


def run_verification(level: str = "quick", seed: Optional[int] = None,
                     settings: Optional[Dict] = None,
                     reference: Optional[ReferenceData] = None) -> VerificationReport:
    """
    Run the quick or full verification suite.

    Args:
        level (str): 'quick' or 'full'.
        seed (int, optional): Seed of the randomized sweeps; defaults to the
            config `seed_value`.
        settings (dict, optional): Overrides for the `verification` config section.
        reference (ReferenceData, optional): Defaults to the embedded dataset.

    Returns:
        VerificationReport: One CheckResult per check, in run order.

    Raises:
        DomainError: On an unknown level.
    """
    if level not in LEVELS:
        raise DomainError(f"Unknown verification level {level!r}. Expected one of {LEVELS}")
    config = load_solver_config()
    settings = {**config["verification"], **(settings or {})}
    seed = config["seed_value"] if seed is None else seed
    reference = reference or load_reference_data()
    report = VerificationReport(level)
    add = report.checks.append

    for symbol in IntegralSymbol:
        add(_run_check(f"PT rational {symbol.label}", lambda: check_pt_rationals(symbol)))
    for N in ATOMS:
        atom = element_symbol(N)
        add(_run_check(f"dimension {atom}", lambda: check_dimension(N)))
        add(_run_check(f"blocks {atom} at PT", lambda: check_blocks(
            N, DilationParams.uniform(N), N, settings["block_tolerance"])))
        add(_run_check(f"E_PT {atom}", lambda: check_pt_energies(
            N, reference, settings["pt_tolerance"])))
    if level == "quick":
        return report

    set_seeds(seed)
    rng = np.random.default_rng(seed)
    low, high = settings["parameter_range"]
    for N in ATOMS:
        atom = element_symbol(N)
        for index in range(settings["random_settings"]):
            params, Z = _random_params(rng, low, high), float(rng.uniform(low, high))
            add(_run_check(f"blocks {atom} random #{index + 1}", lambda: check_blocks(
                N, params, Z, settings["block_tolerance"])))
        params, Z = _random_params(rng, low, high), float(rng.uniform(low, high))
        add(_run_check(f"commutators {atom}", lambda: check_commutators(
            N, params, Z, settings["commutator_tolerance"])))
    for index in range(settings["random_triples"]):
        params, Z = _random_params(rng, low, high), float(rng.uniform(low, high))
        add(_run_check(f"quadrature #{index + 1}", lambda: check_quadrature(
            params, Z, settings["integral_tolerance"])))
    params = _random_params(rng, low, high)
    add(_run_check("orthonormality", lambda: check_orthonormality(
        params, settings["integral_tolerance"])))
    return report
