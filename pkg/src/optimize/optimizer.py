"""Variational determination of the dilation parameters, one symmetry block at a time."""
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from blocks.solver import BlockEigenpair, block_eigenpairs, evaluate_block, small_atom_block
from blocks.symbolic import SymmetryBlock, SymmetryLabel
from blocks.tables import validate_electron_count
from exceptions import BoundaryError, DomainError, OptimizationError
from integrals.closed_form import compute_integrals
from orbitals.basis import DilationParams
from utils import get_logger, load_solver_config

logger = get_logger(__name__)

optimizer_config = load_solver_config()["optimizer"]

PARAMETER_NAMES = ("z1", "z2", "z3")


@dataclass(frozen=True)
class OptimizationResult:
    """Outcome of minimizing the lowest eigenvalue of one block.

    Attributes:
        N (int): Electron count.
        Z (float): Nuclear charge.
        label (SymmetryLabel): Term of the block.
        params_star (DilationParams): Minimizer; unused parameters are None.
        levels (list): Every eigenpair of the block evaluated at params_star.
        converged (bool): Whether the simplex search met its tolerances.
        iterations (int): Simplex iterations plus polish sweeps.
        gradient_norm (float): Central-difference gradient norm at params_star.
    """
    N: int
    Z: float
    label: SymmetryLabel
    params_star: DilationParams
    levels: Tuple[BlockEigenpair, ...]
    converged: bool = True
    iterations: int = 0
    gradient_norm: float = 0.0
    block: Optional[SymmetryBlock] = field(default=None, repr=False, compare=False)

    @property
    def energy(self) -> float:
        return self.levels[0].energy

    @property
    def active_parameters(self) -> Tuple[str, ...]:
        return tuple(name for name, value in zip(PARAMETER_NAMES, self.params_star.as_tuple())
                     if value is not None)


def active_parameters(block: SymmetryBlock) -> Tuple[str, ...]:
    """z1 always, z2 when a 2s orbital occurs, z3 when a 2p orbital occurs."""
    names = ["z1"]
    if block.uses_2s:
        names.append("z2")
    if block.uses_2p:
        names.append("z3")
    return tuple(names)


def _params_from_vector(names: Sequence[str], vector: Sequence[float]) -> DilationParams:
    values = dict(zip(names, (float(value) for value in vector)))
    return DilationParams(values["z1"], values.get("z2"), values.get("z3"))


def _vector_from_params(names: Sequence[str], params: DilationParams) -> np.ndarray:
    return np.array([params.require(name) for name in names])


def lowest_energy(block: SymmetryBlock, Z: float, params: DilationParams) -> float:
    """Lowest eigenvalue of the block at the given parameters."""
    return block_eigenpairs(block, compute_integrals(Z, params))[0].energy


def _make_objective(block: SymmetryBlock, Z: float, names: Sequence[str],
                    lower: float, upper: float) -> Callable[[np.ndarray], float]:
    def objective(vector: np.ndarray) -> float:
        if np.any(vector <= lower) or np.any(vector >= upper):
            return math.inf
        return lowest_energy(block, Z, _params_from_vector(names, vector))
    return objective


def _polish(objective: Callable[[np.ndarray], float], x: np.ndarray, f: float,
            settings: Dict) -> Tuple[np.ndarray, float, int]:
    """Coordinate-wise parabolic refinement with a shrinking trial step."""
    step = settings["polish_step"]
    sweeps = 0
    for sweeps in range(1, settings["polish_sweeps"] + 1):
        improvement = 0.0
        for axis in range(len(x)):
            unit = np.zeros(len(x))
            unit[axis] = 1.0
            f_minus, f_plus = objective(x - step * unit), objective(x + step * unit)
            curvature = f_plus - 2.0 * f + f_minus
            if math.isfinite(curvature) and curvature > 0.0:
                delta = -step * (f_plus - f_minus) / (2.0 * curvature)
                delta = max(-10.0 * step, min(10.0 * step, delta))
            else:
                delta = -step if f_minus < f_plus else step
            candidates = [(objective(x + delta * unit), x + delta * unit),
                          (f_minus, x - step * unit), (f_plus, x + step * unit)]
            best_f, best_x = min(candidates, key=lambda item: item[0])
            if best_f < f:
                improvement += f - best_f
                x, f = best_x, best_f
        if improvement < settings["energy_tolerance"]:
            step *= 0.1
            if step < settings["polish_min_step"]:
                break
    return x, f, sweeps


def initial_guess(Z: float, names: Sequence[str], settings: Optional[Dict] = None) -> np.ndarray:
    """(Z - 0.3, Z - 2, Z - 2.5) restricted to the active names; 0.5 Z where that is not positive."""
    settings = settings or optimizer_config
    offsets = dict(zip(PARAMETER_NAMES, settings["initial_offsets"]))
    guess = []
    for name in names:
        value = Z - offsets[name]
        guess.append(value if value > settings["lower_bound"] else 0.5 * Z)
    return np.array(guess)


def random_starts(Z: float, count: int, rng: Optional[np.random.Generator] = None) -> np.ndarray:
    """`count` starting points drawn uniformly from [0.5 Z, 1.2 Z]^3."""
    rng = rng if rng is not None else np.random.default_rng()
    return rng.uniform(0.5 * Z, 1.2 * Z, size=(count, 3))


def stationarity_gradient(block: SymmetryBlock, Z: float, params: DilationParams,
                          step: Optional[float] = None) -> np.ndarray:
    """
    Central-difference gradient of the lowest block eigenvalue over the active
    parameters.

    Args:
        block (SymmetryBlock): The block.
        Z (float): Nuclear charge.
        params (DilationParams): Point of evaluation.
        step (float, optional): Difference step; defaults to `gradient_step`.

    Returns:
        np.ndarray: One derivative per active parameter, in z1, z2, z3 order.
    """
    step = optimizer_config["gradient_step"] if step is None else step
    names = active_parameters(block)
    center = _vector_from_params(names, params)
    gradient = np.zeros(len(names))
    for axis in range(len(names)):
        shift = np.zeros(len(names))
        shift[axis] = step
        f_plus = lowest_energy(block, Z, _params_from_vector(names, center + shift))
        f_minus = lowest_energy(block, Z, _params_from_vector(names, center - shift))
        gradient[axis] = (f_plus - f_minus) / (2.0 * step)
    return gradient


def _validate_charge(Z: float) -> float:
    if isinstance(Z, bool) or not math.isfinite(float(Z)) or float(Z) <= 0:
        raise DomainError(f"Nuclear charge Z must be positive, got {Z!r}")
    return float(Z)


def optimize_subspace(N: int, Z: float, block: SymmetryBlock,
                      starts: Optional[Sequence[Sequence[float]]] = None,
                      settings: Optional[Dict] = None) -> OptimizationResult:
    """
    Minimize the lowest eigenvalue of `block` over its active dilation parameters
    and evaluate every eigenpair of the block at the minimizer.

    The simplex search runs from the offset guess and from (Z, Z, Z) unless
    `starts` is given; the best result is polished coordinate-wise.

    Args:
        N (int): Electron count, 3..10.
        Z (float): Nuclear charge (Z != N gives ions).
        block (SymmetryBlock): A block of atom N.
        starts (Sequence, optional): Starting points (z1, z2, z3); inactive
            entries are ignored.
        settings (dict, optional): Overrides for the `optimizer` config section.

    Returns:
        OptimizationResult: The minimizer and the block's eigenpairs there.

    Raises:
        BoundaryError: If the minimizer lies on the parameter box.
        OptimizationError: If no start converged; carries the best result.
    """
    validate_electron_count(N, 3, 10)
    if block.N != N:
        raise DomainError(f"Block {block.name} does not belong to N={N}")
    Z = _validate_charge(Z)
    settings = {**optimizer_config, **(settings or {})}
    names = active_parameters(block)
    lower, upper = settings["lower_bound"], settings["upper_bound_factor"] * Z
    objective = _make_objective(block, Z, names, lower, upper)

    if starts is None:
        start_points = [initial_guess(Z, names, settings), np.full(len(names), Z)]
    else:
        indices = [PARAMETER_NAMES.index(name) for name in names]
        start_points = [np.asarray(start, dtype=float)[indices] for start in starts]

    logger.info("Optimizing N=%d Z=%g %s over %s from %d start(s)",
                N, Z, block.label.term, ",".join(names), len(start_points))
    best = None
    iterations = 0
    converged = False
    for start in start_points:
        result = optimize.minimize(
            objective, start, method="Nelder-Mead",
            options={"xatol": settings["xatol"], "fatol": settings["fatol"],
                     "maxiter": settings["max_iterations"]})
        iterations += int(result.nit)
        converged = converged or bool(result.success)
        if best is None or result.fun < best.fun:
            best = result

    x, f, sweeps = _polish(objective, np.asarray(best.x, dtype=float), float(best.fun), settings)
    params_star = _params_from_vector(names, x)
    levels = tuple(block_eigenpairs(block, compute_integrals(Z, params_star)))
    outcome = OptimizationResult(
        N=N, Z=Z, label=block.label, params_star=params_star, levels=levels,
        converged=converged, iterations=iterations + sweeps,
        gradient_norm=float(np.linalg.norm(stationarity_gradient(block, Z, params_star))),
        block=block)

    margin = 1e-6 * max(1.0, Z)
    if np.any(x - lower < margin) or np.any(upper - x < margin):
        logger.warning("N=%d Z=%g %s: optimizer reached the parameter box at %s",
                       N, Z, block.label.term, params_star)
        raise BoundaryError(
            f"{block.name} at Z={Z}: parameters {params_star} reached the box "
            f"({lower}, {upper})", best=outcome)
    if not converged:
        raise OptimizationError(
            f"{block.name} at Z={Z}: no simplex run converged within "
            f"{settings['max_iterations']} iterations", best=outcome)
    logger.info("N=%d Z=%g %s: E=%.10f at %s", N, Z, block.label.term, f, params_star)
    return outcome


def optimize_small_atom(N: int, Z: float) -> OptimizationResult:
    """
    Closed-form optimum for H-like (N=1) and He-like (N=2) systems.

    N=1: E = -Z^2/2 at z1 = Z. N=2: E(z1) = z1^2 - 2 Z z1 + 5 z1 / 8 is
    minimized at z1 = Z - 5/16 with E = -(Z - 5/16)^2.

    Raises:
        BoundaryError: For N=2 with Z <= 5/16 (no bound minimizer).
    """
    validate_electron_count(N, 1, 2)
    Z = _validate_charge(Z)
    block = small_atom_block(N)
    z1 = Z if N == 1 else Z - 5.0 / 16.0
    if z1 <= optimizer_config["lower_bound"]:
        raise BoundaryError(f"N={N} Z={Z}: optimal z1={z1} is not positive")
    params_star = DilationParams(z1)
    levels = tuple(block_eigenpairs(block, compute_integrals(Z, params_star)))
    return OptimizationResult(N=N, Z=Z, label=block.label, params_star=params_star,
                              levels=levels, block=block)


def virial_split(block: SymmetryBlock, N: int, Z: float,
                 params: DilationParams) -> Tuple[float, float]:
    """
    Kinetic and potential energy of the lowest eigenstate of a block.

    Every block matrix is homogeneous under scaling the dilation parameters at
    fixed Z: M(s) = s^2 T + s V. Two evaluations give T = (M(2) - 2 M(1)) / 2
    and V = M(1) - T exactly; both are then taken in the lowest eigenvector.

    Args:
        block (SymmetryBlock): The block.
        N (int): Electron count of the block.
        Z (float): Nuclear charge.
        params (DilationParams): Parameters of the state.

    Returns:
        (float, float): (T, V) in hartree.
    """
    if block.N != N:
        raise DomainError(f"Block {block.name} does not belong to N={N}")
    at_one = evaluate_block(block, compute_integrals(Z, params))
    at_two = evaluate_block(block, compute_integrals(Z, params.scaled(2.0)))
    kinetic = 0.5 * (at_two - 2.0 * at_one)
    potential = at_one - kinetic
    vector = block_eigenpairs(block, compute_integrals(Z, params))[0].coefficients
    return float(vector @ kinetic @ vector), float(vector @ potential @ vector)


def virial_ratio(block: SymmetryBlock, N: int, Z: float, params: DilationParams) -> float:
    """V / T of the lowest eigenstate."""
    kinetic, potential = virial_split(block, N, Z, params)
    return potential / kinetic
