import json

import pytest

from integrals.closed_form import compute_integrals, pt_integrals
from orbitals.basis import DilationParams
from spectra.reference import load_reference_data


@pytest.fixture(scope="session")
def reference_data():
    """The embedded reference dataset."""
    return load_reference_data()


@pytest.fixture
def pt_ints():
    """Exact PT integrals keyed by nuclear charge 1..10."""
    return {Z: pt_integrals(Z) for Z in range(1, 11)}


@pytest.fixture
def be_ground_params():
    """Tabulated optimal parameters of the Be ground state."""
    return DilationParams(3.7052, 2.3669, 1.9944)


@pytest.fixture
def f_ground_params():
    """Tabulated optimal parameters of the F ground state."""
    return DilationParams(8.7112, 6.3576, 5.0587)


@pytest.fixture
def be_ground_ints(be_ground_params):
    return compute_integrals(4, be_ground_params)


@pytest.fixture
def generic_params():
    """An arbitrary, unequal parameter set."""
    return DilationParams(3.1, 1.7, 1.3)


@pytest.fixture
def generic_ints(generic_params):
    return compute_integrals(4.5, generic_params)


@pytest.fixture
def tabulated_params(reference_data):
    """Function returning the tabulated parameters of a level of a neutral atom."""
    def lookup(atom, term, root="lower"):
        row = reference_data.level(atom, term, root)
        return DilationParams(row["Z1"], row["Z2"], row["Z3"])
    return lookup


@pytest.fixture
def config_file_path(tmpdir):
    """A minimal solver config in a temporary directory."""
    config = {"seed_value": 7, "n_jobs": 3, "log_level": "WARNING"}
    path = tmpdir.join("solver_config.json")
    with open(path, "w", encoding="utf-8") as file:
        json.dump(config, file)
    return str(path)
