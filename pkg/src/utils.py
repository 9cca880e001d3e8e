import os
import json
import random
import logging
from typing import Dict, Optional

import numpy as np
import pandas as pd

from config import paths

N_JOBS_ENV_VAR = "MINCI_N_JOBS"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def read_json_as_dict(input_path: str) -> Dict:
    """
    Reads a JSON file and returns its content as a dictionary.
    If input_path is a directory, the first JSON file in the directory is read.
    If input_path is a file, the file is read.

    Args:
        input_path (str): The path to the JSON file or directory containing a JSON file.

    Returns:
        dict: The content of the JSON file as a dictionary.

    Raises:
        ValueError: If the input_path is neither a file nor a directory,
                    or if input_path is a directory without any JSON files.
    """
    if os.path.isdir(input_path):
        json_files = sorted(
            os.path.join(input_path, f) for f in os.listdir(input_path) if f.endswith('.json'))
        if not json_files:
            raise ValueError(f"No JSON files found in the directory: {input_path}")
        json_file_path = json_files[0]
    elif os.path.isfile(input_path):
        json_file_path = input_path
    else:
        raise ValueError(f"Input path is neither a file nor a directory: {input_path}")

    with open(json_file_path, 'r', encoding="utf-8") as file:
        json_data_as_dict = json.load(file)

    return json_data_as_dict


def load_solver_config(config_file_path: str = paths.SOLVER_CONFIG_FILE_PATH) -> Dict:
    """
    Loads the solver configuration (optimizer, quadrature, verification and
    output settings).

    Args:
        config_file_path (str, optional): Path of the solver config JSON file.

    Returns:
        dict: The solver configuration.
    """
    return read_json_as_dict(config_file_path)


def set_seeds(seed_value: int) -> None:
    """
    Set the random seeds for Python and NumPy to make the randomized oracle
    sweeps reproducible.

    Args:
        seed_value (int): The seed value to use for random
            number generation. Must be an integer.

    Raises:
        ValueError: If the seed is not an integer.
    """
    if isinstance(seed_value, int) and not isinstance(seed_value, bool):
        os.environ['PYTHONHASHSEED'] = str(seed_value)
        random.seed(seed_value)
        np.random.seed(seed_value)
    else:
        raise ValueError(f"Invalid seed value: {seed_value}. Cannot set seeds.")


def get_n_jobs(default: Optional[int] = None) -> int:
    """
    Resolve the number of parallel jobs used for scans and multi-atom runs.

    The environment variable `MINCI_N_JOBS` wins over the config value.

    Args:
        default (int, optional): Fallback when the variable is unset. Defaults to
            the `n_jobs` entry of the solver config.

    Returns:
        int: The number of jobs (joblib convention, -1 means all cores).

    Raises:
        ValueError: If the environment variable is not an integer or is zero.
    """
    if default is None:
        default = int(load_solver_config()["n_jobs"])
    raw_value = os.environ.get(N_JOBS_ENV_VAR)
    if raw_value is None or raw_value.strip() == "":
        return default
    try:
        n_jobs = int(raw_value)
    except ValueError as exc:
        raise ValueError(f"Invalid {N_JOBS_ENV_VAR} value: {raw_value!r}") from exc
    if n_jobs == 0:
        raise ValueError(f"Invalid {N_JOBS_ENV_VAR} value: {raw_value!r}")
    return n_jobs


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Return a module logger sharing one stream handler and format.

    Args:
        name (str): Logger name, normally `__name__`.
        level (str, optional): Level name; defaults to `log_level` from config.

    Returns:
        logging.Logger: The configured logger.
    """
    root = logging.getLogger("minimal_ci")
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
        root.setLevel(level or load_solver_config().get("log_level", "WARNING"))
    elif level is not None:
        root.setLevel(level)
    return root.getChild(name)


def set_log_level(level: str) -> None:
    """Set the level of every solver logger."""
    get_logger("utils")
    logging.getLogger("minimal_ci").setLevel(level)


def save_dataframe_as_csv(dataframe: pd.DataFrame, file_path: str,
                          float_format: str = '%.4f') -> None:
    """
    Saves a pandas dataframe to a CSV file at the given path.
    Float values are saved with 4 decimal places unless `float_format` says otherwise.

    Args:
        dataframe (pd.DataFrame): The pandas dataframe to be saved.
        file_path (str): File path and name to save the CSV file.
        float_format (str, optional): printf-style float format.

    Raises:
        IOError: If an error occurs while saving the CSV file.
    """
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        dataframe.to_csv(file_path, index=False, float_format=float_format)
    except IOError as exc:
        raise IOError(f'Error saving CSV file: {exc}') from exc


def write_error_file(error_message: str, file_path: str) -> None:
    """
    Write an error message (usually a traceback) to the errors directory.

    Args:
        error_message (str): The text to write.
        file_path (str): Destination file.
    """
    os.makedirs(os.path.dirname(file_path), exist_ok=True)
    with open(file_path, "w", encoding="utf-8") as file:
        file.write(error_message)
