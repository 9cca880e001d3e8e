import os

# Path to the root directory
ROOT_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Paths inside the source directory
# Path to source directory
SRC_DIR = os.path.join(ROOT_DIR, "src")
# Path to config directory
CONFIG_DIR = os.path.join(SRC_DIR, "config")
# Path to solver config (optimizer, quadrature, verification, output settings)
SOLVER_CONFIG_FILE_PATH = os.path.join(CONFIG_DIR, "solver_config.json")
# Path to the embedded data directory
DATA_DIR = os.path.join(SRC_DIR, "data")
# Embedded reference energies, ionization energies and error tables
REFERENCE_DATA_FILE_PATH = os.path.join(DATA_DIR, "reference_data.json")

# Path to outputs
OUTPUT_DIR = os.path.join(ROOT_DIR, "outputs")
# Default location for `export-data`
EXPORTED_DATA_FILE_PATH = os.path.join(OUTPUT_DIR, "reference_data.json")
# Path to errors directory inside outputs directory
ERRORS_DIR = os.path.join(OUTPUT_DIR, "errors")
# Error file paths
CLI_ERROR_FILE_PATH = os.path.join(ERRORS_DIR, "cli_error.txt")
VERIFY_ERROR_FILE_PATH = os.path.join(ERRORS_DIR, "verify_error.txt")
