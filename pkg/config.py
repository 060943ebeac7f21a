import os

# Environment detection
IS_DOCKER = os.path.exists('/.dockerenv')

# Base paths for different environments
DOCKER_BASE_PATH = "/app/output"
LOCAL_BASE_PATH = "output"

# Use appropriate base path based on environment
BASE_PATH = DOCKER_BASE_PATH if IS_DOCKER else LOCAL_BASE_PATH

# Report files written by `main.py verify`
REPORT_FILE = os.path.join(BASE_PATH, 'verification.jsonl')
SUMMARY_FILE = os.path.join(BASE_PATH, 'verification.csv')

# Logging configuration
LOG_FILE = os.path.join(BASE_PATH, 'chi_verifier.log')

# Enumeration ceilings (largest order accepted by each generator)
TREE_CEILING = int(os.environ.get('CHI_TREE_CEILING', 12))
UNICYCLIC_CEILING = int(os.environ.get('CHI_UNICYCLIC_CEILING', 11))
GENERAL_CEILING = int(os.environ.get('CHI_GENERAL_CEILING', 12))

# Numerical tolerances
RELATIVE_TOLERANCE = 1e-9
FORMULA_TOLERANCE = 1e-12
ROOT_TOLERANCE = 1e-10
ALPHA1_BRACKET = (-2.5, -1.0)
ALPHA1_REFERENCE = -1.7036
ALPHA1_WINDOW = 1e-4
MAX_BISECTION_ITERATIONS = 200
MONOTONE_STEP = 0.1

# Default alpha grids; the tree grid carries a point within 1e-4 of alpha_1
TREE_ALPHAS = (-1.7036, -1.7, -1.5, -1.0, -0.5, -0.1)
UNICYCLIC_ALPHAS = (-1.0, -0.75, -0.5, -0.25, -0.1)
RANKING_ALPHAS = (-1.0, -0.5, -0.1)
LEMMA1_ALPHAS = (-1.5, -1.0, -0.5, -0.1)  # alpha_1 + 1e-6 is prepended at run time
LEMMA2_ALPHAS = (-1.0, -0.75, -0.5, -0.25, -0.1)

# Random suites
DEFAULT_SEED = 20130101
LEMMA_INSTANCES = 500

DEFAULT_WORKERS = 1
SIGNIFICANT_DIGITS = 15
