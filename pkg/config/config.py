import os
import json
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Base directories
BASE_DIR = Path(__file__).resolve().parent.parent
BASES_DIR = BASE_DIR / "config" / "bases"
REFERENCE_DIR = BASE_DIR / "config" / "reference"

# Worker parallelism for scans
COMPUTE_CONFIG = {
    "threads": max(1, int(os.getenv("CBLOCKS_THREADS", "1"))),
}

# Default scan bounds (desk scale); every bound is overridable from the CLI
SCAN_CONFIG = {
    "max_level": int(os.getenv("CBLOCKS_MAX_LEVEL", "6")),
    "max_weight_sum": int(os.getenv("CBLOCKS_MAX_WEIGHT_SUM", "16")),
    "progress": os.getenv("CBLOCKS_PROGRESS", "False").lower() == "true",
}

# Logging configuration
LOG_CONFIG = {
    "level": os.getenv("CBLOCKS_LOG_LEVEL", "WARNING"),
    "file": os.getenv("CBLOCKS_LOG_FILE", "logs/cblocks.log"),
    "rotation": "1 MB",
}

# Boundary bases of Pic(M_0,n), one JSON file per basis
BOUNDARY_BASES = {
    basis_file.stem: json.loads(basis_file.read_text())
    for basis_file in sorted(BASES_DIR.glob("*.json"))
}

# Published values reproduced by the reference-examples check
REFERENCE_EXAMPLES = {
    example_file.stem: json.loads(example_file.read_text())
    for example_file in sorted(REFERENCE_DIR.glob("*.json"))
}
