# ----------------------------------------------
# Constants shared across the optimizer, metrics and experiment harness
# ----------------------------------------------

# --- Algorithm variants ---
# variant -> (initializer, last-front replacement enabled)
VARIANT_TABLE = {
    "nsga2": ("bitstring_uniform", False),
    "nsga2_genuine": ("uniform_covering", False),
    "diverse_nsga2": ("uniform_covering", True),
    "nsga2_replacement": ("bitstring_uniform", True),
}

# --- Objectives ---
N_OBJECTIVES = 2
REFERENCE_POINT = (1.0, 1.0)

# --- Dataset CSV contract ---
LABEL_COLUMN = "class"

# --- Curves ---
CURVE_KINDS = ["hv", "hamming", "replaced_ratio"]

# --- Persistence ---
RECORD_SCHEMA_VERSION = 1
HISTORY_SUFFIX = ".history.jsonl"
FRONT_SUFFIX = ".front.jsonl"
RUNS_DIRNAME = "runs"
REPORT_DIRNAME = "report"
CURVES_DIRNAME = "curves"
FAILURES_FILENAME = "failures.json"
