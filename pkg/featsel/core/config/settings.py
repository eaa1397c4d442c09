import os
from dotenv import load_dotenv

load_dotenv()  # Load variables from .env file


class Settings:
    """
    Centralized defaults for the optimizer, the evaluator and the experiment harness.

    Every value can be overridden through a FEATSEL_* environment variable.
    """

    # --- Population & budget ---
    POP_SIZE: int = int(os.getenv("FEATSEL_POP_SIZE", 100))
    MAX_NFC: int = int(os.getenv("FEATSEL_MAX_NFC", 15000))

    # --- Variation operators ---
    MUTATION_PROB: float = float(os.getenv("FEATSEL_MUTATION_PROB", 0.01))
    CROSSOVER_PROB: float = float(os.getenv("FEATSEL_CROSSOVER_PROB", 1.0))

    # --- Fitness ---
    K_NEIGHBORS: int = int(os.getenv("FEATSEL_K", 5))
    TEST_FRACTION: float = float(os.getenv("FEATSEL_TEST_FRACTION", 0.2))

    # --- Last-front replacement ---
    REPLACEMENT_ATTEMPTS: int = int(os.getenv("FEATSEL_REPLACEMENT_ATTEMPTS", 10))
    MAX_STALLED_GENERATIONS: int = int(
        os.getenv("FEATSEL_MAX_STALLED_GENERATIONS", 50)
    )

    # --- Experiments ---
    RUNS: int = int(os.getenv("FEATSEL_RUNS", 31))
    SEED_BASE: int = int(os.getenv("FEATSEL_SEED_BASE", 0))
    N_JOBS: int = int(os.getenv("FEATSEL_N_JOBS", 1))

    # --- File Paths ---
    OUTPUT_DIR: str = os.getenv("FEATSEL_OUTPUT_DIR", "results")

    # --- Logging ---
    LOG_LEVEL: str = os.getenv("FEATSEL_LOG_LEVEL", "INFO")


settings = Settings()
