#!/usr/bin/env python3
"""Numerical tolerances and command-line defaults.

These constants control singularity detection, round-off handling and the
presentation defaults of the cblue command-line interface.
"""

# Relative pivot threshold for Gram factorizations.
# A Cholesky pivot below this fraction of the largest pivot marks the
# system as singular.
PIVOT_TOLERANCE: float = 1e-12

# Round-off allowance for m_sn - m_n^2 before the square root.
# Negatives smaller than this times max(1, m_sn) are clamped to zero.
ROUNDOFF_TOLERANCE: float = 1e-12

# Relative tolerance for the unbiasedness and weight-multiplier checks.
CONSTRAINT_TOLERANCE: float = 1e-10

# Largest sample count accepted by the brute-force weight oracle.
ORACLE_MAX_SAMPLES: int = 12

# Decimal places used when rendering reports (matches the reference example).
DEFAULT_DIGITS: int = 2

# Monte Carlo defaults for the simulate command.
DEFAULT_REPLICATES: int = 200_000
DEFAULT_SEED: int = 42

# Replicates handled by one concurrent work block.
# Substreams are keyed by replicate index, so the block size never changes
# the result.
REPLICATE_BLOCK_SIZE: int = 10_000

# Process exit codes.
EXIT_OK: int = 0
EXIT_USAGE: int = 1
EXIT_NUMERICAL: int = 2
EXIT_SELF_TEST: int = 3
