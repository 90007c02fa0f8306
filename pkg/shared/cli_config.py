"""
Command-Line Configuration.

Constants shared by the command-line front end, the reproduction script and the
document layer, so exit codes and file conventions stay consistent between them.

Environment Variables (optional overrides):
    FINSPACE_REPORT_SUFFIX - Override the file suffix of generated reports
"""

import os

# =============================================================================
# EXIT CODES
# =============================================================================

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INCONCLUSIVE = 2
EXIT_CERTIFICATE = 3

# =============================================================================
# ARTIFACTS
# =============================================================================

REPORT_SUFFIX = os.getenv("FINSPACE_REPORT_SUFFIX", ".json")

# Bumped whenever a document layout changes
FORMAT_VERSION = 1

# Values are always stored unreduced; --reduced only changes what is printed
CONVENTION_UNREDUCED = "unreduced"
CONVENTION_REDUCED = "reduced"

# =============================================================================
# CONSTRUCTOR LANGUAGE
# =============================================================================

# keyword -> number of space arguments (None: one or more); numeric kinds take an integer
CONSTRUCTOR_ARITY = {
    "op": 1,
    "suspension": 1,
    "join": 2,
    "product": 2,
    "wedge": None,
}

NUMERIC_CONSTRUCTORS = {
    "discrete": 1,
    "interval": 0,
    "circle": 2,
    "sphere": 0,
}

CONSTRUCTOR_ALIASES = {
    "point": "discrete:1",
    "S1": "circle:2",
}
