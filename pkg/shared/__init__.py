"""
Shared modules for the finite-space engine.

This package contains constants used by the library, the command line and the scripts.
"""

from shared.cli_config import (
    CONSTRUCTOR_ALIASES,
    CONSTRUCTOR_ARITY,
    CONVENTION_REDUCED,
    CONVENTION_UNREDUCED,
    EXIT_CERTIFICATE,
    EXIT_INCONCLUSIVE,
    EXIT_INVALID,
    EXIT_OK,
    FORMAT_VERSION,
    NUMERIC_CONSTRUCTORS,
    REPORT_SUFFIX,
)

__all__ = [
    "CONSTRUCTOR_ALIASES",
    "CONSTRUCTOR_ARITY",
    "CONVENTION_REDUCED",
    "CONVENTION_UNREDUCED",
    "EXIT_CERTIFICATE",
    "EXIT_INCONCLUSIVE",
    "EXIT_INVALID",
    "EXIT_OK",
    "FORMAT_VERSION",
    "NUMERIC_CONSTRUCTORS",
    "REPORT_SUFFIX",
]
