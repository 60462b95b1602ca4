"""
CLI subpackage - the tra-spectra command.

• RunConfig - defaults, JSON file and flags merged and validated
• VerificationSuite - the self-checks behind `tra-spectra verify`
• main - argument parsing and dispatch
"""

from .config import COMMANDS, RunConfig
from .verify import VerificationSuite, run_checks
from .app import build_parser, main

__all__ = ["COMMANDS", "RunConfig", "VerificationSuite", "run_checks", "build_parser", "main"]
