"""
Command-line driver: run configuration, subcommand dispatch and sweeps.
"""

from .config import Basis, Command, RunConfig
from .runner import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from .sweep import SweepCase, SweepRunner, run_case, sweep_x_values

__all__ = [
    'Basis',
    'Command',
    'RunConfig',
    'EXIT_FAILED',
    'EXIT_OK',
    'EXIT_USAGE',
    'run',
    'SweepCase',
    'SweepRunner',
    'run_case',
    'sweep_x_values',
]
