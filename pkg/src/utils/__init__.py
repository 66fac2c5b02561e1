"""
Utility functions for the hypergeometric period toolkit.

- logging_utils: Logging setup and configuration
- file_utils: File output (JSON, CSV, directory management)
- json_utils: Complex-number aware JSON encoding
"""

from .logging_utils import setup_logging
from .file_utils import save_json_data, save_csv_data, ensure_directory
from .json_utils import complex_to_pair, pair_to_complex, matrix_to_pairs, to_jsonable, dumps

__all__ = [
    # Logging
    'setup_logging',

    # File I/O
    'save_json_data',
    'save_csv_data',
    'ensure_directory',

    # JSON
    'complex_to_pair',
    'pair_to_complex',
    'matrix_to_pairs',
    'to_jsonable',
    'dumps',
]
