"""Puts the project root on sys.path so that `config` and `src` import in tests."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
