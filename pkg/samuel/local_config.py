"""Finds samuel.cfg and documents the variables it may set"""
from pathlib import Path
from typing import Optional

CONFIG_FILE_NAME = 'samuel.cfg'

EXAMPLE_CONFIG = """\
SAMUEL_PRIME={prime}
SAMUEL_N_MAX_EXTRA=8
SAMUEL_R_MAX=10
SAMUEL_N_MAX=24
SAMUEL_STAB_WINDOW=2
SAMUEL_EXTEND_STEP=4
SAMUEL_EXTEND_ATTEMPTS=3
SAMUEL_PRODUCT_COMPACTION=40
SAMUEL_LOG_LEVEL=WARNING
"""


def find_samuel_cfg_in_cwd_or_parents(start: Optional[Path] = None) -> Optional[Path]:
    current_path = start or Path.cwd()
    while True:
        candidate = current_path / CONFIG_FILE_NAME
        if candidate.is_file():
            return candidate
        if current_path.parent == current_path:
            return None
        current_path = current_path.parent
