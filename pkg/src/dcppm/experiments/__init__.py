# -*- coding: utf-8 -*-

__all__ = [
    "EigencheckResult",
    "expected_matrix",
    "expected_matrix_eigencheck",
    "COLUMNS",
    "ESTIMATORS",
    "SweepConfig",
    "SweepRow",
    "threshold_sweep",
    "rows_to_frame",
    "write_sweep",
    "metadata_path",
]

from .eigencheck import (
    EigencheckResult,
    expected_matrix,
    expected_matrix_eigencheck,
)
from .sweep import (
    COLUMNS,
    ESTIMATORS,
    SweepConfig,
    SweepRow,
    metadata_path,
    rows_to_frame,
    threshold_sweep,
    write_sweep,
)
