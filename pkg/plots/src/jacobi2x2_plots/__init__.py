"""Figure rendering for jacobi2x2 sweep CSV files (CSV-only interface)."""
from .render import (
    CSV_HEADER,
    CsvFormatError,
    FigureSpec,
    SweepRow,
    build_series,
    main,
    read_sweep_csv,
    render_figure,
)

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "CsvFormatError",
    "FigureSpec",
    "SweepRow",
    "build_series",
    "main",
    "read_sweep_csv",
    "render_figure",
    "__version__",
]
