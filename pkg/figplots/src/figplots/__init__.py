"""Figure rendering for gatemp scan CSVs."""

from .figures import (
    FIGURES,
    EmptyData,
    FigplotsError,
    FigureSpec,
    MissingColumns,
    Probe,
    load_columns,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "FIGURES",
    "EmptyData",
    "FigplotsError",
    "FigureSpec",
    "MissingColumns",
    "Probe",
    "load_columns",
    "render",
    "__version__",
]
