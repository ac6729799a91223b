"""Fibonacci numbers characterized by the residual beta*(beta+alpha) - alpha**2.

A positive integer beta with some alpha >= beta making that residual +1 or -1
(a "Hippasus number" with successor alpha) is exactly a Fibonacci number.
This package provides the exact-arithmetic search for such pairs, the
subtractive-descent decision procedure that proves membership and recovers
the index, the Wasteels consecutive-pair criterion, and the golden-ratio
geometry attached to the sequence (quotient convergence and the near-regular
octagon built on Fibonacci-diameter circles).
"""
from .descent import (
    DescentTrace,
    HippasusPair,
    NotHippasusError,
    SuccessorSet,
    descend,
    extend,
    find_exact_solution,
    hippasus_residual,
    is_fibonacci_by_descent,
    is_hippasus_pair,
    predecessor,
    successors,
    unique_successor,
    verify_no_exact_solution,
)
from .fibonacci import MAX_INDEX, cassini_residual, fib, fib_index_of, is_consecutive_fib
from .geometry import (
    ConvergenceRow,
    OctagonGeometry,
    PrecisionConfig,
    PrecisionTooLow,
    convergence_table,
    octagon,
    octagon_limits,
    phi,
)
from .table import TableRow, build_rows, render, render_aligned, render_csv, render_json
from .wasteels import WasteelsVerdict, classify, wasteels_residual

__version__ = "0.1.0"

__all__ = [
    "MAX_INDEX",
    "fib",
    "fib_index_of",
    "is_consecutive_fib",
    "cassini_residual",
    "hippasus_residual",
    "is_hippasus_pair",
    "HippasusPair",
    "SuccessorSet",
    "DescentTrace",
    "NotHippasusError",
    "successors",
    "unique_successor",
    "predecessor",
    "extend",
    "descend",
    "is_fibonacci_by_descent",
    "find_exact_solution",
    "verify_no_exact_solution",
    "wasteels_residual",
    "classify",
    "WasteelsVerdict",
    "PrecisionConfig",
    "PrecisionTooLow",
    "ConvergenceRow",
    "OctagonGeometry",
    "phi",
    "convergence_table",
    "octagon",
    "octagon_limits",
    "TableRow",
    "build_rows",
    "render",
    "render_aligned",
    "render_csv",
    "render_json",
    "__version__",
]
