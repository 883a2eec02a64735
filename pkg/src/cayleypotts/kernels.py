"""Backend selection for the census hot loop.

The compiled kernel is optional; when the extension failed to build (or was
never built) the pure-Python implementation takes over with the identical
contract.  `census_classes` validates inputs once and dispatches.
"""

from __future__ import annotations

from typing import Optional, Sequence

from . import _censuspy
from .errors import InvalidParamsError

try:
    from . import _censuscore
except ImportError:  # extension not built; pure fallback
    _censuscore = None

BACKEND = "compiled" if _censuscore is not None else "pure"


def available_backends() -> tuple:
    if _censuscore is not None:
        return ("compiled", "pure")
    return ("pure",)


def _validate(n_values: int, n_centers: int,
              start: int, stop: Optional[int]) -> None:
    if n_centers < 1:
        raise InvalidParamsError("need at least one center")
    needed = 5 if n_centers == 1 else 3 * n_centers + 2
    if n_values < needed:
        raise InvalidParamsError(
            f"value array of {n_values} too short for {n_centers} centers "
            f"(needs {needed})")
    end = n_centers if stop is None else stop
    if not (0 <= start <= end <= n_centers):
        raise InvalidParamsError(
            f"bad center range [{start}, {end}) for {n_centers} centers")


def census_classes(values: Sequence[int], n_centers: int,
                   start: int = 0, stop: Optional[int] = None,
                   backend: Optional[str] = None) -> list:
    """Ball class per center index in [start, stop), canonical order."""
    _validate(len(values), n_centers, start, stop)
    chosen = backend or BACKEND
    if chosen == "compiled":
        if _censuscore is None:
            raise InvalidParamsError("compiled kernel is not available")
        import numpy as np
        arr = values if isinstance(values, np.ndarray) else np.asarray(
            values, dtype=np.int64)
        if arr.dtype != np.int64:
            arr = arr.astype(np.int64)
        return _censuscore.census_classes(arr, n_centers, start, stop).tolist()
    if chosen == "pure":
        return _censuspy.census_classes(values, n_centers, start, stop)
    raise InvalidParamsError(f"unknown backend {chosen!r}")
