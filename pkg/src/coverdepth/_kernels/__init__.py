"""Kernel backend selection.

The compiled backend (``_speedups``, built from Cython when a compiler is
available) is preferred; the pure-Python module is always present and is
used when the extension is missing, when ``COVERDEPTH_PURE_PYTHON`` is set,
or when an instance exceeds the compiled kernels' 62-bit mask width.
Both backends return identical values for identical arguments.
"""

from __future__ import annotations

import os

from . import pure

_compiled = None
if not os.environ.get("COVERDEPTH_PURE_PYTHON"):
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure"

_COMPILED_MAX_BITS = 62


def available_backends() -> dict:
    """Mapping of backend name to module, for benchmarks and equality tests."""
    out = {"pure": pure}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


def cycle_admissible_masks(n: int, t: int, start: int, stop: int) -> list[int]:
    if _compiled is not None and n <= _COMPILED_MAX_BITS:
        return _compiled.cycle_admissible_masks(n, t, start, stop)
    return pure.cycle_admissible_masks(n, t, start, stop)


def box_admissible_masks(edge_vmasks: list[int], n: int, t: int, fixed_last: int = -1) -> list[int]:
    if (
        _compiled is not None
        and n <= _COMPILED_MAX_BITS
        and len(edge_vmasks) <= _COMPILED_MAX_BITS
    ):
        return _compiled.box_admissible_masks(edge_vmasks, n, t, fixed_last)
    return pure.box_admissible_masks(edge_vmasks, n, t, fixed_last)


def box_find_witness(edge_vmasks: list[int], n: int, t: int, target: int):
    if (
        _compiled is not None
        and n <= _COMPILED_MAX_BITS
        and len(edge_vmasks) <= _COMPILED_MAX_BITS
    ):
        return _compiled.box_find_witness(edge_vmasks, n, t, target)
    return pure.box_find_witness(edge_vmasks, n, t, target)
