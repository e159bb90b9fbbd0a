"""Backend selection for the permutation kernels.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``SYMCHAR_PURE_PYTHON`` is set to a non-empty value,
the pure-Python implementation is loaded.  Both expose the same functions.
"""

import os

from . import _kernels_py

if os.environ.get("SYMCHAR_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "python"

cycle_count = _impl.cycle_count
cycle_labels = _impl.cycle_labels
kappa_pair_counts = _impl.kappa_pair_counts
nf_reduce = _impl.nf_reduce
nf_check = _impl.nf_check
normal_form_sweep = _impl.normal_form_sweep
cycle_product_counts = _impl.cycle_product_counts
length_distribution = _impl.length_distribution

__all__ = [
    "BACKEND",
    "cycle_count",
    "cycle_labels",
    "kappa_pair_counts",
    "nf_reduce",
    "nf_check",
    "normal_form_sweep",
    "cycle_product_counts",
    "length_distribution",
]
