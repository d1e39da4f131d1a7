"""Numeric kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
reference. Set QARS_PURE_PYTHON=1 to force the fallback. Both backends
produce bit-identical results; ``BACKEND`` names the active one.
"""

import os

from . import _ref

if os.environ.get("QARS_PURE_PYTHON") == "1":
    _impl = _ref
    BACKEND = "python"
else:
    try:
        from . import _fast as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _ref
        BACKEND = "python"

DIST_UNIFORM = _ref.DIST_UNIFORM
DIST_TRIANGULAR = _ref.DIST_TRIANGULAR

logistic = _impl.logistic
unit_sample = _impl.unit_sample
violation_count = _impl.violation_count
landscape_rows = _impl.landscape_rows
