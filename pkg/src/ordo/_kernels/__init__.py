"""Integer kernels behind the relation and method modules.

The compiled module is used when it was built; otherwise the pure-Python
module with identical signatures is selected. ``BACKEND`` names the choice.
"""

from ordo._kernels import _pykernels as python

try:
    from ordo._kernels import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

backend = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

closure = backend.closure
widest_paths = backend.widest_paths
count_extensions = backend.count_extensions
kemeny_table = backend.kemeny_table

__all__ = [
    "BACKEND",
    "closure",
    "compiled",
    "count_extensions",
    "kemeny_table",
    "python",
    "widest_paths",
]
