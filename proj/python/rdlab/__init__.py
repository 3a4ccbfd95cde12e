"""Exact reduced dynamics of bipartite quantum systems.

Thin Python layer over the C++ core. Matrices are complex NumPy arrays; the
first tensor factor is always subsystem A.
"""

from ._rdlab import *  # noqa: F401,F403
from ._rdlab import __doc__  # noqa: F401

__version__ = "0.1.0"
