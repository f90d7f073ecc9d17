"""Entropy of Gaussian packets under time-dependent quadratic Hamiltonians.

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._leipnik import *  # noqa: F401,F403
from ._leipnik import __doc__  # noqa: F401

__version__ = "0.1.0"
