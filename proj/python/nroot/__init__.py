"""Exact rational approximations to k^(1/n) from powers of the matrix Pi_n."""

from ._nroot import *  # noqa: F401,F403
from ._nroot import __doc__  # noqa: F401
