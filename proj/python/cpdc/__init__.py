"""Counterpropagating-SPDC toolkit: python surface over the C++ core."""

from _cpdc import *  # noqa: F401,F403
from _cpdc import __version__  # noqa: F401
