"""Exact finite stochastic effectivity functions.

Thin re-export of the native module; rationals cross the boundary as
canonical "p/q" strings.
"""

from seff._core import *  # noqa: F401,F403
from seff._core import __doc__  # noqa: F401
