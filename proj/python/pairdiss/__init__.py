"""Collective dissipation of a qubit pair: steady states, dynamics, sweeps."""

from ._core import *  # noqa: F401,F403
from ._core import PairdissError, __version__  # noqa: F401
