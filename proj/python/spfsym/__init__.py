"""Orbits, regularity and symmetry groups of social preference functions."""

from ._spfsym import *  # noqa: F401,F403
from ._spfsym import __doc__  # noqa: F401
