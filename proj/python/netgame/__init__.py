"""Spectral moments, Hankel eigenvalue bounds and linear best-response network games."""

from ._netgame import *  # noqa: F401,F403
from ._netgame import __version__, generators  # noqa: F401
