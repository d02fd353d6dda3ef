"""Longest paths, longest cycles and their transversals on small graphs."""

from ._core import *  # noqa: F401,F403
from ._core import CapExceeded, Graph, Graph6Error, PreconditionError, UnreachableBranch

__all__ = ["CapExceeded", "Graph", "Graph6Error", "PreconditionError", "UnreachableBranch"]
