"""Exact endotriviality computations for unipotent group algebras in positive characteristic."""

from ._core import *  # noqa: F401,F403
from ._core import Error, run_job

__all__ = [n for n in dir() if not n.startswith("_")]
