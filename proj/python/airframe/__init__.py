"""Rearrangement groups of edge-replacement systems."""

from ._airframe import *  # noqa: F401,F403
from ._airframe import Diagram, InputError, InvariantError, PreconditionError  # noqa: F401

__version__ = "0.1.0"
