"""Python bindings for the erogers C++ library."""

from ._erogers import *  # noqa: F401,F403
from ._erogers import Graph, Hypergraph, InputError, ParseError, ValidationFault, run_cli

__version__ = "0.1.0"
