"""Quantum wall with Robin, Dirichlet or Neumann boundary in a uniform field."""

from ._robinwall import *  # noqa: F401,F403
from ._robinwall import Boundary, energy, build_state, info_record

__version__ = "1.0.0"


def measures(bc, n, field):
    """InfoRecord of level n, building the state on the way."""
    if isinstance(bc, str):
        bc = parse_boundary(bc)  # noqa: F405
    return info_record(build_state(energy(bc, n, field)))
