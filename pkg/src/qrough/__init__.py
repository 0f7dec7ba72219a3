"""Roughness, Concurrence and complementary quantumness relations for two-qubit states."""

from . import campaign, linalg, measures, overlaps, phasespace, states  # noqa: F401
from .measures import MeasureTuple, concurrence, measure_tuple, r_plus_sq  # noqa: F401
from .states import TwoQubitState, SingleQubitState, bell, validate_density  # noqa: F401

__version__ = "0.1.0"
