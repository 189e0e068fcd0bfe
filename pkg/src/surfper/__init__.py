"""Minimum periods of homeomorphisms of bordered surfaces."""

from .algebra import LefschetzSequence, NotRealizableError, extend_lefschetz, l_values
from .bounds import INF, best_lower_bound, gamma_upper, static_upper
from .minperiod import MinPeriodResult, m_closed, m_low_genus, min_period
from .types import FiniteOrderType, lefschetz_of_type

__version__ = "0.1.0"
