"""
spa-outage: SINR outage probabilities of cellular network models by saddle point
approximation, with Gil-Pelaez and Monte Carlo references.
"""

__version__ = "1.0.0"

from .errors import SpaOutageError
from .scenario import Scenario
from .spa import BaseKind, OutageResult, SpaResult, outage, spa_cdf

__all__ = [
    "BaseKind",
    "OutageResult",
    "Scenario",
    "SpaOutageError",
    "SpaResult",
    "__version__",
    "outage",
    "spa_cdf",
]
