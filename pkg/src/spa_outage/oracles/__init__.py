"""Reference outage values: Gil-Pelaez inversion and Monte Carlo simulation."""

from .inversion import InversionResult, InversionSettings, gil_pelaez_ccdf
from .montecarlo import (
    McResult,
    McSettings,
    block_generator,
    mc_outage,
    mc_outage_compound,
    mc_outage_link,
    mc_outage_ppp_comp,
    run_blocks,
)

__all__ = [
    "InversionResult",
    "InversionSettings",
    "McResult",
    "McSettings",
    "block_generator",
    "gil_pelaez_ccdf",
    "mc_outage",
    "mc_outage_compound",
    "mc_outage_link",
    "mc_outage_ppp_comp",
    "run_blocks",
]
