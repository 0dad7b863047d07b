"""Modular equations, q-series identities and singular values for the order-10 continued fractions."""

from .cfrac10 import IDENTITIES, NAMES, cf_convergent, named_qexp, verify_identity
from .modeq import (BivarPoly, DerivationError, derive_G, derive_U, pole_degrees,
                    structure_checks, verify_modeq)
from .modforms import Cusp, EtaQuotientSpec, GenEtaQuotientSpec, cusp_set, order_table
from .qseries import FracSeries

__version__ = "0.1.0"

__all__ = [
    "BivarPoly", "Cusp", "DerivationError", "EtaQuotientSpec", "FracSeries", "GenEtaQuotientSpec",
    "IDENTITIES", "NAMES", "cf_convergent", "cusp_set", "derive_G", "derive_U", "named_qexp",
    "order_table", "pole_degrees", "structure_checks", "verify_identity", "verify_modeq",
]
