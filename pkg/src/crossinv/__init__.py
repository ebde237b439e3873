"""Crossed-product rings with twisted involutions and the categories built on them.

Everything is exact arithmetic over finite carriers.  Each ``verify_*``
function returns a :class:`Report` of named checks with witnesses.
"""

from .algebra import (FiniteGroup, FiniteRing, RingAutomorphism, RingInvolution, SignHom, cyclic, dihedral,
                      direct_product, make_poly_quotient, make_zmod)
from .config import ConfigError, InstanceConfig, build_config, load_config
from .crossed import CrossedElement, CrossedProduct
from .report import CheckRecord, Report
from .twist import TwistData, admissible_w, twist_from_extension, validate_involution_twist, validate_twist

__all__ = [
    "CheckRecord", "ConfigError", "CrossedElement", "CrossedProduct", "FiniteGroup", "FiniteRing",
    "InstanceConfig", "Report", "RingAutomorphism", "RingInvolution", "SignHom", "TwistData", "admissible_w",
    "build_config", "cyclic", "dihedral", "direct_product", "load_config", "make_poly_quotient", "make_zmod",
    "twist_from_extension", "validate_involution_twist", "validate_twist",
]
__version__ = "0.1.0"
