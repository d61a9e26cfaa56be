"""Exact Betti tables and homological invariants of monomial ideals,
with a verification harness for powers of mixed sums P = I + J.
"""

from .betti import (BettiTable, InvariantRecord, MultigradedBettiTable, betti_table, invariants,
                    koszul_betti, module_invariants, quotient_betti, splitting_check)
from .calculus import (integral_closure, is_star_strongly_golod, partial_star, symbolic_power,
                       symbolic_power_colon)
from .caps import CAPS, set_caps
from .certificates import LcmMapCertificate, lcm_map, verify_lcm_property
from .errors import CapExceeded, MixedSumError, ParseError, PreconditionError, RingMismatch
from .formulas import (THEOREM_IDS, FormulaReport, PowerInvariantTable, power_table,
                       stabilization_detect, verify_theorem)
from .monomial import (MonomialIdeal, PolyRing, colon, ideal_sum, intersect, mixed_embed,
                       mixed_embed_many, parse_ideal, parse_monomial, parse_ring, power, product,
                       saturate)
from .resolution import (FreeComplex, lift_and_classify, linear_part, linearity_defect,
                         minimal_resolution, small_type_check, taylor_complex)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
