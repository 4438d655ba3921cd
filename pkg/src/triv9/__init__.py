"""Exact classification toolkit for trivectors of R^9/C^9 under SL(9).

The toolkit realizes wedge^3 k^9 as the degree-1 part of a Z3-graded
248-dimensional Lie algebra, with exact arithmetic in Q(zeta12) throughout:
homogeneous Jordan decomposition, sl2-triples, characteristics, the Cartan
subspace with its little Weyl group of order 155520, real Galois cohomology
(H^1 and H^2), and a verification harness for the full orbit catalog.
"""

from .scalar import Cyc, parse_scalar, format_scalar
from .trivector import Trivector, parse_trivector, format_trivector, wedge_action, inf_action, rank
from .e8 import build, bracket, g1_iso, g1_iso_inv, psi, psi_inv
from .classify import classify, jordan_decompose, sl2_triple, characteristic, is_nilpotent, is_semisimple

__all__ = [
    "Cyc", "parse_scalar", "format_scalar",
    "Trivector", "parse_trivector", "format_trivector",
    "wedge_action", "inf_action", "rank",
    "build", "bracket", "g1_iso", "g1_iso_inv", "psi", "psi_inv",
    "classify", "jordan_decompose", "sl2_triple", "characteristic",
    "is_nilpotent", "is_semisimple",
]
