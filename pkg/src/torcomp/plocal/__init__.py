"""The p-local module calculus over A = Z_(p) with I = (p).

The closed symbolic class has six atom kinds:

    FreeLocal     Z_(p)        "free"
    Rationals     Q            "q"
    Cyclic(k)     Z/p^k        "cyc"
    Prufer        Z/p^infty    "prufer"
    CompleteFree  Z_p          "zhat"
    PadicRationals Q_p         "qp"

All binary operations (tensor, hom, ext1, tor1) are table lookups; the tables
are generated at import time by the derivation engine in `derive` from the two
canonical short exact sequences

    0 -> Z_(p) --p^k--> Z_(p) -> Z/p^k  -> 0
    0 -> Z_(p) ------->   Q   -> Z/p^oo -> 0

plus Milnor lim/lim^1 sequences and structural multiplication-by-p^k facts.
Each table entry carries a human-readable derivation log.
"""

from .atoms import (
    SymbolicPModule, Atom,
    FREE, Q, CYC, PRUFER, ZHAT, QP,
)
from .ops import (
    tensor, hom, ext1, tor1,
    adic_completion, derived_completion, torsion, widehat_tensor,
    is_L_complete, fracture_square_check, grothendieck_pointcheck,
    gamma_data, localization,
)
from .derive import derivation_log, table_value

__all__ = [
    "SymbolicPModule", "Atom", "FREE", "Q", "CYC", "PRUFER", "ZHAT", "QP",
    "tensor", "hom", "ext1", "tor1",
    "adic_completion", "derived_completion", "torsion", "widehat_tensor",
    "is_L_complete", "fracture_square_check", "grothendieck_pointcheck",
    "gamma_data", "localization",
    "derivation_log", "table_value",
]
