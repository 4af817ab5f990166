"""Theorem verifiers. Every verifier computes two independently implemented
routes and reports per-instance pass/fail; a verifier that echoes one side is
a build failure by policy, so each report carries route tags."""

from .conventions import twist_convention_record
from .gm import verify_gm_ses_graded, verify_gm_ses_plocal
from .grothendieck import verify_grothendieck_graded
from .pointwise import verify_adjunction_pointwise, verify_idempotence

__all__ = [
    "twist_convention_record",
    "verify_gm_ses_graded", "verify_gm_ses_plocal",
    "verify_grothendieck_graded",
    "verify_adjunction_pointwise", "verify_idempotence",
]
