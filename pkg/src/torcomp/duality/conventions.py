"""Twist and shift conventions, fixed once by the M = A base case.

Grothendieck duality over A = k[x_1..x_n] with the graded dual as dualizing
object pairs dim H^k_m(M)_e with dim Ext^{n-k}(M, A(-sigma))_{-e + offset},
sigma the sum of the variable weights. The offset is not trusted from any
formula: it is measured on the base case H^n_m(A) vs Ext^0(A, A(-sigma)) and
recorded; every other check consumes this record.
"""

from ..errors import InternalCheckFailed
from ..gradedpoly.modules import FgGradedModule
from ..gradedpoly.homalg import hilbert_function
from ..localcoh.cohomology import local_cohomology

_cache = {}


def twist_convention_record(ring, probe_radius=4):
    """Measure the duality pairing on M = A and freeze it."""
    key = (ring, probe_radius)
    if key in _cache:
        return _cache[key]
    n = ring.nvars
    sigma = sum(ring.weights)
    window = range(-probe_radius - sigma, probe_radius + 1)
    A = FgGradedModule.ring_module(ring)
    rep = local_cohomology(A, [f"{v}" for v in ring.variables], window)
    hn = rep["tables"][n]
    # Ext^0(A, A(-sigma)) = A(-sigma): Hilbert table directly.
    dual = FgGradedModule.ring_module(ring, twist=sigma)
    hf = hilbert_function(dual, range(-probe_radius, probe_radius + sigma + 1))
    offset = None
    for cand in range(-2 * sigma, 2 * sigma + 1):
        ok = True
        for e in window:
            f = -e + cand
            if f not in hf:
                continue
            if hn[e] != hf[f]:
                ok = False
                break
        if ok:
            offset = cand
            break
    if offset is None:
        raise InternalCheckFailed("no duality offset matches the base case")
    record = {
        "ring": repr(ring),
        "sigma": sigma,
        "pairing": "dim H^k_m(M)_e == dim Ext^{n-k}(M, A(-sigma))_{-e+offset}",
        "offset": offset,
        "fixed_by": "base case M = A at k = n against Ext^0(A, A(-sigma))",
    }
    _cache[key] = record
    return record
