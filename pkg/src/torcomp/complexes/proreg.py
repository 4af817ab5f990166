"""Weak proregularity detection.

A sequence is weakly proregular when, for every k, some transition
Kos_m -> Kos_k kills all positive-degree Koszul homology. The inverse system
is realized by applying Hom(-, A) to the colimit transitions (so all maps are
homogeneous on the graded backend); dual-complex homology at spot i equals
classical Koszul homology H_i, with H_0 = A/I^{[s]} excluded (i ranges over
1..n). Absence of a witness below the search bound is reported, not raised.
"""

from ..gradedpoly.modules import FgGradedModule
from .koszul import (koszul, hom_complex, hom_complex_abelian,
                     koszul_dual_transition, koszul_dual_transition_abelian)
from .zmodules import ZModule


def weak_proregularity_check(ring, sequence, k_max, m_bound=None):
    """Report {(k, i): m witness} for k <= k_max, i in 1..n.

    ring: RingDescriptor or "Z". m witness = least m >= k with
    H_i(Kos_m -> Kos_k) = 0; equal to k when H_i at stage k already vanishes
    (the vacuous case, noted). Entries are None when no witness exists below
    m_bound (default 3*k_max + 2).
    """
    abelian = (ring == "Z")
    n = len(sequence)
    m_bound = m_bound if m_bound is not None else 3 * k_max + 2
    unit_target = ZModule.free(1) if abelian else FgGradedModule.ring_module(ring)

    kos_cache = {}

    def kos(s):
        if s not in kos_cache:
            kos_cache[s] = koszul(ring, sequence, s)
        return kos_cache[s]

    def dual(s):
        if abelian:
            return hom_complex_abelian(kos(s), unit_target)
        return hom_complex(kos(s), unit_target)

    results = []
    all_found = True
    for k in range(1, k_max + 1):
        dk = dual(k)
        for i in range(1, n + 1):
            if abelian:
                target_zero = dk.homology_decomposition(i) == (0, [])
            else:
                target_zero = dk.homology_is_zero(i)
            if target_zero:
                results.append({"k": k, "i": i, "m": k,
                                "note": "H_i already vanishes at stage k"})
                continue
            found = None
            for m in range(k + 1, m_bound + 1):
                if abelian:
                    cm = koszul_dual_transition_abelian(kos(m), kos(k), unit_target)
                else:
                    cm = koszul_dual_transition(kos(m), kos(k), unit_target)
                if cm.induced_zero_on_homology(i):
                    found = m
                    break
            if found is None:
                all_found = False
                results.append({"k": k, "i": i, "m": None,
                                "note": f"no zero transition found with m <= {m_bound}"})
            else:
                results.append({"k": k, "i": i, "m": found,
                                "note": "transition is zero on H_i"})
    return {
        "backend": "abelian" if abelian else "graded",
        "sequence": [str(x) for x in sequence],
        "k_max": k_max,
        "m_bound": m_bound,
        "results": results,
        "weakly_proregular_on_range": all_found,
    }
