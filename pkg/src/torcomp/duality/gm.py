"""The Greenlees-May short exact sequence verifier.

Graded route pair: Hom(Kos_s, M)-tower limits (image-stabilization) versus
the lim/lim^1 assembly of the Tor towers (degreewise nilpotence) - two
independent code paths through complexes/ and gradedpoly/ respectively.

p-local route pair: the frozen Hom/Ext tables from the shifted-Prufer
presentation of Gamma(A) versus the symbolic tower calculus.
"""

from ..localcoh.completion import derived_completion_tower, local_homology_hom_route
from ..plocal.ops import gm_ses_report


def verify_gm_ses_graded(M, ideal_gens, window, s_range=None):
    window = list(window)
    ses = derived_completion_tower(M, ideal_gens, window)
    hom_tables, hom_certs = local_homology_hom_route(M, ideal_gens, window)
    n = M.ring.nvars
    s_range = list(s_range) if s_range is not None else list(range(n + 1))
    rows = []
    ok = True
    for s in s_range:
        for d in window:
            lhs = hom_tables.get((s, d), 0)
            rhs = ses["L_tables"].get(s, {}).get(d, 0)
            match = lhs == rhs
            ok = ok and match
            rows.append({"s": s, "d": d, "hom_route": lhs, "ses_route": rhs,
                         "match": match})
    return {
        "module": repr(M),
        "window": [window[0], window[-1]],
        "routes": {
            "hom_route": "lim_s H_s(Hom(Kos_s, M)) with image-stabilization",
            "ses_route": "lim/lim^1 of Tor towers (degreewise nilpotence)",
        },
        "certificates": {"ses": ses["lim_report"],
                         "hom": {f"s={s},d={d}": c
                                 for (s, d), c in sorted(hom_certs.items())}},
        "rows": rows,
        "pass": ok,
    }


def verify_gm_ses_plocal(members):
    """GM SES on p-local class members; both legs must agree exactly."""
    rows = []
    ok = True
    for m in members:
        rep = gm_ses_report(m)
        ok = ok and rep["agree"]
        rows.append(rep)
    return {"backend": "plocal", "rows": rows, "pass": ok}
