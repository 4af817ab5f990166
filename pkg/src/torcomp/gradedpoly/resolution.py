"""Minimal graded free resolutions via iterated syzygies.

Each step takes minimal generators first (graded Nakayama: a generator is
redundant iff it lies in the span of the others plus the relations), so the
raw Schreyer output is already minimal: no differential entry is a nonzero
constant. That makes the Betti numbers canonical test targets.
"""

from ..errors import InputError, InternalCheckFailed
from .modules import FreeModuleElement, FgGradedModule
from .groebner import (groebner_basis, normal_form, syzygies,
                       submodule_membership, express_in_terms)


def minimal_generators(gens, ring, ncomp, comp_degs=None):
    """Subset of gens generating the same submodule, minimal by Nakayama.

    Processes generators by increasing degree so the kept set is canonical.
    """
    items = [g for g in gens if not g.is_zero()]
    if comp_degs is not None:
        items.sort(key=lambda g: (g.degree(comp_degs), sorted(g.terms.items())))
    kept = []
    for idx, g in enumerate(items):
        others = kept + items[idx + 1:]
        if not submodule_membership(g, others, ring, ncomp, comp_degs):
            kept.append(g)
    return kept


def minimize_presentation(M):
    """Equivalent presentation of M with a minimal generating set."""
    ring = M.ring
    gens_idx = list(range(M.ngens))
    rels = list(M.relations)
    degs = list(M.gen_degs)
    changed = True
    while changed:
        changed = False
        for i in list(gens_idx):
            others = [FreeModuleElement.basis(ring, M.ngens, j)
                      for j in gens_idx if j != i]
            e_i = FreeModuleElement.basis(ring, M.ngens, i)
            carrier = others + rels
            q = express_in_terms(e_i, carrier, ring, M.ngens)
            if q is None:
                continue
            # e_i = sum over kept basis vectors + relation junk: substitute.
            sub = FreeModuleElement.zero(ring, M.ngens)
            for pos, j in enumerate([j for j in gens_idx if j != i]):
                for mono, c in q[pos].items():
                    sub = sub + FreeModuleElement(ring, M.ngens, {(j, mono): c})
            new_rels = []
            for r in rels:
                out = FreeModuleElement.zero(ring, M.ngens)
                for (c0, m), x in r.terms.items():
                    if c0 == i:
                        out = out + sub.mul_mono(m, x)
                    else:
                        out = out + FreeModuleElement(ring, M.ngens, {(c0, m): x})
                if not out.is_zero():
                    new_rels.append(out)
            rels = new_rels
            gens_idx.remove(i)
            changed = True
            break
    # Re-index components.
    remap = {old: new for new, old in enumerate(gens_idx)}
    out_rels = []
    for r in rels:
        rr = FreeModuleElement(ring, len(gens_idx),
                               {(remap[c], m): x for (c, m), x in r.terms.items()
                                if c in remap})
        if not rr.is_zero():
            out_rels.append(rr)
    return FgGradedModule(ring, tuple(degs[i] for i in gens_idx), out_rels)


class FreeResolution:
    """Minimal graded resolution ... -> F_1 -> F_0 -> M -> 0.

    gen_degs[s] are the generator degrees of F_s; diffs[s] (s >= 1) is the list
    of columns of d_s: F_s -> F_{s-1}, each a FreeModuleElement of F_{s-1}.
    """

    def __init__(self, ring, module, gen_degs, diffs):
        self.ring = ring
        self.module = module
        self.gen_degs = gen_degs
        self.diffs = diffs
        self._validate()

    def _validate(self):
        # d . d = 0, exactly.
        for s in range(2, len(self.gen_degs)):
            dn, dprev = self.diffs[s - 1], self.diffs[s - 2]
            ncomp_prev2 = len(self.gen_degs[s - 2])
            for col in dn:
                acc = FreeModuleElement.zero(self.ring, ncomp_prev2)
                for (c, m), x in col.terms.items():
                    acc = acc + dprev[c].mul_mono(m, x)
                if not acc.is_zero():
                    raise InternalCheckFailed("resolution differentials do not compose to zero")
        # Minimality: no constant entries.
        for s in range(1, len(self.gen_degs)):
            for col in self.diffs[s - 1]:
                for (c, m), x in col.terms.items():
                    if all(e == 0 for e in m):
                        raise InternalCheckFailed("non-minimal resolution: unit entry")

    @property
    def length(self):
        return len(self.gen_degs) - 1

    def betti_numbers(self):
        return [len(d) for d in self.gen_degs]

    def betti_table(self):
        """{(s, internal degree): count of generators}."""
        out = {}
        for s, degs in enumerate(self.gen_degs):
            for d in degs:
                out[(s, d)] = out.get((s, d), 0) + 1
        return out

    def __repr__(self):
        return f"FreeResolution(betti={self.betti_numbers()})"


def free_resolution(M, length=None):
    """Minimal free resolution of M, up to `length` steps or until it stops.

    H_0 is the presented module by construction (F_0 = a minimal generating
    set, d_1 = minimal generators of the relation submodule); exactness at
    every later step holds because each d_{s+1} generates ker(d_s) (syzygies).
    """
    ring = M.ring
    Mmin = minimize_presentation(M)
    if length is None:
        length = ring.nvars + 1
    gen_degs = [Mmin.gen_degs]
    diffs = []
    current_carrier = minimal_generators(list(Mmin.relations), ring,
                                         Mmin.ngens, Mmin.gen_degs)
    prev_degs = Mmin.gen_degs
    step = 0
    while step < length and current_carrier:
        col_degs = tuple(c.degree(prev_degs) for c in current_carrier)
        gen_degs.append(col_degs)
        diffs.append(list(current_carrier))
        step += 1
        if step >= length:
            break
        syz = syzygies(current_carrier, ring, len(prev_degs))
        current_carrier = minimal_generators(syz, ring, len(current_carrier), col_degs)
        prev_degs = col_degs
    return FreeResolution(ring, Mmin, gen_degs, diffs)
