"""Buchberger's algorithm for submodules of graded free modules, with syzygies.

All inputs are homogeneous. The workhorse is `groebner_basis`; `syzygies`
computes first syzygies by running Buchberger on tagged elements (graph of the
generators) under an elimination order: tagged components are smaller than all
main components, so basis elements with vanishing main part are exactly a
generating set of the syzygy module (Schreyer/elimination, cf. Eisenbud
Ch. 15). Reduced bases make every routine deterministic.
"""

from ..errors import InputError
from .modules import FreeModuleElement


def _reduce_once(f, basis, split):
    """One division step: cancel the leading term of f by some basis element.

    Returns (g, i, mono, coeff) where f = g + coeff * mono * basis[i], or None
    if no leading term divides.
    """
    lf = f.lead(split)
    if lf is None:
        return None
    (cf, mf), coef_f = lf
    ring = f.ring
    for i, b in enumerate(basis):
        lb = b.lead(split)
        (cb, mb), coef_b = lb
        if cb == cf and ring.mono_divides(mb, mf):
            q = ring.mono_div(mf, mb)
            c = ring.field.div(coef_f, coef_b)
            g = f - b.mul_mono(q, c)
            return g, i, q, c
    return None


def normal_form(f, basis, split=None, quotients=None):
    """Full normal form of f against basis (tail-reduction included).

    If `quotients` is a list of length len(basis), the division coefficients
    are accumulated there as polynomials-as-elements: f = sum q_i b_i + NF.
    """
    if split is None:
        split = f.ncomp
    ring = f.ring
    remainder = FreeModuleElement.zero(ring, f.ncomp)
    work = f
    while not work.is_zero():
        step = _reduce_once(work, basis, split)
        if step is None:
            # move the (irreducible) lead of work to the remainder
            (comp, mono), coeff = work.lead(split)
            t = FreeModuleElement(ring, f.ncomp, {(comp, mono): coeff})
            remainder = remainder + t
            work = work - t
        else:
            work, i, q, c = step
            if quotients is not None:
                F = ring.field
                cur = quotients[i]
                s = F.add(cur.get(q, F.zero()), c)
                if F.is_zero(s):
                    cur.pop(q, None)
                else:
                    cur[q] = s
    return remainder


def _spair(f, g, split):
    ring = f.ring
    (cf, mf), af = f.lead(split)
    (cg, mg), ag = g.lead(split)
    if cf != cg:
        return None
    lcm = ring.mono_lcm(mf, mg)
    uf = ring.mono_div(lcm, mf)
    ug = ring.mono_div(lcm, mg)
    one = ring.field.one()
    return f.mul_mono(uf, ring.field.div(one, af)) - g.mul_mono(ug, ring.field.div(one, ag))


def groebner_basis(gens, ring, ncomp, comp_degs=None, split=None):
    """Reduced Groebner basis of the submodule generated by gens.

    comp_degs (when given) asserts homogeneity. The result is auto-reduced,
    monic, and sorted for determinism.
    """
    if split is None:
        split = ncomp
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        if comp_degs is not None:
            g.degree(comp_degs)
        basis.append(g)
    # Seed: normalize
    basis = [b for b in basis if not b.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        s = _spair(basis[i], basis[j], split)
        if s is None:
            continue
        r = normal_form(s, basis, split)
        if not r.is_zero():
            basis.append(r)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # Minimalize: drop elements whose lead is divisible by another lead.
    leads = [b.lead(split)[0] for b in basis]
    keep = []
    for i in range(len(basis)):
        (ci, mi) = leads[i]
        dominated = False
        for j in range(len(basis)):
            if i == j:
                continue
            (cj, mj) = leads[j]
            if cj == ci and ring.mono_divides(mj, mi):
                if ring.mono_divides(mi, mj) and i < j:
                    continue  # equal leads: keep the first
                dominated = True
                break
        if not dominated:
            keep.append(i)
    basis = [basis[i] for i in keep]
    # Tail-reduce each against the others and make monic.
    reduced = []
    for i, b in enumerate(basis):
        others = [basis[j] for j in range(len(basis)) if j != i]
        r = normal_form(b, others, split) if others else b
        if not r.is_zero():
            (_, _), lc = r.lead(split)
            reduced.append(r.scale(ring.field.div(ring.field.one(), lc)))
    reduced.sort(key=lambda e: (e.key(split)(e.lead(split)[0]),
                                sorted(e.terms.items())), reverse=True)
    return reduced


def submodule_membership(elem, gens, ring, ncomp, comp_degs=None):
    """Is elem in the submodule generated by gens? (exact, via GB)."""
    if elem.is_zero():
        return True
    gb = groebner_basis(list(gens), ring, ncomp, comp_degs)
    return normal_form(elem, gb, ncomp).is_zero() if gb else False


def express_in_terms(elem, gens, ring, ncomp, comp_degs=None):
    """Coefficients q_i (as Poly dicts) with elem = sum q_i gens[i], or None.

    Works by dividing against the tagged graph of gens under the elimination
    order, so the certificate is exact.
    """
    m = len(gens)
    big = ncomp + m
    tagged = []
    for j, g in enumerate(gens):
        t = g.extend(big)
        t = t + FreeModuleElement(ring, big, {(ncomp + j, ring.one_mono()): ring.field.one()})
        tagged.append(t)
    gb = groebner_basis(tagged, ring, big, None, split=ncomp)
    target = elem.extend(big)
    r = normal_form(target, gb, split=ncomp)
    if any(c < ncomp for (c, _m) in r.terms):
        return None
    # elem - sum(used) = r has zero main part: elem = -(tag part of r) . gens
    quotients = []
    for j in range(m):
        q = {}
        for (c, mono), x in r.terms.items():
            if c == ncomp + j:
                q[mono] = ring.field.neg(x)
        quotients.append(q)
    return quotients


def syzygies(gens, ring, ncomp, comp_degs=None):
    """Generators of the first syzygy module of `gens` (inside A^len(gens)).

    Tags are graded by deg(gens[i]), so the syzygies are homogeneous. Returns
    FreeModuleElements with ncomp = len(gens).
    """
    m = len(gens)
    if m == 0:
        return []
    big = ncomp + m
    tagged = []
    for j, g in enumerate(gens):
        t = g.extend(big)
        t = t + FreeModuleElement(ring, big, {(ncomp + j, ring.one_mono()): ring.field.one()})
        tagged.append(t)
    gb = groebner_basis(tagged, ring, big, None, split=ncomp)
    syz = []
    for b in gb:
        if all(c >= ncomp for (c, _m) in b.terms):
            syz.append(b.restrict_components(ncomp, big))
    return syz


def kernel_of_map(phi):
    """Kernel of a graded map phi: M -> N of f.p. modules, as an FgGradedModule
    together with its generator lifts in M's ambient free module.

    Returns (K, lifts): K presented on the kernel generators; lifts[i] is the
    element of F_M mapping to the i-th generator.
    """
    from .modules import FgGradedModule
    M, N = phi.source, phi.target
    ring = M.ring
    # Preimage of span(R_N): syzygies of [phi(e_i) | R_N], first block.
    carrier = [phi.apply_free(FreeModuleElement.basis(ring, M.ngens, i))
               for i in range(M.ngens)]
    combined = carrier + list(N.relations)
    syz = syzygies(combined, ring, N.ngens)
    lifts = []
    for s in syz:
        u = s.restrict_components(0, M.ngens)
        if not u.is_zero():
            lifts.append(u)
    # Discard lifts already inside span(R_M) (zero in M) and minimalize.
    kept = []
    for u in lifts:
        if not submodule_membership(u, list(M.relations) + kept, ring,
                                    M.ngens, M.gen_degs):
            kept.append(u)
    if not kept:
        return FgGradedModule(ring, ()), []
    gen_degs = tuple(u.degree(M.gen_degs) for u in kept)
    # Relations among the kernel generators: syzygies of [kept | R_M], first block.
    combined2 = kept + list(M.relations)
    syz2 = syzygies(combined2, ring, M.ngens)
    rels = []
    for s in syz2:
        v = s.restrict_components(0, len(kept))
        if not v.is_zero():
            rels.append(v)
    return FgGradedModule(ring, gen_degs, rels), kept
