"""Hilbert functions, degreewise linear algebra, graded Ext and Tor.

Two complementary interfaces:

* f.p.-module outputs (`ext_modules`, `tor_modules`): genuine graded
  subquotients built through the Groebner kernel machinery;
* dimension tables (`*_dimension_tables`, `hilbert_function`): exact
  degreewise linear algebra over the base field, the comparison currency of
  the verifiers.
"""

from ..errors import InputError
from ..exactnum import Matrix, rank_and_kernel
from .modules import FreeModuleElement, FgGradedModule, ModuleMap
from .groebner import normal_form, kernel_of_map, express_in_terms
from .resolution import free_resolution


# ---------------------------------------------------------------------------
# Monomial bases per degree
# ---------------------------------------------------------------------------

_mono_cache = {}


def monomials_of_degree(ring, d):
    """All monomials of weighted degree exactly d (d < 0 gives []); memoized."""
    key = (ring, d)
    if key in _mono_cache:
        return _mono_cache[key]
    out = []

    def rec(i, remaining, acc):
        if i == ring.nvars - 1:
            w = ring.weights[i]
            if remaining % w == 0:
                out.append(tuple(acc + [remaining // w]))
            return
        w = ring.weights[i]
        e = 0
        while e * w <= remaining:
            rec(i + 1, remaining - e * w, acc + [e])
            e += 1
    if d >= 0:
        rec(0, d, [])
    _mono_cache[key] = out
    return out


def standard_basis_in_degree(M, d):
    """Standard module monomials of M in internal degree d (Macaulay basis)."""
    if d in M._basis_cache:
        return M._basis_cache[d]
    gb = M.rel_gb()
    leads = [g.lead()[0] for g in gb]
    basis = []
    for c, gdeg in enumerate(M.gen_degs):
        for mono in monomials_of_degree(M.ring, d - gdeg):
            reducible = any(lc == c and M.ring.mono_divides(lm, mono)
                            for (lc, lm) in leads)
            if not reducible:
                basis.append((c, mono))
    basis.sort(key=lambda cm: (cm[0], M.ring.mono_cmp_key(cm[1])))
    M._basis_cache[d] = basis
    return basis


def hilbert_function(M, window):
    """dim_k M_d for d in the window (an iterable of degrees)."""
    return {d: len(standard_basis_in_degree(M, d)) for d in window}


def element_vector(M, elem, d, basis=None):
    """Coordinates of an element (of M's ambient free module) in M_d."""
    basis = standard_basis_in_degree(M, d) if basis is None else basis
    index = {cm: i for i, cm in enumerate(basis)}
    nf = normal_form(elem, M.rel_gb()) if M.relations else elem
    F = M.ring.field
    vec = [F.zero()] * len(basis)
    for cm, x in nf.terms.items():
        if cm not in index:
            raise InputError(f"element has a term {cm} outside degree-{d} basis")
        vec[index[cm]] = x
    return vec


def map_matrix_in_degree(phi, d):
    """Matrix of phi: M_d -> N_{d+twist} in the standard bases (memoized)."""
    if d in phi._mat_cache:
        return phi._mat_cache[d]
    M, N = phi.source, phi.target
    src = standard_basis_in_degree(M, d)
    dst = standard_basis_in_degree(N, d + phi.twist)
    cols = []
    for (c, mono) in src:
        img = phi.images[c].mul_mono(mono)
        cols.append(element_vector(N, img, d + phi.twist, dst))
    out = (Matrix.from_columns(M.ring.field, cols, len(dst)), len(src), len(dst))
    phi._mat_cache[d] = out
    return out


def complex_homology_dimension(phi_in, phi_out, d):
    """dim of ker(phi_out)/im(phi_in) in internal degree d.

    phi_in: L -> M (may be None), phi_out: M -> N (may be None); both graded
    with twist 0, homology taken at M in degree d.
    """
    from ..exactnum.linalg import rank_only
    if phi_out is not None:
        mat_out, nsrc, _ = map_matrix_in_degree(phi_out, d)
        dim_ker = nsrc - (rank_only(mat_out) if nsrc else 0)
    else:
        M = phi_in.target
        dim_ker = len(standard_basis_in_degree(M, d))
    if phi_in is not None:
        mat_in, _, _ = map_matrix_in_degree(phi_in, d)
        rank_in = rank_only(mat_in) if mat_in.cols else 0
    else:
        rank_in = 0
    return dim_ker - rank_in


# ---------------------------------------------------------------------------
# Hom / tensor of a free module into an f.p. module, as f.p. modules
# ---------------------------------------------------------------------------

def _block_module(N, twists):
    """(+)_i N(t_i) as an f.p. module; block i has generator degrees
    degN_j - t_i and a copy of N's relations."""
    ring = N.ring
    gens = []
    for t in twists:
        gens.extend(d - t for d in N.gen_degs)
    rels = []
    for b, t in enumerate(twists):
        off = b * N.ngens
        for r in N.relations:
            rels.append(r.extend(len(gens), offset=off))
    return FgGradedModule(ring, gens, rels)


def _hom_complex(resolution, N, smax):
    """Maps delta_s: Hom(F_s, N) -> Hom(F_{s+1}, N) for s = 0..smax-1,
    plus the list of Hom(F_s, N) modules for s = 0..smax."""
    ring = N.ring
    steps = min(smax, resolution.length)
    mods = []
    for s in range(steps + 1):
        mods.append(_block_module(N, [d for d in resolution.gen_degs[s]]))
    maps = []
    for s in range(steps):
        src, dst = mods[s], mods[s + 1]
        r_s = len(resolution.gen_degs[s])
        r_s1 = len(resolution.gen_degs[s + 1])
        images = []
        for i in range(r_s):
            for j in range(N.ngens):
                img = FreeModuleElement.zero(ring, dst.ngens)
                for k in range(r_s1):
                    entry = resolution.diffs[s][k].component(i)
                    if entry.is_zero():
                        continue
                    base = FreeModuleElement(ring, dst.ngens,
                                             {(k * N.ngens + j, ring.one_mono()):
                                              ring.field.one()})
                    img = img + base.mul_poly(entry)
                images.append(img)
        maps.append(ModuleMap(src, dst, images, twist=0, check=False))
    return mods, maps


def _tensor_complex(resolution, N, smax):
    """Maps d_s: F_s (x) N -> F_{s-1} (x) N for s = 1..smax, plus the terms."""
    ring = N.ring
    steps = min(smax, resolution.length)
    mods = []
    for s in range(steps + 1):
        mods.append(_block_module(N, [-d for d in resolution.gen_degs[s]]))
    maps = []
    for s in range(1, steps + 1):
        src, dst = mods[s], mods[s - 1]
        r_s = len(resolution.gen_degs[s])
        images = []
        for k in range(r_s):
            for j in range(N.ngens):
                img = FreeModuleElement.zero(ring, dst.ngens)
                col = resolution.diffs[s - 1][k]
                for i in range(len(resolution.gen_degs[s - 1])):
                    entry = col.component(i)
                    if entry.is_zero():
                        continue
                    base = FreeModuleElement(ring, dst.ngens,
                                             {(i * N.ngens + j, ring.one_mono()):
                                              ring.field.one()})
                    img = img + base.mul_poly(entry)
                images.append(img)
        maps.append(ModuleMap(src, dst, images, twist=0, check=False))
    return mods, maps


def homology_module(phi_in, phi_out):
    """ker(phi_out)/im(phi_in) as an FgGradedModule (either map may be None)."""
    if phi_out is None and phi_in is None:
        raise InputError("need at least one map")
    ring = (phi_out or phi_in).source.ring if phi_out else phi_in.target.ring
    if phi_out is not None:
        K, lifts = kernel_of_map(phi_out)
        M = phi_out.source
    else:
        M = phi_in.target
        K = FgGradedModule(ring, M.gen_degs, list(M.relations))
        lifts = [FreeModuleElement.basis(ring, M.ngens, i) for i in range(M.ngens)]
    if phi_in is None or K.ngens == 0:
        return K
    extra = []
    for i in range(phi_in.source.ngens):
        w = phi_in.images[i]
        carrier = lifts + list(M.relations)
        q = express_in_terms(w, carrier, ring, M.ngens)
        if q is None:
            raise InputError("image of the incoming map is not in the kernel")
        rel = FreeModuleElement(ring, K.ngens,
                                {(j, mono): c for j in range(len(lifts))
                                 for mono, c in q[j].items()})
        if not rel.is_zero():
            extra.append(rel)
    return FgGradedModule(ring, K.gen_degs, list(K.relations) + extra)


def ext_modules(M, N, smax, resolution=None):
    """[Ext^0(M,N), ..., Ext^smax(M,N)] as graded f.p. modules."""
    res = resolution or free_resolution(M)
    mods, maps = _hom_complex(res, N, smax)
    out = []
    for s in range(smax + 1):
        if s >= len(mods):
            out.append(FgGradedModule(N.ring, ()))  # beyond resolution length
            continue
        phi_out = maps[s] if s < len(maps) else None
        phi_in = maps[s - 1] if 0 <= s - 1 < len(maps) else None
        if phi_out is None and phi_in is None:
            out.append(mods[s])
        else:
            out.append(homology_module(phi_in, phi_out))
    return out


def tor_modules(M, N, smax, resolution=None):
    """[Tor_0(M,N), ..., Tor_smax(M,N)] as graded f.p. modules."""
    res = resolution or free_resolution(M)
    mods, maps = _tensor_complex(res, N, smax)
    out = []
    for s in range(smax + 1):
        if s >= len(mods):
            out.append(FgGradedModule(N.ring, ()))
            continue
        phi_out = maps[s - 1] if 1 <= s <= len(maps) else None   # d_s: T_s -> T_{s-1}
        phi_in = maps[s] if s < len(maps) else None              # d_{s+1}
        if phi_out is None and phi_in is None:
            out.append(mods[s])
        else:
            out.append(homology_module(phi_in, phi_out))
    return out


def ext_dimension_tables(M, N, smax, window, resolution=None):
    """{s: {d: dim Ext^s(M,N)_d}} by degreewise linear algebra (no subquotients)."""
    res = resolution or free_resolution(M)
    mods, maps = _hom_complex(res, N, smax)
    tables = {}
    for s in range(smax + 1):
        row = {}
        for d in window:
            if s >= len(mods):
                row[d] = 0
                continue
            phi_out = maps[s] if s < len(maps) else None
            phi_in = maps[s - 1] if 0 <= s - 1 < len(maps) else None
            if phi_out is None and phi_in is None:
                row[d] = len(standard_basis_in_degree(mods[s], d))
            elif phi_out is None:
                row[d] = complex_homology_dimension(phi_in, None, d)
            else:
                row[d] = complex_homology_dimension(phi_in, phi_out, d)
        tables[s] = row
    return tables


def tor_dimension_tables(M, N, smax, window, resolution=None):
    """{s: {d: dim Tor_s(M,N)_d}} by degreewise linear algebra."""
    res = resolution or free_resolution(M)
    mods, maps = _tensor_complex(res, N, smax)
    tables = {}
    for s in range(smax + 1):
        row = {}
        for d in window:
            if s >= len(mods):
                row[d] = 0
                continue
            phi_out = maps[s - 1] if 1 <= s <= len(maps) else None
            phi_in = maps[s] if s < len(maps) else None
            if phi_out is None and phi_in is None:
                row[d] = len(standard_basis_in_degree(mods[s], d))
            else:
                row[d] = complex_homology_dimension(phi_in, phi_out, d)
        tables[s] = row
    return tables
