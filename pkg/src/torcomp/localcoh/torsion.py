"""The I-power torsion functor, with exact ascending-chain certificates.

One equal step proves stabilization forever: if M[I^k] = M[I^{k+1}] then any
m killed by I^{k+2} has I m inside M[I^{k+1}] = M[I^k], so m itself is killed
by I^{k+1}; induction finishes it. The certificate recorded is that index.
"""

from ..errors import NoStabilization, InputError
from ..exactnum import Matrix, ZZ, kernel_integer, cokernel_decomposition
from ..gradedpoly.modules import FreeModuleElement, FgGradedModule, ModuleMap
from ..gradedpoly.groebner import submodule_membership, kernel_of_map
from ..gradedpoly.homalg import _block_module
from ..gradedpoly.ring import Poly
from ..plocal import torsion as plocal_torsion


def _ideal_power_gens(ring, gens, k):
    """Generators of I^k: all k-fold products of the given generators."""
    from itertools import combinations_with_replacement
    out = []
    for combo in combinations_with_replacement(range(len(gens)), k):
        f = Poly.one(ring)
        for i in combo:
            f = f * gens[i]
        out.append(f)
    return out


def _torsion_submodule(M, ideal_gens, k):
    """(K, lifts): the submodule M[I^k] with its generator lifts in F_M."""
    ring = M.ring
    powers = _ideal_power_gens(ring, ideal_gens, k)
    twists = [f.degree() for f in powers]
    target = _block_module(M, twists)
    images = []
    for g in range(M.ngens):
        img_terms = {}
        img = FreeModuleElement.zero(ring, target.ngens)
        for b, f in enumerate(powers):
            base = FreeModuleElement(ring, target.ngens,
                                     {(b * M.ngens + g, ring.one_mono()):
                                      ring.field.one()})
            img = img + base.mul_poly(f)
        images.append(img)
    phi = ModuleMap(M, target, images, twist=0, check=False)
    return kernel_of_map(phi)


def torsion_graded(M, ideal_gens, k_max=20):
    """T_I(M) for a graded f.p. module; returns (K, index, certificate)."""
    ring = M.ring
    prev = None
    prev_lifts = None
    for k in range(1, k_max + 1):
        K, lifts = _torsion_submodule(M, ideal_gens, k)
        if prev is not None and _same_submodule(M, prev_lifts, lifts):
            return prev, k - 1, {
                "kind": "ascending-chain-equality",
                "index": k - 1,
                "note": "M[I^k] = M[I^(k+1)] implies stabilization forever",
            }
        prev, prev_lifts = K, lifts
    raise NoStabilization(k_max, "torsion chain still growing")


def _same_submodule(M, lifts_a, lifts_b):
    ring = M.ring
    carrier_a = list(lifts_a) + list(M.relations)
    carrier_b = list(lifts_b) + list(M.relations)
    return (all(submodule_membership(u, carrier_a, ring, M.ngens, M.gen_degs)
                for u in lifts_b)
            and all(submodule_membership(u, carrier_b, ring, M.ngens, M.gen_degs)
                    for u in lifts_a))


def torsion_abelian(module, p, k_max=40):
    """p-power torsion of a f.p. abelian group (ZModule); exact.

    Returns (decomposition, index, certificate)."""
    from ..complexes.zmodules import ZModule, ZModuleMap, kernel_lattice
    prev = None
    prev_basis = None
    for k in range(1, k_max + 1):
        scale = Matrix(ZZ, [[(p ** k if i == j else 0) for j in range(module.gens)]
                            for i in range(module.gens)])
        phi = ZModuleMap(module, module, scale, check=False)
        basis = kernel_lattice(phi)
        dec = _subgroup_decomposition(module, basis)
        if prev is not None and dec == prev:
            return prev, k - 1, {
                "kind": "ascending-chain-equality",
                "index": k - 1,
            }
        prev, prev_basis = dec, basis
    raise NoStabilization(k_max)


def _subgroup_decomposition(module, basis_columns):
    """Decomposition of the subgroup spanned by basis_columns inside module."""
    if not basis_columns:
        return (0, [])
    from ..exactnum import solve_integer
    B = Matrix.from_columns(ZZ, [list(c) for c in basis_columns], module.gens)
    rel_coords = []
    # Relations of the subgroup: preimages of the ambient relations, i.e.
    # {x : B x in span(rels)}.
    if module.rels.cols:
        stacked = B.hstack(-module.rels)
        for v in kernel_integer(stacked):
            rel_coords.append(list(v[:len(basis_columns)]))
    else:
        for v in kernel_integer(B):
            rel_coords.append(list(v))
    if rel_coords:
        C = Matrix.from_columns(ZZ, rel_coords, len(basis_columns))
        return cokernel_decomposition(C)
    return (len(basis_columns), [])


def torsion_plocal(member):
    """Symbolic route: Prufer and Cyclic atoms survive."""
    return plocal_torsion(member)
