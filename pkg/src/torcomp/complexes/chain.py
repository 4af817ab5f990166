"""Bounded chain complexes over the two backends.

Homological indexing throughout; a complex stores terms C_i for i in
[lo, hi] and differentials d_i: C_i -> C_{i-1}. d o d = 0 is checked on
construction. Cohomological degrees are read as H^s = H_{-s} where a
construction (Koszul objects) is normalized in [-n, 0].
"""

from ..errors import InputError, InternalCheckFailed
from ..exactnum import Matrix, ZZ, rank_and_kernel
from ..gradedpoly.modules import FreeModuleElement, FgGradedModule, ModuleMap
from ..gradedpoly.groebner import submodule_membership, kernel_of_map
from ..gradedpoly.homalg import (standard_basis_in_degree,
                                 complex_homology_dimension, homology_module)
from .zmodules import ZModule, ZModuleMap, homology_at


class GradedChainComplex:
    """Terms: FgGradedModule per spot; differentials: ModuleMap with twist 0."""

    backend = "graded"

    def __init__(self, ring, terms, diffs):
        self.ring = ring
        self.terms = dict(terms)
        self.diffs = dict(diffs)
        spots = sorted(self.terms)
        self.lo, self.hi = (spots[0], spots[-1]) if spots else (0, -1)
        for i, d in self.diffs.items():
            if d.source is not self.terms.get(i) and d.source != self.terms.get(i):
                raise InputError(f"differential at {i} has wrong source")
        self._check_dd()

    def _check_dd(self):
        for i in self.diffs:
            if (i - 1) in self.diffs:
                comp = self.diffs[i - 1].compose(self.diffs[i])
                for img in comp.images:
                    tgt = self.terms[i - 2]
                    if not submodule_membership(img, list(tgt.relations),
                                                self.ring, tgt.ngens, tgt.gen_degs):
                        raise InternalCheckFailed("d o d != 0 in graded complex")

    def term(self, i):
        return self.terms.get(i)

    def differential(self, i):
        return self.diffs.get(i)

    def homology_dimension(self, i, d):
        """dim_k H_i(C)_d."""
        if i not in self.terms:
            return 0
        phi_out = self.diffs.get(i)
        phi_in = self.diffs.get(i + 1)
        if phi_out is None and phi_in is None:
            return len(standard_basis_in_degree(self.terms[i], d))
        return complex_homology_dimension(phi_in, phi_out, d)

    def homology_table(self, window):
        """{i: {d: dim}} over the support range."""
        return {i: {d: self.homology_dimension(i, d) for d in window}
                for i in range(self.lo, self.hi + 1)}

    def homology_module(self, i):
        from ..gradedpoly.homalg import homology_module as hmod
        phi_out = self.diffs.get(i)
        phi_in = self.diffs.get(i + 1)
        if phi_out is None and phi_in is None:
            return self.terms[i]
        return hmod(phi_in, phi_out)

    def homology_is_zero(self, i):
        """Exact vanishing test for H_i: every kernel generator lies in
        im(d_{i+1}) + relations."""
        phi_out = self.diffs.get(i)
        M = self.terms[i]
        if phi_out is not None:
            _, lifts = kernel_of_map(phi_out)
        else:
            lifts = [FreeModuleElement.basis(self.ring, M.ngens, j)
                     for j in range(M.ngens)]
        carrier = list(M.relations)
        din = self.diffs.get(i + 1)
        if din is not None:
            carrier += list(din.images)
        for u in lifts:
            if not submodule_membership(u, carrier, self.ring, M.ngens, M.gen_degs):
                return False
        return True

    def euler_characteristic(self, d):
        """Alternating sum of term dimensions = alternating sum of homology
        dimensions, per internal degree."""
        total = 0
        for i in range(self.lo, self.hi + 1):
            total += (-1) ** (i % 2) * len(standard_basis_in_degree(self.terms[i], d))
        return total


class GradedChainMap:
    """Chain map between graded complexes: one ModuleMap per spot."""

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            self._check_squares()

    def _check_squares(self):
        for i, f in self.components.items():
            ds = self.source.diffs.get(i)
            dt = self.target.diffs.get(i)
            if ds is None or dt is None or (i - 1) not in self.components:
                continue
            left = self.components[i - 1].compose(ds)
            right = dt.compose(f)
            tgt = self.target.terms[i - 1]
            for a, b in zip(left.images, right.images):
                diff = a - b
                if not submodule_membership(diff, list(tgt.relations),
                                            self.source.ring, tgt.ngens, tgt.gen_degs):
                    raise InternalCheckFailed("chain map squares do not commute")

    def induced_zero_on_homology(self, i):
        """Is H_i(f) = 0? Exact, via kernel generators and membership."""
        src, tgt = self.source, self.target
        phi_out_s = src.diffs.get(i)
        if phi_out_s is not None:
            K, lifts = kernel_of_map(phi_out_s)
        else:
            M = src.terms[i]
            lifts = [FreeModuleElement.basis(src.ring, M.ngens, j)
                     for j in range(M.ngens)]
        f = self.components[i]
        carrier = list(tgt.terms[i].relations)
        din_t = tgt.diffs.get(i + 1)
        if din_t is not None:
            carrier += list(din_t.images)
        for u in lifts:
            img = f.apply_free(u)
            if not submodule_membership(img, carrier, src.ring,
                                        tgt.terms[i].ngens, tgt.terms[i].gen_degs):
                return False
        return True


class AbelianChainComplex:
    """Terms: ZModule per spot; differentials: ZModuleMap."""

    backend = "abelian"

    def __init__(self, terms, diffs):
        self.terms = dict(terms)
        self.diffs = dict(diffs)
        spots = sorted(self.terms)
        self.lo, self.hi = (spots[0], spots[-1]) if spots else (0, -1)
        for i in self.diffs:
            if (i - 1) in self.diffs:
                comp = self.diffs[i - 1].compose(self.diffs[i])
                if not comp.is_zero_map():
                    raise InternalCheckFailed("d o d != 0 in abelian complex")

    def term(self, i):
        return self.terms.get(i)

    def differential(self, i):
        return self.diffs.get(i)

    def homology_decomposition(self, i):
        """(free rank, invariant factors) of H_i."""
        if i not in self.terms:
            return 0, []
        phi_out = self.diffs.get(i)
        phi_in = self.diffs.get(i + 1)
        free, tors, _ = homology_at(phi_in, phi_out)
        return free, tors

    def homology_all(self):
        return {i: self.homology_decomposition(i)
                for i in range(self.lo, self.hi + 1)}


class AbelianChainMap:
    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = dict(components)  # spot -> integer Matrix
        if check:
            for i, m in self.components.items():
                ds = self.source.diffs.get(i)
                dt = self.target.diffs.get(i)
                if ds is None or dt is None or (i - 1) not in self.components:
                    continue
                left = self.components[i - 1] * ds.matrix
                right = dt.matrix * m
                diffm = left - right
                tgt = self.target.terms[i - 1]
                for j in range(diffm.cols):
                    if not tgt.contains_in_rel_span(diffm.column(j)):
                        raise InternalCheckFailed("abelian chain map squares fail")

    def induced_zero_on_homology(self, i):
        from .zmodules import kernel_lattice, induced_map_is_zero
        src, tgt = self.source, self.target
        phi_out = src.diffs.get(i)
        if phi_out is not None:
            kernel = kernel_lattice(phi_out)
        else:
            g = src.terms[i].gens
            kernel = [tuple(1 if a == b else 0 for a in range(g)) for b in range(g)]
        return induced_map_is_zero(self.components[i], tgt.diffs.get(i + 1),
                                   kernel, tgt.terms[i])
