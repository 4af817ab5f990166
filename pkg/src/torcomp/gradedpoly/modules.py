"""Free-module elements, finitely presented graded modules, and graded maps.

A free-module element over k[x] with g components is {(comp, mono): coeff}.
Module monomials are ordered term-over-position (grevlex on the monomial,
ties to the smaller component); an optional elimination split makes every
monomial in components < split larger than everything in components >= split,
which is how syzygies are read off from a tagged Groebner basis.
"""

from ..errors import InputError
from .ring import Poly


class FreeModuleElement:
    __slots__ = ("ring", "ncomp", "terms")

    def __init__(self, ring, ncomp, terms=None):
        self.ring = ring
        self.ncomp = ncomp
        self.terms = {}
        if terms:
            F = ring.field
            for (c, m), x in terms.items():
                x = F.coerce(x)
                if not F.is_zero(x):
                    if not (0 <= c < ncomp):
                        raise InputError(f"component {c} out of range")
                    self.terms[(c, m)] = x

    @classmethod
    def zero(cls, ring, ncomp):
        return cls(ring, ncomp)

    @classmethod
    def basis(cls, ring, ncomp, i):
        return cls(ring, ncomp, {(i, ring.one_mono()): ring.field.one()})

    @classmethod
    def from_polys(cls, ring, polys):
        """Column vector of polynomials."""
        terms = {}
        for i, p in enumerate(polys):
            for m, c in p.terms.items():
                terms[(i, m)] = c
        return cls(ring, len(polys), terms)

    def component(self, i):
        p = Poly(self.ring)
        p.terms = {m: c for (c0, m), c in self.terms.items() if c0 == i}
        return p

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        F = self.ring.field
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = F.add(out.get(k, F.zero()), c)
            if F.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        e = FreeModuleElement(self.ring, self.ncomp)
        e.terms = out
        return e

    def __sub__(self, other):
        return self + other.scale(self.ring.field.neg(self.ring.field.one()))

    def scale(self, c):
        F = self.ring.field
        c = F.coerce(c)
        e = FreeModuleElement(self.ring, self.ncomp)
        if not F.is_zero(c):
            e.terms = {k: F.mul(c, x) for k, x in self.terms.items()}
        return e

    def mul_mono(self, mono, c=None):
        F = self.ring.field
        c = F.one() if c is None else F.coerce(c)
        e = FreeModuleElement(self.ring, self.ncomp)
        if not F.is_zero(c):
            e.terms = {(comp, self.ring.mono_mul(mono, m)): F.mul(c, x)
                       for (comp, m), x in self.terms.items()}
        return e

    def mul_poly(self, poly):
        out = FreeModuleElement(self.ring, self.ncomp)
        for m, c in poly.terms.items():
            out = out + self.mul_mono(m, c)
        return out

    def key(self, split=None):
        """Sort key of a module monomial; see module docstring."""
        split = self.ncomp if split is None else split

        def k(cm):
            comp, mono = cm
            return (1 if comp < split else 0, self.ring.mono_cmp_key(mono), -comp)
        return k

    def lead(self, split=None):
        """((comp, mono), coeff) of the leading term."""
        if not self.terms:
            return None
        key = self.key(split)
        cm = max(self.terms, key=key)
        return cm, self.terms[cm]

    def degree(self, comp_degs):
        """Weighted degree of a homogeneous element (None if zero)."""
        if not self.terms:
            return None
        degs = {self.ring.mono_degree(m) + comp_degs[c] for (c, m) in self.terms}
        if len(degs) > 1:
            raise InputError(f"element not homogeneous: {self}")
        return degs.pop()

    def restrict_components(self, lo, hi, new_offset=0):
        """Project onto components [lo, hi), re-indexing them from new_offset."""
        e = FreeModuleElement(self.ring, hi - lo + new_offset)
        e.terms = {(c - lo + new_offset, m): x for (c, m), x in self.terms.items()
                   if lo <= c < hi}
        return e

    def extend(self, ncomp, offset=0):
        """View inside a larger free module, shifting components by offset."""
        e = FreeModuleElement(self.ring, ncomp)
        e.terms = {(c + offset, m): x for (c, m), x in self.terms.items()}
        return e

    def __eq__(self, other):
        return (isinstance(other, FreeModuleElement) and self.ring == other.ring
                and self.ncomp == other.ncomp and self.terms == other.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (c, m) in sorted(self.terms, key=self.key(), reverse=True):
            x = self.terms[(c, m)]
            ms = self.ring.mono_str(m)
            coeff = "" if (str(x) == "1" and ms != "1") else f"{x}*"
            body = "" if ms == "1" and coeff else ms
            parts.append(f"{coeff}{body or '1'}<e{c}>" if False else
                         (f"({x})*{ms}*e{c}" if ms != "1" else f"({x})*e{c}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"FreeModuleElement({self})"


class FgGradedModule:
    """F/R: graded free module with generator degrees, modulo homogeneous relations."""

    __slots__ = ("ring", "gen_degs", "relations", "_gb", "_basis_cache")

    def __init__(self, ring, gen_degs, relations=()):
        self.ring = ring
        self.gen_degs = tuple(gen_degs)
        rels = []
        for r in relations:
            if r.ncomp != len(self.gen_degs):
                raise InputError("relation lives in the wrong free module")
            if not r.is_zero():
                r.degree(self.gen_degs)  # homogeneity check
                rels.append(r)
        self.relations = tuple(rels)
        self._gb = None
        self._basis_cache = {}

    @classmethod
    def free(cls, ring, gen_degs):
        return cls(ring, gen_degs, ())

    @classmethod
    def ring_module(cls, ring, twist=0):
        """A(-twist): free of rank 1 generated in degree `twist`."""
        return cls(ring, (twist,), ())

    @classmethod
    def quotient_ring(cls, ring, ideal_gens):
        """A/(f_1..f_r) for homogeneous polynomials f_i."""
        rels = [FreeModuleElement(ring, 1, {(0, m): c for m, c in f.terms.items()})
                for f in ideal_gens if not f.is_zero()]
        return cls(ring, (0,), rels)

    @property
    def ngens(self):
        return len(self.gen_degs)

    def rel_gb(self):
        if self._gb is None:
            from .groebner import groebner_basis
            self._gb = groebner_basis(list(self.relations), self.ring,
                                      self.ngens, self.gen_degs)
        return self._gb

    def is_free_presentation(self):
        return not self.relations

    def twist(self, t):
        """M(t): shifts all generator degrees down by t (deg M(t)_d = M_{d+t})."""
        return FgGradedModule(self.ring, tuple(d - t for d in self.gen_degs),
                              self.relations)

    def direct_sum(self, other):
        n1 = self.ngens
        rels = [r.extend(n1 + other.ngens) for r in self.relations]
        rels += [r.extend(n1 + other.ngens, offset=n1) for r in other.relations]
        return FgGradedModule(self.ring, self.gen_degs + other.gen_degs, rels)

    def __repr__(self):
        return (f"FgGradedModule({self.ring}, gens deg {list(self.gen_degs)}, "
                f"{len(self.relations)} relations)")


class ModuleMap:
    """Graded map M -> N of f.p. modules, given on generators of M.

    images[i] is an element of N's ambient free module; homogeneity requires
    deg(images[i]) = deg(gen_i of M) + twist.
    """

    __slots__ = ("source", "target", "images", "twist", "_mat_cache")

    def __init__(self, source, target, images, twist=0, check=True):
        if len(images) != source.ngens:
            raise InputError("one image per source generator")
        self.source = source
        self.target = target
        self.images = tuple(images)
        self.twist = twist
        self._mat_cache = {}
        if check:
            for i, img in enumerate(self.images):
                if img.is_zero():
                    continue
                d = img.degree(target.gen_degs)
                if d != source.gen_degs[i] + twist:
                    raise InputError(
                        f"image of generator {i} has degree {d}, expected "
                        f"{source.gen_degs[i] + twist}")
            self._check_well_defined()

    def _check_well_defined(self):
        from .groebner import submodule_membership
        if not self.source.relations:
            return
        carrier = list(self.target.relations)
        for rel in self.source.relations:
            img = self.apply_free(rel)
            if not submodule_membership(img, carrier, self.target.ring,
                                        self.target.ngens, self.target.gen_degs):
                raise InputError("map does not kill a source relation")

    def apply_free(self, elem):
        """Apply to an element of the source's ambient free module."""
        out = FreeModuleElement.zero(self.target.ring, self.target.ngens)
        for (c, m), x in elem.terms.items():
            out = out + self.images[c].mul_mono(m, x)
        return out

    def compose(self, other):
        """self o other (other: L -> M, self: M -> N)."""
        imgs = [self.apply_free(img) for img in other.images]
        return ModuleMap(other.source, self.target, imgs,
                         twist=self.twist + other.twist, check=False)
