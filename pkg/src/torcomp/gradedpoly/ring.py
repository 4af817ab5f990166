"""Polynomial rings k[x_1..x_n] with positive variable weights and grevlex order.

Monomials are exponent tuples; polynomials are dicts {monomial: coefficient}
wrapped in a light Poly class. The monomial order is (weighted-)graded reverse
lexicographic: higher weighted degree wins, ties broken by the *smaller*
exponent in the last variable where they differ. One order per ring instance.
"""

import re

from ..errors import InputError
from ..exactnum.rings import QQ, GF


class RingDescriptor:
    """Base field (F_p or Q), variable names, positive weights, grevlex order."""

    __slots__ = ("field", "variables", "weights", "p")

    def __init__(self, field, variables, weights=None):
        if not variables:
            raise InputError("need at least one variable")
        self.field = field
        self.p = getattr(field, "p", None)
        self.variables = tuple(variables)
        self.weights = tuple(weights) if weights else (1,) * len(variables)
        if len(self.weights) != len(self.variables):
            raise InputError("one weight per variable")
        if any(w < 1 for w in self.weights):
            raise InputError("variable degrees must be positive")

    @property
    def nvars(self):
        return len(self.variables)

    def mono_degree(self, mono):
        return sum(w * e for w, e in zip(self.weights, mono))

    def mono_mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mono_divides(self, a, b):
        return all(x <= y for x, y in zip(a, b))

    def mono_div(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mono_lcm(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def mono_cmp_key(self, mono):
        """Sort key for grevlex: later keys are LARGER monomials."""
        # grevlex: compare weighted degree; tie: the monomial with smaller
        # exponent in the last differing variable is larger, i.e. compare
        # reversed negated exponents lexicographically.
        return (self.mono_degree(mono), tuple(-e for e in reversed(mono)))

    def one_mono(self):
        return (0,) * self.nvars

    def var_mono(self, i, power=1):
        e = [0] * self.nvars
        e[i] = power
        return tuple(e)

    def mono_str(self, mono):
        if all(e == 0 for e in mono):
            return "1"
        parts = []
        for name, e in zip(self.variables, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __eq__(self, other):
        return (isinstance(other, RingDescriptor) and self.field == other.field
                and self.variables == other.variables and self.weights == other.weights)

    def __hash__(self):
        return hash((self.field, self.variables, self.weights))

    def __repr__(self):
        f = "Q" if self.field is QQ else f"F{self.p}"
        w = "" if all(x == 1 for x in self.weights) else f" weights {self.weights}"
        return f"{f}[{','.join(self.variables)}]{w}"

    # -- parsing -------------------------------------------------------------
    @classmethod
    def parse(cls, text):
        """Parse 'F5[x,y]' / 'Fp[x,y],p=5' / 'Q[x,y,z]' (optional 'w=(1,2)')."""
        text = text.strip()
        m = re.match(r"^(Q|F\s*p|F\s*\d+)\s*\[([^\]]+)\]\s*(?:,\s*p\s*=\s*(\d+))?"
                     r"\s*(?:,\s*w\s*=\s*\(([\d,\s]+)\))?$", text)
        if not m:
            raise InputError(f"cannot parse ring descriptor {text!r}")
        fld, vars_, pval, wstr = m.groups()
        fld = fld.replace(" ", "")
        if fld == "Q":
            field = QQ
        elif fld == "Fp":
            if not pval:
                raise InputError("Fp ring needs ,p=<prime>")
            field = GF(int(pval))
        else:
            field = GF(int(fld[1:]))
        variables = [v.strip() for v in vars_.split(",") if v.strip()]
        weights = [int(x) for x in wstr.split(",")] if wstr else None
        return cls(field, variables, weights)


class Poly:
    """Polynomial as {monomial: nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = ring.field.coerce(c)
                if not ring.field.is_zero(c):
                    self.terms[mono] = c

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def one(cls, ring):
        return cls(ring, {ring.one_mono(): ring.field.one()})

    @classmethod
    def variable(cls, ring, i, power=1):
        return cls(ring, {ring.var_mono(i, power): ring.field.one()})

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {ring.one_mono(): c})

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        degs = {self.ring.mono_degree(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Weighted degree of a homogeneous polynomial (None if zero)."""
        if not self.terms:
            return None
        degs = {self.ring.mono_degree(m) for m in self.terms}
        if len(degs) > 1:
            raise InputError(f"not homogeneous: {self}")
        return degs.pop()

    def __add__(self, other):
        out = dict(self.terms)
        F = self.ring.field
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero()), c)
            if F.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        p = Poly(self.ring)
        p.terms = out
        return p

    def __sub__(self, other):
        return self + other.scale(self.ring.field.neg(self.ring.field.one()))

    def __mul__(self, other):
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = self.ring.mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero()), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        p = Poly(self.ring)
        p.terms = out
        return p

    def scale(self, c):
        F = self.ring.field
        c = F.coerce(c)
        p = Poly(self.ring)
        if not F.is_zero(c):
            p.terms = {m: F.mul(c, x) for m, x in self.terms.items()}
        return p

    def mul_mono(self, mono, c=None):
        F = self.ring.field
        c = F.one() if c is None else F.coerce(c)
        p = Poly(self.ring)
        if not F.is_zero(c):
            p.terms = {self.ring.mono_mul(mono, m): F.mul(c, x)
                       for m, x in self.terms.items()}
        return p

    def lead(self):
        """(monomial, coeff) of the leading term under grevlex."""
        if not self.terms:
            return None
        m = max(self.terms, key=self.ring.mono_cmp_key)
        return m, self.terms[m]

    def constant_term(self):
        return self.terms.get(self.ring.one_mono(), self.ring.field.zero())

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self.ring.mono_cmp_key, reverse=True):
            c = self.terms[m]
            cs = str(c)
            ms = self.ring.mono_str(m)
            if ms == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ms)
            elif cs == "-1":
                parts.append(f"-{ms}")
            else:
                parts.append(f"{cs}*{ms}")
        out = " + ".join(parts).replace("+ -", "- ")
        return out

    def __repr__(self):
        return f"Poly({self})"

    # -- parsing -------------------------------------------------------------
    @classmethod
    def parse(cls, ring, text):
        """Parse 'x^2*y - 3*y^3 + 2' (explicit ^ and *; integer or a/b coeffs)."""
        text = text.replace(" ", "")
        if not text or text == "0":
            return cls.zero(ring)
        tokens = re.findall(r"[+-]?[^+-]+", text)
        result = cls.zero(ring)
        var_index = {v: i for i, v in enumerate(ring.variables)}
        for tok in tokens:
            sign = 1
            if tok.startswith("+"):
                tok = tok[1:]
            elif tok.startswith("-"):
                sign = -1
                tok = tok[1:]
            coeff = ring.field.coerce(sign)
            mono = [0] * ring.nvars
            for factor in tok.split("*"):
                if not factor:
                    raise InputError(f"bad term {tok!r}")
                m = re.match(r"^([A-Za-z_]\w*)(?:\^(\d+))?$", factor)
                if m:
                    name, e = m.group(1), int(m.group(2) or 1)
                    if name not in var_index:
                        raise InputError(f"unknown variable {name!r}")
                    mono[var_index[name]] += e
                else:
                    m2 = re.match(r"^(\d+)(?:/(\d+))?$", factor)
                    if not m2:
                        raise InputError(f"bad factor {factor!r} in {text!r}")
                    num, den = int(m2.group(1)), m2.group(2)
                    from fractions import Fraction
                    val = Fraction(num, int(den)) if den else num
                    coeff = ring.field.mul(coeff, ring.field.coerce(val))
            result = result + cls(ring, {tuple(mono): coeff})
        return result
