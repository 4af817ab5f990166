"""Atoms of the closed p-local class and their structural predicates.

An atom is a tuple: ("cyc", k) with k >= 1, or a singleton tag for the five
parameterless kinds. A SymbolicPModule is a finite multiset of atoms together
with the prime p; the multiset is kept sorted so equality is structural.
"""

from ..errors import InputError

FREE = "free"      # Z_(p)
Q = "q"            # Q = Z_(p)[1/p]
CYC = "cyc"        # Z/p^k
PRUFER = "prufer"  # Z/p^infinity
ZHAT = "zhat"      # Z_p
QP = "qp"          # Q_p

KINDS = (FREE, Q, CYC, PRUFER, ZHAT, QP)

_ATOM_NAMES = {
    FREE: "Z_(p)", Q: "Q", PRUFER: "Z/p^oo", ZHAT: "Z_p", QP: "Q_p",
}

_SORT_ORDER = {FREE: 0, Q: 1, CYC: 2, PRUFER: 3, ZHAT: 4, QP: 5}


def Atom(kind, k=None):
    if kind == CYC:
        if not (isinstance(k, int) and k >= 1):
            raise InputError(f"Cyclic atom needs integer exponent k >= 1, got {k!r}")
        return (CYC, k)
    if kind not in KINDS:
        raise InputError(f"unknown atom kind {kind!r}")
    if k is not None:
        raise InputError(f"{kind} takes no parameter")
    return (kind,)


def atom_key(atom):
    return (_SORT_ORDER[atom[0]], atom[1] if len(atom) > 1 else 0)


def atom_str(atom):
    if atom[0] == CYC:
        return f"Z/p^{atom[1]}" if atom[1] > 1 else "Z/p"
    return _ATOM_NAMES[atom[0]]


class SymbolicPModule:
    """Finite direct sum of atoms over Z_(p) for a fixed prime p."""

    __slots__ = ("p", "atoms")

    def __init__(self, p, atoms=()):
        if not (isinstance(p, int) and p >= 2):
            raise InputError(f"prime p required, got {p!r}")
        self.p = p
        self.atoms = tuple(sorted(atoms, key=atom_key))
        for a in self.atoms:
            Atom(*a)  # validate

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, p):
        return cls(p, ())

    @classmethod
    def free(cls, p, rank=1):
        return cls(p, ((FREE,),) * rank)

    @classmethod
    def rationals(cls, p, rank=1):
        return cls(p, ((Q,),) * rank)

    @classmethod
    def cyclic(cls, p, k):
        return cls(p, ((CYC, k),))

    @classmethod
    def prufer(cls, p):
        return cls(p, ((PRUFER,),))

    @classmethod
    def zhat(cls, p):
        return cls(p, ((ZHAT,),))

    @classmethod
    def qp(cls, p):
        return cls(p, ((QP,),))

    @classmethod
    def fg(cls, p, rank=0, torsion_exponents=()):
        """Finitely generated Z_(p)-module in invariant factor form."""
        atoms = ((FREE,),) * rank + tuple((CYC, k) for k in torsion_exponents)
        return cls(p, atoms)

    # -- algebra --------------------------------------------------------------
    def __add__(self, other):  # direct sum
        if self.p != other.p:
            raise InputError("mixed primes")
        return SymbolicPModule(self.p, self.atoms + other.atoms)

    def __eq__(self, other):
        return (isinstance(other, SymbolicPModule)
                and self.p == other.p and self.atoms == other.atoms)

    def __hash__(self):
        return hash((self.p, self.atoms))

    # -- predicates -----------------------------------------------------------
    def is_zero(self):
        return not self.atoms

    def is_fg(self):
        """Finitely generated over Z_(p): only free and cyclic atoms."""
        return all(a[0] in (FREE, CYC) for a in self.atoms)

    def is_bounded_torsion(self):
        return all(a[0] == CYC for a in self.atoms)

    def count(self, kind):
        return sum(1 for a in self.atoms if a[0] == kind)

    def cyclic_exponents(self):
        return tuple(a[1] for a in self.atoms if a[0] == CYC)

    def __str__(self):
        if not self.atoms:
            return "0"
        parts = []
        i = 0
        while i < len(self.atoms):
            a = self.atoms[i]
            j = i
            while j < len(self.atoms) and self.atoms[j] == a:
                j += 1
            n = j - i
            name = atom_str(a).replace("p", str(self.p)) if False else atom_str(a)
            parts.append(name if n == 1 else f"{name}^{n}")
            i = j
        return " + ".join(parts)

    def __repr__(self):
        return f"SymbolicPModule(p={self.p}, {self})"


def parse_member(p, text):
    """Parse 'Z_(p)', 'Prufer', 'Cyclic:3', 'Q', 'Z_p', 'Q_p', sums with '+'.

    Used by the CLI; accepts both the atom names above and spec-style names
    (FreeLocal, CompleteFree, Rationals, PadicRationals).
    """
    table = {
        "z_(p)": (FREE,), "freelocal": (FREE,), "free": (FREE,), "a": (FREE,),
        "q": (Q,), "rationals": (Q,),
        "prufer": (PRUFER,), "z/p^oo": (PRUFER,), "z/p^inf": (PRUFER,),
        "z_p": (ZHAT,), "completefree": (ZHAT,), "zhat": (ZHAT,),
        "q_p": (QP,), "padicrationals": (QP,), "qp": (QP,),
        "0": None, "zero": None,
    }
    atoms = []
    for chunk in text.split("+"):
        chunk = chunk.strip()
        low = chunk.lower()
        if low.startswith("cyclic:") or low.startswith("cyclic("):
            k = int(low.replace("cyclic:", "").replace("cyclic(", "").rstrip(")"))
            atoms.append((CYC, k))
        elif low.startswith("z/p^"):
            atoms.append((CYC, int(low[4:])))
        elif low == "z/p":
            atoms.append((CYC, 1))
        elif low in table:
            if table[low] is not None:
                atoms.append(table[low])
        else:
            raise InputError(f"cannot parse p-local module atom {chunk!r}")
    return SymbolicPModule(p, atoms)
