"""Ground rings for exact linear algebra: Z, Q, and prime fields F_p.

A ring object bundles the scalar arithmetic; scalars themselves are plain
Python values (int for Z and F_p, Fraction for Q), which keeps matrices cheap
and hashable. No floats anywhere.
"""

from fractions import Fraction


class Ring:
    """Arithmetic interface shared by ZZ, QQ and GF(p)."""

    name = "?"
    is_field = False

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == self.zero()

    def div(self, a, b):
        """Exact division; only valid when b divides a (always, in a field)."""
        raise NotImplementedError

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Ring) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class _IntegerRing(Ring):
    name = "ZZ"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        raise TypeError(f"not an integer: {x!r}")

    def div(self, a, b):
        q, r = divmod(a, b)
        if r != 0:
            raise ArithmeticError(f"{a} not divisible by {b} in ZZ")
        return q


class _RationalField(Ring):
    name = "QQ"
    is_field = True

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if type(x) is Fraction:
            return x
        return Fraction(x)

    def div(self, a, b):
        return Fraction(a) / Fraction(b)


class _PrimeField(Ring):
    """F_p with elements stored as ints in [0, p). Both p = 2 and odd p work."""

    is_field = True

    def __init__(self, p):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        # Cheap primality guard; inputs are small config primes.
        for d in range(2, int(p ** 0.5) + 1):
            if p % d == 0:
                raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def zero(self):
        return 0

    def one(self):
        return 1 % self.p

    def coerce(self, x):
        if type(x) is int:
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        return (a * pow(b, -1, self.p)) % self.p


ZZ = _IntegerRing()
QQ = _RationalField()

_gf_cache = {}


def GF(p):
    """Prime field F_p (cached so GF(5) is GF(5))."""
    if p not in _gf_cache:
        _gf_cache[p] = _PrimeField(p)
    return _gf_cache[p]
