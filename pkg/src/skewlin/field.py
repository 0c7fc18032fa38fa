"""Exact coefficient rings D with a distinguished automorphism tau.

Three kinds of instance are supported:

* ``F<p>``            the prime field F_p, tau = identity
* ``F<p>^<k>:frob^<e>``  F_{p^k}, tau = x -> x^(p^e)
* ``Q``               the rationals, tau = identity

Elements are stored in canonical form and compared structurally.  For
finite fields an element is an ``int`` in ``range(q)`` whose base-p digits are
the coefficients of the polynomial basis ``1, i, i^2, ...`` (``i`` being the
class of the indeterminate modulo the defining polynomial).  Rationals are
``fractions.Fraction``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class FieldError(ValueError):
    pass


class NotEnumerable(FieldError):
    """Raised when asked to list the elements of an infinite instance."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class RingSpec:
    kind: str  # "prime", "ext" or "rational"
    p: int = 0
    k: int = 1
    e: int = 0

    def __post_init__(self):
        if self.kind == "rational":
            return
        if self.kind not in ("prime", "ext"):
            raise FieldError(f"unknown ring kind {self.kind!r}")
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.k < 1:
            raise FieldError("extension degree must be >= 1")
        if not 0 <= self.e < self.k:
            raise FieldError(f"automorphism exponent {self.e} out of range 0..{self.k - 1}")

    def __str__(self):
        if self.kind == "rational":
            return "Q"
        if self.k == 1:
            return f"F{self.p}"
        if self.e == 0:
            return f"F{self.p}^{self.k}"
        return f"F{self.p}^{self.k}:frob^{self.e}"


_SPEC_RE = re.compile(r"^F(\d+)(?:\^(\d+))?(?::frob\^(\d+))?$")


def _prime_power(q: int):
    """(p, k) with q = p^k, or None."""
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 and is_prime(p) else None
    return None


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``F5``, ``F3^2:frob^1``, ``F9:frob^1`` (prime-power shorthand) or ``Q``.

    An extension without an automorphism, such as ``F3^2`` or ``F9``, carries
    tau = identity.
    """
    text = text.strip().replace(" ", "")
    if text == "Q":
        return RingSpec("rational")
    m = _SPEC_RE.match(text)
    if not m:
        raise FieldError(f"cannot parse ring spec {text!r}; expected F<p>, F<p>^<k>:frob^<e> or Q")
    p = int(m.group(1))
    k = int(m.group(2) or 1)
    e = int(m.group(3) or 0)
    if m.group(2) is None and not is_prime(p):
        pk = _prime_power(p)
        if pk is None:
            raise FieldError(f"{p} is not a prime power")
        p, k = pk
    if k == 1:
        if e:
            raise FieldError("prime fields only carry the identity automorphism")
        return RingSpec("prime", p)
    return RingSpec("ext", p, k, e)


def _poly_mod_irreducible(p: int, coeffs: tuple[int, ...]) -> bool:
    # coeffs: monic polynomial, low-to-high, leading 1 included
    k = len(coeffs) - 1
    if k == 1:
        return True
    # no factor of degree d <= k // 2: brute force over monic divisors
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            div = tuple(low) + (1,)
            if _poly_rem(p, coeffs, div) == ():
                return False
    return True


def _poly_rem(p, a, b):
    a = list(a)
    while len(a) >= len(b):
        c = a[-1]
        if c:
            shift = len(a) - len(b)
            for idx, bc in enumerate(b):
                a[shift + idx] = (a[shift + idx] - c * bc) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over F_p.

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients (constant term least significant).
    """
    for code in range(p**k):
        low = [(code // p**j) % p for j in range(k)]
        coeffs = tuple(low) + (1,)
        if low[0] == 0 and k > 1:
            continue
        if _poly_mod_irreducible(p, coeffs):
            return coeffs
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")  # pragma: no cover


class Field:
    """Ring instance handle.  All arithmetic goes through the handle."""

    def __init__(self, spec: RingSpec):
        self.spec = spec
        self.kind = spec.kind
        self.p, self.k, self.e = spec.p, spec.k, spec.e
        if self.kind == "rational":
            self.order = None
            self.zero, self.one = Fraction(0), Fraction(1)
            return
        self.order = q = self.p**self.k
        self.zero, self.one = 0, 1
        if self.kind == "ext":
            self.modulus = least_irreducible(self.p, self.k)
        else:
            self.modulus = (0, 1)
        self._vec = [self._digits(a) for a in range(q)]
        self._build_tables()

    # -- construction helpers -------------------------------------------------
    def _digits(self, a):
        p = self.p
        return tuple((a // p**j) % p for j in range(self.k))

    def _encode(self, vec):
        p = self.p
        return sum((c % p) * p**j for j, c in enumerate(vec))

    def _slow_mul(self, a, b):
        p, k = self.p, self.k
        va, vb = self._vec[a], self._vec[b]
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(va):
            if x:
                for j, y in enumerate(vb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                for j in range(k + 1):
                    prod[deg - k + j] = (prod[deg - k + j] - c * mod[j]) % p
        return self._encode(prod[:k])

    def _build_tables(self):
        q, p = self.order, self.p
        if self.k == 1:
            self._add = None
        else:
            self._add = [
                [self._encode([x + y for x, y in zip(self._vec[a], self._vec[b])]) for b in range(q)]
                for a in range(q)
            ]
        self._negt = [self._encode([-x for x in self._vec[a]]) for a in range(q)]
        # a primitive element: least generator of the cyclic group F_q^x
        for g in range(1, q):
            exp = [1]
            for _ in range(q - 2):
                exp.append(self._slow_mul(exp[-1], g))
            if len(set(exp)) == q - 1:
                break
        self.generator = g
        self._exp = exp + exp  # doubled, so index sums need no reduction
        self._log = [None] * q
        for idx, val in enumerate(exp):
            self._log[val] = idx
        # tau^j tables for j in 0..k-1; tau^j(a) = a^(p^(e j))
        self._tau = []
        for j in range(self.k):
            power = p ** ((self.e * j) % self.k)
            tab = [0] * q
            for a in range(1, q):
                tab[a] = self._exp[(self._log[a] * power) % (q - 1)]
            self._tau.append(tab)

    # -- arithmetic -------------------------------------------------------------
    def add(self, a, b):
        if self.kind == "rational":
            return a + b
        if self._add is None:
            return (a + b) % self.p
        return self._add[a][b]

    def neg(self, a):
        if self.kind == "rational":
            return -a
        return self._negt[a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind == "rational":
            return a * b
        if not a or not b:
            return 0
        if self.k == 1:
            return a * b % self.p
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("zero has no inverse")
        if self.kind == "rational":
            return 1 / a
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def tau(self, a, k=1):
        """Apply tau^k; negative k applies the inverse automorphism."""
        if self.kind == "rational" or self.e == 0 or not a:
            return a
        return self._tau[k % self.k][a]

    def power(self, a, m: int):
        if m < 0:
            return self.power(self.inv(a), -m)
        result = self.one
        for _ in range(m):
            result = self.mul(result, a)
        return result

    @property
    def tau_order(self) -> int:
        if self.kind == "rational" or self.e == 0:
            return 1
        from math import gcd

        return self.k // gcd(self.k, self.e)

    # -- elements and conversion ---------------------------------------------
    def coerce(self, x):
        """Map an integer (or Fraction, for Q) into the instance."""
        if self.kind == "rational":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"{x} is not defined in characteristic {self.p}")
            return self.div(self.coerce(x.numerator), self.coerce(x.denominator))
        return int(x) % self.p

    def elements(self):
        if self.order is None:
            raise NotEnumerable("Q is infinite; supply candidate elements explicitly")
        return range(self.order)

    def units(self):
        return range(1, self.order) if self.order is not None else self.elements()

    def center(self):
        """Enumerate Z(D).  Every implemented D is commutative, so Z(D) = D."""
        return self.elements()

    def fixed_elements(self):
        """Elements of D fixed by tau (these are central in the skew ring)."""
        return [a for a in self.elements() if self.tau(a) == a]

    def dlog(self, a) -> int:
        if self.order is None:
            raise NotEnumerable("discrete log needs a finite field")
        if not a:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def gen_power(self, j: int):
        return self._exp[j % (self.order - 1)]

    def random(self, rng, nonzero=False, height=3):
        if self.kind == "rational":
            while True:
                num = rng.randint(-height, height)
                den = rng.randint(1, height)
                val = Fraction(num, den)
                if val or not nonzero:
                    return val
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.order)

    def generator_element(self):
        """The class ``i`` of the indeterminate (only for proper extensions)."""
        if self.kind != "ext":
            raise FieldError(f"{self.spec} has no adjoined generator i")
        return self.p

    def format(self, a) -> str:
        """Render an element so that :func:`skewlin.parse` reads it back."""
        if self.kind == "rational":
            return str(a)
        if self.k == 1:
            return str(a)
        parts = []
        for j, c in reversed(list(enumerate(self._vec[a]))):
            if not c:
                continue
            if j == 0:
                parts.append(str(c))
            else:
                mon = "i" if j == 1 else f"i^{j}"
                parts.append(mon if c == 1 else f"{c}{mon}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"Field({self.spec})"

    def __str__(self):
        return str(self.spec)

    def __eq__(self, other):
        return isinstance(other, Field) and other.spec == self.spec

    def __hash__(self):
        return hash(self.spec)


def make_instance(spec) -> Field:
    """Instances are cached per spec, so handles compare (and hash) cheaply."""
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    return _cached_instance(spec)


@lru_cache(maxsize=None)
def _cached_instance(spec: RingSpec) -> Field:
    return Field(spec)


def apply_automorphism(field: Field, a, k: int = 1):
    return field.tau(a, k)


def enumerate_center(field: Field):
    return list(field.center())


def inverse_twist(field: Field) -> Field:
    """The same D carrying tau^-1."""
    if field.kind != "ext" or field.e == 0:
        return field
    return make_instance(RingSpec("ext", field.p, field.k, (-field.e) % field.k))
