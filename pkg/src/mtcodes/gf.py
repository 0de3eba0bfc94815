"""Arithmetic in GF(p^e) in the polynomial basis.

Elements are encoded as integers: the element a_0 + a_1 t + ... + a_{e-1} t^{e-1}
(t a root of the defining modulus) has code a_0 + a_1 p + ... + a_{e-1} p^{e-1}.
All hot paths (polynomials, matrices, the brute-force oracle) work on these
codes directly; :class:`FieldElement` is the user-facing wrapper.
"""

from __future__ import annotations

import re
from functools import cached_property
from math import gcd

__all__ = [
    "FieldError",
    "FieldSpec",
    "FieldElement",
    "is_prime",
    "frobenius",
    "in_subfield",
    "trace_to_subfield",
]

_ADD_TABLE_LIMIT = 1024


class FieldError(ValueError):
    """Invalid field construction or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_mod_p(f: list[int], g: list[int], p: int) -> list[int]:
    """Remainder of f modulo g over F_p (ascending coefficient lists, g monic-izable)."""
    f = [c % p for c in f]
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        shift = len(f) - 1 - dg
        factor = f[-1] * inv_lead % p
        for i, c in enumerate(g):
            f[shift + i] = (f[shift + i] - factor * c) % p
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return f


def _monic_polys(p: int, d: int):
    """All monic polynomials of degree d over F_p."""
    for k in range(p**d):
        coeffs = []
        for _ in range(d):
            coeffs.append(k % p)
            k //= p
        yield coeffs + [1]


def _is_irreducible(modulus: list[int], p: int) -> bool:
    e = len(modulus) - 1
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for h in _monic_polys(p, d):
            if not _poly_mod_p(modulus, h, p):
                return False
    return True


def _first_irreducible(p: int, e: int) -> list[int]:
    for f in _monic_polys(p, e):
        if f[0] != 0 and _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^e) defined by a monic irreducible modulus over F_p.

    ``modulus`` is an ascending coefficient list of length e+1. When omitted, the
    first monic irreducible of degree e (in code order) is used. ``generator`` is
    an optional element (code, coefficient list, or text) of multiplicative order
    p^e - 1 used for power notation ``g^k``.
    """

    def __init__(self, p: int, e: int = 1, modulus=None, generator=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1:
            raise FieldError("extension degree must be at least 1")
        if modulus is None:
            modulus = [0, 1] if e == 1 else _first_irreducible(p, e)
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {e}")
        if not _is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        self._build_tables()
        self.generator = None
        if generator is not None:
            g = self._coerce_generator(generator)
            if self.order(g) != self.q - 1:
                raise FieldError("generator is not a primitive element")
            self.generator = g
        self._set_log_base(self.primitive)

    # -- construction helpers -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Multiply codes by schoolbook polynomial arithmetic (table bootstrap only)."""
        p, e = self.p, self.e
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod_p(prod, list(self.modulus), p)
        return self.from_coeffs(rem)

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        if p == 2:
            self._add_table = None
        elif q <= _ADD_TABLE_LIMIT:
            self._add_table = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
        self._neg = [self._digit_neg(a) for a in range(q)]
        # find the smallest primitive element by brute force
        for cand in range(1, q):
            powers = [1]
            x = cand
            while x != 1:
                powers.append(x)
                x = self._raw_mul(x, cand)
            if len(powers) == q - 1:
                self._prim = cand
                self._exp = powers
                break
        self._log = [0] * q
        for i, x in enumerate(self._exp):
            self._log[x] = i

    def _set_log_base(self, g: int) -> None:
        if g == self._prim:
            self._glog = self._log
            return
        self._glog = [0] * self.q
        x = 1
        for i in range(self.q - 1):
            self._glog[x] = i
            x = self.mul(x, g)

    def _coerce_generator(self, g) -> int:
        if isinstance(g, str):
            if g.strip().startswith("g"):
                raise FieldError("generator cannot be given in power form")
            return self.parse(g)
        if isinstance(g, (list, tuple)):
            return self.from_coeffs(g)
        return self.code(g)

    def _digit_add(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def _digit_neg(self, a: int) -> int:
        p = self.p
        out, place = 0, 1
        while a:
            out += ((-(a % p)) % p) * place
            a //= p
            place *= p
        return out

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.modulus == other.modulus
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((self.p, self.modulus, self.generator))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)}, generator={self.generator})"

    def same_field(self, other: "FieldSpec") -> bool:
        """True when both specs describe the same concrete field (generator ignored)."""
        return self.p == other.p and self.modulus == other.modulus

    # -- conversions ----------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs) -> int:
        if len(coeffs) > self.e:
            raise FieldError(f"expected at most {self.e} coefficients, got {len(coeffs)}")
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.p + int(c) % self.p
        return out

    def code(self, a) -> int:
        """Element code of ``a`` (FieldElement, int code, or coefficient list)."""
        if isinstance(a, FieldElement):
            if not self.same_field(a.spec):
                raise FieldError("element belongs to a different field")
            return a.value
        if isinstance(a, (list, tuple)):
            return self.from_coeffs(a)
        a = int(a)
        if not 0 <= a < self.q:
            raise FieldError(f"element code {a} out of range for GF({self.q})")
        return a

    def __call__(self, a) -> "FieldElement":
        if isinstance(a, str):
            return FieldElement(self, self.parse(a))
        return FieldElement(self, self.code(a))

    def elements(self):
        return [FieldElement(self, a) for a in range(self.q)]

    @property
    def primitive(self) -> int:
        """The generator if one was given, else the smallest primitive element code."""
        return self.generator if self.generator is not None else self._prim

    # -- arithmetic on codes --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        if self.p == 2:
            return a ^ b
        return self._digit_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return (self.q - 1) // gcd(self._log[a], self.q - 1)

    def gpow(self, k: int) -> int:
        """The element g^k for the I/O generator (given or default)."""
        g = self.primitive
        return self.power(g, k)

    def glog(self, a: int) -> int:
        """Discrete log of a nonzero element to the I/O generator."""
        if a == 0:
            raise FieldError("zero has no logarithm")
        return self._glog[a]

    # -- Frobenius and trace --------------------------------------------------

    def frobenius(self, a: int, mu: int = 1) -> int:
        """a^(p^mu); mu is taken modulo e."""
        if a == 0:
            return 0
        mu %= self.e
        if mu == 0:
            return a
        return self._exp[(self._log[a] * self.p**mu) % (self.q - 1)]

    def _check_subfield_degree(self, upsilon: int) -> None:
        if upsilon < 1 or self.e % upsilon:
            raise FieldError(f"{upsilon} does not divide the extension degree {self.e}")

    def in_subfield(self, a: int, upsilon: int) -> bool:
        self._check_subfield_degree(upsilon)
        return self.frobenius(a, upsilon) == a

    def trace(self, a: int, upsilon: int) -> int:
        """Relative trace to GF(p^upsilon): a + s^u(a) + s^2u(a) + ... + s^(e-u)(a)."""
        self._check_subfield_degree(upsilon)
        total = 0
        for i in range(0, self.e, upsilon):
            total = self.add(total, self.frobenius(a, i))
        return total

    # -- text I/O ---------------------------------------------------------------

    def parse(self, text: str) -> int:
        """Parse "0", "1", "g^k", "g", "[a0,...,a_{e-1}]", or an integer below p."""
        s = text.strip().replace(" ", "")
        if not s:
            raise FieldError("empty field element")
        m = re.fullmatch(r"g(?:\^(-?\d+))?", s)
        if m:
            return self.gpow(int(m.group(1) or 1))
        if s.startswith("[") and s.endswith("]"):
            body = s[1:-1]
            parts = [x for x in body.split(",")] if body else []
            try:
                coeffs = [int(x) for x in parts]
            except ValueError:
                raise FieldError(f"bad coefficient form {text!r}") from None
            if len(coeffs) > self.e or any(not 0 <= c < self.p for c in coeffs):
                raise FieldError(f"bad coefficient form {text!r} for GF({self.q})")
            return self.from_coeffs(coeffs)
        if re.fullmatch(r"\d+", s):
            v = int(s)
            if v < self.p:
                return v  # prime subfield element v * 1
        raise FieldError(f"cannot parse field element {text!r}")

    def format(self, a: int) -> str:
        """Canonical text: power form when a generator was given, else coefficient form."""
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        if self.generator is not None:
            return f"g^{self.glog(a)}"
        if self.e == 1:
            return str(a)
        return "[" + ",".join(str(c) for c in self.to_coeffs(a)) + "]"

    def to_json(self) -> dict:
        out = {"p": self.p, "e": self.e, "modulus": list(self.modulus)}
        if self.generator is not None:
            out["generator"] = self.to_coeffs(self.generator)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        try:
            p = int(data["p"])
        except (KeyError, TypeError, ValueError):
            raise FieldError("field description needs an integer 'p'") from None
        return cls(p, int(data.get("e", 1)), data.get("modulus"), data.get("generator"))

    # -- subfield helpers ------------------------------------------------------

    @cached_property
    def _subfield_cache(self) -> dict:
        return {}

    def subfield(self, upsilon: int) -> list[int]:
        """Codes of GF(p^upsilon) inside this field, ascending."""
        self._check_subfield_degree(upsilon)
        cache = self._subfield_cache
        if upsilon not in cache:
            cache[upsilon] = [a for a in range(self.q) if self.in_subfield(a, upsilon)]
        return cache[upsilon]


class FieldElement:
    """An element of a :class:`FieldSpec`, supporting the usual operators."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        self.spec = spec
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if not self.spec.same_field(other.spec):
                raise FieldError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            # integers act through the prime subfield: n -> n * 1
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return FieldElement(self.spec, self.spec.div(b, self.value))

    def __pow__(self, k: int):
        return FieldElement(self.spec, self.spec.power(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.value))

    def frobenius(self, mu: int = 1) -> "FieldElement":
        return FieldElement(self.spec, self.spec.frobenius(self.value, mu))

    def in_subfield(self, upsilon: int) -> bool:
        return self.spec.in_subfield(self.value, upsilon)

    def trace(self, upsilon: int) -> "FieldElement":
        return FieldElement(self.spec, self.spec.trace(self.value, upsilon))

    @property
    def coeffs(self) -> list[int]:
        return self.spec.to_coeffs(self.value)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec.same_field(other.spec) and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.modulus, self.value))

    def __repr__(self):
        return f"FieldElement({self.spec.format(self.value)})"

    def __str__(self):
        return self.spec.format(self.value)


def frobenius(a: FieldElement, mu: int) -> FieldElement:
    return a.frobenius(mu)


def in_subfield(a: FieldElement, upsilon: int) -> bool:
    return a.in_subfield(upsilon)


def trace_to_subfield(a: FieldElement, upsilon: int) -> FieldElement:
    return a.trace(upsilon)
