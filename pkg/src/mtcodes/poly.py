"""Dense univariate and Laurent polynomials over a :class:`~mtcodes.gf.FieldSpec`.

Coefficients are stored as ascending tuples of element codes. The zero
polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import re

from .gf import FieldElement, FieldError, FieldSpec

__all__ = [
    "NEG_INF",
    "Poly",
    "LaurentPoly",
    "subst_inverse",
    "laurent_shift_mul",
    "reduce_in_quotient",
    "reduce_mod_binomial",
    "parse_poly",
    "parse_laurent",
]

NEG_INF = float("-inf")


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _codes(field: FieldSpec, coeffs) -> list[int]:
    return [c.value if isinstance(c, FieldElement) else field.code(c) for c in coeffs]


class Poly:
    """A polynomial in F_q[x]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs=()):
        self.field = field
        self.coeffs = _trim(_codes(field, coeffs))

    @classmethod
    def _raw(cls, field: FieldSpec, coeffs) -> "Poly":
        # trusted constructor: coeffs already codes
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = _trim(coeffs)
        return obj

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls._raw(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls._raw(field, (1,))

    @classmethod
    def const(cls, field: FieldSpec, c) -> "Poly":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldSpec, k: int, c=1) -> "Poly":
        c = field.code(c) if not isinstance(c, FieldElement) else c.value
        return cls._raw(field, [0] * k + [c])

    @classmethod
    def binomial(cls, field: FieldSpec, m: int, c) -> "Poly":
        """x^m - c."""
        c = c.value if isinstance(c, FieldElement) else field.code(c)
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        coeffs[0] = field.sub(coeffs[0], c)
        return cls._raw(field, coeffs)

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Poly":
        return parse_poly(field, text)

    # -- basic properties -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.coeffs]

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and self.field.same_field(other.field)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return format_terms(self.field, 0, self.coeffs)

    # -- ring operations --------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field is not self.field and not self.field.same_field(other.field):
            raise FieldError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly._raw(self.field, out)

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly._raw(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, FieldElement):
            return self.scale(other.value)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(self.field, ())
        f = self.field
        mul, add = f.mul, f.add
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(f, out)

    def scale(self, c: int) -> "Poly":
        """Multiply by the field element with code ``c``."""
        if c == 0:
            return Poly._raw(self.field, ())
        mul = self.field.mul
        return Poly._raw(self.field, [mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise ValueError("use LaurentPoly for negative shifts")
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __divmod__(self, other: "Poly"):
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        mul, sub = f.mul, f.sub
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Poly._raw(f, ()), Poly._raw(f, rem)
        inv_lead = f.inv(other.coeffs[-1])
        b = other.coeffs
        quo = [0] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db]
            if c == 0:
                continue
            c = mul(c, inv_lead)
            quo[k] = c
            for i, y in enumerate(b):
                if y:
                    rem[k + i] = sub(rem[k + i], mul(c, y))
        return Poly._raw(f, quo), Poly._raw(f, rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "Poly") -> bool:
        """True when self divides other."""
        if not self.coeffs:
            return not other.coeffs
        return not (other % self).coeffs

    def __pow__(self, k: int) -> "Poly":
        out = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- field automorphisms ------------------------------------------------

    def frobenius(self, mu: int) -> "Poly":
        frob = self.field.frobenius
        return Poly._raw(self.field, [frob(c, mu) for c in self.coeffs])

    def trace(self, upsilon: int) -> "Poly":
        tr = self.field.trace
        return Poly._raw(self.field, [tr(c, upsilon) for c in self.coeffs])

    def in_subfield(self, upsilon: int) -> bool:
        test = self.field.in_subfield
        return all(test(c, upsilon) for c in self.coeffs)

    # -- reductions -------------------------------------------------------------

    def mod_binomial(self, m: int, c: int) -> "Poly":
        """Reduce modulo x^m - c (c an element code)."""
        return LaurentPoly(self.field, 0, self.coeffs).mod_binomial(m, c)

    def to_laurent(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.field, 0, self.coeffs)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic generator of the ideal (f, g); gcd(0, 0) = 0."""
    while g.coeffs:
        f, g = g, f % g
    return f.monic()


def xgcd(f: Poly, g: Poly):
    """Return (d, s, t) with d = s f + t g and d the monic gcd."""
    field = f.field
    r0, r1 = f, g
    s0, s1 = Poly.one(field), Poly.zero(field)
    t0, t1 = Poly.zero(field), Poly.one(field)
    while r1.coeffs:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.coeffs:
        return r0, s0, t0
    c = field.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


class LaurentPoly:
    """A Laurent polynomial sum_i c_i x^(low+i) over F_q."""

    __slots__ = ("field", "low", "coeffs")

    def __init__(self, field: FieldSpec, low: int, coeffs=()):
        self.field = field
        codes = _codes(field, coeffs)
        self._set(low, codes)

    @classmethod
    def _raw(cls, field, low, coeffs) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj._set(low, list(coeffs))
        return obj

    def _set(self, low, codes):
        start = 0
        while start < len(codes) and codes[start] == 0:
            start += 1
        codes = _trim(codes[start:])
        self.low = low + start if codes else 0
        self.coeffs = codes

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "LaurentPoly":
        return parse_laurent(field, text)

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i, c

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = other.to_laurent()
        if isinstance(other, LaurentPoly):
            return (
                self.low == other.low
                and self.coeffs == other.coeffs
                and self.field.same_field(other.field)
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_terms(self.field, self.low, self.coeffs)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, Poly):
            other = other.to_laurent()
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        add = self.field.add
        for t, c in self.terms():
            out[t - low] = add(out[t - low], c)
        for t, c in other.terms():
            out[t - low] = add(out[t - low], c)
        return LaurentPoly._raw(self.field, low, out)

    def __neg__(self):
        neg = self.field.neg
        return LaurentPoly._raw(self.field, self.low, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, Poly):
            other = other.to_laurent()
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, Poly):
            other = other.to_laurent()
        prod = Poly._raw(self.field, self.coeffs) * Poly._raw(self.field, other.coeffs)
        return LaurentPoly._raw(self.field, self.low + other.low, prod.coeffs)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k for any integer k."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.field, self.low + k, self.coeffs)

    def is_poly(self) -> bool:
        return not self.coeffs or self.low >= 0

    def to_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self} has negative exponents")
        if not self.coeffs:
            return Poly.zero(self.field)
        return Poly._raw(self.field, (0,) * self.low + self.coeffs)

    def subst_inverse(self) -> "LaurentPoly":
        """Replace x by 1/x."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.field, -self.high, self.coeffs[::-1])

    def frobenius(self, mu: int) -> "LaurentPoly":
        frob = self.field.frobenius
        return LaurentPoly._raw(self.field, self.low, [frob(c, mu) for c in self.coeffs])

    def mod_binomial(self, m: int, c: int) -> Poly:
        """Canonical representative modulo x^m - c: x^t -> c^w x^(t - w m), 0 <= t - w m < m."""
        if m < 1:
            raise ValueError("modulus degree must be positive")
        f = self.field
        if c == 0:
            raise FieldError("binomial constant must be nonzero")
        out = [0] * m
        for t, a in self.terms():
            w, r = divmod(t, m)
            out[r] = f.add(out[r], f.mul(a, f.power(c, w)))
        return Poly._raw(f, out)


def subst_inverse(f) -> LaurentPoly:
    """f(1/x) as a Laurent polynomial."""
    if isinstance(f, Poly):
        f = f.to_laurent()
    return f.subst_inverse()


def laurent_shift_mul(f, k: int) -> LaurentPoly:
    """x^k * f."""
    if isinstance(f, Poly):
        f = f.to_laurent()
    return f.shift(k)


def reduce_mod_binomial(f, m: int, c) -> Poly:
    """Representative of f in F_q[x]/(x^m - c), of degree < m."""
    if isinstance(f, Poly):
        f = f.to_laurent()
    code = c.value if isinstance(c, FieldElement) else f.field.code(c)
    return f.mod_binomial(m, code)


def reduce_in_quotient(f, m: int, lam) -> Poly:
    """Reduce f modulo x^m - 1/lam, i.e. every x^(-mu) becomes lam * x^(m - mu).

    Negative exponents of any size are handled by repeated wrapping.
    """
    if isinstance(f, Poly):
        f = f.to_laurent()
    field = f.field
    code = lam.value if isinstance(lam, FieldElement) else field.code(lam)
    if code == 0:
        raise FieldError("shift constant must be nonzero")
    return f.mod_binomial(m, field.inv(code))


# -- text form ----------------------------------------------------------------


def format_terms(field: FieldSpec, low: int, coeffs) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        t = low + i
        cs = field.format(c)
        if t == 0:
            terms.append(cs)
            continue
        xs = "x" if t == 1 else f"x^{t}"
        terms.append(xs if c == 1 else f"{cs}*{xs}")
    return " + ".join(terms) if terms else "0"


_SPLIT = re.compile(r"(?<!\^)(?<!,)(?<!\[)([+-])")
_TERM = re.compile(
    r"^(?P<coef>g(?:\^-?\d+)?|\[[\d,]*\]|\d+)?\*?(?P<x>x(?:\^(?P<exp>-?\d+))?)?$"
)


def _parse_terms(field: FieldSpec, text: str) -> dict[int, int]:
    s = text.replace(" ", "")
    if not s:
        raise FieldError("empty polynomial")
    pieces = _SPLIT.split(s)
    sign = "+"
    acc: dict[int, int] = {}
    if pieces and pieces[0] == "":
        pieces = pieces[1:]
    else:
        pieces = ["+"] + pieces
    for k in range(0, len(pieces), 2):
        sign, term = pieces[k], pieces[k + 1]
        m = _TERM.match(term)
        if not term or not m or (m.group("coef") is None and m.group("x") is None):
            raise FieldError(f"cannot parse polynomial term {term!r} in {text!r}")
        coef = field.parse(m.group("coef")) if m.group("coef") else 1
        if m.group("x"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        if sign == "-":
            coef = field.neg(coef)
        acc[exp] = field.add(acc.get(exp, 0), coef)
    return acc


def parse_laurent(field: FieldSpec, text: str) -> LaurentPoly:
    acc = _parse_terms(field, text)
    acc = {t: c for t, c in acc.items() if c}
    if not acc:
        return LaurentPoly(field, 0, ())
    low, high = min(acc), max(acc)
    coeffs = [0] * (high - low + 1)
    for t, c in acc.items():
        coeffs[t - low] = c
    return LaurentPoly._raw(field, low, coeffs)


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """Parse "c0 + c1*x + c2*x^2" (any term order; "-" negates the next term)."""
    lp = parse_laurent(field, text)
    if not lp.is_poly():
        raise FieldError(f"negative exponent in polynomial {text!r}")
    return lp.to_poly()
