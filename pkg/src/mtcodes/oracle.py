"""Brute-force verification layer over F_q^n.

Nothing here touches polynomial matrices beyond reading generator rows: codes
are expanded to F_q generator matrices by iterating the twisted shift, duals
are nullspaces, and equality is equality of reduced row echelon forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec

__all__ = [
    "ExpandedCode",
    "EnumerationTooLarge",
    "rref",
    "nullspace",
    "expand",
    "nullspace_dual",
    "intersect",
    "equal",
    "direct_sum",
    "min_distance",
    "galois_product",
]


class EnumerationTooLarge(ValueError):
    pass


def rref(field: FieldSpec, rows, n: int):
    """Reduced row echelon form of a list of code vectors; returns (rows, pivots)."""
    M = [list(r) for r in rows if any(r)]
    add, mul, inv, neg = field.add, field.mul, field.inv, field.neg
    pivots = []
    r = 0
    for c in range(n):
        if r >= len(M):
            break
        sel = next((i for i in range(r, len(M)) if M[i][c]), None)
        if sel is None:
            continue
        M[r], M[sel] = M[sel], M[r]
        lead = M[r][c]
        if lead != 1:
            s = inv(lead)
            M[r] = [mul(s, x) for x in M[r]]
        pr = M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = neg(M[i][c])
                Mi = M[i]
                M[i] = [add(a, mul(f, b)) if b else a for a, b in zip(Mi, pr)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in M[:r]], tuple(pivots)


def nullspace(field: FieldSpec, rows, n: int) -> list[tuple]:
    """Basis of {a : sum_i g_i a_i = 0 for every row g}."""
    R, pivots = rref(field, rows, n)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(R, pivots):
            v[p] = field.neg(row[f])
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class ExpandedCode:
    """A linear code over F_q given by a canonical RREF generator matrix."""

    field: FieldSpec
    n: int
    gen: tuple

    @classmethod
    def from_rows(cls, field: FieldSpec, n: int, rows) -> "ExpandedCode":
        R, _ = rref(field, rows, n)
        return cls(field, n, tuple(R))

    @property
    def k(self) -> int:
        return len(self.gen)

    def __eq__(self, other):
        if not isinstance(other, ExpandedCode):
            return NotImplemented
        return self.n == other.n and self.gen == other.gen and self.field.same_field(other.field)

    def __hash__(self):
        return hash((self.n, self.gen))

    def frobenius(self, mu: int) -> "ExpandedCode":
        frob = self.field.frobenius
        return ExpandedCode.from_rows(self.field, self.n, [[frob(a, mu) for a in r] for r in self.gen])

    def contains(self, v) -> bool:
        R, _ = rref(self.field, list(self.gen) + [list(v)], self.n)
        return len(R) == self.k

    def codewords(self):
        """Iterate over all q^k codewords (desk scale only)."""
        f = self.field
        for coeffs in itertools.product(range(f.q), repeat=self.k):
            v = [0] * self.n
            for c, g in zip(coeffs, self.gen):
                if c:
                    v = [f.add(a, f.mul(c, b)) for a, b in zip(v, g)]
            yield v


def _krylov_insert(field, basis, pivots, v):
    """Reduce v against an echelon basis (unit pivots, not fully reduced); append if new."""
    add, mul, neg = field.add, field.mul, field.neg
    v = list(v)
    for row, p in zip(basis, pivots):
        if v[p]:
            f = neg(v[p])
            v = [add(a, mul(f, b)) if b else a for a, b in zip(v, row)]
    lead = next((i for i, a in enumerate(v) if a), None)
    if lead is None:
        return False
    s = field.inv(v[lead])
    basis.append([mul(s, a) for a in v])
    pivots.append(lead)
    return True


def expand(code) -> ExpandedCode:
    """F_q generator matrix of an MT code: span of T^t(phi^-1(row_i)) over all t.

    Each row's shift orbit is followed until the new vector already lies in the
    span collected so far; the span is T-invariant from then on.
    """
    field, n = code.field, code.n
    basis, pivots = [], []
    for v in code.generator_vectors():
        while _krylov_insert(field, basis, pivots, v):
            v = code.shift(v)
    return ExpandedCode.from_rows(field, n, basis)


def _twist(field, rows, mu):
    frob = field.frobenius
    return [[frob(a, mu) for a in r] for r in rows]


def nullspace_dual(ec: ExpandedCode, kappa: int = 0, side: str = "euclidean") -> ExpandedCode:
    """Dual of a linear code for the kappa-Galois form <a, b>_k = sum a_i b_i^(p^k).

    right: {a : <c, a>_k = 0 for all c}, i.e. the nullspace of sigma^(e-k)(G);
    left:  {a : <a, c>_k = 0 for all c}, i.e. the nullspace of sigma^k(G).
    """
    f = ec.field
    if not 0 <= kappa < f.e:
        raise ValueError(f"kappa must satisfy 0 <= kappa < {f.e}")
    if side == "euclidean":
        rows = list(ec.gen)
    elif side == "right":
        rows = _twist(f, ec.gen, f.e - kappa)
    elif side == "left":
        rows = _twist(f, ec.gen, kappa)
    else:
        raise ValueError(f"unknown side {side!r}")
    return ExpandedCode.from_rows(f, ec.n, nullspace(f, rows, ec.n))


def _check_pair(e1: ExpandedCode, e2: ExpandedCode) -> None:
    if e1.n != e2.n:
        raise ValueError(f"length mismatch: {e1.n} vs {e2.n}")
    if not e1.field.same_field(e2.field):
        raise ValueError("codes over different fields")


def intersect(e1: ExpandedCode, e2: ExpandedCode) -> ExpandedCode:
    """V1 cap V2 as the nullspace of the stacked Euclidean duals."""
    _check_pair(e1, e2)
    f, n = e1.field, e1.n
    dual_rows = nullspace(f, e1.gen, n) + nullspace(f, e2.gen, n)
    return ExpandedCode.from_rows(f, n, nullspace(f, dual_rows, n))


def equal(e1: ExpandedCode, e2: ExpandedCode) -> bool:
    _check_pair(e1, e2)
    return e1.gen == e2.gen


def direct_sum(e1: ExpandedCode, e2: ExpandedCode) -> bool:
    _check_pair(e1, e2)
    return e1.k + e2.k == e1.n and intersect(e1, e2).k == 0


def galois_product(field: FieldSpec, a, b, kappa: int) -> int:
    """<a, b>_kappa = sum_i a_i sigma^kappa(b_i)."""
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = field.add(acc, field.mul(x, field.frobenius(y, kappa)))
    return acc


# -- minimum distance -------------------------------------------------------------


def _np_add(field: FieldSpec, a, b):
    if field.p == 2:
        return np.bitwise_xor(a, b)
    p = field.p
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    place = 1
    for _ in range(field.e):
        out += ((a // place % p + b // place % p) % p) * place
        place *= p
    return out


def _span_array(field: FieldSpec, rows: list, n: int) -> np.ndarray:
    span = np.zeros((1, n), dtype=np.int64)
    for g in rows:
        scaled = np.array([[field.mul(c, x) for x in g] for c in range(field.q)], dtype=np.int64)
        span = _np_add(field, span[None, :, :], scaled[:, None, :]).reshape(-1, n)
    return span


def min_distance(ec: ExpandedCode, cap: int = 2**24, inner_limit: int = 2**18) -> int:
    """Minimum Hamming weight of a nonzero codeword by full enumeration.

    Codewords are enumerated up to scalar multiples (leading RREF coefficient 1),
    which preserves weights.
    """
    f = ec.field
    q, k, n = f.q, ec.k, ec.n
    if k == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    if q**k > cap:
        raise EnumerationTooLarge(f"enumeration too large: q^k = {q}^{k} exceeds cap {cap}")
    gen = [list(g) for g in ec.gen]
    best = n
    for i in range(k):
        rest = gen[i + 1 :]
        r_inner = 0
        while r_inner < len(rest) and q ** (r_inner + 1) <= inner_limit:
            r_inner += 1
        outer, inner = rest[: len(rest) - r_inner], rest[len(rest) - r_inner :]
        inner_span = _span_array(f, inner, n)
        base = np.array(gen[i], dtype=np.int64)
        for coeffs in itertools.product(range(q), repeat=len(outer)):
            v = base
            for c, g in zip(coeffs, outer):
                if c:
                    v = _np_add(f, v, np.array([f.mul(c, x) for x in g], dtype=np.int64))
            words = _np_add(f, inner_span, v[None, :])
            w = int(np.count_nonzero(words, axis=1).min())
            if w < best:
                best = w
    return best
