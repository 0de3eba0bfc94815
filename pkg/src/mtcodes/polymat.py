"""Matrices over F_q[x]: Hermite normal form, determinants, triangular solves.

Text form (also the golden-file format): one row per line, entries separated
by `` | ``, each entry in the polynomial text form of :mod:`mtcodes.poly`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldError, FieldSpec
from .poly import Poly, parse_laurent, parse_poly

__all__ = [
    "PolyMatrix",
    "LaurentMatrix",
    "HNFResult",
    "NotInRowModuleError",
    "RankDeficientError",
    "hermite_normal_form",
    "determinant",
    "solve_left_factor",
    "frobenius_matrix",
    "trace_matrix",
    "poly_matrix",
]


class NotInRowModuleError(ArithmeticError):
    """Raised when a triangular solve hits a non-exact division."""


class RankDeficientError(ArithmeticError):
    """Raised for a singular square GPM stack."""


class PolyMatrix:
    """A rows x cols matrix of :class:`Poly` over one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, entries, cols: int | None = None):
        self.field = field
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        if cols is None:
            cols = len(self.entries[0]) if self.entries else 0
        self.cols = cols
        for row in self.entries:
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for p in row:
                if not isinstance(p, Poly):
                    raise TypeError("PolyMatrix entries must be Poly")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "PolyMatrix":
        z = Poly.zero(field)
        return cls(field, [[z] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "PolyMatrix":
        z, o = Poly.zero(field), Poly.one(field)
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def diag(cls, field: FieldSpec, polys) -> "PolyMatrix":
        polys = list(polys)
        z = Poly.zero(field)
        n = len(polys)
        return cls(field, [[polys[i] if i == j else z for j in range(n)] for i in range(n)], n)

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "PolyMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        rows = [[parse_poly(field, s) for s in ln.split("|")] for ln in lines]
        return cls(field, rows)

    # -- access ------------------------------------------------------------------

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> list[Poly]:
        return list(self.entries[i])

    def column(self, j: int) -> list[Poly]:
        return [row[j] for row in self.entries]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.entries))

    def __str__(self):
        return "\n".join(" | ".join(str(p) for p in row) for row in self.entries)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.field,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.field,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = Poly.zero(self.field)
        out = []
        for i in range(self.rows):
            r = self.entries[i]
            new = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = r[k]
                    if a.coeffs:
                        b = other.entries[k][j]
                        if b.coeffs:
                            acc = acc + a * b
                new.append(acc)
            out.append(new)
        return PolyMatrix(self.field, out, other.cols)

    __mul__ = __matmul__

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.field, [list(col) for col in zip(*self.entries)] if self.rows else [], self.rows
        )

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.field, [[fn(p) for p in row] for row in self.entries], self.cols)

    # -- predicates --------------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_upper_triangular(self) -> bool:
        return all(
            not self.entries[i][j].coeffs for i in range(self.rows) for j in range(min(i, self.cols))
        )

    def is_lower_triangular(self) -> bool:
        return all(
            not self.entries[i][j].coeffs
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def in_subfield(self, upsilon: int) -> bool:
        return all(p.in_subfield(upsilon) for row in self.entries for p in row)

    def is_zero(self) -> bool:
        return all(not p.coeffs for row in self.entries for p in row)

    def is_reduced(self) -> bool:
        """Upper triangular, monic nonzero diagonal, off-diagonal degrees below the diagonal."""
        if not self.is_square() or not self.is_upper_triangular():
            return False
        for i in range(self.rows):
            d = self.entries[i][i]
            if not d.is_monic():
                return False
            for h in range(i):
                if self.entries[h][i].degree >= d.degree:
                    return False
        return True

    def frobenius(self, mu: int) -> "PolyMatrix":
        return frobenius_matrix(self, mu)

    def trace(self, upsilon: int) -> "PolyMatrix":
        return trace_matrix(self, upsilon)

    def determinant(self) -> Poly:
        return determinant(self)

    def hnf(self) -> "HNFResult":
        return hermite_normal_form(self)


class LaurentMatrix:
    """Matrix of Laurent polynomials; used for the intermediate dual-construction steps."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries):
        self.field = field
        self.entries = [
            [p.to_laurent() if isinstance(p, Poly) else p for p in row] for row in entries
        ]

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "LaurentMatrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        return cls(field, [[parse_laurent(field, s) for s in ln.split("|")] for ln in lines])

    @property
    def shape(self):
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            other = LaurentMatrix(other.field, other.entries)
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __str__(self):
        return "\n".join(" | ".join(str(p) for p in row) for row in self.entries)

    def to_poly_matrix(self) -> PolyMatrix:
        return PolyMatrix(self.field, [[p.to_poly() for p in row] for row in self.entries])


@dataclass(frozen=True)
class HNFResult:
    """``hnf`` holds the ``rank`` nonzero rows of the echelon form; ``transform``
    is square and unimodular with ``transform @ input`` equal to ``hnf`` stacked
    over zero rows."""

    hnf: PolyMatrix
    transform: PolyMatrix | None
    rank: int
    pivots: tuple


def _row_axpy(dst: list, src: list, q: Poly) -> None:
    # dst -= q * src, in place
    for k, s in enumerate(src):
        if s.coeffs:
            dst[k] = dst[k] - q * s


def _hnf_rows(field: FieldSpec, rows: list[list[Poly]], cols: int, track: bool):
    n = len(rows)
    T = [list(r) for r in rows]
    U = PolyMatrix.identity(field, n).entries if track else None
    piv = 0
    pivots = []
    for j in range(cols):
        if piv >= n:
            break
        found = False
        while True:
            nonzero = [i for i in range(piv, n) if T[i][j].coeffs]
            if not nonzero:
                break
            found = True
            k = min(nonzero, key=lambda i: (T[i][j].degree, i))
            if k != piv:
                T[k], T[piv] = T[piv], T[k]
                if track:
                    U[k], U[piv] = U[piv], U[k]
                nonzero = [piv if i == k else (k if i == piv else i) for i in nonzero]
            p = T[piv][j]
            clean = True
            for i in nonzero:
                if i == piv:
                    continue
                q, r = divmod(T[i][j], p)
                _row_axpy(T[i], T[piv], q)
                if track:
                    _row_axpy(U[i], U[piv], q)
                if r.coeffs:
                    clean = False
            if clean:
                break
        if not found:
            continue
        lead = T[piv][j].lead
        if lead != 1:
            c = field.inv(lead)
            T[piv] = [x.scale(c) for x in T[piv]]
            if track:
                U[piv] = [x.scale(c) for x in U[piv]]
        p = T[piv][j]
        for h in range(piv):
            if T[h][j].degree >= p.degree:
                q = T[h][j] // p
                _row_axpy(T[h], T[piv], q)
                if track:
                    _row_axpy(U[h], U[piv], q)
        pivots.append(j)
        piv += 1
    return T, U, piv, pivots


def hermite_normal_form(m: PolyMatrix, transform: bool = True) -> HNFResult:
    """Row Hermite normal form over F_q[x].

    For a full-column-rank stack the result is square upper triangular with
    monic diagonal and every entry above a pivot of lower degree than the pivot.
    A singular square input raises :class:`RankDeficientError`.
    """
    T, U, rank, pivots = _hnf_rows(m.field, m.entries, m.cols, transform)
    if m.is_square() and rank < m.rows:
        raise RankDeficientError(f"square matrix of size {m.rows} has rank {rank}")
    hnf = PolyMatrix(m.field, T[:rank], m.cols)
    U_mat = PolyMatrix(m.field, U, m.rows) if transform else None
    return HNFResult(hnf, U_mat, rank, tuple(pivots))


def determinant(m: PolyMatrix) -> Poly:
    """Exact determinant (diagonal product for triangular input, else Bareiss)."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    field = m.field
    if n == 0:
        return Poly.one(field)
    if m.is_upper_triangular() or m.is_lower_triangular():
        out = Poly.one(field)
        for i in range(n):
            out = out * m.entries[i][i]
        return out
    M = [list(r) for r in m.entries]
    negate = False
    prev = Poly.one(field)
    for k in range(n - 1):
        if not M[k][k].coeffs:
            swap = next((i for i in range(k + 1, n) if M[i][k].coeffs), None)
            if swap is None:
                return Poly.zero(field)
            M[k], M[swap] = M[swap], M[k]
            negate = not negate
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return -det if negate else det


def solve_left_factor(g: PolyMatrix, d: PolyMatrix) -> PolyMatrix:
    """Solve A @ g = d for A, with g square upper triangular and nonsingular.

    Back-substitution column by column; any inexact division raises
    :class:`NotInRowModuleError`.
    """
    if not g.is_square() or d.cols != g.cols:
        raise ValueError(f"incompatible shapes {d.shape} and {g.shape}")
    if not g.is_upper_triangular():
        raise ValueError("left factor solve needs an upper triangular matrix")
    n = g.rows
    for i in range(n):
        if not g.entries[i][i].coeffs:
            raise ValueError("zero on the diagonal")
    field = g.field
    z = Poly.zero(field)
    out = []
    for i in range(d.rows):
        drow = d.entries[i]
        a = [z] * n
        for j in range(n):
            s = drow[j]
            for h in range(j):
                if a[h].coeffs and g.entries[h][j].coeffs:
                    s = s - a[h] * g.entries[h][j]
            q, r = divmod(s, g.entries[j][j])
            if r.coeffs:
                raise NotInRowModuleError("d not in row module of g")
            a[j] = q
        out.append(a)
    return PolyMatrix(field, out, n)


def frobenius_matrix(m: PolyMatrix, mu: int) -> PolyMatrix:
    """Entrywise, coefficientwise sigma^mu."""
    return m.map(lambda p: p.frobenius(mu))


def trace_matrix(m: PolyMatrix, upsilon: int) -> PolyMatrix:
    """Entrywise, coefficientwise relative trace onto GF(p^upsilon)."""
    if upsilon < 1 or m.field.e % upsilon:
        raise FieldError(f"{upsilon} does not divide the extension degree {m.field.e}")
    return m.map(lambda p: p.trace(upsilon))


def poly_matrix(field: FieldSpec, rows) -> PolyMatrix:
    """Build a matrix from nested lists of Poly or polynomial strings."""
    return PolyMatrix(
        field, [[parse_poly(field, p) if isinstance(p, str) else p for p in row] for row in rows]
    )
