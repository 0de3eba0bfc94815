"""Multi-twisted codes as F_q[x]-submodules given by a reduced GPM.

A Lambda-MT code of block lengths (m_1, ..., m_l) is a submodule of F_q[x]^l
containing diag(x^{m_j} - lambda_j) F_q[x]^l. It is stored through its unique
reduced generator polynomial matrix (Hermite normal form) ``gpm`` together with
the companion matrix ``companion`` solving ``companion @ gpm = D``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .gf import FieldElement, FieldError, FieldSpec
from .poly import Poly, parse_poly
from .polymat import (
    NotInRowModuleError,
    PolyMatrix,
    hermite_normal_form,
    solve_left_factor,
)

__all__ = [
    "MTCode",
    "CodeSpec",
    "InvariantError",
    "phi_decode",
    "phi_encode",
    "shift_T",
    "load_codespec",
]


class InvariantError(AssertionError):
    """An internal consistency check failed; always indicates a bug."""


def _shift_codes(field: FieldSpec, shifts) -> tuple[int, ...]:
    out = []
    for s in shifts:
        if isinstance(s, FieldElement):
            c = field.code(s)
        elif isinstance(s, str):
            c = field.parse(s)
        else:
            c = field.code(s)
        if c == 0:
            raise FieldError("shift constants must be nonzero")
        out.append(c)
    return tuple(out)


def phi_decode(v, block_lengths, field: FieldSpec) -> list[Poly]:
    """Split a length-n vector of element codes into block polynomials."""
    n = sum(block_lengths)
    v = [field.code(a) for a in v]
    if len(v) != n:
        raise ValueError(f"vector of length {len(v)} does not match n={n}")
    out, pos = [], 0
    for m in block_lengths:
        out.append(Poly._raw(field, v[pos : pos + m]))
        pos += m
    return out


def phi_encode(pv, block_lengths, field: FieldSpec) -> list[int]:
    """Inverse of :func:`phi_decode`; component j must have degree < m_j."""
    if len(pv) != len(block_lengths):
        raise ValueError("polynomial vector length does not match the index")
    out = []
    for p, m in zip(pv, block_lengths):
        if p.degree >= m:
            raise ValueError(f"component of degree {p.degree} does not fit block length {m}")
        out.extend(list(p.coeffs) + [0] * (m - len(p.coeffs)))
    return out


def shift_T(v, shifts, block_lengths, field: FieldSpec) -> list[int]:
    """Blockwise twisted rotation (a_0..a_{m-1}) -> (lam*a_{m-1}, a_0, ..., a_{m-2})."""
    v = [field.code(a) for a in v]
    if len(v) != sum(block_lengths):
        raise ValueError("vector length does not match the block lengths")
    out, pos = [], 0
    for lam, m in zip(shifts, block_lengths):
        block = v[pos : pos + m]
        out.append(field.mul(lam, block[-1]))
        out.extend(block[:-1])
        pos += m
    return out


@dataclass(frozen=True, eq=False)
class MTCode:
    field: FieldSpec
    block_lengths: tuple
    shifts: tuple
    gpm: PolyMatrix
    companion: PolyMatrix = dc_field(repr=False)

    # -- construction -----------------------------------------------------------

    @classmethod
    def from_generator_rows(cls, field: FieldSpec, rows, shifts, block_lengths) -> "MTCode":
        """Smallest MT code containing the given polynomial row vectors."""
        block_lengths = tuple(int(m) for m in block_lengths)
        if any(m < 1 for m in block_lengths):
            raise ValueError("block lengths must be positive")
        shifts = _shift_codes(field, shifts)
        ell = len(block_lengths)
        if len(shifts) != ell:
            raise ValueError("need one shift constant per block")
        stack = []
        for row in rows:
            row = [parse_poly(field, p) if isinstance(p, str) else p for p in row]
            if len(row) != ell:
                raise ValueError(f"generator row has {len(row)} entries, expected {ell}")
            stack.append([p.mod_binomial(m, lam) for p, m, lam in zip(row, block_lengths, shifts)])
        D = cls._diag(field, shifts, block_lengths)
        stack.extend(D.entries)
        res = hermite_normal_form(PolyMatrix(field, stack, ell), transform=False)
        if res.rank != ell:
            raise InvariantError("GPM stack containing D must have full rank")
        gpm = res.hnf
        return cls(field, block_lengths, shifts, gpm, solve_left_factor(gpm, D))

    @classmethod
    def from_gpm(cls, field: FieldSpec, gpm: PolyMatrix, shifts, block_lengths) -> "MTCode":
        """Code generated by the rows of ``gpm`` (re-reduced if needed)."""
        return cls.from_generator_rows(field, gpm.entries, shifts, block_lengths)

    @staticmethod
    def _diag(field, shifts, block_lengths) -> PolyMatrix:
        return PolyMatrix.diag(field, [Poly.binomial(field, m, lam) for m, lam in zip(block_lengths, shifts)])

    # -- basic data -------------------------------------------------------------

    @property
    def ell(self) -> int:
        return len(self.block_lengths)

    @property
    def n(self) -> int:
        return sum(self.block_lengths)

    @property
    def D(self) -> PolyMatrix:
        return self._diag(self.field, self.shifts, self.block_lengths)

    @property
    def shift_elements(self) -> list[FieldElement]:
        return [FieldElement(self.field, s) for s in self.shifts]

    def dimension(self) -> int:
        """k = sum(m_j - deg g_jj), cross-checked against deg det(companion)."""
        k = sum(m - self.gpm[j, j].degree for j, m in enumerate(self.block_lengths))
        det_deg = self.companion.determinant().degree
        if det_deg != k:
            raise InvariantError(f"dimension formulas disagree: {k} vs deg det A = {det_deg}")
        return k

    def __eq__(self, other):
        if not isinstance(other, MTCode):
            return NotImplemented
        return (
            self.field.same_field(other.field)
            and self.block_lengths == other.block_lengths
            and self.shifts == other.shifts
            and self.gpm == other.gpm
        )

    def __hash__(self):
        return hash((self.block_lengths, self.shifts, self.gpm))

    def __repr__(self):
        shifts = ", ".join(self.field.format(s) for s in self.shifts)
        return f"MTCode(shifts=({shifts}), block_lengths={self.block_lengths}, k={self.dimension()})"

    def check(self) -> None:
        """Raise InvariantError unless the stored matrices satisfy all structural invariants."""
        if not self.gpm.is_reduced():
            raise InvariantError("gpm is not in reduced form")
        if self.companion @ self.gpm != self.D:
            raise InvariantError("companion @ gpm != D")
        for j, m in enumerate(self.block_lengths):
            if self.gpm[j, j].degree > m:
                raise InvariantError("diagonal degree exceeds block length")
            for i in range(j):
                if self.gpm[i, j].degree >= m:
                    raise InvariantError("off-diagonal degree exceeds block length")
        self.dimension()

    # -- vectors --------------------------------------------------------------

    def phi_decode(self, v) -> list[Poly]:
        return phi_decode(v, self.block_lengths, self.field)

    def phi_encode(self, pv) -> list[int]:
        return phi_encode(pv, self.block_lengths, self.field)

    def encode_row(self, pv) -> list[int]:
        """Reduce an arbitrary polynomial vector into the quotient rings and flatten it."""
        red = [p.mod_binomial(m, lam) for p, m, lam in zip(pv, self.block_lengths, self.shifts)]
        return self.phi_encode(red)

    def shift(self, v) -> list[int]:
        return shift_T(v, self.shifts, self.block_lengths, self.field)

    def generator_vectors(self) -> list[list[int]]:
        return [self.encode_row(self.gpm.row(i)) for i in range(self.ell)]

    def contains(self, v) -> bool:
        """Membership of a vector (element codes) by back-substitution against the gpm rows."""
        w = self.phi_decode(v)
        for j in range(self.ell):
            q, r = divmod(w[j], self.gpm[j, j])
            if r.coeffs:
                return False
            if q.coeffs:
                row = self.gpm.row(j)
                w = [a - q * b if b.coeffs else a for a, b in zip(w, row)]
        return True

    def contains_poly_vector(self, pv) -> bool:
        return self.contains(self.encode_row(pv))

    def basis_vectors(self) -> list[list[int]]:
        """F_q basis {x^t row_i(G) : 0 <= t < m_i - deg g_ii}, block triangular so independent."""
        out = []
        for i, m in enumerate(self.block_lengths):
            row = self.gpm.row(i)
            for t in range(m - self.gpm[i, i].degree):
                out.append(self.encode_row([p.shift(t) for p in row]))
        return out

    def same_subspace(self, other: "MTCode") -> bool:
        """Equality as subsets of F_q^n, also for codes with different shift constants."""
        if self.block_lengths != other.block_lengths:
            return False
        if self.shifts == other.shifts:
            return self.gpm == other.gpm
        if self.dimension() != other.dimension():
            return False
        return all(other.contains(v) for v in self.basis_vectors())

    def subcode_of(self, other: "MTCode") -> PolyMatrix | None:
        """Y with self.gpm = Y @ other.gpm when self is a subcode of other, else None."""
        if self.block_lengths != other.block_lengths or self.shifts != other.shifts:
            raise ValueError("codes have different block lengths or shift constants")
        try:
            return solve_left_factor(other.gpm, self.gpm)
        except NotInRowModuleError:
            return None

    # -- serialization ----------------------------------------------------------

    def to_codespec(self) -> "CodeSpec":
        return CodeSpec(
            self.field,
            tuple(self.shifts),
            self.block_lengths,
            [list(r) for r in self.gpm.entries],
        )


@dataclass
class CodeSpec:
    """Serializable description of an MT code: field, shifts, block lengths, generator rows."""

    field: FieldSpec
    shifts: tuple
    block_lengths: tuple
    rows: list
    name: str | None = None

    @classmethod
    def from_json(cls, data: dict) -> "CodeSpec":
        if not isinstance(data, dict):
            raise ValueError("code spec must be a JSON object")
        try:
            field = FieldSpec.from_json(data["field"])
            shifts = _shift_codes(field, data["shifts"])
            block_lengths = tuple(int(m) for m in data["block_lengths"])
            rows = [[parse_poly(field, str(p)) for p in row] for row in data.get("rows", [])]
        except KeyError as exc:
            raise ValueError(f"code spec is missing {exc}") from None
        if len(shifts) != len(block_lengths):
            raise ValueError("shifts and block_lengths differ in length")
        return cls(field, shifts, block_lengths, rows, data.get("name"))

    def to_json(self) -> dict:
        out = {}
        if self.name:
            out["name"] = self.name
        out["field"] = self.field.to_json()
        out["shifts"] = [self.field.format(s) for s in self.shifts]
        out["block_lengths"] = list(self.block_lengths)
        out["rows"] = [[str(p) for p in row] for row in self.rows]
        return out

    def build(self) -> MTCode:
        return MTCode.from_generator_rows(self.field, self.rows, self.shifts, self.block_lengths)


def load_codespec(path) -> CodeSpec:
    with open(Path(path), encoding="utf-8") as fh:
        return CodeSpec.from_json(json.load(fh))
