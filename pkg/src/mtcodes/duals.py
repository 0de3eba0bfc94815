"""Euclidean and Galois duals of MT codes at the level of generator polynomial matrices.

Notation follows the library: ``G`` is the reduced GPM of a code, ``A`` its
companion (A G = D), ``H`` the reduced GPM of the Euclidean dual and ``B`` the
companion of ``H``. Frobenius powers are always taken modulo the extension
degree e.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .gf import FieldError
from .mtcode import InvariantError, MTCode
from .poly import Poly, laurent_shift_mul, reduce_in_quotient, subst_inverse
from .polymat import (
    LaurentMatrix,
    PolyMatrix,
    frobenius_matrix,
    hermite_normal_form,
    solve_left_factor,
    trace_matrix,
)

__all__ = [
    "PreconditionError",
    "EuclideanSteps",
    "DualCertificate",
    "parity_steps",
    "euclidean_dual",
    "qc_qt_gqc_dual_gpm",
    "frobenius_code",
    "right_galois_dual",
    "left_galois_dual",
    "galois_identities_check",
    "sigma_intersection",
    "two_sided_galois_dual",
    "trace_auxiliary_check",
    "direct_sum_check",
    "matrix_json",
    "dual_report",
]


class PreconditionError(ValueError):
    """Input parameters are outside the scope of the requested construction."""


# -- Euclidean dual -----------------------------------------------------------------


@dataclass(frozen=True)
class EuclideanSteps:
    """Intermediate matrices of the parity-check construction."""

    a_inv: LaurentMatrix  # A(1/x)
    a_star: LaurentMatrix  # entry (i, j) times x^(m_i - d_j)
    a_2star: PolyMatrix  # strictly upper entries reduced mod x^(m_i) - 1/lambda_i
    h: PolyMatrix  # transpose of a_2star
    h_reduced: PolyMatrix  # Hermite normal form of h


def _a_star(c: MTCode) -> tuple[LaurentMatrix, LaurentMatrix]:
    A = c.companion
    ell = c.ell
    d = [c.gpm[j, j].degree for j in range(ell)]
    inv = [[subst_inverse(A[i, j]) for j in range(ell)] for i in range(ell)]
    star = [
        [laurent_shift_mul(inv[i][j], c.block_lengths[i] - d[j]) for j in range(ell)]
        for i in range(ell)
    ]
    return LaurentMatrix(c.field, inv), LaurentMatrix(c.field, star)


def parity_steps(c: MTCode) -> EuclideanSteps:
    """Run the four-step construction of a GPM for the Euclidean dual."""
    f, ell = c.field, c.ell
    a_inv, a_star = _a_star(c)
    rows = []
    for i in range(ell):
        row = []
        for j in range(ell):
            entry = a_star[i, j]
            if i < j:
                row.append(reduce_in_quotient(entry, c.block_lengths[i], c.shifts[i]))
            else:
                # lower part is zero and the diagonal is already a polynomial
                if not entry.is_poly():
                    raise InvariantError("negative exponent on or below the diagonal of A*")
                row.append(entry.to_poly())
        rows.append(row)
    a_2star = PolyMatrix(f, rows, ell)
    h = a_2star.transpose()
    res = hermite_normal_form(h, transform=False)
    if res.rank != ell:
        raise InvariantError("parity matrix H is singular")
    return EuclideanSteps(a_inv, a_star, a_2star, h, res.hnf)


def _inverse_shifts(c: MTCode) -> tuple:
    return tuple(c.field.inv(s) for s in c.shifts)


def euclidean_dual(c: MTCode, steps: EuclideanSteps | None = None) -> MTCode:
    """The Euclidean dual, a Delta-MT code with Delta = (1/lambda_j)."""
    if steps is None:
        steps = parity_steps(c)
    dual = MTCode.from_generator_rows(c.field, steps.h.entries, _inverse_shifts(c), c.block_lengths)
    if dual.gpm != steps.h_reduced:
        raise InvariantError("HNF of H differs from the reduced GPM of the generated code")
    if dual.dimension() != c.n - c.dimension():
        raise InvariantError("dim C + dim C^perp != n")
    return dual


def qc_qt_gqc_dual_gpm(c: MTCode) -> PolyMatrix:
    """Parity matrix from the specialized QC / QT / GQC formulas.

    QT (equal block lengths, equal shifts, QC included):
        H = (A(1/x) diag[x^(m - d_j)] mod x^m - 1/lambda)^t
    GQC (all shifts 1): column j of H is row j of
        A(1/x) diag[x^(m_j - d_1), ..., x^(m_j - d_l)] mod x^(m_j) - 1.
    Every entry is reduced, diagonal included. The result generates the dual
    together with the submodule diag(x^(m_j) - 1/lambda_j).
    """
    f = c.field
    same_m = len(set(c.block_lengths)) == 1
    same_lam = len(set(c.shifts)) == 1
    all_one = all(s == 1 for s in c.shifts)
    if not ((same_m and same_lam) or all_one):
        raise PreconditionError("code is neither quasi-twisted nor generalized quasi-cyclic")
    _, a_star = _a_star(c)
    ell = c.ell
    rows = [
        [reduce_in_quotient(a_star[i, j], c.block_lengths[i], c.shifts[i]) for j in range(ell)]
        for i in range(ell)
    ]
    return PolyMatrix(f, rows, ell).transpose()


# -- Frobenius images and Galois duals ----------------------------------------------


def frobenius_code(c: MTCode, mu: int) -> MTCode:
    """sigma^mu(C): reduced GPM sigma^mu(G), companion sigma^mu(A), shifts sigma^mu(Lambda)."""
    mu %= c.field.e
    if mu == 0:
        return c
    f = c.field
    return MTCode(
        f,
        c.block_lengths,
        tuple(f.frobenius(s, mu) for s in c.shifts),
        frobenius_matrix(c.gpm, mu),
        frobenius_matrix(c.companion, mu),
    )


def _check_kappa(c: MTCode, kappa: int) -> None:
    if not 0 <= kappa < c.field.e:
        raise PreconditionError(f"kappa must satisfy 0 <= kappa < e = {c.field.e}")


def right_galois_dual(c: MTCode, kappa: int, dual: MTCode | None = None) -> MTCode:
    """{a : <c, a>_kappa = 0 for all c in C} = sigma^(e - kappa)(C^perp)."""
    _check_kappa(c, kappa)
    if dual is None:
        dual = euclidean_dual(c)
    return frobenius_code(dual, c.field.e - kappa)


def left_galois_dual(c: MTCode, kappa: int, dual: MTCode | None = None) -> MTCode:
    """{a : <a, c>_kappa = 0 for all c in C} = sigma^kappa(C^perp)."""
    _check_kappa(c, kappa)
    if dual is None:
        dual = euclidean_dual(c)
    return frobenius_code(dual, kappa)


def galois_identities_check(c: MTCode, kappa: int) -> dict[str, bool]:
    """Evaluate the six right/left dual identities as equalities of codes.

    Codes with equal shift constants are compared by reduced GPM; otherwise as
    subspaces of F_q^n. The extra item 6' (sigma^(2k) C = C iff G lies over
    F_(p^u), u = gcd(e, 2k)) is only reported when every shift lies in F_(p^u),
    which is where it holds.
    """
    _check_kappa(c, kappa)
    e = c.field.e
    perp = euclidean_dual(c)
    right = right_galois_dual(c, kappa, perp)
    left = left_galois_dual(c, kappa, perp)
    s_k = frobenius_code(c, kappa)
    s_ek = frobenius_code(c, e - kappa)
    s_2ek = frobenius_code(c, 2 * (e - kappa))
    s_2k = frobenius_code(c, 2 * kappa)
    same = MTCode.same_subspace
    fixed = same(s_2k, c)
    out = {
        "1: (C^R)_L = C": same(left_galois_dual(right, kappa), c),
        "2: (s^k C)^R = C^perp = s^k(C^R)": (
            same(right_galois_dual(s_k, kappa), perp) and same(frobenius_code(right, kappa), perp)
        ),
        "3: (s^(e-k) C)_L = C^perp = s^(e-k)(C_L)": (
            same(left_galois_dual(s_ek, kappa), perp) and same(frobenius_code(left, e - kappa), perp)
        ),
        "4: C^R = (s^(2(e-k)) C)_L = s^(2(e-k))(C_L)": (
            same(left_galois_dual(s_2ek, kappa), right) and same(frobenius_code(left, 2 * (e - kappa)), right)
        ),
        "5: C_L = (s^(2k) C)^R = s^(2k)(C^R)": (
            same(right_galois_dual(s_2k, kappa), left) and same(frobenius_code(right, 2 * kappa), left)
        ),
        "6: C^R = C_L iff s^(2k) C = C": same(right, left) == fixed,
    }
    ups = gcd(e, 2 * kappa)
    if all(c.field.in_subfield(s, ups) for s in c.shifts):
        out["6': s^(2k) C = C iff G over the fixed subfield"] = fixed == c.gpm.in_subfield(ups)
    return out


# -- two-sided duals ----------------------------------------------------------------


@dataclass(frozen=True)
class DualCertificate:
    """Witness (X, Y) for an intersection C^R cap sigma^(2 kappa tau)(C^R)."""

    x_matrix: PolyMatrix
    y_matrix: PolyMatrix
    gpm_product: PolyMatrix  # Y @ sigma^(e-kappa)(H)
    b_image: PolyMatrix = dc_field(repr=False)  # sigma^(e-kappa)(B)
    upsilon: int = 1
    kappa: int = 0
    tau: int = 1

    def failures(self) -> list[str]:
        """Names of violated certificate conditions (empty when valid)."""
        bad = []
        X, Y = self.x_matrix, self.y_matrix
        if X @ Y != self.b_image:
            bad.append("X @ Y != sigma^(e-kappa)(B)")
        if not self.gpm_product.in_subfield(self.upsilon):
            bad.append("Y @ sigma^(e-kappa)(H) not over the subfield")
        if not X.in_subfield(self.upsilon):
            bad.append("X not over the subfield")
        if not (X.is_upper_triangular() and Y.is_upper_triangular()):
            bad.append("X or Y not upper triangular")
        if not trace_auxiliary_check(self, self.b_image):
            bad.append("trace equation fails")
        return bad

    def dimension(self) -> int:
        return self.x_matrix.determinant().degree


def _check_two_sided(c: MTCode, kappa: int, tau: int) -> int:
    _check_kappa(c, kappa)
    e = c.field.e
    if tau < 1:
        raise PreconditionError("tau must be a positive integer")
    if (4 * kappa * tau) % e:
        raise PreconditionError(f"e does not divide 4*kappa*tau (e={e}, kappa={kappa}, tau={tau})")
    ups = gcd(e, 2 * kappa * tau)
    if not all(c.field.in_subfield(s, ups) for s in c.shifts):
        raise PreconditionError(f"shift constants not in F_(p^{ups})")
    return ups


def _module_intersection(p1: PolyMatrix, p2: PolyMatrix) -> list:
    """Rows generating rowspace(p1) cap rowspace(p2), both square nonsingular.

    The echelon form of [[p1, p1], [p2, 0]] has a lower-right block whose rows
    are exactly the vectors u p1 = -v p2.
    """
    f, ell = p1.field, p1.rows
    z = [Poly.zero(f)] * ell
    stack = [list(r) + list(r) for r in p1.entries] + [list(r) + z for r in p2.entries]
    res = hermite_normal_form(PolyMatrix(f, stack, 2 * ell), transform=False)
    if res.rank != 2 * ell:
        raise InvariantError("intersection stack lost rank")
    return [row[ell:] for row in res.hnf.entries[ell:]]


def sigma_intersection(c: MTCode, kappa: int, tau: int = 1) -> tuple[MTCode, DualCertificate]:
    """C^R cap sigma^(2 kappa tau)(C^R) with a certificate (X, Y).

    The intersection is computed as a module intersection of the two reduced
    GPMs sigma^(e-kappa)(H) and sigma^(kappa(2 tau - 1))(H). Y and X are then
    recovered by exact triangular division, so X is the companion of the
    intersection's reduced GPM.
    """
    ups = _check_two_sided(c, kappa, tau)
    e = c.field.e
    perp = euclidean_dual(c)
    right = frobenius_code(perp, e - kappa)
    other = frobenius_code(perp, kappa * (2 * tau - 1))
    rows = _module_intersection(right.gpm, other.gpm)
    inter = MTCode.from_generator_rows(c.field, rows, right.shifts, c.block_lengths)
    sH, sB = right.gpm, right.companion
    Y = solve_left_factor(sH, inter.gpm)
    X = solve_left_factor(Y, sB)
    if X != inter.companion:
        raise InvariantError("X is not the companion of the intersection GPM")
    cert = DualCertificate(X, Y, Y @ sH, sB, ups, kappa, tau)
    bad = cert.failures()
    if bad:
        raise InvariantError("certificate invalid: " + "; ".join(bad))
    if cert.dimension() != inter.dimension():
        raise InvariantError("deg det X differs from the intersection dimension")
    return inter, cert


def two_sided_galois_dual(c: MTCode, kappa: int) -> tuple[MTCode, DualCertificate]:
    """C^R cap C_L for the kappa-Galois form (requires e | 4 kappa and shifts in F_(p^gcd(e, 2 kappa)))."""
    return sigma_intersection(c, kappa, 1)


def trace_auxiliary_check(cert: DualCertificate, b_image: PolyMatrix) -> bool:
    """X Tr(Y) == Tr(b_image), traces taken onto F_(p^upsilon)."""
    try:
        lhs = cert.x_matrix @ trace_matrix(cert.y_matrix, cert.upsilon)
        rhs = trace_matrix(b_image, cert.upsilon)
    except FieldError:
        return False
    return lhs == rhs


def direct_sum_check(c: MTCode, kappa: int) -> bool:
    """True iff F_q^n is the direct sum of the right and left kappa-Galois duals (k = n/2)."""
    if 2 * c.dimension() != c.n:
        raise PreconditionError(f"direct sum test needs dimension n/2, got k={c.dimension()}, n={c.n}")
    inter, _ = two_sided_galois_dual(c, kappa)
    return inter.dimension() == 0


# -- reporting ----------------------------------------------------------------------


def matrix_json(m) -> list[list[str]]:
    return [[str(p) for p in row] for row in m.entries]


def dual_report(construction: str, code: MTCode, result: MTCode | None = None, **extra) -> dict:
    """Structured record of a construction, suitable for JSON output."""
    rep = {
        "construction": construction,
        "field": code.field.to_json(),
        "shifts": [code.field.format(s) for s in code.shifts],
        "block_lengths": list(code.block_lengths),
        "input_gpm": matrix_json(code.gpm),
        "input_dimension": code.dimension(),
    }
    if result is not None:
        rep["output_shifts"] = [code.field.format(s) for s in result.shifts]
        rep["output_gpm"] = matrix_json(result.gpm)
        rep["output_dimension"] = result.dimension()
    for key, val in extra.items():
        if isinstance(val, (PolyMatrix, LaurentMatrix)):
            val = matrix_json(val)
        elif isinstance(val, DualCertificate):
            val = {
                "X": matrix_json(val.x_matrix),
                "Y": matrix_json(val.y_matrix),
                "Y_sigmaH": matrix_json(val.gpm_product),
                "upsilon": val.upsilon,
                "kappa": val.kappa,
                "tau": val.tau,
                "deg_det_X": val.dimension(),
            }
        rep[key] = val
    return rep
