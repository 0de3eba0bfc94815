"""Shared helpers for the test suite: random codes and naive reference arithmetic."""

import random
from pathlib import Path

from mtcodes.gf import FieldSpec
from mtcodes.mtcode import MTCode, load_codespec
from mtcodes.poly import Poly
from mtcodes.polymat import PolyMatrix

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# small fields by q, with generator given so output uses power form
FIELDS = {
    2: FieldSpec(2),
    3: FieldSpec(3),
    4: FieldSpec(2, 2, generator=[0, 1]),
    5: FieldSpec(5),
    8: FieldSpec(2, 3, generator=[0, 1, 0]),
    9: FieldSpec(3, 2),
    16: FieldSpec(2, 4, generator=[0, 1, 0, 0]),
}


def fixture_code(name: str) -> MTCode:
    return load_codespec(FIXTURES / f"{name}.json").build()


def random_poly(rng, field, max_deg, monic=False):
    d = rng.randint(0, max_deg)
    coeffs = [rng.randrange(field.q) for _ in range(d + 1)]
    if monic:
        coeffs[-1] = 1
    return Poly(field, coeffs)


def random_factor(rng, field, k=None):
    """Product of a few random monic polynomials of degree 1 or 2."""
    f = Poly.one(field)
    for _ in range(rng.randint(0, 3) if k is None else k):
        f = f * random_poly(rng, field, 2, monic=True)
    return f


def random_rows(rng, field, block_lengths):
    """A random generator stack; rows are multiples of small factors so that
    proper subcodes (not just the whole space) show up often."""
    ell = len(block_lengths)
    rows = []
    for _ in range(rng.randint(0, ell + 1)):
        h = random_factor(rng, field)
        rows.append([h * random_poly(rng, field, m - 1) for m in block_lengths])
    return rows


def random_code(rng, field, block_lengths, shifts=None) -> MTCode:
    if shifts is None:
        shifts = [rng.randrange(1, field.q) for _ in block_lengths]
    return MTCode.from_generator_rows(field, random_rows(rng, field, block_lengths), shifts, block_lengths)


def random_params(rng, fields=(2, 3, 4, 8, 9), max_ell=3, max_m=5):
    q = rng.choice(fields)
    ell = rng.randint(1, max_ell)
    return FIELDS[q], [rng.randint(1, max_m) for _ in range(ell)]


def random_unimodular(rng, field, ell, steps=6) -> PolyMatrix:
    """Product of random elementary row operations over F_q[x]."""
    U = PolyMatrix.identity(field, ell)
    for _ in range(steps):
        E = PolyMatrix.identity(field, ell)
        kind = rng.randrange(3)
        if kind == 0 and ell > 1:
            i, j = rng.sample(range(ell), 2)
            E.entries[i][j] = random_poly(rng, field, 3)
        elif kind == 1:
            i = rng.randrange(ell)
            E.entries[i][i] = Poly.const(field, rng.randrange(1, field.q))
        elif ell > 1:
            i, j = rng.sample(range(ell), 2)
            E.entries[i], E.entries[j] = E.entries[j], E.entries[i]
        U = E @ U
    return U


def naive_mul(a, b, modulus, p):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    e = len(modulus) - 1
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for t in range(e + 1):
                prod[k - e + t] = (prod[k - e + t] - c * modulus[t]) % p
    out = prod[:e] + [0] * max(0, e - len(prod))
    return out
