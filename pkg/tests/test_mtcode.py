import json
import random
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from mtcodes import oracle
from mtcodes.gf import FieldError
from mtcodes.mtcode import CodeSpec, MTCode, phi_decode, phi_encode, shift_T
from mtcodes.poly import Poly, parse_poly
from mtcodes.polymat import PolyMatrix, hermite_normal_form, poly_matrix

from helpers import FIELDS, FIXTURES, fixture_code, random_code, random_params, random_unimodular

F3 = FIELDS[3]
GF16 = FIELDS[16]

A11_F3 = "2+2x+x^4+x^5+x^6"

G_F16 = [
    ["g^5+g^10x+x^2", "0", "g^2+g^7x+g^12x^2+g^2x^3"],
    ["0", "1", "1+g x+g^5x^2+g^2x^3"],
    ["0", "0", "g^10+x^4"],
]
A_F16 = [
    ["g^10+x", "0", "g^2"],
    ["0", "g^10+x^4", "1+g x+g^5x^2+g^2x^3"],
    ["0", "0", "1"],
]


def companion_f3():
    # the off-diagonal entry is printed in factored form 2x(1+x)^4
    a = poly_matrix(F3, [[A11_F3, "0"], ["0", "1"]])
    a.entries[0][1] = Poly(F3, [0, 2]) * Poly(F3, [1, 1]) ** 4
    return a


def test_example_f3_dimension_and_companion():
    c = fixture_code("example_f3")
    assert c.dimension() == 6
    assert c.companion == companion_f3()
    assert c.companion @ c.gpm == c.D
    c.check()


def test_example_f16_gpm_and_companion():
    c = fixture_code("example_f16")
    assert c.gpm == poly_matrix(GF16, G_F16)
    assert c.companion == poly_matrix(GF16, A_F16)
    assert c.dimension() == 5


def test_fixture_gpm_is_already_reduced():
    # regenerating from the reduced GPM must not change it
    for name in ("example_f3", "example_f16", "example_f81"):
        c = fixture_code(name)
        assert MTCode.from_gpm(c.field, c.gpm, c.shifts, c.block_lengths) == c


def test_empty_rows_give_zero_code():
    c = fixture_code("empty_rows")
    assert c.gpm == c.D
    assert c.companion == PolyMatrix.identity(c.field, c.ell)
    assert c.dimension() == 0
    assert oracle.expand(c).k == 0


def test_standard_rows_give_whole_space():
    F = FIELDS[4]
    c = MTCode.from_generator_rows(F, [["1", "0"], ["0", "1"]], [1, F.gpow(1)], (3, 2))
    assert c.gpm == PolyMatrix.identity(F, 2)
    assert c.companion == c.D
    assert c.dimension() == c.n == 5


def test_phi_roundtrip_and_errors():
    rng = random.Random(1)
    F = FIELDS[9]
    for _ in range(50):
        ms = [rng.randint(1, 6) for _ in range(rng.randint(1, 4))]
        v = [rng.randrange(9) for _ in range(sum(ms))]
        assert phi_encode(phi_decode(v, ms, F), ms, F) == v
    with pytest.raises(ValueError):
        phi_decode([0, 1], (3,), F)
    with pytest.raises(ValueError):
        phi_encode([parse_poly(F3, "x^3")], (3,), F3)


def test_shift_is_multiplication_by_x():
    rng = random.Random(2)
    for _ in range(60):
        field, ms = random_params(rng)
        c = random_code(rng, field, ms)
        v = [rng.randrange(field.q) for _ in range(c.n)]
        xv = [Poly(field, [0, 1]) * p for p in c.phi_decode(v)]
        assert c.shift(v) == c.encode_row(xv)


def test_shift_period():
    F = FIELDS[4]
    shifts, ms = [1, F.gpow(1), F.gpow(2)], (2, 3, 1)
    period = lcm(*(F.order(s) * m for s, m in zip(shifts, ms)))
    v = list(range(4)) + [1, 2]
    w = v
    seen = []
    for _ in range(period):
        w = shift_T(w, shifts, ms, F)
        seen.append(w)
    assert seen[-1] == v
    assert v not in seen[:-1]


def test_codes_are_shift_invariant():
    rng = random.Random(3)
    for _ in range(40):
        field, ms = random_params(rng, max_m=4)
        c = random_code(rng, field, ms)
        for g in c.generator_vectors():
            assert c.contains(g)
            assert c.contains(c.shift(g))


def test_contains_agrees_with_oracle():
    rng = random.Random(4)
    for _ in range(40):
        field, ms = random_params(rng, fields=(2, 3, 4), max_ell=2, max_m=3)
        c = random_code(rng, field, ms)
        E = oracle.expand(c)
        for _ in range(10):
            v = [rng.randrange(field.q) for _ in range(c.n)]
            assert c.contains(v) == E.contains(v)


def test_subcode_relation():
    c = fixture_code("example_f16")
    zero = MTCode.from_generator_rows(GF16, [], c.shifts, c.block_lengths)
    # the zero code sits inside everything, with Y = companion
    assert zero.subcode_of(c) == c.companion
    whole = MTCode.from_generator_rows(GF16, PolyMatrix.identity(GF16, 3).entries, c.shifts, c.block_lengths)
    assert c.subcode_of(whole) == c.gpm
    assert whole.subcode_of(c) is None
    other = MTCode.from_generator_rows(GF16, [], c.shifts, (3, 4, 5))
    with pytest.raises(ValueError):
        c.subcode_of(other)


def test_idempotent_on_reduced_gpm():
    c = fixture_code("example_f3")
    again = MTCode.from_generator_rows(F3, c.gpm.entries, c.shifts, c.block_lengths)
    assert again.gpm == c.gpm and again.companion == c.companion


def test_qt_companion_commutes():
    # equal block lengths and shifts: A and G commute with D, so G A = D too
    rng = random.Random(5)
    for _ in range(60):
        field, _ = random_params(rng)
        m, ell = rng.randint(1, 4), rng.randint(1, 3)
        lam = rng.randrange(1, field.q)
        c = random_code(rng, field, [m] * ell, [lam] * ell)
        assert c.gpm @ c.companion == c.D


def test_invariant_under_unimodular_row_ops():
    rng = random.Random(6)
    for _ in range(20):
        field, ms = random_params(rng, max_ell=3, max_m=4)
        c = random_code(rng, field, ms)
        for _ in range(5):
            U = random_unimodular(rng, field, c.ell)
            d = MTCode.from_generator_rows(field, (U @ c.gpm).entries, c.shifts, c.block_lengths)
            assert d == c


def test_codespec_json_roundtrip():
    for name in ("example_f3", "example_f16", "example_f81", "empty_rows", "qc_f2"):
        raw = json.loads((FIXTURES / f"{name}.json").read_text())
        spec = CodeSpec.from_json(raw)
        again = CodeSpec.from_json(json.loads(json.dumps(spec.to_json())))
        assert again.build() == spec.build()
    c = fixture_code("example_f16")
    assert CodeSpec.from_json(c.to_codespec().to_json()).build() == c


def test_codespec_errors():
    base = json.loads((FIXTURES / "qc_f2.json").read_text())
    bad = dict(base)
    del bad["shifts"]
    with pytest.raises(ValueError):
        CodeSpec.from_json(bad)
    bad = dict(base, shifts=["1", "0"])
    with pytest.raises(FieldError):
        CodeSpec.from_json(bad)
    bad = dict(base, shifts=["1"])
    with pytest.raises(ValueError):
        CodeSpec.from_json(bad)
    with pytest.raises(ValueError):
        CodeSpec.from_json([1, 2])


def test_from_rows_validation():
    with pytest.raises(ValueError):
        MTCode.from_generator_rows(F3, [], [1], (0,))
    with pytest.raises(ValueError):
        MTCode.from_generator_rows(F3, [], [1, 1], (2,))
    with pytest.raises(ValueError):
        MTCode.from_generator_rows(F3, [["1"]], [1, 1], (2, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_dimension_matches_expansion(seed):
    rng = random.Random(seed)
    field, ms = random_params(rng, fields=(2, 3, 4), max_ell=3, max_m=4)
    c = random_code(rng, field, ms)
    c.check()
    E = oracle.expand(c)
    assert E.k == c.dimension()
    assert hermite_normal_form(c.gpm).hnf == c.gpm


def test_basis_vectors_span_the_code():
    rng = random.Random(7)
    for _ in range(40):
        field, ms = random_params(rng, fields=(2, 3, 4, 9), max_ell=3, max_m=4)
        c = random_code(rng, field, ms)
        basis = c.basis_vectors()
        assert len(basis) == c.dimension()
        assert oracle.ExpandedCode.from_rows(field, c.n, basis) == oracle.expand(c)


def test_same_subspace_across_shifts():
    F = FIELDS[8]
    I = PolyMatrix.identity(F, 2).entries
    a = MTCode.from_generator_rows(F, I, [1, F.gpow(2)], (2, 3))
    b = MTCode.from_generator_rows(F, I, [F.gpow(1), 1], (2, 3))
    assert a != b
    assert a.same_subspace(b)
    za = MTCode.from_generator_rows(F, [], [1, F.gpow(2)], (2, 3))
    zb = MTCode.from_generator_rows(F, [], [F.gpow(3), 1], (2, 3))
    assert za.same_subspace(zb)
    assert not za.same_subspace(a)
    rng = random.Random(8)
    for _ in range(30):
        c = random_code(rng, F, [2, 3])
        d = random_code(rng, F, [2, 3])
        expected = oracle.expand(c) == oracle.expand(d)
        assert c.same_subspace(d) == expected
