import random

import pytest
from hypothesis import given, settings, strategies as st

from mtcodes import oracle
from mtcodes.duals import euclidean_dual, frobenius_code, left_galois_dual, right_galois_dual
from mtcodes.mtcode import MTCode
from mtcodes.polymat import PolyMatrix

from helpers import FIELDS, fixture_code, random_code, random_params


def naive_min_distance(ec):
    return min(sum(1 for a in v if a) for v in ec.codewords() if any(v))


def test_rref_is_canonical():
    F = FIELDS[3]
    rows = [[1, 2, 0, 1], [2, 1, 0, 2], [0, 0, 1, 1]]
    r, piv = oracle.rref(F, rows, 4)
    assert tuple(piv) == (0, 2)
    assert len(r) == 2
    shuffled, _ = oracle.rref(F, [rows[2], [2, 1, 2, 1]], 4)
    assert shuffled == r


def test_nullspace_is_orthogonal():
    rng = random.Random(1)
    for q in (2, 3, 4, 9):
        F = FIELDS[q]
        for _ in range(20):
            n = rng.randint(1, 7)
            rows = [[rng.randrange(q) for _ in range(n)] for _ in range(rng.randint(0, n))]
            ns = oracle.nullspace(F, rows, n)
            rank = len(oracle.rref(F, rows, n)[0])
            assert len(ns) == n - rank
            for a in ns:
                for r in rows:
                    assert oracle.galois_product(F, r, a, 0) == 0


def test_zero_code_expands_to_nothing():
    c = fixture_code("empty_rows")
    E = oracle.expand(c)
    assert E.k == 0 and E.gen == ()
    assert oracle.nullspace_dual(E).k == c.n


def test_example_f3_rank():
    c = fixture_code("example_f3")
    assert oracle.expand(c).k == 6


def test_example_f3_nullspace_matches_dual():
    c = fixture_code("example_f3")
    E = oracle.expand(c)
    assert oracle.equal(oracle.nullspace_dual(E), oracle.expand(euclidean_dual(c)))


def test_example_f16_distance():
    E = oracle.expand(fixture_code("example_f16"))
    assert E.k == 5
    assert oracle.min_distance(E) == 5


def test_whole_space_distance_one():
    F = FIELDS[4]
    c = MTCode.from_generator_rows(F, PolyMatrix.identity(F, 2).entries, [1, 1], (2, 2))
    E = oracle.expand(c)
    assert E.k == 4
    assert oracle.min_distance(E) == 1
    assert oracle.nullspace_dual(E).k == 0


def test_min_distance_errors():
    E = oracle.expand(fixture_code("empty_rows"))
    with pytest.raises(ValueError):
        oracle.min_distance(E)
    E = oracle.expand(fixture_code("example_f16"))
    with pytest.raises(oracle.EnumerationTooLarge, match="enumeration too large"):
        oracle.min_distance(E, cap=16**4)


def test_min_distance_matches_naive():
    rng = random.Random(2)
    for _ in range(40):
        field, ms = random_params(rng, fields=(2, 3, 4, 9), max_ell=2, max_m=4)
        E = oracle.expand(random_code(rng, field, ms))
        if E.k == 0 or field.q**E.k > 5000:
            continue
        # a tiny inner limit forces the outer loop to do real work as well
        assert oracle.min_distance(E, inner_limit=field.q) == naive_min_distance(E)
        assert oracle.min_distance(E) == naive_min_distance(E)


def test_intersect_and_direct_sum_basics():
    rng = random.Random(3)
    for _ in range(20):
        field, ms = random_params(rng, fields=(2, 3, 4), max_ell=2, max_m=4)
        E = oracle.expand(random_code(rng, field, ms))
        assert oracle.intersect(E, E) == E
        perp = oracle.nullspace_dual(E)
        assert oracle.intersect(E, perp).k <= min(E.k, perp.k)
    F = FIELDS[2]
    a = oracle.ExpandedCode.from_rows(F, 2, [[1, 0]])
    b = oracle.ExpandedCode.from_rows(F, 2, [[0, 1]])
    assert oracle.direct_sum(a, b)
    assert not oracle.direct_sum(a, a)
    with pytest.raises(ValueError):
        oracle.intersect(a, oracle.ExpandedCode.from_rows(F, 3, []))


def test_bad_kappa_and_side():
    E = oracle.expand(fixture_code("example_f16"))
    with pytest.raises(ValueError):
        oracle.nullspace_dual(E, 4, "right")
    with pytest.raises(ValueError):
        oracle.nullspace_dual(E, 1, "up")


def test_example_f16_sided_duals_intersect_in_dimension_two():
    c = fixture_code("example_f16")
    E = oracle.expand(c)
    right = oracle.nullspace_dual(E, 3, "right")
    left = oracle.nullspace_dual(E, 3, "left")
    assert right.k == left.k == 6
    assert right != left
    assert oracle.intersect(right, left).k == 2


def test_example_f81_direct_sum():
    E = oracle.expand(fixture_code("example_f81"))
    assert E.k == 6
    right = oracle.nullspace_dual(E, 1, "right")
    left = oracle.nullspace_dual(E, 1, "left")
    assert oracle.direct_sum(right, left)


def test_frobenius_image_of_expansion():
    c = fixture_code("example_f16")
    E = oracle.expand(c)
    for mu in range(4):
        assert oracle.expand(frobenius_code(c, mu)) == E.frobenius(mu)


def test_pairing_exhaustive_small():
    # every codeword of C against a basis of each dual; the form is additive in both slots
    rng = random.Random(4)
    done = 0
    while done < 15:
        field, ms = random_params(rng, fields=(4, 8, 9), max_ell=2, max_m=3)
        c = random_code(rng, field, ms)
        E = oracle.expand(c)
        if field.q**E.k > 2**12:
            continue
        done += 1
        words = list(E.codewords())
        assert len(words) == field.q**E.k
        for kappa in range(field.e):
            R = oracle.expand(right_galois_dual(c, kappa))
            L = oracle.expand(left_galois_dual(c, kappa))
            for w in words:
                assert all(oracle.galois_product(field, w, a, kappa) == 0 for a in R.gen)
                assert all(oracle.galois_product(field, a, w, kappa) == 0 for a in L.gen)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_nullspace_duals_match_constructions(seed):
    rng = random.Random(seed)
    field, ms = random_params(rng, fields=(2, 4, 8, 9), max_ell=2, max_m=4)
    c = random_code(rng, field, ms)
    E = oracle.expand(c)
    assert oracle.equal(oracle.nullspace_dual(E), oracle.expand(euclidean_dual(c)))
    kappa = rng.randrange(field.e)
    assert oracle.nullspace_dual(E, kappa, "right") == oracle.expand(right_galois_dual(c, kappa))
    assert oracle.nullspace_dual(E, kappa, "left") == oracle.expand(left_galois_dual(c, kappa))
