"""Matrix groups over finite fields: Singer cycles, Frobenius conjugation,
group closure, cycle types, censuses."""

import pytest

from linmono.ff import CapExceededError, make_field
from linmono.group import (census, cycle_type_of, frobenius_matrix,
                           generate_group, gl_census, gl_elements, gl_order,
                           mat_det, mat_identity, mat_inv, mat_mul, mat_pow,
                           mat_vec, normalizer_census, normalizer_elements,
                           nonzero_vectors, perm_sign, singer_generator,
                           singer_modulus, stabilizer_order, vector_rank)
from linmono.poly import is_irreducible

F2 = make_field(2)
F3 = make_field(3)


def test_matrix_arithmetic_basics():
    I = mat_identity(F3, 2)
    A = ((F3.scalar_rep(1), F3.scalar_rep(2)),
         (F3.scalar_rep(0), F3.scalar_rep(1)))
    assert mat_mul(F3, A, I) == A
    assert mat_mul(F3, I, A) == A
    assert mat_pow(F3, A, 0) == I
    assert mat_pow(F3, A, 3) == mat_mul(F3, A, mat_mul(F3, A, A))
    Ainv = mat_inv(F3, A)
    assert mat_mul(F3, A, Ainv) == I
    assert mat_det(F3, A) == F3.scalar_rep(1)
    singular = ((F3.scalar_rep(1), F3.scalar_rep(2)),
                (F3.scalar_rep(2), F3.scalar_rep(1)))
    assert mat_det(F3, singular) == F3.scalar_rep(0)
    with pytest.raises(ZeroDivisionError):
        mat_inv(F3, singular)


def test_det_multiplicative():
    import random
    rng = random.Random(3)
    mats = []
    while len(mats) < 6:
        A = tuple(tuple(F3.rep_at(rng.randrange(3)) for _ in range(3))
                  for _ in range(3))
        if mat_det(F3, A) != F3.zero_rep:
            mats.append(A)
    for A in mats:
        for B in mats:
            lhs = mat_det(F3, mat_mul(F3, A, B))
            rhs = F3.mul(mat_det(F3, A), mat_det(F3, B))
            assert lhs == rhs


def test_singer_modulus_is_primitive():
    f = singer_modulus(3, F3)
    assert f.degree == 3
    assert is_irreducible(f)
    # primitivity shows as the companion matrix having full order, which
    # singer_generator asserts internally
    S = singer_generator(3, F3)
    I = mat_identity(F3, 3)
    assert mat_pow(F3, S, 26) == I
    assert mat_pow(F3, S, 13) != I
    assert mat_pow(F3, S, 2) != I


def test_singer_deterministic_and_seed_sensitive():
    assert singer_modulus(3, F3, 0) == singer_modulus(3, F3, 0)
    assert singer_generator(2, F3, 0) == singer_generator(2, F3, 0)


def test_frobenius_conjugation_relation():
    """F S F^-1 = S^q: conjugation by the field Frobenius raises the
    Singer generator to the q-th power."""
    for n, field in ((2, F3), (3, F3), (3, F2), (2, F2)):
        q = field.order
        S = singer_generator(n, field)
        F = frobenius_matrix(n, field)
        lhs = mat_mul(field, mat_mul(field, F, S), mat_inv(field, F))
        assert lhs == mat_pow(field, S, q)
        assert mat_pow(field, F, n) == mat_identity(field, n)


def test_generate_group_small():
    # <S> alone is cyclic of order q^n - 1
    S = singer_generator(2, F3)
    els = generate_group(F3, [S])
    assert len(els) == 8
    # adding F gives the full normalizer
    F = frobenius_matrix(2, F3)
    els2 = generate_group(F3, [S, F])
    assert len(els2) == 16
    with pytest.raises(CapExceededError):
        generate_group(F3, [S, F], cap=10)
    with pytest.raises(ValueError):
        generate_group(F3, [((F3.zero_rep,),)])  # singular


def test_nonzero_vectors_and_rank():
    vecs = nonzero_vectors(F3, 2)
    assert len(vecs) == 8
    assert len(set(vecs)) == 8
    for i, v in enumerate(vecs):
        assert vector_rank(F3, v) == i + 1


def test_cycle_type_identity_and_singer():
    I = mat_identity(F3, 2)
    assert cycle_type_of(F3, I) == (1,) * 8
    S = singer_generator(2, F3)
    assert cycle_type_of(F3, S) == (8,)
    S3 = singer_generator(3, F3)
    assert cycle_type_of(F3, S3) == (26,)


def test_cycle_type_lengths_divide_element_order():
    S = singer_generator(3, F2)
    F = frobenius_matrix(3, F2)
    for A in generate_group(F2, [S, F]):
        ct = cycle_type_of(F2, A)
        assert sum(ct) == 7
        # each cycle length divides the matrix order
        order = 1
        M = A
        I = mat_identity(F2, 3)
        while M != I:
            M = mat_mul(F2, M, A)
            order += 1
        for d in ct:
            assert order % d == 0


def test_perm_sign():
    assert perm_sign((1, 1, 1)) == 1
    assert perm_sign((2,)) == -1
    assert perm_sign((1, 2)) == -1
    assert perm_sign((3,)) == 1
    assert perm_sign((2, 2)) == 1
    assert perm_sign((26,)) == -1  # a 26-cycle is odd


def test_stabilizer_orders_in_normalizer():
    for n, field in ((2, F3), (3, F2)):
        els = normalizer_elements(n, field)
        for v in nonzero_vectors(field, n):
            assert stabilizer_order(field, els, v) == n


def test_gl_order_formula():
    assert gl_order(1, 3) == 2
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 168
    assert gl_order(2, 3) == 48
    assert gl_order(3, 3) == 11232


def test_gl_elements_count_and_invertibility():
    els = gl_elements(2, F3)
    assert len(els) == 48
    for A in els:
        assert mat_det(F3, A) != F3.zero_rep
    assert len(set(els)) == 48


def test_gl_census_2_2_contains_transposition():
    cen = gl_census(2, F2)
    assert cen.order == 6
    # GL(2,2) acting on 3 nonzero vectors is the full symmetric group:
    # it contains odd elements
    assert any(perm_sign(t) == -1 for t, _ in cen.counts)
    assert (1, 1, 1) in cen
    assert (3,) in cen
    assert (1, 2) in cen


def test_census_counts_sum_to_order():
    cen = gl_census(2, F3)
    assert cen.order == 48
    assert sum(c for _, c in cen.counts) == 48
    assert (8,) in cen  # the Singer cycle
    assert cen.count_of((1,) * 8) == 1  # only the identity fixes all


def test_normalizer_census_subset_of_gl_census():
    gl = gl_census(2, F3)
    nc = normalizer_census(2, F3)
    assert nc.order == 16
    assert nc.types() <= gl.types()
    assert sum(c for _, c in nc.counts) == 16


def test_normalizer_census_fixed_point_types_all_odd():
    """The load-bearing structure fact for (n, q) = (3, 3): every
    normalizer element with a fixed point has only odd cycle lengths
    with lcm dividing 3.  The normalizer as a whole is NOT inside the
    alternating group -- multiplication by -1 is thirteen 2-cycles --
    so only the fixed-point condition separates it from GL."""
    import math
    nc = normalizer_census(3, F3)
    assert nc.order == 78
    for t, _ in nc.counts:
        if 1 in t:
            lcm = 1
            for d in t:
                lcm = math.lcm(lcm, d)
            assert all(d % 2 == 1 for d in t)
            assert 3 % lcm == 0
    # the odd element of order 2 really is present
    assert (2,) * 13 in nc
    assert perm_sign((2,) * 13) == -1


def test_gl_census_cap():
    F5 = make_field(5)
    with pytest.raises(CapExceededError):
        gl_elements(3, F5)  # 5^9 > 3^9 cap
