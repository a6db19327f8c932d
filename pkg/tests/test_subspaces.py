"""Canonical subspaces, the subspace metric, and Grassmannian code objects."""

import itertools
import json
import random

import pytest

from cacodes.algebra import GF, Polynomial
from cacodes.ca import LinearCA
from cacodes.errors import AmbientMismatch, EmptyCode, TooFewCodewords
from cacodes.linalg import sylvester
from cacodes.subspaces import GrassmannianCode, Subspace, subspace_distance

import oracles

F2 = GF(2)
F3 = GF(3)


def P(field, *coeffs):
    return Polynomial(field, coeffs)


def kernel_of(field, coeffs, n):
    return LinearCA(Polynomial(field, coeffs), n).kernel()


def random_subspace(field, n, rng, max_rows=3):
    rows = [
        [rng.randrange(field.q) for _ in range(n)]
        for _ in range(rng.randint(0, max_rows))
    ]
    return Subspace(field, n, rows)


# -- canonical form ------------------------------------------------------------------


def test_duplicate_rows_collapse():
    s = Subspace(F2, 2, [(1, 1), (1, 1)])
    assert s.dim == 1
    assert s.basis.rows == ((1, 1),)


def test_empty_rows_zero_subspace():
    s = Subspace(F2, 3)
    assert s.dim == 0
    assert s.is_zero()
    assert s.basis.ncols == 3


def test_already_rref_basis_kept():
    s = Subspace(F2, 4, [(1, 0, 1, 1), (0, 1, 1, 0)])
    assert s.dim == 2
    assert s.basis.rows == ((1, 0, 1, 1), (0, 1, 1, 0))


def test_equality_is_span_equality():
    a = Subspace(F3, 3, [(1, 2, 0), (0, 0, 1)])
    b = Subspace(F3, 3, [(1, 2, 1), (2, 1, 1)])  # same span, different generators
    assert a == b
    assert hash(a) == hash(b)


def test_span_matches_oracle():
    rng = random.Random(31)
    for p in (2, 3):
        field = GF(p)
        for _ in range(40):
            rows = [
                [rng.randrange(p) for _ in range(4)] for _ in range(rng.randint(0, 3))
            ]
            s = Subspace(field, 4, rows)
            assert oracles.span_set(s.basis.rows, 4, p) == oracles.span_set(rows, 4, p)
            assert set(s.vectors()) == set(oracles.span_set(rows, 4, p))


# -- distance ------------------------------------------------------------------------------


def test_distance_to_self_is_zero():
    s = Subspace(F2, 4, [(1, 0, 1, 1)])
    assert subspace_distance(s, s) == 0


def test_distance_nested_example():
    a = Subspace(F2, 4, [(1, 1, 0, 0)])
    b = Subspace(F2, 4, [(1, 1, 0, 0), (0, 0, 1, 1)])
    assert subspace_distance(a, b) == 1


def test_distance_coprime_kernels():
    a = kernel_of(F2, (1, 1, 1), 4)
    b = kernel_of(F2, (1, 0, 1), 4)
    assert subspace_distance(a, b) == 4
    # oracle: enumerate both kernels as vector sets
    sa = oracles.kernel_set((1, 1, 1), 4, 2)
    sb = oracles.kernel_set((1, 0, 1), 4, 2)
    assert oracles.distance_from_sets(sa, sb, 2) == 4


def test_distance_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        subspace_distance(Subspace(F2, 3, [(1, 0, 0)]), Subspace(F2, 4, [(1, 0, 0, 0)]))
    with pytest.raises(AmbientMismatch):
        subspace_distance(Subspace(F2, 3, [(1, 0, 0)]), Subspace(F3, 3, [(1, 0, 0)]))


def test_distance_matches_set_oracle_randomized():
    rng = random.Random(404)
    for p in (2, 3):
        field = GF(p)
        for _ in range(40):
            a = random_subspace(field, 4, rng)
            b = random_subspace(field, 4, rng)
            expected = oracles.distance_from_sets(
                oracles.span_set(a.basis.rows, 4, p),
                oracles.span_set(b.basis.rows, 4, p),
                p,
            )
            assert subspace_distance(a, b) == expected


def test_metric_axioms_random_triples():
    rng = random.Random(999)
    for _ in range(60):
        a = random_subspace(F2, 5, rng)
        b = random_subspace(F2, 5, rng)
        c = random_subspace(F2, 5, rng)
        dab = subspace_distance(a, b)
        assert dab >= 0
        assert (dab == 0) == (a == b)
        assert dab == subspace_distance(b, a)
        assert dab <= subspace_distance(a, c) + subspace_distance(c, b)


# -- intersection -------------------------------------------------------------------------------


def test_intersection_with_self():
    s = Subspace(F2, 4, [(1, 0, 1, 1), (0, 1, 1, 0)])
    assert s.intersection(s) == s


def test_intersection_coprime_kernels_trivial():
    a = kernel_of(F2, (1, 1, 1), 4)
    b = kernel_of(F2, (1, 0, 1), 4)
    assert a.intersection(b).is_zero()


def test_intersection_shared_factor_kernels():
    # rules (X+1)(X^2+X+1) = 1,0,0,1 and (X+1)^3 = 1,1,1,1 share gcd X+1
    a = kernel_of(F2, (1, 0, 0, 1), 6)
    b = kernel_of(F2, (1, 1, 1, 1), 6)
    inter = a.intersection(b)
    assert inter.dim == 1
    # oracle: brute-force intersection over F_2^6
    sa = oracles.kernel_set((1, 0, 0, 1), 6, 2)
    sb = oracles.kernel_set((1, 1, 1, 1), 6, 2)
    both = frozenset(sa & sb)
    assert oracles.set_dim(both, 2) == 1
    assert oracles.span_set(inter.basis.rows, 6, 2) == both


def test_intersection_dim_consistent_with_distance():
    rng = random.Random(8)
    for _ in range(60):
        a = random_subspace(F3, 4, rng)
        b = random_subspace(F3, 4, rng)
        inter = a.intersection(b)
        assert subspace_distance(a, b) == a.dim + b.dim - 2 * inter.dim
        assert inter <= a and inter <= b


def test_kernel_intersection_is_sylvester_nullspace():
    # stacked transition matrices at n = 2k form the Sylvester matrix, so the
    # intersection of two kernels must be its null space (exhaustive k <= 3)
    for k in (1, 2, 3):
        rules = [
            Polynomial.from_codes(F2, (1,) + mid + (1,))
            for mid in itertools.product(range(2), repeat=k - 1)
        ]
        for f, g in itertools.combinations(rules, 2):
            ker_f = LinearCA(f, 2 * k).kernel()
            ker_g = LinearCA(g, 2 * k).kernel()
            via_sylvester = Subspace.from_matrix(
                sylvester(f, g).nullspace_basis()
            )
            assert ker_f.intersection(ker_g) == via_sylvester


def test_distance_law_two_k_minus_intersection():
    for k in (1, 2, 3):
        rules = [
            Polynomial.from_codes(F2, (a0,) + mid + (1,))
            for mid in itertools.product(range(2), repeat=k - 1)
            for a0 in (1,)
        ]
        for f, g in itertools.combinations(rules, 2):
            a = LinearCA(f, 2 * k).kernel()
            b = LinearCA(g, 2 * k).kernel()
            assert subspace_distance(a, b) == 2 * k - 2 * a.intersection(b).dim


# -- Grassmannian codes -----------------------------------------------------------------------------


def coprime_pair_code():
    a = kernel_of(F2, (1, 1, 1), 4)
    b = kernel_of(F2, (1, 0, 1), 4)
    return GrassmannianCode(F2, 4, [a, b])


def test_min_distance_requires_two():
    single = GrassmannianCode(F2, 4, [kernel_of(F2, (1, 1, 1), 4)])
    with pytest.raises(TooFewCodewords):
        single.min_distance()


def test_min_distance_disjoint_pair():
    assert coprime_pair_code().min_distance() == 4


def test_params_singleton_undefined_distance():
    single = GrassmannianCode(F2, 4, [kernel_of(F2, (1, 1, 1), 4)])
    p = single.params()
    assert (p.n, p.max_dim, p.log_q_size, p.min_distance) == (4, 2, 0.0, None)


def test_params_coprime_pair():
    p = coprime_pair_code().params()
    assert (p.n, p.max_dim, p.log_q_size, p.min_distance) == (4, 2, 1.0, 4)


def test_params_log_of_three():
    subs = [
        kernel_of(F2, (1, 0, 0, 1), 6),
        kernel_of(F2, (1, 1, 0, 1), 6),
        kernel_of(F2, (1, 0, 1, 1), 6),
    ]
    p = GrassmannianCode(F2, 6, subs).params()
    assert abs(p.log_q_size - 1.584962500721156) < 1e-12
    assert p.size == 3


def test_params_empty_code():
    with pytest.raises(EmptyCode):
        GrassmannianCode(F2, 4, []).params()


def test_codewords_sorted_and_deduplicated():
    a = kernel_of(F2, (1, 1, 1), 4)
    b = kernel_of(F2, (1, 0, 1), 4)
    code = GrassmannianCode(F2, 4, [b, a, a])
    assert code.duplicates_removed == 1
    keys = [s.sort_key() for s in code.codewords]
    assert keys == sorted(keys)
    assert code.constant_dim == 2


def test_json_round_trip_exact():
    code = coprime_pair_code()
    blob = json.dumps(code.to_json(), sort_keys=True)
    back = GrassmannianCode.from_json(json.loads(blob))
    assert back.to_json() == code.to_json()
    assert json.dumps(back.to_json(), sort_keys=True) == blob
    assert list(back.codewords) == list(code.codewords)
