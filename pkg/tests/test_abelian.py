import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from wreathrank.abelian import (AbelianGroup, PrimaryDecomposition, abelian_types, d, d_p,
                                direct_sum, factorize, from_relations, is_prime, normalize,
                                parse, primes, smith_normal_form, sylow)


def det(M):
    import sympy

    return int(sympy.Matrix(M).det())


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_normalize_examples():
    # C4 x C6 and C2 x C12 have identical element-order profiles (checked by enumeration)
    assert normalize([4, 6]).invariants == (2, 12)
    assert normalize([1, 1]).invariants == ()
    assert normalize([5]).invariants == (5,)


def test_normalize_rejects_nonpositive():
    with pytest.raises(ValueError):
        normalize([0, 2])
    with pytest.raises(ValueError):
        normalize([-3])


def test_constructor_checks_chain():
    with pytest.raises(ValueError):
        AbelianGroup((2, 3))
    with pytest.raises(ValueError):
        AbelianGroup((1, 2))


def test_smith_normal_form_examples():
    D, _, _ = smith_normal_form([[1, 0], [0, 1]])
    assert D == [[1, 0], [0, 1]]
    D, _, _ = smith_normal_form([[2, 0], [0, 3]])
    assert D == [[1, 0], [0, 6]]
    # same diagonal as sympy's smith_normal_form
    D, _, _ = smith_normal_form([[2, 4], [6, 8]])
    assert D == [[2, 0], [0, 4]]


def test_smith_normal_form_shape_validation():
    with pytest.raises(ValueError):
        smith_normal_form([])
    with pytest.raises(ValueError):
        smith_normal_form([[1, 2], [3]])


def test_rank_examples():
    assert d(AbelianGroup()) == 0
    assert d(normalize([2, 12])) == 2
    assert d(normalize([2, 2, 2])) == 3
    A = normalize([2, 12])
    assert (d_p(A, 2), d_p(A, 3), d_p(A, 5)) == (2, 1, 0)


def test_d_p_rejects_composite():
    with pytest.raises(ValueError):
        d_p(normalize([2]), 4)
    with pytest.raises(ValueError):
        sylow(normalize([2]), 1)


def test_sum_primes_sylow():
    assert direct_sum(normalize([2]), normalize([2])).invariants == (2, 2)
    assert primes(normalize([2, 12])) == {2, 3}
    assert primes(AbelianGroup()) == frozenset()
    assert sylow(normalize([2, 12]), 2).invariants == (2, 4)
    assert sylow(normalize([2, 12]), 3).invariants == (3,)


def test_render_and_parse():
    A = normalize([2, 12])
    assert str(A) == "C2 x C12"
    assert str(AbelianGroup()) == "1"
    for text in ("C2 x C12", "[2,12]", "2,12", "C4 x C6", "[12, 2]"):
        assert parse(text) == A
    assert parse("1") == AbelianGroup() == parse("[]") == parse("trivial")
    for bad in ("C0", "x", "[1.5]", "C2 + C3"):
        with pytest.raises(ValueError):
            parse(bad)


def test_from_relations():
    assert from_relations([[2, 4], [6, 8]]).invariants == (2, 4)
    assert from_relations([[2, 0], [0, 3]]).invariants == (6,)
    with pytest.raises(ValueError):
        from_relations([[2, 0]])  # second generator free


def test_abelian_type_counts():
    # number of partitions of each exponent, multiplied over primes
    assert len(abelian_types(16)) == 5
    assert len(abelian_types(72)) == 6
    assert len(abelian_types(1)) == 1
    assert all(A.order == 96 for A in abelian_types(96))


def test_factorize_large():
    n = (2**61 - 1) * (2**31 - 1)
    assert factorize(n) == {2**61 - 1: 1, 2**31 - 1: 1}
    assert is_prime(2**61 - 1)
    assert not is_prime(561)


orders = st.lists(st.integers(1, 200), min_size=0, max_size=6)


@given(orders)
def test_normalize_preserves_order(xs):
    A = normalize(xs)
    assert A.order == math.prod(xs)
    inv = A.invariants
    assert all(x >= 2 for x in inv)
    assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))


@given(orders, orders)
def test_direct_sum_ranks(xs, ys):
    A, B = normalize(xs), normalize(ys)
    S = direct_sum(A, B)
    assert d(S) >= max(d(A), d(B))
    for p in primes(S) | {2, 3, 5, 7}:
        assert d_p(S, p) == d_p(A, p) + d_p(B, p)


@given(orders)
def test_d_is_max_d_p(xs):
    A = normalize(xs)
    assert d(A) == max((d_p(A, p) for p in primes(A)), default=0)


@given(orders)
def test_primary_round_trip(xs):
    A = normalize(xs)
    P = PrimaryDecomposition.of(A)
    assert P.to_group() == A
    assert all(is_prime(p) for p in P.components)
    for exps in P.components.values():
        assert list(exps) == sorted(exps, reverse=True) and min(exps) >= 1
    assert math.prod(sylow(A, p).order for p in primes(A)) == A.order


@given(orders)
def test_parse_round_trip(xs):
    A = normalize(xs)
    assert parse(str(A)) == A
    assert parse(str(list(A.invariants))) == A


matrices = st.integers(1, 6).flatmap(lambda r: st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(st.integers(-10, 10), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_smith_normal_form_properties(M):
    D, L, R = smith_normal_form(M)
    assert matmul(matmul(L, M), R) == D
    assert abs(det(L)) == 1 and abs(det(R)) == 1
    r, c = len(M), len(M[0])
    diag = [D[i][i] for i in range(min(r, c))]
    assert all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else (b % a == 0)


def test_smith_normal_form_matches_sympy():
    import sympy
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = random.Random(7)
    for _ in range(30):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        M = [[rng.randint(-10, 10) for _ in range(c)] for _ in range(r)]
        D, _, _ = smith_normal_form(M)
        S = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
        ours = [D[i][i] for i in range(min(r, c))]
        theirs = [abs(int(S[i, i])) for i in range(min(r, c))]
        assert ours == theirs
