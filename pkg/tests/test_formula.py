import random

import pytest
from hypothesis import given, settings, strategies as st

from wreathrank.abelian import AbelianGroup, d, d_p, normalize, primes
from wreathrank.catalog import builtin
from wreathrank.formula import (ALL_TRIVIAL, AlmostSimpleH, CyclicGroup, CyclicH, WreathSpec,
                                d_abelian_wr_regular, d_direct_abelian_almost_simple, d_iterated,
                                d_soluble_wr_regular, h_max_almost_simple, rho_p,
                                sequence_abelianization)

CAT = builtin()
E = CAT.lookup


def A(*xs):
    return normalize(xs)


def test_sequence_abelianization():
    assert sequence_abelianization([E("S5")]) == A(2)
    assert sequence_abelianization([E("A5"), E("A5")]) == A()
    assert sequence_abelianization([E("S5"), E("S5")]) == A(2, 2)
    assert sequence_abelianization([]) == A()


def test_h_max():
    assert h_max_almost_simple(E("A5"), 2) == 2
    assert h_max_almost_simple(E("A5"), 7) == 1
    assert h_max_almost_simple(E("PSL2_7"), 3) == 2


def test_cyclic_provider():
    assert CyclicH(2)(2) is ALL_TRIVIAL
    assert CyclicH(8)(2) is ALL_TRIVIAL
    assert CyclicH(6)(2) == 1
    assert CyclicH(2)(3) == 1


def test_rho_p():
    assert rho_p(A(2), 2, AlmostSimpleH(E("A5"))) == 3
    assert rho_p(A(2), 2, CyclicH(2)) == 0
    assert rho_p(A(6), 3, CyclicH(2)) == 2
    with pytest.raises(ValueError):
        rho_p(A(2), 3, CyclicH(2))


def test_d_abelian_wr_regular():
    assert d_abelian_wr_regular(A(), E("S5")).d == 2
    br = d_abelian_wr_regular(A(2), E("A5"))
    assert (br.d, br.term_direct, br.term_da_plus_1, br.prime_terms) == (3, 2, 2, {2: 3})
    assert br.attained_by == ["p=2"]
    assert d_abelian_wr_regular(A(2), CyclicGroup(3)).d == 2
    br = d_abelian_wr_regular(A(6), E("A5"))
    assert br.prime_terms == {2: 3, 3: 3} and br.d == 3
    assert br.attained_by == ["p=2", "p=3"]


def test_d_direct():
    assert d_direct_abelian_almost_simple(A(2), E("A5")) == 2
    assert d_direct_abelian_almost_simple(A(2, 2), E("S5")) == 3
    assert d_direct_abelian_almost_simple(A(), E("M11")) == 2
    assert "max(rank(G)" in d_direct_abelian_almost_simple.method


def test_d_iterated_examples():
    assert d_iterated(WreathSpec.from_names(["A5", "A5"])).d == 2
    br = d_iterated(WreathSpec.from_names(["A5", "S5"]))
    assert (br.d, br.term_direct, br.term_da_plus_1, br.prime_terms) == (3, 2, 2, {2: 3})
    br = d_iterated(WreathSpec.from_names(["S5", "S5", "S5"]))
    assert (br.d, br.term_direct, br.term_da_plus_1, br.prime_terms) == (4, 3, 3, {2: 4})
    assert d_iterated(WreathSpec.from_names(["M11"])).d == 2


def test_prime_terms_respect_socle():
    # 5 divides |A| but not |PSL(2,8)| = 504, so only d(A)+1 sees it
    br = d_iterated(WreathSpec([E("PSL2_8"), E("PGammaL2_32"), E("PGammaL2_32")]))
    assert br.A == A(5, 5)
    assert br.prime_terms == {}
    assert br.term_direct == 2
    assert br.d == 3 and br.attained_by == ["dA_plus_1"]


def test_wreath_spec_rendering():
    spec = WreathSpec.from_names(["A5", "S5"])
    assert spec.expression() == "S5 ≀ A5"
    with pytest.raises(ValueError):
        WreathSpec(())


def test_breakdown_json():
    j = d_iterated(WreathSpec.from_names(["A5", "S5"])).to_json()
    assert j["d"] == 3 and j["A"] == [2]
    assert j["terms"] == {"direct": 2, "dA_plus_1": 2, "primes": {"2": 3}}
    assert j["attained_by"] == ["p=2"]
    assert isinstance(j["method_notes"], list)


def test_soluble():
    assert d_soluble_wr_regular(1, A(2), CyclicGroup(2)) == 2
    assert d_soluble_wr_regular(2, A(2), CyclicGroup(2)) == 2
    assert d_soluble_wr_regular(5, A(2, 2, 2, 2, 2), E("A5")) == 7
    # the floor term wins when H needs many generators relative to |G|
    assert d_soluble_wr_regular(12, A(2), CyclicGroup(2)) == 7
    with pytest.raises(ValueError):
        d_soluble_wr_regular(0, A(), CyclicGroup(2))
    with pytest.raises(ValueError):
        d_soluble_wr_regular(1, A(2, 2), CyclicGroup(2))


NAMES = sorted(CAT.names())
names = st.sampled_from(NAMES)
specs = st.lists(names, min_size=1, max_size=6)


@settings(max_examples=300, deadline=None)
@given(specs)
def test_lower_bounds(ns):
    br = d_iterated(WreathSpec.from_names(ns))
    assert br.d >= 2 and br.d >= d(br.A)
    assert br.d == max(v for _, v in br.terms())
    G1 = E(ns[0])
    for p in br.prime_terms:
        assert p in primes(br.A) and G1.socle_order % p == 0


@settings(max_examples=200, deadline=None)
@given(specs, st.randoms(use_true_random=False))
def test_inner_permutation_invariance(ns, rnd):
    inner = ns[1:]
    rnd.shuffle(inner)
    a = d_iterated(WreathSpec.from_names(ns)).to_json()
    b = d_iterated(WreathSpec.from_names(ns[:1] + inner)).to_json()
    assert a == b


@settings(max_examples=200, deadline=None)
@given(specs, names)
def test_append_nonperfect_is_monotone(ns, extra):
    before = d_iterated(WreathSpec.from_names(ns)).d
    after = d_iterated(WreathSpec.from_names(ns + [extra])).d
    if not E(extra).simple:
        assert after >= before


@settings(max_examples=200, deadline=None)
@given(specs, st.integers(0, 10))
def test_replace_with_same_abelianization(ns, i):
    if len(ns) < 2:
        return
    j = 1 + i % (len(ns) - 1)
    ab = E(ns[j]).abelianization
    twins = [n for n in NAMES if E(n).abelianization == ab]
    swapped = list(ns)
    swapped[j] = twins[i % len(twins)]
    assert d_iterated(WreathSpec.from_names(ns)).d == d_iterated(WreathSpec.from_names(swapped)).d


@settings(max_examples=100, deadline=None)
@given(names, st.lists(st.sampled_from([n for n in NAMES if E(n).simple]), max_size=5))
def test_simple_inner_factors(g1, inner):
    assert d_iterated(WreathSpec.from_names([g1] + inner)).d == E(g1).rank


@given(st.integers(2, 50), st.integers(2, 200))
def test_floor_term(d_H, n):
    if n >= d_H:
        assert (d_H - 2) // n + 2 == 2
        assert d_soluble_wr_regular(d_H, A(), CyclicGroup(n)) == 2
