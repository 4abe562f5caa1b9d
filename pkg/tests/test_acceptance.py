"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import math
import random
import time

import numpy as np
import sympy

from wreathrank import verify
from wreathrank.abelian import AbelianGroup, d, smith_normal_form
from wreathrank.catalog import builtin
from wreathrank.cli import main
from wreathrank.formula import WreathSpec, d_iterated
from wreathrank.permgrp import models
from wreathrank.permgrp.bsgs import PermGroup, naive_closure
from wreathrank.permgrp.constructions import (abelian_rep, alternating, cyclic, direct_product,
                                              regular_rep, symmetric, wreath_imprimitive)
from wreathrank.permgrp.perm import Permutation


def _suite_detail(r):
    s = r.summary()
    bad = [c.description for c in r.cases if c.verdict == verify.FAIL]
    return f"{s['pass']} pass, {s['fail']} fail, {s['evidence']} evidence" + (
        f"; failing: {bad[:5]}" if bad else "")


def test_criterion_1_abelian_oracle(criterion):
    t0 = time.perf_counter()
    r = verify.suite_abelian(seed=1)
    el = time.perf_counter() - t0
    ok = r.ok and len(r.cases) >= 200 and el < 60
    criterion(1, "abelian d, d_p vs exhaustive, |A| <= 128", ok, _suite_detail(r), el, 60)
    assert r.ok and len(r.cases) >= 200
    assert el < 60


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def test_criterion_2_snf(criterion):
    rng = random.Random(2)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        M = [[rng.randint(-10, 10) for _ in range(c)] for _ in range(r)]
        D, L, R = smith_normal_form(M)
        diag = [D[i][i] for i in range(min(r, c))]
        ok = _matmul(_matmul(L, M), R) == D
        ok &= all(D[i][j] == 0 for i in range(r) for j in range(c) if i != j)
        ok &= all((b == 0) if a == 0 else (b % a == 0) for a, b in zip(diag, diag[1:]))
        ok &= abs(int(sympy.Matrix(L).det())) == 1 and abs(int(sympy.Matrix(R).det())) == 1
        bad += not ok
    el = time.perf_counter() - t0
    criterion(2, "Smith normal form on 200 random matrices", bad == 0 and el < 10,
              f"{200 - bad}/200 exact", el, 10)
    assert bad == 0
    assert el < 10


def test_criterion_3_direct_products(criterion):
    t0 = time.perf_counter()
    r = verify.suite_direct_products(seed=3)
    el = time.perf_counter() - t0
    criterion(3, "d(A x G) formula vs exhaustive, six groups, |A x G| <= 5000",
              r.ok and el < 300, _suite_detail(r), el, 300)
    assert r.ok and len(r.cases) == 119
    assert el < 300


def test_criterion_4_regular_wreath_cyclic(criterion):
    t0 = time.perf_counter()
    # every abelian A and regular cyclic top C_n with |A|^n n <= 5000
    jobs = verify.wreath_small_jobs(4, max_a=5000, tops=range(2, 13))
    r = verify._execute("wreath-small", jobs, 4, 1, None)
    el = time.perf_counter() - t0
    named = {c.description: c for c in r.cases}
    spot = all(named[f"d(C{a} wr C{n})"].got == 2 for a, n in [(2, 2), (2, 3), (3, 2)])
    criterion(4, "A wr C_n with cyclic provider vs exhaustive, order <= 5000",
              r.ok and spot and el < 300, _suite_detail(r), el, 300)
    assert r.ok and spot and len(r.cases) >= 100
    assert el < 300


def test_criterion_5_all_simple(criterion, capsys):
    t0 = time.perf_counter()
    simple = [e.name for e in builtin() if e.simple]
    rng = random.Random(5)
    seqs = [["A5", "A5"], ["A5", "A6", "M11"]]
    seqs += [[rng.choice(simple) for _ in range(rng.randint(2, 6))] for _ in range(200)]
    values = [d_iterated(WreathSpec.from_names(s)).d for s in seqs]
    code = main(["wreath", "A5", "A6", "M11"])
    out = capsys.readouterr().out
    el = time.perf_counter() - t0
    ok = set(values) == {2} and code == 0 and out.splitlines()[-1] == "d = 2"
    criterion(5, "all-simple sequences are 2-generated", ok and el < 1,
              f"{len(seqs)} sequences, values {sorted(set(values))}", el, 1)
    assert ok
    assert el < 1


def test_criterion_6_theorem_scale_witnesses(criterion):
    t0 = time.perf_counter()
    r = verify.suite_wreath_large(seed=6)
    el = time.perf_counter() - t0
    found = [c for c in r.cases if c.detail["k"] == c.expected]
    evidence = [c for c in r.cases if c not in found]
    ok = (r.ok and len(found) == 3 and all(c.verdict == verify.PASS for c in found)
          and all(c.verdict == verify.EVIDENCE and c.detail["trials_used"] >= 10_000
                  for c in evidence))
    degrees = sorted({c.detail["degree"] for c in r.cases})
    criterion(6, "randomized witnesses at d, no (d-1)-tuple in 10^4 trials",
              ok and el < 600, _suite_detail(r) + f"; degrees {degrees}", el, 600)
    assert ok
    assert el < 600


def test_criterion_7_formula_invariants(criterion):
    cat = builtin()
    names = cat.names()
    rng = random.Random(7)
    t0 = time.perf_counter()
    violations = 0
    for _ in range(1000):
        ns = [rng.choice(names) for _ in range(rng.randint(1, 6))]
        br = d_iterated(WreathSpec.from_names(ns, cat))
        violations += br.d < max(2, d(br.A))
        inner = ns[1:]
        rng.shuffle(inner)
        violations += d_iterated(WreathSpec.from_names(ns[:1] + inner, cat)).to_json() != br.to_json()
        extra = rng.choice([n for n in names if not cat.lookup(n).simple])
        violations += d_iterated(WreathSpec.from_names(ns + [extra], cat)).d < br.d
    el = time.perf_counter() - t0
    criterion(7, "1000 random specs: monotone, order-free, d >= max(2, d(A))",
              violations == 0 and el < 30, f"{violations} violations", el, 30)
    assert violations == 0
    assert el < 30


def _corpus():
    G = []
    G += [cyclic(n) for n in (1, 2, 5, 12, 30)]
    G += [symmetric(n) for n in range(2, 7)] + [alternating(n) for n in range(4, 8)]
    G += [abelian_rep(AbelianGroup(inv)) for inv in [(2, 2), (2, 4, 8), (3, 3, 3), (6, 12)]]
    G += [models.model(n) for n in ("PSL2_7", "PGL2_7", "PSL2_8", "PSL2_11", "PGL2_9", "M10",
                                    "PGammaL2_9", "PSL2_13", "PGL2_11", "PSL2_16", "PSL2_17",
                                    "PSL2_19", "PGammaL2_8", "PGammaL2_4")]
    G += [direct_product(cyclic(2), alternating(5)), direct_product(symmetric(3), symmetric(4)),
          direct_product(abelian_rep(AbelianGroup((2, 2))), symmetric(5)),
          direct_product(cyclic(7), models.model("PSL2_7"))]
    G += [wreath_imprimitive(cyclic(2), cyclic(3)), wreath_imprimitive(cyclic(3), cyclic(2)),
          wreath_imprimitive(symmetric(3), cyclic(3)), wreath_imprimitive(cyclic(2), cyclic(8)),
          wreath_imprimitive(cyclic(4), symmetric(3)), wreath_imprimitive(symmetric(3), symmetric(3)),
          wreath_imprimitive(cyclic(2), regular_rep(symmetric(3))),
          wreath_imprimitive(abelian_rep(AbelianGroup((2, 2))), cyclic(3))]
    G += [regular_rep(alternating(5)), regular_rep(symmetric(4)), regular_rep(cyclic(6))]
    rng = random.Random(8)
    while len(G) < 50:
        n = rng.randint(4, 9)
        gens = [Permutation(rng.sample(range(n), n)) for _ in range(rng.randint(1, 3))]
        H = PermGroup(gens, n)
        if H.order <= 5000:
            G.append(H)
    return G


def test_criterion_8_bsgs_soundness(criterion):
    t0 = time.perf_counter()
    rng = random.Random(9)
    corpus = _corpus()
    bad = []
    for i, G in enumerate(corpus):
        H = PermGroup(G.generators, G.degree)  # deterministic chain, no order hint
        els = naive_closure(list(G.generators), G.degree)
        ok = H.order == len(els) == G.order <= 5000
        ok &= H.order == math.prod(H.basic_orbit_sizes)
        ok &= all(H.contains(Permutation(np.frombuffer(k, dtype=np.intp))) for k in
                  rng.sample(sorted(els), min(50, len(els))))
        for _ in range(50):
            x = Permutation(rng.sample(range(G.degree), G.degree))
            ok &= H.contains(x) == (x.key() in els)
        if not ok:
            bad.append(i)
    orders = []
    for H, top in [(cyclic(2), regular_rep(alternating(5))),
                   (symmetric(5), regular_rep(alternating(5))),
                   (regular_rep(symmetric(5)), regular_rep(alternating(5)))]:
        W = wreath_imprimitive(H, top)
        orders.append((W.degree, W.order == H.order**top.degree * top.order))
    el = time.perf_counter() - t0
    ok = not bad and len(corpus) == 50 and all(o for _, o in orders) and orders[-1][0] == 7200
    criterion(8, "BSGS order/membership vs naive closure (50 groups); wreath order identity",
              ok and el < 120,
              f"{50 - len(bad)}/50 groups agree; wreath identity at degrees "
              f"{[dg for dg, o in orders if o]}", el, 120)
    assert ok
    assert el < 120


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-v", "-s"]))
