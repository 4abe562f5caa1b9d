"""Formula-versus-brute-force harness.

Each suite is a list of cases; a case computes the closed-form value and the
oracle value and records a verdict.  Exhaustive cases are PASS or FAIL.
Randomized searches that come back empty prove nothing, so those cases are
EVIDENCE (or FAIL if the search finds a tuple the formula says cannot
exist).  Per-case seeds are derived from the suite seed and the case index,
so results do not depend on how cases are spread over workers.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .abelian import AbelianGroup, abelian_types, d, d_p, primes, sylow
from .catalog import Catalog, builtin
from .formula import (CyclicGroup, d_abelian_wr_regular, d_direct_abelian_almost_simple,
                      d_soluble_wr_regular)
from .permgrp import models
from .permgrp.constructions import (abelian_rep, alternating, cyclic, direct_product, regular_rep,
                                    symmetric, wreath_imprimitive)
from .permgrp.search import (ORDER_CAP, ElementTable, Outcome, _abelian_quotient, d_exact,
                             d_upper_randomized, derived_quotient_invariants,
                             derived_quotient_invariants_bsgs)

PASS, FAIL, EVIDENCE = "PASS", "FAIL", "EVIDENCE"

SUITES = ("abelian", "direct", "wreath-small", "wreath-large", "catalog")

DIRECT_GROUPS = ("A5", "S5", "PSL2_7", "PGL2_7", "A6", "S6")
LARGE_CASES = (((2,), "A5"), ((2,), "S5"), ((6,), "A5"))
FOUND_TRIALS = 1000
EVIDENCE_TRIALS = 10_000
MODEL_DEGREE_CAP = 50


@dataclass
class Case:
    description: str
    expected: Any
    got: Any
    verdict: str
    seed: int | None = None
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_json(self, suite: str, index: int, timings: bool = False) -> dict:
        out = {"suite": suite, "index": index, "description": self.description,
               "expected": self.expected, "got": self.got, "verdict": self.verdict,
               "seed": self.seed}
        if self.detail:
            out["detail"] = self.detail
        if timings:
            out["elapsed"] = round(self.elapsed, 4)
        return out


@dataclass
class SuiteResult:
    suite: str
    cases: list[Case]
    elapsed: float
    seed: int

    def count(self, verdict: str) -> int:
        return sum(c.verdict == verdict for c in self.cases)

    @property
    def ok(self) -> bool:
        return self.count(FAIL) == 0

    def summary(self, timings: bool = False) -> dict:
        out = {"record": "summary", "suite": self.suite, "cases": len(self.cases),
               "pass": self.count(PASS), "fail": self.count(FAIL),
               "evidence": self.count(EVIDENCE), "seed": self.seed, "ok": self.ok}
        if timings:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def json_lines(self, timings: bool = False) -> list[str]:
        lines = [json.dumps(c.to_json(self.suite, i, timings), sort_keys=True)
                 for i, c in enumerate(self.cases)]
        lines.append(json.dumps(self.summary(timings), sort_keys=True))
        return lines


def case_seed(suite_seed: int, index: int) -> int:
    return int(np.random.SeedSequence([suite_seed, index]).generate_state(1, dtype=np.uint32)[0])


def _verdict(expected, got) -> str:
    return PASS if expected == got else FAIL


# ---------------------------------------------------------------------------
# case bodies (module level so they pickle for worker processes)

def _case_abelian(inv: tuple[int, ...], seed: int) -> Case:
    A = AbelianGroup(inv)
    expected = {"d": d(A), "d_p": {str(p): d_p(A, p) for p in sorted(primes(A))}}
    got = {"d": d_exact(abelian_rep(A)),
           "d_p": {str(p): d_exact(abelian_rep(sylow(A, p))) for p in sorted(primes(A))}}
    return Case(f"{A}", expected, got, _verdict(expected, got), seed)


def _almost_simple_model(name: str):
    if name.startswith("A") and name[1:].isdigit():
        return alternating(int(name[1:]))
    if name.startswith("S") and name[1:].isdigit():
        return symmetric(int(name[1:]))
    return models.model(name)


def _case_direct(inv: tuple[int, ...], gname: str, seed: int, catalog: Catalog | None = None) -> Case:
    A = AbelianGroup(inv)
    entry = (catalog or builtin()).lookup(gname)
    expected = d_direct_abelian_almost_simple(A, entry)
    P = direct_product(abelian_rep(A), _almost_simple_model(gname))
    got = d_exact(P)
    return Case(f"d({A} x {gname})", expected, got, _verdict(expected, got), seed,
                {"order": str(P.order)})


def _case_wreath_small(inv: tuple[int, ...], n: int, seed: int) -> Case:
    A = AbelianGroup(inv)
    expected = d_abelian_wr_regular(A, CyclicGroup(n)).d
    W = wreath_imprimitive(abelian_rep(A), cyclic(n))
    got = d_exact(W)
    return Case(f"d({A} wr C{n})", expected, got, _verdict(expected, got), seed,
                {"order": str(W.order)})


def _case_soluble(n: int, seed: int) -> Case:
    expected = d_soluble_wr_regular(2, AbelianGroup((2,)), CyclicGroup(n))
    W = wreath_imprimitive(symmetric(3), cyclic(n))
    got = d_exact(W)
    return Case(f"d(S3 wr C{n}) [soluble inner group]", expected, got,
                _verdict(expected, got), seed, {"order": str(W.order)})


@lru_cache(maxsize=4)
def _large_wreath(inv: tuple[int, ...], gname: str):
    return wreath_imprimitive(abelian_rep(AbelianGroup(inv)), regular_rep(_almost_simple_model(gname)))


def _case_large(inv: tuple[int, ...], gname: str, found: bool, trials: int, seed: int,
                catalog: Catalog | None = None) -> Case:
    A = AbelianGroup(inv)
    entry = (catalog or builtin()).lookup(gname)
    br = d_abelian_wr_regular(A, entry)
    W = _large_wreath(inv, gname)
    k = br.d if found else br.d - 1
    rep = d_upper_randomized(W, k, trials, seed)
    detail = {"k": k, "trials_used": rep.trials, "degree": W.degree, "order": str(W.order),
              "terms": br.to_json()["terms"]}
    if found:
        desc = f"{A} wr reg({gname}): generating {k}-tuple within {trials} trials"
        verdict = PASS if rep.outcome is Outcome.FOUND else FAIL
        return Case(desc, br.d, k if rep.outcome is Outcome.FOUND else None, verdict, seed, detail)
    desc = f"{A} wr reg({gname}): no generating {k}-tuple in {trials} trials (evidence only)"
    # a generating (d-1)-tuple would refute the formula outright
    verdict = EVIDENCE if rep.outcome is Outcome.NOT_FOUND else FAIL
    return Case(desc, Outcome.NOT_FOUND.value, rep.outcome.value, verdict, seed, detail)


def _case_catalog(name: str, seed: int, catalog: Catalog | None = None) -> Case:
    entry = (catalog or builtin()).lookup(name)
    G = models.model(name)
    order = G.order
    if order <= ORDER_CAP:
        ab = derived_quotient_invariants(G)
        how = "enumeration"
    else:
        ab = derived_quotient_invariants_bsgs(G)
        how = "stabilizer chain"
    expected = {"order": str(entry.order), "abelianization": list(entry.abelianization.invariants)}
    got = {"order": str(order), "abelianization": list(ab.invariants)}
    return Case(f"{name} (degree {G.degree}, quotient by {how})", expected, got,
                _verdict(expected, got), seed)


def _involutions_outside_socle(name: str) -> int:
    G = models.model(name)
    T = ElementTable(G)
    aq = _abelian_quotient(T)
    outside = ~aq.derived_mask
    return int(np.sum((T.orders == 2) & outside))


def _case_a6_family(seed: int) -> Case:
    # the three index-2 overgroups of A6 are told apart by their outer involutions
    expected = {"S6": 30, "PGL2_9": 36, "M10": 0}
    got = {n: _involutions_outside_socle(n) for n in expected}
    return Case("A6 family: involutions outside the socle", expected, got,
                _verdict(expected, got), seed)


# ---------------------------------------------------------------------------
# suites

def _run(fn_args: tuple[Callable, tuple]) -> Case:
    fn, args = fn_args
    t0 = time.perf_counter()
    c = fn(*args)
    c.elapsed = time.perf_counter() - t0
    return c


def _execute(name: str, jobs: Sequence[tuple[Callable, tuple]], seed: int, workers: int,
             on_case: Callable[[int, Case], None] | None) -> SuiteResult:
    t0 = time.perf_counter()
    cases: list[Case] = []
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results: Iterable[Case] = ex.map(_run, jobs)
            for i, c in enumerate(results):
                cases.append(c)
                if on_case:
                    on_case(i, c)
    else:
        for i, job in enumerate(jobs):
            c = _run(job)
            cases.append(c)
            if on_case:
                on_case(i, c)
    return SuiteResult(name, cases, time.perf_counter() - t0, seed)


def abelian_jobs(seed: int, max_order: int = 128) -> list:
    jobs = []
    for n in range(1, max_order + 1):
        for A in abelian_types(n):
            jobs.append((_case_abelian, (A.invariants, case_seed(seed, len(jobs)))))
    return jobs


def direct_jobs(seed: int, max_a: int = 16, cap: int = ORDER_CAP) -> list:
    cat = builtin()
    jobs = []
    for g in DIRECT_GROUPS:
        go = cat.lookup(g).order
        for n in range(1, max_a + 1):
            if n * go > cap:
                break
            for A in abelian_types(n):
                jobs.append((_case_direct, (A.invariants, g, case_seed(seed, len(jobs)))))
    return jobs


def wreath_small_jobs(seed: int, max_a: int = 8, cap: int = ORDER_CAP,
                      tops: Sequence[int] = (2, 3, 4, 5)) -> list:
    """Abelian A (|A| <= max_a) over regular cyclic tops, |A|^n n <= cap."""
    jobs = []
    for n in tops:
        for m in range(1, max_a + 1):
            if m**n * n > cap:
                break
            for A in abelian_types(m):
                jobs.append((_case_wreath_small, (A.invariants, n, case_seed(seed, len(jobs)))))
    for n in (2, 3):
        jobs.append((_case_soluble, (n, case_seed(seed, len(jobs)))))
    return jobs


def wreath_large_jobs(seed: int, trials: int | None = None, evidence_trials: int | None = None) -> list:
    jobs = []
    for inv, g in LARGE_CASES:
        jobs.append((_case_large, (inv, g, True, trials or FOUND_TRIALS, case_seed(seed, len(jobs)))))
        jobs.append((_case_large, (inv, g, False, evidence_trials or EVIDENCE_TRIALS,
                                   case_seed(seed, len(jobs)))))
    return jobs


def catalog_jobs(seed: int) -> list:
    jobs = []
    for e in builtin():
        if models.has_model(e.name):
            jobs.append((_case_catalog, (e.name, case_seed(seed, len(jobs)))))
    jobs.append((_case_a6_family, (case_seed(seed, len(jobs)),)))
    return jobs


def suite_abelian(seed: int = 0, workers: int = 1, on_case=None, max_order: int = 128) -> SuiteResult:
    return _execute("abelian", abelian_jobs(seed, max_order), seed, workers, on_case)


def suite_direct_products(seed: int = 0, workers: int = 1, on_case=None,
                          order_cap: int = ORDER_CAP) -> SuiteResult:
    return _execute("direct", direct_jobs(seed, cap=order_cap), seed, workers, on_case)


def suite_wreath_small(seed: int = 0, workers: int = 1, on_case=None,
                       order_cap: int = ORDER_CAP) -> SuiteResult:
    return _execute("wreath-small", wreath_small_jobs(seed, cap=order_cap), seed, workers, on_case)


def suite_wreath_large(seed: int = 0, workers: int = 1, on_case=None, trials: int | None = None,
                       evidence_trials: int | None = None) -> SuiteResult:
    jobs = wreath_large_jobs(seed, trials, evidence_trials)
    return _execute("wreath-large", jobs, seed, workers, on_case)


def suite_catalog(seed: int = 0, workers: int = 1, on_case=None) -> SuiteResult:
    return _execute("catalog", catalog_jobs(seed), seed, workers, on_case)


def run_suite(name: str, seed: int = 0, workers: int = 1, on_case=None, trials: int | None = None,
              order_cap: int = ORDER_CAP) -> list[SuiteResult]:
    """Run one suite by CLI name, or every suite for ``all``."""
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, seed, workers, on_case, trials, order_cap)]
    if name == "abelian":
        return [suite_abelian(seed, workers, on_case)]
    if name == "direct":
        return [suite_direct_products(seed, workers, on_case, order_cap)]
    if name == "wreath-small":
        return [suite_wreath_small(seed, workers, on_case, order_cap)]
    if name == "wreath-large":
        return [suite_wreath_large(seed, workers, on_case, trials)]
    if name == "catalog":
        return [suite_catalog(seed, workers, on_case)]
    raise KeyError(name)
