"""Finite abelian groups as invariant-factor chains.

A finite abelian group is stored as its chain of invariant factors
``d_1 | d_2 | ... | d_r`` (smallest first, every ``d_i >= 2``); the empty
chain is the trivial group.  Everything here is exact integer arithmetic on
Python ints, so orders of any size are fine.

>>> A = normalize([4, 6])
>>> A
AbelianGroup((2, 12))
>>> print(A)
C2 x C12
>>> d(A), d_p(A, 2), d_p(A, 3)
(2, 2, 1)
>>> print(sylow(A, 2))
C2 x C4
"""

from __future__ import annotations

import json
import math
import re
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

__all__ = [
    "AbelianGroup",
    "PrimaryDecomposition",
    "normalize",
    "smith_normal_form",
    "from_relations",
    "d",
    "d_p",
    "direct_sum",
    "primes",
    "sylow",
    "parse",
    "is_prime",
    "factorize",
    "abelian_types",
]

TRIAL_DIVISION_LIMIT = 10**6


# ---------------------------------------------------------------------------
# integer helpers

def is_prime(n: int) -> bool:
    """Deterministic for the sizes that occur here; large n go to sympy."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    if n < 10**12:
        r = math.isqrt(n)
        f = 41
        while f <= r:
            if n % f == 0 or n % (f + 2) == 0:
                return False
            f += 6
        return True
    from sympy import isprime

    return bool(isprime(n))


@lru_cache(maxsize=4096)
def _factorize_cached(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    m = n
    for p in (2, 3):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    f = 5
    while f * f <= m and f <= TRIAL_DIVISION_LIMIT:
        for p in (f, f + 2):
            while m % p == 0:
                out[p] = out.get(p, 0) + 1
                m //= p
        f += 6
    if m > 1:
        if f * f > m:
            out[m] = out.get(m, 0) + 1
        else:
            # cofactor survived trial division: hand over to Pollard rho
            from sympy import factorint

            for p, e in factorint(m).items():
                out[int(p)] = out.get(int(p), 0) + int(e)
    return tuple(sorted(out.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization ``{p: e}`` of a positive integer."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    return dict(_factorize_cached(int(n)))


# ---------------------------------------------------------------------------
# the group type

@dataclass(frozen=True)
class AbelianGroup:
    """Invariant-factor chain, smallest first.

    Construct through :func:`normalize` unless the chain is already
    canonical; the constructor only validates.
    """

    invariants: tuple[int, ...] = ()

    def __post_init__(self):
        inv = tuple(int(x) for x in self.invariants)
        object.__setattr__(self, "invariants", inv)
        for x in inv:
            if x < 2:
                raise ValueError(f"invariant factors must be >= 2, got {inv}")
        for a, b in zip(inv, inv[1:]):
            if b % a:
                raise ValueError(f"not a divisibility chain: {inv}")

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def exponent(self) -> int:
        return self.invariants[-1] if self.invariants else 1

    def is_trivial(self) -> bool:
        return not self.invariants

    def __len__(self):
        return len(self.invariants)

    def __iter__(self):
        return iter(self.invariants)

    def __str__(self):
        if not self.invariants:
            return "1"
        return " x ".join(f"C{x}" for x in self.invariants)

    def __repr__(self):
        return f"AbelianGroup({self.invariants!r})"

    def __add__(self, other: "AbelianGroup") -> "AbelianGroup":
        return direct_sum(self, other)

    def to_json(self) -> list[int]:
        return list(self.invariants)

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(())

    @classmethod
    def cyclic(cls, n: int) -> "AbelianGroup":
        return normalize([n])


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Sylow decomposition: prime -> exponents, largest first."""

    components: Mapping[int, tuple[int, ...]]

    def __post_init__(self):
        comps = {}
        for p, exps in self.components.items():
            p = int(p)
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            exps = tuple(int(e) for e in exps)
            if any(e < 1 for e in exps):
                raise ValueError(f"exponents must be positive, got {exps} at p={p}")
            if list(exps) != sorted(exps, reverse=True):
                raise ValueError(f"exponents must be sorted descending, got {exps}")
            if exps:
                comps[p] = exps
        object.__setattr__(self, "components", dict(sorted(comps.items())))

    @classmethod
    def of(cls, A: AbelianGroup) -> "PrimaryDecomposition":
        comps: dict[int, list[int]] = defaultdict(list)
        for x in reversed(A.invariants):
            for p, e in factorize(x).items():
                comps[p].append(e)
        return cls({p: tuple(v) for p, v in comps.items()})

    def to_group(self) -> AbelianGroup:
        r = max((len(v) for v in self.components.values()), default=0)
        chain = [1] * r
        for p, exps in self.components.items():
            for i, e in enumerate(exps):
                chain[r - 1 - i] *= p**e
        return AbelianGroup(tuple(chain))


# ---------------------------------------------------------------------------
# operations

def normalize(orders: Iterable[int]) -> AbelianGroup:
    """Invariant factors of ``C_{n_1} x ... x C_{n_k}``."""
    comps: dict[int, list[int]] = defaultdict(list)
    for n in orders:
        n = int(n)
        if n < 1:
            raise ValueError(f"cyclic orders must be positive, got {n}")
        for p, e in factorize(n).items():
            comps[p].append(e)
    return PrimaryDecomposition(
        {p: tuple(sorted(v, reverse=True)) for p, v in comps.items()}
    ).to_group()


def d(A: AbelianGroup) -> int:
    """Minimum number of generators: the length of the chain."""
    return len(A.invariants)


def d_p(A: AbelianGroup, p: int) -> int:
    """Rank of the Sylow p-subgroup."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return sum(1 for x in A.invariants if x % p == 0)


def direct_sum(*groups: AbelianGroup) -> AbelianGroup:
    return normalize([x for G in groups for x in G.invariants])


def primes(A: AbelianGroup) -> frozenset[int]:
    # every prime divisor of |A| divides the top invariant
    if not A.invariants:
        return frozenset()
    return frozenset(factorize(A.invariants[-1]))


def sylow(A: AbelianGroup, p: int) -> AbelianGroup:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    parts = []
    for x in A.invariants:
        q = 1
        while x % p == 0:
            x //= p
            q *= p
        if q > 1:
            parts.append(q)
    return AbelianGroup(tuple(parts))


# ---------------------------------------------------------------------------
# Smith normal form

def _as_matrix(M) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in M]
    if not rows or not rows[0]:
        raise ValueError("matrix must be at least 1x1")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    return rows


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return ``(D, L, R)`` with ``L @ M @ R == D``.

    ``D`` is diagonal with non-negative entries ``d_1 | d_2 | ...`` (zeros
    last), and ``L``, ``R`` are unimodular.  The pivot at each step is the
    entry of least nonzero absolute value in the remaining block, ties
    broken by row index then column index.
    """
    A = _as_matrix(M)
    m, n = len(A), len(A[0])
    L = _identity(m)
    R = _identity(n)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        # row_dst += c * row_src
        if c:
            A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
            L[dst] = [a + c * b for a, b in zip(L[dst], L[src])]

    def add_col(dst, src, c):
        if c:
            for row in A:
                row[dst] += c * row[src]
            for row in R:
                row[dst] += c * row[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // piv))
                    dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // piv))
                    dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m)
                 if any(A[i][j] % piv for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            L[t] = [-x for x in L[t]]
    return A, L, R


def from_relations(M) -> AbelianGroup:
    """Cokernel ``Z^n / rowspace(M)`` for an integer relation matrix ``M``.

    Rows are relations, columns are generators.  An infinite cokernel is
    rejected.
    """
    D, _, _ = smith_normal_form(M)
    n = len(D[0])
    diag = [D[i][i] if i < len(D) else 0 for i in range(n)]
    if any(x == 0 for x in diag):
        raise ValueError("relation matrix has infinite cokernel")
    return AbelianGroup(tuple(x for x in diag if x != 1))


# ---------------------------------------------------------------------------
# text forms

_CYCLIC_RE = re.compile(r"^C?(\d+)$", re.IGNORECASE)


def parse(text: str | Sequence[int]) -> AbelianGroup:
    """Parse ``C2 x C12``, ``[2,12]``, ``2,12``, ``1`` or ``trivial``.

    The factors need not form a chain; the result is normalized.
    """
    if not isinstance(text, str):
        return normalize(text)
    s = text.strip()
    if s.lower() in ("", "1", "trivial", "[]", "c1"):
        return AbelianGroup()
    if s.startswith("["):
        try:
            vals = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ValueError(f"cannot parse abelian group {text!r}") from exc
        if not isinstance(vals, list) or not all(isinstance(v, int) for v in vals):
            raise ValueError(f"cannot parse abelian group {text!r}")
        return normalize(vals)
    parts = re.split(r"\s*(?:[x×*,]|\s)\s*", s)
    orders = []
    for part in parts:
        if not part:
            continue
        m = _CYCLIC_RE.match(part)
        if not m:
            raise ValueError(f"cannot parse abelian group {text!r}")
        orders.append(int(m.group(1)))
    if not orders or any(o < 1 for o in orders):
        raise ValueError(f"cannot parse abelian group {text!r}")
    return normalize(orders)


# ---------------------------------------------------------------------------
# enumeration of isomorphism types

def _partitions(n: int, largest: int | None = None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_types(order: int) -> list[AbelianGroup]:
    """All abelian groups of the given order up to isomorphism."""
    fac = sorted(factorize(order).items()) if order > 1 else []
    options = [[(p, part) for part in _partitions(e)] for p, e in fac]
    out = []

    def rec(i, acc):
        if i == len(options):
            out.append(PrimaryDecomposition(dict(acc)).to_group())
            return
        for p, part in options[i]:
            rec(i + 1, acc + [(p, part)])

    rec(0, [])
    return sorted(out, key=lambda A: (len(A.invariants), A.invariants))
