"""Base and strong generating sets (Schreier-Sims).

The chain is built deterministically: every Schreier generator of every
level is sifted exactly once (a checked pair stays valid because orbits and
generator lists only ever grow by appending).  When the caller knows an
a-priori upper bound on the order, a randomized fill runs first and stops as
soon as the product of basic orbit lengths reaches that bound; that product
is always a lower bound for the order of the group generated, so hitting
the bound certifies a complete chain.

Transversals are stored explicitly for degrees up to ``EXPLICIT_DEGREE``; for
larger degrees a level keeps a Schreier vector and rebuilds coset
representatives by walking the orbit tree.
"""

from __future__ import annotations

import logging
import math
import random
from typing import Iterable, Iterator, Sequence

import numpy as np

from .perm import Permutation, _identity_array

logger = logging.getLogger(__name__)

EXPLICIT_DEGREE = 2048


class ResourceLimitError(RuntimeError):
    """A configured size cap would be exceeded."""


class NotAMemberError(ValueError):
    """An element that was required to lie in a group does not."""


def _inv(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[a] = np.arange(a.shape[0], dtype=a.dtype)
    return out


def _is_id(a: np.ndarray, ident: np.ndarray) -> bool:
    return bool(np.array_equal(a, ident))


class _Level:
    """One basic orbit with its transversal."""

    __slots__ = ("point", "gens", "ginvs", "orbit", "where", "explicit",
                 "u", "uinv", "parent", "label", "done")

    def __init__(self, point: int, degree: int, explicit: bool):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.ginvs: list[np.ndarray] = []
        self.orbit = [point]
        self.where = np.full(degree, -1, dtype=np.int64)
        self.where[point] = 0
        self.explicit = explicit
        ident = _identity_array(degree)
        self.u = [ident] if explicit else None
        self.uinv = [ident] if explicit else None
        self.parent = [-1]
        self.label = [-1]
        # done[k] = number of orbit points whose Schreier generator with
        # gens[k] has been sifted successfully
        self.done: list[int] = []

    def __len__(self):
        return len(self.orbit)

    def _record(self, gamma: int, beta_idx: int, k: int):
        self.where[gamma] = len(self.orbit)
        self.orbit.append(gamma)
        self.parent.append(beta_idx)
        self.label.append(k)
        if self.explicit:
            u = self.gens[k][self.u[beta_idx]]
            self.u.append(u)
            self.uinv.append(_inv(u))

    def add_gen(self, g: np.ndarray, ginv: np.ndarray):
        self.gens.append(g)
        self.ginvs.append(ginv)
        self.done.append(0)
        k_new = len(self.gens) - 1
        where = self.where
        # images of the existing orbit under the new generator
        frontier = []
        n0 = len(self.orbit)
        imgs = g[np.asarray(self.orbit[:n0], dtype=np.intp)]
        for idx in np.nonzero(where[imgs] < 0)[0].tolist():
            gamma = int(imgs[idx])
            if where[gamma] < 0:
                self._record(gamma, idx, k_new)
                frontier.append(len(self.orbit) - 1)
        self._close(frontier)

    def _close(self, frontier: list[int]):
        where = self.where
        gens = self.gens
        while frontier:
            nxt = []
            for bi in frontier:
                beta = self.orbit[bi]
                for k, s in enumerate(gens):
                    gamma = int(s[beta])
                    if where[gamma] < 0:
                        self._record(gamma, bi, k)
                        nxt.append(len(self.orbit) - 1)
            frontier = nxt

    def rep(self, idx: int) -> np.ndarray:
        """Coset representative ``u`` with ``point^u = orbit[idx]``."""
        if self.explicit:
            return self.u[idx]
        path = []
        while idx > 0:
            path.append(self.label[idx])
            idx = self.parent[idx]
        a = _identity_array(self.where.shape[0])
        for k in reversed(path):
            a = self.gens[k][a]
        return a

    def strip(self, g: np.ndarray, idx: int) -> np.ndarray:
        """``g * rep(idx)^-1``."""
        if self.explicit:
            return self.uinv[idx][g]
        while idx > 0:
            g = self.ginvs[self.label[idx]][g]
            idx = self.parent[idx]
        return g

    def rep_inv(self, idx: int) -> np.ndarray:
        if self.explicit:
            return self.uinv[idx]
        return self.strip(_identity_array(self.where.shape[0]), idx)


class _Chain:
    def __init__(self, degree: int):
        self.degree = degree
        self.explicit = degree <= EXPLICIT_DEGREE
        self.levels: list[_Level] = []
        self.strong: list[np.ndarray] = []
        self.ident = _identity_array(degree)

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        return math.prod(len(lv) for lv in self.levels)

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            idx = lv.where[g[lv.point]]
            if idx < 0:
                return g, i
            g = lv.strip(g, int(idx))
        return g, len(self.levels)

    def _new_level(self, h: np.ndarray):
        moved = np.nonzero(h != self.ident)[0]
        point = int(moved[0])
        self.levels.append(_Level(point, self.degree, self.explicit))

    def add_strong(self, h: np.ndarray, first: int, last: int):
        """Add ``h`` to levels ``first..last``; ``last == len`` opens a level."""
        if last == len(self.levels):
            self._new_level(h)
        hinv = _inv(h)
        self.strong.append(h)
        for lvl in range(first, last + 1):
            self.levels[lvl].add_gen(h, hinv)

    def seed(self, gens: Sequence[np.ndarray], base_hint: Sequence[int] = ()):
        for b in base_hint:
            if b not in self.base:
                self.levels.append(_Level(int(b), self.degree, self.explicit))
        for g in gens:
            if _is_id(g, self.ident):
                continue
            # deepest level whose base prefix g fixes
            j = 0
            while j < len(self.levels) and g[self.levels[j].point] == self.levels[j].point:
                j += 1
            self.add_strong(g, 0, j)

    def _check_level(self, i: int):
        lv = self.levels[i]
        k = 0
        while k < len(lv.gens):
            s = lv.gens[k]
            idx = lv.done[k]
            while idx < len(lv.orbit):
                beta = lv.orbit[idx]
                gamma_idx = int(lv.where[s[beta]])
                if lv.label[gamma_idx] == k and lv.parent[gamma_idx] == idx:
                    # tree edge: the Schreier generator is trivial
                    lv.done[k] = idx = idx + 1
                    continue
                h = lv.strip(s[lv.rep(idx)], gamma_idx)
                if not _is_id(h, self.ident):
                    r, j = self.sift(h, i + 1)
                    if not _is_id(r, self.ident):
                        return r, j
                lv.done[k] = idx = idx + 1
            k += 1
        return None

    def complete(self):
        i = len(self.levels) - 1
        while i >= 0:
            res = self._check_level(i)
            if res is None:
                i -= 1
                continue
            r, j = res
            self.add_strong(r, i + 1, j)
            i = j

    def random_fill(self, sampler, bound: int, patience: int = 60) -> bool:
        misses = 0
        while self.order() < bound:
            g = sampler()
            r, j = self.sift(g)
            if _is_id(r, self.ident):
                misses += 1
                if misses >= patience:
                    return False
                continue
            misses = 0
            self.add_strong(r, 0, j)
        return self.order() == bound


class ProductReplacement:
    """Product replacement ("rattle") sampler on raw permutation arrays.

    Ten slots seeded from the generators plus an accumulator; fifty
    burn-in steps.  Deterministic for a fixed ``random.Random`` state.
    """

    def __init__(self, gens: Sequence[np.ndarray], rng: random.Random,
                 slots: int = 10, burn_in: int = 50, degree: int | None = None):
        gens = [np.asarray(g) for g in gens]
        if not gens:
            ident = _identity_array(degree or 1)
            gens = [ident]
        self.rng = rng
        self.state = [gens[i % len(gens)] for i in range(max(slots, len(gens)))]
        self.acc = _identity_array(gens[0].shape[0])
        for _ in range(burn_in):
            self.step()

    def step(self) -> np.ndarray:
        rng = self.rng
        n = len(self.state)
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        x = self.state[j]
        if rng.random() < 0.5:
            x = _inv(x)
        if rng.random() < 0.5:
            self.state[i] = x[self.state[i]]  # state[i] * x
        else:
            self.state[i] = self.state[i][x]  # x * state[i]
        self.acc = self.state[i][self.acc]
        return self.acc

    __call__ = step


class PermGroup:
    """Permutation group with a lazily built base and strong generating set.

    ``order_bound`` is an upper bound on the order that the caller knows
    for structural reasons (for instance ``|H|^n |G|`` for a subgroup of a
    wreath product); it only lets the construction stop early, the result
    is the exact order either way.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 *, name: str | None = None, order_bound: int | None = None,
                 seed: int = 0, base_hint: Sequence[int] = ()):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group with no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self._degree = int(degree)
        self._gens = tuple(gens)
        self.name = name
        self._order_bound = order_bound
        self._seed = seed
        self._base_hint = tuple(base_hint)
        self._chain: _Chain | None = None
        # structural metadata attached by constructors (wreath blocks, ...)
        self.structure: dict = {}

    # -- construction ------------------------------------------------------
    def _build(self) -> _Chain:
        chain = _Chain(self._degree)
        arrays = [g.array for g in self._gens]
        chain.seed(arrays, self._base_hint)
        done = False
        if self._order_bound is not None and chain.levels:
            rng = random.Random(self._seed)
            sampler = ProductReplacement(arrays, rng)
            done = chain.random_fill(sampler, self._order_bound)
        if not done:
            chain.complete()
        self._verify(chain)
        return chain

    def _verify(self, chain: _Chain, rounds: int = 8):
        # cheap randomized audit of the finished chain
        if not chain.levels:
            return
        rng = random.Random(self._seed + 1)
        sampler = ProductReplacement([g.array for g in self._gens], rng, burn_in=10)
        for _ in range(rounds):
            r, _ = chain.sift(sampler())
            if not _is_id(r, chain.ident):
                raise AssertionError("stabilizer chain failed its verification pass")

    @property
    def chain(self) -> _Chain:
        if self._chain is None:
            self._chain = self._build()
        return self._chain

    # -- basic data ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._gens

    @property
    def order(self) -> int:
        return self.chain.order()

    def __len__(self):
        return self.order

    @property
    def base(self) -> list[int]:
        return self.chain.base

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._wrap(a.copy()) for a in self.chain.strong]

    @property
    def basic_orbit_sizes(self) -> list[int]:
        return [len(lv) for lv in self.chain.levels]

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self._degree} ngens={len(self._gens)}>"

    def __str__(self):
        return self.name or repr(self)

    # -- membership ---------------------------------------------------------
    def sift(self, g: Permutation) -> tuple[Permutation, int]:
        r, j = self.chain.sift(g.array)
        return Permutation._wrap(r.copy()), j

    def contains(self, g: Permutation) -> bool:
        if g.degree != self._degree:
            return False
        r, _ = self.chain.sift(g.array)
        return _is_id(r, self.chain.ident)

    __contains__ = contains

    def random_element(self, rng: random.Random | None = None) -> Permutation:
        """Uniformly random element (product of random coset representatives)."""
        rng = rng or random.Random()
        a = self.chain.ident
        for lv in reversed(self.chain.levels):
            a = lv.rep(rng.randrange(len(lv)))[a]
        return Permutation._wrap(a.copy())

    def elements(self) -> Iterator[Permutation]:
        """All elements, as products of coset representatives."""
        levels = self.chain.levels
        ident = self.chain.ident

        def rec(i, acc):
            if i < 0:
                yield Permutation._wrap(acc.copy())
                return
            lv = levels[i]
            for idx in range(len(lv)):
                # acc applied first: elements of the deeper stabilizer
                yield from rec(i - 1, lv.rep(idx)[acc])

        yield from rec(len(levels) - 1, ident)

    def subgroup(self, gens: Sequence[Permutation], **kw) -> "PermGroup":
        for g in gens:
            if not self.contains(g):
                raise NotAMemberError(f"{g} is not in {self}")
        return PermGroup(gens, self._degree, **kw)

    def orbit(self, point: int) -> list[int]:
        seen = {point}
        frontier = [point]
        arrays = [g.array for g in self._gens]
        while frontier:
            nxt = []
            for b in frontier:
                for a in arrays:
                    c = int(a[b])
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return sorted(seen)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self._degree

    def to_json(self) -> dict:
        return {"degree": self._degree, "generators": [g.to_json() for g in self._gens]}

    @classmethod
    def from_json(cls, data: dict) -> "PermGroup":
        gens = [Permutation(x) for x in data["generators"]]
        return cls(gens, data["degree"])


def group(gens: Sequence[Permutation], degree: int | None = None, **kw) -> PermGroup:
    return PermGroup(gens, degree, **kw)


def naive_closure(gens: Sequence[Permutation], degree: int, cap: int = 5000) -> set[bytes]:
    """Breadth-first closure; independent of the stabilizer chain."""
    ident = Permutation.identity(degree)
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                k = y.key()
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ResourceLimitError(f"closure exceeds {cap} elements")
        frontier = nxt
    return set(seen)
