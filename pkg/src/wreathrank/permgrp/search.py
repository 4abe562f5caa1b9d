"""Generation testing and generator-rank oracles.

``ElementTable`` enumerates a small group (order <= cap) and identifies each
element by its images of a base, so products of whole columns of elements
are a couple of numpy gathers.  On top of that sit

* ``d_exact``: exact minimal generating-set size by exhaustive search,
* ``d_upper_randomized``: seeded witness search for large groups,
* conjugacy classes and the abelian quotient ``W/W'``.

Exhaustive search prunes only with moves that provably preserve the
answer: conjugating a tuple (first element a class representative),
Nielsen moves against a normal subgroup ``N`` with cyclic quotient (later
elements taken in ``N``), replacing a later element inside its double
coset over the subgroup generated so far, and the lower bound
``d(W) >= max_p log_p [W : W' W^p]``.
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from ..abelian import AbelianGroup, factorize, smith_normal_form
from .bsgs import NotAMemberError, PermGroup, ProductReplacement, ResourceLimitError, _inv
from .constructions import decompose_wreath
from .perm import Permutation

ORDER_CAP = 5000


class Method(enum.Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    RANDOMIZED = "RANDOMIZED"


class Outcome(enum.Enum):
    FOUND = "FOUND"
    NOT_FOUND = "NOT_FOUND"
    EXHAUSTED_NEGATIVE = "EXHAUSTED_NEGATIVE"


@dataclass
class SearchReport:
    method: Method
    k: int
    outcome: Outcome
    trials: int
    seed: int | None = None
    witness: tuple[Permutation, ...] | None = None
    elapsed: float = 0.0
    group: PermGroup | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.outcome is Outcome.FOUND:
            if self.witness is None or self.group is None:
                raise ValueError("a FOUND report needs its witness and group")
            if not generates(self.group, self.witness):
                raise AssertionError("reported witness does not generate the group")

    def to_json(self) -> dict:
        return {
            "method": self.method.value,
            "k": self.k,
            "outcome": self.outcome.value,
            "trials": self.trials,
            "seed": self.seed,
            "witness": [str(w) for w in self.witness] if self.witness else None,
        }


# ---------------------------------------------------------------------------
# generation test through the stabilizer chain

def generates(W: PermGroup, gens: Sequence[Permutation]) -> bool:
    """True iff ``gens`` generate all of ``W`` (elements must lie in W)."""
    for g in gens:
        if g.degree != W.degree or not W.contains(g):
            raise NotAMemberError(f"{g} is not an element of {W}")
    target = W.order
    if target == 1:
        return True
    H = PermGroup(list(gens), W.degree, order_bound=target)
    return H.order == target


# ---------------------------------------------------------------------------
# enumerated groups

class ElementTable:
    """All elements of a small permutation group, indexed ``0..N-1``.

    Index 0 is the identity.  ``right(j)[i]`` is the index of
    ``e_i * e_j`` and ``left(j)[i]`` that of ``e_j * e_i``.
    """

    def __init__(self, G: PermGroup, cap: int = ORDER_CAP):
        N = G.order
        if N > cap:
            raise ResourceLimitError(f"|G| = {N} exceeds the order cap {cap}")
        self.group = G
        self.N = N
        self.degree = G.degree
        els = list(G.elements())
        els.sort(key=lambda p: (not p.is_identity(),))
        self.E = np.stack([p.array for p in els]).astype(np.intp)
        self.base = np.asarray(G.base if G.base else [0], dtype=np.intp)
        radix = max(self.degree, 2)
        if len(self.base) * math.log2(radix) < 62:
            self._weights = radix ** np.arange(len(self.base), dtype=np.int64)
        else:
            self._weights = None
            self._dict = {row.tobytes(): i for i, row in enumerate(self.E[:, self.base])}
        if self._weights is not None:
            keys = self._keys(self.E[:, self.base])
            self._order = np.argsort(keys, kind="stable")
            self._sorted = keys[self._order]
            if np.any(np.diff(self._sorted) == 0):
                raise AssertionError("base images do not separate elements")
        self._right: dict[int, np.ndarray] = {}
        self._left: dict[int, np.ndarray] = {}
        self.inv = self.lookup(np.stack([_inv(row) for row in self.E])[:, self.base])
        self._orders = None

    def _keys(self, rows: np.ndarray) -> np.ndarray:
        return rows.astype(np.int64) @ self._weights

    def lookup(self, base_images: np.ndarray) -> np.ndarray:
        """Indices of the elements with the given base images (rows)."""
        if self._weights is None:
            return np.array([self._dict[r.tobytes()] for r in np.ascontiguousarray(base_images)],
                            dtype=np.intp)
        keys = self._keys(base_images)
        pos = np.searchsorted(self._sorted, keys)
        return self._order[pos]

    def index(self, g: Permutation | np.ndarray) -> int:
        a = g.array if isinstance(g, Permutation) else np.asarray(g)
        i = int(self.lookup(a[self.base][None, :])[0])
        if not np.array_equal(self.E[i], a):
            raise NotAMemberError("element is not in the enumerated group")
        return i

    def element(self, i: int) -> Permutation:
        return Permutation._wrap(self.E[i].copy())

    def right(self, j: int) -> np.ndarray:
        col = self._right.get(j)
        if col is None:
            # (e_i e_j)(b) = e_j[e_i[b]]
            col = self.lookup(self.E[j][self.E[:, self.base]])
            self._right[j] = col
        return col

    def left(self, j: int) -> np.ndarray:
        row = self._left.get(j)
        if row is None:
            # (e_j e_i)(b) = e_i[e_j[b]]
            row = self.lookup(self.E[:, self.E[j][self.base]])
            self._left[j] = row
        return row

    def mul(self, i: int, j: int) -> int:
        return int(self.right(j)[i])

    def gen_indices(self) -> list[int]:
        return [self.index(g) for g in self.group.generators]

    # -- subgroups ---------------------------------------------------------
    def closure(self, gens: Sequence[int], stop_at_half: bool = False) -> np.ndarray:
        """Boolean mask of the subgroup generated by the given indices."""
        mask = np.zeros(self.N, dtype=bool)
        mask[0] = True
        cols = [self.right(int(g)) for g in gens if g != 0]
        frontier = np.array([0], dtype=np.intp)
        count = 1
        half = self.N // 2
        while frontier.size and cols:
            nxt = np.concatenate([c[frontier] for c in cols])
            nxt = np.unique(nxt[~mask[nxt]])
            if not nxt.size:
                break
            mask[nxt] = True
            count += nxt.size
            frontier = nxt
            if stop_at_half and count > half:
                # a subgroup of index < 2 is everything
                mask[:] = True
                break
        return mask

    def generates(self, gens: Sequence[int]) -> bool:
        return bool(self.closure(gens, stop_at_half=True).all())

    def normal_closure(self, gens: Sequence[int]) -> np.ndarray:
        ambient = self.gen_indices()
        cur = set(int(g) for g in gens if g != 0)
        while True:
            mask = self.closure(sorted(cur))
            grew = False
            for g in list(cur):
                for x in ambient:
                    c = self.conj(g, x)
                    if not mask[c]:
                        cur.add(c)
                        grew = True
            if not grew:
                return mask

    def conj(self, g: int, x: int) -> int:
        """Index of ``x^-1 g x``."""
        return self.mul(self.mul(int(self.inv[x]), g), x)

    def commutator(self, a: int, b: int) -> int:
        ia, ib = int(self.inv[a]), int(self.inv[b])
        return self.mul(self.mul(self.mul(ia, ib), a), b)

    def orbit_labels(self, maps: Sequence[np.ndarray]) -> np.ndarray:
        """Smallest index in each orbit of the permutations ``maps`` of 0..N-1."""
        labels = np.arange(self.N, dtype=np.intp)
        if not maps:
            return labels
        while True:
            new = labels
            for m in maps:
                new = np.minimum(new, new[m])
            # pointer jumping speeds up long orbits
            new = new[new]
            if np.array_equal(new, labels):
                return labels
            labels = new

    def power_map(self, e: int) -> np.ndarray:
        """Index of ``x^e`` for every x."""
        P = np.broadcast_to(np.arange(self.degree, dtype=np.intp), self.E.shape).copy()
        B = self.E.copy()
        k = e
        while k:
            if k & 1:
                P = np.take_along_axis(B, P, axis=1)
            k >>= 1
            if k:
                B = np.take_along_axis(B, B, axis=1)
        return self.lookup(P[:, self.base])

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = np.array([self.element(i).order() for i in range(self.N)], dtype=np.int64)
        return self._orders

    def sort_rank(self) -> np.ndarray:
        """Search order: element order descending, then images lexicographic."""
        keys = [self.E[:, c] for c in range(self.degree - 1, -1, -1)]
        perm = np.lexsort(keys + [-self.orders])
        rank = np.empty(self.N, dtype=np.intp)
        rank[perm] = np.arange(self.N)
        return rank

    def class_labels(self) -> np.ndarray:
        maps = []
        for g in self.gen_indices():
            ig = int(self.inv[g])
            # x -> g^-1 x g
            maps.append(self.right(g)[self.left(ig)])
        return self.orbit_labels(maps)


def conjugacy_class_reps(W: PermGroup, cap: int = ORDER_CAP) -> list[Permutation]:
    T = W if isinstance(W, ElementTable) else ElementTable(W, cap)
    labels = T.class_labels()
    rank = T.sort_rank()
    reps = []
    for lab in np.unique(labels):
        members = np.nonzero(labels == lab)[0]
        reps.append(int(members[np.argmin(rank[members])]))
    reps.sort(key=lambda i: rank[i])
    return [T.element(i) for i in reps]


# ---------------------------------------------------------------------------
# abelian quotient

@dataclass
class AbelianQuotient:
    invariants: AbelianGroup
    derived_mask: np.ndarray
    coords: np.ndarray  # per element, coordinates w.r.t. the invariants


def _abelian_quotient(T: ElementTable) -> AbelianQuotient:
    gens = T.gen_indices()
    comms = [T.commutator(a, b) for a, b in combinations(gens, 2)]
    D = T.normal_closure(comms) if comms else T.closure([])
    dgens = [int(i) for i in np.nonzero(D)[0]]
    # reduce to a few generators of D for the coset labelling
    dg = _small_gens(T, D)
    cos = T.orbit_labels([T.right(j) for j in dg])
    reps = np.unique(cos)
    nq = reps.size
    qindex = {int(r): i for i, r in enumerate(reps)}
    s = len(gens)
    if nq == 1:
        return AbelianQuotient(AbelianGroup(), D, np.zeros((T.N, 0), dtype=np.int64))
    # breadth-first tree over the quotient: exponent vectors per coset
    vec: dict[int, list[int]] = {qindex[int(cos[0])]: [0] * s}
    tree_rep = {qindex[int(cos[0])]: 0}
    frontier = [qindex[int(cos[0])]]
    rels = []
    while frontier:
        nxt = []
        for q in frontier:
            x = tree_rep[q]
            for j, g in enumerate(gens):
                y = T.mul(x, g)
                qy = qindex[int(cos[y])]
                v = vec[q][:]
                v[j] += 1
                if qy not in vec:
                    vec[qy] = v
                    tree_rep[qy] = y
                    nxt.append(qy)
                else:
                    rels.append([a - b for a, b in zip(v, vec[qy])])
        frontier = nxt
    rels = [r for r in rels if any(r)] or [[0] * s]
    Dm, _, R = smith_normal_form(rels)
    diag = [Dm[i][i] if i < len(Dm) else 0 for i in range(s)]
    if any(x == 0 for x in diag):
        raise AssertionError("abelian quotient came out infinite")
    keep = [i for i, x in enumerate(diag) if x != 1]
    inv = [diag[i] for i in keep]
    Rk = np.array([[R[r][c] for c in keep] for r in range(s)], dtype=object)
    qcoords = np.zeros((nq, len(keep)), dtype=np.int64)
    for q, v in vec.items():
        c = np.array(v, dtype=object) @ Rk
        qcoords[q] = [int(c[i]) % inv[i] for i in range(len(keep))]
    coords = qcoords[[qindex[int(c)] for c in cos]]
    A = AbelianGroup(tuple(inv))
    if A.order != nq:
        raise AssertionError("abelian quotient order mismatch")
    return AbelianQuotient(A, D, coords)


def _small_gens(T: ElementTable, mask: np.ndarray) -> list[int]:
    """A short generating list for the subgroup given by ``mask``."""
    gens: list[int] = []
    cur = T.closure([])
    for i in np.nonzero(mask)[0]:
        if not cur[i]:
            gens.append(int(i))
            cur = T.closure(gens)
            if np.array_equal(cur, mask):
                break
    return gens


def derived_quotient_invariants(W: PermGroup, order_cap: int = ORDER_CAP) -> AbelianGroup:
    """Invariants of ``W / W'`` for a group small enough to enumerate."""
    return _abelian_quotient(ElementTable(W, order_cap)).invariants


def derived_quotient_invariants_bsgs(W: PermGroup, box_cap: int = 200_000) -> AbelianGroup:
    """Invariants of ``W / W'`` without enumerating W.

    ``W'`` is the normal closure of the generator commutators on the
    stabilizer chain; relations among the generators modulo ``W'`` are found
    by searching the box of exponent vectors below the generators' orders
    in the quotient.
    """
    return _derived_quotient_bsgs(W, box_cap)


def derived_subgroup(W: PermGroup) -> PermGroup:
    gens = list(W.generators)
    comms = [a.commutator(b) for a, b in combinations(gens, 2)]
    comms = [c for c in comms if not c.is_identity()]
    D = PermGroup(comms, W.degree)
    while True:
        new = []
        for c in D.generators:
            for g in gens:
                x = c.conjugate(g)
                if not D.contains(x) and x not in new:
                    new.append(x)
        if not new:
            return D
        D = PermGroup(list(D.generators) + new, W.degree)


def _derived_quotient_bsgs(W: PermGroup, box_cap: int = 200_000) -> AbelianGroup:
    D = derived_subgroup(W)
    nq = W.order // D.order
    gens = list(W.generators)
    s = len(gens)
    if nq == 1:
        return AbelianGroup()
    ords = []
    for g in gens:
        t, x = 1, g
        while not D.contains(x):
            x = x * g
            t += 1
        ords.append(t)
    if math.prod(ords) > box_cap:
        raise ResourceLimitError("abelian quotient relation box too large")
    rels = [[o if i == j else 0 for j in range(s)] for i, o in enumerate(ords)]
    powers = [[g**e for e in range(o)] for g, o in zip(gens, ords)]
    ident = W.identity()
    for vec in np.ndindex(*ords):
        if not any(vec):
            continue
        x = ident
        for j, e in enumerate(vec):
            if e:
                x = x * powers[j][e]
        if D.contains(x):
            rels.append(list(vec))
    from ..abelian import from_relations

    A = from_relations(rels)
    if A.order != nq:
        raise AssertionError("abelian quotient order mismatch")
    return A


# ---------------------------------------------------------------------------
# exact rank

def frattini_lower_bound(T: ElementTable, D: np.ndarray | None = None) -> int:
    """``max_p log_p [W : W' W^p]`` over primes p dividing ``|W/W'|``."""
    if D is None:
        gens = T.gen_indices()
        comms = [T.commutator(a, b) for a, b in combinations(gens, 2)]
        D = T.normal_closure(comms) if comms else T.closure([])
    index = T.N // int(D.sum())
    best = 0
    dgens = _small_gens(T, D)
    for p in factorize(index) if index > 1 else {}:
        pw = np.unique(T.power_map(p))
        M = T.closure(sorted(set(dgens) | set(int(x) for x in pw)))
        idx = T.N // int(M.sum())
        e = 0
        while idx > 1:
            if idx % p:
                raise AssertionError("W/W'W^p is not a p-group")
            idx //= p
            e += 1
        best = max(best, e)
    return best


def _cyclic_quotient_kernel(T: ElementTable, aq: AbelianQuotient) -> tuple[np.ndarray, int]:
    """Kernel of the projection of W onto the largest invariant factor."""
    if not aq.invariants.invariants:
        return np.ones(T.N, dtype=bool), 1
    m = aq.invariants.invariants[-1]
    ker = aq.coords[:, -1] == 0
    # sanity: N is normal with W/N cyclic of order m
    for g in T.gen_indices():
        ig = int(T.inv[g])
        conj = T.right(g)[T.left(ig)]
        if not np.array_equal(ker[conj], ker):
            raise AssertionError("kernel is not normal")
    if T.N // int(ker.sum()) != m:
        raise AssertionError("kernel has the wrong index")
    return ker, m


class _ExactSearch:
    def __init__(self, T: ElementTable, use_classes: bool, prune: bool):
        self.T = T
        self.use_classes = use_classes
        self.prune = prune
        self.rank = T.sort_rank()
        self.closures = 0
        if prune:
            aq = _abelian_quotient(T)
            self.aq = aq
            self.N_mask, self.m = _cyclic_quotient_kernel(T, aq)
        else:
            self.aq = None
            self.N_mask, self.m = np.ones(T.N, dtype=bool), 1

    def first_candidates(self) -> list[int]:
        T = self.T
        if self.use_classes:
            labels = T.class_labels()
            cands = []
            for lab in np.unique(labels):
                members = np.nonzero(labels == lab)[0]
                cands.append(int(members[np.argmin(self.rank[members])]))
        else:
            cands = list(range(T.N))
        if self.prune and self.m > 1:
            # the image must generate the cyclic quotient W/N
            m = self.m
            last = self.aq.coords[:, -1]
            cands = [c for c in cands if math.gcd(int(last[c]), m) == 1]
        cands.sort(key=lambda i: self.rank[i])
        return cands

    def double_coset_reps(self, H: Sequence[int]) -> list[int]:
        T = self.T
        maps = []
        for h in H:
            maps.append(T.right(h))
            maps.append(T.left(h))
        labels = T.orbit_labels(maps)
        inN = self.N_mask
        order = np.argsort(self.rank, kind="stable")
        seen = set()
        reps = []
        for i in order:
            if not inN[i]:
                continue
            lab = int(labels[i])
            if lab in seen:
                continue
            seen.add(lab)
            reps.append(int(i))
        return reps

    def search(self, k: int) -> tuple[int, ...] | None:
        T = self.T
        if k == 0:
            return () if T.N == 1 else None
        if k == 1:
            hit = np.nonzero(T.orders == T.N)[0]
            return (int(hit[0]),) if hit.size else None
        firsts = self.first_candidates()
        if not self.prune:
            rest = sorted(range(T.N), key=lambda i: self.rank[i])
            for x in firsts:
                for tail in combinations(rest, k - 1):
                    self.closures += 1
                    if T.generates((x,) + tail):
                        return (x,) + tail
            return None
        for x in firsts:
            found = self._extend((x,), k)
            if found:
                return found
        return None

    def _extend(self, prefix: tuple[int, ...], k: int):
        T = self.T
        for y in self.double_coset_reps(prefix):
            tup = prefix + (y,)
            if len(tup) == k:
                self.closures += 1
                if T.generates(tup):
                    return tup
            else:
                found = self._extend(tup, k)
                if found:
                    return found
        return None


def exact_search(W: PermGroup | ElementTable, k: int, order_cap: int = ORDER_CAP,
                 use_classes: bool = True, prune: bool = True) -> SearchReport:
    """Exhaustive search for a generating k-tuple."""
    t0 = time.perf_counter()
    T = W if isinstance(W, ElementTable) else ElementTable(W, order_cap)
    S = _ExactSearch(T, use_classes, prune)
    found = S.search(k)
    group = T.group
    if found is None:
        return SearchReport(Method.EXHAUSTIVE, k, Outcome.EXHAUSTED_NEGATIVE, S.closures,
                            elapsed=time.perf_counter() - t0)
    return SearchReport(Method.EXHAUSTIVE, k, Outcome.FOUND, S.closures,
                        witness=tuple(T.element(i) for i in found), group=group,
                        elapsed=time.perf_counter() - t0)


def d_exact(W: PermGroup, order_cap: int = ORDER_CAP, use_classes: bool = True,
            prune: bool = True) -> int:
    """Exact minimal number of generators of a group of order <= order_cap."""
    T = ElementTable(W, order_cap)
    if T.N == 1:
        return 0
    S = _ExactSearch(T, use_classes, prune)
    k = 1
    if prune:
        k = max(1, frattini_lower_bound(T, S.aq.derived_mask))
    while True:
        if S.search(k) is not None:
            return k
        k += 1


# ---------------------------------------------------------------------------
# randomized witness search

def _rank_mod_p(M: np.ndarray, p: int) -> int:
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = np.nonzero(M[r:, c])[0]
        if not piv.size:
            continue
        pr = r + int(piv[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        nz = np.nonzero(col)[0]
        if nz.size:
            M[nz] = (M[nz] - np.outer(col[nz], M[r])) % p
        r += 1
    return r


class AbelianWreathTester:
    """Exact generation test for ``A wr G`` with A given by ``abelian_rep``.

    A tuple generates iff its block permutations generate the top group and
    the Schreier generators of the kernel of the top projection span the
    base group ``A^n``; the span is tested one prime at a time modulo p.
    """

    def __init__(self, W: PermGroup):
        st = W.structure
        inner_st = st["inner"].structure if st.get("kind") == "wreath" else {}
        if inner_st.get("kind") == "abelian":
            self.A: AbelianGroup = inner_st["group"]
            offsets = inner_st["offsets"]
        elif inner_st.get("kind") == "cyclic":
            # C_n on n points is the one-cycle abelian model
            self.A = AbelianGroup.cyclic(inner_st["n"])
            offsets = (0,) if inner_st["n"] > 1 else ()
        else:
            raise ValueError("not an abelian-base wreath product")
        self.W = W
        self.top = st["top"]
        self.n = st["n"]
        self.offs = np.asarray(offsets, dtype=np.intp)
        self.inv = np.asarray(self.A.invariants, dtype=np.int64)
        self.Ttop = ElementTable(self.top, cap=max(ORDER_CAP, self.top.order))

    def split(self, w: np.ndarray) -> tuple[np.ndarray, int]:
        inner, top = decompose_wreath(self.W, w)
        coords = (inner[:, self.offs] - self.offs) % self.inv if self.offs.size else inner[:, :0]
        return coords.astype(np.int64), self.Ttop.index(top)

    def generates_arrays(self, elems: Sequence[np.ndarray]) -> bool:
        parts = [self.split(w) for w in elems]
        T = self.Ttop
        if not T.generates([t for _, t in parts]):
            return False
        if not self.A.invariants:
            return True
        # transversal t_g = (f_g, g) over the top group, by breadth first search
        f = {0: np.zeros((self.n, len(self.inv)), dtype=np.int64)}
        frontier = [0]
        vecs = []
        while frontier:
            nxt = []
            for g in frontier:
                hg = T.E[g]
                for fs, s in parts:
                    g2 = T.mul(g, s)
                    v = f[g] + fs[hg]
                    if g2 not in f:
                        f[g2] = v % self.inv
                        nxt.append(g2)
                    else:
                        vecs.append((v - f[g2]) % self.inv)
            frontier = nxt
        if not vecs:
            return False
        V = np.stack(vecs)
        for p in factorize(int(self.inv[-1])):
            cols = np.nonzero(self.inv % p == 0)[0]
            M = V[:, :, cols].reshape(len(vecs), -1)
            if _rank_mod_p(M, p) < self.n * cols.size:
                return False
        return True


def d_upper_randomized(W: PermGroup, k: int, trials: int, seed: int = 0) -> SearchReport:
    """Seeded search for a generating k-tuple among random tuples.

    FOUND carries a witness re-verified on the stabilizer chain; NOT_FOUND is
    statistical evidence only.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    arrays = [g.array for g in W.generators]
    sampler = ProductReplacement(arrays, rng, degree=W.degree)
    try:
        tester = AbelianWreathTester(W)
        test = tester.generates_arrays
    except ValueError:
        target = W.order

        def test(elems):
            H = PermGroup([Permutation._wrap(e.copy()) for e in elems], W.degree,
                          order_bound=target)
            return H.order == target

    for t in range(1, trials + 1):
        elems = [sampler().copy() for _ in range(k)]
        if test(elems):
            witness = tuple(Permutation._wrap(e) for e in elems)
            return SearchReport(Method.RANDOMIZED, k, Outcome.FOUND, t, seed, witness,
                                time.perf_counter() - t0, group=W)
    return SearchReport(Method.RANDOMIZED, k, Outcome.NOT_FOUND, trials, seed,
                        elapsed=time.perf_counter() - t0)
