"""Standard permutation groups and product constructions."""

from __future__ import annotations

import math

import numpy as np

from ..abelian import AbelianGroup
from .bsgs import PermGroup, ResourceLimitError
from .perm import Permutation

REGULAR_CAP = 10_000
WREATH_DEGREE_CAP = 20_000


def _cycle(degree: int, points) -> Permutation:
    return Permutation.from_cycles([list(points)], degree)


def cyclic(n: int) -> PermGroup:
    """``C_n`` acting regularly on ``n`` points."""
    if n < 1:
        raise ValueError("n must be positive")
    gens = [_cycle(n, range(n))] if n > 1 else []
    G = PermGroup(gens, n, name=f"C{n}", order_bound=n)
    G.structure = {"kind": "cyclic", "n": n}
    return G


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    gens = []
    if n > 1:
        gens.append(_cycle(n, [0, 1]))
    if n > 2:
        gens.append(_cycle(n, range(n)))
    return PermGroup(gens, n, name=f"S{n}", order_bound=math.factorial(n))


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    gens = []
    if n >= 3:
        gens.append(_cycle(n, [0, 1, 2]))
    if n >= 4:
        long = range(n) if n % 2 else range(1, n)
        gens.append(_cycle(n, long))
    return PermGroup(gens, n, name=f"A{n}", order_bound=max(1, math.factorial(n) // 2))


def _shift(p: Permutation, offset: int, degree: int) -> Permutation:
    a = np.arange(degree)
    a[offset:offset + p.degree] = p.array + offset
    return Permutation(a, check=False)


def direct_product(G: PermGroup, H: PermGroup) -> PermGroup:
    """Intransitive product on ``deg G + deg H`` points (G first)."""
    n = G.degree + H.degree
    gens = [_shift(g, 0, n) for g in G.generators]
    gens += [_shift(h, G.degree, n) for h in H.generators]
    name = f"{G} x {H}"
    P = PermGroup(gens, n, name=name, order_bound=G.order * H.order)
    P.structure = {"kind": "direct", "factors": (G, H)}
    return P


def abelian_rep(A: AbelianGroup) -> PermGroup:
    """``C_{d_1} x ... x C_{d_r}`` on ``sum d_i`` points (one cycle each).

    The trivial group is represented on a single point.
    """
    inv = list(A.invariants)
    if not inv:
        G = PermGroup([], 1, name="1", order_bound=1)
        G.structure = {"kind": "abelian", "group": A, "offsets": ()}
        return G
    degree = sum(inv)
    gens, offsets, off = [], [], 0
    for x in inv:
        gens.append(_cycle(degree, range(off, off + x)))
        offsets.append(off)
        off += x
    G = PermGroup(gens, degree, name=str(A), order_bound=A.order)
    G.structure = {"kind": "abelian", "group": A, "offsets": tuple(offsets)}
    return G


def abelian_coordinates(G: PermGroup, g: np.ndarray) -> np.ndarray:
    """Coordinates of an element of an :func:`abelian_rep` group."""
    st = G.structure
    offs = np.asarray(st["offsets"], dtype=np.intp)
    inv = np.asarray(st["group"].invariants, dtype=np.intp)
    return (np.asarray(g)[..., offs] - offs) % inv


def enumerate_elements(G: PermGroup, cap: int) -> list[Permutation]:
    if G.order > cap:
        raise ResourceLimitError(f"|G| = {G.order} exceeds the cap {cap}")
    return list(G.elements())


def regular_rep(G: PermGroup, cap: int = REGULAR_CAP) -> PermGroup:
    """Right regular representation: ``x -> x g`` on the elements of ``G``."""
    els = enumerate_elements(G, cap)
    els.sort(key=lambda p: (not p.is_identity(), p.images))
    E = np.stack([p.array for p in els]) if els else np.zeros((1, G.degree), dtype=np.intp)
    index = {p.key(): i for i, p in enumerate(els)}
    gens = []
    for g in G.generators:
        prod = g.array[E]  # row i is els[i] * g
        img = [index[row.tobytes()] for row in prod]
        gens.append(Permutation(img, check=False))
    R = PermGroup(gens, len(els), name=f"reg({G})", order_bound=len(els))
    R.structure = {"kind": "regular", "of": G, "elements": els}
    return R


def wreath_imprimitive(H: PermGroup, G: PermGroup, cap: int = WREATH_DEGREE_CAP) -> PermGroup:
    """``H wr G`` acting on ``X x Y`` (point ``(x, y)`` is ``y*m + x``).

    An element ``(f, h)`` sends ``(x, y)`` to ``(x^{f(y)}, y^h)``.  The
    generators are those of ``H`` in block 0 and those of ``G`` permuting
    the blocks.
    """
    m, n = H.degree, G.degree
    degree = m * n
    if degree > cap:
        raise ResourceLimitError(f"wreath degree {degree} exceeds the cap {cap}")
    gens = []
    for h in H.generators:
        a = np.arange(degree)
        a[:m] = h.array
        gens.append(Permutation(a, check=False))
    x = np.arange(m)
    for g in G.generators:
        a = (g.array[:, None] * m + x[None, :]).reshape(-1)
        gens.append(Permutation(a, check=False))
    bound = H.order ** n * G.order
    W = PermGroup(gens, degree, name=f"{H} wr {G}", order_bound=bound)
    W.structure = {"kind": "wreath", "inner": H, "top": G, "m": m, "n": n}
    return W


def decompose_wreath(W: PermGroup, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split an element of a :func:`wreath_imprimitive` group into
    ``(inner, top)``: ``inner[y]`` is the permutation of block ``y``'s
    coordinates and ``top`` the block permutation."""
    m, n = W.structure["m"], W.structure["n"]
    w2 = np.asarray(w).reshape(n, m)
    top = w2[:, 0] // m
    inner = w2 - (top * m)[:, None]
    return inner, top
