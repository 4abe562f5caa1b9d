"""Concrete permutation models for catalog entries (degree <= 50 or so).

Projective groups act on the points of PG(n-1, q) by right multiplication
of row vectors; the Mathieu groups use the usual library generators.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Callable

from .bsgs import PermGroup
from .constructions import alternating, symmetric
from .galois import GF
from .perm import Permutation

# ---------------------------------------------------------------------------
# projective space


class ProjectiveSpace:
    def __init__(self, n: int, q: int):
        self.n, self.q = n, q
        self.F = GF(q)
        pts = []
        for v in product(range(q), repeat=n):
            nz = next((c for c in v if c), None)
            if nz == 1:
                pts.append(v)
        self.points = pts
        self.index = {v: i for i, v in enumerate(pts)}

    @property
    def degree(self) -> int:
        return len(self.points)

    def _normalize(self, v):
        F = self.F
        lead = next(c for c in v if c)
        li = F.inv(lead)
        return tuple(F.mul(c, li) for c in v)

    def _apply(self, v, M):
        F = self.F
        n = self.n
        out = []
        for j in range(n):
            acc = 0
            for i in range(n):
                if v[i] and M[i][j]:
                    acc = F.add(acc, F.mul(v[i], M[i][j]))
            out.append(acc)
        return out

    def matrix(self, M) -> Permutation:
        return Permutation([self.index[self._normalize(self._apply(v, M))] for v in self.points])

    def frobenius(self) -> Permutation:
        F = self.F
        return Permutation([self.index[self._normalize([F.frobenius(c) for c in v])]
                            for v in self.points])

    def identity_matrix(self):
        return [[int(i == j) for j in range(self.n)] for i in range(self.n)]

    def transvection(self, i, j, lam=1):
        M = self.identity_matrix()
        M[i][j] = lam
        return M

    def diag(self, entries):
        M = self.identity_matrix()
        for i, e in enumerate(entries):
            M[i][i] = e
        return M


def _sl_gens(P: ProjectiveSpace):
    F, n = P.F, P.n
    gens = [P.matrix(P.transvection(i, j)) for i in range(n) for j in range(n) if i != j]
    w = F.primitive
    if P.q > 3:
        gens.append(P.matrix(P.diag([w, F.inv(w)] + [1] * (n - 2))))
    return gens


@lru_cache(maxsize=None)
def _space(n: int, q: int) -> ProjectiveSpace:
    return ProjectiveSpace(n, q)


def projective_group(kind: str, n: int, q: int) -> PermGroup:
    """``kind`` is one of PSL, PGL, PSigmaL, PGammaL, or M10 (n = 2, q = 9)."""
    P = _space(n, q)
    F = P.F
    gens = _sl_gens(P)
    w = F.primitive
    if kind in ("PGL", "PGammaL"):
        gens.append(P.matrix(P.diag([w] + [1] * (n - 1))))
    if kind in ("PSigmaL", "PGammaL") and F.k > 1:
        gens.append(P.frobenius())
    if kind == "M10":
        if (n, q) != (2, 9):
            raise ValueError("M10 is the twisted extension of PSL(2,9)")
        # x -> w x^3: Frobenius followed by diag(1, w)
        gens.append(P.frobenius() * P.matrix(P.diag([1, w])))
    if kind not in ("PSL", "PGL", "PSigmaL", "PGammaL", "M10"):
        raise ValueError(f"unknown projective family {kind!r}")
    name = "M10" if kind == "M10" else f"{kind}{n}_{q}"
    return PermGroup(gens, P.degree, name=name)


# ---------------------------------------------------------------------------
# Mathieu groups (1-based cycle notation as in the standard libraries)

_MATHIEU = {
    11: ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"],
    12: ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)",
         "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"],
    22: ["(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
         "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
         "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)"],
    23: ["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
         "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)"],
    24: ["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
         "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
         "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)"],
}


def _one_based(text: str, degree: int) -> Permutation:
    cycles = []
    for body in text.strip("()").split(")("):
        cycles.append([int(x) - 1 for x in body.split(",")])
    return Permutation.from_cycles(cycles, degree)


def mathieu(n: int) -> PermGroup:
    gens = [_one_based(s, n) for s in _MATHIEU[n]]
    return PermGroup(gens, n, name=f"M{n}")


# ---------------------------------------------------------------------------
# registry: catalog name -> model factory

def _registry() -> dict[str, Callable[[], PermGroup]]:
    reg: dict[str, Callable[[], PermGroup]] = {}
    for n in range(5, 21):
        reg[f"A{n}"] = (lambda n=n: alternating(n))
        reg[f"S{n}"] = (lambda n=n: symmetric(n))
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49):
        reg[f"PSL2_{q}"] = (lambda q=q: projective_group("PSL", 2, q))
        reg[f"PGL2_{q}"] = (lambda q=q: projective_group("PGL", 2, q))
    for q in (4, 8, 9, 16, 25, 27, 32, 49):
        reg[f"PGammaL2_{q}"] = (lambda q=q: projective_group("PGammaL", 2, q))
    reg["M10"] = lambda: projective_group("M10", 2, 9)
    for q in (3, 4, 5):
        reg[f"PSL3_{q}"] = (lambda q=q: projective_group("PSL", 3, q))
    reg["PGL3_4"] = lambda: projective_group("PGL", 3, 4)
    for n in (11, 12, 22, 23, 24):
        reg[f"M{n}"] = (lambda n=n: mathieu(n))
    return reg


MODELS = _registry()


def model(name: str) -> PermGroup:
    """Permutation model of a catalog entry, or ``KeyError``."""
    G = MODELS[name]()
    G.name = name
    return G


def has_model(name: str) -> bool:
    return name in MODELS
