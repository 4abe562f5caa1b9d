"""Closed-form generator ranks for wreath products over regular actions.

For ``W = G_k wr ... wr G_1`` with every ``G_i`` almost simple, put
``A = G_2/G_2' x ... x G_k/G_k'``.  Then

    d(W) = max_p( d(A x G_1), d(A) + 1, d_p(A) + 2 )

over the primes p dividing both ``|A|`` and the socle order of ``G_1``.  The
general single-step shape

    d(A wr G) = max_{p | |A|}( d(A x G), rho_p ),  rho_p = h(p) + d_p(A)

takes an h-provider.  The almost simple provider is the dichotomy
``h = 2`` if p divides ``|S|`` and ``1`` otherwise; a cyclic provider exists
so the same plumbing can be brute-force checked on tiny groups.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

from .abelian import AbelianGroup, d, d_p, direct_sum, is_prime, primes
from .catalog import Catalog, CatalogEntry, builtin, divides_socle


class _Marker(enum.Enum):
    ALL_TRIVIAL = "ALL_TRIVIAL"


# every irreducible p-modular module of the group is trivial
ALL_TRIVIAL = _Marker.ALL_TRIVIAL

HValue = Union[int, _Marker]

DIRECT_METHOD = "d(A x G) = max(rank(G), max_p(d_p(A) + d_p(G/G')))"


@dataclass(frozen=True)
class CyclicGroup:
    """The cyclic group ``C_n`` (n >= 2) as an acting group."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("cyclic acting group needs n >= 2")

    @property
    def name(self) -> str:
        return f"C{self.n}"

    @property
    def order(self) -> int:
        return self.n

    @property
    def rank(self) -> int:
        return 1

    @property
    def abelianization(self) -> AbelianGroup:
        return AbelianGroup.cyclic(self.n)


Acting = Union[CatalogEntry, CyclicGroup]


class HProvider:
    """max h_G(M) over nontrivial irreducible p-modules M, per prime."""

    label = "provider"

    def __call__(self, p: int) -> HValue:
        raise NotImplementedError


class AlmostSimpleH(HProvider):
    label = "almost simple (socle dichotomy)"

    def __init__(self, G: CatalogEntry):
        self.G = G

    def __call__(self, p: int) -> int:
        return h_max_almost_simple(self.G, p)


class CyclicH(HProvider):
    label = "cyclic (derived for oracle testing, not a closed-form result)"

    def __init__(self, n: int):
        self.n = n

    def __call__(self, p: int) -> HValue:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        m = self.n
        while m % p == 0:
            m //= p
        # a p-group has only the trivial irreducible in characteristic p
        return ALL_TRIVIAL if m == 1 else 1


def provider_for(G: Acting) -> HProvider:
    if isinstance(G, CyclicGroup):
        return CyclicH(G.n)
    return AlmostSimpleH(G)


@dataclass
class RankBreakdown:
    d: int
    term_direct: int
    term_da_plus_1: int | None
    prime_terms: dict[int, int]
    attained_by: list[str]
    A: AbelianGroup
    method_notes: list[str] = field(default_factory=list)

    def terms(self) -> list[tuple[str, int]]:
        out = [("direct", self.term_direct)]
        if self.term_da_plus_1 is not None:
            out.append(("dA_plus_1", self.term_da_plus_1))
        out += [(f"p={p}", v) for p, v in sorted(self.prime_terms.items())]
        return out

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "terms": {
                "direct": self.term_direct,
                "dA_plus_1": self.term_da_plus_1,
                "primes": {str(p): v for p, v in sorted(self.prime_terms.items())},
            },
            "attained_by": list(self.attained_by),
            "A": list(self.A.invariants),
            "method_notes": list(self.method_notes),
        }

    def render(self) -> str:
        parts = [f"direct={self.term_direct}"]
        if self.term_da_plus_1 is not None:
            parts.append(f"dA+1={self.term_da_plus_1}")
        parts += [f"p={p}:{v}" for p, v in sorted(self.prime_terms.items())]
        return f"d = {self.d}; " + " ".join(parts)


def _breakdown(direct: int, da1: int | None, prime_terms: dict[int, int], A: AbelianGroup,
               notes: list[str]) -> RankBreakdown:
    terms = RankBreakdown(0, direct, da1, prime_terms, [], A).terms()
    best = max(v for _, v in terms)
    return RankBreakdown(best, direct, da1, dict(sorted(prime_terms.items())),
                         [t for t, v in terms if v == best], A, notes)


# ---------------------------------------------------------------------------
# operations

def sequence_abelianization(inner: Iterable[CatalogEntry]) -> AbelianGroup:
    """``A`` for the inner factors ``G_2 .. G_k`` (empty means trivial)."""
    groups = [e.abelianization for e in inner]
    return direct_sum(*groups) if groups else AbelianGroup()


def h_max_almost_simple(G: CatalogEntry, p: int) -> int:
    return 2 if divides_socle(G, p) else 1


def rho_p(A: AbelianGroup, p: int, h: HProvider | Callable[[int], HValue]) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if A.order % p:
        raise ValueError(f"{p} does not divide |A| = {A.order}")
    v = h(p)
    if v is ALL_TRIVIAL:
        return 0
    if v not in (1, 2):
        raise ValueError(f"h-provider returned {v!r}, expected 1, 2 or ALL_TRIVIAL")
    return v + d_p(A, p)


def d_direct_abelian_almost_simple(A: AbelianGroup, G: Acting) -> int:
    """``d(A x G)`` by the closed form in ``DIRECT_METHOD``.

    For an abelian G this is exact; for almost simple G it is the adopted
    design formula, checked against exhaustive search on small cases.
    """
    Gab = G.abelianization
    best = G.rank
    for p in primes(A) | primes(Gab):
        best = max(best, d_p(A, p) + d_p(Gab, p))
    return best


d_direct_abelian_almost_simple.method = DIRECT_METHOD


def d_abelian_wr_regular(A: AbelianGroup, G: Acting, h: HProvider | None = None) -> RankBreakdown:
    """``d(A wr G)`` for the regular action of G.

    With the almost simple provider the terms are reported in the folded
    form ``direct, d(A)+1, d_q(A)+2 (q | |S|)``; other providers report
    ``rho_p`` for every prime dividing ``|A|`` and no ``d(A)+1`` term.
    """
    if h is None:
        h = provider_for(G)
    direct = d_direct_abelian_almost_simple(A, G)
    notes = [DIRECT_METHOD]
    if A.is_trivial():
        notes.append("A trivial: A wr G = G")
        return _breakdown(direct, None, {}, A, notes)
    if isinstance(h, AlmostSimpleH):
        if not isinstance(G, CatalogEntry):
            raise TypeError("the almost simple provider needs a catalog entry")
        notes.append(f"h-provider: {h.label}")
        ps = {q: d_p(A, q) + 2 for q in sorted(primes(A)) if divides_socle(G, q)}
        return _breakdown(direct, d(A) + 1, ps, A, notes)
    notes.append(f"h-provider: {getattr(h, 'label', 'custom')}; prime terms are rho_p")
    ps = {p: rho_p(A, p, h) for p in sorted(primes(A))}
    return _breakdown(direct, None, ps, A, notes)


@dataclass(frozen=True)
class WreathSpec:
    """``factors[0]`` is ``G_1`` (outermost, acting); ``factors[-1]`` is ``G_k``."""

    factors: tuple[CatalogEntry, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a wreath spec needs at least one factor")
        object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def from_names(cls, names: Sequence[str], catalog: Catalog | None = None) -> "WreathSpec":
        cat = catalog or builtin()
        return cls(tuple(cat.lookup(n) for n in names))

    @property
    def k(self) -> int:
        return len(self.factors)

    def expression(self) -> str:
        """Rendered innermost-first, e.g. ``S5 ≀ A5`` for factors (A5, S5)."""
        return " ≀ ".join(e.name for e in reversed(self.factors))


def d_iterated(spec: WreathSpec) -> RankBreakdown:
    G1 = spec.factors[0]
    A = sequence_abelianization(spec.factors[1:])
    if spec.k == 1:
        br = _breakdown(G1.rank, None, {}, A, ["k = 1: d(W) = rank(G_1)"])
        return br
    br = d_abelian_wr_regular(A, G1, AlmostSimpleH(G1))
    br.method_notes.insert(0, "d(W) = d(A wr G_1), A = product of G_i/G_i' for i >= 2")
    return br


def d_soluble_wr_regular(d_H: int, H_ab: AbelianGroup, G: Acting, h: HProvider | None = None) -> int:
    """``d(H wr G)`` for soluble H and the regular action of G:
    ``max(d(H/H' wr G), floor((d(H) - 2)/|G|) + 2)``."""
    if d_H <= 0:
        raise ValueError("d_H must be positive")
    if d_H < d(H_ab):
        raise ValueError("d_H is smaller than d(H/H')")
    n = G.order
    if n < 2:
        raise ValueError("the acting group must be nontrivial")
    return max(d_abelian_wr_regular(H_ab, G, h).d, (d_H - 2) // n + 2)


__all__ = [
    "ALL_TRIVIAL", "CyclicGroup", "HProvider", "AlmostSimpleH", "CyclicH", "provider_for",
    "RankBreakdown", "WreathSpec", "sequence_abelianization", "h_max_almost_simple", "rho_p",
    "d_direct_abelian_almost_simple", "d_abelian_wr_regular", "d_iterated",
    "d_soluble_wr_regular", "DIRECT_METHOD",
]
