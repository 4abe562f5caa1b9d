"""Permutations of {0, ..., n-1} acting on the right.

``p * q`` applies ``p`` first, then ``q``: ``i^(pq) = (i^p)^q``.  Images are
held in a read-only numpy array so the group algorithms can work on the raw
arrays without copying.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

import numpy as np

__all__ = ["Permutation", "compose", "inverse", "parse_cycles"]

_DTYPE = np.intp


def _identity_array(n: int) -> np.ndarray:
    return np.arange(n, dtype=_DTYPE)


class Permutation:
    __slots__ = ("_a", "_key")

    def __init__(self, images: Iterable[int] | np.ndarray, *, check: bool = True):
        a = np.array(images, dtype=_DTYPE)
        if a.ndim != 1:
            raise ValueError("images must be one-dimensional")
        if check:
            n = a.shape[0]
            if n and (a.min() < 0 or a.max() >= n or np.unique(a).shape[0] != n):
                raise ValueError(f"not a permutation: {a.tolist()}")
        a.flags.writeable = False
        self._a = a
        self._key = None

    @classmethod
    def _wrap(cls, a: np.ndarray) -> "Permutation":
        p = cls.__new__(cls)
        a.flags.writeable = False
        p._a = a
        p._key = None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._wrap(_identity_array(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        a = _identity_array(degree)
        seen = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            if any(x < 0 or x >= degree for x in cyc):
                raise ValueError(f"cycle {cyc} out of range for degree {degree}")
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError("cycles must be disjoint")
            seen.update(cyc)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                a[x] = y
        return cls._wrap(a)

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Cycle notation ``(0 1 2)(3 4)`` or an image list ``[1, 2, 0]``."""
        s = text.strip()
        if s.startswith("["):
            return cls([int(x) for x in re.findall(r"-?\d+", s)])
        cycles = parse_cycles(s)
        top = max((max(c) for c in cycles if c), default=-1) + 1
        if degree is None:
            degree = top
        elif top > degree:
            raise ValueError(f"{text!r} moves points beyond degree {degree}")
        return cls.from_cycles(cycles, degree)

    # -- basic protocol ----------------------------------------------------
    @property
    def degree(self) -> int:
        return int(self._a.shape[0])

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self._a.tolist())

    def __call__(self, point: int) -> int:
        return int(self._a[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._wrap(other._a[self._a])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._a)
        inv[self._a] = _identity_array(self.degree)
        return Permutation._wrap(inv)

    __invert__ = inverse

    def __pow__(self, k: int) -> "Permutation":
        k = int(k)
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = _identity_array(self.degree)
        a = base._a
        while k:
            if k & 1:
                result = a[result]
            k >>= 1
            if k:
                a = a[a]
        return Permutation._wrap(result)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """``g^-1 * self * g``."""
        return g.inverse() * self * g

    def commutator(self, other: "Permutation") -> "Permutation":
        """``[a, b] = a^-1 b^-1 a b``."""
        return self.inverse() * other.inverse() * self * other

    def key(self) -> bytes:
        if self._key is None:
            self._key = self._a.tobytes()
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self._a, other._a)

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other: "Permutation"):
        return self.images < other.images

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._a, _identity_array(self.degree)))

    def support(self) -> list[int]:
        return np.nonzero(self._a != _identity_array(self.degree))[0].tolist()

    def cycles(self) -> list[tuple[int, ...]]:
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        a = self._a.tolist()
        for i in range(self.degree):
            if seen[i] or a[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = a[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = a[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*[len(c) for c in self.cycles()]) if self.degree else 1

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.images!r})"

    def to_json(self) -> list[int]:
        return self._a.tolist()


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[list[int]]:
    s = text.strip()
    if not s or s == "()":
        return []
    rest = _CYCLE.sub("", s).strip()
    if rest:
        raise ValueError(f"cannot parse permutation {text!r}")
    cycles = []
    for body in _CYCLE.findall(s):
        body = body.strip()
        if not body:
            continue
        cycles.append([int(x) for x in re.split(r"[\s,]+", body)])
    return cycles


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()
