"""Small finite fields GF(p^k) by log/antilog tables.

Elements are integers ``0..q-1``; the base-p digits of an element are the
coefficients of a polynomial over GF(p) (least significant first) reduced
modulo a primitive polynomial found by search.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from ..abelian import factorize


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for c in reversed(ds):
        x = x * p + c
    return x


class GF:
    def __init__(self, q: int):
        fac = factorize(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, k), = fac.items()
        self.q, self.p, self.k = q, p, k
        self.exp, self.log = _tables(p, k)
        self._add = [[_undigits([(a + b) % p for a, b in zip(_digits(x, p, k), _digits(y, p, k))], p)
                      for y in range(q)] for x in range(q)]
        self._neg = [_undigits([(-a) % p for a in _digits(x, p, k)], p) for x in range(q)]

    @property
    def primitive(self) -> int:
        return self.exp[1] if self.q > 2 else 1

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def _tables(p: int, k: int):
    q = p**k
    if k == 1:
        for g in range(1, p):
            x, seen = 1, set()
            for _ in range(p - 1):
                seen.add(x)
                x = x * g % p
            if len(seen) == p - 1:
                break
        exp = [pow(g, i, p) for i in range(p - 1)]
    else:
        # monic x^k + c_{k-1} x^{k-1} + ... + c_0 whose root has order q - 1
        for coeffs in product(range(p), repeat=k):
            if coeffs[0] == 0:
                continue
            exp = _powers_of_x(coeffs, p, k)
            if exp is not None:
                break
    log = [0] * q
    for i, v in enumerate(exp):
        log[v] = i
    return exp, log


def _powers_of_x(coeffs, p, k):
    q = p**k
    cur = [0] * k
    cur[0] = 1
    out = []
    seen = set()
    for _ in range(q - 1):
        v = _undigits(cur, p)
        if v in seen:
            return None
        seen.add(v)
        out.append(v)
        # multiply by x and reduce: x^k = -(c_{k-1} x^{k-1} + ... + c_0)
        top = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(k):
            cur[i] = (cur[i] - top * coeffs[i]) % p
    return out if len(seen) == q - 1 else None
