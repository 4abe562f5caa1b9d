"""Table of almost simple groups: socle order, abelianization and rank.

Only these three attributes feed the rank formulas.  Orders are exact
integers; each entry also keeps a symbolic order formula so the stored
number can be audited, and a provenance note.
"""

from __future__ import annotations

import ast
import difflib
import json
import math
import operator
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

import jsonschema

from .abelian import AbelianGroup, is_prime, normalize


class CatalogError(Exception):
    pass


class NotFoundError(CatalogError, KeyError):
    def __init__(self, name: str, suggestions: list[str]):
        self.name = name
        self.suggestions = suggestions
        msg = f"unknown group {name!r}"
        if suggestions:
            msg += "; nearest: " + ", ".join(suggestions)
        super().__init__(msg)

    def __str__(self):
        return self.args[0]


class ValidationError(CatalogError, ValueError):
    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    socle_name: str
    socle_order: int
    abelianization: AbelianGroup
    rank: int = 2
    simple: bool = False
    order_formula: str = ""
    provenance: str = ""

    def __post_init__(self):
        if self.socle_order < 60:
            raise ValidationError("socle_order", f"{self.socle_order} is below 60")
        if not 2 <= self.rank <= 3:
            raise ValidationError("rank", f"{self.rank} is outside 2..3")
        if self.simple != self.abelianization.is_trivial():
            raise ValidationError("simple", "must be true exactly when the abelianization is trivial")
        if self.simple and self.socle_name != self.name:
            raise ValidationError("socle_name", "a simple entry is its own socle")

    @property
    def order(self) -> int:
        return self.socle_order * self.abelianization.order

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "socle_name": self.socle_name,
            "socle_order": str(self.socle_order),
            "order_formula": self.order_formula,
            "abelianization": list(self.abelianization.invariants),
            "rank": self.rank,
            "simple": self.simple,
            "provenance": self.provenance,
        }


SCHEMA = {
    "type": "object",
    "required": ["entries"],
    "additionalProperties": False,
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "socle_name", "socle_order", "abelianization", "rank", "simple"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string", "pattern": r"^[A-Za-z][A-Za-z0-9_.]*$"},
                    "socle_name": {"type": "string", "minLength": 1},
                    "socle_order": {"type": "string", "pattern": r"^[1-9][0-9]*$"},
                    "order_formula": {"type": "string"},
                    "abelianization": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "rank": {"enum": [2, 3]},
                    "simple": {"type": "boolean"},
                    "override": {"type": "boolean"},
                    "provenance": {"type": "string"},
                },
            },
        }
    },
}


def entry_from_json(data: dict) -> CatalogEntry:
    try:
        jsonschema.validate({"entries": [data]}, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise _schema_error(exc) from None
    return CatalogEntry(
        name=data["name"],
        socle_name=data["socle_name"],
        socle_order=int(data["socle_order"]),
        abelianization=normalize(data["abelianization"]),
        rank=data["rank"],
        simple=data["simple"],
        order_formula=data.get("order_formula", ""),
        provenance=data.get("provenance", ""),
    )


def _schema_error(exc: jsonschema.ValidationError) -> ValidationError:
    path = [str(p) for p in exc.absolute_path if not isinstance(p, int)]
    if exc.validator == "required":
        missing = exc.message.split("'")[1] if "'" in exc.message else "?"
        path.append(missing)
    elif exc.validator == "additionalProperties":
        path.append(exc.message.split("'")[1] if "'" in exc.message else "?")
    return ValidationError(".".join(path) or "<root>", exc.message)


class Catalog:
    def __init__(self, entries: dict[str, CatalogEntry] | None = None):
        self._entries: dict[str, CatalogEntry] = dict(entries or {})

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self._entries.values())

    def __len__(self):
        return len(self._entries)

    def names(self) -> list[str]:
        return list(self._entries)

    def lookup(self, name: str) -> CatalogEntry:
        try:
            return self._entries[name]
        except KeyError:
            near = difflib.get_close_matches(name, self._entries, n=3, cutoff=0.5)
            if not near:
                low = {n.lower(): n for n in self._entries}
                near = [low[n] for n in difflib.get_close_matches(name.lower(), low, n=3, cutoff=0.5)]
            raise NotFoundError(name, near) from None

    def merged(self, extra: list[tuple[CatalogEntry, bool]]) -> "Catalog":
        out = dict(self._entries)
        seen: set[str] = set()
        for e, override in extra:
            if e.name in seen:
                raise ValidationError("name", f"duplicate entry {e.name!r} in file")
            seen.add(e.name)
            if e.name in out and not override:
                raise ValidationError("override", f"{e.name!r} shadows a built-in entry; set override: true")
            out[e.name] = e
        return Catalog(out)

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self]}


def lookup(cat: Catalog, name: str) -> CatalogEntry:
    return cat.lookup(name)


def divides_socle(entry: CatalogEntry, p: int) -> bool:
    """``p | |S|`` by remainder, no factorization of ``|S|`` needed."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return entry.socle_order % p == 0


def load(path: str | Path, base: Catalog | None = None) -> Catalog:
    """Built-in table plus the entries of a catalog JSON file."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValidationError("<file>", f"not valid JSON: {exc}") from None
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as exc:
        raise _schema_error(exc) from None
    extra = []
    for i, raw in enumerate(data["entries"]):
        try:
            e = entry_from_json({k: v for k, v in raw.items() if k != "override"})
        except ValidationError as exc:
            raise ValidationError(f"entries[{i}].{exc.field}", str(exc).split(": ", 1)[1]) from None
        extra.append((e, bool(raw.get("override", False))))
    return (base or builtin()).merged(extra)


# ---------------------------------------------------------------------------
# order formulas

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Pow: operator.pow}


def evaluate_order_formula(text: str) -> int:
    """Exact value of an order formula like ``2^4 * 3^2 * 5 * 11`` or ``20!/2``.

    Supports integers, ``+ - * / ^``, parentheses, postfix ``!`` and
    ``gcd(a, b)``; division must be exact.
    """
    src = text.replace("^", "**")
    # postfix factorial: n! -> fact(n); only applied to integer literals
    out, i = [], 0
    while i < len(src):
        if src[i] == "!":
            j = len(out)
            while j and out[j - 1].isdigit():
                j -= 1
            out[j:] = ["fact(" + "".join(out[j:]) + ")"]
        else:
            out.append(src[i])
        i += 1
    tree = ast.parse("".join(out), mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Div):
                if b == 0 or a % b:
                    raise ValueError(f"inexact division in {text!r}")
                return a // b
            if type(node.op) in _BINOPS:
                return _BINOPS[type(node.op)](a, b)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
            args = [ev(a) for a in node.args]
            if node.func.id == "fact" and len(args) == 1:
                return math.factorial(args[0])
            if node.func.id == "gcd":
                return math.gcd(*args)
        raise ValueError(f"unsupported formula syntax in {text!r}")

    return int(ev(tree))


# ---------------------------------------------------------------------------
# built-in table

_ATLAS = "standard order tables (ATLAS of Finite Groups)"

# name: (order formula, decimal order)
SPORADIC = {
    "M11": ("2^4 * 3^2 * 5 * 11", 7920),
    "M12": ("2^6 * 3^3 * 5 * 11", 95040),
    "J1": ("2^3 * 3 * 5 * 7 * 11 * 19", 175560),
    "M22": ("2^7 * 3^2 * 5 * 7 * 11", 443520),
    "J2": ("2^7 * 3^3 * 5^2 * 7", 604800),
    "M23": ("2^7 * 3^2 * 5 * 7 * 11 * 23", 10200960),
    "HS": ("2^9 * 3^2 * 5^3 * 7 * 11", 44352000),
    "J3": ("2^7 * 3^5 * 5 * 17 * 19", 50232960),
    "M24": ("2^10 * 3^3 * 5 * 7 * 11 * 23", 244823040),
    "McL": ("2^7 * 3^6 * 5^3 * 7 * 11", 898128000),
    "He": ("2^10 * 3^3 * 5^2 * 7^3 * 17", 4030387200),
    "Ru": ("2^14 * 3^3 * 5^3 * 7 * 13 * 29", 145926144000),
    "Suz": ("2^13 * 3^7 * 5^2 * 7 * 11 * 13", 448345497600),
    "ON": ("2^9 * 3^4 * 5 * 7^3 * 11 * 19 * 31", 460815505920),
    "Co3": ("2^10 * 3^7 * 5^3 * 7 * 11 * 23", 495766656000),
    "Co2": ("2^18 * 3^6 * 5^3 * 7 * 11 * 23", 42305421312000),
    "Fi22": ("2^17 * 3^9 * 5^2 * 7 * 11 * 13", 64561751654400),
    "HN": ("2^14 * 3^6 * 5^6 * 7 * 11 * 19", 273030912000000),
    "Ly": ("2^8 * 3^7 * 5^6 * 7 * 11 * 31 * 37 * 67", 51765179004000000),
    "Th": ("2^15 * 3^10 * 5^3 * 7^2 * 13 * 19 * 31", 90745943887872000),
    "Fi23": ("2^18 * 3^13 * 5^2 * 7 * 11 * 13 * 17 * 23", 4089470473293004800),
    "Co1": ("2^21 * 3^9 * 5^4 * 7^2 * 11 * 13 * 23", 4157776806543360000),
    "J4": ("2^21 * 3^3 * 5 * 7 * 11^3 * 23 * 29 * 31 * 37 * 43", 86775571046077562880),
    "Fi24p": ("2^21 * 3^16 * 5^2 * 7^3 * 11 * 13 * 17 * 23 * 29",
              1255205709190661721292800),
    "B": ("2^41 * 3^13 * 5^6 * 7^2 * 11 * 13 * 17 * 19 * 23 * 31 * 47",
          4154781481226426191177580544000000),
    "M": ("2^46 * 3^20 * 5^9 * 7^6 * 11^2 * 13^3 * 17 * 19 * 23 * 29 * 31 * 41 * 47 * 59 * 71",
          808017424794512875886459904961710757005754368000000000),
}

# sporadic groups with |Out| = 2; the extension S.2 is a separate entry
SPORADIC_OUT2 = ("M12", "M22", "J2", "HS", "J3", "McL", "He", "Suz", "ON", "Fi22", "HN", "Fi24p")

PRIME_POWERS_49 = (4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49)


def _pp(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            while q % p == 0:
                q //= p
                f += 1
            return p, f
    raise ValueError(q)


def _psl2_order(q: int) -> int:
    return q * (q * q - 1) // math.gcd(2, q - 1)


def _builtin_entries() -> list[CatalogEntry]:
    E: list[CatalogEntry] = []

    def add(name, socle, order, formula, ab, prov, rank=2):
        A = normalize(ab)
        E.append(CatalogEntry(name, socle, order, A, rank, A.is_trivial(), formula, prov))

    for n in range(5, 21):
        order = math.factorial(n) // 2
        add(f"A{n}", f"A{n}", order, f"{n}!/2", [], "alternating group, simple for n >= 5")
        add(f"S{n}", f"A{n}", order, f"{n}!/2", [2], "S_n / A_n = C2 (sign)")
    # the other almost simple groups with socle A6 = PSL(2,9)
    add("PGL2_9", "PSL2_9", 360, "9*(9^2-1)/2", [2], "PGL(2,9)/PSL(2,9) = C2 (diagonal automorphism)")
    add("M10", "PSL2_9", 360, "9*(9^2-1)/2", [2], "non-split extension A6.2_3; quotient C2")
    add("PGammaL2_9", "PSL2_9", 360, "9*(9^2-1)/2", [2, 2], "Aut(A6) = A6.2^2; quotient C2 x C2")

    for q in PRIME_POWERS_49:
        p, f = _pp(q)
        g = math.gcd(2, q - 1)
        order = _psl2_order(q)
        formula = f"{q}*({q}^2-1)/gcd(2,{q}-1)"
        note = {4: " (isomorphic to A5)", 5: " (isomorphic to A5)", 9: " (isomorphic to A6)"}.get(q, "")
        add(f"PSL2_{q}", f"PSL2_{q}", order, formula, [], f"PSL(2,{q}) simple for q >= 4{note}")
        if q == 9:
            continue
        if g == 2:
            add(f"PGL2_{q}", f"PSL2_{q}", order, formula, [2],
                f"PGL(2,{q})/PSL(2,{q}) = C2 (diagonal automorphism, q odd)")
        else:
            add(f"PGL2_{q}", f"PGL2_{q}", order, formula, [],
                f"PGL(2,{q}) = PSL(2,{q}) for q even; simple")
        if f > 1 and q != 9:
            # Out(PSL(2,q)) = C_g x C_f, abelian
            add(f"PGammaL2_{q}", f"PSL2_{q}", order, formula, [g, f] if g > 1 else [f],
                f"PGammaL(2,{q})/PSL(2,{q}) = C{g} x C{f} (diagonal and field automorphisms)")

    add("PSL3_3", "PSL3_3", 5616, "3^3*(3^2-1)*(3^3-1)/gcd(3,3-1)", [], "PSL(3,3) simple")
    add("PSL3_4", "PSL3_4", 20160, "4^3*(4^2-1)*(4^3-1)/gcd(3,4-1)", [], "PSL(3,4) simple")
    add("PSL3_5", "PSL3_5", 372000, "5^3*(5^2-1)*(5^3-1)/gcd(3,5-1)", [], "PSL(3,5) simple")
    add("PGL3_4", "PSL3_4", 20160, "4^3*(4^2-1)*(4^3-1)/gcd(3,4-1)", [3],
        "PGL(3,4)/PSL(3,4) = C3 (diagonal automorphism)")
    add("Sz8", "Sz8", 29120, "8^2*(8^2+1)*(8-1)", [], "Suzuki group Sz(8), simple")
    add("Sz32", "Sz32", 32537600, "32^2*(32^2+1)*(32-1)", [], "Suzuki group Sz(32), simple")

    for name, (formula, order) in SPORADIC.items():
        add(name, name, order, formula, [], f"sporadic simple group; order from {_ATLAS}")
    for name in SPORADIC_OUT2:
        formula, order = SPORADIC[name]
        add(f"{name}.2", name, order, formula, [2], f"{name}.2 = Aut({name}); quotient C2; {_ATLAS}")
    return E


@lru_cache(maxsize=1)
def builtin() -> Catalog:
    entries = {}
    for e in _builtin_entries():
        if e.name in entries:
            raise AssertionError(f"duplicate built-in entry {e.name}")
        entries[e.name] = e
    return Catalog(entries)
