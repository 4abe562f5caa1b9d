import json

import pytest

from wreathrank.catalog import (SPORADIC, SPORADIC_OUT2, Catalog, CatalogEntry, NotFoundError,
                                ValidationError, builtin, divides_socle, evaluate_order_formula,
                                load, lookup)
from wreathrank.abelian import AbelianGroup


def test_lookup_examples():
    cat = builtin()
    e = lookup(cat, "S5")
    assert (e.socle_name, e.socle_order, e.abelianization.invariants, e.rank) == ("A5", 60, (2,), 2)
    e = lookup(cat, "A6")
    assert (e.socle_order, e.abelianization.invariants, e.rank) == (360, (), 2)
    e = lookup(cat, "PGL2_9")
    assert (e.socle_name, e.socle_order, e.abelianization.invariants) == ("PSL2_9", 360, (2,))
    assert lookup(cat, "M11").socle_order == 7920
    assert lookup(cat, "M11").abelianization.invariants == ()
    assert lookup(cat, "Sz8").socle_order == 29120


def test_not_found_suggests():
    with pytest.raises(NotFoundError) as info:
        builtin().lookup("NoSuchGroup")
    assert "NoSuchGroup" in str(info.value)
    with pytest.raises(NotFoundError) as info:
        builtin().lookup("PSL2_77")
    assert "PSL2_7" in info.value.suggestions


def test_divides_socle():
    cat = builtin()
    assert divides_socle(cat.lookup("S5"), 2)
    assert not divides_socle(cat.lookup("S5"), 7)
    assert divides_socle(cat.lookup("PSL2_7"), 3)
    with pytest.raises(ValueError):
        divides_socle(cat.lookup("S5"), 6)


def test_coverage():
    cat = builtin()
    for n in range(5, 21):
        assert f"A{n}" in cat and f"S{n}" in cat
    for name in ("A6", "S6", "PGL2_9", "M10", "PGammaL2_9"):
        assert cat.lookup(name).socle_order == 360
    prime_powers = [q for q in range(2, 50) if len(_prime_factors(q)) == 1]
    for q in prime_powers:
        if q >= 4:
            assert f"PSL2_{q}" in cat and f"PGL2_{q}" in cat
    assert len(SPORADIC) == 26 and all(n in cat for n in SPORADIC)
    for n in SPORADIC_OUT2:
        e = cat.lookup(f"{n}.2")
        assert e.socle_name == n and e.abelianization.invariants == (2,)


def _prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def test_entry_invariants():
    for e in builtin():
        assert e.socle_order >= 60
        assert 2 <= e.rank <= 3
        assert e.simple == e.abelianization.is_trivial()
        assert evaluate_order_formula(e.order_formula) == e.socle_order


def test_sporadic_orders():
    assert builtin().lookup("M").socle_order == \
        808017424794512875886459904961710757005754368000000000
    assert builtin().lookup("J4").socle_order == 86775571046077562880
    assert builtin().lookup("B").order_formula.startswith("2^41")


def test_formula_evaluator():
    assert evaluate_order_formula("20!/2") == 1216451004088320000
    assert evaluate_order_formula("49*(49^2-1)/gcd(2,49-1)") == 58800
    with pytest.raises(ValueError):
        evaluate_order_formula("7/2")
    with pytest.raises(ValueError):
        evaluate_order_formula("__import__('os')")


def test_entry_validation():
    with pytest.raises(ValidationError):
        CatalogEntry("X", "X", 30, AbelianGroup(), simple=True)
    with pytest.raises(ValidationError):
        CatalogEntry("X", "X", 60, AbelianGroup(), rank=4, simple=True)
    with pytest.raises(ValidationError):
        CatalogEntry("X", "A5", 60, AbelianGroup((2,)), simple=True)


def _entry(**kw):
    base = {"name": "PSL2_53", "socle_name": "PSL2_53", "socle_order": str(53 * (53**2 - 1) // 2),
            "order_formula": "53*(53^2-1)/2", "abelianization": [], "rank": 2, "simple": True,
            "provenance": "test"}
    base.update(kw)
    return base


def test_load(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"entries": [_entry()]}))
    cat = load(path)
    assert cat.lookup("PSL2_53").socle_order == 74412
    assert "A5" in cat


def test_load_override(tmp_path):
    path = tmp_path / "cat.json"
    s5 = _entry(name="S5", socle_name="A5", socle_order="60", abelianization=[2], simple=False)
    path.write_text(json.dumps({"entries": [s5]}))
    with pytest.raises(ValidationError) as info:
        load(path)
    assert info.value.field == "override"
    s5["override"] = True
    s5["provenance"] = "user"
    path.write_text(json.dumps({"entries": [s5]}))
    assert load(path).lookup("S5").provenance == "user"


@pytest.mark.parametrize("change,field", [
    ({"socle_order": 74412}, "socle_order"),
    ({"rank": 5}, "rank"),
    ({"abelianization": ["2"]}, "abelianization"),
    ({"bogus": 1}, "bogus"),
])
def test_load_schema_errors(tmp_path, change, field):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"entries": [_entry(**change)]}))
    with pytest.raises(ValidationError) as info:
        load(path)
    assert field in info.value.field


def test_load_missing_field(tmp_path):
    path = tmp_path / "cat.json"
    e = _entry()
    del e["rank"]
    path.write_text(json.dumps({"entries": [e]}))
    with pytest.raises(ValidationError) as info:
        load(path)
    assert "rank" in info.value.field


def test_load_semantic_error_names_field(tmp_path):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps({"entries": [_entry(socle_order="59")]}))
    with pytest.raises(ValidationError) as info:
        load(path)
    assert info.value.field == "entries[0].socle_order"


def test_json_round_trip():
    cat = builtin()
    again = Catalog({e.name: e for e in cat})
    assert again.to_json() == cat.to_json()
    assert cat.lookup("M").to_json()["socle_order"] == str(cat.lookup("M").socle_order)
