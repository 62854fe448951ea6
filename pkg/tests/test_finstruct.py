import pytest
from conftest import EMPTY, ID1, ID12, SWAP

from invcat.finstruct import (
    Arrow,
    FinCategory,
    FunctorData,
    StructureError,
    compose_functors,
    discrete_category,
    enumerate_functors,
    hom_set,
    identity_functor,
    validate_category,
    validate_functor,
)
from oracles import sym_inverse, table


def terminal():
    return FinCategory(("A",), (Arrow("1", "A", "A"),), {("1", "1"): "1"}, {"A": "1"})


def test_terminal_category_is_valid():
    assert validate_category(terminal()).ok


def test_I2_table_matches_oracle(I2):
    C = I2.category
    assert validate_category(C).ok
    assert C.comp == table(sym_inverse(2))


def test_redirected_identity_composite_is_reported(I2):
    C = I2.category
    comp = dict(C.comp)
    comp[(ID12, ID12)] = SWAP
    report = validate_category(FinCategory(C.objects, C.arrows, comp, C.ident))
    assert "identity law" in report.laws()


def test_missing_composite_is_reported():
    C = terminal()
    report = validate_category(FinCategory(C.objects, C.arrows, {}, C.ident))
    assert report.laws() == {"composition not total"}


def test_associativity_violation_is_found():
    # two idempotents e, f on one object with ef = e, fe = f, ff = f, but (ee)f... forced wrong
    arrows = (Arrow("1", "A", "A"), Arrow("e", "A", "A"), Arrow("f", "A", "A"))
    comp = {("1", x): x for x in "1ef"} | {(x, "1"): x for x in "1ef"}
    comp |= {("e", "e"): "e", ("f", "f"): "f", ("e", "f"): "f", ("f", "e"): "1"}
    report = validate_category(FinCategory(("A",), arrows, comp, {"A": "1"}))
    assert "associativity" in report.laws()


def test_hom_sets(I2):
    assert hom_set(I2.category, "*", "*") == sorted(sym_inverse(2))
    D = discrete_category(["A", "B"])
    assert hom_set(D, "A", "B") == []
    assert D.ident["A"] in hom_set(D, "A", "A")
    with pytest.raises(StructureError):
        hom_set(D, "A", "nope")


def test_identity_functor_valid(I2):
    assert validate_functor(identity_functor(I2.category)).ok


def test_inclusion_I1_into_I2(I1, I2):
    # a partial bijection on {1} is the same partial map on {1,2}, except the identity
    F = FunctorData(I1.category, I2.category, {"*": "*"}, {"[]": EMPTY, "[1:1]": ID12})
    assert validate_functor(F).ok
    naive = FunctorData(I1.category, I2.category, {"*": "*"}, {"[]": EMPTY, "[1:1]": ID1})
    assert "identities" in validate_functor(naive).laws()


def test_swap_to_empty_breaks_composition(I2):
    C = I2.category
    amap = {a: a for a in C.arrow_ids}
    amap[SWAP] = EMPTY
    report = validate_functor(FunctorData(C, C, {"*": "*"}, amap))
    assert "composition" in report.laws()
    assert any(v.witnesses == (SWAP, SWAP) for v in report.violations)


def test_functor_composition_is_valid(I1, I2):
    F = FunctorData(I1.category, I2.category, {"*": "*"}, {"[]": EMPTY, "[1:1]": ID12})
    G = identity_functor(I2.category)
    assert validate_functor(compose_functors(G, F)).ok
    assert compose_functors(G, F) == F


def test_enumerate_functors_I1_to_I2(I1, I2):
    fs = list(enumerate_functors(I1.category, I2.category))
    # the zero goes to any idempotent, the unit to the unit
    assert sorted(F.arr_map["[]"] for F in fs) == sorted([EMPTY, ID1, "[2:2]", ID12])
    assert all(validate_functor(F).ok for F in fs)


def test_enumerate_functors_capped(I3, I2):
    with pytest.raises(StructureError):
        next(enumerate_functors(I3.category, I2.category))


def test_semicategory_skips_identity_laws(I2):
    from invcat.finstruct import strip_identities

    S = strip_identities(I2.category)
    assert S.is_semicategory
    assert validate_category(S).ok
