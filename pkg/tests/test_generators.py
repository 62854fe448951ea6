import pytest

from invcat.finstruct import StructureError
from invcat.generators import (
    PartialMap,
    closure_subsemigroup,
    decode,
    group_table,
    ident_on,
    partial_bijection_category,
    partial_bijections,
    partial_function_category,
    partial_functions,
    pb,
    powerset_semilattice,
    symmetric_inverse_monoid,
    symmetric_inverse_size,
)
from oracles import enum_partial_maps, name, subsemigroup_closure, sym_inverse


@pytest.mark.parametrize("n,size", [(1, 2), (2, 7), (3, 34), (4, 209), (5, 1546)])
def test_symmetric_inverse_sizes(n, size):
    assert symmetric_inverse_size(n) == size
    if n <= 4:
        assert len(sym_inverse(n)) == size


def test_size_bounds():
    for bad in (0, 6):
        with pytest.raises(StructureError):
            symmetric_inverse_monoid(bad)


def test_partial_map_enumeration_matches_oracle():
    for src, tgt in (([1, 2], [1, 2, 3]), ([1, 2, 3], [1])):
        assert sorted(m.encode() for m in partial_bijections(src, tgt)) == sorted(
            name(m) for m in enum_partial_maps(src, tgt, True)
        )
        assert sorted(m.encode() for m in partial_functions(src, tgt)) == sorted(
            name(m) for m in enum_partial_maps(src, tgt, False)
        )


def test_partial_map_operations():
    f = decode("[1:2,2:3]", [1, 2], [1, 2, 3])
    g = decode("[3:1]", [1, 2, 3], [1])
    assert f.then(g).encode() == "[2:1]"
    assert f.restriction().encode() == "[1:1,2:2]"
    assert f.inverse().encode() == "[2:1,3:2]"
    assert f.image == {2, 3} and f.domain == {1, 2}
    with pytest.raises(StructureError):
        PartialMap(frozenset({1}), frozenset({1}), ((1, 1), (1, 1)))
    with pytest.raises(StructureError):
        PartialMap(frozenset({1}), frozenset({1}), ((1, 2),))
    with pytest.raises(StructureError):
        decode("[1:1,2:1]", [1, 2], [1]).inverse()


def test_id_helpers():
    assert pb((2, 1), (1, 2)) == "[1:2,2:1]"
    assert ident_on(1, 2) == "[1:1,2:2]"
    assert ident_on() == "[]"


def test_three_object_category():
    X = partial_bijection_category([[1], [1, 2], [1, 2, 3]])
    assert len(X.category.arrows) == 83
    assert X.category.objects == ("X0", "X1", "X2")
    assert len(X.category.hom("X0", "X1")) == 3


def test_partial_function_category_size():
    R = partial_function_category([[1, 2]])
    assert len(R.base.arrows) == 9


def test_closures_match_oracle():
    maps = sym_inverse(2)
    for seed in maps:
        S = closure_subsemigroup([seed], 2)
        assert set(S.elements) == subsemigroup_closure([seed], maps)
    assert closure_subsemigroup(["[1:2]"], 2).elements == ("[1:1]", "[1:2]", "[2:1]", "[2:2]", "[]")
    assert closure_subsemigroup(["[1:2,2:1]"], 2).elements == ("[1:1,2:2]", "[1:2,2:1]")


def test_closure_errors():
    with pytest.raises(StructureError):
        closure_subsemigroup([], 2)
    with pytest.raises(StructureError):
        closure_subsemigroup(["[1:3]"], 2)


def test_small_tables():
    G = group_table(4)
    assert G.identity == "r0" and G.inv["r1"] == "r3"
    L = powerset_semilattice(2)
    assert L.elements == ("{1,2}", "{1}", "{2}", "{}")
    assert L.mul[("{1}", "{2}")] == "{}"
    assert L.identity == "{1,2}"
