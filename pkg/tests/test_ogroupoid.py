import pytest
from conftest import EMPTY, ID1, ID12, ID2, ONE_TO_TWO, SWAP, TWO_TO_ONE

from invcat.esn import g_of_inverse_category
from invcat.finstruct import Arrow, FinCategory, FunctorData, StructureError, discrete_category, enumerate_functors, validate_functor
from invcat.generators import cyclic_group_category
from invcat.ogroupoid import (
    OrderedGroupoid,
    SemilatticePartition,
    canonical_partition,
    check_locally_inductive_functor,
    check_order_reflected,
    check_ordered_functor,
    check_ordered_groupoid,
    check_partition,
    check_tensor_laws,
    classify,
    corestrict,
    discrete_order,
    disjoint_union,
    object_order,
    preserves_tops,
    restrict,
    tensor,
)
from invcat.restriction import natural_order


def poset_groupoid(objects, less):
    """Identities only, ordered by the reflexive closure of ``less``."""
    arrows = tuple(Arrow(f"1{o}", o, o) for o in objects)
    comp = {(f"1{o}", f"1{o}"): f"1{o}" for o in objects}
    C = FinCategory(tuple(objects), arrows, comp, {o: f"1{o}" for o in objects})
    order = {(f"1{o}", f"1{o}") for o in objects} | {(f"1{a}", f"1{b}") for a, b in less}
    return OrderedGroupoid(C, {f"1{o}": f"1{o}" for o in objects}, frozenset(order))


def test_G_of_I2_shape(GI2):
    G = GI2.groupoid
    assert set(G.base.objects) == {EMPTY, ID1, ID2, ID12}
    assert len(G.base.arrows) == 7
    assert (G.base.dom(ONE_TO_TWO), G.base.cod(ONE_TO_TWO)) == (ID1, ID2)
    assert (G.base.dom(SWAP), G.base.cod(SWAP)) == (ID12, ID12)
    assert len(G.order) == 17
    assert check_ordered_groupoid(G).ok


def test_restrict_and_corestrict(GI2):
    G = GI2.groupoid
    assert restrict(G, SWAP, ID1) == ONE_TO_TWO
    assert restrict(G, SWAP, ID2) == TWO_TO_ONE
    assert corestrict(G, ID1, SWAP) == TWO_TO_ONE
    assert restrict(G, ONE_TO_TWO, EMPTY) == EMPTY
    with pytest.raises(StructureError):
        restrict(G, ONE_TO_TWO, ID2)
    with pytest.raises(StructureError):
        object_order(G, "nope", ID1)


def test_tensor_examples(GI2):
    G = GI2.groupoid
    assert tensor(G, SWAP, ID1) == ONE_TO_TWO
    assert tensor(G, ID1, SWAP) == TWO_TO_ONE
    assert tensor(G, ONE_TO_TWO, ONE_TO_TWO) == EMPTY
    assert tensor(G, TWO_TO_ONE, ONE_TO_TWO) == ID1


def test_tensor_laws(GI3):
    assert check_tensor_laws(GI3.groupoid).ok


def test_classify_G_of_I(GI1, GI2, GI3):
    for GX in (GI1, GI2, GI3):
        c = classify(GX.groupoid)
        assert c.as_dict() == dict(ordered=True, locally_inductive=True, top_heavy=True, inductive=True)


def test_group_is_inductive():
    X = cyclic_group_category(3)
    GX = g_of_inverse_category(X)
    assert len(GX.groupoid.base.objects) == 1
    assert classify(GX.groupoid).inductive
    assert GX.partition.tops == ("r0",)


def test_discrete_groupoid():
    D = discrete_category(["A", "B", "C"])
    G = OrderedGroupoid(D, {f: f for f in D.arrow_ids}, discrete_order(D))
    c = classify(G)
    assert c.locally_inductive and c.top_heavy and not c.inductive
    assert len(canonical_partition(G).blocks) == 3


def test_poset_without_meets():
    G = poset_groupoid("abcd", [("c", "a"), ("c", "b"), ("d", "a"), ("d", "b")])
    assert check_ordered_groupoid(G).ok
    P = canonical_partition(G)
    assert not isinstance(P, SemilatticePartition)
    assert "missing meet" in P.laws()
    assert classify(G).as_dict() == dict(ordered=True, locally_inductive=False, top_heavy=False, inductive=False)


def test_semilattice_without_top():
    G = poset_groupoid("abc", [("c", "a"), ("c", "b")])
    P = canonical_partition(G)
    assert P.tops == (None,)
    c = classify(G)
    assert c.locally_inductive and not c.top_heavy


def test_missing_order_pair_breaks_restrictions(GI2):
    G = GI2.groupoid
    broken = OrderedGroupoid(G.base, G.ginv, G.order - {(ONE_TO_TWO, SWAP)})
    report = check_ordered_groupoid(broken)
    assert "axiom (iii)" in report.laws()
    assert not classify(broken).ordered


def test_extra_order_pair_breaks_transitivity(GI2):
    G = GI2.groupoid
    broken = OrderedGroupoid(G.base, G.ginv, G.order | {(SWAP, ID12)})
    assert "order transitive" in check_ordered_groupoid(broken).laws()


def test_wrong_inverse_detected(GI2):
    G = GI2.groupoid
    ginv = dict(G.ginv)
    ginv[ONE_TO_TWO] = ONE_TO_TWO
    assert check_ordered_groupoid(OrderedGroupoid(G.base, ginv, G.order)).laws() == {"groupoid inverse"}


def test_disjoint_union(GI1, GI2):
    U = disjoint_union(GI1.groupoid, GI2.groupoid, tags=["a", "b"])
    assert len(U.base.objects) == 2 + 4
    assert len(U.base.arrows) == 2 + 7
    assert "b.[1:2,2:1]" in U.base.arrow
    assert check_ordered_groupoid(U).ok
    c = classify(U)
    assert c.locally_inductive and c.top_heavy and not c.inductive
    P = canonical_partition(U)
    assert P.tops == ("a.[1:1]", "b.[1:1,2:2]")


def test_stored_partition_checked(GI2):
    G, P = GI2.groupoid, GI2.partition
    assert check_partition(G, P).ok
    bad = SemilatticePartition(P.blocks, P.meet, (ID1,))
    assert "top is not the block maximum" in check_partition(G, bad).laws()
    split = SemilatticePartition(((EMPTY, ID1), (ID2, ID12)), {}, (None, None))
    assert not check_partition(G, split).ok


def test_ordered_and_locally_inductive_functors(GI1, GI2):
    G, H = GI1.groupoid, GI2.groupoid
    good = FunctorData(G.base, H.base, {"[]": EMPTY, "[1:1]": ID12}, {"[]": EMPTY, "[1:1]": ID12})
    assert validate_functor(good).ok
    assert check_ordered_functor(good, G, H).ok
    assert check_locally_inductive_functor(good, G, H).ok
    assert preserves_tops(good, GI1.partition, GI2.partition)

    low = FunctorData(G.base, H.base, {"[]": EMPTY, "[1:1]": ID1}, {"[]": EMPTY, "[1:1]": ID1})
    assert check_ordered_functor(low, G, H).ok
    report = check_locally_inductive_functor(low, G, H)
    assert report.laws() == {"empty meet (top) preserved"}
    assert not preserves_tops(low, GI1.partition, GI2.partition)


def test_order_reflection(GI2):
    G = GI2.groupoid
    idf = FunctorData(G.base, G.base, {o: o for o in G.base.objects}, {f: f for f in G.base.arrow_ids})
    assert check_order_reflected(idf, G, G).ok
    collapse = FunctorData(G.base, G.base, {o: EMPTY for o in G.base.objects}, {f: EMPTY for f in G.base.arrow_ids})
    assert validate_functor(collapse).ok
    assert check_order_reflected(collapse, G, G).laws() == {"order reflected"}


def test_locally_inductive_functors_enumerated(GI1, GI2):
    G, H = GI1.groupoid, GI2.groupoid
    fs = [F for F in enumerate_functors(G.base, H.base) if check_locally_inductive_functor(F, G, H).ok]
    assert len(fs) == 4
    assert {F.arr_map["[1:1]"] for F in fs} == {ID12}
    assert {F.arr_map["[]"] for F in fs} == {EMPTY, ID1, ID2, ID12}


def test_order_is_natural_order(I3, GI3):
    assert GI3.groupoid.order == natural_order(I3.base)
