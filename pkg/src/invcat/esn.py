"""Constructions between inverse categories and locally inductive groupoids.

``g_of_*`` builds the ordered groupoid of an inverse category, ``i_of_*``
goes back.  The one-object (semigroup) versions are ``classical_g`` and
``classical_s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .finstruct import (
    Arrow,
    FinCategory,
    FunctorData,
    StructureError,
    ValidationReport,
    compose_functors,
    identity_functor,
    validate_functor,
)
from .ogroupoid import (
    OrderedGroupoid,
    SemilatticePartition,
    canonical_partition,
    check_locally_inductive_functor,
    check_ordered_functor,
    check_ordered_groupoid,
    check_order_reflected,
    classify,
    preserves_tops,
    tensor,
)
from .restriction import (
    InverseCert,
    RestrictionData,
    certify_inverse_category,
    check_restriction_functor,
    leq,
    natural_order,
)

SINGLE = "*"


# -- inverse semigroups -----------------------------------------------------


@dataclass(frozen=True)
class InverseSemigroupTable:
    elements: tuple[str, ...]
    mul: Mapping[tuple[str, str], str]
    inv: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))
        object.__setattr__(self, "mul", dict(self.mul))
        object.__setattr__(self, "inv", dict(self.inv))

    @cached_property
    def idempotents(self) -> tuple[str, ...]:
        return tuple(e for e in self.elements if self.mul[(e, e)] == e)

    @cached_property
    def identity(self) -> str | None:
        for e in self.idempotents:
            if all(self.mul[(e, s)] == s == self.mul[(s, e)] for s in self.elements):
                return e
        return None

    def leq(self, s: str, t: str) -> bool:
        """Natural order: ``s = t e`` for some idempotent ``e``."""
        return any(self.mul[(t, e)] == s for e in self.idempotents)

    @cached_property
    def natural_order(self) -> frozenset[tuple[str, str]]:
        return frozenset((s, t) for s in self.elements for t in self.elements if self.leq(s, t))


def check_inverse_semigroup(S: InverseSemigroupTable) -> ValidationReport:
    report = ValidationReport("inverse semigroup")
    els, mul = S.elements, S.mul
    for s in els:
        for t in els:
            if mul.get((s, t)) not in els:
                report.add("multiplication total", s, t)
    if not report.ok:
        return report
    for s in els:
        for t in els:
            st = mul[(s, t)]
            for u in els:
                if mul[(st, u)] != mul[(s, mul[(t, u)])]:
                    report.add("associative", s, t, u)
    for s in els:
        i = S.inv.get(s)
        if i not in els:
            report.add("pseudoinverse missing", s)
            continue
        if mul[(mul[(s, i)], s)] != s or mul[(mul[(i, s)], i)] != i:
            report.add("s s* s = s, s* s s* = s*", s)
        others = [t for t in els if mul[(mul[(s, t)], s)] == s and mul[(mul[(t, s)], t)] == t]
        if others != [i]:
            report.add("pseudoinverse unique", s, *others)
    for e in S.idempotents:
        for f in S.idempotents:
            if mul[(e, f)] != mul[(f, e)]:
                report.add("idempotents commute", e, f)
    order = S.natural_order
    for s, t in order:
        if s != t and (t, s) in order:
            report.add("natural order antisymmetric", s, t)
        for u in els:
            if (t, u) in order and (s, u) not in order:
                report.add("natural order transitive", s, t, u)
    for s in els:
        if (s, s) not in order:
            report.add("natural order reflexive", s)
    return report


def semigroup_of_category(X: InverseCert) -> InverseSemigroupTable:
    C = X.category
    if len(C.objects) != 1:
        raise StructureError("only single-object inverse categories are semigroups")
    return InverseSemigroupTable(C.arrow_ids, C.comp, X.inv)


def category_of_semigroup(S: InverseSemigroupTable, semicategory: bool | None = None) -> InverseCert:
    """One-object inverse (semi)category; identities are kept only if ``S`` has a unit."""
    if semicategory is None:
        semicategory = S.identity is None
    if not semicategory and S.identity is None:
        raise StructureError("semigroup has no identity")
    ident = None if semicategory else {SINGLE: S.identity}
    C = FinCategory((SINGLE,), tuple(Arrow(s, SINGLE, SINGLE) for s in S.elements), S.mul, ident)
    R = RestrictionData(C, {s: S.mul[(S.inv[s], s)] for s in S.elements})
    cert = certify_inverse_category(R)
    if not isinstance(cert, InverseCert):
        raise StructureError(str(cert))
    return cert


# -- G: inverse categories to groupoids --------------------------------------


@dataclass(frozen=True)
class GroupoidImage:
    groupoid: OrderedGroupoid
    partition: SemilatticePartition


def g_of_inverse_category(X: InverseCert, semicategory: bool | None = None, verify: bool = True) -> GroupoidImage:
    """Objects are the restriction idempotents, ``f`` runs ``rbar f -> rbar f°``."""
    if semicategory is None:
        semicategory = X.category.is_semicategory
    C, rb, inv = X.category, X.rbar, X.inv
    objects = tuple(sorted(set(rb.values())))
    arrows = tuple(Arrow(f, rb[f], rb[inv[f]]) for f in C.arrow_ids)
    comp = {(g, f): C.comp[(g, f)] for g, f in C.composable_pairs() if rb[g] == rb[inv[f]]}
    base = FinCategory(objects, arrows, comp, {e: e for e in objects})
    G = OrderedGroupoid(base, dict(inv), natural_order(X.base))
    if verify:
        report = check_ordered_groupoid(G)
        if not report.ok:
            raise StructureError(f"G(X) is not an ordered groupoid:\n{report}")
    P = canonical_partition(G)
    if isinstance(P, ValidationReport):
        raise StructureError(f"G(X) is not locally inductive:\n{P}")
    if semicategory:
        P = P.without_tops()
    elif not P.top_heavy:
        raise StructureError("G(X) is not top-heavy")
    return GroupoidImage(G, P)


def g_of_functor(
    F: FunctorData,
    X: InverseCert,
    Y: InverseCert,
    GX: GroupoidImage | None = None,
    GY: GroupoidImage | None = None,
    oplax: bool = False,
) -> FunctorData:
    """Objects ``e -> F(e)``, arrows ``f -> F(f)``.

    Strict functors must land on a locally inductive functor; with
    ``oplax=True`` only an ordered functor is required.
    """
    GX = GX or g_of_inverse_category(X)
    GY = GY or g_of_inverse_category(Y)
    GF = FunctorData(
        GX.groupoid.base,
        GY.groupoid.base,
        {e: F.arr_map[e] for e in GX.groupoid.base.objects},
        {f: F.arr_map[f] for f in X.category.arrow_ids},
    )
    report = validate_functor(GF)
    if report.ok:
        report.extend(check_ordered_functor(GF, GX.groupoid, GY.groupoid))
        if not oplax and report.ok:
            report.extend(
                check_locally_inductive_functor(GF, GX.groupoid, GY.groupoid, GX.partition, GY.partition)
            )
    if not report.ok:
        raise StructureError(f"G(F) is not a {'n ordered' if oplax else ' locally inductive'} functor:\n{report}")
    return GF


# -- I: groupoids to inverse categories --------------------------------------


def _partition_for(G: OrderedGroupoid, P: SemilatticePartition | None, semicategory: bool) -> SemilatticePartition:
    if P is None:
        P = canonical_partition(G)
        if isinstance(P, ValidationReport):
            raise StructureError(f"not locally inductive:\n{P}")
    if semicategory:
        return P.without_tops()
    if not P.top_heavy:
        raise StructureError("not top-heavy")
    return P


def i_of_groupoid(
    G: OrderedGroupoid, P: SemilatticePartition | None = None, semicategory: bool = False
) -> InverseCert:
    """Objects are the blocks; composition is the tensor product."""
    P = _partition_for(G, P, semicategory)
    base = G.base
    block = {o: P.names[i] for o, i in P.block_of.items()}
    arrows = tuple(Arrow(f, block[base.dom(f)], block[base.cod(f)]) for f in base.arrow_ids)
    comp = {}
    for f in base.arrow_ids:
        for g in base.arrow_ids:
            if block[base.cod(f)] == block[base.dom(g)]:
                t = tensor(G, g, f)
                if t is None:
                    raise StructureError(f"tensor {g} (x) {f} missing inside a block")
                comp[(g, f)] = t
    ident = None if semicategory else {P.names[i]: base.ident[top] for i, top in enumerate(P.tops)}
    C = FinCategory(P.names, arrows, comp, ident)
    R = RestrictionData(C, {f: base.ident[base.dom(f)] for f in base.arrow_ids})
    cert = certify_inverse_category(R)
    if not isinstance(cert, InverseCert):
        raise StructureError(f"I(G) is not an inverse category:\n{cert}")
    if dict(cert.inv) != dict(G.ginv):
        raise StructureError("restricted inverses of I(G) differ from groupoid inverses")
    return cert


def i_of_functor(
    F: FunctorData,
    G: OrderedGroupoid,
    H: OrderedGroupoid,
    PG: SemilatticePartition | None = None,
    PH: SemilatticePartition | None = None,
    semicategory: bool = False,
    strict: bool = True,
) -> FunctorData:
    """Blocks go to the unique block containing their image; arrows as in ``F``.

    ``strict=False`` skips the functor check (used for ordered, not
    locally inductive, ``F``).
    """
    PG = _partition_for(G, PG, semicategory)
    PH = _partition_for(H, PH, semicategory)
    IG = i_of_groupoid(G, PG, semicategory).category
    IH = i_of_groupoid(H, PH, semicategory).category
    obj_map = {}
    for name, block in zip(PG.names, PG.blocks):
        images = {PH.block_of[F.obj_map[o]] for o in block}
        if len(images) != 1:
            raise StructureError(f"image of block {name} meets {len(images)} blocks")
        obj_map[name] = PH.names[images.pop()]
    IF = FunctorData(IG, IH, obj_map, dict(F.arr_map))
    if strict:
        report = validate_functor(IF)
        if not report.ok:
            raise StructureError(f"I(F) is not a functor:\n{report}")
    return IF


# -- checks and witnesses ----------------------------------------------------


def tensor_equals_composition_check(X: InverseCert, GX: GroupoidImage | None = None) -> ValidationReport:
    GX = GX or g_of_inverse_category(X)
    G = GX.groupoid
    report = ValidationReport("tensor is composition")
    C = X.category
    n = 0
    for f in C.arrow_ids:
        for g in C.arrow_ids:
            t = tensor(G, f, g)
            if t is None:
                continue
            n += 1
            if t != C.compose(f, g):
                report.add("tensor = composite", f, g, detail=f"tensor {t}, composite {C.compose(f, g)}")
    report.notes.append(f"{n} defined tensors checked")
    return report


@dataclass
class IsoWitness:
    forward: FunctorData
    backward: FunctorData
    flags: dict[str, bool] = field(default_factory=dict)
    report: ValidationReport = field(default_factory=ValidationReport)

    @property
    def verified(self) -> bool:
        return self.report.ok and all(self.flags.values())


def _iso_checks(fwd: FunctorData, bwd: FunctorData, report: ValidationReport) -> dict[str, bool]:
    flags = {}
    r1, r2 = validate_functor(fwd), validate_functor(bwd)
    report.extend(r1).extend(r2)
    flags["functors"] = r1.ok and r2.ok
    if flags["functors"]:
        flags["backward.forward = 1"] = compose_functors(bwd, fwd) == identity_functor(fwd.source)
        flags["forward.backward = 1"] = compose_functors(fwd, bwd) == identity_functor(fwd.target)
    flags["objects bijective"] = len(set(fwd.obj_map.values())) == len(fwd.source.objects) == len(fwd.target.objects)
    flags["arrows bijective"] = len(set(fwd.arr_map.values())) == len(fwd.source.arrows) == len(fwd.target.arrows)
    return flags


def roundtrip_groupoid(
    G: OrderedGroupoid, P: SemilatticePartition | None = None, semicategory: bool = False
) -> IsoWitness:
    """Witness ``G -> GI(G)``: objects ``A -> 1_A``, arrows unchanged."""
    P = _partition_for(G, P, semicategory)
    IG = i_of_groupoid(G, P, semicategory)
    GIG = g_of_inverse_category(IG, semicategory=semicategory)
    H, PH = GIG.groupoid, GIG.partition
    fwd = FunctorData(G.base, H.base, dict(G.base.ident), {f: f for f in G.base.arrow_ids})
    bwd = FunctorData(H.base, G.base, {e: G.base.dom(e) for e in H.base.objects}, {f: f for f in H.base.arrow_ids})
    report = ValidationReport("groupoid round trip")
    flags = _iso_checks(fwd, bwd, report)
    if flags["functors"]:
        for r in (
            check_ordered_functor(fwd, G, H),
            check_ordered_functor(bwd, H, G),
            check_order_reflected(fwd, G, H),
        ):
            report.extend(r)
        flags["order preserved and reflected"] = report.ok
        li = check_locally_inductive_functor(fwd, G, H, P, PH)
        li.extend(check_locally_inductive_functor(bwd, H, G, PH, P))
        report.extend(li)
        flags["locally inductive both ways"] = li.ok
        blocks = {frozenset(fwd.obj_map[o] for o in b) for b in P.blocks}
        flags["partition corresponds"] = blocks == {frozenset(b) for b in PH.blocks} and [
            None if t is None else fwd.obj_map[t] for t in P.tops
        ] == [PH.tops[PH.block_of[fwd.obj_map[b[0]]]] for b in P.blocks]
    return IsoWitness(fwd, bwd, flags, report)


def _object_idempotents(X: InverseCert) -> dict[str, list[str]]:
    C = X.category
    out: dict[str, list[str]] = {o: [] for o in C.objects}
    for f in C.arrow_ids:
        out[C.dom(f)].append(X.rbar[f])
    return out


def roundtrip_category(X: InverseCert, semicategory: bool | None = None) -> IsoWitness:
    """Witness ``X -> IG(X)``: objects ``A -> (block of E_A)``, arrows unchanged."""
    if semicategory is None:
        semicategory = X.category.is_semicategory
    GX = g_of_inverse_category(X, semicategory)
    Y = i_of_groupoid(GX.groupoid, GX.partition, semicategory)
    P = GX.partition
    C = X.category
    obj_map = {}
    report = ValidationReport("category round trip")
    for o, idems in _object_idempotents(X).items():
        blocks = {P.block_of[e] for e in idems}
        if len(blocks) != 1:
            report.add("E_A lies in one block", o, detail=f"{len(blocks)} blocks")
            continue
        obj_map[o] = P.names[blocks.pop()]
    back_obj = {P.names[i]: C.dom(b[0]) for i, b in enumerate(P.blocks)}
    fwd = FunctorData(C, Y.category, obj_map, {f: f for f in C.arrow_ids})
    bwd = FunctorData(Y.category, C, back_obj, {f: f for f in C.arrow_ids})
    if not report.ok:
        return IsoWitness(fwd, bwd, {"objects": False}, report)
    flags = _iso_checks(fwd, bwd, report)
    if flags["functors"]:
        r = check_restriction_functor(fwd, X.base, Y.base).extend(check_restriction_functor(bwd, Y.base, X.base))
        report.extend(r)
        flags["restriction preserved"] = r.ok
        flags["inverses preserved"] = all(Y.inv[f] == X.inv[f] for f in C.arrow_ids)
    return IsoWitness(fwd, bwd, flags, report)


def check_naturality(
    F: FunctorData, G: OrderedGroupoid, H: OrderedGroupoid, semicategory: bool = False
) -> ValidationReport:
    """Square ``GI(F) . eta_G == eta_H . F`` for the round-trip witnesses."""
    report = ValidationReport("naturality")
    wG = roundtrip_groupoid(G, semicategory=semicategory)
    wH = roundtrip_groupoid(H, semicategory=semicategory)
    PG = _partition_for(G, None, semicategory)
    PH = _partition_for(H, None, semicategory)
    IF = i_of_functor(F, G, H, PG, PH, semicategory)
    IG = i_of_groupoid(G, PG, semicategory)
    IH = i_of_groupoid(H, PH, semicategory)
    GIF = g_of_functor(IF, IG, IH)
    left = compose_functors(GIF, wG.forward)
    right = compose_functors(wH.forward, F)
    if left != right:
        report.add("naturality square", detail="GI(F).eta != eta.F")
    return report


def reconstruct_functor(
    F: FunctorData,
    X: InverseCert,
    X2: InverseCert,
    GX: GroupoidImage | None = None,
    GX2: GroupoidImage | None = None,
) -> FunctorData:
    """Lift a locally inductive ``F: G(X) -> G(X2)`` to ``F': X -> X2`` with ``G(F') = F``."""
    GX = GX or g_of_inverse_category(X)
    GX2 = GX2 or g_of_inverse_category(X2)
    C, C2 = X.category, X2.category
    obj_map = {}
    for o, idems in _object_idempotents(X).items():
        owners = {C2.dom(F.obj_map[e]) for e in idems}
        if len(owners) != 1:
            raise StructureError(f"not locally inductive: F(E_{o}) meets {len(owners)} idempotent sets")
        obj_map[o] = owners.pop()
    lifted = FunctorData(C, C2, obj_map, {f: F.arr_map[f] for f in C.arrow_ids})
    report = validate_functor(lifted)
    if not report.ok:
        raise StructureError(f"lifted map is not a functor:\n{report}")
    if g_of_functor(lifted, X, X2, GX, GX2) != F:
        raise StructureError("G(F') differs from F")
    return lifted


# -- classical single-object correspondence ---------------------------------


def classical_g(S: InverseSemigroupTable, verify: bool = True) -> OrderedGroupoid:
    """Arrows ``s: s*s -> ss*``, composed by multiplication, with the natural order."""
    mul, inv = S.mul, S.inv
    objects = S.idempotents
    arrows = tuple(Arrow(s, mul[(inv[s], s)], mul[(s, inv[s])]) for s in S.elements)
    ends = {a.id: a for a in arrows}
    comp = {(t, s): mul[(t, s)] for s in S.elements for t in S.elements if ends[t].dom == ends[s].cod}
    G = OrderedGroupoid(FinCategory(objects, arrows, comp, {e: e for e in objects}), dict(inv), S.natural_order)
    if verify:
        report = check_ordered_groupoid(G)
        if not report.ok:
            raise StructureError(f"G(S) is not an ordered groupoid:\n{report}")
        if not classify(G).inductive:
            raise StructureError("G(S) is not inductive")
    return G


def classical_s(G: OrderedGroupoid) -> InverseSemigroupTable:
    """Arrows of an inductive groupoid under the tensor product."""
    arrows = G.base.arrow_ids
    mul = {}
    for a in arrows:
        for b in arrows:
            t = tensor(G, a, b)
            if t is None:
                raise StructureError(f"tensor not total: {a} (x) {b} undefined")
            mul[(a, b)] = t
    S = InverseSemigroupTable(arrows, mul, dict(G.ginv))
    report = check_inverse_semigroup(S)
    if not report.ok:
        raise StructureError(f"S(G) is not an inverse semigroup:\n{report}")
    return S


# -- oplax functors ----------------------------------------------------------


def check_oplax_functor(F: FunctorData, X: InverseCert, Y: InverseCert) -> ValidationReport:
    """``F(gf) <= F(g)F(f)`` and ``F(1_A) <= 1_{F A}`` in the natural order of ``Y``.

    Strict inequalities are listed in ``notes``.
    """
    report = ValidationReport("oplax functor")
    C, D = X.category, Y.category
    for a in C.arrows:
        img = F.arr_map.get(a.id)
        if img not in D.arrow or (D.dom(img), D.cod(img)) != (F.obj_map.get(a.dom), F.obj_map.get(a.cod)):
            report.add("arrow map type", a.id, img)
    if not report.ok:
        return report
    strict = 0
    for g, f in C.composable_pairs():
        lhs = F.arr_map[C.comp[(g, f)]]
        rhs = D.comp[(F.arr_map[g], F.arr_map[f])]
        if not leq(Y.base, lhs, rhs):
            report.add("F(gf) <= F(g)F(f)", g, f, detail=f"{lhs} !<= {rhs}")
        elif lhs != rhs:
            strict += 1
            report.notes.append(f"strict: F({g}.{f}) = {lhs} < {rhs} = F({g})F({f})")
    if C.ident is not None:
        for o in C.objects:
            lhs, rhs = F.arr_map[C.ident[o]], D.ident[F.obj_map[o]]
            if not leq(Y.base, lhs, rhs):
                report.add("F(1_A) <= 1_FA", o, detail=f"{lhs} !<= {rhs}")
            elif lhs != rhs:
                strict += 1
                report.notes.append(f"strict: F(1_{o}) = {lhs} < {rhs}")
    report.notes.insert(0, f"{strict} strict inequalities")
    return report


def strict_inequalities(report: ValidationReport) -> list[str]:
    return [n for n in report.notes if n.startswith("strict:")]


@dataclass
class OplaxResult:
    functor: FunctorData
    report: ValidationReport
    flags: dict[str, bool]


def oplax_to_ordered(F: FunctorData, X: InverseCert, Y: InverseCert) -> OplaxResult:
    """Oplax ``F`` between inverse categories to the ordered functor ``G(F)``."""
    op = check_oplax_functor(F, X, Y)
    report = ValidationReport("oplax to ordered").extend(op)
    GX, GY = g_of_inverse_category(X), g_of_inverse_category(Y)
    GF = FunctorData(
        GX.groupoid.base,
        GY.groupoid.base,
        {e: F.arr_map[e] for e in GX.groupoid.base.objects},
        dict(F.arr_map),
    )
    fr = validate_functor(GF)
    if fr.ok:
        fr.extend(check_ordered_functor(GF, GX.groupoid, GY.groupoid))
    report.extend(fr)
    flags = {"oplax": op.ok, "G(F) ordered functor": fr.ok}
    if fr.ok:
        li = check_locally_inductive_functor(GF, GX.groupoid, GY.groupoid, GX.partition, GY.partition)
        flags["G(F) locally inductive"] = li.ok
        # back through I: arrows unchanged, so I(G(F)) must agree with F on arrows
        IF = i_of_functor(GF, GX.groupoid, GY.groupoid, GX.partition, GY.partition, strict=False)
        wX, wY = roundtrip_category(X), roundtrip_category(Y)
        flags["round trip agrees"] = (
            IF.arr_map == F.arr_map
            and all(wY.forward.obj_map[F.obj_map[o]] == IF.obj_map[wX.forward.obj_map[o]] for o in X.category.objects)
        )
    return OplaxResult(GF, report, flags)


def ordered_to_oplax(
    F: FunctorData,
    G: OrderedGroupoid,
    H: OrderedGroupoid,
    PG: SemilatticePartition | None = None,
    PH: SemilatticePartition | None = None,
) -> OplaxResult:
    """Ordered ``F`` between top-heavy locally inductive groupoids to oplax ``I(F)``."""
    PG, PH = _partition_for(G, PG, False), _partition_for(H, PH, False)
    report = validate_functor(F).extend(check_ordered_functor(F, G, H))
    if not report.ok:
        return OplaxResult(F, report, {"ordered": False})
    IG, IH = i_of_groupoid(G, PG), i_of_groupoid(H, PH)
    IF = i_of_functor(F, G, H, PG, PH, strict=False)
    op = check_oplax_functor(IF, IG, IH)
    report.extend(op)
    C = IG.category
    flags = {
        "ordered": True,
        "I(F) oplax": op.ok,
        "strict on identities": all(IF.arr_map[C.ident[o]] == IH.category.ident[IF.obj_map[o]] for o in C.objects),
        "preserves tops": preserves_tops(F, PG, PH),
        "locally inductive": check_locally_inductive_functor(F, G, H, PG, PH).ok,
    }
    # back through G: G(I(F)) must be F transported along the round-trip witnesses
    GIG = g_of_inverse_category(IG).groupoid.base
    GIF = FunctorData(
        GIG,
        g_of_inverse_category(IH).groupoid.base,
        {e: IF.arr_map[e] for e in GIG.objects},
        dict(IF.arr_map),
    )
    wG, wH = roundtrip_groupoid(G, PG), roundtrip_groupoid(H, PH)
    flags["round trip agrees"] = compose_functors(GIF, wG.forward) == compose_functors(wH.forward, F)
    return OplaxResult(IF, report, flags)


def oplax_correspondence(F: FunctorData, source, target) -> OplaxResult:
    """Dispatch on the kind of ``source``: inverse category or ordered groupoid."""
    if isinstance(source, InverseCert):
        return oplax_to_ordered(F, source, target)
    if isinstance(source, OrderedGroupoid):
        return ordered_to_oplax(F, source, target)
    raise TypeError(f"unsupported source {type(source).__name__}")


# -- small helpers used by tests and the CLI ---------------------------------


def map_functor(X: InverseCert, Y: InverseCert, arrow_fn, obj_map: Mapping[str, str] | None = None) -> FunctorData:
    """FunctorData-shaped data from a function on arrow ids."""
    C, D = X.category, Y.category
    if obj_map is None:
        if len(D.objects) != 1:
            raise StructureError("obj_map required for multi-object targets")
        obj_map = {o: D.objects[0] for o in C.objects}
    return FunctorData(C, D, obj_map, {f: arrow_fn(f) for f in C.arrow_ids})
