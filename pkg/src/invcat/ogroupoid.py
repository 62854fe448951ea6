"""Ordered groupoids, their object semilattices, and tensor products."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .finstruct import (
    Arrow,
    FinCategory,
    FunctorData,
    StructureError,
    ValidationReport,
    validate_category,
)


@dataclass(frozen=True)
class OrderedGroupoid:
    """A finite groupoid with a partial order on arrows.

    ``order`` holds pairs ``(f, g)`` meaning ``f <= g``; the object order
    is read off from the identity arrows.
    """

    base: FinCategory
    ginv: Mapping[str, str]
    order: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "ginv", dict(self.ginv))
        object.__setattr__(self, "order", frozenset(self.order))

    @cached_property
    def down(self) -> dict[str, frozenset[str]]:
        d: dict[str, set[str]] = {f: set() for f in self.base.arrow_ids}
        for f, g in self.order:
            if g in d:
                d[g].add(f)
        return {k: frozenset(v) for k, v in d.items()}

    @cached_property
    def object_of_identity(self) -> dict[str, str]:
        return {i: o for o, i in self.base.ident.items()}

    @cached_property
    def object_leq(self) -> frozenset[tuple[str, str]]:
        ident = self.base.ident
        return frozenset(
            (a, b) for a in self.base.objects for b in self.base.objects if (ident[a], ident[b]) in self.order
        )

    @cached_property
    def meets(self) -> dict[tuple[str, str], str]:
        """Greatest lower bounds of object pairs, where they exist."""
        le = self.object_leq
        objs = self.base.objects
        below = {a: {c for c in objs if (c, a) in le} for a in objs}
        out = {}
        for a in objs:
            for b in objs:
                lower = below[a] & below[b]
                glb = [m for m in lower if all((c, m) in le for c in lower)]
                if len(glb) == 1:
                    out[(a, b)] = glb[0]
        return out

    @cached_property
    def _restrictions(self) -> dict[tuple[str, str], list[str]]:
        out: dict[tuple[str, str], list[str]] = {}
        for f in self.base.arrow_ids:
            for g in self.down[f]:
                out.setdefault((f, self.base.dom(g)), []).append(g)
        return out

    @cached_property
    def _corestrictions(self) -> dict[tuple[str, str], list[str]]:
        out: dict[tuple[str, str], list[str]] = {}
        for f in self.base.arrow_ids:
            for g in self.down[f]:
                out.setdefault((f, self.base.cod(g)), []).append(g)
        return out


def object_order(G: OrderedGroupoid, a: str, b: str) -> bool:
    for o in (a, b):
        if o not in G.base.objects:
            raise StructureError(f"unknown object {o!r}")
    return (a, b) in G.object_leq


def restrict(G: OrderedGroupoid, f: str, obj: str) -> str:
    """The unique ``f' <= f`` with ``dom f' == obj``."""
    if not object_order(G, obj, G.base.dom(f)):
        raise StructureError(f"not <=: {obj} is not below dom {f}")
    cands = G._restrictions.get((f, obj), [])
    if len(cands) != 1:
        raise StructureError(f"{len(cands)} restrictions of {f} to {obj}: input is not an ordered groupoid")
    return cands[0]


def corestrict(G: OrderedGroupoid, obj: str, f: str) -> str:
    """The unique ``f' <= f`` with ``cod f' == obj``."""
    if not object_order(G, obj, G.base.cod(f)):
        raise StructureError(f"not <=: {obj} is not below cod {f}")
    cands = G._corestrictions.get((f, obj), [])
    if len(cands) != 1:
        raise StructureError(f"{len(cands)} corestrictions of {f} to {obj}: input is not an ordered groupoid")
    return cands[0]


def tensor(G: OrderedGroupoid, alpha: str, beta: str) -> str | None:
    m = G.meets.get((G.base.dom(alpha), G.base.cod(beta)))
    if m is None:
        return None
    return G.base.comp[(restrict(G, alpha, m), corestrict(G, m, beta))]


def check_ordered_groupoid(G: OrderedGroupoid) -> ValidationReport:
    report = validate_category(G.base)
    report.subject = "ordered groupoid"
    if not report.ok:
        return report
    C = G.base
    if C.ident is None:
        report.add("groupoid identities", detail="no identity arrows")
        return report
    for f in C.arrow_ids:
        g = G.ginv.get(f)
        if g not in C.arrow:
            report.add("inverse missing", f)
        elif C.compose(g, f) != C.ident[C.dom(f)] or C.compose(f, g) != C.ident[C.cod(f)]:
            report.add("groupoid inverse", f, g)
    for f, g in G.order:
        if f not in C.arrow or g not in C.arrow:
            report.add("order mentions unknown arrow", f, g)
    if not report.ok:
        return report

    order, down = G.order, G.down
    for f in C.arrow_ids:
        if (f, f) not in order:
            report.add("order reflexive", f)
    for f, g in sorted(order):
        if f != g and (g, f) in order:
            report.add("order antisymmetric", f, g)
        for h in C.arrow_ids:
            if (g, h) in order and (f, h) not in order:
                report.add("order transitive", f, g, h)
        if (G.ginv[f], G.ginv[g]) not in order:
            report.add("axiom (i)", f, g, detail="f <= g but f^-1 !<= g^-1")
        if (C.ident[C.dom(f)], C.ident[C.dom(g)]) not in order or (
            C.ident[C.cod(f)],
            C.ident[C.cod(g)],
        ) not in order:
            report.add("order on endpoints", f, g)
    for A, B in C.composable_pairs():
        AB = C.comp[(A, B)]
        for a in down[A]:
            for b in down[B]:
                if C.composable(a, b) and (C.comp[(a, b)], AB) not in order:
                    report.add("axiom (ii)", a, A, b, B)
    le = G.object_leq
    for f in C.arrow_ids:
        for obj in C.objects:
            if (obj, C.dom(f)) in le:
                n = len(G._restrictions.get((f, obj), []))
                if n != 1:
                    report.add("axiom (iii)", f, obj, detail=f"{n} restrictions")
            if (obj, C.cod(f)) in le:
                n = len(G._corestrictions.get((f, obj), []))
                if n != 1:
                    report.add("axiom (iv)", f, obj, detail=f"{n} corestrictions")
    return report


@dataclass(frozen=True)
class SemilatticePartition:
    blocks: tuple[tuple[str, ...], ...]
    meet: Mapping[tuple[str, str], str]
    tops: tuple[str | None, ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "meet", dict(self.meet))
        if not self.names:
            object.__setattr__(self, "names", tuple(f"M{i}" for i in range(len(self.blocks))))

    @cached_property
    def block_of(self) -> dict[str, int]:
        return {o: i for i, b in enumerate(self.blocks) for o in b}

    @property
    def top_heavy(self) -> bool:
        return all(t is not None for t in self.tops)

    def without_tops(self) -> "SemilatticePartition":
        return SemilatticePartition(self.blocks, self.meet, tuple(None for _ in self.blocks), self.names)


def _components(objects: Iterable[str], pairs: Iterable[tuple[str, str]]) -> list[tuple[str, ...]]:
    parent = {o: o for o in objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[str, list[str]] = {}
    for o in parent:
        groups.setdefault(find(o), []).append(o)
    return sorted(tuple(sorted(g)) for g in groups.values())


def canonical_partition(G: OrderedGroupoid) -> SemilatticePartition | ValidationReport:
    blocks = _components(G.base.objects, G.object_leq)
    meets = G.meets
    report = ValidationReport("semilattice partition")
    table = {}
    tops = []
    le = G.object_leq
    for i, block in enumerate(blocks):
        for a in block:
            for b in block:
                m = meets.get((a, b))
                if m is None:
                    report.add("missing meet", f"M{i}", a, b)
                    return report
                table[(a, b)] = m
        maxima = [t for t in block if all((o, t) in le for o in block)]
        tops.append(maxima[0] if maxima else None)
    return SemilatticePartition(tuple(blocks), table, tuple(tops))


def check_partition(G: OrderedGroupoid, P: SemilatticePartition) -> ValidationReport:
    """Validate a stored partition against the canonical one."""
    report = ValidationReport("stored partition")
    canon = canonical_partition(G)
    if isinstance(canon, ValidationReport):
        return report.extend(canon)
    if sorted(map(sorted, P.blocks)) != sorted(map(sorted, canon.blocks)):
        report.add("blocks differ from comparability components")
        return report
    canon_top = {canon.blocks[i]: t for i, t in enumerate(canon.tops)}
    for block, t in zip(P.blocks, P.tops):
        if t is not None and canon_top[tuple(sorted(block))] != t:
            report.add("top is not the block maximum", t)
    return report


@dataclass(frozen=True)
class Classification:
    ordered: bool
    locally_inductive: bool
    top_heavy: bool
    inductive: bool

    def as_dict(self) -> dict[str, bool]:
        return dict(
            ordered=self.ordered,
            locally_inductive=self.locally_inductive,
            top_heavy=self.top_heavy,
            inductive=self.inductive,
        )


def classify(G: OrderedGroupoid) -> Classification:
    if not check_ordered_groupoid(G).ok:
        return Classification(False, False, False, False)
    P = canonical_partition(G)
    if isinstance(P, ValidationReport):
        return Classification(True, False, False, False)
    return Classification(True, True, P.top_heavy, len(P.blocks) == 1)


def check_ordered_functor(F: FunctorData, G: OrderedGroupoid, H: OrderedGroupoid) -> ValidationReport:
    report = ValidationReport("ordered functor")
    for f, g in sorted(G.order):
        if (F.arr_map[f], F.arr_map[g]) not in H.order:
            report.add("order preserved", f, g, detail=f"images {F.arr_map[f]}, {F.arr_map[g]}")
    return report


def check_order_reflected(F: FunctorData, G: OrderedGroupoid, H: OrderedGroupoid) -> ValidationReport:
    report = ValidationReport("order reflected")
    for f in G.base.arrow_ids:
        for g in G.base.arrow_ids:
            if (F.arr_map[f], F.arr_map[g]) in H.order and (f, g) not in G.order:
                report.add("order reflected", f, g)
    return report


def check_locally_inductive_functor(
    F: FunctorData,
    G: OrderedGroupoid,
    H: OrderedGroupoid,
    PG: SemilatticePartition | None = None,
    PH: SemilatticePartition | None = None,
) -> ValidationReport:
    report = ValidationReport("locally inductive functor")
    PG = PG or canonical_partition(G)
    PH = PH or canonical_partition(H)
    if isinstance(PG, ValidationReport) or isinstance(PH, ValidationReport):
        report.add("partition", detail="source or target is not locally inductive")
        return report
    om = F.obj_map
    for (a, b), m in sorted(G.meets.items()):
        if H.meets.get((om[a], om[b])) != om[m]:
            report.add("binary meet preserved", a, b, detail=f"F({m}) = {om[m]}")
    for block, top in zip(PG.blocks, PG.tops):
        if top is None:
            continue
        img = om[top]
        tgt_top = PH.tops[PH.block_of[img]]
        if tgt_top != img:
            report.add("empty meet (top) preserved", top, img)
    arrows = G.base.arrow_ids
    for a in arrows:
        for b in arrows:
            t = tensor(G, a, b)
            if t is None:
                continue
            if tensor(H, F.arr_map[a], F.arr_map[b]) != F.arr_map[t]:
                report.add("tensor preserved", a, b)
    return report


def preserves_tops(F: FunctorData, PG: SemilatticePartition, PH: SemilatticePartition) -> bool:
    for top in PG.tops:
        if top is not None and PH.tops[PH.block_of[F.obj_map[top]]] != F.obj_map[top]:
            return False
    return True


def check_tensor_laws(G: OrderedGroupoid) -> ValidationReport:
    """Associativity where defined, and the pseudo-inverse law where tensors are total."""
    report = ValidationReport("tensor laws")
    arrows = G.base.arrow_ids
    t = {(a, b): tensor(G, a, b) for a in arrows for b in arrows}
    for a in arrows:
        for b in arrows:
            ab = t[(a, b)]
            for c in arrows:
                bc = t[(b, c)]
                if ab is None or bc is None:
                    continue
                left, right = t[(ab, c)], t[(a, bc)]
                if left is not None and right is not None and left != right:
                    report.add("tensor associative", a, b, c)
        inv = G.ginv[a]
        aa = t[(a, inv)]
        if aa is not None and t[(aa, a)] != a:
            report.add("a.a^-1.a = a", a)
    return report


def disjoint_union(*groupoids: OrderedGroupoid, tags: Iterable[str] | None = None) -> OrderedGroupoid:
    """Tagged disjoint union; ids become ``tag.id``."""
    tags = list(tags) if tags is not None else [f"g{i}" for i in range(len(groupoids))]
    objects, arrows, comp, ident, ginv, order = [], [], {}, {}, {}, set()
    for tag, G in zip(tags, groupoids):
        p = lambda x, t=tag: f"{t}.{x}"  # noqa: E731
        objects += [p(o) for o in G.base.objects]
        arrows += [Arrow(p(a.id), p(a.dom), p(a.cod)) for a in G.base.arrows]
        comp.update({(p(g), p(f)): p(h) for (g, f), h in G.base.comp.items()})
        ident.update({p(o): p(i) for o, i in G.base.ident.items()})
        ginv.update({p(f): p(g) for f, g in G.ginv.items()})
        order |= {(p(f), p(g)) for f, g in G.order}
    return OrderedGroupoid(FinCategory(tuple(objects), tuple(arrows), comp, ident), ginv, frozenset(order))


def discrete_order(C: FinCategory) -> frozenset[tuple[str, str]]:
    return frozenset((a, a) for a in C.arrow_ids)
