"""Restriction structures, the natural order, and inverse categories."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .finstruct import (
    FinCategory,
    FunctorData,
    StructureError,
    ValidationReport,
)


@dataclass(frozen=True)
class RestrictionData:
    base: FinCategory
    rbar: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "rbar", dict(self.rbar))

    def comp(self, g: str, f: str) -> str | None:
        return self.base.comp.get((g, f))

    @cached_property
    def by_dom(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {o: [] for o in self.base.objects}
        for a in self.base.arrows:
            out[a.dom].append(a.id)
        return out

    @cached_property
    def restriction_idempotents(self) -> frozenset[str]:
        return frozenset(self.rbar.values())


@dataclass(frozen=True)
class InverseCert:
    """A restriction category together with its verified restricted inverses."""

    base: RestrictionData
    inv: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "inv", dict(self.inv))

    @property
    def category(self) -> FinCategory:
        return self.base.base

    @property
    def rbar(self) -> Mapping[str, str]:
        return self.base.rbar


def _check_rbar_types(R: RestrictionData, report: ValidationReport) -> bool:
    C = R.base
    for a in C.arrows:
        r = R.rbar.get(a.id)
        if r is None or r not in C.arrow:
            report.add("restriction not total", a.id)
        elif (C.dom(r), C.cod(r)) != (a.dom, a.dom):
            report.add("restriction has wrong type", a.id, r, detail="must be an endo-arrow on dom f")
    return report.ok


def check_restriction_axioms(R: RestrictionData) -> ValidationReport:
    report = ValidationReport("restriction axioms")
    if not _check_rbar_types(R, report):
        return report
    comp, rb = R.comp, R.rbar
    for f in R.base.arrow_ids:
        if comp(f, rb[f]) != f:
            report.add("R.1", f, detail="f.rbar(f) != f")
    for group in R.by_dom.values():
        for f in group:
            for g in group:
                if comp(rb[f], rb[g]) != comp(rb[g], rb[f]):
                    report.add("R.2", f, g, detail="restriction idempotents do not commute")
                if rb[comp(g, rb[f])] != comp(rb[g], rb[f]):
                    report.add("R.3", f, g, detail="rbar(g.rbar f) != rbar g.rbar f")
    for g, f in R.base.composable_pairs():
        if comp(rb[g], f) != comp(f, rb[comp(g, f)]):
            report.add("R.4", g, f, detail="rbar(g).f != f.rbar(gf)")
    return report


def is_monic(C: FinCategory, m: str) -> bool:
    """Exhaustive left-cancellation test over every pair of arrows into dom m."""
    target = C.dom(m)
    for src in C.objects:
        seen: dict[str, str] = {}
        for x in C.hom(src, target):
            mx = C.compose(m, x)
            if mx in seen:
                return False
            seen[mx] = x
    return True


def check_derived_identities(R: RestrictionData) -> ValidationReport:
    report = ValidationReport("derived identities")
    C, comp, rb = R.base, R.comp, R.rbar
    for f in C.arrow_ids:
        fb = rb[f]
        if comp(fb, fb) != fb:
            report.add("(i) idempotent", f)
        if rb[fb] != fb:
            report.add("(iv) rbar(rbar f) = rbar f", f)
        if C.ident is not None and is_monic(C, f) and fb != C.ident[C.dom(f)]:
            report.add("(vi) monic is total", f)
    for g, f in C.composable_pairs():
        gf = comp(g, f)
        if comp(rb[f], rb[gf]) != rb[gf]:
            report.add("(ii) rbar f.rbar(gf) = rbar(gf)", g, f)
        if rb[comp(rb[g], f)] != rb[gf]:
            report.add("(iii) rbar(rbar g.f) = rbar(gf)", g, f)
    for group in R.by_dom.values():
        for f in group:
            for g in group:
                gbfb = comp(rb[g], rb[f])
                if rb[gbfb] != gbfb:
                    report.add("(v) rbar(rbar g.rbar f) = rbar g.rbar f", g, f)
        # (vii): f.rbar g = f implies rbar f = rbar f.rbar g, g ranging over arrows out of dom f
        for f in group:
            for g in group:
                if comp(f, rb[g]) == f and rb[f] != comp(rb[f], rb[g]):
                    report.add("(vii)", f, g)
    return report


def leq(R: RestrictionData, f: str, g: str) -> bool:
    """Natural order: ``f <= g`` iff ``f == g . rbar(f)``; false when not parallel."""
    C = R.base
    if (C.dom(f), C.cod(f)) != (C.dom(g), C.cod(g)):
        return False
    return R.comp(g, R.rbar[f]) == f


def leq_reason(R: RestrictionData, f: str, g: str) -> str:
    C = R.base
    if (C.dom(f), C.cod(f)) != (C.dom(g), C.cod(g)):
        return "incomparable: not parallel"
    return "leq" if leq(R, f, g) else "not leq"


def natural_order(R: RestrictionData) -> frozenset[tuple[str, str]]:
    pairs = set()
    C = R.base
    for hom in C._homs.values():
        for f in hom:
            fb = R.rbar[f]
            for g in hom:
                if R.comp(g, fb) == f:
                    pairs.add((f, g))
    return frozenset(pairs)


def is_total(R: RestrictionData, f: str) -> bool:
    return R.rbar[f] == R.base.identity(R.base.dom(f))


def restricted_inverse_of(R: RestrictionData, f: str) -> str | None:
    C = R.base
    found = [
        g
        for g in C.hom(C.cod(f), C.dom(f))
        if R.comp(g, f) == R.rbar[f] and R.comp(f, g) == R.rbar[g]
    ]
    if len(found) > 1:
        raise StructureError(f"uniqueness violated: not a restriction category ({f} has inverses {found})")
    return found[0] if found else None


def certify_inverse_category(R: RestrictionData) -> InverseCert | ValidationReport:
    report = ValidationReport("inverse category")
    inv: dict[str, str] = {}
    for f in R.base.arrow_ids:
        g = restricted_inverse_of(R, f)
        if g is None:
            report.add("no restricted inverse", f)
        else:
            inv[f] = g
    if not report.ok:
        return report
    comp = R.comp
    for f, g in inv.items():
        if comp(f, comp(g, f)) != f:
            report.add("f.f°.f = f", f)
        if comp(g, comp(f, g)) != g:
            report.add("f°.f.f° = f°", f)
        if R.rbar[f] != comp(g, f):
            report.add("stored rbar differs from f°f", f)
    return report if not report.ok else InverseCert(R, inv)


def is_inverse_category(R: RestrictionData) -> bool:
    return isinstance(certify_inverse_category(R), InverseCert)


@dataclass(frozen=True)
class MeetSemilatticeView:
    obj: str
    elements: tuple[str, ...]
    meet: Mapping[tuple[str, str], str]
    top: str | None
    report: ValidationReport


def _check_semilattice(elements, meet, le, top, report: ValidationReport) -> None:
    for a in elements:
        if meet[(a, a)] != a:
            report.add("meet idempotent", a)
        for b in elements:
            m = meet[(a, b)]
            if m not in elements:
                report.add("meet not closed", a, b)
                continue
            if m != meet[(b, a)]:
                report.add("meet commutative", a, b)
            if not (le(m, a) and le(m, b)):
                report.add("meet is a lower bound", a, b)
            for d in elements:
                if le(d, a) and le(d, b) and not le(d, m):
                    report.add("meet is greatest", a, b, d)
                if meet.get((m, d)) != meet.get((a, meet[(b, d)])):
                    report.add("meet associative", a, b, d)
    if top is not None:
        for a in elements:
            if not le(a, top):
                report.add("top", a, top)


def idempotent_set(R: RestrictionData, obj: str) -> MeetSemilatticeView:
    C = R.base
    elements = tuple(sorted({R.rbar[f] for f in C.hom(obj, obj)}))
    meet = {(a, b): R.comp(a, b) for a in elements for b in elements}
    top = C.ident[obj] if C.ident is not None else None
    report = ValidationReport(f"E_{obj}")
    if top is not None and top not in elements:
        report.add("top missing", obj, top)
    _check_semilattice(elements, meet, lambda x, y: leq(R, x, y), top, report)
    return MeetSemilatticeView(obj, elements, meet, top, report)


def check_order_properties(R: RestrictionData) -> ValidationReport:
    """Partial-order laws, monotonicity of rbar, and compatibility with composition."""
    report = ValidationReport("natural order")
    C = R.base
    order = natural_order(R)
    down: dict[str, list[str]] = {f: [] for f in C.arrow_ids}
    for f, g in order:
        down[g].append(f)
    for f in C.arrow_ids:
        if (f, f) not in order:
            report.add("reflexive", f)
    for f, g in order:
        if f != g and (g, f) in order:
            report.add("antisymmetric", f, g)
        for h in C.arrow_ids:
            if (g, h) in order and (f, h) not in order:
                report.add("transitive", f, g, h)
        if (R.rbar[f], R.rbar[g]) not in order:
            report.add("f <= g implies rbar f <= rbar g", f, g)
    for A, B in C.composable_pairs():
        for a in down[A]:
            for b in down[B]:
                ab = R.comp(a, b)
                if (ab, R.comp(A, B)) not in order:
                    report.add("composition preserves order", a, A, b, B)
    return report


def check_total_maps(R: RestrictionData) -> ValidationReport:
    report = ValidationReport("total maps")
    if R.base.ident is None:
        report.notes.append("semicategory: totality undefined")
        return report
    total = {f for f in R.base.arrow_ids if is_total(R, f)}
    for o in R.base.objects:
        if R.base.ident[o] not in total:
            report.add("identity total", o)
    for g, f in R.base.composable_pairs():
        gf = R.comp(g, f)
        if g in total and f in total and gf not in total:
            report.add("totals closed under composition", g, f)
        if gf in total and f not in total:
            report.add("gf total implies f total", g, f)
    return report


def check_inverse_properties(X: InverseCert) -> ValidationReport:
    report = ValidationReport("restricted inverses")
    comp = X.base.comp
    for f, g in X.inv.items():
        if X.inv[g] != f:
            report.add("inv is an involution", f)
        if X.inv[X.rbar[f]] != X.rbar[f]:
            report.add("rbar f is its own inverse", f)
    for g, f in X.category.composable_pairs():
        if X.inv[comp(g, f)] != comp(X.inv[f], X.inv[g]):
            report.add("(gf)° = f°g°", g, f)
    return report


def check_restriction_functor(F: FunctorData, R: RestrictionData, R2: RestrictionData) -> ValidationReport:
    report = ValidationReport("restriction functor")
    for f in F.source.arrow_ids:
        if F.arr_map[R.rbar[f]] != R2.rbar[F.arr_map[f]]:
            report.add("F(rbar f) = rbar(F f)", f)
    return report


def inverse_category_from_restriction(R: RestrictionData) -> InverseCert:
    cert = certify_inverse_category(R)
    if not isinstance(cert, InverseCert):
        raise StructureError(str(cert))
    return cert
