"""Finite categories and functors given by explicit tables.

Composition is written ``comp[(g, f)]`` for "f first, then g", the same
order as juxtaposition ``gf``.  Arrows are identified by their ids only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Mapping

import numpy as np

MAX_WITNESSES = 25


class StructureError(ValueError):
    """Input data is not the kind of structure an operation requires."""


@dataclass(frozen=True)
class Violation:
    law: str
    witnesses: tuple
    detail: str = ""

    def __str__(self) -> str:
        wit = ", ".join(map(str, self.witnesses))
        text = f"{self.law}: ({wit})"
        return f"{text} {self.detail}" if self.detail else text


@dataclass
class ValidationReport:
    """Collected law violations; an empty report means everything held.

    ``notes`` carries informational lines that do not count as failures.
    """

    subject: str = ""
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    suppressed: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.suppressed

    def add(self, law: str, *witnesses, detail: str = "") -> None:
        if sum(v.law == law for v in self.violations) >= MAX_WITNESSES:
            self.suppressed[law] = self.suppressed.get(law, 0) + 1
            return
        self.violations.append(Violation(law, tuple(witnesses), detail))

    def extend(self, other: "ValidationReport") -> "ValidationReport":
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        for law, n in other.suppressed.items():
            self.suppressed[law] = self.suppressed.get(law, 0) + n
        return self

    def laws(self) -> set[str]:
        return {v.law for v in self.violations} | set(self.suppressed)

    def __str__(self) -> str:
        head = self.subject or "report"
        if self.ok:
            lines = [f"{head}: OK"]
        else:
            lines = [f"{head}: {len(self.violations) + sum(self.suppressed.values())} violation(s)"]
            lines += [f"  {v}" for v in self.violations]
            lines += [f"  {law}: {n} more not shown" for law, n in sorted(self.suppressed.items())]
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    dom: str
    cod: str


@dataclass(frozen=True)
class FinCategory:
    """A finite category (or semicategory when ``ident`` is None)."""

    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    comp: Mapping[tuple[str, str], str]
    ident: Mapping[str, str] | None = None

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(sorted(self.objects)))
        object.__setattr__(self, "arrows", tuple(sorted(self.arrows)))
        object.__setattr__(self, "comp", dict(self.comp))
        if self.ident is not None:
            object.__setattr__(self, "ident", dict(self.ident))

    @property
    def is_semicategory(self) -> bool:
        return self.ident is None

    @cached_property
    def arrow(self) -> dict[str, Arrow]:
        return {a.id: a for a in self.arrows}

    @cached_property
    def arrow_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arrows)

    def dom(self, f: str) -> str:
        return self.arrow[f].dom

    def cod(self, f: str) -> str:
        return self.arrow[f].cod

    def compose(self, g: str, f: str) -> str | None:
        return self.comp.get((g, f))

    def composable(self, g: str, f: str) -> bool:
        return self.arrow[f].cod == self.arrow[g].dom

    def identity(self, obj: str) -> str:
        if self.ident is None:
            raise StructureError("semicategory has no identities")
        return self.ident[obj]

    @cached_property
    def _homs(self) -> dict[tuple[str, str], list[str]]:
        homs: dict[tuple[str, str], list[str]] = {}
        for a in self.arrows:
            homs.setdefault((a.dom, a.cod), []).append(a.id)
        return homs

    def hom(self, a: str, b: str) -> list[str]:
        return list(self._homs.get((a, b), ()))

    def composable_pairs(self) -> Iterator[tuple[str, str]]:
        """Yield ``(g, f)`` with ``cod f == dom g`` in sorted order."""
        by_dom: dict[str, list[str]] = {}
        for a in self.arrows:
            by_dom.setdefault(a.dom, []).append(a.id)
        for f in self.arrows:
            for g in by_dom.get(f.cod, ()):
                yield g, f.id

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.arrow_ids)}

    @cached_property
    def table(self) -> np.ndarray:
        """Integer composition table; ``n`` marks an undefined composite.

        Row ``n`` and column ``n`` are padding so that undefined values
        propagate through nested lookups.
        """
        n = len(self.arrows)
        t = np.full((n + 1, n + 1), n, dtype=np.int32)
        idx = self.index
        for (g, f), h in self.comp.items():
            if g in idx and f in idx and h in idx:
                t[idx[g], idx[f]] = idx[h]
        return t


def hom_set(C: FinCategory, a: str, b: str) -> list[str]:
    for obj in (a, b):
        if obj not in C.objects:
            raise StructureError(f"unknown object {obj!r}")
    return C.hom(a, b)


def _check_structure(C: FinCategory, report: ValidationReport) -> bool:
    objs = set(C.objects)
    if len(objs) != len(C.objects):
        report.add("duplicate object", *sorted(C.objects))
    ids = [a.id for a in C.arrows]
    if len(set(ids)) != len(ids):
        report.add("duplicate arrow", *sorted({i for i in ids if ids.count(i) > 1}))
    for a in C.arrows:
        if a.dom not in objs or a.cod not in objs:
            report.add("unknown endpoint", a.id, a.dom, a.cod)
    arrows = C.arrow
    for (g, f), h in sorted(C.comp.items()):
        if g not in arrows or f not in arrows or h not in arrows:
            report.add("unknown arrow in composition", g, f, h)
            continue
        if arrows[f].cod != arrows[g].dom:
            report.add("composite of non-composable pair", g, f, h)
        elif (arrows[h].dom, arrows[h].cod) != (arrows[f].dom, arrows[g].cod):
            report.add("composite has wrong type", g, f, h)
    for g, f in C.composable_pairs():
        if (g, f) not in C.comp:
            report.add("composition not total", g, f)
    if C.ident is not None:
        for obj in C.objects:
            i = C.ident.get(obj)
            if i is None or i not in arrows:
                report.add("missing identity", obj)
            elif (arrows[i].dom, arrows[i].cod) != (obj, obj):
                report.add("identity has wrong type", obj, i)
    return report.ok


def _check_associativity(C: FinCategory, report: ValidationReport, chunk: int = 64) -> None:
    n = len(C.arrows)
    if n == 0:
        return
    t = C.table
    ids = C.arrow_ids
    core = t[:n, :n]
    for start in range(0, n, chunk):
        h = np.arange(start, min(n, start + chunk))
        hg = t[h][:, :n]  # (h, g)
        # left[h, g, f] = h(gf); right[h, g, f] = (hg)f
        left = t[h[:, None, None], core[None, :, :]]
        right = t[hg[:, :, None], np.arange(n)[None, None, :]]
        defined = (hg[:, :, None] < n) & (core[None, :, :] < n)
        bad = defined & ((left != right) | (left >= n))
        for hi, gi, fi in np.argwhere(bad):
            report.add("associativity", ids[h[hi]], ids[gi], ids[fi])


def _check_identities(C: FinCategory, report: ValidationReport) -> None:
    if C.ident is None:
        return
    for a in C.arrows:
        i_dom, i_cod = C.ident[a.dom], C.ident[a.cod]
        if C.compose(a.id, i_dom) != a.id:
            report.add("identity law", a.id, i_dom, detail="f.1 != f")
        if C.compose(i_cod, a.id) != a.id:
            report.add("identity law", i_cod, a.id, detail="1.f != f")


def validate_category(C: FinCategory) -> ValidationReport:
    report = ValidationReport("category")
    if _check_structure(C, report):
        _check_associativity(C, report)
        _check_identities(C, report)
    return report


@dataclass(frozen=True)
class FunctorData:
    source: FinCategory
    target: FinCategory
    obj_map: Mapping[str, str]
    arr_map: Mapping[str, str]

    def __post_init__(self):
        object.__setattr__(self, "obj_map", dict(self.obj_map))
        object.__setattr__(self, "arr_map", dict(self.arr_map))

    def __call__(self, f: str) -> str:
        return self.arr_map[f]


def identity_functor(C: FinCategory) -> FunctorData:
    return FunctorData(C, C, {o: o for o in C.objects}, {a: a for a in C.arrow_ids})


def compose_functors(G: FunctorData, F: FunctorData) -> FunctorData:
    """``G`` after ``F``."""
    if F.target != G.source:
        raise StructureError("functors do not compose: target of F is not source of G")
    return FunctorData(
        F.source,
        G.target,
        {o: G.obj_map[F.obj_map[o]] for o in F.source.objects},
        {a: G.arr_map[F.arr_map[a]] for a in F.source.arrow_ids},
    )


def validate_functor(F: FunctorData) -> ValidationReport:
    report = ValidationReport("functor")
    S, T = F.source, F.target
    for o in S.objects:
        if F.obj_map.get(o) not in T.objects:
            report.add("object map not total", o)
    for a in S.arrows:
        img = F.arr_map.get(a.id)
        if img not in T.arrow:
            report.add("arrow map not total", a.id)
            continue
        want = (F.obj_map.get(a.dom), F.obj_map.get(a.cod))
        if (T.dom(img), T.cod(img)) != want:
            report.add("arrow map type", a.id, img)
    if not report.ok:
        return report
    if S.ident is not None:
        if T.ident is None:
            report.add("identities", detail="target has no identities")
        else:
            for o in S.objects:
                if F.arr_map[S.ident[o]] != T.ident[F.obj_map[o]]:
                    report.add("identities", o, F.arr_map[S.ident[o]])
    for g, f in S.composable_pairs():
        if F.arr_map[S.comp[(g, f)]] != T.compose(F.arr_map[g], F.arr_map[f]):
            report.add("composition", g, f)
    return report


def enumerate_functors(S: FinCategory, T: FinCategory, max_arrows: int = 10) -> Iterator[FunctorData]:
    """Every functor ``S -> T``, by backtracking over arrow images.

    Exponential; restricted to sources with at most ``max_arrows`` arrows.
    """
    if len(S.arrows) > max_arrows:
        raise StructureError(f"source has {len(S.arrows)} arrows; enumeration capped at {max_arrows}")
    arrows = list(S.arrow_ids)
    pairs = list(S.composable_pairs())
    for objs in product(T.objects, repeat=len(S.objects)):
        omap = dict(zip(S.objects, objs))
        choices = []
        for a in arrows:
            cand = T.hom(omap[S.dom(a)], omap[S.cod(a)])
            if S.ident is not None and a in S.ident.values():
                o = S.dom(a)
                if S.ident[o] == a:
                    cand = [T.ident[omap[o]]] if T.ident is not None else []
            choices.append(cand)
        position = {a: i for i, a in enumerate(arrows)}
        # each composable pair is checked once all three arrows are assigned
        checks: list[list[tuple[str, str, str]]] = [[] for _ in arrows]
        for g, f in pairs:
            h = S.comp[(g, f)]
            checks[max(position[g], position[f], position[h])].append((g, f, h))
        amap: dict[str, str] = {}

        def extend(i: int) -> Iterator[dict[str, str]]:
            if i == len(arrows):
                yield dict(amap)
                return
            for c in choices[i]:
                amap[arrows[i]] = c
                if all(T.compose(amap[g], amap[f]) == amap[h] for g, f, h in checks[i]):
                    yield from extend(i + 1)
            amap.pop(arrows[i], None)

        for m in extend(0):
            yield FunctorData(S, T, omap, m)


def discrete_category(objects: Iterable[str]) -> FinCategory:
    objs = sorted(objects)
    ids = {o: f"1_{o}" for o in objs}
    return FinCategory(
        tuple(objs),
        tuple(Arrow(ids[o], o, o) for o in objs),
        {(ids[o], ids[o]): ids[o] for o in objs},
        ids,
    )


def strip_identities(C: FinCategory) -> FinCategory:
    """Same arrows and composition, with the identity assignment forgotten."""
    return FinCategory(C.objects, C.arrows, C.comp, None)
