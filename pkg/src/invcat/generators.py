"""Standard structures built from finite sets, partial maps and groups.

Everything here is computed directly on graphs of partial maps, without
going through the constructions in :mod:`invcat.esn`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterable, Sequence

from .finstruct import Arrow, FinCategory, StructureError
from .restriction import InverseCert, RestrictionData, inverse_category_from_restriction

MAX_N = 5
SINGLE = "*"


@dataclass(frozen=True)
class PartialMap:
    """A partial function between finite sets of small integers.

    ``graph`` is a sorted tuple of ``(x, f(x))`` pairs.
    """

    source: frozenset[int]
    target: frozenset[int]
    graph: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "graph", tuple(sorted(self.graph)))
        xs = [x for x, _ in self.graph]
        if len(set(xs)) != len(xs):
            raise StructureError(f"not a function: {self.graph}")
        if not set(xs) <= self.source or not {y for _, y in self.graph} <= self.target:
            raise StructureError(f"graph {self.graph} leaves {sorted(self.source)} x {sorted(self.target)}")

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.graph)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(y for _, y in self.graph)

    @property
    def injective(self) -> bool:
        return len(self.image) == len(self.graph)

    def then(self, g: "PartialMap") -> "PartialMap":
        """``g`` after ``self``."""
        gd = dict(g.graph)
        return PartialMap(self.source, g.target, tuple((x, gd[y]) for x, y in self.graph if y in gd))

    def restriction(self) -> "PartialMap":
        return PartialMap(self.source, self.source, tuple((x, x) for x in self.domain))

    def inverse(self) -> "PartialMap":
        if not self.injective:
            raise StructureError("not injective")
        return PartialMap(self.target, self.source, tuple((y, x) for x, y in self.graph))

    def encode(self) -> str:
        return "[" + ",".join(f"{x}:{y}" for x, y in self.graph) + "]"


# Kept for readability where only bijections occur.
PartialBijection = PartialMap


def decode(token: str, source: Iterable[int], target: Iterable[int]) -> PartialMap:
    body = token[token.index("[") + 1 : token.rindex("]")]
    pairs = [tuple(map(int, p.split(":"))) for p in body.split(",") if p]
    return PartialMap(frozenset(source), frozenset(target), tuple(pairs))


def partial_bijections(source: Iterable[int], target: Iterable[int]) -> list[PartialMap]:
    s, t = sorted(source), sorted(target)
    out = []
    for k in range(min(len(s), len(t)) + 1):
        for dom in combinations(s, k):
            for img in permutations(t, k):
                out.append(PartialMap(frozenset(s), frozenset(t), tuple(zip(dom, img))))
    return out


def partial_functions(source: Iterable[int], target: Iterable[int]) -> list[PartialMap]:
    s, t = sorted(source), sorted(target)
    out = []
    for k in range(len(s) + 1):
        for dom in combinations(s, k):
            for img in product(t, repeat=k):
                out.append(PartialMap(frozenset(s), frozenset(t), tuple(zip(dom, img))))
    return out


def symmetric_inverse_size(n: int) -> int:
    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


def _category_of_maps(sets: Sequence[Iterable[int]], maps_between) -> tuple[RestrictionData, dict]:
    sets = [frozenset(s) for s in sets]
    if not sets:
        raise StructureError("need at least one set")
    single = len(sets) == 1
    names = [SINGLE] if single else [f"X{i}" for i in range(len(sets))]

    def aid(i: int, j: int, m: PartialMap) -> str:
        return m.encode() if single else f"{names[i]}>{names[j]}{m.encode()}"

    maps: dict[str, tuple[int, int, PartialMap]] = {}
    for i, j in product(range(len(sets)), repeat=2):
        for m in maps_between(sets[i], sets[j]):
            maps[aid(i, j, m)] = (i, j, m)
    lookup = {(i, j, m.graph): a for a, (i, j, m) in maps.items()}
    arrows = [Arrow(a, names[i], names[j]) for a, (i, j, _) in maps.items()]
    comp = {}
    for f, (i, j, mf) in maps.items():
        for g, (j2, k, mg) in maps.items():
            if j2 == j:
                comp[(g, f)] = lookup[(i, k, mf.then(mg).graph)]
    ident = {names[i]: lookup[(i, i, tuple((x, x) for x in sorted(s)))] for i, s in enumerate(sets)}
    rbar = {a: lookup[(i, i, m.restriction().graph)] for a, (i, _, m) in maps.items()}
    C = FinCategory(tuple(names), tuple(arrows), comp, ident)
    return RestrictionData(C, rbar), maps


def partial_bijection_category(sets: Sequence[Iterable[int]]) -> InverseCert:
    R, _ = _category_of_maps(sets, partial_bijections)
    return inverse_category_from_restriction(R)


def symmetric_inverse_monoid(n: int) -> InverseCert:
    if not 1 <= n <= MAX_N:
        raise StructureError(f"n must be in 1..{MAX_N}, got {n}")
    return partial_bijection_category([range(1, n + 1)])


def partial_function_category(sets: Sequence[Iterable[int]]) -> RestrictionData:
    R, _ = _category_of_maps(sets, partial_functions)
    return R


def pb(*pairs: tuple[int, int]) -> str:
    """Id of a partial bijection in a one-object ``I_n``: ``pb((1, 2))`` is ``[1:2]``."""
    return "[" + ",".join(f"{x}:{y}" for x, y in sorted(pairs)) + "]"


def ident_on(*points: int) -> str:
    return pb(*((p, p) for p in points))


def cyclic_group_category(n: int) -> InverseCert:
    """The cyclic group of order ``n`` as a one-object groupoid, all arrows total."""
    ids = [f"r{k}" for k in range(n)]
    comp = {(ids[a], ids[b]): ids[(a + b) % n] for a in range(n) for b in range(n)}
    C = FinCategory((SINGLE,), tuple(Arrow(i, SINGLE, SINGLE) for i in ids), comp, {SINGLE: ids[0]})
    return inverse_category_from_restriction(RestrictionData(C, {i: ids[0] for i in ids}))


def closure_subsemigroup(seed: Iterable[str], n: int):
    """Smallest subset of ``I_n`` containing ``seed`` closed under product and inverse."""
    from .esn import InverseSemigroupTable

    universe = {m.encode(): m for m in partial_bijections(range(1, n + 1), range(1, n + 1))}
    current = set(seed)
    if not current:
        raise StructureError("seed must be nonempty")
    unknown = current - universe.keys()
    if unknown:
        raise StructureError(f"not elements of I_{n}: {sorted(unknown)}")
    while True:
        new = {universe[s].inverse().encode() for s in current}
        new |= {universe[t].then(universe[s]).encode() for s in current for t in current}
        if new <= current:
            break
        current |= new
    elements = tuple(sorted(current))
    mul = {(s, t): universe[t].then(universe[s]).encode() for s in elements for t in elements}
    inv = {s: universe[s].inverse().encode() for s in elements}
    return InverseSemigroupTable(elements, mul, inv)


def group_table(n: int):
    """Cyclic group of order ``n`` as an inverse semigroup table."""
    from .esn import InverseSemigroupTable

    ids = [f"r{k}" for k in range(n)]
    mul = {(ids[a], ids[b]): ids[(a + b) % n] for a in range(n) for b in range(n)}
    return InverseSemigroupTable(tuple(ids), mul, {ids[a]: ids[-a % n] for a in range(n)})


def powerset_semilattice(n: int):
    """Subsets of ``{1..n}`` under intersection, as an inverse semigroup table."""
    from .esn import InverseSemigroupTable

    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    name = {s: "{" + ",".join(map(str, sorted(s))) + "}" for s in subsets}
    elements = tuple(sorted(name.values()))
    mul = {(name[a], name[b]): name[a & b] for a in subsets for b in subsets}
    return InverseSemigroupTable(elements, mul, {e: e for e in elements})
