"""Brute-force reference computations on raw graphs of partial maps.

Nothing here imports ``invcat``; partial maps are dicts and the ids follow
the ``[x:y,...]`` spelling used by the generators.
"""

from itertools import product


def enum_partial_maps(src, tgt, injective):
    src, tgt = sorted(src), sorted(tgt)
    out = []
    for images in product([None, *tgt], repeat=len(src)):
        m = {x: y for x, y in zip(src, images) if y is not None}
        if injective and len(set(m.values())) != len(m):
            continue
        out.append(m)
    return out


def name(m):
    return "[" + ",".join(f"{x}:{m[x]}" for x in sorted(m)) + "]"


def after(g, f):
    """g after f."""
    return {x: g[f[x]] for x in f if f[x] in g}


def inverse(m):
    return {y: x for x, y in m.items()}


def sym_inverse(n):
    return {name(m): m for m in enum_partial_maps(range(1, n + 1), range(1, n + 1), True)}


def le(f, g):
    """Natural order on partial bijections is inclusion of graphs."""
    return all(g.get(x) == y for x, y in f.items())


def table(maps):
    return {(g, f): name(after(maps[g], maps[f])) for g in maps for f in maps}


def lacking_restricted_inverse(maps):
    """Ids of maps m with no k such that k.m = id_dom(m) and m.k = id_dom(k)."""
    out = []
    for a, m in maps.items():
        ok = False
        for k in maps.values():
            if after(k, m) == {x: x for x in m} and after(m, k) == {x: x for x in k}:
                ok = True
        if not ok:
            out.append(a)
    return sorted(out)


def subsemigroup_closure(seed, maps):
    cur = set(seed)
    while True:
        new = {name(inverse(maps[s])) for s in cur} | {name(after(maps[s], maps[t])) for s in cur for t in cur}
        if new <= cur:
            return cur
        cur |= new
