"""Line-oriented text format for structures.

One record per line, ``#`` starts a comment, tokens are separated by
whitespace.  The first record is ``kind <tag>``.  See ``docs/format.md``
for the grammar and an example of each kind.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .esn import InverseSemigroupTable
from .finstruct import Arrow, FinCategory, FunctorData
from .ogroupoid import OrderedGroupoid, SemilatticePartition
from .restriction import InverseCert, RestrictionData, restricted_inverse_of

KINDS = ("category", "restriction", "inverse", "ordered-groupoid", "semigroup", "functor")

# record -> (arity, kinds allowing it); arity None means "at least one"
RECORDS: dict[str, tuple[int | None, tuple[str, ...]]] = {
    "semicategory": (0, ("category", "restriction", "inverse")),
    "oplax": (0, ("functor",)),
    "object": (1, ("category", "restriction", "inverse", "ordered-groupoid")),
    "arrow": (3, ("category", "restriction", "inverse", "ordered-groupoid")),
    "comp": (3, ("category", "restriction", "inverse", "ordered-groupoid")),
    "ident": (2, ("category", "restriction", "inverse", "ordered-groupoid")),
    "rbar": (2, ("restriction", "inverse")),
    "inv": (2, ("inverse", "ordered-groupoid", "semigroup")),
    "order": (2, ("ordered-groupoid",)),
    "block": (None, ("ordered-groupoid",)),
    "top": (2, ("ordered-groupoid",)),
    "element": (1, ("semigroup",)),
    "mul": (3, ("semigroup",)),
    "objmap": (2, ("functor",)),
    "arrmap": (2, ("functor",)),
    "begin": (1, ("functor",)),
}

MANDATORY = {
    "category": ("object", "arrow", "comp"),
    "restriction": ("object", "arrow", "comp", "rbar"),
    "inverse": ("object", "arrow", "comp", "rbar"),
    "ordered-groupoid": ("object", "arrow", "comp", "ident", "inv"),
    "semigroup": ("element", "mul", "inv"),
    "functor": ("begin",),
}


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class Document:
    """A parsed file: the typed structure plus what the file said about it."""

    kind: str
    value: Any
    semicategory: bool = False
    partition: SemilatticePartition | None = None
    oplax: bool = False
    source: "Document | None" = None
    target: "Document | None" = None
    inv_given: bool = field(default=False, repr=False)


def _tokens(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].split()
        if line:
            out.append((n, line))
    return out


def parse(text: str) -> Document:
    lines = _tokens(text)
    doc, rest = _parse_lines(lines, 0)
    if rest != len(lines):
        raise ParseError(lines[rest][0], "unexpected record after end of document")
    return doc


def _parse_lines(lines: list[tuple[int, list[str]]], pos: int, nested: bool = False) -> tuple[Document, int]:
    if pos >= len(lines):
        raise ParseError(lines[-1][0] if lines else 0, "missing 'kind' record")
    n, head = lines[pos]
    if head[0] != "kind" or len(head) != 2 or head[1] not in KINDS:
        raise ParseError(n, f"expected 'kind <{'|'.join(KINDS)}>'")
    kind = head[1]
    pos += 1
    seen: set[str] = set()
    objects: list[str] = []
    arrows: dict[str, Arrow] = {}
    elements: list[str] = []
    comp: dict[tuple[str, str], str] = {}
    mul: dict[tuple[str, str], str] = {}
    ident: dict[str, str] = {}
    rbar: dict[str, str] = {}
    inv: dict[str, str] = {}
    order: set[tuple[str, str]] = set()
    blocks: dict[str, list[str]] = {}
    tops: dict[str, str] = {}
    objmap: dict[str, str] = {}
    arrmap: dict[str, str] = {}
    subdocs: dict[str, Document] = {}
    flags: set[str] = set()

    def need(line: int, ident_: str, pool, what: str) -> None:
        if ident_ not in pool:
            raise ParseError(line, f"undeclared {what} {ident_!r}")

    def once(line: int, table: dict, key, what: str) -> None:
        if key in table:
            raise ParseError(line, f"duplicate {what} {key!r}")

    while pos < len(lines):
        n, rec = lines[pos]
        tag, args = rec[0], rec[1:]
        if tag == "end":
            if not nested:
                raise ParseError(n, "'end' without 'begin'")
            break
        if tag not in RECORDS:
            raise ParseError(n, f"unknown record {tag!r}")
        arity, allowed = RECORDS[tag]
        if kind not in allowed:
            raise ParseError(n, f"record {tag!r} not allowed in kind {kind!r}")
        if (arity is None and len(args) < 1) or (arity is not None and len(args) != arity):
            raise ParseError(n, f"record {tag!r} takes {arity if arity is not None else 'one or more'} argument(s)")
        seen.add(tag)
        pos += 1
        if tag in ("semicategory", "oplax"):
            flags.add(tag)
        elif tag == "object":
            if args[0] in objects:
                raise ParseError(n, f"duplicate object {args[0]!r}")
            objects.append(args[0])
        elif tag == "arrow":
            a, d, c = args
            once(n, arrows, a, "arrow")
            need(n, d, objects, "object")
            need(n, c, objects, "object")
            arrows[a] = Arrow(a, d, c)
        elif tag == "comp":
            g, f, h = args
            for x in args:
                need(n, x, arrows, "arrow")
            once(n, comp, (g, f), "composite")
            comp[(g, f)] = h
        elif tag == "ident":
            need(n, args[0], objects, "object")
            need(n, args[1], arrows, "arrow")
            once(n, ident, args[0], "identity for")
            ident[args[0]] = args[1]
        elif tag in ("rbar", "inv"):
            pool = elements if kind == "semigroup" else arrows
            for x in args:
                need(n, x, pool, "element" if kind == "semigroup" else "arrow")
            table = rbar if tag == "rbar" else inv
            once(n, table, args[0], tag)
            table[args[0]] = args[1]
        elif tag == "order":
            for x in args:
                need(n, x, arrows, "arrow")
            order.add((args[0], args[1]))
        elif tag == "block":
            once(n, blocks, args[0], "block")
            for x in args[1:]:
                need(n, x, objects, "object")
            blocks[args[0]] = args[1:]
        elif tag == "top":
            need(n, args[0], blocks, "block")
            need(n, args[1], objects, "object")
            once(n, tops, args[0], "top of")
            tops[args[0]] = args[1]
        elif tag == "element":
            if args[0] in elements:
                raise ParseError(n, f"duplicate element {args[0]!r}")
            elements.append(args[0])
        elif tag == "mul":
            for x in args:
                need(n, x, elements, "element")
            once(n, mul, (args[0], args[1]), "product")
            mul[(args[0], args[1])] = args[2]
        elif tag == "begin":
            which = args[0]
            if which not in ("source", "target"):
                raise ParseError(n, "expected 'begin source' or 'begin target'")
            once(n, subdocs, which, "section")
            sub, pos = _parse_lines(lines, pos, nested=True)
            if sub.kind == "functor":
                raise ParseError(n, "functor sections cannot nest")
            if pos >= len(lines):
                raise ParseError(lines[-1][0], f"missing 'end' for 'begin {which}'")
            pos += 1
            subdocs[which] = sub
        elif tag in ("objmap", "arrmap"):
            which = "objects" if tag == "objmap" else "arrows"
            if "source" not in subdocs or "target" not in subdocs:
                raise ParseError(n, f"{tag} before source and target sections")
            src, tgt = _cat_of(subdocs["source"]), _cat_of(subdocs["target"])
            if tag == "objmap":
                need(n, args[0], src.objects, "source object")
                need(n, args[1], tgt.objects, "target object")
                once(n, objmap, args[0], "objmap for")
                objmap[args[0]] = args[1]
            else:
                need(n, args[0], src.arrow, "source arrow")
                need(n, args[1], tgt.arrow, "target arrow")
                once(n, arrmap, args[0], "arrmap for")
                arrmap[args[0]] = args[1]

    last = lines[pos - 1][0] if pos else 0
    for tag in MANDATORY[kind]:
        if tag not in seen:
            raise ParseError(last, f"kind {kind!r} requires {tag!r} records")
    semicategory = "semicategory" in flags
    if kind in ("category", "restriction", "inverse") and not semicategory and "ident" not in seen:
        raise ParseError(last, f"kind {kind!r} requires 'ident' records (or 'semicategory')")

    if kind == "semigroup":
        return Document(kind, InverseSemigroupTable(tuple(elements), mul, inv), inv_given=True), pos
    if kind == "functor":
        for which in ("source", "target"):
            if which not in subdocs:
                raise ParseError(last, f"functor requires a {which} section")
        src, tgt = subdocs["source"], subdocs["target"]
        F = FunctorData(_cat_of(src), _cat_of(tgt), objmap, arrmap)
        return Document(kind, F, oplax="oplax" in flags, source=src, target=tgt), pos

    C = FinCategory(tuple(objects), tuple(arrows.values()), comp, None if semicategory else ident)
    if kind == "category":
        return Document(kind, C, semicategory), pos
    if kind == "restriction":
        return Document(kind, RestrictionData(C, rbar), semicategory), pos
    if kind == "inverse":
        R = RestrictionData(C, rbar)
        given = bool(inv)
        if not given:
            inv = _search_inverses(R)
        return Document(kind, InverseCert(R, inv), semicategory, inv_given=given), pos
    partition = None
    if blocks:
        names = tuple(sorted(blocks))
        partition = SemilatticePartition(
            tuple(tuple(blocks[b]) for b in names), {}, tuple(tops.get(b) for b in names), names
        )
    return Document(kind, OrderedGroupoid(C, inv, frozenset(order)), partition=partition), pos


def _search_inverses(R: RestrictionData) -> dict[str, str]:
    out = {}
    for f in R.base.arrow_ids:
        try:
            g = restricted_inverse_of(R, f)
        except ValueError:
            g = None
        if g is not None:
            out[f] = g
    return out


def _cat_of(doc: Document) -> FinCategory:
    v = doc.value
    if isinstance(v, FinCategory):
        return v
    if isinstance(v, RestrictionData):
        return v.base
    if isinstance(v, InverseCert):
        return v.category
    if isinstance(v, OrderedGroupoid):
        return v.base
    raise ParseError(0, f"kind {doc.kind!r} cannot be a functor endpoint")


def _category_lines(C: FinCategory) -> list[str]:
    out = []
    if C.ident is None:
        out.append("semicategory")
    out += [f"object {o}" for o in C.objects]
    out += [f"arrow {a.id} {a.dom} {a.cod}" for a in C.arrows]
    out += [f"comp {g} {f} {h}" for (g, f), h in sorted(C.comp.items())]
    if C.ident is not None:
        out += [f"ident {o} {i}" for o, i in sorted(C.ident.items())]
    return out


def _pairs(tag: str, mapping) -> list[str]:
    return [f"{tag} {a} {b}" for a, b in sorted(mapping.items())]


def serialize(value: Any, partition: SemilatticePartition | None = None, oplax: bool = False) -> str:
    """Text for a structure; records are emitted sorted by id."""
    if isinstance(value, Document):
        return serialize(value.value, value.partition, value.oplax)
    lines = _serialize_lines(value, partition, oplax)
    return "\n".join(lines) + "\n"


def _serialize_lines(value: Any, partition: SemilatticePartition | None, oplax: bool) -> list[str]:
    if isinstance(value, FinCategory):
        return ["kind category"] + _category_lines(value)
    if isinstance(value, RestrictionData):
        return ["kind restriction"] + _category_lines(value.base) + _pairs("rbar", value.rbar)
    if isinstance(value, InverseCert):
        return (
            ["kind inverse"]
            + _category_lines(value.category)
            + _pairs("rbar", value.rbar)
            + _pairs("inv", value.inv)
        )
    if isinstance(value, OrderedGroupoid):
        out = ["kind ordered-groupoid"] + _category_lines(value.base) + _pairs("inv", value.ginv)
        out += [f"order {f} {g}" for f, g in sorted(value.order)]
        if partition is not None:
            for name, block, top in sorted(zip(partition.names, partition.blocks, partition.tops)):
                out.append(f"block {name} {' '.join(sorted(block))}")
                if top is not None:
                    out.append(f"top {name} {top}")
        return out
    if isinstance(value, InverseSemigroupTable):
        out = ["kind semigroup"] + [f"element {s}" for s in value.elements]
        out += [f"mul {s} {t} {st}" for (s, t), st in sorted(value.mul.items())]
        return out + _pairs("inv", value.inv)
    if isinstance(value, FunctorData):
        raise TypeError("serialize functors with serialize_functor(F, source, target)")
    raise TypeError(f"cannot serialize {type(value).__name__}")


def serialize_functor(F: FunctorData, source: Any, target: Any, oplax: bool = False) -> str:
    """``source``/``target`` are the typed structures whose categories ``F`` maps between."""
    lines = ["kind functor"]
    if oplax:
        lines.append("oplax")
    for which, v in (("source", source), ("target", target)):
        lines.append(f"begin {which}")
        lines += _serialize_lines(v, None, False)
        lines.append("end")
    lines += _pairs("objmap", F.obj_map) + _pairs("arrmap", F.arr_map)
    return "\n".join(lines) + "\n"


def load(path: str) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
