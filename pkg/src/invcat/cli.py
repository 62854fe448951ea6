"""Command line interface: ``invcat generate|check|construct|roundtrip|info``.

Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
3 internal structural-bug report.
"""

from __future__ import annotations

import argparse
import sys

from . import generators as gen
from .esn import (
    InverseSemigroupTable,
    check_inverse_semigroup,
    check_oplax_functor,
    classical_g,
    classical_s,
    g_of_inverse_category,
    i_of_groupoid,
    roundtrip_category,
    roundtrip_groupoid,
)
from .fileformat import Document, ParseError, parse, serialize
from .finstruct import FinCategory, StructureError, ValidationReport, validate_category, validate_functor
from .ogroupoid import (
    OrderedGroupoid,
    canonical_partition,
    check_locally_inductive_functor,
    check_ordered_functor,
    check_ordered_groupoid,
    check_partition,
    classify,
)
from .restriction import (
    InverseCert,
    RestrictionData,
    certify_inverse_category,
    check_derived_identities,
    check_inverse_properties,
    check_restriction_axioms,
    idempotent_set,
    is_total,
)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_BUG = 0, 1, 2, 3


class Invalid(Exception):
    """Input failed validation; carries the report text."""


def _read(path: str | None) -> Document:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse(text)


# -- validation per kind -----------------------------------------------------


def check_document(doc: Document) -> list[ValidationReport]:
    v = doc.value
    reports: list[ValidationReport] = []
    if isinstance(v, FinCategory):
        reports.append(validate_category(v))
    elif isinstance(v, RestrictionData):
        reports += _check_restriction(v)
    elif isinstance(v, InverseCert):
        reports += _check_restriction(v.base)
        if all(r.ok for r in reports):
            cert = certify_inverse_category(v.base)
            if isinstance(cert, ValidationReport):
                reports.append(cert)
            else:
                match = ValidationReport("stored inverses")
                for f in v.category.arrow_ids:
                    if v.inv.get(f) != cert.inv[f]:
                        match.add("stored inverse differs", f, v.inv.get(f), cert.inv[f])
                reports.append(match)
                reports.append(check_inverse_properties(cert))
    elif isinstance(v, OrderedGroupoid):
        r = check_ordered_groupoid(v)
        reports.append(r)
        if r.ok and doc.partition is not None:
            reports.append(check_partition(v, doc.partition))
    elif isinstance(v, InverseSemigroupTable):
        reports.append(check_inverse_semigroup(v))
    elif doc.kind == "functor":
        reports += _check_functor(doc)
    return reports


def _check_restriction(R: RestrictionData) -> list[ValidationReport]:
    out = [validate_category(R.base)]
    if out[0].ok:
        out.append(check_restriction_axioms(R))
        if out[1].ok:
            out.append(check_derived_identities(R))
    return out


def _check_functor(doc: Document) -> list[ValidationReport]:
    reports = check_document(doc.source) + check_document(doc.target)
    if not all(r.ok for r in reports):
        return reports
    F, S, T = doc.value, doc.source.value, doc.target.value
    if doc.oplax:
        if not (isinstance(S, InverseCert) and isinstance(T, InverseCert)):
            r = ValidationReport("oplax functor")
            r.add("oplax functors need inverse-category endpoints")
            return reports + [r]
        return reports + [check_oplax_functor(F, S, T)]
    r = validate_functor(F)
    reports.append(r)
    if r.ok and isinstance(S, OrderedGroupoid) and isinstance(T, OrderedGroupoid):
        reports.append(check_ordered_functor(F, S, T))
        li = check_locally_inductive_functor(F, S, T)
        li.subject = "locally inductive functor (informational)"
        reports.append(ValidationReport(li.subject, notes=[str(li)]))
    return reports


def _require_valid(doc: Document) -> None:
    reports = check_document(doc)
    if not all(r.ok for r in reports):
        raise Invalid("\n".join(str(r) for r in reports))


# -- commands ----------------------------------------------------------------


def cmd_generate(args) -> str:
    fam, p = args.family, args.params
    if fam != "closure":
        if not p:
            raise ValueError(f"{fam} needs size parameters")
        nums = [int(x) for x in p]
    if fam == "symmetric-inverse":
        X = gen.symmetric_inverse_monoid(nums[0])
        if args.semigroup:
            from .esn import semigroup_of_category

            return serialize(semigroup_of_category(X))
        return serialize(X)
    if fam == "partial-bijection":
        return serialize(gen.partial_bijection_category([range(1, k + 1) for k in nums]))
    if fam == "partial-function":
        return serialize(gen.partial_function_category([range(1, k + 1) for k in nums]))
    if fam == "cyclic-group":
        if args.semigroup:
            return serialize(gen.group_table(nums[0]))
        return serialize(gen.cyclic_group_category(nums[0]))
    if fam == "semilattice":
        return serialize(gen.powerset_semilattice(nums[0]))
    if fam == "closure":
        n, seeds = int(p[0]), p[1:]
        return serialize(gen.closure_subsemigroup(seeds, n))
    raise ValueError(f"unknown family {fam!r}")


def cmd_check(args) -> int:
    doc = _read(args.file)
    reports = check_document(doc)
    for r in reports:
        print(r)
    if doc.kind == "ordered-groupoid" and reports[0].ok:
        print("classification:", " ".join(f"{k}={v}" for k, v in classify(doc.value).as_dict().items()))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_INVALID


def cmd_construct(args) -> str:
    doc = _read(args.file)
    _require_valid(doc)
    v, what = doc.value, args.what
    semi = args.semicategory or doc.semicategory
    if what in ("g", "cg"):
        if isinstance(v, InverseSemigroupTable):
            G = classical_g(v)
            P = canonical_partition(G)
            return serialize(G, P)
        if what == "g" and isinstance(v, InverseCert):
            GX = g_of_inverse_category(v, semicategory=semi)
            return serialize(GX.groupoid, GX.partition)
        raise Invalid(f"construct {what} needs an {'inverse or ' if what == 'g' else ''}semigroup file, got {doc.kind}")
    if not isinstance(v, OrderedGroupoid):
        raise Invalid(f"construct {what} needs an ordered-groupoid file, got {doc.kind}")
    flags = classify(v)
    if what == "i":
        if not flags.locally_inductive or not (flags.top_heavy or semi):
            raise Invalid(f"not a top-heavy locally inductive groupoid: {flags.as_dict()}")
        return serialize(i_of_groupoid(v, semicategory=semi))
    if what == "s":
        if not flags.inductive:
            raise Invalid(f"not an inductive groupoid: {flags.as_dict()}")
        return serialize(classical_s(v))
    raise ValueError(what)


def _same(a, b) -> bool:
    if isinstance(a, InverseCert) and isinstance(b, InverseCert):
        return a.category == b.category and dict(a.rbar) == dict(b.rbar) and dict(a.inv) == dict(b.inv)
    return a == b


def cmd_roundtrip(args) -> int:
    doc = _read(args.file)
    _require_valid(doc)
    original = None
    if args.against:
        with open(args.against, encoding="utf-8") as fh:
            original = parse(fh.read())
        _require_valid(original)
        if original.kind != doc.kind:
            raise ValueError(f"--against file is {original.kind}, input is {doc.kind}")
    subject = original or doc
    v = subject.value
    if isinstance(v, InverseCert):
        w = roundtrip_category(v, semicategory=subject.semicategory or None)
        target = i_of_groupoid(*_gx(v, subject.semicategory), semicategory=subject.semicategory)
    elif isinstance(v, OrderedGroupoid):
        flags = classify(v)
        semi = not flags.top_heavy
        w = roundtrip_groupoid(v, semicategory=semi)
        target = g_of_inverse_category(i_of_groupoid(v, semicategory=semi), semicategory=semi).groupoid
    elif isinstance(v, InverseSemigroupTable):
        back = classical_s(classical_g(v))
        ok = back == v
        print(f"classical round trip S -> G(S) -> S(G(S)): {'identical table' if ok else 'MISMATCH'}")
        if original is not None:
            ok = ok and _same(doc.value, back)
        return EXIT_OK if ok else EXIT_BUG
    else:
        raise Invalid(f"roundtrip does not apply to kind {subject.kind}")
    for k, ok in w.flags.items():
        print(f"  {k}: {'ok' if ok else 'FAIL'}")
    print(w.report)
    verified = w.verified
    if original is not None:
        agree = _same(doc.value, target)
        print(f"input equals round-trip image of --against: {agree}")
        verified = verified and agree
    return EXIT_OK if verified else EXIT_BUG


def _gx(X: InverseCert, semi: bool):
    GX = g_of_inverse_category(X, semicategory=semi)
    return GX.groupoid, GX.partition


def cmd_info(args) -> int:
    doc = _read(args.file)
    v = doc.value
    print(f"kind: {doc.kind}{' (semicategory)' if doc.semicategory else ''}")
    if isinstance(v, InverseSemigroupTable):
        print(f"elements: {len(v.elements)}")
        print(f"idempotents: {len(v.idempotents)}")
        print(f"identity: {v.identity}")
        return EXIT_OK
    if doc.kind == "functor":
        F = v
        print(f"source: {doc.source.kind}, {len(F.source.objects)} objects, {len(F.source.arrows)} arrows")
        print(f"target: {doc.target.kind}, {len(F.target.objects)} objects, {len(F.target.arrows)} arrows")
        return EXIT_OK
    C = v if isinstance(v, FinCategory) else v.base if isinstance(v, (RestrictionData, OrderedGroupoid)) else v.category
    print(f"objects: {len(C.objects)}")
    print(f"arrows: {len(C.arrows)}")
    if isinstance(v, (RestrictionData, InverseCert)):
        R = v if isinstance(v, RestrictionData) else v.base
        if check_restriction_axioms(R).ok:
            for o in C.objects:
                view = idempotent_set(R, o)
                print(f"E_{o}: {len(view.elements)} idempotents, top {view.top}")
            if C.ident is not None:
                print(f"total maps: {sum(is_total(R, f) for f in C.arrow_ids)}")
            print(f"inverse category: {isinstance(certify_inverse_category(R), InverseCert)}")
    if isinstance(v, OrderedGroupoid):
        print(f"order pairs: {len(v.order)}")
        flags = classify(v)
        print("classification:", " ".join(f"{k}={x}" for k, x in flags.as_dict().items()))
        if flags.locally_inductive:
            P = canonical_partition(v)
            for name, block, top in zip(P.names, P.blocks, P.tops):
                print(f"block {name}: {len(block)} objects, top {top}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="invcat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a standard structure to stdout")
    g.add_argument(
        "family",
        choices=["symmetric-inverse", "partial-bijection", "partial-function", "cyclic-group", "semilattice", "closure"],
    )
    g.add_argument("params", nargs="*", help="sizes; for closure: N SEED...")
    g.add_argument("--semigroup", action="store_true", help="emit a semigroup table instead of a category")

    c = sub.add_parser("check", help="validate a structure file")
    c.add_argument("file", nargs="?")

    k = sub.add_parser("construct", help="apply a construction, writing the result to stdout")
    k.add_argument("what", choices=["g", "i", "s", "cg"])
    k.add_argument("file", nargs="?")
    k.add_argument("--semicategory", action="store_true", help="ignore identities / tops")

    r = sub.add_parser("roundtrip", help="build and verify the round-trip isomorphism")
    r.add_argument("file", nargs="?")
    r.add_argument("--against", help="original structure the input was derived from")

    i = sub.add_parser("info", help="print counts and classification")
    i.add_argument("file", nargs="?")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "generate":
            try:
                text = cmd_generate(args)
            except StructureError as exc:
                raise ValueError(str(exc)) from exc
            sys.stdout.write(text)
            return EXIT_OK
        if args.command == "construct":
            sys.stdout.write(cmd_construct(args))
            return EXIT_OK
        return {"check": cmd_check, "roundtrip": cmd_roundtrip, "info": cmd_info}[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Invalid as exc:
        print(f"validation failed:\n{exc}", file=sys.stderr)
        return EXIT_INVALID
    except StructureError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
