"""Command-line front end.

Subcommands: gr info, classes, count, exists, construct, enumerate, table,
verify.  Output is deterministic: identical invocations produce identical
bytes (verify only adds wall-clock times under --timings).  JSON output
always carries the three top-level keys "parameters", "result", "breakdown".
Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from functools import reduce

from .counting import (abelian_count, cyclic_count_n, cyclic_count_p2,
                       euclidean_abelian_count, euclidean_cyclic_count_n,
                       euclidean_cyclic_count_p2, euclidean_semisimple_count,
                       exists_self_dual, hermitian_abelian_count,
                       hermitian_cyclic_count_n, hermitian_cyclic_count_p2,
                       hermitian_semisimple_count, is_principal_ideal_group_ring)
from .cyclotomic import partition
from .errors import DomainError
from .galois import construct_ring, element_text, modulus_text, ring_name
from .group_ring import GroupRing
from .group_ring import element_text as gr_element_text
from .groups import (AbelianGroup, element_text as group_element_text,
                     format_group, parse_group, sylow_decompose)
from .ideals import (ExhaustiveGroupRing, construct_self_dual,
                     enumerate_semisimple_selfdual, exhaustive_bound)
from .numth import prime_power_split


def _emit_json(parameters: dict, result, breakdown=()) -> None:
    doc = {"parameters": parameters, "result": result,
           "breakdown": list(breakdown)}
    print(json.dumps(doc, indent=2))


def _split_group(p: int, text: str):
    group = parse_group(text)
    dec = sylow_decompose(group, p)
    return group, dec.coprime_part, dec.p_part


# -- gr info ---------------------------------------------------------------------

def _cmd_gr_info(args) -> int:
    spec = construct_ring(args.p, args.r, args.s)
    fields = [("ring", ring_name(spec)),
              ("characteristic", str(spec.char)),
              ("cardinality", str(spec.size)),
              ("residue-field", str(spec.residue_size)),
              ("modulus", modulus_text(spec)),
              ("teichmuller-generator", element_text(spec.xi))]
    if args.json:
        _emit_json({"p": args.p, "r": args.r, "s": args.s},
                   dict(fields))
    else:
        for k, v in fields:
            print(f"{k}: {v}")
    return 0


# -- classes ---------------------------------------------------------------------

def _cmd_classes(args) -> int:
    q = args.q
    p, s = prime_power_split(q)
    group = parse_group(args.group)
    parts = partition(group, q)
    rows = []
    for c in parts.classes:
        row = {"representative": group_element_text(c.rep),
               "elements": [group_element_text(g) for g in c.elements],
               "cardinality": c.cardinality,
               "euclidean_type": c.euclidean_type}
        if s % 2 == 0:
            row["hermitian_type"] = c.hermitian_type
        partner = c.euclidean_partner
        if s % 2 == 0 and c.hermitian_type == "III'":
            partner = c.hermitian_partner
        row["partner"] = group_element_text(partner) if partner else "-"
        rows.append(row)
    if args.json:
        _emit_json({"group": format_group(group), "q": q},
                   {"classes": len(rows)}, rows)
    else:
        for row in rows:
            cells = [row["representative"],
                     ",".join(row["elements"]),
                     str(row["cardinality"]),
                     row["euclidean_type"]]
            if "hermitian_type" in row:
                cells.append(row["hermitian_type"])
            cells.append(row["partner"])
            print(" ".join(cells))
    return 0


# -- count -----------------------------------------------------------------------

def _count_report(p, r, s, coprime, p_part, dual, provider):
    if dual == "none":
        return abelian_count(p, r, s, coprime, p_part, provider)
    if dual == "euclidean":
        return euclidean_abelian_count(p, r, s, coprime, p_part, provider)
    return hermitian_abelian_count(p, r, s, coprime, p_part, provider)


def _breakdown_rows(report):
    return [{"divisor": f.divisor, "element_count": f.element_count,
             "orbit_size": f.orbit_size, "slot_type": f.slot_type,
             "base_kind": f.base_kind, "base_degree": f.base_degree,
             "exponent": f.exponent, "base_value": f.base_value,
             "provider": f.provider, "factor": f.factor}
            for f in report.factors]


def _cmd_count(args) -> int:
    group, coprime, p_part = _split_group(args.p, args.group)
    report = _count_report(args.p, args.r, args.s, coprime, p_part,
                           args.dual, args.provider)
    if args.json:
        _emit_json({"p": args.p, "r": args.r, "s": args.s,
                    "group": format_group(group), "dual": args.dual,
                    "provider": args.provider},
                   {"count": report.count, "provider": report.provider},
                   _breakdown_rows(report))
    else:
        print(report.count)
    return 0


# -- exists ----------------------------------------------------------------------

def _cmd_exists(args) -> int:
    group = parse_group(args.group)
    answer = exists_self_dual(args.p, args.r, group, args.dual, args.s)
    if args.json:
        _emit_json({"p": args.p, "r": args.r, "s": args.s,
                    "group": format_group(group), "dual": args.dual},
                   {"exists": answer,
                    "principal_ideal_ring": is_principal_ideal_group_ring(
                        args.p, args.r, group)})
    else:
        print("true" if answer else "false")
    return 0


# -- construct ---------------------------------------------------------------------

def _cmd_construct(args) -> int:
    group = parse_group(args.group)
    made = construct_self_dual(args.p, args.r, args.s, group, args.dual)
    texts = [gr_element_text(g) for g in made.generators]
    if args.json:
        result = {"ring": ring_name(construct_ring(args.p, args.r, args.s)),
                  "group": format_group(group),
                  "generators": texts,
                  "ideal_size": made.ideal.size if made.ideal else None}
        _emit_json({"p": args.p, "r": args.r, "s": args.s,
                    "group": format_group(group), "dual": args.dual},
                   result)
    else:
        for t in texts:
            print(t)
    return 0


# -- enumerate ---------------------------------------------------------------------

def _cmd_enumerate(args) -> int:
    group = parse_group(args.group)
    fam = enumerate_semisimple_selfdual(args.p, args.r, args.s, group, args.dual)
    reps = [[gr_element_text(g) for g in gens] for gens in fam.representatives]
    if args.json:
        _emit_json({"p": args.p, "r": args.r, "s": args.s,
                    "group": format_group(group), "dual": args.dual},
                   {"count": fam.count,
                    "ring": ring_name(construct_ring(args.p, args.r, args.s)),
                    "group": format_group(group)},
                   [{"generators": gens} for gens in reps])
    else:
        print(f"count {fam.count}")
        for gens in reps:
            print(" | ".join(gens))
    return 0


# -- table -------------------------------------------------------------------------

def _parse_lengths(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise DomainError(f"cannot parse length range {text!r}; expected a..b")
    if a < 1 or b < a:
        raise DomainError(f"invalid length range {text!r}")
    return range(a, b + 1)


def _cmd_table(args) -> int:
    if args.r != 2:
        raise DomainError("closed-form tables require r = 2")
    rows = []
    for n in _parse_lengths(args.lengths):
        nc = cyclic_count_n(args.p, args.s, n).count
        nec = euclidean_cyclic_count_n(args.p, args.s, n).count
        nhc = (hermitian_cyclic_count_n(args.p, args.s, n).count
               if args.s % 2 == 0 else None)
        rows.append({"n": n, "NC": nc, "NEC": nec, "NHC": nhc})
    if args.format == "json":
        _emit_json({"p": args.p, "r": args.r, "s": args.s,
                    "lengths": args.lengths},
                   {"rows": len(rows)}, rows)
    else:
        print("n,NC,NEC,NHC")
        for row in rows:
            nhc = "" if row["NHC"] is None else str(row["NHC"])
            print(f'{row["n"]},{row["NC"]},{row["NEC"]},{nhc}')
    return 0


# -- verify ------------------------------------------------------------------------

def _engine(p, r, s, group, bound):
    return ExhaustiveGroupRing(GroupRing(construct_ring(p, r, s), group), bound)


def _brute_selfdual(p, r, s, group, form, bound):
    return _engine(p, r, s, group, bound).count_self_dual(form)


def _decomposition_selfdual(p, r, s, group, form, bound):
    """Materialize each representative generator list and count the distinct
    self-dual ideals they span; raises through if one fails the duality check."""
    fam = enumerate_semisimple_selfdual(p, r, s, group, form)
    eng = _engine(p, r, s, group, bound)
    found = set()
    for gens in fam.representatives:
        ideal = reduce(eng.join, (eng.principal_ideal(g) for g in gens),
                       eng.zero_ideal())
        if not eng.is_self_dual(ideal, form):
            return -1
        found.add(ideal)
    return len(found)


_JOIN_ORACLE = "join-closure brute force"
_DECOMP_ORACLE = "decomposition enumeration"


def _verify_checks(bound):
    """Yield (check, params, formula_thunk, oracle_thunk, oracle_kind,
    ring_size) in canonical order."""
    groups = {"1": AbelianGroup(()), "Z2": AbelianGroup((2,)),
              "Z3": AbelianGroup((3,)), "Z4": AbelianGroup((4,)),
              "Z7": AbelianGroup((7,))}

    def ring_size(p, r, s, group):
        return p**(r * s * group.order)

    for (p, s, a) in [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1), (2, 2, 2),
                      (3, 1, 1), (3, 2, 1)]:
        group = AbelianGroup((p**a,))
        yield ("cyclic-count", {"p": p, "s": s, "a": a},
               lambda p=p, s=s, a=a: cyclic_count_p2(p, s, a),
               lambda p=p, s=s, g=group: len(_engine(p, 2, s, g, bound).enumerate_ideals()),
               _JOIN_ORACLE, ring_size(p, 2, s, group))

    for (p, s, a) in [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 1), (3, 1, 1)]:
        group = AbelianGroup((p**a,))
        yield ("euclidean-cyclic-count", {"p": p, "s": s, "a": a},
               lambda p=p, s=s, a=a: euclidean_cyclic_count_p2(p, s, a),
               lambda p=p, s=s, g=group: _brute_selfdual(p, 2, s, g, "euclidean", bound),
               _JOIN_ORACLE, ring_size(p, 2, s, group))

    for (p, s, a) in [(2, 2, 1), (2, 2, 2), (3, 2, 1)]:
        group = AbelianGroup((p**a,))
        yield ("hermitian-cyclic-count", {"p": p, "s": s, "a": a},
               lambda p=p, s=s, a=a: hermitian_cyclic_count_p2(p, s, a),
               lambda p=p, s=s, g=group: _brute_selfdual(p, 2, s, g, "hermitian", bound),
               _JOIN_ORACLE, ring_size(p, 2, s, group))

    for (p, r, s, gtext, dual) in [(2, 2, 1, "Z3", "euclidean"),
                                   (2, 2, 1, "Z7", "euclidean"),
                                   (3, 2, 1, "Z2", "euclidean"),
                                   (3, 1, 1, "Z2", "euclidean"),
                                   (2, 3, 1, "Z3", "euclidean"),
                                   (2, 2, 2, "Z3", "hermitian")]:
        group = groups[gtext]
        semisimple = (euclidean_semisimple_count if dual == "euclidean"
                      else hermitian_semisimple_count)
        params = {"p": p, "r": r, "s": s, "group": gtext, "dual": dual}
        yield ("semisimple-count", params,
               lambda f=semisimple, p=p, r=r, s=s, g=group: f(p, r, s, g).count,
               lambda p=p, r=r, s=s, g=group, d=dual: _brute_selfdual(p, r, s, g, d, bound),
               _JOIN_ORACLE, ring_size(p, r, s, group))
        yield ("semisimple-count", params,
               lambda f=semisimple, p=p, r=r, s=s, g=group: f(p, r, s, g).count,
               lambda p=p, r=r, s=s, g=group, d=dual: _decomposition_selfdual(p, r, s, g, d, bound),
               _DECOMP_ORACLE, ring_size(p, r, s, group))

    for (p, r, s, gtext, dual) in [(2, 2, 1, "Z6", "euclidean"),
                                   (3, 2, 1, "Z3", "euclidean"),
                                   (2, 2, 1, "Z4", "euclidean"),
                                   (2, 2, 2, "Z2", "hermitian")]:
        group = parse_group(gtext)
        dec = sylow_decompose(group, p)
        general = (euclidean_abelian_count if dual == "euclidean"
                   else hermitian_abelian_count)
        yield ("general-count", {"p": p, "r": r, "s": s, "group": gtext, "dual": dual},
               lambda f=general, p=p, r=r, s=s, d=dec: f(p, r, s, d.coprime_part, d.p_part, "closed").count,
               lambda p=p, r=r, s=s, g=group, d=dual: _brute_selfdual(p, r, s, g, d, bound),
               _JOIN_ORACLE, ring_size(p, r, s, group))

    for (p, s, n) in [(2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 1, 6), (3, 1, 3)]:
        group = AbelianGroup((n,)) if n > 1 else AbelianGroup(())
        yield ("length-count", {"p": p, "s": s, "n": n, "dual": "euclidean"},
               lambda p=p, s=s, n=n: euclidean_cyclic_count_n(p, s, n).count,
               lambda p=p, s=s, g=group: _brute_selfdual(p, 2, s, g, "euclidean", bound),
               _JOIN_ORACLE, ring_size(p, 2, s, group))

    for (p, r, gtext) in [(2, 1, "Z2"), (2, 1, "Z3"), (2, 2, "Z2"),
                          (2, 2, "Z3"), (3, 1, "Z2"), (3, 1, "Z3"),
                          (3, 2, "Z2"), (3, 2, "Z3")]:
        group = groups[gtext]
        yield ("exists", {"p": p, "r": r, "s": 1, "group": gtext, "dual": "euclidean"},
               lambda p=p, r=r, g=group: int(exists_self_dual(p, r, g)),
               lambda p=p, r=r, g=group: int(_engine(p, r, 1, g, bound).exists_self_dual_brute("euclidean")),
               _JOIN_ORACLE, ring_size(p, r, 1, group))


def _cmd_verify(args) -> int:
    bound = args.max_ring_size
    records = []
    for check, params, formula, oracle, kind, size in _verify_checks(bound):
        if size > bound:
            continue
        t0 = time.monotonic()
        fv = formula()
        ov = oracle()
        elapsed = time.monotonic() - t0
        records.append({"check": check, "parameters": params,
                        "formula": fv, "oracle": ov, "oracle_kind": kind,
                        "status": "pass" if fv == ov else "fail",
                        "elapsed": elapsed})
    failed = sum(1 for rec in records if rec["status"] == "fail")
    if args.json:
        for rec in records:
            if not args.timings:
                del rec["elapsed"]
        _emit_json({"max_ring_size": bound},
                   {"total": len(records), "passed": len(records) - failed,
                    "failed": failed,
                    "status": "fail" if failed else "pass"},
                   records)
    else:
        for rec in records:
            pstr = " ".join(f"{k}={v}" for k, v in rec["parameters"].items())
            line = (f'{rec["status"].upper():4s} {rec["check"]} {pstr} '
                    f'formula={rec["formula"]} oracle={rec["oracle"]} '
                    f'oracle="{rec["oracle_kind"]}"')
            if args.timings:
                line += f' elapsed={rec["elapsed"]:.2f}s'
            print(line)
        print(f"{len(records) - failed}/{len(records)} checks passed")
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------------

def _add_ring_args(sub, with_s=True):
    sub.add_argument("--p", type=int, required=True, help="characteristic prime")
    sub.add_argument("--r", type=int, required=True, help="nilpotency exponent")
    if with_s:
        sub.add_argument("--s", type=int, default=1, help="extension degree")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="galcodes",
        description="Self-dual abelian codes over Galois rings")
    subs = parser.add_subparsers(dest="command", required=True)

    gr = subs.add_parser("gr", help="Galois ring utilities")
    gr_subs = gr.add_subparsers(dest="gr_command", required=True)
    info = gr_subs.add_parser("info", help="print ring parameters")
    _add_ring_args(info)
    info.add_argument("--json", action="store_true")
    info.set_defaults(func=_cmd_gr_info)

    classes = subs.add_parser("classes", help="cyclotomic classes of a group")
    classes.add_argument("--group", required=True, help="e.g. Z7 or Z2xZ4")
    classes.add_argument("--q", type=int, required=True, help="prime power p^s")
    classes.add_argument("--json", action="store_true")
    classes.set_defaults(func=_cmd_classes)

    count = subs.add_parser("count", help="count (self-dual) abelian codes")
    _add_ring_args(count)
    count.add_argument("--group", required=True)
    count.add_argument("--dual", choices=["euclidean", "hermitian", "none"],
                       default="euclidean")
    count.add_argument("--provider", choices=["auto", "closed", "brute"],
                       default="auto")
    count.add_argument("--json", action="store_true")
    count.set_defaults(func=_cmd_count)

    exists = subs.add_parser("exists", help="self-dual existence predicate")
    _add_ring_args(exists)
    exists.add_argument("--group", required=True)
    exists.add_argument("--dual", choices=["euclidean", "hermitian"],
                        default="euclidean")
    exists.add_argument("--json", action="store_true")
    exists.set_defaults(func=_cmd_exists)

    construct = subs.add_parser("construct", help="build one self-dual code")
    _add_ring_args(construct)
    construct.add_argument("--group", required=True)
    construct.add_argument("--dual", choices=["euclidean", "hermitian"],
                           default="euclidean")
    construct.add_argument("--json", action="store_true")
    construct.set_defaults(func=_cmd_construct)

    enum = subs.add_parser("enumerate",
                           help="all self-dual codes, semisimple case")
    _add_ring_args(enum)
    enum.add_argument("--group", required=True)
    enum.add_argument("--dual", choices=["euclidean", "hermitian"],
                      default="euclidean")
    enum.add_argument("--json", action="store_true")
    enum.set_defaults(func=_cmd_enumerate)

    table = subs.add_parser("table", help="cyclic-code count table over GR(p^2,s)")
    table.add_argument("--p", type=int, required=True)
    table.add_argument("--r", type=int, default=2)
    table.add_argument("--s", type=int, default=1)
    table.add_argument("--lengths", required=True, help="inclusive range a..b")
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.set_defaults(func=_cmd_table)

    verify = subs.add_parser("verify", help="formula-vs-oracle harness")
    verify.add_argument("--max-ring-size", type=int, default=4096,
                        help="skip oracles on rings larger than this")
    verify.add_argument("--timings", action="store_true",
                        help="append wall-clock times (non-deterministic)")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
