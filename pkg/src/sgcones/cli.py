"""Command line front end.

Four subcommands over one input semigroup: build (table plus analysis),
category (ideal category exports), cones (cone enumeration dump), verify
(the full check suite).  Input comes from a builtin fixture, a plain text
table file, or a semilattice-of-groups JSON file.  Output is byte
deterministic for a fixed command line; timings go to stderr only.

Exit codes: 0 ok, 2 bad input, 3 budget exhausted, 4 a required check
failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .builders import FIXTURES, SLGSpec, fixture, strong_semilattice_of_groups
from .category import build_L, build_R, check_prop2, check_prop3
from .cones import (DEFAULT_ENUM_BUDGET, build_TL,
                    check_principal_homomorphism, cones_to_json,
                    enumerate_cones, principal_witness, verify_prop4,
                    verify_prop5, verify_theorem6, verify_tl_wellformed)
from .duals import (verify_degeneration, verify_semilattice_theorems,
                    verify_theorem7, verify_theorem8)
from .errors import BudgetExceeded, ValidationError
from .semigroup import (DEFAULT_SEARCH_BUDGET, FiniteSemigroup,
                        from_table_text, green, idempotents, is_clifford,
                        is_commutative, is_inverse, is_regular,
                        is_semilattice, to_table_text)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_FAIL = 4

FORMATS = {
    "build": ("text", "json"),
    "category": ("text", "json", "dot"),
    "cones": ("text", "json"),
    "verify": ("text", "json"),
}

# rows whose claim is conditional on the base being Clifford
CLIFFORD_ROWS = frozenset(
    ("prop2", "prop3", "prop4", "prop5",
     "theorem6", "theorem7", "theorem8", "degeneration")
)


def _yn(flag) -> str:
    return "yes" if flag else "no"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


class _Timer:
    def __init__(self, enabled):
        self.enabled = enabled
        self.marks = []

    def time(self, label, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        self.marks.append((label, time.perf_counter() - t0))
        return out

    def flush(self):
        for label, dt in self.marks:
            print(f"timing: {label} {dt:.3f}s", file=sys.stderr)
        self.marks = []


def load_input(args) -> tuple:
    """Resolve the input flags to (name, semigroup)."""
    if args.fixture:
        return args.fixture, fixture(args.fixture)
    if args.table:
        with open(args.table, "r", encoding="utf-8") as fh:
            text = fh.read()
        name = os.path.splitext(os.path.basename(args.table))[0]
        return name, from_table_text(text)
    with open(args.slg, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"not valid JSON: {exc}") from exc
    name = os.path.splitext(os.path.basename(args.slg))[0]
    spec = SLGSpec.from_json_dict(payload)
    return name, strong_semilattice_of_groups(spec)


def analysis_dict(S: FiniteSemigroup) -> dict:
    g = green(S)
    return {
        "order": S.order,
        "idempotents": sorted(idempotents(S)),
        "l_classes": len(g.lclasses),
        "r_classes": len(g.rclasses),
        "h_classes": len(g.hclasses),
        "d_classes": len(g.dclasses),
        "regular": is_regular(S),
        "inverse": is_inverse(S),
        "clifford": is_clifford(S),
        "commutative": is_commutative(S),
        "semilattice": is_semilattice(S),
        "labels": list(S.labels) if S.labels else None,
    }


def _analysis_text(info: dict) -> str:
    lines = []
    lines.append(f"order: {info['order']}")
    lines.append("idempotents: " + " ".join(map(str, info["idempotents"])))
    for key in ("l_classes", "r_classes", "h_classes", "d_classes"):
        lines.append(f"{key.replace('_', '-')}: {info[key]}")
    for key in ("regular", "inverse", "clifford", "commutative",
                "semilattice"):
        lines.append(f"{key}: {_yn(info[key])}")
    return "\n".join(lines) + "\n"


def _emit(args, filename, text, stdout_parts):
    """Either collect for stdout or write under --out and confirm."""
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, filename)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        stdout_parts.append(f"wrote {path}\n")
    else:
        stdout_parts.append(text)


def cmd_build(args, timer) -> int:
    name, S = load_input(args)
    info = timer.time("analysis", analysis_dict, S)
    parts = []
    if args.out:
        _emit(args, f"{name}.table.txt", to_table_text(S), parts)
        _emit(args, f"{name}.analysis.json", _json_text(info), parts)
    else:
        if "text" in args.formats:
            parts.append(to_table_text(S))
            parts.append(_analysis_text(info))
        if "json" in args.formats:
            parts.append(_json_text(info))
    sys.stdout.write("".join(parts))
    return EXIT_OK


def _category_text(name: str, C) -> str:
    lines = [
        f"{C.side} category of {name}: "
        f"{len(C.objects)} objects ({' '.join(map(str, C.objects))})"
    ]
    for f, g in C.strict_pairs:
        lines.append(f"  inclusion: {f} in {g}")
    for e in C.objects:
        for f in C.objects:
            lines.append(f"  hom {e} {f}: {' '.join(map(str, C.hom(e, f)))}")
    return "\n".join(lines) + "\n"


def cmd_category(args, timer) -> int:
    name, S = load_input(args)
    L = timer.time("build left category", build_L, S)
    R = timer.time("build right category", build_R, S)
    parts = []
    for side, C in (("L", L), ("R", R)):
        if "text" in args.formats:
            if args.out:
                _emit(args, f"{name}.{side}.txt", _category_text(name, C), parts)
            else:
                parts.append(_category_text(name, C))
        if "json" in args.formats:
            _emit(args, f"{name}.{side}.json", _json_text(C.to_json_dict()), parts)
        if "dot" in args.formats:
            _emit(args, f"{name}.{side}.dot", C.to_dot(), parts)
    sys.stdout.write("".join(parts))
    return EXIT_OK


def _cones_text(name: str, C, cones) -> str:
    lines = [
        f"cones over the {C.side} category of {name}: {len(cones)} "
        f"(objects {' '.join(map(str, C.objects))})"
    ]
    for cone in cones:
        us = " ".join(str(m.u) for m in cone.components)
        a = principal_witness(C, cone)
        flag = f"principal, a={a}" if a is not None else "not principal"
        lines.append(f"  apex {cone.apex} components ({us}) {flag}")
    return "\n".join(lines) + "\n"


def cmd_cones(args, timer) -> int:
    name, S = load_input(args)
    C = timer.time("build left category", build_L, S)
    cones = timer.time(
        "enumerate cones", enumerate_cones, C, args.budget or DEFAULT_ENUM_BUDGET
    )
    parts = []
    if "text" in args.formats:
        if args.out:
            _emit(args, f"{name}.cones.txt", _cones_text(name, C, cones), parts)
        else:
            parts.append(_cones_text(name, C, cones))
    if "json" in args.formats:
        _emit(args, f"{name}.cones.json", _json_text(cones_to_json(C, cones)), parts)
    sys.stdout.write("".join(parts))
    return EXIT_OK


def _detail(check: dict) -> str:
    name = check["name"]
    if name == "prop2":
        w = check["witness"]
        pair = "none" if w is None else f"{w[0]} {w[1]}"
        return (f"objects={check['objects']}, "
                f"isomorphic-but-distinct pair: {pair}")
    if name == "prop3":
        w = check["witness"]
        return (f"triples={check['triples']}, collision: "
                + ("none" if w is None else f"{w[0]} vs {w[1]}"))
    if name == "prop4":
        return (f"cones={check['cones']}, principal={check['principal']}, "
                f"nonprincipal={len(check['nonprincipal'])}")
    if name == "prop5":
        c = check["collisions"]
        return "collisions: " + ("none" if not c else str(c))
    if name == "theorem6":
        return (f"|TL| = {check['tl_order']}, |S| = {check['order']}, "
                f"homomorphism={_yn(check['homomorphism'])}, "
                f"injective={_yn(check['injective'])}, "
                f"surjective={_yn(check['surjective'])}")
    if name == "theorem7":
        extra = check.get("reason")
        return (f"dual objects={check['dual_objects']}, "
                f"target objects={check['target_objects']}, "
                f"transport={check.get('transport') or 'none'}"
                + (f" ({extra})" if extra else ""))
    if name == "theorem8":
        i = check["anti_isomorphism"]
        ii = check["dual_iso"]
        return (f"anti-isomorphism={_yn(i['passed'])} "
                f"(|TR| = {i['tr_order']}, |S| = {i['order']}), "
                f"dual-category iso={_yn(ii['passed'])}")
    if name == "degeneration":
        return (f"gamma={_yn(check['gamma']['passed'])}, "
                f"delta={_yn(check['delta']['passed'])}")
    if name == "cone-hom-law":
        w = check["witness"]
        return (f"pairs={check['pairs']}, violation: "
                + ("none" if w is None else f"{w[0]} {w[1]}"))
    if name == "tl-wellformed":
        return (f"|TL| = {check['tl_order']}, "
                f"associative={_yn(check['associative'])}, "
                f"regular={_yn(check['regular'])}")
    if name == "semilattice-suite":
        if "reason" in check:
            return check["reason"]
        return (f"|TL| = {check['tl_order']}, |S| = {check['order']}, "
                f"commutative={_yn(check['tl_commutative'])}, "
                f"idempotent={_yn(check['tl_idempotent'])}")
    return ""


def verify_report(name: str, S: FiniteSemigroup, enum_budget: int,
                  search_budget: int) -> dict:
    """Run every check in row order and attach PASS/FAIL/N-A statuses.

    Rows whose claim presumes a Clifford base are computed anyway but
    reported N-A on other inputs, so genuine negative controls do not
    count as failures.
    """
    clifford = is_clifford(S)
    semilattice = is_semilattice(S)
    C = build_L(S)
    checks = [
        check_prop2(C),
        check_prop3(C),
        verify_prop4(C, enum_budget),
        verify_prop5(C),
        verify_theorem6(S, enum_budget),
        verify_theorem7(S, enum_budget),
        verify_theorem8(S, enum_budget, search_budget),
        verify_degeneration(S, enum_budget),
        check_principal_homomorphism(C),
        verify_tl_wellformed(C, enum_budget),
    ]
    if semilattice:
        checks.append(verify_semilattice_theorems(S, enum_budget))
    else:
        checks.append({
            "name": "semilattice-suite",
            "passed": None,
            "reason": "input is not a semilattice",
        })
    rows = []
    for check in checks:
        if check["name"] == "semilattice-suite" and not semilattice:
            status = "N-A"
        elif check["name"] in CLIFFORD_ROWS and not clifford:
            status = "N-A"
        else:
            status = "PASS" if check["passed"] else "FAIL"
        rows.append({
            "check": check["name"],
            "status": status,
            "detail": _detail(check),
            "report": check,
        })
    return {
        "input": name,
        "order": S.order,
        "regular": is_regular(S),
        "inverse": is_inverse(S),
        "clifford": clifford,
        "semilattice": semilattice,
        "budgets": {"enumeration": enum_budget, "search": search_budget},
        "checks": rows,
    }


def _verify_text(report: dict) -> str:
    lines = [
        "input {}: order {}, regular={}, inverse={}, clifford={}, "
        "semilattice={}".format(
            report["input"], report["order"], _yn(report["regular"]),
            _yn(report["inverse"]), _yn(report["clifford"]),
            _yn(report["semilattice"]),
        )
    ]
    for row in report["checks"]:
        lines.append(
            f"{row['check']:<18} {row['status']:<4} {row['detail']}"
        )
    failed = [r["check"] for r in report["checks"] if r["status"] == "FAIL"]
    lines.append("result: " + ("FAIL " + " ".join(failed) if failed else "OK"))
    return "\n".join(lines) + "\n"


def _verify_one(item):
    name, enum_budget, search_budget = item
    S = fixture(name)
    return verify_report(name, S, enum_budget, search_budget)


def cmd_verify(args, timer) -> int:
    enum_budget = args.budget or DEFAULT_ENUM_BUDGET
    search_budget = args.budget or DEFAULT_SEARCH_BUDGET
    if args.fixture == "all":
        names = sorted(FIXTURES)
        items = [(n, enum_budget, search_budget) for n in names]
        if args.jobs and args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_verify_one, items))
        else:
            reports = [timer.time(f"verify {n}", _verify_one, item)
                       for n, item in zip(names, items)]
    else:
        name, S = load_input(args)
        reports = [timer.time(
            "verify", verify_report, name, S, enum_budget, search_budget
        )]

    parts = []
    code = EXIT_OK
    for report in reports:
        if any(r["status"] == "FAIL" for r in report["checks"]):
            code = EXIT_FAIL
        text = _verify_text(report)
        if "text" in args.formats:
            if args.out:
                _emit(args, f"{report['input']}.verify.txt", text, parts)
            else:
                parts.append(text)
        if "json" in args.formats:
            _emit(args, f"{report['input']}.verify.json",
                  _json_text(report), parts)
    sys.stdout.write("".join(parts))
    return code


COMMANDS = {
    "build": cmd_build,
    "category": cmd_category,
    "cones": cmd_cones,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--fixture", metavar="NAME",
                     help="builtin fixture name, or 'all' with verify")
    src.add_argument("--table", metavar="PATH",
                     help="plain text multiplication table file")
    src.add_argument("--slg", metavar="PATH",
                     help="semilattice-of-groups JSON file")
    common.add_argument("--out", metavar="DIR",
                        help="write files here instead of stdout")
    common.add_argument("--format", default="text", metavar="LIST",
                        help="comma separated: text,json,dot (default text)")
    common.add_argument("--budget", type=int, metavar="N",
                        help="override enumeration and search budgets")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="parallel workers for --fixture all")
    common.add_argument("--timings", action="store_true",
                        help="print stage timings to stderr")

    parser = argparse.ArgumentParser(
        prog="sgcones",
        description="finite semigroups, their ideal categories, and the "
                    "semigroup of normal cones",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", parents=[common],
                   help="multiplication table and analysis summary")
    sub.add_parser("category", parents=[common],
                   help="export the left and right ideal categories")
    sub.add_parser("cones", parents=[common],
                   help="enumerate normal cones over the left category")
    sub.add_parser("verify", parents=[common],
                   help="run the full check suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget is not None and args.budget <= 0:
        print("error: --budget must be positive", file=sys.stderr)
        return EXIT_INPUT
    if args.jobs is not None and args.jobs <= 0:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    args.formats = tuple(s for s in args.format.split(",") if s)
    allowed = FORMATS[args.command]
    for fmt in args.formats:
        if fmt not in allowed:
            print(
                f"error: format {fmt!r} not available for {args.command} "
                f"(choose from {', '.join(allowed)})",
                file=sys.stderr,
            )
            return EXIT_INPUT
    if not args.formats:
        print("error: empty --format", file=sys.stderr)
        return EXIT_INPUT
    if args.fixture == "all" and args.command != "verify":
        print("error: --fixture all is only supported by verify",
              file=sys.stderr)
        return EXIT_INPUT
    timer = _Timer(args.timings)
    try:
        code = COMMANDS[args.command](args, timer)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if args.timings:
            timer.flush()
    return code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
