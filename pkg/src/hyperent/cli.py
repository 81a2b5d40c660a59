"""Command-line interface: ``hyperent {weight,entropy,witness,enumerate,verify}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from . import verify as verify_mod
from .census import EXHAUSTIVE_MAX_N, all_hypergraphs, random_hypergraph
from .entropy import (
    VertexClass,
    classify_vertex,
    lu_inequivalence_witness,
)
from .fixtures import fixture_names, fixture_text
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    InfeasibleError,
    check_vertex,
    max_n,
    parse,
    rank,
    serialize,
)
from .weight import METHODS, choose_method, hamming_weight

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_N_MISMATCH = 4
EXIT_INCONCLUSIVE = 10


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def load_input(arg: str) -> Hypergraph:
    """A path to a JSON/compact file, a bundled fixture name, or a literal."""
    path = Path(arg)
    try:
        if path.is_file():
            return parse(path.read_text())
        if arg in fixture_names() or arg + ".json" in fixture_names():
            return parse(fixture_text(arg))
        return parse(arg)
    except HypergraphError as exc:
        raise CliError(f"cannot parse {arg!r}: {exc}", EXIT_USAGE) from None


def fmt_fraction(x: Fraction) -> str:
    text = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return f"{text} ({float(x):.6g})"


def json_fraction(x: Fraction) -> dict[str, Any]:
    return {"numerator": x.numerator, "denominator": x.denominator, "decimal": float(x)}


def tsv_fraction(x: Fraction) -> str:
    return str(x)


def _resolve_method(g: Hypergraph, method: str) -> str:
    if method != "auto":
        return method
    try:
        return choose_method(g)
    except InfeasibleError as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from None


def _weight(g: Hypergraph, method: str) -> int:
    try:
        return hamming_weight(g, method)
    except InfeasibleError as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from None


def _emit(out, fmt: str, record: dict[str, Any], text_lines: list[str], tsv: list[list[str]]):
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    elif fmt == "tsv":
        for row in tsv:
            out.write("\t".join(row) + "\n")
    else:
        for line in text_lines:
            out.write(line + "\n")


def cmd_weight(args, out) -> int:
    g = load_input(args.input)
    method = _resolve_method(g, args.method)
    hw = _weight(g, method)
    parity = "odd" if hw % 2 else "even"
    record = {"hypergraph": serialize(g), "n": g.n, "hw": hw, "method": method, "parity": parity}
    text = [
        f"hypergraph: {serialize(g)}",
        f"hw: {hw} (method: {method})",
        f"parity: {parity}",
    ]
    tsv = [list(record), [str(v) for v in record.values()]]
    _emit(out, args.format, record, text, tsv)
    return EXIT_OK


def _vertex_record(g: Hypergraph, t: int, method: str) -> dict[str, Any]:
    try:
        rec = classify_vertex(g, t, method)
    except InfeasibleError as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from None
    return {
        "t": rec.t,
        "rank_gt": rec.rank_gt,
        "hw_gt": rec.hw_gt,
        "a": rec.a,
        "E2": rec.measure,
        "class": rec.kind.value,
    }


_VERTEX_KEYS = ("t", "rank_gt", "hw_gt", "a", "E2", "class")


def _vertex_json(v: dict[str, Any]) -> dict[str, Any]:
    return {k: json_fraction(x) if isinstance(x, Fraction) else x for k, x in v.items()}


def _vertex_text(v: dict[str, Any]) -> str:
    return (
        f"  t={v['t']}  rank(g_t)={v['rank_gt']}  hw(g_t)={v['hw_gt']}  "
        f"a={fmt_fraction(v['a'])}  E2={fmt_fraction(v['E2'])}  class={v['class']}"
    )


def _vertex_tsv(v: dict[str, Any]) -> list[str]:
    return [tsv_fraction(x) if isinstance(x, Fraction) else str(x) for x in v.values()]


def cmd_entropy(args, out) -> int:
    g = load_input(args.input)
    method = _resolve_method(g, args.method)
    if args.qubit is not None:
        try:
            check_vertex(g.n, args.qubit)
        except HypergraphError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None
        v = _vertex_record(g, args.qubit, args.method)
        record = {"hypergraph": serialize(g), "n": g.n, **_vertex_json(v)}
        text = [f"hypergraph: {serialize(g)}", _vertex_text(v).strip()]
        tsv = [["hypergraph", *_VERTEX_KEYS], [serialize(g), *_vertex_tsv(v)]]
        _emit(out, args.format, record, text, tsv)
        return EXIT_OK

    hw = _weight(g, method)
    vertices = [_vertex_record(g, t, args.method) for t in range(1, g.n + 1)]
    lme = g.n > 0 and all(v["E2"] == Fraction(1, 4) for v in vertices)
    record = {
        "hypergraph": serialize(g),
        "n": g.n,
        "rank": rank(g),
        "hw": hw,
        "method": method,
        "parity": "odd" if hw % 2 else "even",
        "vertices": [_vertex_json(v) for v in vertices],
        "lme": lme,
    }
    profile = ", ".join(str(v["E2"]) for v in vertices)
    text = [
        f"hypergraph: {serialize(g)}",
        f"n: {g.n}",
        f"rank: {rank(g)}",
        f"hw: {hw} (method: {method})",
        f"parity: {record['parity']}",
        "vertices:",
        *(_vertex_text(v) for v in vertices),
        f"profile: ({profile})",
        f"LME: {'true' if lme else 'false'}",
    ]
    tsv = [list(_VERTEX_KEYS), *(_vertex_tsv(v) for v in vertices)]
    _emit(out, args.format, record, text, tsv)
    return EXIT_OK


def cmd_witness(args, out) -> int:
    g1, g2 = load_input(args.input1), load_input(args.input2)
    if g1.n != g2.n:
        raise CliError(f"vertex counts differ: {g1.n} vs {g2.n}", EXIT_N_MISMATCH)
    method = args.method
    try:
        w = lu_inequivalence_witness(g1, g2, up_to_relabeling=args.up_to_relabeling, method=method)
    except InfeasibleError as exc:
        raise CliError(str(exc), EXIT_INFEASIBLE) from None
    record: dict[str, Any] = {
        "first": serialize(g1),
        "second": serialize(g2),
        "kind": w.kind.value,
        "vertex": w.vertex,
        "values": [json_fraction(x) for x in w.detail] if w.detail else None,
    }
    text = [f"first: {serialize(g1)}", f"second: {serialize(g2)}", f"certificate: {w.kind.value}"]
    if w.vertex is not None:
        text.append(f"vertex: {w.vertex}")
    if w.detail:
        text.append(f"values: {fmt_fraction(w.detail[0])} vs {fmt_fraction(w.detail[1])}")
    values = [tsv_fraction(x) for x in w.detail] if w.detail else ["", ""]
    tsv = [
        ["first", "second", "kind", "vertex", "value1", "value2"],
        [serialize(g1), serialize(g2), w.kind.value, str(w.vertex or ""), *values],
    ]
    _emit(out, args.format, record, text, tsv)
    return EXIT_OK if w.certified else EXIT_INCONCLUSIVE


def _parse_filter(spec: str | None):
    if spec is None:
        return lambda g, hw, records: True
    key, _, value = spec.partition("=")
    if key == "rank" and value.isdigit():
        k = int(value)
        return lambda g, hw, records: rank(g) == k
    if key == "parity" and value in ("odd", "even"):
        want = value == "odd"
        return lambda g, hw, records: (hw % 2 == 1) == want
    if key == "lme" and not value:
        return lambda g, hw, records: g.n > 0 and all(
            r["E2"] == Fraction(1, 4) for r in records
        )
    raise CliError(f"bad filter {spec!r}; expected rank=k, parity=odd|even or lme", EXIT_USAGE)


def cmd_enumerate(args, out) -> int:
    n = args.n
    if not 1 <= n <= max_n():
        raise CliError(f"n = {n} outside 1..{max_n()}", EXIT_INFEASIBLE)
    if args.sample is None:
        if n > EXHAUSTIVE_MAX_N:
            raise CliError(
                f"exhaustive enumeration is capped at n = {EXHAUSTIVE_MAX_N}; use --sample N",
                EXIT_INFEASIBLE,
            )
        source = all_hypergraphs(n)
    else:
        rng = np.random.default_rng(args.seed)
        source = (random_hypergraph(rng, n) for _ in range(args.sample))
    keep = _parse_filter(args.filter)

    total = matched = lme_count = 0
    classes: Counter[str] = Counter()
    if args.format == "tsv":
        out.write("hypergraph\trank\thw\tprofile\tclasses\n")
    for g in source:
        total += 1
        hw = _weight(g, _resolve_method(g, args.method))
        records = [_vertex_record(g, t, args.method) for t in range(1, n + 1)]
        if not keep(g, hw, records):
            continue
        matched += 1
        kinds = [r["class"] for r in records]
        classes.update(kinds)
        profile = [r["E2"] for r in records]
        lme_count += all(e == Fraction(1, 4) for e in profile)
        if args.format == "json":
            row = {
                "hypergraph": serialize(g),
                "rank": rank(g),
                "hw": hw,
                "profile": [json_fraction(e) for e in profile],
                "classes": kinds,
            }
            out.write(json.dumps(row) + "\n")
        else:
            sep = "\t" if args.format == "tsv" else " | "
            out.write(
                sep.join(
                    [
                        serialize(g),
                        str(rank(g)),
                        str(hw),
                        "(" + ", ".join(map(str, profile)) + ")",
                        ",".join(kinds),
                    ]
                )
                + "\n"
            )
    summary = {
        "total": total,
        "matched": matched,
        "lme": lme_count,
        "classes": {k.value: classes[k.value] for k in VertexClass},
    }
    if args.format == "json":
        out.write(json.dumps({"summary": summary}) + "\n")
    else:
        prefix = "# " if args.format == "tsv" else ""
        class_text = ", ".join(f"{k}={v}" for k, v in summary["classes"].items())
        out.write(f"{prefix}summary: {matched} of {total} rows; lme={lme_count}; {class_text}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    limit = min(args.max_n, max_n())
    start = time.perf_counter()
    results = verify_mod.run_suites(seed=args.seed, max_n=limit)
    elapsed = time.perf_counter() - start
    ok = all(r.ok for r in results)
    if args.format == "json":
        for r in results:
            out.write(json.dumps({"suite": r.name, "checked": r.checked, "failures": r.failures}) + "\n")
        out.write(json.dumps({"passed": ok, "seconds": round(elapsed, 3)}) + "\n")
    else:
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            out.write(f"{status} {r.name}: {r.checked - len(r.failures)}/{r.checked}\n")
            for failure in r.failures:
                out.write(f"  counterexample: {failure}\n")
        out.write(f"{'all suites passed' if ok else 'verification FAILED'} (seed={args.seed}, max-n={limit})\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    common.add_argument("--method", choices=METHODS, default="auto")

    parser = argparse.ArgumentParser(
        prog="hyperent",
        description="Hamming weights and local entropic measures of hypergraph states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weight", parents=[common], help="Hamming weight of u(g)")
    p.add_argument("input", help="compact literal, JSON file, or bundled fixture name")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("entropy", parents=[common], help="per-qubit entropic measures")
    p.add_argument("input")
    p.add_argument("--qubit", type=int, default=None)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("witness", parents=[common], help="LU-inequivalence certificate")
    p.add_argument("input1")
    p.add_argument("input2")
    p.add_argument("--up-to-relabeling", action="store_true")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", parents=[common], help="census of all hypergraphs on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--filter", default=None, help="rank=k, parity=odd|even, or lme")
    p.add_argument("--sample", type=int, default=None, help="random mode with N samples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run the oracle cross-checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"hyperent: error: {exc}", file=sys.stderr)
        return exc.code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
