"""``bfx`` command-line front end.

Exit codes: 0 all assertions pass, 1 an invariant failed, 2 usage or parse
error, 3 an arity cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import certalgs, graphs, lifting, measures, sweeps, zebra
from .core import CapExceeded, TruthTable, index_point
from .funcspec import ParseError, parse_function

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

SCHEMA = """CSV columns (one row per function, same order as the JSON keys):
  f          function as hex:<n>:<table>
  n          arity
  s bs bs0 bs1          sensitivity, block sensitivity (overall, on 0-inputs, on 1-inputs)
  fbs_num fbs_den       fractional block sensitivity as a reduced fraction
  c c0 c1               certificate complexity (overall, 0-side, 1-side)
  cmin cminstar         minimum certificate complexity, max of cmin over restrictions
  deg d rank alt zebra  degree, decision tree depth, rank, alternation, zebra flag (0/1)
  subcube_dt parity_dt  optimal subcube / parity tree depth (empty above arity 4 / 5)
  checks                name=0|1 pairs joined by ';'
"""


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    specs: list[str] = field(default_factory=list)
    fmt: str = "json"
    threads: int = 1
    seed: int = 0


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _bits_str(p: int, n: int) -> str:
    return "".join(str(b) for b in index_point(p, n))


def _kv(tokens: list[str]) -> tuple[dict[str, str], list[str]]:
    kv, rest = {}, []
    for tok in tokens:
        if "=" in tok and not tok.startswith(("hex:", "compose(", "restrict(")):
            k, v = tok.split("=", 1)
            kv[k] = v
        else:
            rest.append(tok)
    return kv, rest


def _checks_text(checks) -> str:
    return "\n".join(f"  {'ok  ' if c['ok'] else 'FAIL'} {c['name']}" for c in checks)


# --- subcommands ---------------------------------------------------------------

def _report_rows(specs: list[str]) -> list[dict]:
    rows = []
    for spec in specs:
        f = parse_function(spec)
        row = {"f": str(f)}
        row.update(measures.measure_report(f).as_dict())
        rows.append(row)
    return rows


def _emit_rows(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(_dump(rows[0] if len(rows) == 1 else rows) + "\n")
    elif fmt == "csv":
        out.write(_rows_csv(rows))
    else:
        for r in rows:
            out.write(r["f"] + "\n")
            for k, v in r.items():
                if k not in ("f", "checks"):
                    out.write(f"  {k:<11}{v}\n")
            out.write(_checks_text(r["checks"]) + "\n")


def _rows_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ("f",) + measures.REPORT_FIELDS
    w.writerow(cols)
    for r in rows:
        line = []
        for k in cols:
            v = r[k]
            if k == "checks":
                v = ";".join(f"{c['name']}={int(c['ok'])}" for c in v)
            elif isinstance(v, bool):
                v = int(v)
            elif v is None:
                v = ""
            line.append(v)
        w.writerow(line)
    return buf.getvalue()


def _rows_ok(rows: list[dict]) -> bool:
    return all(c["ok"] for r in rows for c in r["checks"])


def cmd_analyze(args, out) -> int:
    rows = _report_rows([args.spec])
    _emit_rows(rows, args.format, out)
    return EXIT_OK if _rows_ok(rows) else EXIT_FAIL


def cmd_report(args, out) -> int:
    rows = _report_rows(args.specs)
    if args.format == "json":
        out.write(_dump(rows) + "\n")
    else:
        _emit_rows(rows, args.format, out)
    return EXIT_OK if _rows_ok(rows) else EXIT_FAIL


def cmd_enumerate(args, out) -> int:
    kv, rest = _kv(args.params)
    if rest:
        raise UsageError(f"unexpected arguments {rest}")
    checks = tuple(c for c in (args.checks or "").split(",") if c)
    if args.cls == "graph-properties":
        v = int(kv.get("v", kv.get("n", 3)))
        rows, summary = graphs.theorem_graph_report(v, sample=args.sample, seed=args.seed)
        data = [_graph_row(r) for r in rows]
        if args.format == "json":
            out.write(_dump({"summary": summary, "rows": data}) + "\n")
        else:
            out.write(_graph_csv(data))
            if args.format == "text":
                out.write(_dump(summary) + "\n")
            else:
                sys.stderr.write(_dump(summary) + "\n")
        return EXIT_OK if summary["failures"] == 0 else EXIT_FAIL
    if args.cls not in sweeps.CLASSES:
        raise UsageError(f"unknown class {args.cls!r}")
    if "n" not in kv:
        raise UsageError("enumerate needs n=<arity>")
    res = sweeps.sweep(int(kv["n"]), args.cls, checks, sweeps.thread_count(args.threads))
    if args.format == "json":
        out.write(_dump(res.as_dict()) + "\n")
    else:
        summary = {"class": res.cls, "n": res.n, "count": len(res.rows),
                   "failures": res.failures, "ratios": res.ratios}
        if args.format == "csv":
            out.write(_rows_csv(res.rows))
            sys.stderr.write(_dump(summary) + "\n")
        else:
            for r in res.rows:
                bad = [c["name"] for c in r["checks"] if not c["ok"]]
                out.write(f"{r['f']:<14} s={r['s']} bs={r['bs']} fbs={r['fbs_num']}/{r['fbs_den']} "
                          f"C={r['c']} deg={r['deg']} D={r['d']} rank={r['rank']} alt={r['alt']}"
                          f"{'  FAIL ' + ','.join(bad) if bad else ''}\n")
            out.write(_dump(summary) + "\n")
    return EXIT_OK if not res.failures else EXIT_FAIL


def cmd_zebra(args, out) -> int:
    f = parse_function(args.spec)
    if not zebra.is_zebra(f):
        raise UsageError(f"{f} is not a zebra function")
    sd = zebra.stripes(f)
    table = []
    for i in range(sd.k + 1):
        lo, hi = zebra.stripe_extremes(f, i)
        table.append({"index": i, "size": sd.sizes()[i], "color": sd.values[i],
                      "minimal": len(lo), "maximal": len(hi)})
    facts = [{"name": k, "ok": v} for k, v in zebra.verify_zebra_facts(f) + zebra.zebra_bound_checks(f)]
    if args.format == "json":
        out.write(_dump({"f": str(f), "alt": sd.k, "stripes": table, "checks": facts}) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "size", "color", "minimal", "maximal"])
        for r in table:
            w.writerow([r["index"], r["size"], r["color"], r["minimal"], r["maximal"]])
        out.write(buf.getvalue())
    else:
        out.write(f"{f}  alt={sd.k}\n")
        out.write(f"{'index':>5} {'size':>6} {'color':>5} {'#min':>5} {'#max':>5}\n")
        for r in table:
            out.write(f"{r['index']:>5} {r['size']:>6} {r['color']:>5} {r['minimal']:>5} {r['maximal']:>5}\n")
        out.write(_checks_text(facts) + "\n")
    return EXIT_OK if all(c["ok"] for c in facts) else EXIT_FAIL


def _graph_row(r: graphs.GraphRow) -> dict:
    return {"subset": r.subset, "name": r.name, "nontrivial": r.nontrivial, "invariant": r.invariant,
            "bs": r.bs, "deg": r.deg, "d": r.d, "case": r.case,
            "checks": [{"name": k, "ok": v} for k, v in r.checks]}


def _graph_csv(data: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ["subset", "name", "nontrivial", "invariant", "bs", "deg", "d", "case", "checks"]
    w.writerow(cols)
    for r in data:
        w.writerow([r["subset"], r["name"], int(r["nontrivial"]), int(r["invariant"]), r["bs"], r["deg"], r["d"],
                    r["case"], ";".join(f"{c['name']}={int(c['ok'])}" for c in r["checks"])])
    return buf.getvalue()


def _graph_property(v: int, kv: dict[str, str], rest: list[str]) -> graphs.GraphProperty:
    if "classes" in kv:
        names = [c for c in kv["classes"].split(",") if c]
        canon = sorted({graphs.canonical_form(v, graphs.parse_graph(v, c)) for c in names})
        return graphs.property_from_iso_classes(v, canon)
    if len(rest) != 1:
        raise UsageError("graph needs classes=<list> or one named predicate")
    return graphs.named_property(v, rest[0])


def cmd_graph(args, out) -> int:
    kv, rest = _kv(args.params)
    if "v" not in kv:
        raise UsageError("graph needs v=<vertices>")
    v = int(kv["v"])
    if rest == ["sweep"]:
        args.cls, args.params = "graph-properties", [f"v={v}"]
        return cmd_enumerate(args, out)
    try:
        p = _graph_property(v, kv, rest)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result: dict = {"v": v, "name": p.name}
    ok = True
    if p.n_edges <= 10:
        row = _graph_row(graphs.analyse_property(0, p))
        row.pop("subset")
        result.update(row)
        ok = row["invariant"] and all(c["ok"] for c in row["checks"])
    else:
        f, w = graphs.reduce_property(p)
        checks = [{"name": k, "ok": b} for k, b in graphs.reduction_checks(p, f, w)]
        result.update({"case": w.case, "m": w.m, "reduced": str(f), "checks": checks})
        ok = all(c["ok"] for c in checks)
    if result.get("nontrivial", True) and "reduced" not in result:
        f, w = graphs.reduce_property(p)
        result.update({"m": w.m, "reduced": str(f)})
    if args.format == "json":
        out.write(_dump(result) + "\n")
    elif args.format == "csv":
        keys = [k for k in result if k != "checks"]
        out.write(",".join(keys) + ",checks\n")
        out.write(",".join(str(result[k]) for k in keys) + ","
                  + ";".join(f"{c['name']}={int(c['ok'])}" for c in result.get("checks", [])) + "\n")
    else:
        for k, val in result.items():
            if k != "checks":
                out.write(f"{k:<11}{val}\n")
        out.write(_checks_text(result.get("checks", [])) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_certalg(args, out) -> int:
    f = parse_function(args.spec)
    n = f.arity
    if args.alg in ("alg1", "alg2"):
        tr = certalgs.cert_via_bs(f) if args.alg == "alg1" else certalgs.cert_via_degree(f)
        sm = measures.summary(f)
        step = sm.s if args.alg == "alg1" else measures.degree(f)
        checks = certalgs.trace_checks(f, tr, step, "trace") if not f.is_constant() else []
        result = {"f": str(f), **tr.as_dict()}
    elif args.alg == "alg3":
        tr = certalgs.greedy_cert_dtree(f)
        checks = certalgs.greedy_checks(f)
        result = {"f": str(f), "max_queries": tr.max_queries,
                  "queries": {_bits_str(p, n): q for p, q in enumerate(tr.queries)}}
        if args.input is not None:
            p = int(args.input[::-1], 2) if args.input else 0
            steps, o = tr.steps(p)
            result["run"] = {"input": args.input, "output": o, "steps": [
                {"certificate": {str(i): b for i, b in s.certificate.fixed},
                 "cmin": s.restriction_cmin, "answers": {str(i): b for i, b in s.outcomes}} for s in steps]}
    else:
        checks = certalgs.verify_alternation_bounds(f, sweep_subcubes=n <= 6)
        result = {"f": str(f)}
    result["checks"] = [{"name": k, "ok": v} for k, v in checks]
    if args.format == "text":
        for k, v in result.items():
            if k != "checks":
                out.write(f"{k}: {_dump(v) if isinstance(v, (dict, list)) else v}\n")
        out.write(_checks_text(result["checks"]) + "\n")
    else:
        out.write(_dump(result) + "\n")
    return EXIT_OK if all(v for _, v in checks) else EXIT_FAIL


def _parse_alice(text: str | None, n: int) -> lifting.Bipartition:
    if text is None:
        return lifting.Bipartition.from_alice(n, range(1, n // 2 + 1))
    try:
        alice = [int(a) for a in text.split(",") if a]
        return lifting.Bipartition.from_alice(n, alice)
    except ValueError as exc:
        raise UsageError(f"bad --alice: {exc}") from exc


def cmd_lift(args, out) -> int:
    ok = True
    if args.action == "compose":
        f = parse_function(args.specs[0])
        F, bp = lifting.compose_with_indexing(f, args.m)
        result = {"F": str(F), "arity": F.arity, "alice": list(bp.alice), "bob": list(bp.bob)}
    elif args.action == "check-bs":
        v = lifting.bs_fbs_lifting_check(parse_function(args.specs[0]), args.m)
        result, ok = v.as_dict(), v.ok
    elif args.action == "check-deg":
        if len(args.specs) != 2:
            raise UsageError("check-deg needs two function specs")
        v = lifting.deg_composition_check(parse_function(args.specs[0]), parse_function(args.specs[1]))
        result, ok = {"deg_f": v.deg_f, "deg_g": v.deg_g, "deg_fg": v.deg_fg, "ok": v.ok}, v.ok
    else:
        f = parse_function(args.specs[0])
        n = f.arity
        bp = _parse_alice(args.alice, n)
        if n <= measures.CAP_SUBCUBE_DT:
            _, st = measures.optimal_subcube_tree(f)
        else:
            st = lifting.dt_as_subcube_tree(measures.decision_tree_depth(f)[1], n)
        inputs = [int(args.input[::-1], 2)] if args.input else range(1 << n)
        transcripts = []
        for p in inputs:
            tr = lifting.simulate_protocol(st, bp, p)
            good = tr.output == f.at(p) and tr.cost <= tr.budget
            ok &= good
            transcripts.append({"input": _bits_str(p, n), **tr.as_dict(), "correct": good})
        result = {"f": str(f), "alice": list(bp.alice), "bob": list(bp.bob),
                  "max_bits": max(t["bits"] for t in transcripts), "all_correct": ok,
                  "transcripts": transcripts if args.input or n <= 4 else []}
    if args.format == "text":
        for k, v in result.items():
            out.write(f"{k}: {_dump(v) if isinstance(v, (dict, list)) else v}\n")
    else:
        out.write(_dump(result) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


# --- parser --------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--threads", type=int, default=None, help="worker processes (BFX_THREADS overrides)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")

    p = _Parser(prog="bfx", description="Exact Boolean function complexity measures.")
    p.add_argument("--schema", action="store_true", help="print the CSV column schema and exit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    a = sub.add_parser("analyze", parents=[common], help="full measure report for one function")
    a.add_argument("spec")
    a.set_defaults(run=cmd_analyze)

    r = sub.add_parser("report", parents=[common], help="measure reports for several functions")
    r.add_argument("specs", nargs="+")
    r.set_defaults(run=cmd_report)

    e = sub.add_parser("enumerate", parents=[common], help="exhaustive sweep over a function class")
    e.add_argument("cls", metavar="class", help="all | zebra | monotone | graph-properties")
    e.add_argument("params", nargs="*", help="n=<arity> or v=<vertices>")
    e.add_argument("--checks", default="", help="extra check sets: certalg,zebra")
    e.add_argument("--sample", type=int, default=None, help="sampled properties for v=5")
    e.set_defaults(run=cmd_enumerate)

    z = sub.add_parser("zebra", parents=[common], help="stripe table and zebra facts")
    z.add_argument("spec")
    z.set_defaults(run=cmd_zebra)

    g = sub.add_parser("graph", parents=[common], help="graph property analysis")
    g.add_argument("params", nargs="+", help="v=<v> classes=K3,P4 | v=<v> <predicate> | v=<v> sweep")
    g.add_argument("--sample", type=int, default=None)
    g.add_argument("--checks", default="")
    g.set_defaults(run=cmd_graph)

    c = sub.add_parser("certalg", parents=[common], help="certificate algorithms")
    c.add_argument("alg", choices=("alg1", "alg2", "alg3", "verify"))
    c.add_argument("spec")
    c.add_argument("--input", default=None, help="bit string x_1..x_n for a single alg3 run")
    c.set_defaults(run=cmd_certalg)

    lf = sub.add_parser("lift", parents=[common], help="indexing-gadget lifting tools")
    lf.add_argument("action", choices=("compose", "check-bs", "check-deg", "simulate"))
    lf.add_argument("specs", nargs="+")
    lf.add_argument("--m", type=int, default=1)
    lf.add_argument("--alice", default=None, help="comma-separated coordinates owned by Alice")
    lf.add_argument("--input", default=None, help="bit string x_1..x_n")
    lf.set_defaults(run=cmd_lift)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.schema:
            out.write(SCHEMA)
            return EXIT_OK
        if not args.command:
            raise UsageError("missing subcommand")
        return args.run(args, out)
    except (UsageError, ParseError) as exc:
        sys.stderr.write(f"bfx: error: {exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        sys.stderr.write(f"bfx: cap exceeded: {exc}\n")
        return EXIT_CAP
    except BrokenPipeError:
        # downstream reader closed early (e.g. ``| head``)
        sys.stdout = open(os.devnull, "w")
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
