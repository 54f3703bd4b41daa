"""Command-line entry point: ``beaverbench <command> ...``.

Machine-readable artifacts are written atomically and contain no timestamps;
run metadata (time, duration, arguments) goes to a ``.meta.json`` sidecar.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import logging
import os
import sys
import tempfile
import time
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence

from . import __version__, bounds, busy_beaver, hunter, logic, pi1
from . import theorem_pump as tp
from .machine import DETECTORS, Machine

log = logging.getLogger("beaverbench")

EXIT_OK = 0
EXIT_INVALID_CONFIG = 2
EXIT_PARSE_ERROR = 3
EXIT_RESOURCE = 4

TABLE_ENV = "BEAVERBENCH_TABLE"
DEFAULT_TABLE = "bb.json"


class ConfigError(Exception):
    pass


class ResourceError(Exception):
    pass


# -- persistence ------------------------------------------------------------


def atomic_write(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def dump_jsonl(rows: Iterable[dict]) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)


def write_artifact(path: str | os.PathLike, text: str, meta: dict) -> None:
    """Write ``text`` to ``path`` and run metadata to ``path.meta.json``."""
    atomic_write(path, text)
    side = {k: v for k, v in meta.items() if not k.startswith("_")}
    side.setdefault("elapsed_seconds", round(time.perf_counter() - meta.get("_t0", time.perf_counter()), 6))
    atomic_write(f"{path}.meta.json", dump_json(side))


# -- argument helpers -------------------------------------------------------


def positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def axiom_system(text: str) -> logic.AxiomSystem:
    try:
        return logic.AxiomSystem.of(text)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def table_path(args) -> Path:
    path = Path(args.table or os.environ.get(TABLE_ENV) or DEFAULT_TABLE)
    if not path.exists():
        raise ConfigError(f"table file {path} does not exist (set --table or ${TABLE_ENV})")
    return path


def load_table(args) -> list[busy_beaver.BBRecord]:
    path = table_path(args)
    try:
        return busy_beaver.load_table(path)
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read table {path}: {e}") from None


def parse_sentence(text: str) -> logic.Sentence:
    return logic.parse(text)  # ParseError maps to its own exit code


def parse_machine(text: str) -> Machine:
    try:
        return Machine.parse(text)
    except ValueError as e:
        raise logic.ParseError(str(e), 0, text) from None


# -- commands ---------------------------------------------------------------


def cmd_bb_certify(args, meta: dict) -> int:
    detectors = tuple(d.strip() for d in args.detectors.split(",") if d.strip())
    unknown = set(detectors) - set(DETECTORS)
    if unknown:
        raise ConfigError(f"unknown detectors: {', '.join(sorted(unknown))}")
    out_dir = Path(args.out_dir)
    stem = out_dir / f"bb-n{args.states}"
    run = busy_beaver.certify_run(args.states, args.budget, detectors, args.workers, args.checkpoint)
    rec = run.record
    busy_beaver.validate_record(rec)
    write_artifact(f"{stem}.json", dump_json(rec.to_dict()), meta)
    write_artifact(f"{stem}.jsonl", "".join(line + "\n" for line in run.lines()), meta)
    if args.table_out:
        path = Path(args.table_out)
        table = busy_beaver.load_table(path) if path.exists() else []
        table = [r for r in table if r.n != rec.n] + [rec]
        write_artifact(path, dump_json(busy_beaver.table_to_dict(table)), meta)
    if args.figure:
        from .plots import bb_figure
        bb_figure(rec.n, run.machines, run.outcomes, args.figure)
    certs = busy_beaver.nonhalting_certificates(run.outcomes)
    print(f"n={rec.n}: S={rec.s_value} Sigma={rec.sigma_value} status={rec.status} "
          f"machines={rec.machines} holdouts={rec.holdouts}")
    print("non-halting certificates: " + ", ".join(f"{k}={v}" for k, v in certs.items()))
    return EXIT_OK


def cmd_bb_lookup(args, meta: dict) -> int:
    table = load_table(args)
    status = busy_beaver.bb_lookup(table, args.size, args.function)
    payload = {"size": args.size, "function": args.function, **busy_beaver.status_to_dict(status)}
    if args.out:
        write_artifact(args.out, dump_json(payload), meta)
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def cmd_pi1_hunt(args, meta: dict) -> int:
    try:
        phi = pi1.get(args.predicate)
    except KeyError as e:
        raise ConfigError(e.args[0]) from None
    report = pi1.find_counterexample(phi, args.budget, args.start, args.workers)
    payload = report.to_dict()
    meta = {**meta, "elapsed_seconds": round(report.elapsed, 6)}
    if args.out:
        write_artifact(args.out, dump_json(payload), meta)
    if "x" in payload:
        print(f"{phi.name}: counterexample x={payload['x']} after {report.checked} checks")
    else:
        print(f"{phi.name}: no counterexample in {report.budget} checks from {report.start_index}")
    return EXIT_OK


def cmd_pi1_list(args, meta: dict) -> int:
    for name, p in pi1.REGISTRY.items():
        print(f"{name:20s} {p.description}")
    return EXIT_OK


def cmd_pump(args, meta: dict) -> int:
    sys_ = axiom_system(args.axioms)
    target = parse_sentence(args.target)
    if len(logic.variables(target)) > args.vars:
        raise ConfigError(f"target uses {len(logic.variables(target))} variables, --vars is {args.vars}")
    result = tp.pump(sys_, target, args.max_size, args.node_budget, args.max_given, args.max_weight)
    payload = result.to_dict()
    if args.out:
        write_artifact(args.out, dump_json(payload), meta)
    o = result.outcome
    if isinstance(o, tp.Proved):
        if args.proof_out:
            write_artifact(args.proof_out, dump_json(o.proof.to_json()), meta)
        tag = "shortest" if o.minimal else "not certified shortest"
        print(f"Proved {logic.serialize(target)}: {o.proof.line_count} lines, {o.size} symbols ({tag})")
        if args.show:
            print(o.proof)
        return EXIT_OK
    if isinstance(o, tp.NoneWithin):
        print(f"NoneWithin {o.max_size}: no proof of {logic.serialize(target)} with at most {o.max_size} symbols")
        return EXIT_OK
    print(f"SearchIncomplete: {o.reason}; no proof below {o.lower_bound} symbols")
    return EXIT_RESOURCE


def cmd_census(args, meta: dict) -> int:
    sys_ = axiom_system(args.axioms)
    try:
        entries = tp.theorems_up_to(sys_, args.max_size, args.vars, args.sentence_cap,
                                    args.node_budget, args.workers)
    except tp.ResourceExceeded as e:
        raise ResourceError(str(e)) from None
    rows = [e.to_dict() for e in entries]
    if args.out:
        write_artifact(args.out, dump_jsonl(rows), meta)
    if args.figure:
        from .plots import census_figure
        census_figure([e.min_size for e in entries], [e.line_count for e in entries],
                      args.figure, f"theorems of {sys_}")
    multi = sum(1 for e in entries if e.line_count > 1)
    print(f"{len(entries)} theorems with proofs of at most {args.max_size} symbols "
          f"({multi} need modus ponens)")
    return EXIT_OK


def cmd_bound_compose(args, meta: dict) -> int:
    try:
        sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"--sizes must be comma-separated integers, got {args.sizes!r}") from None
    if not sizes or any(s < 0 for s in sizes):
        raise ConfigError("--sizes needs at least one non-negative size")
    role = bounds.CLI_ROLES[args.role]
    table = load_table(args)
    report = bounds.compose_bound([bounds.SizedProgram(role, s) for s in sizes], table, args.measure)
    payload = report.to_dict()
    if args.out:
        write_artifact(args.out, dump_json(payload), meta)
    st = payload["bb_status"]
    if st["status"] == "Known":
        print(f"composed size {report.composed_size}: bound {st['bound']} ({report.interpretation})")
    else:
        print(f"composed size {report.composed_size}: Unknown, {st['reason']}; "
              f"lower bound {st['lower_bound']}")
    return EXIT_OK


def cmd_bound_decide(args, meta: dict) -> int:
    m = parse_machine(args.machine)
    table = load_table(args)
    verdict = bounds.decide_pi1_machine(m, table)
    payload = bounds.verdict_to_dict(m, verdict)
    if args.out:
        write_artifact(args.out, dump_json(payload), meta)
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def cmd_hunt(args, meta: dict) -> int:
    sys_ = axiom_system(args.axioms)
    s = parse_sentence(args.sentence)
    v = hunter.hunt(sys_, s, args.proof_budget, args.node_budget, args.max_given, args.max_weight)
    payload = v.to_dict()
    if args.out:
        write_artifact(args.out, dump_json(payload), meta)
    line = f"{v.kind}: {logic.serialize(s)} under {sys_}"
    c = v.classification
    if isinstance(c, hunter.Refuted):
        line += " falsified by " + ", ".join(f"{k}={int(b)}" for k, b in sorted(c.valuation.items()))
    elif isinstance(c, hunter.IndependenceCandidate):
        line += f" (no proof up to {c.proof_search_exhausted_at} symbols"
        line += "; Kripke countermodel found)" if c.countermodel else ")"
    print(line)
    return EXIT_OK


def cmd_sweep(args, meta: dict) -> int:
    sys_ = axiom_system(args.axioms)
    found = hunter.sweep(sys_, args.max_sentence_size, args.vars, args.proof_budget,
                         args.workers, args.node_budget, args.max_given, args.max_weight)
    rows = [v.to_dict() for v in found]
    if args.out:
        write_artifact(args.out, dump_jsonl(rows), meta)
    print(f"{len(found)} independence candidates under {sys_}")
    for v in found:
        print("  " + logic.serialize(v.sentence))
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-budget", type=positive, default=tp.DEFAULT_NODE_BUDGET,
                   help="partial proofs the exact search may expand")
    p.add_argument("--max-given", type=non_negative, default=tp.DEFAULT_MAX_GIVEN,
                   help="theorems the fallback saturation may select (0 disables it)")
    p.add_argument("--max-weight", type=positive, default=tp.DEFAULT_MAX_WEIGHT,
                   help="largest formula the saturation keeps, in Polish symbols")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=positive, default=1, help="worker processes")
    common.add_argument("--log-level", default="WARNING",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"))

    ap = argparse.ArgumentParser(prog="beaverbench", parents=[common],
                                 description="Busy Beaver bounds, counterexample search and proof search.")
    sub = ap.add_subparsers(dest="command", required=True)

    bb = sub.add_parser("bb", help="Busy Beaver table")
    bb_sub = bb.add_subparsers(dest="bb_command", required=True)
    p = bb_sub.add_parser("certify", parents=[common], help="certify S(n) and Sigma(n)")
    p.add_argument("--states", type=positive, required=True)
    p.add_argument("--budget", type=positive, required=True, help="simulation steps per machine")
    p.add_argument("--detectors", default=",".join(DETECTORS))
    p.add_argument("--out-dir", default=".")
    p.add_argument("--table-out", help="merge the record into this table file")
    p.add_argument("--checkpoint", help="per-machine results file, reused when rerun")
    p.add_argument("--figure", help="write a PNG summary here")
    p.set_defaults(func=cmd_bb_certify)
    p = bb_sub.add_parser("lookup", parents=[common], help="look up S(n) or Sigma(n)")
    p.add_argument("--size", type=positive, required=True)
    p.add_argument("--function", choices=("S", "sigma"), default="S")
    p.add_argument("--table", help=f"table file (default ${TABLE_ENV} or {DEFAULT_TABLE})")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bb_lookup)

    pi = sub.add_parser("pi1", help="counterexample search")
    pi_sub = pi.add_subparsers(dest="pi1_command", required=True)
    p = pi_sub.add_parser("hunt", parents=[common], help="smallest counterexample")
    p.add_argument("--predicate", required=True)
    p.add_argument("--budget", type=positive, required=True, help="inputs to check")
    p.add_argument("--start", type=positive, default=None, help="first input (default 1)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_pi1_hunt)
    p = pi_sub.add_parser("list", parents=[common], help="registered predicates")
    p.set_defaults(func=cmd_pi1_list)

    p = sub.add_parser("pump", parents=[common], help="shortest proof of one sentence")
    p.add_argument("--target", required=True)
    p.add_argument("--axioms", default="A1,A2,A3")
    p.add_argument("--max-size", type=positive, required=True, help="largest proof, in symbols")
    p.add_argument("--vars", type=positive, default=3, help="most variables the target may use")
    p.add_argument("--proof-out")
    p.add_argument("--out", help="full result JSON")
    p.add_argument("--show", action="store_true", help="print the proof")
    _search_flags(p)
    p.set_defaults(func=cmd_pump)

    p = sub.add_parser("census", parents=[common], help="all theorems with short proofs")
    p.add_argument("--axioms", default="A1,A2,A3")
    p.add_argument("--max-size", type=positive, required=True, help="largest proof, in symbols")
    p.add_argument("--vars", type=positive, default=1)
    p.add_argument("--sentence-cap", type=positive, default=None,
                   help="only theorems this small, each searched exactly")
    p.add_argument("--node-budget", type=positive, default=tp.DEFAULT_NODE_BUDGET)
    p.add_argument("--out")
    p.add_argument("--figure")
    p.set_defaults(func=cmd_census)

    bd = sub.add_parser("bound", help="Busy Beaver bounds")
    bd_sub = bd.add_subparsers(dest="bound_command", required=True)
    p = bd_sub.add_parser("compose", parents=[common], help="bound for composed programs")
    p.add_argument("--sizes", required=True, help="comma-separated component sizes")
    p.add_argument("--role", choices=sorted(bounds.CLI_ROLES), default="counterexample")
    p.add_argument("--measure", choices=(bounds.STATES, bounds.BITS), default=bounds.STATES)
    p.add_argument("--table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bound_compose)
    p = bd_sub.add_parser("decide", parents=[common], help="decide whether a machine halts")
    p.add_argument("--machine", required=True)
    p.add_argument("--table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bound_decide)

    p = sub.add_parser("hunt", parents=[common], help="classify one sentence")
    p.add_argument("--axioms", default="A1,A2,A3")
    p.add_argument("--sentence", required=True)
    p.add_argument("--proof-budget", type=positive, default=hunter.DEFAULT_PROOF_BUDGET)
    p.add_argument("--out")
    _search_flags(p)
    p.set_defaults(func=cmd_hunt)

    p = sub.add_parser("sweep", parents=[common], help="independence candidates up to a size")
    p.add_argument("--axioms", default="A1,A2")
    p.add_argument("--max-sentence-size", type=positive, required=True)
    p.add_argument("--vars", type=positive, default=1)
    p.add_argument("--proof-budget", type=positive, default=hunter.DEFAULT_PROOF_BUDGET)
    p.add_argument("--out")
    _search_flags(p)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID_CONFIG if e.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(levelname)s %(name)s: %(message)s")
    t0 = time.perf_counter()
    meta = {"argv": argv, "version": __version__, "_t0": t0,
            "started": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")}
    func: Callable = args.func
    try:
        code = func(args, meta)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_CONFIG
    except logic.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except (ResourceError, MemoryError) as e:
        print(f"resource budget exceeded: {e or 'out of memory'}", file=sys.stderr)
        return EXIT_RESOURCE
    log.info("finished in %.2fs", time.perf_counter() - t0)
    return code


if __name__ == "__main__":
    sys.exit(main())
