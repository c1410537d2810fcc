"""Command-line interface.

Subcommands:

    index      build the index directory for a corpus tree
    search     rank an index against a query snippet file
    eval       leave-one-out retrieval/clone evaluation over an index
    correlate  measure-correlation report over random snippet pairs
    serve      small HTTP search endpoint over a prebuilt index

Exit codes: 0 on success, 1 when the run completed but produced warnings
(printed to stderr), 2 on errors.
"""

from __future__ import annotations

import argparse
import dataclasses
import http.server
import json
import shlex
import sys
from pathlib import Path

from . import eval as eval_mod
from . import rank, store
from .corpus import Config, Language, load_corpus
from .runners import (
    RecordingRunner,
    Runner,
    RunnerSet,
    SubprocessRunner,
    load_replay,
    save_replay,
)


class CliError(Exception):
    """User-facing error; message goes to stderr and the run exits 2."""


def _warn(messages) -> int:
    count = 0
    for msg in messages:
        print(f"warning: {msg}", file=sys.stderr)
        count += 1
    return count


def _load_config(args) -> Config:
    if getattr(args, "config", None):
        try:
            config = Config.from_json(Path(args.config).read_text("utf-8"))
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot load config {args.config}: {exc}") from exc
    else:
        config = Config()
    overrides = {}
    for field in ("rng_seed", "top_n", "args_max", "exec_timeout_ms", "min_stmts", "min_tok_len", "sim_t"):
        value = getattr(args, field, None)
        if value is not None:
            overrides[field] = value
    if overrides:
        config = dataclasses.replace(config, **overrides)
    return config


def _runner_set(args) -> tuple[RunnerSet | None, list[RecordingRunner]]:
    """Build the language->runner map from --runner/--replay/--record flags."""
    live: dict[Language, Runner] = {}
    recorders: list[RecordingRunner] = []
    record = getattr(args, "record", None)
    for spec in getattr(args, "runner", None) or []:
        name, sep, cmd = spec.partition("=")
        if not sep or not cmd.strip():
            raise CliError(f"--runner expects LANG=COMMAND, got {spec!r}")
        try:
            language = Language(name.strip())
        except ValueError as exc:
            raise CliError(f"--runner: unknown language {name!r}") from exc
        runner: Runner = SubprocessRunner(shlex.split(cmd))
        if record:
            recorder = RecordingRunner(runner)
            recorders.append(recorder)
            runner = recorder
        live[language] = runner
    fallback: Runner | None = None
    if getattr(args, "replay", None):
        try:
            fallback = load_replay(args.replay)
        except (OSError, ValueError) as exc:
            raise CliError(f"cannot load replay store {args.replay}: {exc}") from exc
    if record and not live:
        raise CliError("--record needs at least one --runner to record from")
    if not live and fallback is None:
        return None, []
    return RunnerSet(live, fallback), recorders


def _save_recordings(args, runners: RunnerSet | None, recorders: list[RecordingRunner]) -> None:
    record = getattr(args, "record", None)
    if not record:
        return
    merged = {}
    if runners is not None and runners.fallback is not None and hasattr(runners.fallback, "store"):
        merged.update(runners.fallback.store)
    for recorder in recorders:
        merged.update(recorder.records)
    save_replay(record, merged)


def _parse_language(name: str) -> Language:
    try:
        return Language(name)
    except ValueError as exc:
        names = ", ".join(lang.value for lang in Language)
        raise CliError(f"unknown language {name!r} (expected one of: {names})") from exc


def _result_jsonable(result: rank.RankedResult) -> dict:
    return {
        "id": result.snippet_id,
        "rank": result.rank,
        "front": result.front,
        "d_token": result.triple.d_token,
        "d_ast": result.triple.d_ast,
        "d_io": result.triple.d_io,
    }


def _search_record(query_desc: dict, ranker: str, ranked, k: int) -> dict:
    return {
        "query": query_desc,
        "ranker": ranker,
        "results": [_result_jsonable(r) for r in ranked[:k]],
    }


def _rank_source(
    bundle: store.IndexBundle,
    source: str,
    language: Language,
    ranker: str,
    target_language: Language | None,
    runners: RunnerSet | None,
) -> tuple[list[rank.RankedResult], list[str]]:
    features, warnings = rank.query_features_from_source(
        source, language, bundle.config, runners
    )
    candidate_ids = None
    if target_language is not None:
        candidate_ids = [
            rec.id for rec in bundle.corpus if rec.language == target_language
        ]
        if not candidate_ids:
            warnings.append(f"index holds no {target_language.value} snippets")
    ranked = rank.rank_query(features, bundle, ranker, candidate_ids=candidate_ids)
    return ranked, warnings


# --- subcommands ----------------------------------------------------------------


def _cmd_index(args) -> int:
    config = _load_config(args)
    try:
        corpus, report = load_corpus(args.corpus_root, manifest=args.manifest, config=config)
    except (OSError, ValueError) as exc:
        raise CliError(str(exc)) from exc
    warnings = list(report.warnings)
    if not len(corpus):
        raise CliError(f"no snippets found under {args.corpus_root}")
    runners, recorders = _runner_set(args)
    with_dynamic = not args.no_dynamic
    if with_dynamic and runners is None:
        warnings.append("no runner or replay store given; building static indices only")
        with_dynamic = False
    try:
        bundle, build_warnings = store.build_indices(corpus, config, runners, with_dynamic=with_dynamic)
        for group in build_warnings.values():
            warnings.extend(group)
        _save_recordings(args, runners, recorders)
    finally:
        if runners is not None:
            runners.close()
    store.save_index_dir(bundle, args.out)
    print(f"indexed {len(corpus)} snippets -> {args.out}")
    return 1 if _warn(warnings) else 0


def _cmd_search(args) -> int:
    bundle = store.load_index_dir(args.index_dir)
    try:
        source = Path(args.query_file).read_text("utf-8")
    except OSError as exc:
        raise CliError(f"cannot read query file: {exc}") from exc
    language = _parse_language(args.language)
    target = _parse_language(args.target_language) if args.target_language else None
    if args.ranker not in rank.RANKERS:
        raise CliError(f"unknown ranker {args.ranker!r} (expected one of: {', '.join(rank.RANKERS)})")
    runners, _ = _runner_set(args)
    try:
        ranked, warnings = _rank_source(bundle, source, language, args.ranker, target, runners)
    finally:
        if runners is not None:
            runners.close()
    record = _search_record(
        {"file": str(args.query_file), "language": language.value},
        args.ranker,
        ranked,
        args.k,
    )
    if args.json:
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(f"{'rank':>4}  {'front':>5}  {'d_token':>8}  {'d_ast':>6}  {'d_io':>6}  id")
        for row in record["results"]:
            d_ast = "-" if row["d_ast"] is None else str(row["d_ast"])
            d_io = "-" if row["d_io"] is None else f"{row['d_io']:.3f}"
            print(
                f"{row['rank']:>4}  {row['front']:>5}  {row['d_token']:>8.3f}"
                f"  {d_ast:>6}  {d_io:>6}  {row['id']}"
            )
    return 1 if _warn(warnings) else 0


def _parse_ks(text: str) -> tuple[int, ...]:
    try:
        ks = tuple(sorted({int(part) for part in text.split(",") if part.strip()}))
    except ValueError as exc:
        raise CliError(f"--ks expects a comma-separated list of integers, got {text!r}") from exc
    if not ks or any(k < 1 for k in ks):
        raise CliError("--ks needs at least one positive integer")
    return ks


def _cmd_eval(args) -> int:
    bundle = store.load_index_dir(args.index_dir)
    rankers = args.ranker or ["cosal"]
    for name in rankers:
        if name not in rank.RANKERS:
            raise CliError(f"unknown ranker {name!r} (expected one of: {', '.join(rank.RANKERS)})")
    ks = _parse_ks(args.ks)
    cache = rank.PairCache()
    runs = []
    warnings: list[str] = []
    for name in rankers:
        try:
            run = eval_mod.leave_one_out(
                bundle, mode=args.mode, ranker=name, ks=ks, pair_cache=cache, with_clone=args.clone
            )
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        warnings.extend(f"{name}: {msg}" for msg in run.warnings)
        runs.append(run)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "eval.json").write_text(eval_mod.eval_report_json(runs), "utf-8")
    (out / "eval.csv").write_text(eval_mod.eval_report_csv(runs), "utf-8")
    if args.clone:
        (out / "clone.csv").write_text(eval_mod.clone_report_csv(runs), "utf-8")
    sys.stdout.write(eval_mod.eval_report_csv(runs))
    print(f"reports written to {out}")
    return 1 if _warn(warnings) else 0


def _cmd_correlate(args) -> int:
    bundle = store.load_index_dir(args.index_dir)
    try:
        report = eval_mod.correlation_report(
            bundle, pairs_per_repeat=args.pairs, repeats=args.repeats, seed=args.seed
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "correlation.json").write_text(eval_mod.correlation_report_json(report), "utf-8")
    for name, value in report["r"].items():
        shown = "undefined" if value is None else f"{value:+.4f}"
        print(f"r({name.replace('_', ', ')}) = {shown}")
    print(f"report written to {out / 'correlation.json'}")
    return 0


def _cmd_serve(args) -> int:
    bundle = store.load_index_dir(args.index_dir)
    default_ranker = args.ranker
    if default_ranker not in rank.RANKERS:
        raise CliError(f"unknown ranker {default_ranker!r}")

    class Handler(http.server.BaseHTTPRequestHandler):
        def log_message(self, fmt, *log_args):  # quiet by default
            del fmt, log_args

        def _send_json(self, status: int, payload: dict) -> None:
            body = json.dumps(payload, sort_keys=True).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):
            if self.path == "/health":
                self._send_json(200, {"status": "ok", "snippets": len(bundle.corpus)})
            else:
                self._send_json(404, {"error": "not found"})

        def do_POST(self):
            if self.path != "/search":
                self._send_json(404, {"error": "not found"})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                payload = json.loads(self.rfile.read(length).decode("utf-8"))
                if not isinstance(payload, dict):
                    raise ValueError("request body must be a JSON object")
                code = payload["code"]
                if not isinstance(code, str):
                    raise ValueError("'code' must be a string")
                language = Language(payload["language"])
                target = (
                    Language(payload["target_language"])
                    if payload.get("target_language")
                    else None
                )
                k = int(payload.get("k", 10))
                ranker = payload.get("ranker", default_ranker)
                if ranker not in rank.RANKERS:
                    raise ValueError(f"unknown ranker {ranker!r}")
                if k < 1:
                    raise ValueError("'k' must be >= 1")
            except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
                self._send_json(400, {"error": str(exc)})
                return
            ranked, warnings = _rank_source(bundle, code, language, ranker, target, None)
            record = _search_record({"language": language.value}, ranker, ranked, k)
            record["warnings"] = warnings
            self._send_json(200, record)

    server = http.server.ThreadingHTTPServer((args.host, args.port), Handler)
    host, port = server.server_address[:2]
    print(f"serving index {args.index_dir} on http://{host}:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


# --- argument parsing -------------------------------------------------------------


def _add_runner_flags(parser: argparse.ArgumentParser, with_record: bool) -> None:
    parser.add_argument(
        "--runner",
        action="append",
        metavar="LANG=COMMAND",
        help="live runner command for a language (repeatable), e.g. python='python3 runner.py'",
    )
    parser.add_argument("--replay", metavar="FILE", help="replay store with recorded executions")
    if with_record:
        parser.add_argument(
            "--record", metavar="FILE", help="save live execution results as a replay store"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosscode",
        description="Cross-language code search over token, tree and behavior similarity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="build an index directory from a corpus tree")
    p_index.add_argument("corpus_root")
    p_index.add_argument("--out", required=True, help="index directory to write")
    p_index.add_argument("--manifest", help="CSV manifest (path,language,group_label)")
    p_index.add_argument("--config", help="JSON config file")
    p_index.add_argument("--no-dynamic", action="store_true", help="skip behavior profiling")
    p_index.add_argument("--seed", dest="rng_seed", type=int, help="override rng_seed")
    p_index.add_argument("--top-n", dest="top_n", type=int, help="override top_n")
    p_index.add_argument("--args-max", dest="args_max", type=int, help="override args_max")
    p_index.add_argument(
        "--exec-timeout-ms", dest="exec_timeout_ms", type=int, help="override exec_timeout_ms"
    )
    p_index.add_argument("--min-stmts", dest="min_stmts", type=int, help="override min_stmts")
    p_index.add_argument("--min-tok-len", dest="min_tok_len", type=int, help="override min_tok_len")
    p_index.add_argument("--sim-t", dest="sim_t", type=float, help="override sim_t")
    _add_runner_flags(p_index, with_record=True)
    p_index.set_defaults(func=_cmd_index)

    p_search = sub.add_parser("search", help="rank an index against a query snippet")
    p_search.add_argument("index_dir")
    p_search.add_argument("query_file")
    p_search.add_argument("--language", required=True, help="query language (java|python)")
    p_search.add_argument("--target-language", help="restrict candidates to one language")
    p_search.add_argument("--k", type=int, default=10, help="results to show (default 10)")
    p_search.add_argument("--ranker", default="cosal", help=f"one of: {', '.join(rank.RANKERS)}")
    p_search.add_argument("--json", action="store_true", help="emit the result record as JSON")
    _add_runner_flags(p_search, with_record=False)
    p_search.set_defaults(func=_cmd_search)

    p_eval = sub.add_parser("eval", help="leave-one-out evaluation over an index")
    p_eval.add_argument("index_dir")
    p_eval.add_argument("--mode", default="cross_language", choices=eval_mod.MODES)
    p_eval.add_argument(
        "--ranker", action="append", help=f"repeatable; one of: {', '.join(rank.RANKERS)}"
    )
    p_eval.add_argument("--ks", default="1,3,5,10", help="comma-separated cutoffs")
    p_eval.add_argument("--clone", action="store_true", help="also score top-1 clone detection")
    p_eval.add_argument("--out", default="out", help="report directory (default ./out)")
    p_eval.set_defaults(func=_cmd_eval)

    p_corr = sub.add_parser("correlate", help="correlation between the three measures")
    p_corr.add_argument("index_dir")
    p_corr.add_argument("--pairs", type=int, default=1000, help="pairs per repeat")
    p_corr.add_argument("--repeats", type=int, default=20)
    p_corr.add_argument("--seed", type=int, default=None)
    p_corr.add_argument("--out", default="out", help="report directory (default ./out)")
    p_corr.set_defaults(func=_cmd_correlate)

    p_serve = sub.add_parser("serve", help="HTTP search endpoint over an index")
    p_serve.add_argument("index_dir")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8318)
    p_serve.add_argument("--ranker", default="cosal")
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
