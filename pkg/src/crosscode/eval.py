"""Evaluation: leave-one-out retrieval metrics, clone detection, correlation.

Ground truth is the corpus group label: for a query snippet, every other
snippet with the same label (restricted to the evaluation mode's candidate
pool) is relevant. Reported metrics:

    P@k    mean fraction of relevant snippets in the top k
    SR@k   fraction of queries whose best relevant result is within rank k
    MRR    mean reciprocal best rank (0 when nothing relevant is retrieved)

P@1 and SR@1 coincide by construction, which doubles as a self-check.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import random
import statistics
from typing import Mapping, Sequence

from .corpus import Corpus
from .rank import PairCache, RankedResult, features_for_snippet, rank_query
from .store import IndexBundle

MODES = ("cross_language", "within_language", "all")
DEFAULT_KS = (1, 3, 5, 10)


@dataclasses.dataclass(frozen=True)
class QueryJudgment:
    query_id: str
    ranked_ids: tuple[str, ...]
    relevant: frozenset[str]

    def best_rank(self) -> int | None:
        for i, sid in enumerate(self.ranked_ids, start=1):
            if sid in self.relevant:
                return i
        return None


def retrieval_metrics(judgments: Sequence[QueryJudgment], ks: Sequence[int] = DEFAULT_KS) -> dict:
    """P@k, SR@k and MRR over a set of judged rankings (values in [0, 1])."""
    if not judgments:
        raise ValueError("no judgments to score")
    ks = sorted(set(ks))
    p_at = {k: 0.0 for k in ks}
    sr_at = {k: 0 for k in ks}
    mrr_total = 0.0
    for judgment in judgments:
        best = judgment.best_rank()
        if best is not None:
            mrr_total += 1.0 / best
        for k in ks:
            top_k = judgment.ranked_ids[:k]
            hits = sum(1 for sid in top_k if sid in judgment.relevant)
            p_at[k] += hits / k
            if best is not None and best <= k:
                sr_at[k] += 1
    n = len(judgments)
    return {
        "query_count": n,
        "mrr": mrr_total / n,
        "p": {k: p_at[k] / n for k in ks},
        "sr": {k: sr_at[k] / n for k in ks},
    }


def clone_metrics(
    predictions: Sequence[tuple[str, str | None]],
    labels: Mapping[str, str | None],
    has_clone: Mapping[str, bool],
) -> dict:
    """Top-1-as-clone scoring.

    A prediction is a true clone (C+) when the top-1 shares the query's
    group label, otherwise a false one (NC+). Queries that do have a clone
    in the pool but missed it count toward the recall denominator (C-).
    """
    c_plus = nc_plus = c_minus = 0
    for query_id, top1 in predictions:
        label = labels.get(query_id)
        hit = top1 is not None and label is not None and labels.get(top1) == label
        if hit:
            c_plus += 1
        else:
            if top1 is not None:
                nc_plus += 1
            if has_clone.get(query_id, False):
                c_minus += 1
    precision = c_plus / (c_plus + nc_plus) if (c_plus + nc_plus) else 0.0
    recall = c_plus / (c_plus + c_minus) if (c_plus + c_minus) else 0.0
    f1 = 2 * precision * recall / (precision + recall) if (precision + recall) else 0.0
    return {
        "c_plus": c_plus,
        "nc_plus": nc_plus,
        "c_minus": c_minus,
        "precision": precision,
        "recall": recall,
        "f1": f1,
    }


@dataclasses.dataclass
class EvalRun:
    ranker: str
    mode: str
    metrics: dict
    clone: dict | None
    judgments: list[QueryJudgment]
    warnings: list[str]


def _mode_pool(corpus: Corpus, query_id: str, mode: str) -> list[str]:
    query = corpus.get(query_id)
    pool = []
    for rec in corpus:
        if rec.id == query_id:
            continue
        if mode == "cross_language" and rec.language == query.language:
            continue
        if mode == "within_language" and rec.language != query.language:
            continue
        pool.append(rec.id)
    return pool


def leave_one_out(
    bundle: IndexBundle,
    mode: str = "cross_language",
    ranker: str = "cosal",
    ks: Sequence[int] = DEFAULT_KS,
    pair_cache: PairCache | None = None,
    with_clone: bool = False,
) -> EvalRun:
    """Score every corpus snippet as a query against the others."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if len(bundle.corpus) < 2:
        raise ValueError("leave-one-out needs at least two snippets")
    cache = pair_cache or PairCache()
    warnings: list[str] = []
    judgments: list[QueryJudgment] = []
    predictions: list[tuple[str, str | None]] = []
    labels = {rec.id: rec.group_label for rec in bundle.corpus}
    has_clone: dict[str, bool] = {}
    for query_id in bundle.corpus.ids():
        pool = _mode_pool(bundle.corpus, query_id, mode)
        if not pool:
            warnings.append(f"{query_id}: no candidates in mode {mode}, skipped")
            continue
        label = labels[query_id]
        relevant = frozenset(
            sid for sid in pool if label is not None and labels[sid] == label
        )
        has_clone[query_id] = bool(relevant)
        features = features_for_snippet(bundle, query_id)
        ranked: list[RankedResult] = rank_query(
            features, bundle, ranker, candidate_ids=pool, pair_cache=cache
        )
        ranked_ids = tuple(r.snippet_id for r in ranked)
        judgments.append(QueryJudgment(query_id, ranked_ids, relevant))
        predictions.append((query_id, ranked_ids[0] if ranked_ids else None))
    if not judgments:
        raise ValueError(f"no usable queries in mode {mode}")
    metrics = retrieval_metrics(judgments, ks)
    clone = clone_metrics(predictions, labels, has_clone) if with_clone else None
    return EvalRun(ranker, mode, metrics, clone, judgments, warnings)


# --- measure correlation ---------------------------------------------------------


def correlation_report(
    bundle: IndexBundle,
    pairs_per_repeat: int = 1000,
    repeats: int = 20,
    seed: int | None = None,
) -> dict:
    """Pearson r between the three measures over random snippet pairs.

    Pairs whose tree distance is unavailable are dropped from the repeat so
    all three samples stay aligned. Zero-variance repeats are undefined and
    excluded from the average; the count of such repeats is reported.
    """
    from .dynamic import io_similarity
    from .tokens import token_similarity

    ids = bundle.corpus.ids()
    if len(ids) < 2:
        raise ValueError("correlation needs at least two snippets")
    rng = random.Random(bundle.config.rng_seed if seed is None else seed)
    cache = PairCache()
    pair_names = ("token_ast", "token_io", "ast_io")
    sums = {name: 0.0 for name in pair_names}
    defined = {name: 0 for name in pair_names}
    sample_sizes: list[int] = []
    for _ in range(repeats):
        xs: list[float] = []  # d_token
        ys: list[float] = []  # d_ast
        zs: list[float] = []  # d_io
        for _ in range(pairs_per_repeat):
            a, b = rng.sample(ids, 2)
            tree_a = bundle.asts.by_snippet.get(a)
            tree_b = bundle.asts.by_snippet.get(b)
            if tree_a is None or tree_b is None:
                continue
            xs.append(token_similarity(bundle.tokens.by_snippet[a], bundle.tokens.by_snippet[b]))
            ys.append(float(cache.distance(a, tree_a, b, tree_b)))
            zs.append(io_similarity(bundle.io.profiles.get(a, ()), bundle.io.profiles.get(b, ())))
        sample_sizes.append(len(xs))
        for name, (u, v) in {
            "token_ast": (xs, ys),
            "token_io": (xs, zs),
            "ast_io": (ys, zs),
        }.items():
            try:
                r = statistics.correlation(u, v)
            except statistics.StatisticsError:
                continue
            sums[name] += r
            defined[name] += 1
    return {
        "pairs_per_repeat": pairs_per_repeat,
        "repeats": repeats,
        "sample_sizes": sample_sizes,
        "r": {
            name: (sums[name] / defined[name]) if defined[name] else None
            for name in pair_names
        },
        "undefined_repeats": {name: repeats - defined[name] for name in pair_names},
    }


# --- report files -----------------------------------------------------------------


def _pct(value: float) -> str:
    return f"{100.0 * value:.1f}"


def eval_report_json(runs: Sequence[EvalRun]) -> str:
    payload = []
    for run in runs:
        entry = {
            "ranker": run.ranker,
            "mode": run.mode,
            "metrics": run.metrics,
            "warnings": run.warnings,
        }
        if run.clone is not None:
            entry["clone"] = run.clone
        payload.append(entry)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def eval_report_csv(runs: Sequence[EvalRun]) -> str:
    """One row per run; percentages with one decimal, like the write-ups."""
    ks = sorted(runs[0].metrics["p"]) if runs else list(DEFAULT_KS)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["ranker", "mode", "MRR"]
    header += [f"P@{k}" for k in ks]
    header += [f"SR@{k}" for k in ks]
    writer.writerow(header)
    for run in runs:
        row = [run.ranker, run.mode, _pct(run.metrics["mrr"])]
        row += [_pct(run.metrics["p"][k]) for k in ks]
        row += [_pct(run.metrics["sr"][k]) for k in ks]
        writer.writerow(row)
    return buf.getvalue()


def clone_report_csv(runs: Sequence[EvalRun]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["ranker", "mode", "precision", "recall", "f1", "c_plus", "nc_plus", "c_minus"])
    for run in runs:
        if run.clone is None:
            continue
        clone = run.clone
        writer.writerow(
            [
                run.ranker,
                run.mode,
                _pct(clone["precision"]),
                _pct(clone["recall"]),
                _pct(clone["f1"]),
                clone["c_plus"],
                clone["nc_plus"],
                clone["c_minus"],
            ]
        )
    return buf.getvalue()


def correlation_report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
