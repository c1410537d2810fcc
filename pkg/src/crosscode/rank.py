"""Candidate retrieval and multi-measure ranking.

Search fetches a top-N list per measure (token, AST, IO), merges them, and
ranks the merged pool by non-dominated sorting: candidate x dominates y when
x is at least as good on every measure and strictly better on one. "Good"
means higher token similarity, lower tree edit distance, higher IO
similarity. Within a front, candidates order by their best normalized
distance to the ideal:

    token: 1 - d_token      io: 1 - d_io      ast: d_ast / max_ast

with ``max_ast`` the largest tree distance in the merged pool (at least 1).
A measure that is unavailable for a candidate counts as worst (0 similarity,
``max_ast`` distance). Final ties order by snippet id.

The KD baseline embeds candidates at those normalized coordinates and sorts
by Euclidean distance to the origin — one scalar, no fronts.
"""

from __future__ import annotations

import dataclasses
import math
from typing import Iterable, Literal, Sequence

from . import dynamic, tokens
from .corpus import Config, Language
from .gast import GastNode, tree_edit_distance
from .tokens import TokenSet

Measure = Literal["token", "ast", "io"]
ALL_MEASURES: tuple[Measure, ...] = ("token", "ast", "io")

RANKERS = ("cosal", "token_only", "ast_only", "io_only", "static_only", "kd_baseline")


@dataclasses.dataclass(frozen=True)
class SimilarityTriple:
    """Per-candidate measurements; None marks an unavailable measure."""

    d_token: float
    d_ast: int | None
    d_io: float | None


@dataclasses.dataclass(frozen=True)
class NormalizationContext:
    max_ast: int  # largest d_ast among the merged candidates, >= 1

    def __post_init__(self) -> None:
        if self.max_ast < 1:
            raise ValueError("max_ast must be >= 1")


@dataclasses.dataclass(frozen=True)
class RankedResult:
    snippet_id: str
    rank: int  # 1-based
    front: int  # 0-based; always 0 for single-scalar rankers
    triple: SimilarityTriple


def normalized_distance(triple: SimilarityTriple, measure: Measure, ctx: NormalizationContext) -> float:
    """Distance to the ideal on one measure, in [0, 1] (0 is perfect)."""
    if measure == "token":
        value = 1.0 - triple.d_token
    elif measure == "io":
        value = 1.0 - (triple.d_io if triple.d_io is not None else 0.0)
    elif measure == "ast":
        d_ast = triple.d_ast if triple.d_ast is not None else ctx.max_ast
        value = d_ast / ctx.max_ast
    else:  # pragma: no cover
        raise ValueError(f"unknown measure: {measure}")
    return min(1.0, max(0.0, value))


def tie_break_key(
    triple: SimilarityTriple,
    ctx: NormalizationContext,
    measures: Sequence[Measure] = ALL_MEASURES,
) -> float:
    """The candidate's best (smallest) normalized distance across measures."""
    return min(normalized_distance(triple, m, ctx) for m in measures)


def dominates(
    x: SimilarityTriple,
    y: SimilarityTriple,
    ctx: NormalizationContext,
    measures: Sequence[Measure] = ALL_MEASURES,
) -> int:
    """+1 if x dominates y, -1 if y dominates x, 0 otherwise."""
    x_better = False
    y_better = False
    for m in measures:
        dx = normalized_distance(x, m, ctx)
        dy = normalized_distance(y, m, ctx)
        if dx < dy:
            x_better = True
        elif dy < dx:
            y_better = True
    if x_better and not y_better:
        return 1
    if y_better and not x_better:
        return -1
    return 0


def pareto_fronts(
    candidates: Sequence[tuple[str, SimilarityTriple]],
    ctx: NormalizationContext,
    measures: Sequence[Measure] = ALL_MEASURES,
) -> list[list[int]]:
    """Indices grouped into fronts by fast non-dominated sorting."""
    n = len(candidates)
    dominated_by: list[list[int]] = [[] for _ in range(n)]  # i dominates these
    domination_count = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            rel = dominates(candidates[i][1], candidates[j][1], ctx, measures)
            if rel > 0:
                dominated_by[i].append(j)
                domination_count[j] += 1
            elif rel < 0:
                dominated_by[j].append(i)
                domination_count[i] += 1
    fronts: list[list[int]] = []
    current = [i for i in range(n) if domination_count[i] == 0]
    while current:
        fronts.append(current)
        following: list[int] = []
        for i in current:
            for j in dominated_by[i]:
                domination_count[j] -= 1
                if domination_count[j] == 0:
                    following.append(j)
        current = following
    return fronts


def non_dominated_rank(
    candidates: Sequence[tuple[str, SimilarityTriple]],
    ctx: NormalizationContext,
    measures: Sequence[Measure] = ALL_MEASURES,
) -> list[RankedResult]:
    """Full ranking: front index first, then tie-break key, then id."""
    results: list[RankedResult] = []
    for front_index, front in enumerate(pareto_fronts(candidates, ctx, measures)):
        ordered = sorted(
            front,
            key=lambda i: (tie_break_key(candidates[i][1], ctx, measures), candidates[i][0]),
        )
        for i in ordered:
            snippet_id, triple = candidates[i]
            results.append(RankedResult(snippet_id, len(results) + 1, front_index, triple))
    return results


def kd_baseline_rank(
    candidates: Sequence[tuple[str, SimilarityTriple]],
    ctx: NormalizationContext,
) -> list[RankedResult]:
    """Rank by Euclidean distance to the ideal point in normalized space."""

    def distance(triple: SimilarityTriple) -> float:
        return math.sqrt(sum(normalized_distance(triple, m, ctx) ** 2 for m in ALL_MEASURES))

    ordered = sorted(candidates, key=lambda c: (distance(c[1]), c[0]))
    return [
        RankedResult(snippet_id, i + 1, 0, triple)
        for i, (snippet_id, triple) in enumerate(ordered)
    ]


# --- retrieval over indices ------------------------------------------------------


@dataclasses.dataclass
class QueryFeatures:
    """Everything the rankers need to know about the query."""

    tokens: TokenSet
    gast: GastNode | None
    profiles: tuple[dynamic.IoProfile, ...]
    language: Language | None = None
    snippet_id: str | None = None  # set when the query is itself in the corpus


class PairCache:
    """Memoizes tree edit distances; symmetric keys."""

    def __init__(self) -> None:
        self._cache: dict[tuple[str, str], int] = {}

    def distance(self, id_a: str, tree_a: GastNode, id_b: str, tree_b: GastNode) -> int:
        key = (id_a, id_b) if id_a <= id_b else (id_b, id_a)
        found = self._cache.get(key)
        if found is None:
            found = tree_edit_distance(tree_a, tree_b)
            self._cache[key] = found
        return found


def _candidate_pool(bundle, query: QueryFeatures, candidate_ids: Iterable[str] | None) -> list[str]:
    pool = list(candidate_ids) if candidate_ids is not None else bundle.corpus.ids()
    if query.snippet_id is not None:
        pool = [sid for sid in pool if sid != query.snippet_id]
    return sorted(pool)


def per_measure_candidates(
    query: QueryFeatures,
    bundle,
    measure: Measure,
    top_n: int,
    candidate_ids: Iterable[str] | None = None,
    pair_cache: PairCache | None = None,
) -> list[tuple[str, float]]:
    """Top-N candidates under a single measure.

    Token and IO lists sort by similarity descending; the AST list sorts by
    distance ascending. Zero-score candidates pad the tail in id order, so
    the result length is min(top_n, pool) — except for the AST measure, where
    snippets without a parsed tree (or a query without one) cannot be scored
    at all and are left out.
    """
    pool = _candidate_pool(bundle, query, candidate_ids)
    scored: list[tuple[str, float]]
    if measure == "token":
        scored = [
            (sid, tokens.token_similarity(query.tokens, bundle.tokens.by_snippet[sid]))
            for sid in pool
            if sid in bundle.tokens.by_snippet
        ]
        scored.sort(key=lambda item: (-item[1], item[0]))
    elif measure == "io":
        scored = []
        for sid in pool:
            profiles = bundle.io.profiles.get(sid, ())
            scored.append((sid, dynamic.io_similarity(query.profiles, profiles)))
        scored.sort(key=lambda item: (-item[1], item[0]))
    elif measure == "ast":
        if query.gast is None:
            return []
        cache = pair_cache or PairCache()
        query_key = query.snippet_id or "\x00query"
        scored = []
        for sid in pool:
            tree = bundle.asts.by_snippet.get(sid)
            if tree is None:
                continue
            scored.append((sid, float(cache.distance(query_key, query.gast, sid, tree))))
        scored.sort(key=lambda item: (item[1], item[0]))
    else:  # pragma: no cover
        raise ValueError(f"unknown measure: {measure}")
    return scored[:top_n]


def merge_candidates(
    query: QueryFeatures,
    bundle,
    per_measure: dict[Measure, list[tuple[str, float]]],
    pair_cache: PairCache | None = None,
) -> tuple[list[tuple[str, SimilarityTriple]], NormalizationContext]:
    """Union the per-measure lists and complete every candidate's triple."""
    merged_ids = sorted({sid for lst in per_measure.values() for sid, _ in lst})
    cache = pair_cache or PairCache()
    query_key = query.snippet_id or "\x00query"
    candidates: list[tuple[str, SimilarityTriple]] = []
    for sid in merged_ids:
        token_sets = bundle.tokens.by_snippet
        d_token = (
            tokens.token_similarity(query.tokens, token_sets[sid]) if sid in token_sets else 0.0
        )
        tree = bundle.asts.by_snippet.get(sid)
        d_ast: int | None = None
        if query.gast is not None and tree is not None:
            d_ast = cache.distance(query_key, query.gast, sid, tree)
        profiles = bundle.io.profiles.get(sid, ())
        d_io: float | None = None
        if query.profiles and profiles:
            d_io = dynamic.io_similarity(query.profiles, profiles)
        candidates.append((sid, SimilarityTriple(d_token, d_ast, d_io)))
    max_ast = max((t.d_ast for _, t in candidates if t.d_ast is not None), default=1)
    return candidates, NormalizationContext(max_ast=max(1, max_ast))


_RANKER_MEASURES: dict[str, tuple[Measure, ...]] = {
    "cosal": ("token", "ast", "io"),
    "static_only": ("token", "ast"),
    "kd_baseline": ("token", "ast", "io"),
    "token_only": ("token",),
    "ast_only": ("ast",),
    "io_only": ("io",),
}


def rank_query(
    query: QueryFeatures,
    bundle,
    ranker: str = "cosal",
    candidate_ids: Iterable[str] | None = None,
    pair_cache: PairCache | None = None,
) -> list[RankedResult]:
    """The full per-query pipeline: per-measure top-N, merge, rank."""
    if ranker not in RANKERS:
        raise ValueError(f"unknown ranker {ranker!r}; expected one of {RANKERS}")
    config: Config = bundle.config
    cache = pair_cache or PairCache()
    measures = _RANKER_MEASURES[ranker]
    lists: dict[Measure, list[tuple[str, float]]] = {
        m: per_measure_candidates(query, bundle, m, config.top_n, candidate_ids, cache)
        for m in measures
    }
    if ranker in ("cosal", "static_only"):
        candidates, ctx = merge_candidates(query, bundle, lists, cache)
        return non_dominated_rank(candidates, ctx, measures)
    if ranker == "kd_baseline":
        candidates, ctx = merge_candidates(query, bundle, lists, cache)
        return kd_baseline_rank(candidates, ctx)
    # Single-measure rankers are just the per-measure ordering.
    measure = measures[0]
    results = []
    for i, (sid, score) in enumerate(lists[measure]):
        triple = SimilarityTriple(
            d_token=score if measure == "token" else 0.0,
            d_ast=int(score) if measure == "ast" else None,
            d_io=score if measure == "io" else None,
        )
        results.append(RankedResult(sid, i + 1, 0, triple))
    return results


def features_for_snippet(bundle, snippet_id: str) -> QueryFeatures:
    """Query features for a snippet already present in the indices."""
    record = bundle.corpus.get(snippet_id)
    return QueryFeatures(
        tokens=bundle.tokens.by_snippet[snippet_id],
        gast=bundle.asts.by_snippet.get(snippet_id),
        profiles=bundle.io.profiles.get(snippet_id, ()),
        language=record.language,
        snippet_id=snippet_id,
    )


def query_features_from_source(
    source: str,
    language: Language,
    config: Config,
    runners=None,
    snippet_id: str | None = None,
) -> tuple[QueryFeatures, list[str]]:
    """Extract fresh features for an external query snippet."""
    warnings: list[str] = []
    token_set = tokens.extract_tokens(source, language, config)
    if token_set.lossy:
        warnings.append("query source did not lex cleanly; tokens are best-effort")
    try:
        from . import gast as gast_mod

        tree = gast_mod.parse_to_gast(source, language)
    except ValueError as exc:
        tree = None
        warnings.append(f"query not parseable, AST measure unavailable ({exc})")
    profiles: tuple[dynamic.IoProfile, ...] = ()
    runner = runners.for_language(language) if runners is not None else None
    if runner is None:
        warnings.append(f"no {language.value} runner, behavior measure unavailable for query")
    else:
        record = _pseudo_record(source, language, snippet_id)
        segs = dynamic.segment(record, config)
        profiles = tuple(dynamic.profile_segment(runner, record, seg, config) for seg in segs)
        if not any(p.ok_count() > 0 for p in profiles):
            warnings.append("query produced no successful executions")
    return (
        QueryFeatures(
            tokens=token_set,
            gast=tree,
            profiles=profiles,
            language=language,
            snippet_id=snippet_id,
        ),
        warnings,
    )


def _pseudo_record(source: str, language: Language, snippet_id: str | None):
    from .corpus import SnippetRecord

    return SnippetRecord(
        id=snippet_id or "<query>",
        path="<query>",
        language=language,
        group_label=None,
        source=source,
    )
