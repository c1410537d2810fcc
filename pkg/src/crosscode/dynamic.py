"""Behavioral profiling: segments, generated inputs, IO similarity.

Every profiled snippet gets one profile per *segment* (a function with at
least ``min_stmts`` executable statements). A profile is an ordered table of
observations: argument vector -> outcome. Behavioral similarity between two
segments is the fraction of matching ok outputs over the argument vectors
*both* were observed on; snippet-level similarity averages, for each query
segment, its best match among the candidate's segments:

    d_io(q, s) = (1/|Q|) * sum_i max_k sim(q_i, s_k)

which is deliberately asymmetric: a snippet that does everything the query
does scores 1.0 even if it also does more.

Unannotated parameters start as ``unknown`` and are refined by probing: five
candidate assignments (round-robin over int, float, bool, string, seq[int],
phase-shifted per parameter) each execute a small probe prefix, and the
assignment with the most successes wins, ties to the earliest. Probe vectors
are a prefix of the final vector stream, so refinement adds no
non-determinism to the profile.
"""

from __future__ import annotations

import dataclasses
import json
import random
from decimal import Decimal
from typing import Sequence

from . import gast, normvalue
from .corpus import Config, Corpus, SnippetRecord
from .normvalue import MapValue, NormValue
from .runners import Outcome, Runner, RunnerSet

ArgVector = tuple[NormValue, ...]

UNKNOWN_CANDIDATES = ("int", "float", "bool", "string", "seq[int]")
_PROBE_VECTORS = 4


@dataclasses.dataclass(frozen=True)
class Segment:
    snippet_id: str
    segment_id: str
    entry: str
    sig: tuple[str, ...]


@dataclasses.dataclass(frozen=True)
class Observation:
    args: ArgVector
    status: str  # ok | error | timeout
    value: NormValue | None = None
    error_kind: str | None = None


@dataclasses.dataclass(frozen=True)
class IoProfile:
    snippet_id: str
    segment_id: str
    entry: str
    sig: tuple[str, ...]
    seed: int
    obs: tuple[Observation, ...]

    def ok_count(self) -> int:
        return sum(1 for o in self.obs if o.status == "ok")


def segment(record: SnippetRecord, config: Config) -> list[Segment]:
    """Profiling units of a snippet: invocable functions of enough substance."""
    try:
        facts = gast.function_facts(record.source, record.language)
    except ValueError:
        return []
    segments: list[Segment] = []
    seen: dict[str, int] = {}
    for fact in facts:
        if not fact.entry_ok or fact.stmt_count < config.min_stmts:
            continue
        count = seen.get(fact.name, 0)
        seen[fact.name] = count + 1
        seg_id = fact.name if count == 0 else f"{fact.name}#{count}"
        sig = tuple(ptype for _, ptype in fact.params)
        segments.append(Segment(record.id, seg_id, fact.name, sig))
    return segments


# --- signature grammar -------------------------------------------------------


def parse_sig_type(text: str) -> tuple[str, tuple]:
    """Parse ``int | float | bool | string | unknown | seq[T] | map[K,V]``."""
    text = text.strip()
    if text in ("int", "float", "bool", "string", "unknown"):
        return (text, ())
    if text.startswith("seq[") and text.endswith("]"):
        return ("seq", (parse_sig_type(text[4:-1]),))
    if text.startswith("map[") and text.endswith("]"):
        inner = text[4:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            elif ch == "," and depth == 0:
                return ("map", (parse_sig_type(inner[:i]), parse_sig_type(inner[i + 1 :])))
        raise ValueError(f"map type needs two parameters: {text!r}")
    if text == "seq":
        return ("seq", (("unknown", ()),))
    raise ValueError(f"unknown signature type: {text!r}")


_STRING_ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789"


def _boundaries(parsed: tuple[str, tuple]) -> list[NormValue]:
    head, _ = parsed
    if head in ("int", "float"):
        return [Decimal(0), Decimal(-1), Decimal(1)]
    if head == "bool":
        return [False, True]
    if head == "string":
        return [""]
    if head == "seq":
        return [()]
    if head == "map":
        return [MapValue(())]
    if head == "unknown":
        return [Decimal(0)]
    raise AssertionError(head)


def _draw(parsed: tuple[str, tuple], rng: random.Random, param_index: int, draw_index: int) -> NormValue:
    head, params = parsed
    if head == "unknown":
        choice = UNKNOWN_CANDIDATES[(draw_index + param_index) % len(UNKNOWN_CANDIDATES)]
        return _draw(parse_sig_type(choice), rng, param_index, draw_index)
    if head == "int":
        return Decimal(rng.randint(-256, 256))
    if head == "float":
        return Decimal(str(round(rng.uniform(-256.0, 256.0), 6)))
    if head == "bool":
        return rng.random() < 0.5
    if head == "string":
        length = rng.randint(0, 8)
        return "".join(rng.choice(_STRING_ALPHABET) for _ in range(length))
    if head == "seq":
        length = rng.randint(0, 8)
        return tuple(_draw(params[0], rng, param_index, draw_index) for _ in range(length))
    if head == "map":
        size = rng.randint(0, 4)
        items = tuple(
            (_draw(params[0], rng, param_index, draw_index), _draw(params[1], rng, param_index, draw_index))
            for _ in range(size)
        )
        return MapValue(items)
    raise AssertionError(head)


def _sig_rng(sig: Sequence[str], seed: int) -> random.Random:
    import hashlib

    digest = hashlib.sha256(f"{seed}|{','.join(sig)}".encode("utf-8")).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def generate_args(sig: Sequence[str], seed: int, n: int) -> list[ArgVector]:
    """Deterministic argument vectors: boundary prefix, then seeded draws.

    ``generate_args(sig, seed, m)`` is a prefix of ``generate_args(sig, seed,
    n)`` for m <= n, which profiling relies on.
    """
    parsed = [parse_sig_type(t) for t in sig]
    if not parsed:
        return [()] * n
    vectors: list[ArgVector] = []
    per_param = [_boundaries(p) for p in parsed]
    for i in range(max(len(b) for b in per_param)):
        vectors.append(tuple(blist[i % len(blist)] for blist in per_param))
    rng = _sig_rng(sig, seed)
    draw_index = 0
    while len(vectors) < n:
        vectors.append(
            tuple(_draw(p, rng, pi, draw_index) for pi, p in enumerate(parsed))
        )
        draw_index += 1
    return vectors[:n]


# --- profiling ----------------------------------------------------------------


def _execute_vectors(
    runner: Runner,
    code: str,
    entry: str,
    vectors: list[ArgVector],
    config: Config,
) -> list[Observation]:
    observations: list[Observation] = []
    seen: set[str] = set()
    for vec in vectors:
        key = normvalue.encode(vec)
        if key in seen:
            continue
        seen.add(key)
        outcome: Outcome = runner.execute(code, entry, vec, config.exec_timeout_ms)
        observations.append(
            Observation(args=vec, status=outcome.status, value=outcome.value, error_kind=outcome.error_kind)
        )
    return observations


def _refine_sig(
    runner: Runner, code: str, seg: Segment, config: Config
) -> tuple[str, ...]:
    """Choose concrete types for unknown parameters by probing."""
    if "unknown" not in seg.sig:
        return seg.sig
    best_score = -1
    best_sig = None
    for k in range(len(UNKNOWN_CANDIDATES)):
        trial = tuple(
            UNKNOWN_CANDIDATES[(k + i) % len(UNKNOWN_CANDIDATES)] if t == "unknown" else t
            for i, t in enumerate(seg.sig)
        )
        vectors = generate_args(trial, config.rng_seed, min(_PROBE_VECTORS, config.args_max))
        obs = _execute_vectors(runner, code, seg.entry, vectors, config)
        score = sum(1 for o in obs if o.status == "ok")
        if score > best_score:
            best_score = score
            best_sig = trial
    assert best_sig is not None
    return best_sig


def profile_segment(
    runner: Runner, record: SnippetRecord, seg: Segment, config: Config
) -> IoProfile:
    sig = _refine_sig(runner, record.source, seg, config)
    vectors = generate_args(sig, config.rng_seed, config.args_max)
    obs = _execute_vectors(runner, record.source, seg.entry, vectors, config)
    return IoProfile(
        snippet_id=record.id,
        segment_id=seg.segment_id,
        entry=seg.entry,
        sig=sig,
        seed=config.rng_seed,
        obs=tuple(obs),
    )


class IoIndex:
    """Profiles per snippet plus executability flags."""

    def __init__(self, profiles: dict[str, tuple[IoProfile, ...]], attempted: set[str] | None = None):
        self.profiles = dict(sorted(profiles.items()))
        # Snippets we tried to profile (had a runner); informational only.
        self.attempted = set(attempted or self.profiles)

    def executable(self, snippet_id: str) -> bool:
        return any(p.ok_count() > 0 for p in self.profiles.get(snippet_id, ()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IoIndex) and self.profiles == other.profiles

    def to_jsonl(self) -> str:
        lines = []
        for snippet_id in self.profiles:
            for prof in self.profiles[snippet_id]:
                obs_raw = []
                for o in prof.obs:
                    entry: dict = {
                        "args": [normvalue.to_jsonable(a) for a in o.args],
                        "status": o.status,
                    }
                    if o.status == "ok":
                        entry["value"] = normvalue.to_jsonable(o.value)
                    if o.error_kind is not None:
                        entry["error_kind"] = o.error_kind
                    obs_raw.append(entry)
                record = {
                    "id": prof.snippet_id,
                    "obs": obs_raw,
                    "seed": prof.seed,
                    "segment": prof.segment_id,
                    "sig": list(prof.sig),
                }
                lines.append(json.dumps(record, sort_keys=True, cls=_DecimalEncoder))
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_jsonl(cls, text: str) -> "IoIndex":
        profiles: dict[str, list[IoProfile]] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line, parse_float=Decimal, parse_int=Decimal)
                observations = []
                for o in raw["obs"]:
                    observations.append(
                        Observation(
                            args=tuple(normvalue.from_jsonable(a) for a in o["args"]),
                            status=o["status"],
                            value=normvalue.from_jsonable(o["value"]) if "value" in o else None,
                            error_kind=o.get("error_kind"),
                        )
                    )
                segment_id = raw["segment"]
                prof = IoProfile(
                    snippet_id=raw["id"],
                    segment_id=segment_id,
                    entry=segment_id.split("#", 1)[0],
                    sig=tuple(raw["sig"]),
                    seed=int(raw["seed"]),
                    obs=tuple(observations),
                )
                profiles.setdefault(prof.snippet_id, []).append(prof)
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"io_profiles.jsonl line {lineno}: {exc}") from exc
        return cls({sid: tuple(ps) for sid, ps in profiles.items()})


class _DecimalEncoder(json.JSONEncoder):
    """Decimals back to JSON numbers (ints exactly, floats via repr)."""

    def default(self, o):
        if isinstance(o, Decimal):
            if o == o.to_integral_value():
                return int(o)
            return float(o)
        return super().default(o)  # pragma: no cover


def build_io_index(
    corpus: Corpus, config: Config, runners: RunnerSet | None = None
) -> tuple[IoIndex, list[str]]:
    """Profile every snippet that has a runner for its language."""
    warnings: list[str] = []
    profiles: dict[str, tuple[IoProfile, ...]] = {}
    attempted: set[str] = set()
    runners = runners or RunnerSet()
    for rec in corpus:
        runner = runners.for_language(rec.language)
        if runner is None:
            warnings.append(f"{rec.id}: no {rec.language.value} runner, not profiled")
            continue
        attempted.add(rec.id)
        segs = segment(rec, config)
        if not segs:
            warnings.append(f"{rec.id}: no profileable functions")
            continue
        profs = tuple(profile_segment(runner, rec, seg, config) for seg in segs)
        profiles[rec.id] = profs
        if not any(p.ok_count() > 0 for p in profs):
            warnings.append(f"{rec.id}: no successful executions, behavior unavailable")
    return IoIndex(profiles, attempted), warnings


# --- similarity -----------------------------------------------------------------


def _sigs_unify(a: Sequence[str], b: Sequence[str]) -> bool:
    if len(a) != len(b):
        return False
    return all(x == y or "unknown" in (x, y) for x, y in zip(a, b))


def segment_similarity(q: IoProfile, s: IoProfile) -> float:
    """Fraction of matching ok outputs over the shared argument vectors."""
    if not _sigs_unify(q.sig, s.sig):
        return 0.0
    s_by_args = {normvalue.encode(o.args): o for o in s.obs}
    compared = 0
    matched = 0
    for q_obs in q.obs:
        s_obs = s_by_args.get(normvalue.encode(q_obs.args))
        if s_obs is None:
            continue
        compared += 1
        if (
            q_obs.status == "ok"
            and s_obs.status == "ok"
            and normvalue.equal(q_obs.value, s_obs.value)
        ):
            matched += 1
    if compared == 0:
        return 0.0
    return matched / compared


def io_similarity(
    query_profiles: Sequence[IoProfile], candidate_profiles: Sequence[IoProfile]
) -> float:
    """Mean over query segments of the best-matching candidate segment."""
    if not query_profiles or not candidate_profiles:
        return 0.0
    total = 0.0
    for q in query_profiles:
        total += max(segment_similarity(q, s) for s in candidate_profiles)
    return total / len(query_profiles)
