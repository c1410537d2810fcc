"""Corpus model: snippet records, global configuration, corpus loading.

A corpus is a set of source snippets, each tagged with a language and an
optional group label (snippets sharing a label are considered functionally
equivalent for evaluation). Snippets are identified by their path relative
to the corpus root, in POSIX form, and all iteration is in sorted-id order
so that every downstream artifact is deterministic.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import json
from pathlib import Path, PurePosixPath
from typing import Iterator, Mapping


class Language(str, enum.Enum):
    JAVA = "java"
    PYTHON = "python"


_EXT_TO_LANGUAGE = {".java": Language.JAVA, ".py": Language.PYTHON}


@dataclasses.dataclass(frozen=True)
class FunctionSpan:
    """A named function and its 1-based inclusive line span."""

    name: str
    start: int
    end: int


@dataclasses.dataclass(frozen=True)
class SnippetRecord:
    id: str
    path: str
    language: Language
    group_label: str | None
    source: str
    functions: tuple[FunctionSpan, ...] = ()


class Corpus:
    """Immutable mapping of snippet id -> SnippetRecord."""

    def __init__(self, snippets: Mapping[str, SnippetRecord] | list[SnippetRecord]):
        if isinstance(snippets, Mapping):
            records = list(snippets.values())
        else:
            records = list(snippets)
        by_id: dict[str, SnippetRecord] = {}
        for rec in records:
            if rec.id in by_id:
                raise ValueError(f"duplicate snippet id: {rec.id!r}")
            by_id[rec.id] = rec
        self._by_id = dict(sorted(by_id.items()))

    def __len__(self) -> int:
        return len(self._by_id)

    def __iter__(self) -> Iterator[SnippetRecord]:
        return iter(self._by_id.values())

    def __contains__(self, snippet_id: str) -> bool:
        return snippet_id in self._by_id

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Corpus) and self._by_id == other._by_id

    def ids(self) -> list[str]:
        return list(self._by_id)

    def get(self, snippet_id: str) -> SnippetRecord:
        return self._by_id[snippet_id]

    def by_language(self, language: Language) -> list[SnippetRecord]:
        return [r for r in self if r.language == language]


@dataclasses.dataclass(frozen=True)
class Config:
    """Global knobs shared by every pipeline stage.

    min_tok_len
        Tokens shorter than this are dropped by the token pipeline.
    min_stmts
        Functions with fewer executable statements are not profiled.
    args_max
        Upper bound on generated argument vectors per function signature.
    top_n
        Per-measure candidate list length used before merging.
    sim_t
        Exact-match threshold used by clustering-style clone baselines;
        carried in the config for parity, not applied by search.
    exec_timeout_ms
        Per-execution budget enforced inside runners.
    rng_seed
        Seed for every stochastic step (argument generation, sampling).
    """

    min_tok_len: int = 3
    min_stmts: int = 1
    args_max: int = 256
    top_n: int = 100
    sim_t: float = 1.0
    exec_timeout_ms: int = 2000
    rng_seed: int = 1729

    def __post_init__(self) -> None:
        for field in ("min_tok_len", "min_stmts", "args_max", "top_n", "exec_timeout_ms"):
            value = getattr(self, field)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{field} must be an integer >= 1, got {value!r}")
        if not 0.0 <= self.sim_t <= 1.0:
            raise ValueError(f"sim_t must be in [0, 1], got {self.sim_t!r}")
        if not isinstance(self.rng_seed, int):
            raise ValueError(f"rng_seed must be an integer, got {self.rng_seed!r}")

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Config":
        raw = json.loads(text)
        if not isinstance(raw, dict):
            raise ValueError("config JSON must be an object")
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**raw)


@dataclasses.dataclass
class LoadReport:
    loaded: int = 0
    warnings: list[str] = dataclasses.field(default_factory=list)

    def warn(self, message: str) -> None:
        self.warnings.append(message)


def _relative_posix(path: Path, root: Path) -> str:
    return PurePosixPath(path.relative_to(root)).as_posix()


def _group_from_layout(rel_id: str) -> str | None:
    # <root>/<group>/.../file -> group; files directly under root are unlabeled.
    parts = PurePosixPath(rel_id).parts
    return parts[0] if len(parts) >= 2 else None


def _function_spans(source: str, language: Language) -> tuple[FunctionSpan, ...]:
    # Best effort; parse failures simply leave the span list empty.
    from . import gast

    try:
        return tuple(
            FunctionSpan(name, start, end)
            for name, start, end in gast.list_functions(source, language)
        )
    except Exception:
        return ()


def _read_manifest(manifest: Path, report: LoadReport) -> list[tuple[str, str, str | None]]:
    rows: list[tuple[str, str, str | None]] = []
    with open(manifest, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        required = {"path", "language", "group_label"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise ValueError(
                f"manifest {manifest} must have columns path,language,group_label"
            )
        for lineno, row in enumerate(reader, start=2):
            label = (row["group_label"] or "").strip() or None
            rows.append((row["path"].strip(), row["language"].strip().lower(), label))
            del lineno
    return rows


def load_corpus(
    root: str | Path,
    manifest: str | Path | None = None,
    config: Config | None = None,
) -> tuple[Corpus, LoadReport]:
    """Load snippets from a directory tree or an explicit manifest CSV.

    Without a manifest, every ``*.java`` / ``*.py`` file below ``root`` is
    loaded; the first directory component below the root is the group label.
    With a manifest (columns ``path,language,group_label``; paths relative to
    ``root``), only the listed files are loaded. Unreadable, non-UTF-8 or
    unknown-language files are skipped and reported, never fatal.
    """
    del config  # reserved for future per-load options; loading is config-free
    root = Path(root)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus root {root} is not a directory")
    report = LoadReport()
    records: list[SnippetRecord] = []

    if manifest is not None:
        entries = _read_manifest(Path(manifest), report)
        plan: list[tuple[Path, str, Language | None, str | None]] = []
        for rel, lang_name, label in entries:
            try:
                language: Language | None = Language(lang_name)
            except ValueError:
                language = None
            plan.append((root / rel, PurePosixPath(rel).as_posix(), language, label))
    else:
        plan = []
        for path in sorted(root.rglob("*")):
            if not path.is_file():
                continue
            language = _EXT_TO_LANGUAGE.get(path.suffix)
            if language is None:
                continue
            rel_id = _relative_posix(path, root)
            plan.append((path, rel_id, language, _group_from_layout(rel_id)))

    for path, rel_id, language, label in plan:
        if language is None:
            report.warn(f"{rel_id}: unknown language, skipped")
            continue
        try:
            source = path.read_bytes().decode("utf-8")
        except FileNotFoundError:
            report.warn(f"{rel_id}: missing file, skipped")
            continue
        except OSError as exc:
            report.warn(f"{rel_id}: unreadable ({exc}), skipped")
            continue
        except UnicodeDecodeError:
            report.warn(f"{rel_id}: not valid UTF-8, skipped")
            continue
        records.append(
            SnippetRecord(
                id=rel_id,
                path=str(path),
                language=language,
                group_label=label,
                source=source,
                functions=_function_spans(source, language),
            )
        )

    corpus = Corpus(records)
    report.loaded = len(corpus)
    return corpus, report


# --- corpus.jsonl (used by the index directory) ------------------------------


def corpus_to_jsonl(corpus: Corpus) -> str:
    lines = []
    for rec in corpus:
        lines.append(
            json.dumps(
                {
                    "functions": [[f.name, f.start, f.end] for f in rec.functions],
                    "group_label": rec.group_label,
                    "id": rec.id,
                    "language": rec.language.value,
                    "path": rec.path,
                    "source": rec.source,
                },
                sort_keys=True,
                ensure_ascii=False,
            )
        )
    return "".join(line + "\n" for line in lines)


def corpus_from_jsonl(text: str) -> Corpus:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
            records.append(
                SnippetRecord(
                    id=raw["id"],
                    path=raw["path"],
                    language=Language(raw["language"]),
                    group_label=raw["group_label"],
                    source=raw["source"],
                    functions=tuple(FunctionSpan(n, s, e) for n, s, e in raw["functions"]),
                )
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"corpus.jsonl line {lineno}: {exc}") from exc
    return Corpus(records)
