"""Index directory persistence.

An index directory holds five files, all deterministic byte-for-byte:

    corpus.jsonl        id, path, language, group label, source, functions
    tokens.jsonl        id, sorted token list
    ast.jsonl           id, generic AST, size
    io_profiles.jsonl   one line per profiled segment
    config.json         the Config the indices were built with

Writes stage into ``<out>.tmp`` and swap atomically, so an interrupted save
leaves either the previous directory or a ``.tmp`` orphan — never a corrupt
index.
"""

from __future__ import annotations

import dataclasses
import shutil
import uuid
from pathlib import Path

from .corpus import Config, Corpus, corpus_from_jsonl, corpus_to_jsonl
from .dynamic import IoIndex, build_io_index
from .gast import AstIndex, build_ast_index
from .runners import RunnerSet
from .tokens import TokenIndex, build_token_index

INDEX_FILES = ("corpus.jsonl", "tokens.jsonl", "ast.jsonl", "io_profiles.jsonl", "config.json")


@dataclasses.dataclass
class IndexBundle:
    corpus: Corpus
    tokens: TokenIndex
    asts: AstIndex
    io: IoIndex
    config: Config


def build_indices(
    corpus: Corpus,
    config: Config,
    runners: RunnerSet | None = None,
    with_dynamic: bool = True,
) -> tuple[IndexBundle, dict[str, list[str]]]:
    """All three indices in one pass; warnings keyed by stage."""
    token_index, token_warnings = build_token_index(corpus, config)
    ast_index, ast_warnings = build_ast_index(corpus, config)
    if with_dynamic:
        io_index, io_warnings = build_io_index(corpus, config, runners)
    else:
        io_index, io_warnings = IoIndex({}, set()), ["dynamic analysis disabled"]
    bundle = IndexBundle(corpus, token_index, ast_index, io_index, config)
    report = {"tokens": token_warnings, "ast": ast_warnings, "io": io_warnings}
    return bundle, report


def _write_staging(bundle: IndexBundle, stage: Path) -> None:
    stage.mkdir(parents=True)
    (stage / "corpus.jsonl").write_text(corpus_to_jsonl(bundle.corpus), "utf-8")
    (stage / "tokens.jsonl").write_text(bundle.tokens.to_jsonl(), "utf-8")
    (stage / "ast.jsonl").write_text(bundle.asts.to_jsonl(), "utf-8")
    (stage / "io_profiles.jsonl").write_text(bundle.io.to_jsonl(), "utf-8")
    (stage / "config.json").write_text(bundle.config.to_json(), "utf-8")


def _swap_into_place(stage: Path, out: Path) -> None:
    if out.exists():
        graveyard = out.with_name(out.name + f".old-{uuid.uuid4().hex[:8]}")
        out.rename(graveyard)
        stage.rename(out)
        shutil.rmtree(graveyard)
    else:
        stage.rename(out)


def save_index_dir(bundle: IndexBundle, out: str | Path) -> None:
    out = Path(out)
    stage = out.with_name(out.name + ".tmp")
    if stage.exists():
        shutil.rmtree(stage)
    _write_staging(bundle, stage)
    _swap_into_place(stage, out)


def load_index_dir(path: str | Path) -> IndexBundle:
    path = Path(path)
    missing = [name for name in INDEX_FILES if not (path / name).exists()]
    if missing:
        raise FileNotFoundError(f"{path} is not an index directory (missing {', '.join(missing)})")
    corpus = corpus_from_jsonl((path / "corpus.jsonl").read_text("utf-8"))
    token_index = TokenIndex.from_jsonl((path / "tokens.jsonl").read_text("utf-8"))
    ast_index = AstIndex.from_jsonl((path / "ast.jsonl").read_text("utf-8"))
    io_index = IoIndex.from_jsonl((path / "io_profiles.jsonl").read_text("utf-8"))
    config = Config.from_json((path / "config.json").read_text("utf-8"))
    return IndexBundle(corpus, token_index, ast_index, io_index, config)
