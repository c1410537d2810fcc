"""AST index: one generic tree per parseable snippet."""

from __future__ import annotations

import json

from ..corpus import Config, Corpus
from . import parse_to_gast
from .nodes import GastNode, gast_from_obj, gast_to_json


class AstIndex:
    def __init__(self, by_snippet: dict[str, GastNode]):
        self.by_snippet = dict(sorted(by_snippet.items()))
        self.sizes = {sid: tree.size() for sid, tree in self.by_snippet.items()}

    def __contains__(self, snippet_id: str) -> bool:
        return snippet_id in self.by_snippet

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AstIndex) and self.by_snippet == other.by_snippet

    def to_jsonl(self) -> str:
        lines = []
        for sid, tree in self.by_snippet.items():
            record = {"gast": json.loads(gast_to_json(tree)), "id": sid, "size": tree.size()}
            lines.append(json.dumps(record, sort_keys=True))
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_jsonl(cls, text: str) -> "AstIndex":
        by_snippet: dict[str, GastNode] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
                tree = gast_from_obj(raw["gast"])
                if raw.get("size") != tree.size():
                    raise ValueError(f"size field mismatch for {raw.get('id')}")
                by_snippet[raw["id"]] = tree
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"ast.jsonl line {lineno}: {exc}") from exc
        return cls(by_snippet)


def build_ast_index(corpus: Corpus, config: Config) -> tuple[AstIndex, list[str]]:
    """Parse every snippet; unparseable ones are excluded with a warning."""
    del config  # parsing has no knobs today; kept for interface symmetry
    warnings: list[str] = []
    by_snippet: dict[str, GastNode] = {}
    for rec in corpus:
        try:
            by_snippet[rec.id] = parse_to_gast(rec.source, rec.language)
        except ValueError as exc:
            warnings.append(f"{rec.id}: not parseable, excluded from AST index ({exc})")
    return AstIndex(by_snippet), warnings
