"""Generic AST: language adapters, canonical JSON form, tree edit distance."""

from __future__ import annotations

import dataclasses

from ..corpus import Language
from .java_parser import JavaParseError, parse_java
from .nodes import KINDS, GastNode, gast_from_json, gast_from_obj, gast_to_json, node
from .py_parser import PyParseError, parse_python
from .ted import tree_edit_distance

ParseError = (JavaParseError, PyParseError)


@dataclasses.dataclass(frozen=True)
class FunctionFacts:
    """What the dynamic stage needs to know about one declared function."""

    name: str
    start_line: int
    end_line: int
    params: tuple[tuple[str, str], ...]  # (name, abstract type)
    stmt_count: int
    entry_ok: bool  # resolvable and invocable by name with positional args


def parse_to_gast(source: str, language: Language) -> GastNode:
    """Language-specific parse to the generic AST; raises on syntax errors."""
    if language == Language.PYTHON:
        return parse_python(source).gast
    if language == Language.JAVA:
        return parse_java(source).gast
    raise ValueError(f"unsupported language: {language}")  # pragma: no cover


def function_facts(source: str, language: Language) -> list[FunctionFacts]:
    if language == Language.PYTHON:
        return [
            FunctionFacts(
                name=f.name,
                start_line=f.start_line,
                end_line=f.end_line,
                params=f.params,
                stmt_count=f.stmt_count,
                entry_ok=f.top_level and f.callable_positionally,
            )
            for f in parse_python(source).functions
        ]
    if language == Language.JAVA:
        return [
            FunctionFacts(
                name=f.name,
                start_line=f.start_line,
                end_line=f.end_line,
                params=f.params,
                stmt_count=f.stmt_count,
                entry_ok=True,
            )
            for f in parse_java(source).functions
        ]
    raise ValueError(f"unsupported language: {language}")  # pragma: no cover


def list_functions(source: str, language: Language) -> list[tuple[str, int, int]]:
    return [(f.name, f.start_line, f.end_line) for f in function_facts(source, language)]


from .index import AstIndex, build_ast_index  # noqa: E402  (uses parse_to_gast)

__all__ = [
    "KINDS",
    "GastNode",
    "node",
    "gast_to_json",
    "gast_from_json",
    "gast_from_obj",
    "tree_edit_distance",
    "parse_to_gast",
    "function_facts",
    "list_functions",
    "FunctionFacts",
    "ParseError",
    "JavaParseError",
    "PyParseError",
    "AstIndex",
    "build_ast_index",
]
