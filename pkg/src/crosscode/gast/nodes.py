"""Generic AST shared by all language adapters.

Nodes are unlabeled beyond a ``kind`` drawn from a closed set; identifiers,
literal values and operator names are deliberately erased so that tree edit
distance measures structure, not vocabulary. The serialized form is canonical:
two nodes are equal iff their JSON strings are byte-equal.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Any

KINDS = frozenset(
    {
        "file",
        "func",
        "class",
        "block",
        "if",
        "loop",
        "switch",
        "try",
        "with",
        "sync",
        "assign",
        "op",
        "call",
        "index",
        "var",
        "lit",
        "return",
        "raise",
        "break",
        "continue",
        "import",
        "assert",
        "del",
        "yield",
    }
)


@dataclasses.dataclass(frozen=True)
class GastNode:
    kind: str
    children: tuple["GastNode", ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown GAST kind: {self.kind!r}")
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children)


def node(kind: str, *children: GastNode) -> GastNode:
    return GastNode(kind, tuple(children))


def gast_to_json(root: GastNode) -> str:
    """Canonical serialization: fixed key order, no whitespace."""
    parts: list[str] = []
    _write(root, parts)
    return "".join(parts)


def _write(n: GastNode, parts: list[str]) -> None:
    parts.append('{"kind":')
    parts.append(json.dumps(n.kind))
    parts.append(',"children":[')
    for i, child in enumerate(n.children):
        if i:
            parts.append(",")
        _write(child, parts)
    parts.append("]}")


def gast_from_json(text: str) -> GastNode:
    """Parse a serialized GAST; errors carry a JSON-pointer-style path."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"GAST JSON is unparseable: {exc}") from exc
    return _from_obj(raw, "")


def gast_from_obj(raw: Any) -> GastNode:
    """Same as :func:`gast_from_json` but from already-parsed JSON data."""
    return _from_obj(raw, "")


def _from_obj(raw: Any, path: str) -> GastNode:
    where = path or "/"
    if not isinstance(raw, dict):
        raise ValueError(f"GAST node at {where} must be an object, got {type(raw).__name__}")
    extra = set(raw) - {"kind", "children"}
    if extra:
        raise ValueError(f"GAST node at {where} has unknown keys {sorted(extra)}")
    if "kind" not in raw:
        raise ValueError(f"GAST node at {where} is missing 'kind'")
    kind = raw["kind"]
    if not isinstance(kind, str) or kind not in KINDS:
        raise ValueError(f"GAST node at {where} has invalid kind {kind!r}")
    children_raw = raw.get("children", [])
    if not isinstance(children_raw, list):
        raise ValueError(f"GAST node at {where} has non-list children")
    children = tuple(
        _from_obj(child, f"{path}/children/{i}") for i, child in enumerate(children_raw)
    )
    return GastNode(kind, children)
