"""Python -> generic AST adapter, built on the stdlib ``ast`` module.

The mapping erases identifiers, literal values, operators and types and keeps
the statement/expression skeleton. A few normalizations keep Java and Python
sources comparable:

* name chains (``a.b.c``) collapse to a single ``var`` leaf, like Java's;
* comprehensions desugar to the loop/if nest they abbreviate;
* ``x += v`` becomes ``assign[x, op[x, v]]``;
* ternaries become ``if`` nodes with single-expression blocks;
* docstrings (and ``pass``) vanish — they are documentation, not structure.
"""

from __future__ import annotations

import ast
import dataclasses

from .nodes import GastNode, node


class PyParseError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class PyFunctionInfo:
    name: str
    start_line: int
    end_line: int
    params: tuple[tuple[str, str], ...]  # (param name, abstract type)
    stmt_count: int
    top_level: bool
    callable_positionally: bool


@dataclasses.dataclass(frozen=True)
class PyParse:
    gast: GastNode
    functions: tuple[PyFunctionInfo, ...]


_SIMPLE_ANN = {
    "int": "int",
    "float": "float",
    "bool": "bool",
    "str": "string",
    "list": "seq[unknown]",
    "tuple": "seq[unknown]",
    "set": "seq[unknown]",
    "dict": "map[unknown,unknown]",
    "List": "seq[unknown]",
    "Tuple": "seq[unknown]",
    "Set": "seq[unknown]",
    "Sequence": "seq[unknown]",
    "Iterable": "seq[unknown]",
    "Dict": "map[unknown,unknown]",
    "Mapping": "map[unknown,unknown]",
}

_SEQ_HEADS = {"list", "List", "set", "Set", "tuple", "Tuple", "Sequence", "Iterable"}
_MAP_HEADS = {"dict", "Dict", "Mapping"}


def _ann_to_abstract(annotation: ast.expr | None) -> str:
    if annotation is None:
        return "unknown"
    if isinstance(annotation, ast.Name):
        return _SIMPLE_ANN.get(annotation.id, "unknown")
    if isinstance(annotation, ast.Constant) and isinstance(annotation.value, str):
        # String annotation: retry on its parsed form.
        try:
            return _ann_to_abstract(ast.parse(annotation.value, mode="eval").body)
        except SyntaxError:
            return "unknown"
    if isinstance(annotation, ast.Subscript):
        head = annotation.value
        if isinstance(head, ast.Name):
            inner = annotation.slice
            if head.id in _SEQ_HEADS:
                if isinstance(inner, ast.Tuple) and inner.elts:
                    elem = _ann_to_abstract(inner.elts[0])
                else:
                    elem = _ann_to_abstract(inner)
                return f"seq[{elem}]"
            if head.id in _MAP_HEADS:
                if isinstance(inner, ast.Tuple) and len(inner.elts) == 2:
                    key = _ann_to_abstract(inner.elts[0])
                    val = _ann_to_abstract(inner.elts[1])
                    return f"map[{key},{val}]"
                return "map[unknown,unknown]"
    return "unknown"


def _is_docstring(stmt: ast.stmt, position: int) -> bool:
    return (
        position == 0
        and isinstance(stmt, ast.Expr)
        and isinstance(stmt.value, ast.Constant)
        and isinstance(stmt.value.value, str)
    )


def _count_stmts(body: list[ast.stmt]) -> int:
    count = 0
    for i, stmt in enumerate(body):
        if isinstance(stmt, (ast.Pass, ast.Global, ast.Nonlocal)):
            continue
        if _is_docstring(stmt, i):
            continue
        count += 1
        for field in ("body", "orelse", "finalbody"):
            nested = getattr(stmt, field, None)
            if isinstance(nested, list) and nested and isinstance(nested[0], ast.stmt):
                count += _count_stmts(nested)
        for handler in getattr(stmt, "handlers", []) or []:
            count += _count_stmts(handler.body)
    return count


class _Mapper:
    def __init__(self) -> None:
        self.functions: list[PyFunctionInfo] = []

    # --- statements -------------------------------------------------------

    def map_body(self, body: list[ast.stmt], top_level: bool = False) -> list[GastNode]:
        out: list[GastNode] = []
        for i, stmt in enumerate(body):
            if _is_docstring(stmt, i):
                continue
            out.extend(self.map_stmt(stmt, top_level))
        return out

    def block(self, body: list[ast.stmt]) -> GastNode:
        return node("block", *self.map_body(body))

    def map_stmt(self, stmt: ast.stmt, top_level: bool = False) -> list[GastNode]:
        if isinstance(stmt, (ast.FunctionDef, ast.AsyncFunctionDef)):
            return [self._func(stmt, top_level)]
        if isinstance(stmt, ast.ClassDef):
            return [node("class", *self.map_body(stmt.body))]
        if isinstance(stmt, ast.Return):
            return [node("return", *self._opt(stmt.value))]
        if isinstance(stmt, ast.Delete):
            return [node("del", *(self.expr(t) for t in stmt.targets))]
        if isinstance(stmt, ast.Assign):
            targets = [self.expr(t) for t in stmt.targets]
            return [node("assign", *targets, self.expr(stmt.value))]
        if isinstance(stmt, ast.AugAssign):
            target = self.expr(stmt.target)
            return [node("assign", target, node("op", target, self.expr(stmt.value)))]
        if isinstance(stmt, ast.AnnAssign):
            if stmt.value is None:
                return [self.expr(stmt.target)]
            return [node("assign", self.expr(stmt.target), self.expr(stmt.value))]
        if isinstance(stmt, (ast.For, ast.AsyncFor)):
            children = [self.expr(stmt.iter), self.block(stmt.body)]
            if stmt.orelse:
                children.append(self.block(stmt.orelse))
            return [node("loop", *children)]
        if isinstance(stmt, ast.While):
            children = [self.expr(stmt.test), self.block(stmt.body)]
            if stmt.orelse:
                children.append(self.block(stmt.orelse))
            return [node("loop", *children)]
        if isinstance(stmt, ast.If):
            children = [self.expr(stmt.test), self.block(stmt.body)]
            if stmt.orelse:
                children.append(self.block(stmt.orelse))
            return [node("if", *children)]
        if isinstance(stmt, (ast.With, ast.AsyncWith)):
            items = [self.expr(item.context_expr) for item in stmt.items]
            return [node("with", *items, self.block(stmt.body))]
        if isinstance(stmt, ast.Raise):
            return [node("raise", *self._opt(stmt.exc))]
        if isinstance(stmt, ast.Try):
            children = [self.block(stmt.body)]
            children += [self.block(h.body) for h in stmt.handlers]
            if stmt.orelse:
                children.append(self.block(stmt.orelse))
            if stmt.finalbody:
                children.append(self.block(stmt.finalbody))
            return [node("try", *children)]
        if isinstance(stmt, ast.Assert):
            return [node("assert", self.expr(stmt.test))]
        if isinstance(stmt, (ast.Import, ast.ImportFrom)):
            return [node("import")]
        if isinstance(stmt, (ast.Global, ast.Nonlocal, ast.Pass)):
            return []
        if isinstance(stmt, ast.Expr):
            return [self.expr(stmt.value)]
        if isinstance(stmt, ast.Break):
            return [node("break")]
        if isinstance(stmt, ast.Continue):
            return [node("continue")]
        match_type = getattr(ast, "Match", None)
        if match_type is not None and isinstance(stmt, match_type):
            cases = [self.block(case.body) for case in stmt.cases]
            return [node("switch", self.expr(stmt.subject), *cases)]
        raise PyParseError(f"unsupported statement {type(stmt).__name__} at line {stmt.lineno}")

    def _func(self, stmt: ast.FunctionDef | ast.AsyncFunctionDef, top_level: bool) -> GastNode:
        args = stmt.args
        positional = list(args.posonlyargs) + list(args.args)
        params = tuple((a.arg, _ann_to_abstract(a.annotation)) for a in positional)
        kwonly_required = any(d is None for d in args.kw_defaults)
        self.functions.append(
            PyFunctionInfo(
                name=stmt.name,
                start_line=stmt.lineno,
                end_line=stmt.end_lineno or stmt.lineno,
                params=params,
                stmt_count=_count_stmts(stmt.body),
                top_level=top_level,
                callable_positionally=not kwonly_required,
            )
        )
        param_vars = [node("var") for _ in params]
        return node("func", *param_vars, self.block(stmt.body))

    def _opt(self, value: ast.expr | None) -> list[GastNode]:
        return [self.expr(value)] if value is not None else []

    # --- expressions --------------------------------------------------------

    def expr(self, e: ast.expr) -> GastNode:
        if isinstance(e, ast.BoolOp):
            return node("op", *(self.expr(v) for v in e.values))
        if isinstance(e, ast.NamedExpr):
            return node("assign", self.expr(e.target), self.expr(e.value))
        if isinstance(e, ast.BinOp):
            return node("op", self.expr(e.left), self.expr(e.right))
        if isinstance(e, ast.UnaryOp):
            return node("op", self.expr(e.operand))
        if isinstance(e, ast.Lambda):
            positional = list(e.args.posonlyargs) + list(e.args.args)
            params = [node("var") for _ in positional]
            return node("func", *params, node("block", self.expr(e.body)))
        if isinstance(e, ast.IfExp):
            return node(
                "if",
                self.expr(e.test),
                node("block", self.expr(e.body)),
                node("block", self.expr(e.orelse)),
            )
        if isinstance(e, ast.Dict):
            children = []
            for key, value in zip(e.keys, e.values):
                if key is not None:
                    children.append(self.expr(key))
                children.append(self.expr(value))
            return node("lit", *children)
        if isinstance(e, (ast.List, ast.Tuple, ast.Set)):
            return node("lit", *(self.expr(v) for v in e.elts))
        if isinstance(e, (ast.ListComp, ast.SetComp, ast.GeneratorExp)):
            return self._comprehension(e.generators, [self.expr(e.elt)])
        if isinstance(e, ast.DictComp):
            return self._comprehension(e.generators, [self.expr(e.key), self.expr(e.value)])
        if isinstance(e, ast.Await):
            return self.expr(e.value)
        if isinstance(e, ast.Yield):
            return node("yield", *self._opt(e.value))
        if isinstance(e, ast.YieldFrom):
            return node("yield", self.expr(e.value))
        if isinstance(e, ast.Compare):
            return node("op", self.expr(e.left), *(self.expr(c) for c in e.comparators))
        if isinstance(e, ast.Call):
            callee = self._callee(e.func)
            args = [self.expr(a) for a in e.args]
            args += [self.expr(kw.value) for kw in e.keywords]
            return node("call", callee, *args)
        if isinstance(e, ast.JoinedStr):
            exprs = [
                self.expr(v.value) for v in e.values if isinstance(v, ast.FormattedValue)
            ]
            return node("lit", *exprs)
        if isinstance(e, ast.FormattedValue):
            return self.expr(e.value)
        if isinstance(e, ast.Constant):
            return node("lit")
        if isinstance(e, ast.Attribute):
            if self._pure_chain(e):
                return node("var")
            return self.expr(e.value)
        if isinstance(e, ast.Subscript):
            return node("index", self.expr(e.value), *self._slice(e.slice))
        if isinstance(e, ast.Starred):
            return self.expr(e.value)
        if isinstance(e, ast.Name):
            return node("var")
        if isinstance(e, ast.Slice):
            return node("lit", *(self.expr(p) for p in (e.lower, e.upper, e.step) if p))
        raise PyParseError(f"unsupported expression {type(e).__name__} at line {e.lineno}")

    def _slice(self, s: ast.expr) -> list[GastNode]:
        if isinstance(s, ast.Slice):
            return [self.expr(p) for p in (s.lower, s.upper, s.step) if p is not None]
        return [self.expr(s)]

    def _pure_chain(self, e: ast.expr) -> bool:
        while isinstance(e, ast.Attribute):
            e = e.value
        return isinstance(e, ast.Name)

    def _callee(self, func: ast.expr) -> GastNode:
        if isinstance(func, ast.Name) or (
            isinstance(func, ast.Attribute) and self._pure_chain(func)
        ):
            return node("var")
        if isinstance(func, ast.Attribute):
            # method on a computed value: keep the value, erase the name
            return self.expr(func.value)
        return self.expr(func)

    def _comprehension(self, generators: list[ast.comprehension], innermost: list[GastNode]) -> GastNode:
        current = innermost
        for gen in reversed(generators):
            for cond in reversed(gen.ifs):
                current = [node("if", self.expr(cond), node("block", *current))]
            current = [node("loop", self.expr(gen.iter), node("block", *current))]
        return current[0]


def parse_python(source: str) -> PyParse:
    """Parse Python source into a generic AST plus per-function facts."""
    try:
        tree = ast.parse(source)
    except (SyntaxError, ValueError) as exc:
        raise PyParseError(f"syntax error: {exc}") from exc
    mapper = _Mapper()
    body = mapper.map_body(tree.body, top_level=True)
    return PyParse(node("file", *body), tuple(mapper.functions))
