"""Recursive-descent parser for a practical Java subset.

Covers what snippet corpora actually contain: classes, interfaces, enums,
methods, constructors, fields, local variables, the statement forms (if,
for, enhanced for, while, do, switch, try/catch/finally, return, throw,
break, continue, assert, synchronized), and the full expression precedence
ladder including lambdas, casts, ``new``, array accesses and method
references. Bare method declarations outside any class parse too, which is
how textbook snippets are usually written.

Constructs outside the subset (annotation declarations, anonymous classes,
generic method invocation) raise :class:`JavaParseError` naming the
construct, so callers can exclude the file rather than crash.

The produced tree is the generic AST of :mod:`crosscode.gast.nodes`;
identifiers and types are erased except where a name chain collapses into a
single ``var`` leaf.
"""

from __future__ import annotations

import dataclasses

from .java_lexer import LexError, Token, lex
from .nodes import GastNode, node

_MODIFIERS = frozenset(
    "public private protected static final abstract native synchronized strictfp transient volatile default".split()
)

_INT_TYPES = frozenset("byte short int long Byte Short Integer Long BigInteger".split())
_FLOAT_TYPES = frozenset("float double Float Double BigDecimal Number".split())
_BOOL_TYPES = frozenset("boolean Boolean".split())
_STRING_TYPES = frozenset("char Character String CharSequence StringBuilder StringBuffer".split())
_SEQ_TYPES = frozenset(
    "List ArrayList LinkedList Set HashSet TreeSet SortedSet Collection Iterable Queue Deque ArrayDeque Stack Vector".split()
)
_MAP_TYPES = frozenset("Map HashMap TreeMap LinkedHashMap SortedMap Hashtable".split())


class JavaParseError(ValueError):
    def __init__(self, message: str, token: Token):
        super().__init__(f"line {token.line}, col {token.col}: {message}")
        self.token = token


@dataclasses.dataclass(frozen=True)
class JavaType:
    base: str  # dotted name or primitive
    args: tuple["JavaType", ...] = ()
    dims: int = 0

    def abstract(self) -> str:
        """Map to the abstract signature grammar used by argument generation."""
        if self.dims > 0:
            inner = JavaType(self.base, self.args, self.dims - 1)
            return f"seq[{inner.abstract()}]"
        simple = self.base.rsplit(".", 1)[-1]
        if simple in _INT_TYPES:
            return "int"
        if simple in _FLOAT_TYPES:
            return "float"
        if simple in _BOOL_TYPES:
            return "bool"
        if simple in _STRING_TYPES:
            return "string"
        if simple in _SEQ_TYPES:
            elem = self.args[0].abstract() if self.args else "unknown"
            return f"seq[{elem}]"
        if simple in _MAP_TYPES:
            key = self.args[0].abstract() if len(self.args) > 0 else "unknown"
            val = self.args[1].abstract() if len(self.args) > 1 else "unknown"
            return f"map[{key},{val}]"
        return "unknown"


@dataclasses.dataclass(frozen=True)
class FunctionInfo:
    name: str
    start_line: int
    end_line: int
    params: tuple[tuple[str, str], ...]  # (param name, abstract type)
    stmt_count: int


@dataclasses.dataclass(frozen=True)
class JavaParse:
    gast: GastNode
    functions: tuple[FunctionInfo, ...]


_LIT_KEYWORDS = frozenset({"true", "false", "null"})
_PRIMITIVES = frozenset("boolean byte short int long float double char void".split())
# Tokens that may start the operand of a cast expression.
_CAST_FOLLOW = frozenset({"ident", "number", "string", "char"})


class _Parser:
    def __init__(self, source: str):
        self.toks = [t for t in lex(source, recover=False) if t.kind != "comment"]
        self.pos = 0
        self.functions: list[FunctionInfo] = []
        self._stmt_counts: list[int] = []

    # --- token helpers ----------------------------------------------------

    def peek(self, ahead: int = 0) -> Token:
        i = min(self.pos + ahead, len(self.toks) - 1)
        return self.toks[i]

    def at(self, text: str) -> bool:
        return self.peek().text == text and self.peek().kind in ("op", "keyword")

    def at_ident(self) -> bool:
        return self.peek().kind == "ident"

    def advance(self) -> Token:
        tok = self.toks[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.advance()
            return True
        return False

    def expect(self, text: str, context: str) -> Token:
        if not self.at(text):
            raise JavaParseError(f"expected {text!r} in {context}, found {self.peek()}", self.peek())
        return self.advance()

    def expect_ident(self, context: str) -> Token:
        if not self.at_ident():
            raise JavaParseError(f"expected identifier in {context}, found {self.peek()}", self.peek())
        return self.advance()

    def fail(self, message: str) -> JavaParseError:
        return JavaParseError(message, self.peek())

    # --- compilation unit ---------------------------------------------------

    def parse_file(self) -> GastNode:
        children: list[GastNode] = []
        if self.at("package"):
            self.advance()
            self._qualified_name("package declaration")
            self.expect(";", "package declaration")
        while self.at("import"):
            self.advance()
            self.accept("static")
            self._qualified_name("import")
            if self.accept("."):
                self.expect("*", "import")
            self.expect(";", "import")
            children.append(node("import"))
        while self.peek().kind != "eof":
            children.extend(self._member(top_level=True, class_name=None))
        return node("file", *children)

    def _qualified_name(self, context: str) -> str:
        parts = [self.expect_ident(context).text]
        while self.at(".") and self.peek(1).kind == "ident":
            self.advance()
            parts.append(self.advance().text)
        return ".".join(parts)

    # --- declarations -------------------------------------------------------

    def _skip_annotations_and_modifiers(self) -> None:
        while True:
            if self.at("@"):
                self.advance()
                if self.at("interface"):
                    raise self.fail("annotation declarations are outside the supported subset")
                self._qualified_name("annotation")
                if self.at("("):
                    self._skip_balanced("(", ")")
                continue
            if self.peek().kind == "keyword" and self.peek().text in _MODIFIERS:
                self.advance()
                continue
            return

    def _skip_balanced(self, open_text: str, close_text: str) -> None:
        self.expect(open_text, "balanced group")
        depth = 1
        while depth:
            tok = self.advance()
            if tok.kind == "eof":
                raise JavaParseError(f"unterminated {open_text}...{close_text}", tok)
            if tok.text == open_text and tok.kind == "op":
                depth += 1
            elif tok.text == close_text and tok.kind == "op":
                depth -= 1

    def _member(self, top_level: bool, class_name: str | None) -> list[GastNode]:
        """One class-body (or top-level) member; may yield several nodes."""
        self._skip_annotations_and_modifiers()
        tok = self.peek()
        if tok.text in ("class", "interface", "enum") and tok.kind == "keyword":
            return [self._type_decl()]
        if self.at("{"):  # instance/static initializer
            return [self._block()]
        if self.at(";"):
            self.advance()
            return []
        if self.at("<"):  # method type parameters
            self._skip_type_params()
        # Constructor: Name ( ... ) { ... } where Name matches the class.
        if (
            class_name is not None
            and self.at_ident()
            and self.peek().text == class_name
            and self.peek(1).text == "("
        ):
            return [self._method(JavaType("void"), self.advance())]
        saved = self.pos
        jtype = self._try_type(allow_void=True)
        if jtype is None or not self.at_ident():
            self.pos = saved
            raise self.fail("expected a type declaration, method or field")
        name_tok = self.advance()
        if self.at("("):
            return [self._method(jtype, name_tok)]
        return self._field_decl(name_tok)

    def _type_decl(self) -> GastNode:
        keyword = self.advance().text
        name = self.expect_ident(f"{keyword} declaration").text
        if self.at("<"):
            self._skip_type_params()
        while self.at("extends") or self.at("implements") or self.at("permits"):
            self.advance()
            self._try_type(allow_void=False)
            while self.accept(","):
                self._try_type(allow_void=False)
        body: list[GastNode] = []
        self.expect("{", f"{keyword} body")
        if keyword == "enum":
            while self.at_ident():
                self.expect_ident("enum constant")
                if self.at("("):
                    self._skip_balanced("(", ")")
                if self.at("{"):
                    raise self.fail("anonymous enum constant bodies are outside the supported subset")
                body.append(node("var"))
                if not self.accept(","):
                    break
            self.accept(";")
        while not self.at("}"):
            if self.peek().kind == "eof":
                raise self.fail(f"unterminated {keyword} body")
            body.extend(self._member(top_level=False, class_name=name))
        self.expect("}", f"{keyword} body")
        return node("class", *body)

    def _skip_type_params(self) -> None:
        # <...> with nested generics; '>>' closes two levels.
        self.expect("<", "type parameters")
        depth = 1
        while depth > 0:
            tok = self.advance()
            if tok.kind == "eof":
                raise JavaParseError("unterminated type parameters", tok)
            if tok.text == "<":
                depth += 1
            elif tok.text == ">":
                depth -= 1
            elif tok.text == ">>":
                depth -= 2
            elif tok.text == ">>>":
                depth -= 3
        if depth < 0:
            raise self.fail("mismatched '>' in type parameters")

    def _method(self, _ret: JavaType, name_tok: Token) -> GastNode:
        params = self._params()
        while self.at("["):  # archaic dims on the method
            self.advance()
            self.expect("]", "method declarator")
        if self.at("throws"):
            self.advance()
            self._qualified_name("throws")
            while self.accept(","):
                self._qualified_name("throws")
        param_vars = [node("var") for _ in params]
        if self.at(";"):
            end = self.advance()
            self.functions.append(
                FunctionInfo(name_tok.text, name_tok.line, end.line, tuple(params), 0)
            )
            return node("func", *param_vars)
        self._stmt_counts.append(0)
        body = self._block()
        count = self._stmt_counts.pop()
        end_line = self.toks[self.pos - 1].line
        self.functions.append(
            FunctionInfo(name_tok.text, name_tok.line, end_line, tuple(params), count)
        )
        return node("func", *param_vars, body)

    def _params(self) -> list[tuple[str, str]]:
        self.expect("(", "parameter list")
        params: list[tuple[str, str]] = []
        if not self.at(")"):
            while True:
                self._skip_annotations_and_modifiers()
                jtype = self._try_type(allow_void=False)
                if jtype is None:
                    raise self.fail("expected parameter type")
                if self.accept("..."):
                    jtype = JavaType(jtype.base, jtype.args, jtype.dims + 1)
                pname = self.expect_ident("parameter").text
                dims = 0
                while self.accept("["):
                    self.expect("]", "parameter")
                    dims += 1
                if dims:
                    jtype = JavaType(jtype.base, jtype.args, jtype.dims + dims)
                params.append((pname, jtype.abstract()))
                if not self.accept(","):
                    break
        self.expect(")", "parameter list")
        return params

    def _field_decl(self, first_name: Token) -> list[GastNode]:
        nodes = [self._declarator_node(first_name)]
        while self.accept(","):
            name_tok = self.expect_ident("field declaration")
            nodes.append(self._declarator_node(name_tok))
        self.expect(";", "field declaration")
        return nodes

    def _declarator_node(self, _name_tok: Token) -> GastNode:
        while self.accept("["):
            self.expect("]", "declarator")
        if self.accept("="):
            init = self._variable_initializer()
            return node("assign", node("var"), init)
        return node("var")

    # --- types ----------------------------------------------------------------

    def _try_type(self, allow_void: bool) -> JavaType | None:
        """Parse a type, or roll back and return None."""
        saved = self.pos
        tok = self.peek()
        base: str
        if tok.kind == "keyword" and tok.text in _PRIMITIVES:
            if tok.text == "void" and not allow_void:
                return None
            base = self.advance().text
        elif tok.kind == "keyword" and tok.text == "var":
            base = self.advance().text
        elif tok.kind == "ident":
            base = self._qualified_name("type")
        else:
            return None
        args: tuple[JavaType, ...] = ()
        if self.at("<"):
            parsed = self._try_type_args()
            if parsed is None:
                self.pos = saved
                return None
            args = parsed
        dims = 0
        while self.at("[") and self.peek(1).text == "]":
            self.advance()
            self.advance()
            dims += 1
        return JavaType(base, args, dims)

    def _try_type_args(self) -> tuple[JavaType, ...] | None:
        saved = self.pos
        self.advance()  # '<'
        args: list[JavaType] = []
        if self.at(">"):  # diamond
            self.advance()
            return ()
        while True:
            if self.at("?"):
                self.advance()
                if self.at("extends") or self.at("super"):
                    self.advance()
                    inner = self._try_type(allow_void=False)
                    if inner is None:
                        self.pos = saved
                        return None
                args.append(JavaType("Object"))
            else:
                inner = self._try_type(allow_void=False)
                if inner is None:
                    self.pos = saved
                    return None
                args.append(inner)
            if self.accept(","):
                continue
            if self.accept(">"):
                return tuple(args)
            # '>>' / '>>>' close outer levels too: rewrite the token in place.
            tok = self.peek()
            if tok.text in (">>", ">>>") and tok.kind == "op":
                shorter = Token("op", tok.text[1:], tok.line, tok.col + 1)
                self.toks[self.pos] = shorter
                return tuple(args)
            self.pos = saved
            return None

    # --- statements -------------------------------------------------------------

    def _count_stmt(self) -> None:
        if self._stmt_counts:
            self._stmt_counts[-1] += 1

    def _block(self) -> GastNode:
        self.expect("{", "block")
        stmts: list[GastNode] = []
        while not self.at("}"):
            if self.peek().kind == "eof":
                raise self.fail("unterminated block")
            stmts.extend(self._statement())
        self.expect("}", "block")
        return node("block", *stmts)

    def _stmt_as_block(self) -> GastNode:
        """A loop/if body: always a block node, even for a single statement."""
        if self.at("{"):
            return self._block()
        return node("block", *self._statement())

    def _statement(self) -> list[GastNode]:
        tok = self.peek()
        if self.at(";"):
            self.advance()
            return []
        if self.at("{"):
            return [self._block()]
        if tok.kind == "keyword":
            handler = {
                "if": self._if_stmt,
                "for": self._for_stmt,
                "while": self._while_stmt,
                "do": self._do_stmt,
                "switch": self._switch_stmt,
                "try": self._try_stmt,
                "return": self._return_stmt,
                "throw": self._throw_stmt,
                "break": self._break_stmt,
                "continue": self._continue_stmt,
                "assert": self._assert_stmt,
                "synchronized": self._sync_stmt,
            }.get(tok.text)
            if handler is not None:
                self._count_stmt()
                return [handler()]
            if tok.text in ("class", "interface", "enum"):
                raise self.fail("local type declarations are outside the supported subset")
            if tok.text == "final" or tok.text in _PRIMITIVES:
                self._count_stmt()
                return self._local_decl()
        # Labeled statement: IDENT ':' statement
        if tok.kind == "ident" and self.peek(1).text == ":" and self.peek(1).kind == "op":
            self.advance()
            self.advance()
            return self._statement()
        saved = self.pos
        decl = self._try_local_decl()
        if decl is not None:
            self._count_stmt()
            return decl
        self.pos = saved
        expr = self._expression()
        self.expect(";", "expression statement")
        self._count_stmt()
        return [expr]

    def _local_decl(self) -> list[GastNode]:
        self._skip_annotations_and_modifiers()
        jtype = self._try_type(allow_void=False)
        if jtype is None:
            raise self.fail("expected a type in local declaration")
        nodes = []
        name_tok = self.expect_ident("local declaration")
        nodes.append(self._declarator_node(name_tok))
        while self.accept(","):
            name_tok = self.expect_ident("local declaration")
            nodes.append(self._declarator_node(name_tok))
        self.expect(";", "local declaration")
        return nodes

    def _try_local_decl(self) -> list[GastNode] | None:
        saved = self.pos
        try:
            jtype = self._try_type(allow_void=False)
            if jtype is None or not self.at_ident():
                self.pos = saved
                return None
            follow = self.peek(1).text
            if follow not in ("=", ",", ";", "["):
                self.pos = saved
                return None
            nodes = []
            name_tok = self.advance()
            nodes.append(self._declarator_node(name_tok))
            while self.accept(","):
                name_tok = self.expect_ident("local declaration")
                nodes.append(self._declarator_node(name_tok))
            self.expect(";", "local declaration")
            return nodes
        except JavaParseError:
            self.pos = saved
            return None

    def _variable_initializer(self) -> GastNode:
        if self.at("{"):
            return self._array_initializer()
        return self._expression()

    def _array_initializer(self) -> GastNode:
        self.expect("{", "array initializer")
        elems: list[GastNode] = []
        while not self.at("}"):
            elems.append(self._variable_initializer())
            if not self.accept(","):
                break
        self.expect("}", "array initializer")
        return node("lit", *elems)

    def _paren_expr(self, context: str) -> GastNode:
        self.expect("(", context)
        expr = self._expression()
        self.expect(")", context)
        return expr

    def _if_stmt(self) -> GastNode:
        self.advance()
        cond = self._paren_expr("if condition")
        then = self._stmt_as_block()
        if self.accept("else"):
            other = self._stmt_as_block()
            return node("if", cond, then, other)
        return node("if", cond, then)

    def _for_stmt(self) -> GastNode:
        self.advance()
        self.expect("(", "for header")
        # Enhanced for: [final] Type name : expr
        saved = self.pos
        self._skip_annotations_and_modifiers()
        jtype = self._try_type(allow_void=False)
        if jtype is not None and self.at_ident() and self.peek(1).text == ":":
            self.advance()
            self.advance()
            iterable = self._expression()
            self.expect(")", "for header")
            body = self._stmt_as_block()
            return node("loop", iterable, body)
        self.pos = saved
        # Classic for: only the condition survives into the GAST.
        if not self.at(";"):
            decl = self._try_local_decl()  # consumes trailing ';'
            if decl is None:
                self._expression()
                while self.accept(","):
                    self._expression()
                self.expect(";", "for header")
        else:
            self.advance()
        cond: GastNode | None = None
        if not self.at(";"):
            cond = self._expression()
        self.expect(";", "for header")
        if not self.at(")"):
            self._expression()
            while self.accept(","):
                self._expression()
        self.expect(")", "for header")
        body = self._stmt_as_block()
        if cond is None:
            return node("loop", body)
        return node("loop", cond, body)

    def _while_stmt(self) -> GastNode:
        self.advance()
        cond = self._paren_expr("while condition")
        body = self._stmt_as_block()
        return node("loop", cond, body)

    def _do_stmt(self) -> GastNode:
        self.advance()
        body = self._stmt_as_block()
        self.expect("while", "do-while")
        cond = self._paren_expr("do-while condition")
        self.expect(";", "do-while")
        return node("loop", cond, body)

    def _switch_stmt(self) -> GastNode:
        self.advance()
        scrutinee = self._paren_expr("switch")
        self.expect("{", "switch body")
        groups: list[GastNode] = []
        while not self.at("}"):
            if not (self.at("case") or self.at("default")):
                raise self.fail("expected 'case' or 'default' in switch body")
            while self.at("case") or self.at("default"):
                if self.advance().text == "case":
                    self._expression()
                if self.at("->"):
                    raise self.fail("arrow switch rules are outside the supported subset")
                self.expect(":", "switch label")
            stmts: list[GastNode] = []
            while not (self.at("case") or self.at("default") or self.at("}")):
                stmts.extend(self._statement())
            groups.append(node("block", *stmts))
        self.expect("}", "switch body")
        return node("switch", scrutinee, *groups)

    def _try_stmt(self) -> GastNode:
        self.advance()
        children: list[GastNode] = []
        if self.at("("):  # try-with-resources
            self.advance()
            while not self.at(")"):
                self._skip_annotations_and_modifiers()
                jtype = self._try_type(allow_void=False)
                if jtype is not None and self.at_ident():
                    self.advance()
                    self.expect("=", "resource")
                children.append(self._expression())
                if not self.accept(";"):
                    break
            self.expect(")", "resources")
        children.append(self._block())
        while self.at("catch"):
            self.advance()
            self.expect("(", "catch")
            self._skip_annotations_and_modifiers()
            self._try_type(allow_void=False)
            while self.accept("|"):
                self._try_type(allow_void=False)
            if self.at_ident():
                self.advance()
            self.expect(")", "catch")
            children.append(self._block())
        if self.accept("finally"):
            children.append(self._block())
        return node("try", *children)

    def _return_stmt(self) -> GastNode:
        self.advance()
        if self.at(";"):
            self.advance()
            return node("return")
        value = self._expression()
        self.expect(";", "return")
        return node("return", value)

    def _throw_stmt(self) -> GastNode:
        self.advance()
        value = self._expression()
        self.expect(";", "throw")
        return node("raise", value)

    def _break_stmt(self) -> GastNode:
        self.advance()
        if self.at_ident():
            self.advance()
        self.expect(";", "break")
        return node("break")

    def _continue_stmt(self) -> GastNode:
        self.advance()
        if self.at_ident():
            self.advance()
        self.expect(";", "continue")
        return node("continue")

    def _assert_stmt(self) -> GastNode:
        self.advance()
        cond = self._expression()
        if self.accept(":"):
            self._expression()
        self.expect(";", "assert")
        return node("assert", cond)

    def _sync_stmt(self) -> GastNode:
        self.advance()
        monitor = self._paren_expr("synchronized")
        body = self._block()
        return node("sync", monitor, body)

    # --- expressions ---------------------------------------------------------

    _ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<= >>= >>>=".split())

    def _expression(self) -> GastNode:
        return self._assignment()

    def _assignment(self) -> GastNode:
        left, _ = self._ternary()
        tok = self.peek()
        if tok.kind == "op" and tok.text in self._ASSIGN_OPS:
            op_text = self.advance().text
            right = self._assignment()
            if op_text == "=":
                return node("assign", left, right)
            return node("assign", left, node("op", left, right))
        return left

    def _ternary(self) -> tuple[GastNode, bool]:
        cond, chain = self._binary(0)
        if self.at("?"):
            self.advance()
            then = self._expression()
            self.expect(":", "conditional expression")
            other, _ = self._ternary()
            return node("if", cond, node("block", then), node("block", other)), False
        return cond, chain

    _BINARY_LEVELS: list[frozenset[str]] = [
        frozenset({"||"}),
        frozenset({"&&"}),
        frozenset({"|"}),
        frozenset({"^"}),
        frozenset({"&"}),
        frozenset({"==", "!="}),
        frozenset({"<", ">", "<=", ">="}),  # and instanceof
        frozenset({"<<", ">>", ">>>"}),
        frozenset({"+", "-"}),
        frozenset({"*", "/", "%"}),
    ]
    _RELATIONAL_LEVEL = 6

    def _binary(self, level: int) -> tuple[GastNode, bool]:
        if level >= len(self._BINARY_LEVELS):
            return self._unary()
        left, chain = self._binary(level + 1)
        ops = self._BINARY_LEVELS[level]
        while True:
            tok = self.peek()
            if level == self._RELATIONAL_LEVEL and self.at("instanceof"):
                self.advance()
                if self._try_type(allow_void=False) is None:
                    raise self.fail("expected type after instanceof")
                if self.at_ident():  # pattern variable
                    self.advance()
                left, chain = node("op", left), False
                continue
            if tok.kind == "op" and tok.text in ops:
                self.advance()
                right, _ = self._binary(level + 1)
                left, chain = node("op", left, right), False
                continue
            return left, chain

    _UNARY_PREFIX = frozenset({"+", "-", "!", "~", "++", "--"})

    def _unary(self) -> tuple[GastNode, bool]:
        tok = self.peek()
        if tok.kind == "op" and tok.text in self._UNARY_PREFIX:
            self.advance()
            operand, _ = self._unary()
            return node("op", operand), False
        cast = self._try_cast()
        if cast is not None:
            return cast, False
        return self._postfix()

    def _try_cast(self) -> GastNode | None:
        if not self.at("("):
            return None
        saved = self.pos
        self.advance()
        jtype = self._try_type(allow_void=False)
        if jtype is None or not self.at(")"):
            self.pos = saved
            return None
        is_primitive = jtype.base in _PRIMITIVES and not jtype.args
        follow = self.peek(1)
        looks_like_operand = follow.kind in _CAST_FOLLOW or follow.text in (
            "(",
            "!",
            "~",
            "new",
            "this",
            "super",
        )
        if not (is_primitive or looks_like_operand):
            self.pos = saved
            return None
        self.advance()  # ')'
        operand, _ = self._unary()
        return operand  # casts are erased

    def _postfix(self) -> tuple[GastNode, bool]:
        current, chain = self._primary()
        while True:
            tok = self.peek()
            if tok.kind != "op":
                return current, chain
            if tok.text in ("++", "--"):
                self.advance()
                current, chain = node("op", current), False
                continue
            if tok.text == "(":
                args = self._arguments()
                callee = node("var") if chain else current
                current, chain = node("call", callee, *args), False
                continue
            if tok.text == "[":
                self.advance()
                idx = self._expression()
                self.expect("]", "array access")
                current, chain = node("index", current, idx), False
                continue
            if tok.text == "::":
                self.advance()
                if not (self.at_ident() or self.at("new")):
                    raise self.fail("expected method name after '::'")
                self.advance()
                current, chain = (node("var"), False) if chain else (current, False)
                continue
            if tok.text == ".":
                nxt = self.peek(1)
                if nxt.kind == "keyword" and nxt.text == "class":
                    self.advance()
                    self.advance()
                    current, chain = node("lit"), False
                    continue
                if nxt.kind == "keyword" and nxt.text in ("this", "super", "new"):
                    raise self.fail("qualified this/super/new is outside the supported subset")
                if nxt.text == "<":
                    raise self.fail("generic method invocation is outside the supported subset")
                if nxt.kind != "ident":
                    return current, chain
                self.advance()
                self.advance()
                # .name( -> method call; .name -> field access (erased)
                if self.at("("):
                    args = self._arguments()
                    callee = node("var") if chain else current
                    current, chain = node("call", callee, *args), False
                continue
            return current, chain

    def _arguments(self) -> list[GastNode]:
        self.expect("(", "arguments")
        args: list[GastNode] = []
        if not self.at(")"):
            args.append(self._expression())
            while self.accept(","):
                args.append(self._expression())
        self.expect(")", "arguments")
        return args

    def _primary(self) -> tuple[GastNode, bool]:
        tok = self.peek()
        if tok.kind in ("number", "string", "char"):
            self.advance()
            return node("lit"), False
        if tok.kind == "keyword":
            if tok.text in _LIT_KEYWORDS:
                self.advance()
                return node("lit"), False
            if tok.text in ("this", "super"):
                self.advance()
                return node("var"), True
            if tok.text == "new":
                return self._new_expr(), False
            if tok.text in _PRIMITIVES:
                # e.g. int.class / int[].class
                self._try_type(allow_void=True)
                if self.at(".") and self.peek(1).text == "class":
                    self.advance()
                    self.advance()
                    return node("lit"), False
                raise self.fail(f"unexpected keyword {tok.text!r} in expression")
            raise self.fail(f"unexpected keyword {tok.text!r} in expression")
        if tok.kind == "ident":
            if self.peek(1).text == "->":
                self.advance()
                self.advance()
                return self._lambda_body([node("var")]), False
            self.advance()
            return node("var"), True
        if tok.text == "(":
            lam = self._try_lambda()
            if lam is not None:
                return lam, False
            self.advance()
            inner = self._expression()
            self.expect(")", "parenthesized expression")
            return inner, False
        raise self.fail(f"unexpected token {tok} in expression")

    def _try_lambda(self) -> GastNode | None:
        # '(' ... ')' '->'  — scan to the matching paren, then check.
        depth = 0
        i = self.pos
        while i < len(self.toks):
            text = self.toks[i].text
            kind = self.toks[i].kind
            if kind == "eof":
                return None
            if kind == "op" and text == "(":
                depth += 1
            elif kind == "op" and text == ")":
                depth -= 1
                if depth == 0:
                    break
            i += 1
        if i + 1 >= len(self.toks) or self.toks[i + 1].text != "->":
            return None
        self.advance()  # '('
        params: list[GastNode] = []
        if not self.at(")"):
            while True:
                self._skip_annotations_and_modifiers()
                saved = self.pos
                jtype = self._try_type(allow_void=False)
                if jtype is None or not self.at_ident():
                    self.pos = saved
                if not self.at_ident():
                    raise self.fail("expected lambda parameter")
                self.advance()
                params.append(node("var"))
                if not self.accept(","):
                    break
        self.expect(")", "lambda parameters")
        self.expect("->", "lambda")
        return self._lambda_body(params)

    def _lambda_body(self, params: list[GastNode]) -> GastNode:
        if self.at("{"):
            body = self._block()
        else:
            body = node("block", self._expression())
        return node("func", *params, body)

    def _new_expr(self) -> GastNode:
        self.advance()  # 'new'
        jtype = self._try_type(allow_void=False)
        if jtype is None:
            raise self.fail("expected type after 'new'")
        if jtype.dims > 0:
            if self.at("{"):
                return self._array_initializer()
            raise self.fail("expected array initializer after 'new T[]'")
        if self.at("["):
            dims: list[GastNode] = []
            while self.accept("["):
                if self.at("]"):
                    self.advance()
                    continue
                dims.append(self._expression())
                self.expect("]", "array creation")
            if self.at("{"):
                return self._array_initializer()
            return node("lit", *dims)
        if self.at("("):
            args = self._arguments()
            if self.at("{"):
                raise self.fail("anonymous classes are outside the supported subset")
            # Object construction is value creation: align with literal
            # displays so `new ArrayList<>()` and `[]` look alike.
            return node("lit", *args)
        raise self.fail("expected '(' or '[' after 'new'")


def _wrap_message(exc: Exception) -> str:
    return str(exc)


def parse_java(source: str) -> JavaParse:
    """Parse Java source (class files or bare methods) into a generic AST."""
    try:
        parser = _Parser(source)
        gast = parser.parse_file()
        return JavaParse(gast, tuple(parser.functions))
    except LexError as exc:
        raise JavaParseError(f"lex error: {exc}", Token("error", "", 0, 0)) from exc
