"""Minimal Java lexer: identifiers, keywords, literals, operators, comments.

Written because no Java parsing package is available in this environment.
The lexer can run in recovery mode (unknown characters become ``error``
tokens and scanning continues), which the token pipeline uses; the parser
runs it strictly.
"""

from __future__ import annotations

import dataclasses

KEYWORDS = frozenset(
    """abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null
    var""".split()
)

# Longest first within each leading character; matched greedily.
_OPERATORS = [
    ">>>=", "<<=", ">>=", ">>>",
    "...", "->", "::",
    "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "%=", "&=", "|=", "^=", "<<", ">>",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "~", "&", "|", "^", "?", ":",
    ";", ",", ".", "(", ")", "{", "}", "[", "]", "@",
]


class LexError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class Token:
    kind: str  # ident | keyword | number | string | char | op | comment | error | eof
    text: str
    line: int
    col: int

    def __repr__(self) -> str:  # compact, for parser error messages
        return f"{self.kind}({self.text!r}@{self.line}:{self.col})"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha() or ch in "_$"


def _is_ident_part(ch: str) -> bool:
    return ch.isalnum() or ch in "_$"


def lex(source: str, recover: bool = False) -> list[Token]:
    """Tokenize ``source``; comments are kept as tokens, whitespace dropped."""
    toks: list[Token] = []
    i = 0
    line = 1
    line_start = 0
    n = len(source)

    def here(offset: int = 0) -> tuple[int, int]:
        return line, i - line_start + 1 + offset

    def fail(message: str) -> None:
        ln, col = here()
        if recover:
            toks.append(Token("error", source[i] if i < n else "", ln, col))
        else:
            raise LexError(f"line {ln}, col {col}: {message}")

    while i < n:
        ch = source[i]
        if ch == "\n":
            line += 1
            i += 1
            line_start = i
            continue
        if ch in " \t\r\f":
            i += 1
            continue
        if ch == "/" and i + 1 < n and source[i + 1] == "/":
            end = source.find("\n", i)
            end = n if end == -1 else end
            toks.append(Token("comment", source[i + 2 : end], *here()))
            i = end
            continue
        if ch == "/" and i + 1 < n and source[i + 1] == "*":
            end = source.find("*/", i + 2)
            if end == -1:
                fail("unterminated block comment")
                end = n - 2
            body = source[i + 2 : end]
            toks.append(Token("comment", body, *here()))
            line += body.count("\n")
            nl = source.rfind("\n", i, end + 2)
            if nl != -1:
                line_start = nl + 1
            i = end + 2
            continue
        if _is_ident_start(ch):
            j = i + 1
            while j < n and _is_ident_part(source[j]):
                j += 1
            text = source[i:j]
            kind = "keyword" if text in KEYWORDS else "ident"
            toks.append(Token(kind, text, *here()))
            i = j
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            j = i
            if source.startswith(("0x", "0X", "0b", "0B"), i):
                j = i + 2
                while j < n and (source[j].isalnum() or source[j] == "_"):
                    j += 1
            else:
                seen_dot = False
                seen_exp = False
                while j < n:
                    c = source[j]
                    if c.isdigit() or c == "_":
                        j += 1
                    elif c == "." and not seen_dot and not seen_exp:
                        seen_dot = True
                        j += 1
                    elif c in "eE" and not seen_exp and j + 1 < n and (
                        source[j + 1].isdigit() or source[j + 1] in "+-"
                    ):
                        seen_exp = True
                        j += 2 if source[j + 1] in "+-" else 1
                    elif c in "lLfFdD":
                        j += 1
                        break
                    else:
                        break
            toks.append(Token("number", source[i:j], *here()))
            i = j
            continue
        if ch == '"':
            j = i + 1
            while j < n and source[j] != '"':
                j += 2 if source[j] == "\\" else 1
            if j >= n:
                fail("unterminated string literal")
                i = n
                continue
            toks.append(Token("string", source[i : j + 1], *here()))
            i = j + 1
            continue
        if ch == "'":
            j = i + 1
            while j < n and source[j] != "'":
                j += 2 if source[j] == "\\" else 1
            if j >= n:
                fail("unterminated char literal")
                i = n
                continue
            toks.append(Token("char", source[i : j + 1], *here()))
            i = j + 1
            continue
        for op in _OPERATORS:
            if source.startswith(op, i):
                toks.append(Token("op", op, *here()))
                i += len(op)
                break
        else:
            fail(f"unexpected character {ch!r}")
            i += 1
    toks.append(Token("eof", "", line, n - line_start + 1))
    return toks
