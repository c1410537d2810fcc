"""Token extraction and token-set similarity.

Tokens come from identifiers and comments. The pipeline, in order:

1. drop language keywords,
2. drop language-convention words (``main``, ``self``, ...),
3. drop English stopwords,
4. split what survives on snake_case and camelCase boundaries, keeping the
   unsplit compound as well (underscores removed: ``max_val`` also yields
   ``maxval``),
5. drop tokens shorter than ``Config.min_tok_len``,
6. lowercase.

Steps 1-3 match whole identifiers case-insensitively, *before* splitting:
``all_odds`` keeps its ``all`` even though bare ``all`` would be a stopword.
Split parts are re-checked against the keyword and convention lists (the
``for`` inside ``forEach`` is still plumbing) but not against stopwords.
"""

from __future__ import annotations

import dataclasses
import io
import json
import keyword as _py_keyword
import re
import tokenize as _py_tokenize
from importlib import resources
from typing import Iterable

from .corpus import Config, Corpus, Language

_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_CAMEL_RE = re.compile(r"[A-Z]+(?![a-z])|[A-Z][a-z0-9]*|[a-z0-9]+")


def _load_list(name: str) -> frozenset[str]:
    text = resources.files("crosscode.data").joinpath(name).read_text("utf-8")
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


_KEYWORDS = {
    Language.JAVA: _load_list("java_keywords.txt"),
    Language.PYTHON: _load_list("python_keywords.txt"),
}
_CONVENTION = {
    Language.JAVA: _load_list("java_convention.txt"),
    Language.PYTHON: _load_list("python_convention.txt"),
}
_STOPWORDS = _load_list("english_stopwords.txt")


@dataclasses.dataclass(frozen=True)
class TokenSet:
    """Normalized token set for one snippet.

    ``lossy`` flags best-effort extraction from source that would not lex
    cleanly; the tokens are still usable for ranking.
    """

    tokens: frozenset[str]
    lossy: bool = False


def split_identifier(name: str) -> list[str]:
    """snake_case/camelCase parts of an identifier, in order.

    >>> split_identifier("getEvens")
    ['get', 'Evens']
    >>> split_identifier("max_val")
    ['max', 'val']
    """
    parts: list[str] = []
    for unit in name.split("_"):
        if unit:
            parts.extend(_CAMEL_RE.findall(unit))
    return parts


def _lex_python(source: str) -> tuple[list[str], list[str], bool]:
    """(identifiers, comment texts, lossy) for Python source."""
    idents: list[str] = []
    comments: list[str] = []
    try:
        for tok in _py_tokenize.generate_tokens(io.StringIO(source).readline):
            if tok.type == _py_tokenize.NAME:
                idents.append(tok.string)
            elif tok.type == _py_tokenize.COMMENT:
                comments.append(tok.string.lstrip("#"))
        return idents, comments, False
    except (_py_tokenize.TokenError, IndentationError, SyntaxError, ValueError):
        pass
    # Fall back to a regex scan of whatever text is there.
    idents = _WORD_RE.findall(_strip_python_strings(source))
    comments = [line.split("#", 1)[1] for line in source.splitlines() if "#" in line]
    return idents, comments, True


def _strip_python_strings(source: str) -> str:
    # Crude but only used on unlexable source: drop quoted spans.
    return re.sub(r"('''.*?'''|\"\"\".*?\"\"\"|'[^'\n]*'|\"[^\"\n]*\")", " ", source, flags=re.S)


def _lex_java(source: str) -> tuple[list[str], list[str], bool]:
    from .gast.java_lexer import LexError, lex

    try:
        toks = lex(source, recover=True)
    except LexError:
        return _WORD_RE.findall(source), [], True
    idents = [t.text for t in toks if t.kind == "ident"]
    # Java keywords are lexed as their own kind; feed them through anyway so
    # removal stays list-driven rather than lexer-driven.
    idents += [t.text for t in toks if t.kind == "keyword"]
    comments = [t.text for t in toks if t.kind == "comment"]
    lossy = any(t.kind == "error" for t in toks)
    return idents, comments, lossy


def _comment_words(comments: Iterable[str]) -> list[str]:
    words: list[str] = []
    for text in comments:
        words.extend(_WORD_RE.findall(text))
    return words


def extract_tokens(source: str, language: Language, config: Config) -> TokenSet:
    """Run the full pipeline over one snippet's source."""
    if language == Language.PYTHON:
        idents, comments, lossy = _lex_python(source)
    elif language == Language.JAVA:
        idents, comments, lossy = _lex_java(source)
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unsupported language: {language}")

    keywords = _KEYWORDS[language]
    convention = _CONVENTION[language]
    raw = idents + _comment_words(comments)

    surviving: list[str] = []
    for tok in raw:
        low = tok.lower()
        if low in keywords or low in convention or low in _STOPWORDS:
            continue
        surviving.append(tok)

    final: set[str] = set()
    for tok in surviving:
        candidates = split_identifier(tok)
        compound = tok.replace("_", "")
        if compound:
            candidates.append(compound)
        for part in candidates:
            if len(part) < config.min_tok_len:
                continue
            low = part.lower()
            if low in keywords or low in convention:
                continue
            final.add(low)
    return TokenSet(tokens=frozenset(final), lossy=lossy)


def token_similarity(a: TokenSet, b: TokenSet) -> float:
    """Jaccard similarity; two empty sets count as dissimilar (0.0)."""
    union = a.tokens | b.tokens
    if not union:
        return 0.0
    return len(a.tokens & b.tokens) / len(union)


class TokenIndex:
    """Token sets per snippet plus an inverted posting list."""

    def __init__(self, by_snippet: dict[str, TokenSet]):
        self.by_snippet = dict(sorted(by_snippet.items()))
        postings: dict[str, list[str]] = {}
        for snippet_id, tok_set in self.by_snippet.items():
            for tok in tok_set.tokens:
                postings.setdefault(tok, []).append(snippet_id)
        self.postings = {t: tuple(ids) for t, ids in sorted(postings.items())}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TokenIndex) and {
            k: v.tokens for k, v in self.by_snippet.items()
        } == {k: v.tokens for k, v in other.by_snippet.items()}

    def to_jsonl(self) -> str:
        lines = [
            json.dumps({"id": sid, "tokens": sorted(ts.tokens)}, sort_keys=True)
            for sid, ts in self.by_snippet.items()
        ]
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_jsonl(cls, text: str) -> "TokenIndex":
        by_snippet: dict[str, TokenSet] = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
                by_snippet[raw["id"]] = TokenSet(tokens=frozenset(raw["tokens"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise ValueError(f"tokens.jsonl line {lineno}: {exc}") from exc
        return cls(by_snippet)


def build_token_index(corpus: Corpus, config: Config) -> tuple[TokenIndex, list[str]]:
    """Token sets for every snippet; warnings name snippets lexed lossily."""
    warnings: list[str] = []
    by_snippet: dict[str, TokenSet] = {}
    for rec in corpus:
        tok_set = extract_tokens(rec.source, rec.language, config)
        if tok_set.lossy:
            warnings.append(f"{rec.id}: source did not lex cleanly; tokens are best-effort")
        by_snippet[rec.id] = tok_set
    return TokenIndex(by_snippet), warnings


# Sanity guard: the shipped Python keyword list must cover the live one, so
# pipeline output never depends on the interpreter version.
assert {k.lower() for k in _py_keyword.kwlist} <= _KEYWORDS[Language.PYTHON], (
    "python keyword data file is out of date"
)
