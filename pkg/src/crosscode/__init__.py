"""crosscode: cross-language code-to-code search.

Combines three views of a snippet — normalized identifier tokens, a
language-agnostic AST, and observed input/output behavior — and ranks
search candidates by non-dominated sorting over the three measures.
"""

__version__ = "0.1.0"

from .corpus import Config, Corpus, Language, SnippetRecord, load_corpus

__all__ = ["Config", "Corpus", "Language", "SnippetRecord", "load_corpus", "__version__"]
