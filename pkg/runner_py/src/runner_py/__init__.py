"""Python execution runner for the cross-language code search index.

The package is a thin wrapper around :mod:`runner_py.server`, which is a
self-contained script: it can also be launched directly by path without
installing anything.
"""

__version__ = "0.1.0"
