"""Exact rewriting checks for quantum-group differential algebras.

Thin wrapper over the C++ extension module. String-valued results use the
same canonical expression grammar as the qdc CLI; report helpers return the
parsed qdc-report/1 document as a dict.
"""
from __future__ import annotations

import json
from typing import Any

try:
    from qdc import _qdc as _ext  # packaged layout
except ImportError:  # in-tree layout: extension next to the build dir
    import _qdc as _ext

__version__ = _ext.__version__

check_ybe = _ext.check_ybe
check_hecke = _ext.check_hecke
constants = _ext.constants
reduce_expr = _ext.reduce_expr
normalize_expr = _ext.normalize_expr
defined_symbols = _ext.defined_symbols


def run_suite(suite: str, n: int, **kwargs: Any) -> dict:
    """Run a check suite and return the qdc-report/1 document as a dict."""
    return json.loads(_ext.run_suite_json(suite, n, **kwargs))


def run_check(name: str, n: int, **kwargs: Any) -> dict:
    """Run a single named check; returns the one-entry report dict."""
    return json.loads(_ext.run_check_json(name, n, **kwargs))


def rmatrix(n: int, convention: str = "standard") -> dict:
    return json.loads(_ext.dump_rmatrix(n, convention))


def rules(presentation: str, n: int, convention: str = "standard") -> list:
    return json.loads(_ext.dump_rules(presentation, n, convention))


def presentation(name: str, n: int, convention: str = "standard") -> dict:
    return json.loads(_ext.dump_presentation(name, n, convention))
