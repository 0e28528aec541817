"""Exact Kauffman bracket invariants of punctured ball tangles."""

from __future__ import annotations

__version__ = "0.1.0"
