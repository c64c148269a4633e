"""Everywhere-equivalence analysis of closed 3-braid diagrams."""

from __future__ import annotations

from .braidword import BraidWord, parse_bracket_notation, render

__all__ = ["BraidWord", "parse_bracket_notation", "render"]
__version__ = "0.1.0"
