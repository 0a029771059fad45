"""Exact perfect-matching machinery for cubic bridgeless multigraphs."""

__version__ = "0.1.0"
