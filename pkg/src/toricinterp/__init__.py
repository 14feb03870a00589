"""Exact toric interpolants of projective toric varieties and invariants of toric curve interpolants."""

__version__ = "0.1.0"
