"""Constructive commutative and homological algebra on explicit finite data."""

__version__ = "0.1.0"
