"""Exact equisingularity invariants of plane curve singularities."""

__version__ = "0.1.0"
