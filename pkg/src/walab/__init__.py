"""Exact engine for W-algebra generators in affine vertex
superalgebras, with machine-checked verification suites."""

__version__ = "0.1.0"
