"""Exact computer algebra for arc rings, their odd variants, centers, odd
Springer cohomology, and the associated sign/cocycle machinery."""

__version__ = "0.1.0"
