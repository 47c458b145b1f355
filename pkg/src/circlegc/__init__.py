"""Symbolic graph complexes on an oriented circle.

Decorated graphs with signed canonical forms, exact rational coboundary
operators and cohomology, a framed (crossed) extension, chord-diagram
weight systems, codimension-one face audits, and JSON/DOT serialization.
"""

__version__ = "0.1.0"
