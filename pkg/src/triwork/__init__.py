"""Trisection workbench: parameter calculus, homological diagrams,
bridge-surface bookkeeping, branched-cover pullbacks, and numerical
certification of the explicit Stein constructions in C^2."""

__version__ = "0.1.0"

SCHEMA_VERSION = "tw/1"
