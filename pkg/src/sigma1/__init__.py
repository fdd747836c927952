"""Exact computation, bounds and empirical certification of the
Bieri-Neumann-Strebel connectivity invariant for finitely generated
groups given by presentations or defining graphs."""

__version__ = "0.1.0"
