"""Diagrams for the Heisenberg category, their evaluation and the relation harness."""
