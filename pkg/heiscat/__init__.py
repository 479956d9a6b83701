"""heiscat: exact evaluation and verification of the Heisenberg category of a
graded Frobenius superalgebra."""

__version__ = "0.3.0"
