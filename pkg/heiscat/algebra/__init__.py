"""Coefficient rings, Frobenius superalgebras and wreath product algebras."""
